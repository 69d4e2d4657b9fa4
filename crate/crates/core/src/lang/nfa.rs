use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::alphabet::{Alphabet, Symbol};
use super::language::{check_state_count, RegularLanguage};
use crate::error::Result;

/// Nondeterministic automaton without ε-moves, used only as an intermediate
/// for the concatenation constructions.
pub(crate) struct Nfa {
    k: usize,
    edges: Vec<Vec<BTreeSet<u32>>>,
    initial: BTreeSet<u32>,
    accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(k: usize, states: usize) -> Self {
        Self {
            k,
            edges: vec![vec![BTreeSet::new(); k]; states],
            initial: BTreeSet::new(),
            accepting: vec![false; states],
        }
    }

    pub fn add_initial(&mut self, q: u32) {
        self.initial.insert(q);
    }

    pub fn set_accepting(&mut self, q: u32) {
        self.accepting[q as usize] = true;
    }

    pub fn add_edge(&mut self, from: u32, s: Symbol, to: u32) {
        self.edges[from as usize][s as usize].insert(to);
    }

    /// Subset construction. The empty subset becomes the rejecting sink.
    pub fn determinize(&self, alphabet: Arc<Alphabet>) -> Result<RegularLanguage> {
        let start: Vec<u32> = self.initial.iter().copied().collect();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            for s in 0..self.k {
                let mut target = BTreeSet::new();
                for &q in &subsets[i] {
                    target.extend(self.edges[q as usize][s].iter().copied());
                }
                let target: Vec<u32> = target.into_iter().collect();
                let id = match index.get(&target) {
                    Some(&id) => id,
                    None => {
                        check_state_count(subsets.len() + 1)?;
                        let id = subsets.len() as u32;
                        index.insert(target.clone(), id);
                        subsets.push(target);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        let accepting = subsets
            .iter()
            .map(|set| set.iter().any(|&q| self.accepting[q as usize]))
            .collect();
        RegularLanguage::from_table(alphabet, 0, accepting, delta)
    }
}
