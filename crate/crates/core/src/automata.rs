//! Deterministic interface automata with partial transitions.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::iface::InterfaceHypercontract;
use crate::lang::{check_state_count, Alphabet, IoSignature, RegularLanguage, Symbol};
use crate::Outcome;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterfaceAutomaton {
    alphabet: Arc<Alphabet>,
    io: IoSignature,
    names: Vec<String>,
    initial: u32,
    /// `trans[q * |Σ| + σ]`, `NONE` when disabled.
    trans: Vec<u32>,
}

/// Result of composing two automata: the composite (or incompatibility)
/// and the reachable product states removed as invalid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IaComposition {
    pub result: Outcome<InterfaceAutomaton>,
    pub pruned_states: Vec<String>,
}

impl InterfaceAutomaton {
    /// Builds an automaton from named states and transitions. Unreachable
    /// states are dropped; two transitions from the same state on the same
    /// symbol are rejected.
    pub fn new<S: AsRef<str>>(
        alphabet: Arc<Alphabet>,
        io: IoSignature,
        states: &[S],
        initial: &str,
        transitions: &[(S, S, S)],
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, s) in states.iter().enumerate() {
            if index.insert(s.as_ref().to_string(), i as u32).is_some() {
                return Err(Error::InvalidAutomaton(format!("duplicate state `{}`", s.as_ref())));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::InvalidAutomaton(format!("unknown state `{name}`")))
        };
        let init = lookup(initial)?;
        let mut edges = Vec::with_capacity(transitions.len());
        for (from, sym, to) in transitions {
            edges.push((lookup(from.as_ref())?, alphabet.symbol(sym.as_ref())?, lookup(to.as_ref())?));
        }
        let names = states.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_edges(alphabet, io, names, init, &edges)
    }

    /// Builds an automaton over state indices `0..names.len()`.
    pub fn from_edges(
        alphabet: Arc<Alphabet>,
        io: IoSignature,
        names: Vec<String>,
        initial: u32,
        edges: &[(u32, Symbol, u32)],
    ) -> Result<Self> {
        IoSignature::new(&alphabet, io.inputs(), io.outputs())?;
        let n = names.len();
        if initial as usize >= n {
            return Err(Error::InvalidAutomaton("initial state out of range".into()));
        }
        let k = alphabet.len();
        let mut trans = vec![NONE; n * k];
        for &(p, s, q) in edges {
            if p as usize >= n || q as usize >= n || s as usize >= k {
                return Err(Error::InvalidAutomaton("transition out of range".into()));
            }
            let slot = &mut trans[p as usize * k + s as usize];
            if *slot != NONE && *slot != q {
                return Err(Error::Nondeterministic {
                    state: names[p as usize].clone(),
                    symbol: alphabet.name(s).to_string(),
                });
            }
            *slot = q;
        }
        Ok(Self {
            alphabet,
            io,
            names,
            initial,
            trans,
        }
        .trimmed())
    }

    fn trimmed(self) -> Self {
        let k = self.alphabet.len();
        let n = self.names.len();
        let mut seen = vec![false; n];
        seen[self.initial as usize] = true;
        let mut stack = vec![self.initial];
        while let Some(p) = stack.pop() {
            for s in 0..k {
                let q = self.trans[p as usize * k + s];
                if q != NONE && !seen[q as usize] {
                    seen[q as usize] = true;
                    stack.push(q);
                }
            }
        }
        if seen.iter().all(|&b| b) {
            return self;
        }
        let mut remap = vec![NONE; n];
        let mut names = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            if seen[i] {
                remap[i] = names.len() as u32;
                names.push(name.clone());
            }
        }
        let mut trans = Vec::with_capacity(names.len() * k);
        for i in (0..n).filter(|&i| seen[i]) {
            for s in 0..k {
                let q = self.trans[i * k + s];
                trans.push(if q == NONE { NONE } else { remap[q as usize] });
            }
        }
        Self {
            initial: remap[self.initial as usize],
            names,
            trans,
            ..self
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn io(&self) -> IoSignature {
        self.io
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.names
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn next(&self, q: u32, s: Symbol) -> Option<u32> {
        let t = self.trans[q as usize * self.alphabet.len() + s as usize];
        (t != NONE).then_some(t)
    }

    /// All transitions in state-then-symbol order.
    pub fn transitions(&self) -> Vec<(u32, Symbol, u32)> {
        let mut out = Vec::new();
        for q in 0..self.num_states() as u32 {
            for s in self.alphabet.iter() {
                if let Some(t) = self.next(q, s) {
                    out.push((q, s, t));
                }
            }
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    /// Alternating refinement `self ≤ other`: `other`'s inputs must be
    /// accepted by `self`, and `self`'s outputs must be allowed by `other`,
    /// recursively. Computed as the greatest alternating simulation.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        if self.io != other.io {
            return Err(Error::SignatureMismatch);
        }
        let (n1, n2) = (self.num_states(), other.num_states());
        let mut rel = vec![true; n1 * n2];
        let at = |p: u32, q: u32| p as usize * n2 + q as usize;
        loop {
            let mut changed = false;
            for p in 0..n1 as u32 {
                for q in 0..n2 as u32 {
                    if !rel[at(p, q)] {
                        continue;
                    }
                    let ok = self.alphabet.iter().all(|s| {
                        let (a, b) = (self.next(p, s), other.next(q, s));
                        if self.io.inputs().contains(s) {
                            match (a, b) {
                                (_, None) => true,
                                (Some(a), Some(b)) => rel[at(a, b)],
                                (None, Some(_)) => false,
                            }
                        } else {
                            match (a, b) {
                                (None, _) => true,
                                (Some(a), Some(b)) => rel[at(a, b)],
                                (Some(_), None) => false,
                            }
                        }
                    });
                    if !ok {
                        rel[at(p, q)] = false;
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(rel[at(self.initial, other.initial)]);
            }
        }
    }

    /// Composition over `(I1 ∩ I2, O1 ∪ O2)`. Product states where one side
    /// emits an output the other does not accept are invalid, as is every
    /// state that reaches an invalid state by outputs alone; invalid states
    /// are removed.
    pub fn compose(&self, other: &Self) -> Result<IaComposition> {
        self.check_same(other)?;
        if !self.io.compatible_with(&other.io) {
            let shared = self.io.outputs().intersection(other.io.outputs());
            return Err(Error::SharedOutputs(self.alphabet.format_set(shared)));
        }
        let k = self.alphabet.len();
        let outputs = self.io.outputs().union(other.io.outputs());

        let mut index: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pairs = vec![(self.initial, other.initial)];
        index.insert(pairs[0], 0);
        let mut trans: Vec<u32> = Vec::new();
        let mut queue = VecDeque::from([0u32]);
        while let Some(i) = queue.pop_front() {
            let (p, q) = pairs[i as usize];
            for s in self.alphabet.iter() {
                let t = match (self.next(p, s), other.next(q, s)) {
                    (Some(a), Some(b)) => match index.get(&(a, b)) {
                        Some(&j) => j,
                        None => {
                            check_state_count(pairs.len() + 1)?;
                            let j = pairs.len() as u32;
                            index.insert((a, b), j);
                            pairs.push((a, b));
                            queue.push_back(j);
                            j
                        }
                    },
                    _ => NONE,
                };
                trans.push(t);
            }
        }
        let n = pairs.len();

        let mut invalid: Vec<bool> = pairs
            .iter()
            .map(|&(p, q)| {
                self.alphabet.iter().any(|s| {
                    let (a, b) = (self.next(p, s), other.next(q, s));
                    (self.io.outputs().contains(s) && a.is_some() && b.is_none())
                        || (other.io.outputs().contains(s) && b.is_some() && a.is_none())
                })
            })
            .collect();
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
        for i in 0..n {
            for s in outputs.iter() {
                let t = trans[i * k + s as usize];
                if t != NONE {
                    preds[t as usize].push(i as u32);
                }
            }
        }
        let mut stack: Vec<u32> = (0..n as u32).filter(|&i| invalid[i as usize]).collect();
        while let Some(j) = stack.pop() {
            for &i in &preds[j as usize] {
                if !invalid[i as usize] {
                    invalid[i as usize] = true;
                    stack.push(i);
                }
            }
        }

        let name = |(p, q): (u32, u32)| format!("({},{})", self.names[p as usize], other.names[q as usize]);
        let pruned_states = (0..n).filter(|&i| invalid[i]).map(|i| name(pairs[i])).collect();
        if invalid[0] {
            return Ok(IaComposition {
                result: Outcome::Incompatible,
                pruned_states,
            });
        }
        let names: Vec<String> = pairs.iter().map(|&pq| name(pq)).collect();
        let mut edges = Vec::new();
        for i in (0..n).filter(|&i| !invalid[i]) {
            for s in self.alphabet.iter() {
                let t = trans[i * k + s as usize];
                if t != NONE && !invalid[t as usize] {
                    edges.push((i as u32, s, t));
                }
            }
        }
        let automaton = Self::from_edges(self.alphabet.clone(), self.io.composite(&other.io), names, 0, &edges)?;
        Ok(IaComposition {
            result: Outcome::Compatible(automaton),
            pruned_states,
        })
    }

    /// The prefix-closed language of all playable words.
    pub fn language(&self) -> RegularLanguage {
        let n = self.num_states();
        let k = self.alphabet.len();
        let sink = n as u32;
        let mut delta: Vec<u32> = self.trans.iter().map(|&t| if t == NONE { sink } else { t }).collect();
        delta.extend(std::iter::repeat(sink).take(k));
        let mut accepting = vec![true; n];
        accepting.push(false);
        RegularLanguage::from_table(self.alphabet.clone(), self.initial, accepting, delta)
            .expect("well-formed table")
            .canonicalize()
    }

    /// The interface hypercontract determined by the language and signature.
    pub fn to_contract(&self) -> Result<InterfaceHypercontract> {
        InterfaceHypercontract::from_s(self.language(), self.io)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn io_alpha() -> Arc<Alphabet> {
        Alphabet::new(["i", "o"]).unwrap()
    }

    fn sig(a: &Arc<Alphabet>, inputs: &[&str]) -> IoSignature {
        IoSignature::from_inputs(a, a.set(inputs.iter().copied()).unwrap()).unwrap()
    }

    fn ia(a: &Arc<Alphabet>, inputs: &[&str], states: &[&str], edges: &[(&str, &str, &str)]) -> InterfaceAutomaton {
        InterfaceAutomaton::new(a.clone(), sig(a, inputs), states, states[0], edges).unwrap()
    }

    #[test]
    fn refinement_examples() {
        let a = io_alpha();
        let a1 = ia(&a, &["i"], &["p"], &[("p", "i", "p")]);
        let top = ia(&a, &["i"], &["q"], &[("q", "i", "q"), ("q", "o", "q")]);
        assert!(a1.refines(&a1).unwrap());
        assert!(a1.refines(&top).unwrap());
        assert!(!top.refines(&a1).unwrap());
    }

    #[test]
    fn composition_examples() {
        let b = Alphabet::new(["a"]).unwrap();
        let sender = ia(&b, &[], &["p0", "p1"], &[("p0", "a", "p1")]);
        let receiver = ia(&b, &["a"], &["q0"], &[("q0", "a", "q0")]);
        let c = sender.compose(&receiver).unwrap();
        let comp = c.result.compatible().unwrap();
        assert!(c.pruned_states.is_empty());
        assert_eq!(comp.state_names(), &["(p0,q0)".to_string(), "(p1,q0)".to_string()]);
        let eps_a = RegularLanguage::finite(b.clone(), &[b.word([]).unwrap(), b.word(["a"]).unwrap()]).unwrap();
        assert_eq!(comp.language(), eps_a);
        assert_eq!(comp.to_contract().unwrap(), InterfaceHypercontract::from_s(eps_a, sig(&b, &[])).unwrap());

        let deaf = ia(&b, &["a"], &["q0"], &[]);
        let c = sender.compose(&deaf).unwrap();
        assert_eq!(c.result, Outcome::Incompatible);
        assert_eq!(c.pruned_states, vec!["(p0,q0)".to_string()]);
    }

    #[test]
    fn language_examples() {
        let a = io_alpha();
        let idle = ia(&a, &["i"], &["p"], &[]);
        assert_eq!(idle.language(), RegularLanguage::epsilon(a.clone()));
        let loop_i = ia(&a, &["i"], &["p"], &[("p", "i", "p")]);
        let istar = RegularLanguage::star(a.clone(), a.set(["i"]).unwrap());
        assert_eq!(loop_i.language(), istar);
        assert_eq!(loop_i.to_contract().unwrap(), InterfaceHypercontract::from_s(istar, sig(&a, &["i"])).unwrap());
    }

    #[test]
    fn rejects_nondeterminism_and_trims() {
        let a = io_alpha();
        let err = InterfaceAutomaton::new(a.clone(), sig(&a, &["i"]), &["p", "q"], "p", &[("p", "i", "p"), ("p", "i", "q")]);
        assert!(matches!(err, Err(Error::Nondeterministic { .. })));
        let t = ia(&a, &["i"], &["p", "dead"], &[("dead", "o", "p")]);
        assert_eq!(t.num_states(), 1);
    }
}
