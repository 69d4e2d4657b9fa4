use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use super::alphabet::{Alphabet, Symbol, SymbolSet, Word};
use super::nfa::Nfa;
use crate::error::{Error, Result};

/// Default cap on the number of states any single construction may create.
pub const DEFAULT_MAX_STATES: usize = 10_000;

/// Longest word length accepted by [`RegularLanguage::enumerate_words`].
pub const WORD_LIMIT: usize = 8;

static MAX_STATES: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_STATES);

/// Caps the size of product and subset constructions process-wide.
pub fn set_max_states(limit: usize) {
    MAX_STATES.store(limit.max(1), Ordering::Relaxed);
}

pub fn max_states() -> usize {
    MAX_STATES.load(Ordering::Relaxed)
}

pub(crate) fn check_state_count(n: usize) -> Result<()> {
    let limit = max_states();
    if n > limit {
        Err(Error::StateLimit(limit))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BooleanOp {
    Union,
    Intersect,
    Difference,
    Complement,
}

/// A regular language held as a complete deterministic automaton.
///
/// Every operation returning a language returns its canonical form: the
/// minimal complete DFA with states numbered in breadth-first order over the
/// alphabet order. Two canonical languages are equal iff they are
/// structurally identical, so `==` decides language equality once both
/// sides are canonical (see [`RegularLanguage::equivalent`] otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularLanguage {
    alphabet: Arc<Alphabet>,
    initial: u32,
    accepting: Vec<bool>,
    delta: Vec<u32>,
}

impl RegularLanguage {
    /// Builds a language from a total transition table
    /// (`delta[q * |Σ| + σ]`). The result is not canonicalized.
    pub fn from_table(
        alphabet: Arc<Alphabet>,
        initial: u32,
        accepting: Vec<bool>,
        delta: Vec<u32>,
    ) -> Result<Self> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("automaton has no states".into()));
        }
        if delta.len() != n * alphabet.len() {
            return Err(Error::InvalidAutomaton(
                "transition table size does not match states × alphabet".into(),
            ));
        }
        if initial as usize >= n || delta.iter().any(|&t| t as usize >= n) {
            return Err(Error::InvalidAutomaton("state index out of range".into()));
        }
        Ok(Self {
            alphabet,
            initial,
            accepting,
            delta,
        })
    }

    /// Builds a language from an explicit transition list over `states`
    /// states. Missing transitions go to a fresh rejecting sink when
    /// `complete_partial` is set and are an error otherwise.
    pub fn from_transitions(
        alphabet: Arc<Alphabet>,
        states: usize,
        initial: u32,
        accepting: &[u32],
        transitions: &[(u32, Symbol, u32)],
        complete_partial: bool,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidAutomaton("automaton has no states".into()));
        }
        let k = alphabet.len();
        let mut table: Vec<Option<u32>> = vec![None; states * k];
        for &(p, s, q) in transitions {
            if p as usize >= states || q as usize >= states || s as usize >= k {
                return Err(Error::InvalidAutomaton("transition out of range".into()));
            }
            let slot = &mut table[p as usize * k + s as usize];
            match slot {
                Some(existing) if *existing != q => {
                    return Err(Error::Nondeterministic {
                        state: format!("q{p}"),
                        symbol: alphabet.name(s).to_string(),
                    })
                }
                _ => *slot = Some(q),
            }
        }
        let mut acc = vec![false; states];
        for &a in accepting {
            if a as usize >= states {
                return Err(Error::InvalidAutomaton("accepting state out of range".into()));
            }
            acc[a as usize] = true;
        }
        let missing = table.iter().position(Option::is_none);
        let (n, sink) = match missing {
            None => (states, None),
            Some(pos) if !complete_partial => {
                return Err(Error::Incomplete {
                    state: format!("q{}", pos / k),
                    symbol: alphabet.name((pos % k) as Symbol).to_string(),
                })
            }
            Some(_) => (states + 1, Some(states as u32)),
        };
        let mut delta = Vec::with_capacity(n * k);
        for t in table {
            delta.push(t.or(sink).expect("sink exists when transitions are missing"));
        }
        if let Some(sink) = sink {
            delta.extend(std::iter::repeat(sink).take(k));
            acc.push(false);
        }
        Self::from_table(alphabet, initial, acc, delta)
    }

    /// ∅
    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        let k = alphabet.len();
        Self {
            alphabet,
            initial: 0,
            accepting: vec![false],
            delta: vec![0; k],
        }
    }

    /// Σ*
    pub fn universal(alphabet: Arc<Alphabet>) -> Self {
        let k = alphabet.len();
        Self {
            alphabet,
            initial: 0,
            accepting: vec![true],
            delta: vec![0; k],
        }
    }

    /// {ε}
    pub fn epsilon(alphabet: Arc<Alphabet>) -> Self {
        Self::star(alphabet, SymbolSet::EMPTY)
    }

    /// Γ* for a symbol class Γ.
    pub fn star(alphabet: Arc<Alphabet>, gamma: SymbolSet) -> Self {
        let k = alphabet.len();
        if gamma == alphabet.all() {
            return Self::universal(alphabet);
        }
        let delta = (0..2)
            .flat_map(|q| (0..k).map(move |s| if q == 0 && gamma.contains(s as Symbol) { 0 } else { 1 }))
            .collect();
        Self {
            alphabet,
            initial: 0,
            accepting: vec![true, false],
            delta,
        }
    }

    /// The finite language containing exactly `words`.
    pub fn finite<'a, I>(alphabet: Arc<Alphabet>, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let k = alphabet.len();
        // trie plus a dead state at index 0
        let mut delta: Vec<u32> = vec![0; 2 * k];
        let mut accepting = vec![false, false];
        for w in words {
            let mut q = 1u32;
            for &s in w.iter() {
                if s as usize >= k {
                    return Err(Error::InvalidAutomaton("symbol out of range".into()));
                }
                let idx = q as usize * k + s as usize;
                if delta[idx] == 0 {
                    let fresh = accepting.len() as u32;
                    accepting.push(false);
                    delta.extend(std::iter::repeat(0).take(k));
                    delta[idx] = fresh;
                }
                q = delta[idx];
            }
            accepting[q as usize] = true;
        }
        Self::from_table(alphabet, 1, accepting, delta).map(|l| l.canonicalize())
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    pub fn next(&self, q: u32, s: Symbol) -> u32 {
        self.delta[q as usize * self.alphabet.len() + s as usize]
    }

    /// State reached from the initial state after reading `w`.
    pub fn run(&self, w: &[Symbol]) -> u32 {
        w.iter().fold(self.initial, |q, &s| self.next(q, s))
    }

    pub fn accepts(&self, w: &[Symbol]) -> bool {
        self.is_accepting(self.run(w))
    }

    pub(crate) fn same_alphabet(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || *self.alphabet == *other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// States reachable from the initial state, in BFS order, paired with a
    /// shortest access word for each.
    pub(crate) fn access_words(&self) -> Vec<(u32, Word)> {
        let mut seen = vec![false; self.num_states()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen[self.initial as usize] = true;
        queue.push_back((self.initial, Word::empty()));
        while let Some((q, w)) = queue.pop_front() {
            for s in self.alphabet.iter() {
                let t = self.next(q, s);
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    queue.push_back((t, w.extended(s)));
                }
            }
            out.push((q, w));
        }
        out
    }

    /// Minimal complete DFA with BFS numbering; two languages are equal iff
    /// their canonical forms are structurally identical.
    pub fn canonicalize(&self) -> Self {
        let k = self.alphabet.len();
        let reach: Vec<u32> = self.access_words().into_iter().map(|(q, _)| q).collect();
        let mut local = vec![u32::MAX; self.num_states()];
        for (i, &q) in reach.iter().enumerate() {
            local[q as usize] = i as u32;
        }
        let n = reach.len();
        let succ = |i: usize, s: usize| local[self.delta[reach[i] as usize * k + s] as usize] as usize;

        // Moore partition refinement.
        let mut class: Vec<u32> = reach.iter().map(|&q| self.accepting[q as usize] as u32).collect();
        let mut count = {
            let a = class.iter().any(|&c| c == 1) as usize;
            let r = class.iter().any(|&c| c == 0) as usize;
            a + r
        };
        loop {
            let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next = Vec::with_capacity(n);
            for i in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[i]);
                sig.extend((0..k).map(|s| class[succ(i, s)]));
                let fresh = ids.len() as u32;
                next.push(*ids.entry(sig).or_insert(fresh));
            }
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }

        // BFS renumbering of the quotient automaton.
        let mut order = vec![u32::MAX; count];
        let mut rep = vec![usize::MAX; count];
        for i in 0..n {
            if rep[class[i] as usize] == usize::MAX {
                rep[class[i] as usize] = i;
            }
        }
        let mut queue = VecDeque::new();
        let start = class[0];
        order[start as usize] = 0;
        queue.push_back(start);
        let mut seq = vec![start];
        while let Some(c) = queue.pop_front() {
            let i = rep[c as usize];
            for s in 0..k {
                let t = class[succ(i, s)];
                if order[t as usize] == u32::MAX {
                    order[t as usize] = seq.len() as u32;
                    seq.push(t);
                    queue.push_back(t);
                }
            }
        }
        let mut accepting = Vec::with_capacity(count);
        let mut delta = Vec::with_capacity(count * k);
        for &c in &seq {
            let i = rep[c as usize];
            accepting.push(self.accepting[reach[i] as usize]);
            for s in 0..k {
                delta.push(order[class[succ(i, s)] as usize]);
            }
        }
        Self {
            alphabet: self.alphabet.clone(),
            initial: 0,
            accepting,
            delta,
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// Language equality regardless of representation.
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        self.same_alphabet(other)?;
        Ok(self.canonicalize() == other.canonicalize())
    }

    pub fn boolean_op(&self, kind: BooleanOp, other: Option<&Self>) -> Result<Self> {
        match (kind, other) {
            (BooleanOp::Complement, _) => Ok(self.complement()),
            (BooleanOp::Union, Some(o)) => self.union(o),
            (BooleanOp::Intersect, Some(o)) => self.intersect(o),
            (BooleanOp::Difference, Some(o)) => self.difference(o),
            (_, None) => Err(Error::InvalidDocument("binary operation needs two operands".into())),
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Self {
        Self {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            accepting: self.accepting.iter().map(|a| !a).collect(),
            delta: self.delta.clone(),
        }
        .canonicalize()
    }

    fn combine(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Result<Self> {
        let p = Product::build(self, other)?;
        let accepting = p
            .pairs
            .iter()
            .map(|&(a, b)| f(self.is_accepting(a), other.is_accepting(b)))
            .collect();
        Ok(p.into_language(self.alphabet.clone(), accepting)?.canonicalize())
    }

    /// `{ w∘σ | w ∈ L, σ ∈ Γ }`
    pub fn concat_symbol_class(&self, gamma: SymbolSet) -> Result<Self> {
        self.alphabet.check_set(gamma)?;
        let n = self.num_states() as u32;
        let fin = n;
        let mut nfa = Nfa::new(self.alphabet.len(), n as usize + 1);
        nfa.add_initial(self.initial);
        nfa.set_accepting(fin);
        for q in 0..n {
            for s in self.alphabet.iter() {
                nfa.add_edge(q, s, self.next(q, s));
                if self.is_accepting(q) && gamma.contains(s) {
                    nfa.add_edge(q, s, fin);
                }
            }
        }
        Ok(nfa.determinize(self.alphabet.clone())?.canonicalize())
    }

    /// `{ w∘w' | w ∈ L, w' ∈ Σ* }`
    pub fn concat_sigma_star(&self) -> Result<Self> {
        let n = self.num_states() as u32;
        let mut nfa = Nfa::new(self.alphabet.len(), n as usize);
        nfa.add_initial(self.initial);
        for q in 0..n {
            if self.is_accepting(q) {
                nfa.set_accepting(q);
            }
            for s in self.alphabet.iter() {
                nfa.add_edge(q, s, self.next(q, s));
                if self.is_accepting(q) {
                    nfa.add_edge(q, s, q);
                }
            }
        }
        Ok(nfa.determinize(self.alphabet.clone())?.canonicalize())
    }

    /// `Pre(L)`: all prefixes of words of L.
    pub fn prefix_closure(&self) -> Self {
        let coreach = self.coreachable();
        Self {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            accepting: coreach,
            delta: self.delta.clone(),
        }
        .canonicalize()
    }

    /// States from which some accepting state is reachable.
    fn coreachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n as u32 {
            for s in self.alphabet.iter() {
                preds[self.next(q, s) as usize].push(q);
            }
        }
        let mut mark = self.accepting.clone();
        let mut stack: Vec<u32> = (0..n as u32).filter(|&q| mark[q as usize]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q as usize] {
                if !mark[p as usize] {
                    mark[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        mark
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_word().is_none()
    }

    /// A shortest member in shortlex order, if any.
    pub fn shortest_word(&self) -> Option<Word> {
        self.access_words()
            .into_iter()
            .find(|(q, _)| self.is_accepting(*q))
            .map(|(_, w)| w)
    }

    /// Decides `L ⊆ L2` exactly.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(self.subset_counterexample(other)?.is_none())
    }

    /// A shortest word of `L \ L2`, if the inclusion fails.
    pub fn subset_counterexample(&self, other: &Self) -> Result<Option<Word>> {
        Ok(self.difference(other)?.shortest_word())
    }

    /// All members of length at most `max_len` in length-then-lexicographic
    /// order.
    pub fn enumerate_words(&self, max_len: usize) -> Result<Vec<Word>> {
        if max_len > WORD_LIMIT {
            return Err(Error::WordLimit {
                requested: max_len,
                limit: WORD_LIMIT,
            });
        }
        let mut out = Vec::new();
        let mut level = vec![(Word::empty(), self.initial)];
        for len in 0..=max_len {
            out.extend(
                level
                    .iter()
                    .filter(|(_, q)| self.is_accepting(*q))
                    .map(|(w, _)| w.clone()),
            );
            if len == max_len {
                break;
            }
            level = level
                .iter()
                .flat_map(|(w, q)| self.alphabet.iter().map(move |s| (w.extended(s), self.next(*q, s))))
                .collect();
        }
        Ok(out)
    }

    pub fn is_prefix_closed(&self) -> bool {
        self.prefix_closure_witness().is_none()
    }

    /// A shortest member of L having a prefix outside L.
    pub fn prefix_closure_witness(&self) -> Option<Word> {
        // BFS over (state, left-L-already) pairs.
        let n = self.num_states();
        let mut seen = vec![[false; 2]; n];
        let mut queue = VecDeque::new();
        let start_flag = !self.is_accepting(self.initial) as usize;
        seen[self.initial as usize][start_flag] = true;
        queue.push_back((self.initial, start_flag, Word::empty()));
        while let Some((q, flag, w)) = queue.pop_front() {
            if flag == 1 && self.is_accepting(q) {
                return Some(w);
            }
            for s in self.alphabet.iter() {
                let t = self.next(q, s);
                let f = flag.max(!self.is_accepting(t) as usize);
                if !seen[t as usize][f] {
                    seen[t as usize][f] = true;
                    queue.push_back((t, f, w.extended(s)));
                }
            }
        }
        None
    }

    /// Whether `L∘I ⊆ L`. Prefix-closure is checked separately.
    pub fn is_receptive(&self, inputs: SymbolSet) -> Result<bool> {
        Ok(self.receptivity_witness(inputs)?.is_none())
    }

    /// A shortest `w∘σ` with `w ∈ L`, `σ ∈ I` and `w∘σ ∉ L`.
    pub fn receptivity_witness(&self, inputs: SymbolSet) -> Result<Option<Word>> {
        self.alphabet.check_set(inputs)?;
        let mut best: Option<Word> = None;
        for (q, w) in self.access_words() {
            if !self.is_accepting(q) {
                continue;
            }
            for s in inputs.iter() {
                if !self.is_accepting(self.next(q, s)) {
                    let cand = w.extended(s);
                    if best.as_ref().is_none_or(|b| cand.shortlex_cmp(b).is_lt()) {
                        best = Some(cand);
                    }
                }
            }
        }
        Ok(best)
    }
}

/// Reachable part of the synchronous product of two complete automata.
pub(crate) struct Product {
    pub pairs: Vec<(u32, u32)>,
    pub delta: Vec<u32>,
    pub k: usize,
}

impl Product {
    pub fn build(a: &RegularLanguage, b: &RegularLanguage) -> Result<Self> {
        a.same_alphabet(b)?;
        let k = a.alphabet.len();
        let mut index: HashMap<(u32, u32), u32> = HashMap::new();
        let mut pairs = vec![(a.initial, b.initial)];
        index.insert(pairs[0], 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for s in a.alphabet.iter() {
                let t = (a.next(p, s), b.next(q, s));
                let id = match index.get(&t) {
                    Some(&id) => id,
                    None => {
                        let id = pairs.len() as u32;
                        check_state_count(pairs.len() + 1)?;
                        index.insert(t, id);
                        pairs.push(t);
                        id
                    }
                };
                delta.push(id);
            }
            i += 1;
        }
        Ok(Self { pairs, delta, k })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn next(&self, i: u32, s: Symbol) -> u32 {
        self.delta[i as usize * self.k + s as usize]
    }

    pub fn into_language(self, alphabet: Arc<Alphabet>, accepting: Vec<bool>) -> Result<RegularLanguage> {
        RegularLanguage::from_table(alphabet, 0, accepting, self.delta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn io() -> Arc<Alphabet> {
        Alphabet::new(["i", "o"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.word(s.split("").filter(|c| !c.is_empty())).unwrap()
    }

    fn words(a: &Alphabet, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|s| w(a, s)).collect()
    }

    fn i_star(a: &Arc<Alphabet>) -> RegularLanguage {
        RegularLanguage::star(a.clone(), a.set(["i"]).unwrap())
    }

    #[test]
    fn intersect_with_top_is_identity() {
        let a = io();
        let l = i_star(&a);
        let top = RegularLanguage::universal(a.clone());
        assert_eq!(l.intersect(&top).unwrap(), l.canonicalize());
    }

    #[test]
    fn excluded_middle() {
        let a = io();
        let l = i_star(&a);
        assert_eq!(
            l.union(&l.complement()).unwrap(),
            RegularLanguage::universal(a)
        );
    }

    #[test]
    fn difference_top_minus_i_star() {
        let a = io();
        let d = RegularLanguage::universal(a.clone()).difference(&i_star(&a)).unwrap();
        let got = d.enumerate_words(3).unwrap();
        let expected = words(&a, &["o", "io", "oi", "oo", "iio", "ioi", "ioo", "oii", "oio", "ooi", "ooo"]);
        assert_eq!(got, expected);
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = io();
        let b = Alphabet::new(["o", "i"]).unwrap();
        let e = RegularLanguage::universal(a).union(&RegularLanguage::universal(b));
        assert_eq!(e, Err(Error::AlphabetMismatch));
    }

    #[test]
    fn concat_symbol_class_examples() {
        let a = Alphabet::new(["a"]).unwrap();
        let eps = RegularLanguage::epsilon(a.clone());
        let got = eps.concat_symbol_class(a.set(["a"]).unwrap()).unwrap();
        assert_eq!(got, RegularLanguage::finite(a.clone(), &[w(&a, "a")]).unwrap());
        assert!(eps.concat_symbol_class(SymbolSet::EMPTY).unwrap().is_empty());

        let b = io();
        let got = i_star(&b).concat_symbol_class(b.set(["o"]).unwrap()).unwrap();
        assert_eq!(got.enumerate_words(4).unwrap(), words(&b, &["o", "io", "iio", "iiio"]));
        assert!(matches!(
            eps.concat_symbol_class(SymbolSet::from_bits(0b10)),
            Err(Error::SymbolSetOutsideAlphabet)
        ));
    }

    #[test]
    fn concat_sigma_star_examples() {
        let a = io();
        assert!(RegularLanguage::empty(a.clone()).concat_sigma_star().unwrap().is_empty());
        assert_eq!(
            RegularLanguage::epsilon(a.clone()).concat_sigma_star().unwrap(),
            RegularLanguage::universal(a.clone())
        );
        let iko = i_star(&a).concat_symbol_class(a.set(["o"]).unwrap()).unwrap();
        let got = iko.concat_sigma_star().unwrap();
        let has_o = RegularLanguage::universal(a.clone()).difference(&i_star(&a)).unwrap();
        assert_eq!(got, has_o);
    }

    #[test]
    fn prefix_closure_examples() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let ab = RegularLanguage::finite(a.clone(), &[w(&a, "ab")]).unwrap();
        assert_eq!(ab.prefix_closure().enumerate_words(3).unwrap(), words(&a, &["", "a", "ab"]));

        let b = io();
        assert_eq!(i_star(&b).prefix_closure(), i_star(&b).canonicalize());
        let has_o = RegularLanguage::universal(b.clone()).difference(&i_star(&b)).unwrap();
        assert_eq!(has_o.prefix_closure(), RegularLanguage::universal(b));
    }

    #[test]
    fn subset_examples() {
        let a = io();
        let top = RegularLanguage::universal(a.clone());
        assert!(i_star(&a).is_subset(&top).unwrap());
        assert!(!top.is_subset(&i_star(&a)).unwrap());
        let eps_o = RegularLanguage::finite(a.clone(), &words(&a, &["", "o"])).unwrap();
        let istar_o = i_star(&a)
            .union(&RegularLanguage::finite(a.clone(), &[w(&a, "o")]).unwrap())
            .unwrap();
        assert!(eps_o.is_subset(&istar_o).unwrap());
        assert_eq!(top.subset_counterexample(&i_star(&a)).unwrap(), Some(w(&a, "o")));
    }

    #[test]
    fn canonicalize_examples() {
        let a = io();
        // i* with a redundant copy of the accepting loop and an unreachable state
        let two = RegularLanguage::from_transitions(
            a.clone(),
            4,
            0,
            &[0, 1],
            &[(0, 0, 1), (1, 0, 0), (0, 1, 2), (1, 1, 2), (2, 0, 2), (2, 1, 2), (3, 0, 3), (3, 1, 0)],
            false,
        )
        .unwrap();
        let c = two.canonicalize();
        assert_eq!(c, i_star(&a).canonicalize());
        assert_eq!(c.num_states(), 2);

        let top = RegularLanguage::universal(a.clone());
        let p = top.intersect(&top).unwrap();
        assert_eq!(p.num_states(), 1);
        assert!(p.is_accepting(0));
    }

    #[test]
    fn enumerate_examples() {
        let a = io();
        assert_eq!(i_star(&a).enumerate_words(2).unwrap(), words(&a, &["", "i", "ii"]));
        assert!(RegularLanguage::empty(a.clone()).enumerate_words(3).unwrap().is_empty());
        let has_o = RegularLanguage::universal(a.clone()).difference(&i_star(&a)).unwrap();
        assert_eq!(has_o.enumerate_words(2).unwrap(), words(&a, &["o", "io", "oi", "oo"]));
        assert!(matches!(
            has_o.enumerate_words(WORD_LIMIT + 1),
            Err(Error::WordLimit { .. })
        ));
    }

    #[test]
    fn prefix_closed_examples() {
        let a = io();
        assert!(i_star(&a).is_prefix_closed());
        let b = Alphabet::new(["a", "b"]).unwrap();
        let ab = RegularLanguage::finite(b.clone(), &[w(&b, "ab")]).unwrap();
        assert!(!ab.is_prefix_closed());
        assert_eq!(ab.prefix_closure_witness(), Some(w(&b, "ab")));
        let istar_o = i_star(&a)
            .union(&RegularLanguage::finite(a.clone(), &[w(&a, "o")]).unwrap())
            .unwrap();
        assert!(istar_o.is_prefix_closed());
    }

    #[test]
    fn receptive_examples() {
        let a = io();
        let i = a.set(["i"]).unwrap();
        assert!(i_star(&a).is_receptive(i).unwrap());
        let eps_o = RegularLanguage::finite(a.clone(), &words(&a, &["", "o"])).unwrap();
        assert!(!eps_o.is_receptive(i).unwrap());
        assert_eq!(eps_o.receptivity_witness(i).unwrap(), Some(w(&a, "i")));
        assert!(RegularLanguage::universal(a.clone()).is_receptive(a.all()).unwrap());
    }

    #[test]
    fn partial_transitions_need_completion() {
        let a = io();
        let err = RegularLanguage::from_transitions(a.clone(), 1, 0, &[0], &[(0, 0, 0)], false);
        assert!(matches!(err, Err(Error::Incomplete { .. })));
        let l = RegularLanguage::from_transitions(a.clone(), 1, 0, &[0], &[(0, 0, 0)], true).unwrap();
        assert_eq!(l.canonicalize(), i_star(&a));
        let nd = RegularLanguage::from_transitions(a, 2, 0, &[0], &[(0, 0, 0), (0, 0, 1)], true);
        assert!(matches!(nd, Err(Error::Nondeterministic { .. })));
    }
}
