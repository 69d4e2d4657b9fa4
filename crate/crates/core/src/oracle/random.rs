//! Seeded generators for random operands.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automata::InterfaceAutomaton;
use crate::error::Result;
use crate::behavioral::{Component, ConicCompset, Universe};
use crate::lang::{Alphabet, IoSignature, RegularLanguage, SymbolSet};
use crate::receptive::{receptive_interior, ReceptiveLanguage};

/// Alphabet `{a, b}` or `{a, b, c}`.
pub fn alphabet<R: Rng>(rng: &mut R) -> Arc<Alphabet> {
    let n = rng.gen_range(2..=3);
    Alphabet::new(["a", "b", "c"].into_iter().take(n)).expect("valid alphabet")
}

pub fn symbol_set<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> SymbolSet {
    alphabet.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn subset_of<R: Rng>(rng: &mut R, set: SymbolSet) -> SymbolSet {
    set.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn signature<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> IoSignature {
    IoSignature::from_inputs(alphabet, symbol_set(rng, alphabet)).expect("subset of alphabet")
}

/// A complete DFA with `1..=max_states` states, uniform targets and each
/// state accepting with probability ½.
pub fn dfa<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, max_states: usize) -> RegularLanguage {
    let n = rng.gen_range(1..=max_states.max(1));
    let accepting = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let delta = (0..n * alphabet.len()).map(|_| rng.gen_range(0..n as u32)).collect();
    RegularLanguage::from_table(alphabet.clone(), 0, accepting, delta)
        .expect("well-formed table")
        .canonicalize()
}

/// A random I-receptive language: the largest valid sublanguage of a random
/// DFA, joined with `I*` so it is never empty.
pub fn receptive<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, io: IoSignature, max_states: usize) -> ReceptiveLanguage {
    let raw = dfa(rng, alphabet, max_states);
    let lang = receptive_interior(&raw, io.inputs())
        .and_then(|l| l.union(&RegularLanguage::star(alphabet.clone(), io.inputs())))
        .expect("same alphabet");
    ReceptiveLanguage::new(lang, io).expect("repaired language is receptive")
}

/// A random nonempty prefix-closed language.
pub fn prefix_closed<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, max_states: usize) -> RegularLanguage {
    let raw = dfa(rng, alphabet, max_states);
    receptive_interior(&raw, SymbolSet::EMPTY)
        .and_then(|l| l.union(&RegularLanguage::epsilon(alphabet.clone())))
        .expect("same alphabet")
}

/// A random deterministic interface automaton: each `(state, symbol)` is
/// enabled with probability `density`, with a uniform target.
pub fn interface_automaton<R: Rng>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    io: IoSignature,
    max_states: usize,
    density: f64,
) -> InterfaceAutomaton {
    let n = rng.gen_range(1..=max_states.max(1));
    let mut edges = Vec::new();
    for q in 0..n as u32 {
        for s in alphabet.iter() {
            if rng.gen_bool(density) {
                edges.push((q, s, rng.gen_range(0..n as u32)));
            }
        }
    }
    let names = (0..n).map(|i| format!("q{i}")).collect();
    InterfaceAutomaton::from_edges(alphabet.clone(), io, names, 0, &edges).expect("deterministic by construction")
}

/// A copy of `a` with each transition dropped with probability `drop` and
/// each missing transition added with probability `add`.
pub fn perturb<R: Rng>(rng: &mut R, a: &InterfaceAutomaton, drop: f64, add: f64) -> InterfaceAutomaton {
    let n = a.num_states() as u32;
    let mut edges = Vec::new();
    for q in 0..n {
        for s in a.alphabet().iter() {
            match a.next(q, s) {
                Some(t) if !rng.gen_bool(drop) => edges.push((q, s, t)),
                None if rng.gen_bool(add) => edges.push((q, s, rng.gen_range(0..n))),
                _ => {}
            }
        }
    }
    InterfaceAutomaton::from_edges(a.alphabet().clone(), a.io(), a.state_names().to_vec(), a.initial(), &edges)
        .expect("deterministic by construction")
}

pub fn component<R: Rng>(rng: &mut R, universe: &Universe) -> Component {
    Component::from_bits(rng.gen::<u64>() & universe.full().bits())
}

/// A conic compset with at most `max_k` maximals.
pub fn conic<R: Rng>(rng: &mut R, universe: &Arc<Universe>, max_k: usize) -> ConicCompset {
    let k = rng.gen_range(0..=max_k);
    let cs: Vec<Component> = (0..k).map(|_| component(rng, universe)).collect();
    ConicCompset::normalize(universe.clone(), cs).expect("within universe")
}

/// Splits the alphabet into two compatible signatures: outputs of each side
/// are disjoint.
pub fn compatible_signatures<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> (IoSignature, IoSignature) {
    let mut syms: Vec<_> = alphabet.iter().collect();
    syms.shuffle(rng);
    let mut o1 = SymbolSet::EMPTY;
    let mut o2 = SymbolSet::EMPTY;
    for s in syms {
        match rng.gen_range(0..3) {
            0 => o1.insert(s),
            1 => o2.insert(s),
            _ => {}
        }
    }
    let all = alphabet.all();
    (
        IoSignature::from_inputs(alphabet, all.difference(o1)).expect("subset"),
        IoSignature::from_inputs(alphabet, all.difference(o2)).expect("subset"),
    )
}

/// Quotient operands `(L@I, L'@I')` with `I ⊆ I'` and `L' ∩ I_r* ⊆ L`.
pub fn quotient_operands<R: Rng>(
    rng: &mut R,
    alphabet: &Arc<Alphabet>,
    max_states: usize,
) -> Result<(ReceptiveLanguage, ReceptiveLanguage)> {
    let inputs2 = symbol_set(rng, alphabet);
    let inputs = subset_of(rng, inputs2);
    let io = IoSignature::from_inputs(alphabet, inputs)?;
    let io2 = IoSignature::from_inputs(alphabet, inputs2)?;
    let l2 = receptive(rng, alphabet, io2, max_states);
    let ir = inputs.union(io2.outputs());
    let forced = l2.language().intersect(&RegularLanguage::star(alphabet.clone(), ir))?;
    let base = receptive(rng, alphabet, io, max_states);
    let l = ReceptiveLanguage::new(base.language().union(&forced)?, io)?;
    Ok((l, l2))
}
