//! Seeded operands for the benchmarks.

use std::sync::Arc;

use hypercontracts::behavioral::{ConicCompset, Universe};
use hypercontracts::oracle::random;
use hypercontracts::{Alphabet, InterfaceAutomaton, InterfaceHypercontract, ReceptiveLanguage};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alphabet() -> Arc<Alphabet> {
    Alphabet::new(["a", "b", "c"]).expect("valid alphabet")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Same-signature receptive languages over a three-letter alphabet.
pub fn receptive_pairs(count: usize, max_states: usize) -> Vec<(ReceptiveLanguage, ReceptiveLanguage)> {
    let mut r = rng(1);
    let a = alphabet();
    (0..count)
        .map(|_| {
            let io = random::signature(&mut r, &a);
            (
                random::receptive(&mut r, &a, io, max_states),
                random::receptive(&mut r, &a, io, max_states),
            )
        })
        .collect()
}

/// Quotient operands with `I ⊆ I'` and the definedness condition forced.
pub fn quotient_pairs(count: usize, max_states: usize) -> Vec<(ReceptiveLanguage, ReceptiveLanguage)> {
    let mut r = rng(2);
    let a = alphabet();
    (0..count)
        .map(|_| random::quotient_operands(&mut r, &a, max_states).expect("well-formed operands"))
        .collect()
}

/// Compatible interface contracts.
pub fn contract_pairs(count: usize, max_states: usize) -> Vec<(InterfaceHypercontract, InterfaceHypercontract)> {
    let mut r = rng(3);
    let a = alphabet();
    (0..count)
        .map(|_| {
            let (io1, io2) = random::compatible_signatures(&mut r, &a);
            let c = |r: &mut ChaCha8Rng, io| {
                InterfaceHypercontract::from_s(random::prefix_closed(r, &a, max_states), io).unwrap()
            };
            (c(&mut r, io1), c(&mut r, io2))
        })
        .collect()
}

/// Interface automata pairs with compatible signatures.
pub fn automaton_pairs(count: usize, max_states: usize) -> Vec<(InterfaceAutomaton, InterfaceAutomaton)> {
    let mut r = rng(4);
    let a = alphabet();
    (0..count)
        .map(|_| {
            let (io1, io2) = random::compatible_signatures(&mut r, &a);
            (
                random::interface_automaton(&mut r, &a, io1, max_states, 0.7),
                random::interface_automaton(&mut r, &a, io2, max_states, 0.7),
            )
        })
        .collect()
}

/// A conic compset built from `k` random components.
pub fn conic(universe: &Arc<Universe>, k: usize, seed: u64) -> ConicCompset {
    let mut r = rng(seed);
    let cs: Vec<_> = (0..k).map(|_| random::component(&mut r, universe)).collect();
    ConicCompset::normalize(universe.clone(), cs).unwrap()
}
