//! A one-bit secure information flow design.
//!
//! Behaviors assign a bit to each of `H` (privileged access), `S` (secret
//! selector), `P` (public input), `O1`, `O2` (the outputs of two
//! sub-components) and `O` (system output): 64 behaviors in all. The
//! top-level contract lets unprivileged users observe `O` only as a function
//! of `P`. Two components each compute a function `f*` of `P` on one value
//! of `S`; the missing glue is obtained by quotient.

use std::sync::Arc;

use super::{BehavioralHypercontract, Component, ConicCompset, GeneralCompset, Universe};
use crate::error::Result;

const H: usize = 0;
const S: usize = 1;
const P: usize = 2;
const O1: usize = 3;
const O2: usize = 4;
const O: usize = 5;

/// Every function from one bit to one bit, as `[f(0), f(1)]`.
pub const ONE_BIT_FUNCTIONS: [[bool; 2]; 4] = [[false, false], [false, true], [true, false], [true, true]];

#[derive(Clone, Debug)]
pub struct SecureFlow {
    universe: Arc<Universe>,
    f_star: [bool; 2],
}

/// Results of checking the design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecureFlowReport {
    /// `Cr ∥ Cc ≤ C`
    pub composite_refines_spec: bool,
    /// `Cr` has implementations.
    pub glue_consistent: bool,
    /// `Cr ≤ C / Cc`
    pub glue_refines_quotient: bool,
    /// Number of maximal implementations of `C`.
    pub spec_implementation_k: usize,
}

impl SecureFlowReport {
    pub fn passed(&self) -> bool {
        self.composite_refines_spec && self.glue_consistent && self.glue_refines_quotient
    }
}

fn bit(b: usize, var: usize) -> bool {
    b >> var & 1 == 1
}

impl SecureFlow {
    pub fn new(f_star: [bool; 2]) -> Self {
        let labels = (0..64usize).map(|b| {
            let v = |var| bit(b, var) as u8;
            format!("H{}S{}P{}O1{}O2{}O{}", v(H), v(S), v(P), v(O1), v(O2), v(O))
        });
        Self {
            universe: Universe::new(labels).expect("64 distinct labels"),
            f_star,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    fn select(pred: impl Fn(usize) -> bool) -> Component {
        Component::from_indices((0..64).filter(|&b| pred(b)))
    }

    fn conic(&self, cs: impl IntoIterator<Item = Component>) -> ConicCompset {
        ConicCompset::normalize(self.universe.clone(), cs).expect("within universe")
    }

    fn top(&self) -> ConicCompset {
        ConicCompset::top(self.universe.clone())
    }

    fn f(&self, p: bool) -> bool {
        self.f_star[p as usize]
    }

    /// `C = (⟨¬H⟩, ⟨O = f(P)⟩ for every f)`.
    pub fn spec(&self) -> BehavioralHypercontract {
        let env = self.conic([Self::select(|b| !bit(b, H))]);
        let imp = self.conic(
            ONE_BIT_FUNCTIONS
                .iter()
                .map(|f| Self::select(|b| bit(b, O) == f[bit(b, P) as usize])),
        );
        BehavioralHypercontract::new(env, imp).expect("same universe")
    }

    /// `C1 = (⟨B⟩, ⟨s ∧ O1 = f*(P) ∨ ¬s⟩)`.
    pub fn c1(&self) -> BehavioralHypercontract {
        let imp = self.conic([Self::select(|b| !bit(b, S) || bit(b, O1) == self.f(bit(b, P)))]);
        BehavioralHypercontract::new(self.top(), imp).expect("same universe")
    }

    /// `C2 = (⟨B⟩, ⟨¬s ∧ O2 = f*(P) ∨ s⟩)`.
    pub fn c2(&self) -> BehavioralHypercontract {
        let imp = self.conic([Self::select(|b| bit(b, S) || bit(b, O2) == self.f(bit(b, P)))]);
        BehavioralHypercontract::new(self.top(), imp).expect("same universe")
    }

    /// `Cc = C1 ∥ C2`.
    pub fn composite(&self) -> Result<BehavioralHypercontract> {
        self.c1().compose(&self.c2())
    }

    /// `Cr = (⟨B⟩, ⟨s ∧ O = O1 ∨ ¬s ∧ O = O2⟩)`, independent of `f*`.
    pub fn glue(&self) -> BehavioralHypercontract {
        let imp = self.conic([Self::select(|b| {
            if bit(b, S) {
                bit(b, O) == bit(b, O1)
            } else {
                bit(b, O) == bit(b, O2)
            }
        })]);
        BehavioralHypercontract::new(self.top(), imp).expect("same universe")
    }

    pub fn check(&self) -> Result<SecureFlowReport> {
        let spec = self.spec();
        let cc = self.composite()?;
        let cr = self.glue();
        let quotient = spec.quotient(&cc)?;
        Ok(SecureFlowReport {
            composite_refines_spec: cr.compose(&cc)?.refines(&spec)?,
            glue_consistent: cr.is_consistent(),
            glue_refines_quotient: cr.refines(&quotient)?,
            spec_implementation_k: spec.imp().k(),
        })
    }
}

/// Non-interference over behaviors `(P, O)`: the components in which equal
/// public inputs always give equal outputs.
pub fn non_interference() -> Result<GeneralCompset> {
    let universe = Universe::new(["P0O0", "P0O1", "P1O0", "P1O1"])?;
    let p = |b: usize| b >> 1;
    let o = |b: usize| b & 1;
    let mut members = Vec::new();
    for bits in 0..16u64 {
        let m = Component::from_bits(bits);
        let ok = m.iter().all(|x| m.iter().all(|y| p(x) != p(y) || o(x) == o(y)));
        if ok {
            members.push(m);
        }
    }
    GeneralCompset::from_components(universe, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn design_holds_for_every_f_star() {
        for f in ONE_BIT_FUNCTIONS {
            let report = SecureFlow::new(f).check().unwrap();
            assert!(report.passed(), "{f:?}: {report:?}");
            assert_eq!(report.spec_implementation_k, 4);
        }
    }

    #[test]
    fn non_interference_is_four_conic() {
        let ni = non_interference().unwrap();
        assert!(ni.is_downward_closed());
        let conic = ConicCompset::from_general(&ni).unwrap();
        assert_eq!(conic.k(), 4);
        let graphs: Vec<Component> = ONE_BIT_FUNCTIONS
            .iter()
            .map(|f| Component::from_indices([f[0] as usize, 2 + f[1] as usize]))
            .collect();
        let mut expected = graphs.clone();
        expected.sort();
        assert_eq!(conic.maximals(), expected.as_slice());
    }
}
