use std::sync::Arc;

use super::{ConicCompset, GeneralCompset, GeneralContract, Universe};
use crate::error::{Error, Result};

/// A conic hypercontract `(E, I)`: environments and implementations, both
/// downward-closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BehavioralHypercontract {
    env: ConicCompset,
    imp: ConicCompset,
}

impl BehavioralHypercontract {
    pub fn new(env: ConicCompset, imp: ConicCompset) -> Result<Self> {
        if env.universe() != imp.universe() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Self { env, imp })
    }

    /// The composition identity `(⟨⊤⟩, ⟨⊤⟩)`.
    pub fn identity(universe: Arc<Universe>) -> Self {
        Self {
            env: ConicCompset::top(universe.clone()),
            imp: ConicCompset::top(universe),
        }
    }

    pub fn env(&self) -> &ConicCompset {
        &self.env
    }

    pub fn imp(&self) -> &ConicCompset {
        &self.imp
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.env.universe()
    }

    /// Has at least one environment.
    pub fn is_compatible(&self) -> bool {
        !self.env.is_empty()
    }

    /// Has at least one implementation.
    pub fn is_consistent(&self) -> bool {
        !self.imp.is_empty()
    }

    /// Closed-system specification `E × I`.
    pub fn closed_system(&self) -> ConicCompset {
        self.env.compose(&self.imp).expect("same universe")
    }

    /// `self ≤ other`: `E' ≤ E` and `I ≤ I'`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        Ok(other.env.leq(&self.env)? && self.imp.leq(&other.imp)?)
    }

    /// `(E/I' ∧ E'/I, I × I')`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let env = self.env.quotient(&other.imp)?.meet(&other.env.quotient(&self.imp)?)?;
        Self::new(env, self.imp.compose(&other.imp)?)
    }

    /// `(E × I', I/I' ∧ E'/E)`: the largest contract whose composition with
    /// `divisor` refines `self`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        let imp = self.imp.quotient(&divisor.imp)?.meet(&divisor.env.quotient(&self.env)?)?;
        Self::new(self.env.compose(&divisor.imp)?, imp)
    }

    /// GLB: `(E ∨ E', I ∧ I')`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        Self::new(self.env.join(&other.env)?, self.imp.meet(&other.imp)?)
    }

    /// LUB: `(E ∧ E', I ∨ I')`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        Self::new(self.env.meet(&other.env)?, self.imp.join(&other.imp)?)
    }

    pub fn mirror(&self) -> Self {
        Self {
            env: self.imp.clone(),
            imp: self.env.clone(),
        }
    }

    /// Weak merge, the GLB.
    pub fn merge_weak(&self, other: &Self) -> Result<Self> {
        self.meet(other)
    }

    /// Strong merge: environments of both, closed systems of both.
    /// `E = E1 ∧ E2`, `I = (S1 ∧ S2) / E` with `Si = Ei × Ii`.
    pub fn merge_strong(&self, other: &Self) -> Result<Self> {
        let env = self.env.meet(&other.env)?;
        let sys = self.closed_system().meet(&other.closed_system())?;
        let imp = sys.quotient(&env)?;
        Self::new(env, imp)
    }

    /// Strong merge evaluated by search over every downward-closed compset
    /// (universes of at most four behaviors): `E` is the join of all
    /// downsets below `E1 ∧ E2`, `I` the join of all downsets `X` with
    /// `E × X ≤ S1 ∧ S2`.
    pub fn merge_strong_search(&self, other: &Self) -> Result<Self> {
        let u = self.universe().clone();
        let downsets = GeneralCompset::downsets(u.clone())?;
        let env_bound = self.env.meet(&other.env)?.to_general()?;
        let sys = self.closed_system().meet(&other.closed_system())?.to_general()?;
        let mut env = GeneralCompset::empty(u.clone())?;
        for d in &downsets {
            if d.leq(&env_bound)? {
                env = env.join(d)?;
            }
        }
        let mut imp = GeneralCompset::empty(u)?;
        for d in &downsets {
            if env.compose(d)?.leq(&sys)? {
                imp = imp.join(d)?;
            }
        }
        Self::new(ConicCompset::from_general(&env)?, ConicCompset::from_general(&imp)?)
    }

    pub fn to_general(&self) -> Result<GeneralContract> {
        GeneralContract::new(self.env.to_general()?, self.imp.to_general()?)
    }

    /// Whether the `(E, S)` reading of this contract, with `S = E × I`, is
    /// saturated.
    pub fn is_saturated(&self) -> Result<bool> {
        is_saturated(&self.env, &self.closed_system())
    }
}

/// `E = S / (S / E)`.
pub fn is_saturated(env: &ConicCompset, sys: &ConicCompset) -> Result<bool> {
    Ok(&sys.quotient(&sys.quotient(env)?)? == env)
}

#[cfg(test)]
mod tests {
    use super::super::{AgContract, Component};
    use super::*;

    fn c(xs: &[usize]) -> Component {
        Component::from_indices(xs.iter().copied())
    }

    fn ag(u: &Arc<Universe>, a: &[usize], g: &[usize]) -> AgContract {
        AgContract::new(u.clone(), c(a), c(g)).unwrap()
    }

    #[test]
    fn ag_composition_example() {
        let u = Universe::numbered(4).unwrap();
        let c1 = ag(&u, &[0, 1], &[0, 2]).to_contract();
        let c2 = ag(&u, &[0, 2], &[0, 1]).to_contract();
        let comp = c1.compose(&c2).unwrap();
        assert_eq!(comp.env().maximals(), &[c(&[0, 1, 2])]);
        assert_eq!(comp.imp().maximals(), &[c(&[0, 3])]);
        let general = c1.to_general().unwrap().compose(&c2.to_general().unwrap()).unwrap();
        assert_eq!(general, comp.to_general().unwrap());
    }

    #[test]
    fn identity_preserves_implementations() {
        let u = Universe::numbered(4).unwrap();
        let c1 = ag(&u, &[0, 1], &[0, 2]).to_contract();
        let id = BehavioralHypercontract::identity(u.clone());
        assert_eq!(c1.compose(&id).unwrap().imp(), c1.imp());
    }

    #[test]
    fn strong_merge_matches_search() {
        let u = Universe::numbered(4).unwrap();
        let c1 = ag(&u, &[0, 1], &[0, 2]).to_contract();
        let c2 = ag(&u, &[0, 2], &[0, 1]).to_contract();
        let m = c1.merge_strong(&c2).unwrap();
        assert_eq!(m.env().maximals(), &[c(&[0])]);
        assert_eq!(m.imp(), &ConicCompset::top(u.clone()));
        assert_eq!(m, c1.merge_strong_search(&c2).unwrap());
    }

    #[test]
    fn meet_is_self_idempotent() {
        let u = Universe::numbered(4).unwrap();
        let c1 = ag(&u, &[0, 1], &[0, 2]).to_contract();
        assert_eq!(c1.meet(&c1).unwrap(), c1);
        assert_eq!(c1.join(&c1).unwrap(), c1);
    }

    #[test]
    fn ag_contracts_are_saturated() {
        let u = Universe::numbered(4).unwrap();
        for a in 0..16 {
            for g in 0..16 {
                let k = AgContract::new(u.clone(), Component::from_bits(a), Component::from_bits(g)).unwrap();
                assert!(k.to_contract().is_saturated().unwrap());
            }
        }
    }
}
