use std::sync::Arc;

use super::{BehavioralHypercontract, Component, ConicCompset, Universe};
use crate::error::{Error, Result};

/// An assume-guarantee contract `(A, G)` of trace properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgContract {
    universe: Arc<Universe>,
    a: Component,
    g: Component,
}

impl AgContract {
    pub fn new(universe: Arc<Universe>, a: Component, g: Component) -> Result<Self> {
        universe.check(a)?;
        universe.check(g)?;
        Ok(Self { universe, a, g })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn assumption(&self) -> Component {
        self.a
    }

    pub fn guarantee(&self) -> Component {
        self.g
    }

    /// `G / A = ¬A ∪ G`.
    pub fn saturated_guarantee(&self) -> Component {
        self.universe.complement(self.a).union(self.g)
    }

    /// `(⟨A⟩, ⟨G/A⟩)`.
    pub fn to_contract(&self) -> BehavioralHypercontract {
        let u = self.universe.clone();
        BehavioralHypercontract::new(
            ConicCompset::principal(u.clone(), self.a).expect("checked"),
            ConicCompset::principal(u, self.saturated_guarantee()).expect("checked"),
        )
        .expect("same universe")
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Composition, in saturated form: `G = G1/A1 ∩ G2/A2`,
    /// `A = (A1 ∩ A2) ∪ ¬G`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let g = self.saturated_guarantee().intersection(other.saturated_guarantee());
        let a = self.a.intersection(other.a).union(self.universe.complement(g));
        Self::new(self.universe.clone(), a, g)
    }

    /// Strong merge `(A1 ∩ A2, G1 ∩ G2)`.
    pub fn merge_strong(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        Self::new(self.universe.clone(), self.a.intersection(other.a), self.g.intersection(other.g))
    }

    /// Weak merge, the GLB of the two hypercontracts. Its environment set is
    /// the union `⟨A1⟩ ∪ ⟨A2⟩`, which in general is not of AG form.
    pub fn merge_weak(&self, other: &Self) -> Result<BehavioralHypercontract> {
        self.same_universe(other)?;
        self.to_contract().merge_weak(&other.to_contract())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(xs: &[usize]) -> Component {
        Component::from_indices(xs.iter().copied())
    }

    #[test]
    fn to_contract_example() {
        let u = Universe::numbered(4).unwrap();
        let k = AgContract::new(u.clone(), c(&[0, 1]), c(&[0, 2])).unwrap().to_contract();
        assert_eq!(k.env().maximals(), &[c(&[0, 1])]);
        assert_eq!(k.imp().maximals(), &[c(&[0, 2, 3])]);
    }

    #[test]
    fn operations_commute_with_the_bridge_exhaustively() {
        let u = Universe::numbered(3).unwrap();
        let all: Vec<AgContract> = (0..8u64)
            .flat_map(|a| (0..8u64).map(move |g| (a, g)))
            .map(|(a, g)| AgContract::new(u.clone(), Component::from_bits(a), Component::from_bits(g)).unwrap())
            .collect();
        for x in &all {
            for y in &all {
                let (cx, cy) = (x.to_contract(), y.to_contract());
                assert_eq!(x.compose(y).unwrap().to_contract(), cx.compose(&cy).unwrap());
                assert_eq!(x.merge_strong(y).unwrap().to_contract(), cx.merge_strong(&cy).unwrap());
                assert_eq!(x.merge_weak(y).unwrap(), cx.meet(&cy).unwrap());
            }
        }
    }

    #[test]
    fn strong_merge_example() {
        let u = Universe::numbered(4).unwrap();
        let x = AgContract::new(u.clone(), c(&[0, 1]), c(&[0, 2])).unwrap();
        let y = AgContract::new(u.clone(), c(&[0, 2]), c(&[0, 1])).unwrap();
        let m = x.merge_strong(&y).unwrap();
        assert_eq!((m.assumption(), m.guarantee()), (c(&[0]), c(&[0])));
        let k = m.to_contract();
        assert_eq!(k.env().maximals(), &[c(&[0])]);
        assert_eq!(k.imp().maximals(), &[u.full()]);
    }
}
