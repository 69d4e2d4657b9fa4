use std::sync::Arc;

use super::{Component, Universe};
use crate::error::{Error, Result};

/// Largest universe for which compsets are held explicitly.
pub const GENERAL_LIMIT: usize = 8;

/// An arbitrary set of components, held as a bitmap over all `2^|B|`
/// components. Only available for `|B| ≤ GENERAL_LIMIT`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralCompset {
    universe: Arc<Universe>,
    bits: [u64; 4],
}

/// Outcome of the definitional convexity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvexityReport {
    /// `H × H ≤ H`
    pub convex: bool,
    /// `H ≤ H × H`
    pub coconvex: bool,
    /// both
    pub flat: bool,
}

impl GeneralCompset {
    pub fn empty(universe: Arc<Universe>) -> Result<Self> {
        if universe.len() > GENERAL_LIMIT {
            return Err(Error::UniverseTooLarge {
                size: universe.len(),
                limit: GENERAL_LIMIT,
            });
        }
        Ok(Self { universe, bits: [0; 4] })
    }

    pub fn from_components(universe: Arc<Universe>, cs: impl IntoIterator<Item = Component>) -> Result<Self> {
        let mut h = Self::empty(universe)?;
        for c in cs {
            h.universe.check(c)?;
            h.insert(c);
        }
        Ok(h)
    }

    /// Every component: `2^B`.
    pub fn all(universe: Arc<Universe>) -> Result<Self> {
        let mut h = Self::empty(universe)?;
        for i in 0..h.slots() {
            h.insert(Component::from_bits(i as u64));
        }
        Ok(h)
    }

    /// `⋃ 2^M` over the given components.
    pub fn downward_closure(universe: Arc<Universe>, cs: impl IntoIterator<Item = Component>) -> Result<Self> {
        let tops: Vec<Component> = cs.into_iter().collect();
        let mut h = Self::empty(universe)?;
        for &t in &tops {
            h.universe.check(t)?;
        }
        for i in 0..h.slots() {
            let c = Component::from_bits(i as u64);
            if tops.iter().any(|&t| c.is_subset(t)) {
                h.insert(c);
            }
        }
        Ok(h)
    }

    /// Compset whose membership bitmap is `raw` (bit `i` stands for the
    /// component with bits `i`). Needs `2^|B| ≤ 64`.
    pub fn from_raw(universe: Arc<Universe>, raw: u64) -> Result<Self> {
        let mut h = Self::empty(universe)?;
        if h.slots() > 64 {
            return Err(Error::UniverseTooLarge {
                size: h.universe.len(),
                limit: 6,
            });
        }
        let mask = if h.slots() == 64 { u64::MAX } else { (1u64 << h.slots()) - 1 };
        h.bits[0] = raw & mask;
        Ok(h)
    }

    /// Every downward-closed compset over a universe of at most four
    /// behaviors.
    pub fn downsets(universe: Arc<Universe>) -> Result<Vec<Self>> {
        if universe.len() > 4 {
            return Err(Error::UniverseTooLarge {
                size: universe.len(),
                limit: 4,
            });
        }
        let slots = 1u64 << universe.len();
        let mut out = Vec::new();
        for raw in 0..(1u64 << slots) {
            let h = Self::from_raw(universe.clone(), raw)?;
            if h.is_downward_closed() {
                out.push(h);
            }
        }
        Ok(out)
    }

    fn slots(&self) -> usize {
        1 << self.universe.len()
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, c: Component) -> bool {
        let i = c.bits() as usize;
        i < self.slots() && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, c: Component) {
        let i = c.bits() as usize;
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn members(&self) -> impl Iterator<Item = Component> + '_ {
        (0..self.slots() as u64)
            .map(Component::from_bits)
            .filter(|&c| self.contains(c))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == [0; 4]
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0))
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut h = self.clone();
        for (a, b) in h.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
        Ok(h)
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut h = self.clone();
        for (a, b) in h.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        Ok(h)
    }

    /// `{ M ∩ M' | M ∈ H, M' ∈ H' }`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut h = Self::empty(self.universe.clone())?;
        let right: Vec<Component> = other.members().collect();
        for m in self.members() {
            for &m2 in &right {
                h.insert(m.intersection(m2));
            }
        }
        Ok(h)
    }

    /// `{ M | {M} × H' ⊆ H }`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        self.same_universe(divisor)?;
        let mut h = Self::empty(self.universe.clone())?;
        let right: Vec<Component> = divisor.members().collect();
        for i in 0..self.slots() as u64 {
            let m = Component::from_bits(i);
            if right.iter().all(|&m2| self.contains(m.intersection(m2))) {
                h.insert(m);
            }
        }
        Ok(h)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.members()
            .all(|m| m.iter().all(|b| self.contains(m.difference(Component::from_indices([b])))))
    }

    pub fn convexity(&self) -> ConvexityReport {
        let sq = self.compose(self).expect("same universe");
        let convex = sq.leq(self).expect("same universe");
        let coconvex = self.leq(&sq).expect("same universe");
        ConvexityReport {
            convex,
            coconvex,
            flat: convex && coconvex,
        }
    }
}

/// A hypercontract `(E, I)` whose compsets are arbitrary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralContract {
    pub env: GeneralCompset,
    pub imp: GeneralCompset,
}

impl GeneralContract {
    pub fn new(env: GeneralCompset, imp: GeneralCompset) -> Result<Self> {
        env.same_universe(&imp)?;
        Ok(Self { env, imp })
    }

    /// `self ≤ other`: `E' ⊆ E` and `I ⊆ I'`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        Ok(other.env.leq(&self.env)? && self.imp.leq(&other.imp)?)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        Self::new(self.env.join(&other.env)?, self.imp.meet(&other.imp)?)
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        Self::new(self.env.meet(&other.env)?, self.imp.join(&other.imp)?)
    }

    /// `(E'/I ∩ E/I', I × I')`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let env = other.env.quotient(&self.imp)?.meet(&self.env.quotient(&other.imp)?)?;
        Self::new(env, self.imp.compose(&other.imp)?)
    }

    /// `(E × I', I/I' ∩ E'/E)`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        let imp = self.imp.quotient(&divisor.imp)?.meet(&divisor.env.quotient(&self.env)?)?;
        Self::new(self.env.compose(&divisor.imp)?, imp)
    }

    pub fn mirror(&self) -> Self {
        Self {
            env: self.imp.clone(),
            imp: self.env.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(xs: &[usize]) -> Component {
        Component::from_indices(xs.iter().copied())
    }

    #[test]
    fn compose_singletons() {
        let u = Universe::numbered(3).unwrap();
        let a = GeneralCompset::from_components(u.clone(), [c(&[0, 1])]).unwrap();
        let b = GeneralCompset::from_components(u.clone(), [c(&[1, 2])]).unwrap();
        assert_eq!(
            a.compose(&b).unwrap(),
            GeneralCompset::from_components(u, [c(&[1])]).unwrap()
        );
    }

    #[test]
    fn quotient_by_top_singleton_on_downsets() {
        let u = Universe::numbered(3).unwrap();
        let top = GeneralCompset::from_components(u.clone(), [u.full()]).unwrap();
        for h in GeneralCompset::downsets(u.clone()).unwrap() {
            assert_eq!(h.quotient(&top).unwrap(), h);
        }
    }

    #[test]
    fn downset_count() {
        let u = Universe::numbered(4).unwrap();
        assert_eq!(GeneralCompset::downsets(u).unwrap().len(), 168);
        let u = Universe::numbered(3).unwrap();
        assert_eq!(GeneralCompset::downsets(u).unwrap().len(), 20);
    }

    #[test]
    fn large_universe_rejected() {
        let u = Universe::numbered(9).unwrap();
        assert!(matches!(GeneralCompset::empty(u), Err(Error::UniverseTooLarge { .. })));
        let u = Universe::numbered(8).unwrap();
        let all = GeneralCompset::all(u).unwrap();
        assert_eq!(all.len(), 256);
    }

    #[test]
    fn mirror_of_meet_is_join_of_mirrors() {
        let u = Universe::numbered(3).unwrap();
        let hs: Vec<GeneralCompset> = [0x0fu64, 0xa5, 0x81, 0xff, 0x00]
            .iter()
            .map(|&r| GeneralCompset::from_raw(u.clone(), r).unwrap())
            .collect();
        for e1 in &hs {
            for i1 in &hs {
                for e2 in &hs {
                    for i2 in &hs {
                        let c1 = GeneralContract::new(e1.clone(), i1.clone()).unwrap();
                        let c2 = GeneralContract::new(e2.clone(), i2.clone()).unwrap();
                        let lhs = c1.meet(&c2).unwrap().mirror();
                        let rhs = c1.mirror().join(&c2.mirror()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
