use std::sync::Arc;

use super::{Component, GeneralCompset, Universe};
use crate::error::{Error, Result};

/// Largest number of choice functions [`ConicCompset::quotient`] will
/// enumerate.
pub const CHOICE_LIMIT: u128 = 1 << 24;

/// A downward-closed compset `⟨M1, …, Mk⟩ = ⋃ 2^Mi`, stored as the sorted
/// antichain of its maximal components. `⟨⟩` is the empty compset and
/// `⟨∅⟩` the compset holding only the empty component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCompset {
    universe: Arc<Universe>,
    maximals: Vec<Component>,
}

impl ConicCompset {
    /// Keeps only the maximal elements of `components`.
    pub fn normalize(universe: Arc<Universe>, components: impl IntoIterator<Item = Component>) -> Result<Self> {
        let mut ms: Vec<Component> = components.into_iter().collect();
        for &c in &ms {
            universe.check(c)?;
        }
        Ok(Self {
            maximals: antichain(&mut ms),
            universe,
        })
    }

    pub fn empty(universe: Arc<Universe>) -> Self {
        Self {
            universe,
            maximals: Vec::new(),
        }
    }

    /// `⟨⊤⟩ = 2^B`.
    pub fn top(universe: Arc<Universe>) -> Self {
        let full = universe.full();
        Self::principal(universe, full).expect("full component")
    }

    /// `⟨c⟩ = 2^c`.
    pub fn principal(universe: Arc<Universe>, c: Component) -> Result<Self> {
        Self::normalize(universe, [c])
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn maximals(&self) -> &[Component] {
        &self.maximals
    }

    /// Number of maximal components.
    pub fn k(&self) -> usize {
        self.maximals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maximals.is_empty()
    }

    pub fn contains(&self, c: Component) -> bool {
        self.maximals.iter().any(|&m| c.is_subset(m))
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Inclusion of denotations: every maximal of `self` lies under some
    /// maximal of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.maximals.iter().all(|&m| other.contains(m)))
    }

    /// `⟨M ∩ M'⟩` over all pairs of maximals.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut ms: Vec<Component> = Vec::with_capacity(self.k() * other.k());
        for &m in &self.maximals {
            for &m2 in &other.maximals {
                ms.push(m.intersection(m2));
            }
        }
        let maximals = antichain(&mut ms);
        debug_assert!(maximals.len() <= self.k() * other.k());
        Ok(Self {
            universe: self.universe.clone(),
            maximals,
        })
    }

    /// Lattice meet; the intersection of two downsets, which coincides with
    /// composition.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.compose(other)
    }

    /// Lattice join; the union of two downsets.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut ms: Vec<Component> = self.maximals.iter().chain(&other.maximals).copied().collect();
        Ok(Self {
            universe: self.universe.clone(),
            maximals: antichain(&mut ms),
        })
    }

    /// Largest conic `x` with `x × divisor ≤ self`: the maximals of
    /// `⋀_{M'} M(M') / M'` over every choice function `M` from the maximals
    /// of `divisor` to the maximals of `self`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        self.same_universe(divisor)?;
        let (k, k2) = (self.k(), divisor.k());
        let u = &self.universe;
        if k2 == 0 {
            return Ok(Self::top(u.clone()));
        }
        if k == 0 {
            return Ok(Self::empty(u.clone()));
        }
        let count = (k as u128).checked_pow(k2 as u32).unwrap_or(u128::MAX);
        if count > CHOICE_LIMIT {
            return Err(Error::ChoiceLimit(CHOICE_LIMIT));
        }
        // table[j][i] = M_i / M'_j
        let table: Vec<Vec<Component>> = divisor
            .maximals
            .iter()
            .map(|&m2| self.maximals.iter().map(|&m| u.complement(m2).union(m)).collect())
            .collect();
        let mut choice = vec![0usize; k2];
        let mut ms = Vec::with_capacity(count as usize);
        'outer: loop {
            let mut acc = u.full();
            for (j, &i) in choice.iter().enumerate() {
                acc = acc.intersection(table[j][i]);
            }
            ms.push(acc);
            for slot in choice.iter_mut() {
                *slot += 1;
                if *slot < k {
                    continue 'outer;
                }
                *slot = 0;
            }
            break;
        }
        let maximals = antichain(&mut ms);
        debug_assert!((maximals.len() as u128) <= count);
        Ok(Self {
            universe: u.clone(),
            maximals,
        })
    }

    /// The explicit set of components denoted, for small universes.
    pub fn to_general(&self) -> Result<GeneralCompset> {
        GeneralCompset::downward_closure(self.universe.clone(), self.maximals.iter().copied())
    }

    /// Inverse of [`ConicCompset::to_general`] for downward-closed sets.
    pub fn from_general(h: &GeneralCompset) -> Result<Self> {
        if !h.is_downward_closed() {
            return Err(Error::InvalidDocument("compset is not downward-closed".into()));
        }
        Self::normalize(h.universe().clone(), h.members())
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> = self.maximals.iter().map(|&m| self.universe.format(m)).collect();
        format!("⟨{}⟩", parts.join(", "))
    }
}

/// Sorted antichain of the maximal elements of `ms`.
fn antichain(ms: &mut Vec<Component>) -> Vec<Component> {
    ms.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    ms.dedup();
    let mut keep: Vec<Component> = Vec::new();
    for &m in ms.iter() {
        if !keep.iter().any(|&k| m.is_subset(k)) {
            keep.push(m);
        }
    }
    keep.sort_unstable();
    keep
}
