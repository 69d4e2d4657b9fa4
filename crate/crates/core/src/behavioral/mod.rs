//! Behavioral hypercontracts over a finite universe of behaviors.
//!
//! Components are sets of behaviors ordered by inclusion, composed by
//! intersection, with quotient `M / M' = ¬M' ∪ M`. Compsets are sets of
//! components; the conic ones (downward-closed) are stored by their maximal
//! elements.

mod ag;
mod conic;
mod contract;
mod general;
pub mod info_flow;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use ag::AgContract;
pub use conic::{ConicCompset, CHOICE_LIMIT};
pub use contract::{is_saturated, BehavioralHypercontract};
pub use general::{ConvexityReport, GeneralCompset, GeneralContract, GENERAL_LIMIT};

/// Largest universe accepted (components are 64-bit sets).
pub const MAX_BEHAVIORS: usize = 64;

/// An ordered, finite set of behavior labels.
#[derive(Clone, Debug)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidUniverse("universe is empty".into()));
        }
        if labels.len() > MAX_BEHAVIORS {
            return Err(Error::InvalidUniverse(format!(
                "{} behaviors exceed the limit of {MAX_BEHAVIORS}",
                labels.len()
            )));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidUniverse(format!("duplicate behavior `{l}`")));
            }
        }
        Ok(Arc::new(Self { labels, index }))
    }

    /// Universe `{0, 1, …, n-1}`.
    pub fn numbered(n: usize) -> Result<Arc<Self>> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The component containing every behavior.
    pub fn full(&self) -> Component {
        Component(if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 })
    }

    pub fn component<'a, I>(&self, labels: I) -> Result<Component>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut c = Component::EMPTY;
        for l in labels {
            let i = self
                .index
                .get(l)
                .ok_or_else(|| Error::InvalidUniverse(format!("unknown behavior `{l}`")))?;
            c.insert(*i);
        }
        Ok(c)
    }

    pub fn check(&self, c: Component) -> Result<()> {
        if c.is_subset(self.full()) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn complement(&self, c: Component) -> Component {
        self.full().difference(c)
    }

    /// `c / c2 = ¬c2 ∪ c`: the largest `x` with `c2 ∩ x ⊆ c`.
    pub fn quotient(&self, c: Component, c2: Component) -> Result<Component> {
        self.check(c)?;
        self.check(c2)?;
        Ok(self.complement(c2).union(c))
    }

    pub fn format(&self, c: Component) -> String {
        let names: Vec<&str> = c.iter().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn names(&self, c: Component) -> Vec<String> {
        c.iter().map(|i| self.labels[i].clone()).collect()
    }
}

/// A set of behaviors, as a bitset over the universe order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component(u64);

impl Component {
    pub const EMPTY: Component = Component(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut c = Self::EMPTY;
        for i in indices {
            c.insert(i);
        }
        c
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
