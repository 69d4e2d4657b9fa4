//! Interface hypercontracts: a prefix-closed language `S` of closed-system
//! behaviors together with an io signature. The maximal environment `E_S`
//! and the maximal implementation `M_S` are derived from `S`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lang::{Alphabet, IoSignature, RegularLanguage, SymbolSet};
use crate::receptive::{miss_ext, unc};
use crate::Outcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterfaceHypercontract {
    s: RegularLanguage,
    io: IoSignature,
    env: RegularLanguage,
    imp: RegularLanguage,
}

impl InterfaceHypercontract {
    /// Builds the contract determined by `s` and `io`.
    pub fn from_s(s: RegularLanguage, io: IoSignature) -> Result<Self> {
        let alphabet = s.alphabet().clone();
        IoSignature::new(&alphabet, io.inputs(), io.outputs())?;
        if let Some(w) = s.prefix_closure_witness() {
            return Err(Error::NotPrefixClosed(alphabet.format_word(&w)));
        }
        if !s.accepts(&[]) {
            return Err(Error::EmptyLanguage);
        }
        let s = s.canonicalize();
        let env = s.union(&miss_ext(&s, &s, io.outputs())?)?;
        let imp = s.union(&miss_ext(&s, &s, io.inputs())?)?;
        debug_assert!(env.is_receptive(io.outputs()).unwrap_or(true) && env.is_prefix_closed());
        debug_assert!(imp.is_receptive(io.inputs()).unwrap_or(true) && imp.is_prefix_closed());
        debug_assert!(env.intersect(&imp).map_or(true, |x| x == s));
        Ok(Self { s, io, env, imp })
    }

    /// The identity for composition: `S = Σ*` with every symbol an input.
    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        let io = IoSignature::from_inputs(&alphabet, alphabet.all()).expect("full input set");
        Self::from_s(RegularLanguage::universal(alphabet), io).expect("Σ* is prefix-closed")
    }

    pub fn s(&self) -> &RegularLanguage {
        &self.s
    }

    pub fn io(&self) -> IoSignature {
        self.io
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.s.alphabet()
    }

    /// Maximal environment `E_S = S ∪ MissExt(S, S, O)`.
    pub fn max_environment(&self) -> &RegularLanguage {
        &self.env
    }

    /// Maximal implementation `M_S = S ∪ MissExt(S, S, I)`.
    pub fn max_implementation(&self) -> &RegularLanguage {
        &self.imp
    }

    fn within(lang: &RegularLanguage, receptive_to: SymbolSet, upper: &RegularLanguage) -> Result<bool> {
        lang.same_alphabet(upper)?;
        Ok(lang.accepts(&[])
            && lang.is_prefix_closed()
            && lang.is_receptive(receptive_to)?
            && lang.is_subset(upper)?)
    }

    /// `E` is O-receptive, prefix-closed and `O* ⊆ E ⊆ E_S`.
    pub fn is_environment(&self, e: &RegularLanguage) -> Result<bool> {
        Self::within(e, self.io.outputs(), &self.env)
    }

    /// `M` is I-receptive, prefix-closed and `I* ⊆ M ⊆ M_S`.
    pub fn is_implementation(&self, m: &RegularLanguage) -> Result<bool> {
        Self::within(m, self.io.inputs(), &self.imp)
    }

    /// `self ≤ other`: every environment of `other` is an environment of
    /// `self` and every implementation of `self` implements `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.s.same_alphabet(&other.s)?;
        if self.io != other.io {
            return Err(Error::SignatureMismatch);
        }
        Ok(other.env.is_subset(&self.env)? && self.imp.is_subset(&other.imp)?)
    }

    /// Composition over `(I ∩ I', O ∪ O')`; incompatible when the
    /// surviving closed-system language is empty.
    pub fn compose(&self, other: &Self) -> Result<Outcome<Self>> {
        self.s.same_alphabet(&other.s)?;
        if !self.io.compatible_with(&other.io) {
            let shared = self.io.outputs().intersection(other.io.outputs());
            return Err(Error::SharedOutputs(self.alphabet().format_set(shared)));
        }
        let (s1, s2) = (&self.s, &other.s);
        let (o1, o2) = (self.io.outputs(), other.io.outputs());
        let bad = unc(s2, s1, o1, o2)?.union(&unc(s1, s2, o2, o1)?)?;
        let r = s1.intersect(s2)?.difference(&bad)?;
        if r.is_empty() {
            return Ok(Outcome::Incompatible);
        }
        Self::from_s(r, self.io.composite(&other.io)).map(Outcome::Compatible)
    }

    /// Same `S` over the swapped signature.
    pub fn mirror(&self) -> Self {
        Self {
            s: self.s.clone(),
            io: self.io.swapped(),
            env: self.imp.clone(),
            imp: self.env.clone(),
        }
    }

    /// `self / divisor = mirror(mirror(self) ∥ divisor)`.
    pub fn quotient(&self, divisor: &Self) -> Result<Outcome<Self>> {
        Ok(self.mirror().compose(divisor)?.map(|c| c.mirror()))
    }
}
