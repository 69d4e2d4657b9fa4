//! Brute-force checkers that compare every closed form with its defining
//! quantifier statement, evaluated by enumeration or exhaustive search.

mod checks;
pub mod random;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lang::WORD_LIMIT;

pub use checks::{
    check_miss_ext_formula, check_unc_formula, conic_exhaustive, convexity_exhaustive, miss_ext_holds, unc_holds,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundedCheckConfig {
    pub max_word_len: usize,
    pub seed: u64,
    pub num_cases: usize,
    pub max_states: usize,
}

impl Default for BoundedCheckConfig {
    fn default() -> Self {
        Self {
            max_word_len: 6,
            seed: 0,
            num_cases: 200,
            max_states: 5,
        }
    }
}

impl BoundedCheckConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_word_len > WORD_LIMIT {
            return Err(Error::WordLimit {
                requested: self.max_word_len,
                limit: WORD_LIMIT,
            });
        }
        if self.max_states == 0 {
            return Err(Error::InvalidDocument("max_states must be positive".into()));
        }
        Ok(())
    }

    pub(crate) fn rng(&self, kind: CheckKind, case: usize) -> ChaCha8Rng {
        let stream = (kind as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        ChaCha8Rng::seed_from_u64(self.seed ^ stream ^ (case as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    MissExt,
    Unc,
    Exponential,
    ReceptiveQuotient,
    InterfaceCompose,
    IaEquivalence,
    ConicQuotient,
    ConicExhaustive,
    Convexity,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::MissExt,
        CheckKind::Unc,
        CheckKind::Exponential,
        CheckKind::ReceptiveQuotient,
        CheckKind::InterfaceCompose,
        CheckKind::IaEquivalence,
        CheckKind::ConicQuotient,
        CheckKind::ConicExhaustive,
        CheckKind::Convexity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::MissExt => "missext",
            CheckKind::Unc => "unc",
            CheckKind::Exponential => "exponential",
            CheckKind::ReceptiveQuotient => "receptive-quotient",
            CheckKind::InterfaceCompose => "interface-compose",
            CheckKind::IaEquivalence => "ia-equivalence",
            CheckKind::ConicQuotient => "conic-quotient",
            CheckKind::ConicExhaustive => "conic-exhaustive",
            CheckKind::Convexity => "convexity",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidDocument(format!("unknown check kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub word: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub cases: usize,
    /// Longest existential witness the check can need, when it searches for
    /// one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_bound: Option<usize>,
    pub failure: Option<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => {
                write!(f, "PASS {} cases={}", self.kind, self.cases)?;
                if let Some(b) = self.witness_bound {
                    write!(f, " witness-bound={b}")?;
                }
                Ok(())
            }
            Some(x) => write!(
                f,
                "FAIL {} case={} word={} expected={} got={}",
                self.kind, x.case, x.word, x.expected, x.got
            ),
        }
    }
}

pub fn run(kind: CheckKind, cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    cfg.validate()?;
    match kind {
        CheckKind::MissExt => checks::miss_ext_suite(cfg),
        CheckKind::Unc => checks::unc_suite(cfg),
        CheckKind::Exponential => checks::exponential_suite(cfg),
        CheckKind::ReceptiveQuotient => checks::receptive_quotient_suite(cfg, 50),
        CheckKind::InterfaceCompose => checks::interface_compose_suite(cfg),
        CheckKind::IaEquivalence => checks::ia_equivalence_suite(cfg),
        CheckKind::ConicQuotient => checks::conic_quotient_suite(cfg),
        CheckKind::ConicExhaustive => conic_exhaustive(4, 2),
        CheckKind::Convexity => convexity_exhaustive(3),
    }
}

pub fn run_all(cfg: &BoundedCheckConfig) -> Result<Vec<CheckReport>> {
    CheckKind::ALL.iter().map(|&k| run(k, cfg)).collect()
}
