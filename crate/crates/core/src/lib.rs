pub mod automata;
pub mod behavioral;
pub mod doc;
pub mod error;
pub mod iface;
pub mod lang;
pub mod oracle;
pub mod receptive;

pub use automata::{IaComposition, InterfaceAutomaton};
pub use error::{Error, Result};
pub use iface::InterfaceHypercontract;
pub use lang::{Alphabet, IoSignature, RegularLanguage, Symbol, SymbolSet, Word};
pub use receptive::{QuotientSignature, ReceptiveLanguage};

/// Result of an operation that may legitimately find its operands
/// incompatible. Incompatibility is an answer, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Compatible(T),
    Incompatible,
}

impl<T> Outcome<T> {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Outcome::Compatible(_))
    }

    pub fn compatible(self) -> Option<T> {
        match self {
            Outcome::Compatible(t) => Some(t),
            Outcome::Incompatible => None,
        }
    }

    pub fn as_ref(&self) -> Outcome<&T> {
        match self {
            Outcome::Compatible(t) => Outcome::Compatible(t),
            Outcome::Incompatible => Outcome::Incompatible,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Compatible(t) => Outcome::Compatible(f(t)),
            Outcome::Incompatible => Outcome::Incompatible,
        }
    }
}
