//! Exact regular-language algebra over a fixed finite alphabet.

mod alphabet;
mod language;
mod nfa;

pub use alphabet::{Alphabet, IoSignature, Symbol, SymbolSet, Word, MAX_SYMBOLS};
pub use language::{max_states, set_max_states, BooleanOp, RegularLanguage, DEFAULT_MAX_STATES, WORD_LIMIT};

pub(crate) use language::{check_state_count, Product};
