use thiserror::Error;

/// Errors raised by the algebra. Algebraic outcomes such as incompatibility
/// are not errors; see [`crate::Outcome`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch")]
    AlphabetMismatch,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol set is not a subset of the alphabet")]
    SymbolSetOutsideAlphabet,
    #[error("invalid io signature: {0}")]
    InvalidSignature(String),
    #[error("io signature mismatch")]
    SignatureMismatch,
    #[error("shared outputs: {0}")]
    SharedOutputs(String),
    #[error("signature containment violated: {0}")]
    SignatureContainment(String),
    #[error("quotient undefined: {0}")]
    QuotientUndefined(String),
    #[error("not prefix-closed at witness {0}")]
    NotPrefixClosed(String),
    #[error("language is empty (receptive languages contain ε)")]
    EmptyLanguage,
    #[error("not receptive at witness {0}")]
    NotReceptive(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("nondeterministic transition from state `{state}` on `{symbol}`")]
    Nondeterministic { state: String, symbol: String },
    #[error("incomplete transition function: state `{state}` has no `{symbol}` successor")]
    Incomplete { state: String, symbol: String },
    #[error("state limit exceeded: construction needs more than {0} states")]
    StateLimit(usize),
    #[error("quotient needs more than {0} choice functions")]
    ChoiceLimit(u128),
    #[error("word length limit exceeded: {requested} > {limit}")]
    WordLimit { requested: usize, limit: usize },
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),
    #[error("universe mismatch")]
    UniverseMismatch,
    #[error("universe too large for general mode: {size} behaviors (limit {limit})")]
    UniverseTooLarge { size: usize, limit: usize },
    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
