use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a symbol within its [`Alphabet`].
pub type Symbol = u8;

/// Maximum number of symbols; symbol sets are single-word bitmasks.
pub const MAX_SYMBOLS: usize = 64;

/// A finite, ordered alphabet. The symbol order is the order used by every
/// canonical construction (BFS renumbering, word enumeration, output).
#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if symbols.len() > MAX_SYMBOLS {
            return Err(Error::InvalidAlphabet(format!(
                "{} symbols exceeds the limit of {MAX_SYMBOLS}",
                symbols.len()
            )));
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidAlphabet("empty symbol name".into()));
            }
            if index.insert(s.clone(), i as Symbol).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Arc::new(Self { symbols, index }))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.symbols[s as usize]
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Iterates over all symbols in alphabet order.
    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.symbols.len()).map(|i| i as Symbol)
    }

    /// The set containing every symbol.
    pub fn all(&self) -> SymbolSet {
        SymbolSet::full(self.len())
    }

    pub fn set<'a, I>(&self, names: I) -> Result<SymbolSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = SymbolSet::EMPTY;
        for n in names {
            set.insert(self.symbol(n)?);
        }
        Ok(set)
    }

    pub fn word<'a, I>(&self, names: I) -> Result<Word>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names
            .into_iter()
            .map(|n| self.symbol(n))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Formats a word. Single-character symbols are juxtaposed (`io`),
    /// longer names are joined with `.`; the empty word prints as `ε`.
    pub fn format_word(&self, w: &[Symbol]) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let short = w.iter().all(|&s| self.name(s).chars().count() == 1);
        let parts: Vec<&str> = w.iter().map(|&s| self.name(s)).collect();
        if short {
            parts.concat()
        } else {
            parts.join(".")
        }
    }

    pub fn format_set(&self, set: SymbolSet) -> String {
        let names: Vec<&str> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check_set(&self, set: SymbolSet) -> Result<()> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::SymbolSetOutsideAlphabet)
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}

/// A set of symbols as a bitmask over alphabet indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub const EMPTY: SymbolSet = SymbolSet(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn single(s: Symbol) -> Self {
        Self(1u64 << s)
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: Symbol) {
        self.0 |= 1u64 << s;
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

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Symbol> {
        let bits = self.0;
        (0..64u8).filter(move |&s| bits >> s & 1 == 1)
    }
}

impl fmt::Debug for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Symbol> for SymbolSet {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        let mut set = SymbolSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// An input/output partition `(I, O)` of an alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IoSignature {
    inputs: SymbolSet,
    outputs: SymbolSet,
}

impl IoSignature {
    pub fn new(alphabet: &Alphabet, inputs: SymbolSet, outputs: SymbolSet) -> Result<Self> {
        alphabet.check_set(inputs)?;
        alphabet.check_set(outputs)?;
        if !inputs.is_disjoint(outputs) {
            return Err(Error::InvalidSignature(format!(
                "inputs and outputs overlap on {}",
                alphabet.format_set(inputs.intersection(outputs))
            )));
        }
        if inputs.union(outputs) != alphabet.all() {
            return Err(Error::InvalidSignature(format!(
                "symbols {} are neither inputs nor outputs",
                alphabet.format_set(alphabet.all().difference(inputs.union(outputs)))
            )));
        }
        Ok(Self { inputs, outputs })
    }

    /// Signature whose outputs are the complement of `inputs`.
    pub fn from_inputs(alphabet: &Alphabet, inputs: SymbolSet) -> Result<Self> {
        alphabet.check_set(inputs)?;
        Ok(Self {
            inputs,
            outputs: alphabet.all().difference(inputs),
        })
    }

    pub fn inputs(&self) -> SymbolSet {
        self.inputs
    }

    pub fn outputs(&self) -> SymbolSet {
        self.outputs
    }

    /// The signature with inputs and outputs exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            inputs: self.outputs,
            outputs: self.inputs,
        }
    }

    /// Two signatures compose when they share no outputs.
    pub fn compatible_with(&self, other: &Self) -> bool {
        self.outputs.is_disjoint(other.outputs)
    }

    /// The signature `(I ∩ I', O ∪ O')` of a composite.
    pub fn composite(&self, other: &Self) -> Self {
        Self {
            inputs: self.inputs.intersection(other.inputs),
            outputs: self.outputs.union(other.outputs),
        }
    }
}

/// A finite word over an alphabet, stored as symbol indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn extended(&self, s: Symbol) -> Word {
        let mut w = self.clone();
        w.push(s);
        w
    }

    /// Length-major, then lexicographic by symbol index.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl std::ops::Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}
