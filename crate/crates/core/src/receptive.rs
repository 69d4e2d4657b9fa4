//! The Heyting algebra of I-receptive languages and the cross-signature
//! composition and quotient.
//!
//! A language is I-receptive when it is prefix-closed and closed under
//! extension by any word of I*. For a fixed signature these languages form
//! a Heyting algebra under inclusion, with intersection as meet, union as
//! join, `I*` as bottom and `Σ*` as top.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lang::{Alphabet, IoSignature, Product, RegularLanguage, SymbolSet};

/// Missing Γ-extensions of `l2` with respect to `l`:
/// `(((L ∩ L2) ∘ Γ) \ L2) ∘ Σ*`.
pub fn miss_ext(l: &RegularLanguage, l2: &RegularLanguage, gamma: SymbolSet) -> Result<RegularLanguage> {
    l.intersect(l2)?
        .concat_symbol_class(gamma)?
        .difference(l2)?
        .concat_sigma_star()
}

/// Uncontrollable extensions of `L ∩ L2`: the words `w ∈ L ∩ L2` for which
/// some `w' ∈ (Γ ∪ Δ)*` and `σ ∈ Γ` give `w∘w' ∈ L ∩ L2` and
/// `w∘w'∘σ ∈ L2 \ L`, closed under every suffix extension.
///
/// Computed on the product automaton by backward reachability over
/// (Γ ∪ Δ)-edges from the states that have a Γ-successor in `L2 \ L`.
pub fn unc(
    l: &RegularLanguage,
    l2: &RegularLanguage,
    gamma: SymbolSet,
    delta: SymbolSet,
) -> Result<RegularLanguage> {
    l.same_alphabet(l2)?;
    let alphabet = l.alphabet().clone();
    alphabet.check_set(gamma)?;
    alphabet.check_set(delta)?;
    let p = Product::build(l, l2)?;
    let n = p.len();
    let in_both: Vec<bool> = p
        .pairs
        .iter()
        .map(|&(a, b)| l.is_accepting(a) && l2.is_accepting(b))
        .collect();
    let escapes = |i: u32| {
        let (a, b) = p.pairs[i as usize];
        l2.is_accepting(b) && !l.is_accepting(a)
    };
    let mut marked: Vec<bool> = (0..n as u32)
        .map(|i| in_both[i as usize] && gamma.iter().any(|s| escapes(p.next(i, s))))
        .collect();

    let moves = gamma.union(delta);
    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    for i in 0..n as u32 {
        for s in moves.iter() {
            preds[p.next(i, s) as usize].push(i);
        }
    }
    let mut stack: Vec<u32> = (0..n as u32).filter(|&i| marked[i as usize]).collect();
    while let Some(j) = stack.pop() {
        for &i in &preds[j as usize] {
            if !marked[i as usize] {
                marked[i as usize] = true;
                stack.push(i);
            }
        }
    }
    let accepting = (0..n).map(|i| in_both[i] && marked[i]).collect();
    p.into_language(alphabet, accepting)?.concat_sigma_star()
}

/// `{ w | Pre(w) ∩ L2 ⊆ L }`, evaluated directly: a word belongs iff none of
/// its prefixes lies in `L2 \ L`.
pub fn exponential_definitional(l: &RegularLanguage, l2: &RegularLanguage) -> Result<RegularLanguage> {
    let p = Product::build(l, l2)?;
    let violates = |i: u32| {
        let (a, b) = p.pairs[i as usize];
        l2.is_accepting(b) && !l.is_accepting(a)
    };
    Ok(guarded(&p, l.alphabet().clone(), violates)?.canonicalize())
}

/// Automaton over the product that moves to an absorbing rejecting sink as
/// soon as it enters a state flagged by `bad`.
fn guarded(p: &Product, alphabet: Arc<Alphabet>, bad: impl Fn(u32) -> bool) -> Result<RegularLanguage> {
    let n = p.len() as u32;
    let sink = n;
    let k = alphabet.len();
    if bad(0) {
        return Ok(RegularLanguage::empty(alphabet));
    }
    let mut delta = Vec::with_capacity((n as usize + 1) * k);
    for i in 0..n {
        for s in alphabet.iter() {
            let t = p.next(i, s);
            delta.push(if bad(t) { sink } else { t });
        }
    }
    delta.extend(std::iter::repeat(sink).take(k));
    let mut accepting = vec![true; n as usize];
    accepting.push(false);
    RegularLanguage::from_table(alphabet, 0, accepting, delta)
}

/// Largest prefix-closed, I-receptive sublanguage of `k`.
///
/// A state is kept when it is accepting and all its I-successors are kept
/// (greatest fixpoint); the result accepts the words whose whole run stays
/// in kept states. Empty when `ε` itself is not kept.
pub fn receptive_interior(k: &RegularLanguage, inputs: SymbolSet) -> Result<RegularLanguage> {
    k.alphabet().check_set(inputs)?;
    let n = k.num_states();
    let mut keep: Vec<bool> = (0..n as u32).map(|q| k.is_accepting(q)).collect();
    loop {
        let mut changed = false;
        for q in 0..n as u32 {
            if keep[q as usize] && inputs.iter().any(|s| !keep[k.next(q, s) as usize]) {
                keep[q as usize] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let alphabet = k.alphabet().clone();
    if !keep[k.initial() as usize] {
        return Ok(RegularLanguage::empty(alphabet));
    }
    let sink = n as u32;
    let mut delta = Vec::with_capacity((n + 1) * alphabet.len());
    for q in 0..n as u32 {
        for s in alphabet.iter() {
            let t = k.next(q, s);
            delta.push(if keep[t as usize] { t } else { sink });
        }
    }
    delta.extend(std::iter::repeat(sink).take(alphabet.len()));
    let mut accepting = keep;
    accepting.push(false);
    Ok(RegularLanguage::from_table(alphabet, k.initial(), accepting, delta)?.canonicalize())
}

/// Input set `I_r = I ∪ O'` of the quotient of an `(I, O)` language by an
/// `(I', O')` language.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientSignature {
    pub inputs: SymbolSet,
}

impl QuotientSignature {
    pub fn of(dividend: &IoSignature, divisor: &IoSignature) -> Result<Self> {
        if !dividend.inputs().is_subset(divisor.inputs()) {
            return Err(Error::SignatureContainment(
                "dividend inputs must be contained in divisor inputs".into(),
            ));
        }
        Ok(Self {
            inputs: dividend.inputs().union(divisor.outputs()),
        })
    }
}

/// An element of the Heyting algebra `L_I`: a prefix-closed, I-receptive
/// regular language tagged with its io signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReceptiveLanguage {
    lang: RegularLanguage,
    io: IoSignature,
}

impl ReceptiveLanguage {
    /// Validates and wraps `lang`. Failures name the violated clause with a
    /// shortest witness word.
    pub fn new(lang: RegularLanguage, io: IoSignature) -> Result<Self> {
        let alphabet = lang.alphabet().clone();
        alphabet.check_set(io.inputs())?;
        IoSignature::new(&alphabet, io.inputs(), io.outputs())?;
        if let Some(w) = lang.prefix_closure_witness() {
            return Err(Error::NotPrefixClosed(alphabet.format_word(&w)));
        }
        if let Some(w) = lang.receptivity_witness(io.inputs())? {
            let (body, last) = w.split_at(w.len() - 1);
            return Err(Error::NotReceptive(format!(
                "{}∘{}",
                alphabet.format_word(body),
                alphabet.format_word(last)
            )));
        }
        if !lang.accepts(&[]) {
            return Err(Error::EmptyLanguage);
        }
        let lang = lang.canonicalize();
        debug_assert!(RegularLanguage::star(alphabet, io.inputs()).is_subset(&lang).unwrap_or(true));
        Ok(Self { lang, io })
    }

    /// The bottom element `I*`.
    pub fn bottom(alphabet: Arc<Alphabet>, io: IoSignature) -> Result<Self> {
        let lang = RegularLanguage::star(alphabet, io.inputs());
        Self::new(lang, io)
    }

    /// The top element `Σ*`.
    pub fn top(alphabet: Arc<Alphabet>, io: IoSignature) -> Result<Self> {
        Self::new(RegularLanguage::universal(alphabet), io)
    }

    pub fn language(&self) -> &RegularLanguage {
        &self.lang
    }

    pub fn into_language(self) -> RegularLanguage {
        self.lang
    }

    pub fn io(&self) -> IoSignature {
        self.io
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.lang.alphabet()
    }

    fn same_signature(&self, other: &Self) -> Result<()> {
        self.lang.same_alphabet(&other.lang)?;
        if self.io != other.io {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    /// Lattice order (inclusion) within one signature.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_signature(other)?;
        self.lang.is_subset(&other.lang)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_signature(other)?;
        Self::new(self.lang.intersect(&other.lang)?, self.io)
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_signature(other)?;
        Self::new(self.lang.union(&other.lang)?, self.io)
    }

    /// The exponential `antecedent → self`, computed as
    /// `L ∪ MissExt(L, L', O)`.
    pub fn exponential(&self, antecedent: &Self) -> Result<Self> {
        self.same_signature(antecedent)?;
        let ext = miss_ext(&self.lang, &antecedent.lang, self.io.outputs())?;
        Self::new(self.lang.union(&ext)?, self.io)
    }

    /// Composition `L × L' = ιL ∧ ι'L'` over signature `(I ∩ I', O ∪ O')`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.lang.same_alphabet(&other.lang)?;
        if !self.io.compatible_with(&other.io) {
            let shared = self.io.outputs().intersection(other.io.outputs());
            return Err(Error::SharedOutputs(self.alphabet().format_set(shared)));
        }
        Self::new(self.lang.intersect(&other.lang)?, self.io.composite(&other.io))
    }

    /// Largest `L''` over inputs `I_r = I ∪ O'` with `L'' × divisor ⊆ self`:
    /// `(L ∩ L' ∪ MissExt(L, L', O')) \ Unc(L, L', O', I)`.
    ///
    /// Requires `I ⊆ I'` and `L' ∩ I_r* ⊆ L`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        self.lang.same_alphabet(&divisor.lang)?;
        let sig = QuotientSignature::of(&self.io, &divisor.io)?;
        let alphabet = self.alphabet().clone();
        let forced = divisor
            .lang
            .intersect(&RegularLanguage::star(alphabet.clone(), sig.inputs))?;
        if let Some(w) = forced.subset_counterexample(&self.lang)? {
            return Err(Error::QuotientUndefined(format!(
                "divisor ∩ I_r* contains {} outside the dividend",
                alphabet.format_word(&w)
            )));
        }
        let (l, l2) = (&self.lang, &divisor.lang);
        let o2 = divisor.io.outputs();
        let candidates = l.intersect(l2)?.union(&miss_ext(l, l2, o2)?)?;
        let result = candidates.difference(&unc(l, l2, o2, self.io.inputs())?)?;
        Self::new(result, IoSignature::from_inputs(&alphabet, sig.inputs)?)
    }

    /// Reinterprets the language over the smaller input set `inputs ⊆ I`.
    pub fn embed(&self, inputs: SymbolSet) -> Result<Self> {
        if !inputs.is_subset(self.io.inputs()) {
            return Err(Error::SignatureContainment(
                "embedding target inputs must be contained in the current inputs".into(),
            ));
        }
        let io = IoSignature::from_inputs(self.alphabet(), inputs)?;
        Ok(Self {
            lang: self.lang.clone(),
            io,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::Word;

    fn io_alpha() -> Arc<Alphabet> {
        Alphabet::new(["i", "o"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.word(s.split("").filter(|c| !c.is_empty())).unwrap()
    }

    fn fin(a: &Arc<Alphabet>, ws: &[&str]) -> RegularLanguage {
        let words: Vec<Word> = ws.iter().map(|s| w(a, s)).collect();
        RegularLanguage::finite(a.clone(), &words).unwrap()
    }

    fn star(a: &Arc<Alphabet>, syms: &[&str]) -> RegularLanguage {
        RegularLanguage::star(a.clone(), a.set(syms.iter().copied()).unwrap())
    }

    fn sig(a: &Arc<Alphabet>, inputs: &[&str]) -> IoSignature {
        IoSignature::from_inputs(a, a.set(inputs.iter().copied()).unwrap()).unwrap()
    }

    fn top(a: &Arc<Alphabet>) -> RegularLanguage {
        RegularLanguage::universal(a.clone())
    }

    /// i*oΣ*: the words containing at least one `o`.
    fn has_o(a: &Arc<Alphabet>) -> RegularLanguage {
        top(a).difference(&star(a, &["i"])).unwrap()
    }

    #[test]
    fn validation_reports_witnesses() {
        let a = io_alpha();
        let err = ReceptiveLanguage::new(fin(&a, &["", "o"]), sig(&a, &["i"])).unwrap_err();
        assert_eq!(err, Error::NotReceptive("ε∘i".into()));
        let err = ReceptiveLanguage::new(fin(&a, &["io"]), sig(&a, &[])).unwrap_err();
        assert_eq!(err, Error::NotPrefixClosed("io".into()));
        let err = ReceptiveLanguage::new(RegularLanguage::empty(a.clone()), sig(&a, &[])).unwrap_err();
        assert_eq!(err, Error::EmptyLanguage);
    }

    #[test]
    fn meet_and_join_examples() {
        let a = io_alpha();
        let s = sig(&a, &["i"]);
        let istar = ReceptiveLanguage::new(star(&a, &["i"]), s).unwrap();
        let t = ReceptiveLanguage::top(a.clone(), s).unwrap();
        assert_eq!(istar.meet(&t).unwrap(), istar);
        assert_eq!(istar.join(&istar).unwrap(), istar);
        // i* ∪ o i*
        let l1 = star(&a, &["i"])
            .union(&fin(&a, &["o"]).concat_symbol_class(a.set(["i"]).unwrap()).unwrap())
            .unwrap()
            .union(&fin(&a, &["o"]))
            .unwrap();
        let l1 = {
            // close o·i under i*
            let oi_star = RegularLanguage::from_transitions(
                a.clone(),
                3,
                0,
                &[0, 1],
                &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2), (2, 0, 2), (2, 1, 2)],
                false,
            )
            .unwrap();
            assert!(l1.is_subset(&oi_star).unwrap());
            ReceptiveLanguage::new(oi_star, s).unwrap()
        };
        assert_eq!(l1.meet(&istar).unwrap(), istar);
        let other = ReceptiveLanguage::top(a.clone(), sig(&a, &[])).unwrap();
        assert_eq!(istar.meet(&other), Err(Error::SignatureMismatch));
    }

    #[test]
    fn miss_ext_examples() {
        let a = io_alpha();
        let istar = star(&a, &["i"]);
        let o = a.set(["o"]).unwrap();
        let i = a.set(["i"]).unwrap();
        assert_eq!(miss_ext(&istar, &istar, o).unwrap(), has_o(&a));
        assert!(miss_ext(&istar, &istar, i).unwrap().is_empty());
        let eps_o = fin(&a, &["", "o"]);
        let expected = fin(&a, &["i", "oi"]).concat_sigma_star().unwrap();
        assert_eq!(miss_ext(&eps_o, &eps_o, i).unwrap(), expected);
    }

    #[test]
    fn unc_examples() {
        let a = io_alpha();
        let i = a.set(["i"]).unwrap();
        let istar_o = star(&a, &["i"]).union(&fin(&a, &["o"])).unwrap();
        for d in [SymbolSet::EMPTY, i, a.all()] {
            assert!(unc(&istar_o, &top(&a), SymbolSet::EMPTY, d).unwrap().is_empty());
        }
        let o_sigma = fin(&a, &["o"]).concat_sigma_star().unwrap();
        assert_eq!(unc(&istar_o, &top(&a), i, i).unwrap(), o_sigma);

        let b = Alphabet::new(["a"]).unwrap();
        let eps = RegularLanguage::epsilon(b.clone());
        let eps_a = fin(&b, &["", "a"]);
        let got = unc(&eps, &eps_a, b.all(), SymbolSet::EMPTY).unwrap();
        assert_eq!(got, RegularLanguage::universal(b));
    }

    #[test]
    fn exponential_examples() {
        let a = io_alpha();
        let s = sig(&a, &["i"]);
        let istar = ReceptiveLanguage::new(star(&a, &["i"]), s).unwrap();
        let t = ReceptiveLanguage::top(a.clone(), s).unwrap();
        assert_eq!(istar.exponential(&t).unwrap(), istar);
        assert_eq!(istar.exponential(&istar).unwrap(), t);
        assert_eq!(t.exponential(&istar).unwrap(), t);
        for (l, l2) in [(&istar, &t), (&istar, &istar), (&t, &istar)] {
            let def = exponential_definitional(l.language(), l2.language()).unwrap();
            assert_eq!(&def, l.exponential(l2).unwrap().language());
        }
    }

    #[test]
    fn compose_examples() {
        let a = io_alpha();
        let istar = ReceptiveLanguage::new(star(&a, &["i"]), sig(&a, &["i"])).unwrap();
        let t_o = ReceptiveLanguage::top(a.clone(), sig(&a, &["o"])).unwrap();
        let c = istar.compose(&t_o).unwrap();
        assert_eq!(c.language(), istar.language());
        assert_eq!(c.io().inputs(), SymbolSet::EMPTY);
        let t_i = ReceptiveLanguage::top(a.clone(), sig(&a, &["i"])).unwrap();
        assert_eq!(t_i.compose(&t_o).unwrap().language(), &top(&a));
        assert!(matches!(t_i.compose(&t_i), Err(Error::SharedOutputs(_))));

        let b = Alphabet::new(["a"]).unwrap();
        let eps_a = fin(&b, &["", "a"]);
        let producer = ReceptiveLanguage::new(eps_a.clone(), sig(&b, &[])).unwrap();
        let consumer = ReceptiveLanguage::new(eps_a.clone(), sig(&b, &["a"]));
        // {ε, a} is not a-receptive
        assert!(consumer.is_err());
        let consumer = ReceptiveLanguage::top(b.clone(), sig(&b, &["a"])).unwrap();
        let c = producer.compose(&consumer).unwrap();
        assert_eq!(c.language(), &eps_a);
        assert_eq!(c.io().outputs(), b.all());
    }

    #[test]
    fn quotient_examples() {
        let a = io_alpha();
        let t_none = ReceptiveLanguage::top(a.clone(), sig(&a, &[])).unwrap();
        let t_o = ReceptiveLanguage::top(a.clone(), sig(&a, &["o"])).unwrap();
        let q = t_none.quotient(&t_o).unwrap();
        assert_eq!(q.language(), &top(&a));
        assert_eq!(q.io().inputs(), a.set(["i"]).unwrap());

        let istar_o = ReceptiveLanguage::new(star(&a, &["i"]).union(&fin(&a, &["o"])).unwrap(), sig(&a, &[])).unwrap();
        let q = istar_o.quotient(&t_o).unwrap();
        assert_eq!(q.language(), &star(&a, &["i"]));
        assert_eq!(q.io().inputs(), a.set(["i"]).unwrap());

        let istar = ReceptiveLanguage::new(star(&a, &["i"]), sig(&a, &["i"])).unwrap();
        let t_all = ReceptiveLanguage::top(a.clone(), sig(&a, &["i", "o"])).unwrap();
        let q = istar.quotient(&t_all).unwrap();
        assert_eq!(q.language(), &star(&a, &["i"]));
        assert_eq!(q.io().inputs(), a.set(["i"]).unwrap());
    }

    #[test]
    fn quotient_errors() {
        let a = io_alpha();
        let istar = ReceptiveLanguage::new(star(&a, &["i"]), sig(&a, &["i"])).unwrap();
        let t_o = ReceptiveLanguage::top(a.clone(), sig(&a, &["o"])).unwrap();
        assert!(matches!(istar.quotient(&t_o), Err(Error::SignatureContainment(_))));
        // L = I*, L' = Σ* with I' ≠ Σ: (I ∪ O')* ⊄ I*
        let bottom = ReceptiveLanguage::bottom(a.clone(), sig(&a, &[])).unwrap();
        assert!(matches!(bottom.quotient(&t_o), Err(Error::QuotientUndefined(_))));
    }

    #[test]
    fn embed_examples() {
        let a = io_alpha();
        let istar = ReceptiveLanguage::new(star(&a, &["i"]), sig(&a, &["i"])).unwrap();
        let e = istar.embed(SymbolSet::EMPTY).unwrap();
        assert_eq!(e.io(), sig(&a, &[]));
        let t = ReceptiveLanguage::top(a.clone(), sig(&a, &["i", "o"])).unwrap();
        let i = a.set(["i"]).unwrap();
        assert_eq!(t.embed(i).unwrap().io(), sig(&a, &["i"]));
        assert_eq!(t.embed(i).unwrap().embed(SymbolSet::EMPTY).unwrap(), t.embed(SymbolSet::EMPTY).unwrap());
        assert!(e.embed(i).is_err());
    }

    #[test]
    fn receptive_interior_is_largest() {
        let a = io_alpha();
        let i = a.set(["i"]).unwrap();
        // i* ∪ {o}: interior over {i} drops `o` since o∘i leaves it
        let l = star(&a, &["i"]).union(&fin(&a, &["o"])).unwrap();
        assert_eq!(receptive_interior(&l, i).unwrap(), star(&a, &["i"]));
        assert!(receptive_interior(&fin(&a, &["", "o"]), i).unwrap().is_empty());
    }
}
