use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{random, BoundedCheckConfig, CheckKind, CheckReport, Failure};
use crate::behavioral::{BehavioralHypercontract, ConicCompset, GeneralCompset, Universe};
use crate::error::Result;
use crate::iface::InterfaceHypercontract;
use crate::lang::{Alphabet, IoSignature, RegularLanguage, Symbol, SymbolSet, Word};
use crate::receptive::{exponential_definitional, miss_ext, receptive_interior, unc};
use crate::Outcome;

/// `(word, expected, got)` of a failed case.
type Mismatch = (String, String, String);

fn member(b: bool) -> String {
    if b { "member" } else { "non-member" }.to_string()
}

fn words(alphabet: &Arc<Alphabet>, max_len: usize) -> Result<Vec<Word>> {
    RegularLanguage::universal(alphabet.clone()).enumerate_words(max_len)
}

/// Shortest word on which two languages disagree.
fn difference_witness(a: &RegularLanguage, b: &RegularLanguage) -> Result<Option<Word>> {
    Ok(a.difference(b)?.union(&b.difference(a)?)?.shortest_word())
}

fn language_mismatch(
    alphabet: &Alphabet,
    what: &str,
    expected: &RegularLanguage,
    got: &RegularLanguage,
) -> Result<Option<Mismatch>> {
    Ok(difference_witness(expected, got)?.map(|w| {
        (
            alphabet.format_word(&w),
            format!("{what}:{}", member(expected.accepts(&w))),
            format!("{what}:{}", member(got.accepts(&w))),
        )
    }))
}

fn inclusion_mismatch(alphabet: &Alphabet, what: &str, sub: &RegularLanguage, sup: &RegularLanguage) -> Result<Option<Mismatch>> {
    Ok(sub.subset_counterexample(sup)?.map(|w| {
        (
            alphabet.format_word(&w),
            format!("{what}:included"),
            format!("{what}:not-included"),
        )
    }))
}

fn no_word(what: &str, expected: impl ToString, got: impl ToString) -> Mismatch {
    (
        "-".to_string(),
        format!("{what}:{}", expected.to_string()),
        format!("{what}:{}", got.to_string()),
    )
}

fn suite(
    kind: CheckKind,
    cfg: &BoundedCheckConfig,
    mut case: impl FnMut(&mut ChaCha8Rng, usize) -> Result<Option<Mismatch>>,
) -> Result<CheckReport> {
    for k in 0..cfg.num_cases {
        let mut rng = cfg.rng(kind, k);
        if let Some((word, expected, got)) = case(&mut rng, k)? {
            return Ok(CheckReport {
                kind,
                cases: k + 1,
                witness_bound: None,
                failure: Some(Failure {
                    case: k,
                    word,
                    expected,
                    got,
                }),
            });
        }
    }
    Ok(CheckReport {
        kind,
        cases: cfg.num_cases,
        witness_bound: None,
        failure: None,
    })
}

/// Whether `w ∈ MissExt(L, L2, Γ)` by its definition: some prefix `u∘σ`
/// of `w` has `u ∈ L ∩ L2`, `σ ∈ Γ` and `u∘σ ∉ L2`.
pub fn miss_ext_holds(l: &RegularLanguage, l2: &RegularLanguage, gamma: SymbolSet, w: &[Symbol]) -> bool {
    let (mut p, mut q) = (l.initial(), l2.initial());
    for &s in w {
        if l.is_accepting(p) && l2.is_accepting(q) && gamma.contains(s) && !l2.is_accepting(l2.next(q, s)) {
            return true;
        }
        p = l.next(p, s);
        q = l2.next(q, s);
    }
    false
}

/// Searches `(Γ ∪ Δ)`-continuations from a pair of operand states for an
/// endpoint in `L ∩ L2` with a Γ-step into `L2 \ L`. Continuations are
/// deduplicated by the pair of states reached, so the search is exhaustive
/// over witness lengths below `|L| · |L2|`.
struct UncWitness<'a> {
    l: &'a RegularLanguage,
    l2: &'a RegularLanguage,
    gamma: SymbolSet,
    moves: SymbolSet,
    memo: HashMap<(u32, u32), bool>,
}

impl<'a> UncWitness<'a> {
    fn new(l: &'a RegularLanguage, l2: &'a RegularLanguage, gamma: SymbolSet, delta: SymbolSet) -> Self {
        Self {
            l,
            l2,
            gamma,
            moves: gamma.union(delta),
            memo: HashMap::new(),
        }
    }

    fn bad(&self, p: u32, q: u32) -> bool {
        self.l.is_accepting(p)
            && self.l2.is_accepting(q)
            && self
                .gamma
                .iter()
                .any(|s| self.l2.is_accepting(self.l2.next(q, s)) && !self.l.is_accepting(self.l.next(p, s)))
    }

    fn exists(&mut self, p: u32, q: u32) -> bool {
        if let Some(&b) = self.memo.get(&(p, q)) {
            return b;
        }
        let mut seen = HashSet::from([(p, q)]);
        let mut queue = VecDeque::from([(p, q)]);
        let mut found = false;
        while let Some((x, y)) = queue.pop_front() {
            if self.bad(x, y) {
                found = true;
                break;
            }
            for s in self.moves.iter() {
                let next = (self.l.next(x, s), self.l2.next(y, s));
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        self.memo.insert((p, q), found);
        found
    }

    fn holds(&mut self, w: &[Symbol]) -> bool {
        let (mut p, mut q) = (self.l.initial(), self.l2.initial());
        for i in 0..=w.len() {
            if self.l.is_accepting(p) && self.l2.is_accepting(q) && self.exists(p, q) {
                return true;
            }
            if i < w.len() {
                p = self.l.next(p, w[i]);
                q = self.l2.next(q, w[i]);
            }
        }
        false
    }
}

/// Whether `w ∈ Unc(L, L2, Γ, Δ)` by its definition.
pub fn unc_holds(l: &RegularLanguage, l2: &RegularLanguage, gamma: SymbolSet, delta: SymbolSet, w: &[Symbol]) -> bool {
    UncWitness::new(l, l2, gamma, delta).holds(w)
}

/// Compares `formula(L, L2, Γ)` with the MissExt definition on every word up
/// to `max_len`, returning the shortest disagreement.
pub fn check_miss_ext_formula(
    formula: impl Fn(&RegularLanguage, &RegularLanguage, SymbolSet) -> Result<RegularLanguage>,
    l: &RegularLanguage,
    l2: &RegularLanguage,
    gamma: SymbolSet,
    max_len: usize,
) -> Result<Option<(Word, bool, bool)>> {
    let got = formula(l, l2, gamma)?;
    for w in words(l.alphabet(), max_len)? {
        let expected = miss_ext_holds(l, l2, gamma, &w);
        if got.accepts(&w) != expected {
            return Ok(Some((w, expected, !expected)));
        }
    }
    Ok(None)
}

/// Compares `formula(L, L2, Γ, Δ)` with the Unc definition on every word up
/// to `max_len`, returning the shortest disagreement.
pub fn check_unc_formula(
    formula: impl Fn(&RegularLanguage, &RegularLanguage, SymbolSet, SymbolSet) -> Result<RegularLanguage>,
    l: &RegularLanguage,
    l2: &RegularLanguage,
    gamma: SymbolSet,
    delta: SymbolSet,
    max_len: usize,
) -> Result<Option<(Word, bool, bool)>> {
    let got = formula(l, l2, gamma, delta)?;
    let mut oracle = UncWitness::new(l, l2, gamma, delta);
    for w in words(l.alphabet(), max_len)? {
        let expected = oracle.holds(&w);
        if got.accepts(&w) != expected {
            return Ok(Some((w, expected, !expected)));
        }
    }
    Ok(None)
}

pub(super) fn miss_ext_suite(cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    suite(CheckKind::MissExt, cfg, |rng, _| {
        let a = random::alphabet(rng);
        let l = random::dfa(rng, &a, cfg.max_states);
        let l2 = random::dfa(rng, &a, cfg.max_states);
        let gamma = random::symbol_set(rng, &a);
        Ok(check_miss_ext_formula(miss_ext, &l, &l2, gamma, cfg.max_word_len)?
            .map(|(w, e, g)| (a.format_word(&w), member(e), member(g))))
    })
}

pub(super) fn unc_suite(cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    let mut bound = 0;
    let mut report = suite(CheckKind::Unc, cfg, |rng, _| {
        let a = random::alphabet(rng);
        let l = random::dfa(rng, &a, cfg.max_states);
        let l2 = random::dfa(rng, &a, cfg.max_states);
        let gamma = random::symbol_set(rng, &a);
        let delta = random::symbol_set(rng, &a);
        bound = bound.max(l.num_states() * l2.num_states());
        Ok(check_unc_formula(unc, &l, &l2, gamma, delta, cfg.max_word_len)?
            .map(|(w, e, g)| (a.format_word(&w), member(e), member(g))))
    })?;
    report.witness_bound = Some(bound);
    Ok(report)
}

/// Heyting laws for one random triple.
fn exponential_case(rng: &mut ChaCha8Rng, cfg: &BoundedCheckConfig) -> Result<Option<Mismatch>> {
    let a = random::alphabet(rng);
    let io = random::signature(rng, &a);
    let l = random::receptive(rng, &a, io, cfg.max_states);
    let l2 = random::receptive(rng, &a, io, cfg.max_states);
    let e = l.exponential(&l2)?;
    let (ll, ll2, el) = (l.language(), l2.language(), e.language());

    let def = exponential_definitional(ll, ll2)?;
    if let Some(m) = language_mismatch(&a, "exponential", &def, el)? {
        return Ok(Some(m));
    }
    for w in words(&a, cfg.max_word_len)? {
        let expected = (0..=w.len()).all(|i| !ll2.accepts(&w[..i]) || ll.accepts(&w[..i]));
        if el.accepts(&w) != expected {
            return Ok(Some((a.format_word(&w), member(expected), member(!expected))));
        }
    }
    if let Some(m) = inclusion_mismatch(&a, "L⊆(L'→L)", ll, el)? {
        return Ok(Some(m));
    }

    let l3 = random::receptive(rng, &a, io, cfg.max_states);
    let thirds = [l3.clone(), e.clone(), l.clone(), l3.meet(&e)?, l3.join(&e)?];
    for x in &thirds {
        let lhs = x.meet(&l2)?.leq(&l)?;
        let rhs = x.leq(&e)?;
        if lhs != rhs {
            let witness = if lhs {
                x.language().subset_counterexample(el)?
            } else {
                x.language().intersect(ll2)?.subset_counterexample(ll)?
            };
            let word = witness.map(|w| a.format_word(&w)).unwrap_or_else(|| "-".into());
            return Ok(Some((word, format!("adjunction:{lhs}"), format!("adjunction:{rhs}"))));
        }
    }
    Ok(None)
}

pub(super) fn exponential_suite(cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    suite(CheckKind::Exponential, cfg, |rng, _| exponential_case(rng, cfg))
}

pub(super) fn receptive_quotient_case(
    rng: &mut ChaCha8Rng,
    cfg: &BoundedCheckConfig,
    samples: usize,
) -> Result<Option<Mismatch>> {
    let a = random::alphabet(rng);
    let (l, l2) = random::quotient_operands(rng, &a, cfg.max_states)?;
    let q = l.quotient(&l2)?;
    let ir = q.io().inputs();

    let back = q.compose(&l2)?;
    if let Some(m) = inclusion_mismatch(&a, "(L/L')×L'⊆L", back.language(), l.language())? {
        return Ok(Some(m));
    }
    let largest = receptive_interior(&l.language().union(&l2.language().complement())?, ir)?;
    if let Some(m) = language_mismatch(&a, "largest-solution", &largest, q.language())? {
        return Ok(Some(m));
    }
    for i in 0..samples {
        let r = random::receptive(rng, &a, q.io(), cfg.max_states);
        let candidate = if i % 2 == 0 { r } else { r.join(&q)? };
        if candidate.compose(&l2)?.leq(&l)? {
            if let Some(m) = inclusion_mismatch(&a, "maximality", candidate.language(), q.language())? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

pub(super) fn receptive_quotient_suite(cfg: &BoundedCheckConfig, samples: usize) -> Result<CheckReport> {
    suite(CheckKind::ReceptiveQuotient, cfg, |rng, _| receptive_quotient_case(rng, cfg, samples))
}

/// Composition soundness for one random compatible pair; `None` when the
/// sampled pair is incompatible.
fn interface_compose_case(rng: &mut ChaCha8Rng, cfg: &BoundedCheckConfig) -> Result<Option<Option<Mismatch>>> {
    let a = random::alphabet(rng);
    let (io1, io2) = random::compatible_signatures(rng, &a);
    let c1 = InterfaceHypercontract::from_s(random::prefix_closed(rng, &a, cfg.max_states), io1)?;
    let c2 = InterfaceHypercontract::from_s(random::prefix_closed(rng, &a, cfg.max_states), io2)?;
    let out = c1.compose(&c2)?;
    if out != c2.compose(&c1)? {
        return Ok(Some(Some(no_word("commutativity", "equal", "different"))));
    }
    let Outcome::Compatible(r) = out else {
        return Ok(None);
    };
    let (m1, m2) = (c1.max_implementation(), c2.max_implementation());
    let (e1, e2) = (c1.max_environment(), c2.max_environment());
    let (er, mr) = (r.max_environment(), r.max_implementation());
    let conditions = [
        ("M_S×M_S'⊆M_R", m1.intersect(m2)?, mr.clone()),
        ("E_R×M_S⊆E_S'", er.intersect(m1)?, e2.clone()),
        ("E_R×M_S'⊆E_S", er.intersect(m2)?, e1.clone()),
    ];
    for (what, sub, sup) in &conditions {
        if let Some(m) = inclusion_mismatch(&a, what, sub, sup)? {
            return Ok(Some(Some(m)));
        }
    }

    // quotient: a target over (I, O) and a divisor with I ⊆ I'
    let target = InterfaceHypercontract::from_s(random::prefix_closed(rng, &a, cfg.max_states), io1)?;
    let io_div = IoSignature::from_inputs(&a, io1.inputs().union(random::subset_of(rng, io1.outputs())))?;
    let divisor = InterfaceHypercontract::from_s(random::prefix_closed(rng, &a, cfg.max_states), io_div)?;
    if let Outcome::Compatible(q) = target.quotient(&divisor)? {
        if let Outcome::Compatible(back) = divisor.compose(&q)? {
            if !back.refines(&target)? {
                return Ok(Some(Some(no_word("C'∥(C/C')≤C", true, false))));
            }
        }
    }
    Ok(Some(None))
}

pub(super) fn interface_compose_suite(cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    let kind = CheckKind::InterfaceCompose;
    let mut checked = 0;
    let mut attempt = 0;
    while checked < cfg.num_cases && attempt < cfg.num_cases.saturating_mul(50).max(1) {
        let mut rng = cfg.rng(kind, attempt);
        attempt += 1;
        match interface_compose_case(&mut rng, cfg)? {
            None => continue,
            Some(None) => checked += 1,
            Some(Some((word, expected, got))) => {
                return Ok(CheckReport {
                    kind,
                    cases: checked + 1,
                    witness_bound: None,
                    failure: Some(Failure {
                        case: attempt - 1,
                        word,
                        expected,
                        got,
                    }),
                })
            }
        }
    }
    let failure = (checked < cfg.num_cases).then(|| Failure {
        case: attempt,
        word: "-".into(),
        expected: format!("compatible-pairs:{}", cfg.num_cases),
        got: format!("compatible-pairs:{checked}"),
    });
    Ok(CheckReport {
        kind,
        cases: checked,
        witness_bound: None,
        failure,
    })
}

fn ia_equivalence_case(rng: &mut ChaCha8Rng, case: usize, cfg: &BoundedCheckConfig) -> Result<Option<Mismatch>> {
    let a = random::alphabet(rng);
    let io = random::signature(rng, &a);
    let a1 = random::interface_automaton(rng, &a, io, cfg.max_states, 0.6);
    let a2 = if case % 2 == 0 {
        random::interface_automaton(rng, &a, io, cfg.max_states, 0.6)
    } else {
        random::perturb(rng, &a1, 0.3, 0.2)
    };
    let (k1, k2) = (a1.to_contract()?, a2.to_contract()?);
    for (x, y, kx, ky, what) in [(&a1, &a2, &k1, &k2, "A1≤A2"), (&a2, &a1, &k2, &k1, "A2≤A1")] {
        let ia = x.refines(y)?;
        let contract = kx.refines(ky)?;
        if ia != contract {
            return Ok(Some(no_word(what, format!("contract={contract}"), format!("ia={ia}"))));
        }
    }

    let (io1, io2) = random::compatible_signatures(rng, &a);
    let b1 = random::interface_automaton(rng, &a, io1, cfg.max_states, 0.7);
    let b2 = random::interface_automaton(rng, &a, io2, cfg.max_states, 0.7);
    let ia = match b1.compose(&b2)?.result {
        Outcome::Compatible(c) => Outcome::Compatible(c.to_contract()?),
        Outcome::Incompatible => Outcome::Incompatible,
    };
    let contract = b1.to_contract()?.compose(&b2.to_contract()?)?;
    match (&ia, &contract) {
        (Outcome::Incompatible, Outcome::Incompatible) => {}
        (Outcome::Compatible(x), Outcome::Compatible(y)) => {
            for (what, p, q) in [
                ("S", x.s(), y.s()),
                ("E", x.max_environment(), y.max_environment()),
                ("M", x.max_implementation(), y.max_implementation()),
            ] {
                if let Some(m) = language_mismatch(&a, what, q, p)? {
                    return Ok(Some(m));
                }
            }
        }
        _ => {
            return Ok(Some(no_word(
                "compose",
                compat_name(contract.is_compatible()),
                compat_name(ia.is_compatible()),
            )))
        }
    }
    Ok(None)
}

fn compat_name(b: bool) -> &'static str {
    if b {
        "compatible"
    } else {
        "incompatible"
    }
}

pub(super) fn ia_equivalence_suite(cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    suite(CheckKind::IaEquivalence, cfg, |rng, k| ia_equivalence_case(rng, k, cfg))
}

fn format_general(h: &GeneralCompset) -> String {
    let parts: Vec<String> = h.members().map(|m| h.universe().format(m)).collect();
    format!("{{{}}}", parts.join(","))
}

fn compset_mismatch(what: &str, expected: &GeneralCompset, got: &GeneralCompset) -> Option<Mismatch> {
    (expected != got).then(|| no_word(what, format_general(expected), format_general(got)))
}

/// Conic operations against the explicit engine, plus the quotient
/// adjunction over every downset `x`.
fn conic_pair_check(h: &ConicCompset, h2: &ConicCompset, downsets: &[ConicCompset]) -> Result<Option<Mismatch>> {
    let (g, g2) = (h.to_general()?, h2.to_general()?);
    let q = h.quotient(h2)?;
    if let Some(m) = compset_mismatch("quotient", &g.quotient(&g2)?, &q.to_general()?) {
        return Ok(Some(m));
    }
    if let Some(m) = compset_mismatch("compose", &g.compose(&g2)?, &h.compose(h2)?.to_general()?) {
        return Ok(Some(m));
    }
    if let Some(m) = compset_mismatch("join", &g.join(&g2)?, &h.join(h2)?.to_general()?) {
        return Ok(Some(m));
    }
    if let Some(m) = compset_mismatch("meet", &g.meet(&g2)?, &h.meet(h2)?.to_general()?) {
        return Ok(Some(m));
    }
    if h.leq(h2)? != g.leq(&g2)? {
        return Ok(Some(no_word("leq", g.leq(&g2)?, h.leq(h2)?)));
    }
    if q.k() as u128 > (h.k() as u128).pow(h2.k() as u32) && h2.k() > 0 {
        return Ok(Some(no_word("quotient-size", "≤k^k'", q.k())));
    }
    for x in downsets {
        let lhs = x.compose(h2)?.leq(h)?;
        let rhs = x.leq(&q)?;
        if lhs != rhs {
            return Ok(Some((x.format(), format!("adjunction:{lhs}"), format!("adjunction:{rhs}"))));
        }
    }
    Ok(None)
}

fn all_conic(universe: &Arc<Universe>) -> Result<Vec<ConicCompset>> {
    GeneralCompset::downsets(universe.clone())?
        .iter()
        .map(ConicCompset::from_general)
        .collect()
}

pub(super) fn conic_quotient_suite(cfg: &BoundedCheckConfig) -> Result<CheckReport> {
    let universes: Vec<Arc<Universe>> = (1..=4).map(Universe::numbered).collect::<Result<_>>()?;
    let downsets: Vec<Vec<ConicCompset>> = universes.iter().map(all_conic).collect::<Result<_>>()?;
    suite(CheckKind::ConicQuotient, cfg, |rng, _| {
        let n = rng.gen_range(2..=4);
        let u = &universes[n - 1];
        let h = random::conic(rng, u, 3);
        let h2 = random::conic(rng, u, 3);
        conic_pair_check(&h, &h2, &downsets[n - 1])
    })
}

fn contract_pair_check(c1: &BehavioralHypercontract, c2: &BehavioralHypercontract) -> Result<Option<Mismatch>> {
    let (g1, g2) = (c1.to_general()?, c2.to_general()?);
    let pairs = [
        ("contract-compose", g1.compose(&g2)?, c1.compose(c2)?),
        ("contract-quotient", g1.quotient(&g2)?, c1.quotient(c2)?),
        ("contract-meet", g1.meet(&g2)?, c1.meet(c2)?),
        ("contract-join", g1.join(&g2)?, c1.join(c2)?),
    ];
    for (what, expected, got) in pairs {
        let got = got.to_general()?;
        if let Some(m) = compset_mismatch(&format!("{what}.env"), &expected.env, &got.env) {
            return Ok(Some(m));
        }
        if let Some(m) = compset_mismatch(&format!("{what}.impl"), &expected.imp, &got.imp) {
            return Ok(Some(m));
        }
    }
    if c1.refines(c2)? != g1.refines(&g2)? {
        return Ok(Some(no_word("contract-refines", g1.refines(&g2)?, c1.refines(c2)?)));
    }
    Ok(None)
}

fn exhaustive_report(kind: CheckKind, cases: usize, failure: Option<(usize, Mismatch)>) -> CheckReport {
    CheckReport {
        kind,
        cases,
        witness_bound: None,
        failure: failure.map(|(case, (word, expected, got))| Failure {
            case,
            word,
            expected,
            got,
        }),
    }
}

/// Every conic operation against the explicit engine over a universe of
/// `n ≤ 4` behaviors: all pairs of compsets with at most `max_k` maximals,
/// the quotient adjunction over every conic `x`, all pairs of contracts
/// whose parts have at most one maximal, and 2000 seeded pairs of contracts
/// whose parts have at most `max_k`.
pub fn conic_exhaustive(n: usize, max_k: usize) -> Result<CheckReport> {
    let kind = CheckKind::ConicExhaustive;
    let u = Universe::numbered(n)?;
    let downsets = all_conic(&u)?;
    let small: Vec<&ConicCompset> = downsets.iter().filter(|h| h.k() <= max_k).collect();
    let mut cases = 0;
    for h in &small {
        for h2 in &small {
            if let Some(m) = conic_pair_check(h, h2, &downsets)? {
                return Ok(exhaustive_report(kind, cases + 1, Some((cases, m))));
            }
            cases += 1;
        }
    }
    let principal: Vec<&ConicCompset> = downsets.iter().filter(|h| h.k() <= 1).collect();
    let mut contracts = Vec::new();
    for e in &principal {
        for i in &principal {
            contracts.push(BehavioralHypercontract::new((*e).clone(), (*i).clone())?);
        }
    }
    for c1 in &contracts {
        for c2 in &contracts {
            if let Some(m) = contract_pair_check(c1, c2)? {
                return Ok(exhaustive_report(kind, cases + 1, Some((cases, m))));
            }
            cases += 1;
        }
    }
    let cfg = BoundedCheckConfig::default();
    for k in 0..2000 {
        let mut rng = cfg.rng(kind, k);
        let mut pick = || small[rng.gen_range(0..small.len())].clone();
        let c1 = BehavioralHypercontract::new(pick(), pick())?;
        let c2 = BehavioralHypercontract::new(pick(), pick())?;
        if let Some(m) = contract_pair_check(&c1, &c2)? {
            return Ok(exhaustive_report(kind, cases + 1, Some((cases, m))));
        }
        cases += 1;
    }
    Ok(exhaustive_report(kind, cases, None))
}

/// Over a universe of `n ≤ 3` behaviors: every compset is co-convex under
/// intersection, downsets are flat, and convexity, co-convexity and flatness
/// are preserved by composition of every pair.
pub fn convexity_exhaustive(n: usize) -> Result<CheckReport> {
    let kind = CheckKind::Convexity;
    let u = Universe::numbered(n)?;
    let slots = 1u32 << n;
    let all: Vec<GeneralCompset> = (0..1u64 << slots)
        .map(|raw| GeneralCompset::from_raw(u.clone(), raw))
        .collect::<Result<_>>()?;
    let reports: Vec<_> = all.iter().map(|h| h.convexity()).collect();
    let mut cases = 0;
    for (h, r) in all.iter().zip(&reports) {
        if !r.coconvex {
            return Ok(exhaustive_report(kind, cases + 1, Some((cases, no_word("co-convex", format_general(h), false)))));
        }
        if h.is_downward_closed() && !r.flat {
            return Ok(exhaustive_report(kind, cases + 1, Some((cases, no_word("flat", format_general(h), false)))));
        }
        cases += 1;
    }
    for (h, r) in all.iter().zip(&reports) {
        for (h2, r2) in all.iter().zip(&reports) {
            let rc = h.compose(h2)?.convexity();
            let preserved = (!(r.convex && r2.convex) || rc.convex)
                && (!(r.coconvex && r2.coconvex) || rc.coconvex)
                && (!(r.flat && r2.flat) || rc.flat);
            if !preserved {
                let word = format!("{}×{}", format_general(h), format_general(h2));
                return Ok(exhaustive_report(kind, cases + 1, Some((cases, (word, "preserved".into(), "lost".into())))));
            }
            cases += 1;
        }
    }
    Ok(exhaustive_report(kind, cases, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn io_alpha() -> Arc<Alphabet> {
        Alphabet::new(["i", "o"]).unwrap()
    }

    #[test]
    fn miss_ext_example_passes() {
        let a = io_alpha();
        let istar = RegularLanguage::star(a.clone(), a.set(["i"]).unwrap());
        let o = a.set(["o"]).unwrap();
        assert_eq!(check_miss_ext_formula(miss_ext, &istar, &istar, o, 4).unwrap(), None);
    }

    #[test]
    fn unc_with_empty_gamma_passes() {
        let a = io_alpha();
        let top = RegularLanguage::universal(a.clone());
        let eps = RegularLanguage::epsilon(a.clone());
        assert_eq!(
            check_unc_formula(unc, &eps, &top, SymbolSet::EMPTY, a.all(), 5).unwrap(),
            None
        );
    }

    #[test]
    fn dropping_the_suffix_closure_is_caught() {
        let a = io_alpha();
        let istar = RegularLanguage::star(a.clone(), a.set(["i"]).unwrap());
        let o = a.set(["o"]).unwrap();
        let corrupted = |l: &RegularLanguage, l2: &RegularLanguage, g: SymbolSet| {
            l.intersect(l2)?.concat_symbol_class(g)?.difference(l2)
        };
        let (w, expected, got) = check_miss_ext_formula(corrupted, &istar, &istar, o, 4).unwrap().unwrap();
        assert_eq!(a.format_word(&w), "oi");
        assert!(expected && !got);
    }
}
