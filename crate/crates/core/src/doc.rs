//! Serializable document forms of languages, contracts, interface automata
//! and behavioral models.
//!
//! Emitted documents are canonical: states are named `q0, q1, …` in the
//! canonical BFS order and every list has a fixed order, so equal values
//! serialize to identical bytes.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::automata::{IaComposition, InterfaceAutomaton};
use crate::behavioral::{AgContract, BehavioralHypercontract, Component, ConicCompset, Universe};
use crate::error::{Error, Result};
use crate::iface::InterfaceHypercontract;
use crate::lang::{Alphabet, IoSignature, RegularLanguage, SymbolSet};
use crate::receptive::ReceptiveLanguage;
use crate::Outcome;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidDocument(msg.into())
}

fn state_index(states: &[String]) -> Result<HashMap<&str, u32>> {
    let mut index = HashMap::with_capacity(states.len());
    for (i, s) in states.iter().enumerate() {
        if index.insert(s.as_str(), i as u32).is_some() {
            return Err(invalid(format!("duplicate state `{s}`")));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<&str, u32>, name: &str) -> Result<u32> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| invalid(format!("unknown state `{name}`")))
}

fn symbol_names(alphabet: &Alphabet, set: SymbolSet) -> Vec<String> {
    set.iter().map(|s| alphabet.name(s).to_string()).collect()
}

/// `{"alphabet", "states", "initial", "accepting", "transitions"}`, with an
/// optional `"inputs"` list for receptive languages.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageDoc {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub accepting: Vec<String>,
    pub transitions: Vec<(String, String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<String>>,
}

impl LanguageDoc {
    pub fn from_language(l: &RegularLanguage) -> Self {
        let l = l.canonicalize();
        let a = l.alphabet();
        let name = |q: u32| format!("q{q}");
        let n = l.num_states() as u32;
        Self {
            alphabet: a.symbols().to_vec(),
            states: (0..n).map(name).collect(),
            initial: name(l.initial()),
            accepting: (0..n).filter(|&q| l.is_accepting(q)).map(name).collect(),
            transitions: (0..n)
                .flat_map(|q| a.iter().map(move |s| (q, s)))
                .map(|(q, s)| (name(q), a.name(s).to_string(), name(l.next(q, s))))
                .collect(),
            inputs: None,
        }
    }

    pub fn from_receptive(l: &ReceptiveLanguage) -> Self {
        Self {
            inputs: Some(symbol_names(l.alphabet(), l.io().inputs())),
            ..Self::from_language(l.language())
        }
    }

    pub fn alphabet(&self) -> Result<Arc<Alphabet>> {
        Alphabet::new(self.alphabet.iter().cloned())
    }

    /// Partial transition functions are completed with a rejecting sink
    /// when `complete_partial` is set and rejected otherwise.
    pub fn to_language(&self, complete_partial: bool) -> Result<RegularLanguage> {
        let alphabet = self.alphabet()?;
        self.to_language_over(&alphabet, complete_partial)
    }

    fn to_language_over(&self, alphabet: &Arc<Alphabet>, complete_partial: bool) -> Result<RegularLanguage> {
        let index = state_index(&self.states)?;
        let initial = lookup(&index, &self.initial)?;
        let accepting: Vec<u32> = self.accepting.iter().map(|q| lookup(&index, q)).collect::<Result<_>>()?;
        let mut seen = HashMap::new();
        let mut edges = Vec::with_capacity(self.transitions.len());
        for (p, s, q) in &self.transitions {
            let edge = (lookup(&index, p)?, alphabet.symbol(s)?, lookup(&index, q)?);
            if let Some(&other) = seen.get(&(edge.0, edge.1)) {
                if other != edge.2 {
                    return Err(Error::Nondeterministic {
                        state: p.clone(),
                        symbol: s.clone(),
                    });
                }
            }
            seen.insert((edge.0, edge.1), edge.2);
            edges.push(edge);
        }
        if !complete_partial {
            for p in &self.states {
                for s in alphabet.iter() {
                    if !seen.contains_key(&(index[p.as_str()], s)) {
                        return Err(Error::Incomplete {
                            state: p.clone(),
                            symbol: alphabet.name(s).to_string(),
                        });
                    }
                }
            }
        }
        Ok(
            RegularLanguage::from_transitions(alphabet.clone(), self.states.len(), initial, &accepting, &edges, true)?
                .canonicalize(),
        )
    }

    pub fn inputs(&self, alphabet: &Alphabet) -> Result<SymbolSet> {
        let names = self
            .inputs
            .as_ref()
            .ok_or_else(|| invalid("missing `inputs` list"))?;
        alphabet.set(names.iter().map(String::as_str))
    }

    pub fn to_receptive(&self, complete_partial: bool) -> Result<ReceptiveLanguage> {
        let l = self.to_language(complete_partial)?;
        let io = IoSignature::from_inputs(l.alphabet(), self.inputs(l.alphabet())?)?;
        ReceptiveLanguage::new(l, io)
    }
}

/// Input form of an interface hypercontract: `{"S": language, "inputs"}`.
/// Derived fields of emitted documents are ignored on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractDoc {
    #[serde(rename = "S")]
    pub s: LanguageDoc,
    pub inputs: Vec<String>,
}

impl ContractDoc {
    pub fn to_contract(&self, complete_partial: bool) -> Result<InterfaceHypercontract> {
        let s = self.s.to_language(complete_partial)?;
        let inputs = s.alphabet().set(self.inputs.iter().map(String::as_str))?;
        let io = IoSignature::from_inputs(s.alphabet(), inputs)?;
        InterfaceHypercontract::from_s(s, io)
    }
}

/// Emitted form of an interface hypercontract with its derived languages.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractOut {
    pub compatible: bool,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<LanguageDoc>,
    #[serde(rename = "E", skip_serializing_if = "Option::is_none")]
    pub e: Option<LanguageDoc>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<LanguageDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outputs: Option<Vec<String>>,
}

impl ContractOut {
    pub fn new(c: &InterfaceHypercontract) -> Self {
        let a = c.alphabet();
        Self {
            compatible: true,
            s: Some(LanguageDoc::from_language(c.s())),
            e: Some(LanguageDoc::from_language(c.max_environment())),
            m: Some(LanguageDoc::from_language(c.max_implementation())),
            inputs: Some(symbol_names(a, c.io().inputs())),
            outputs: Some(symbol_names(a, c.io().outputs())),
        }
    }

    pub fn from_outcome(c: &Outcome<InterfaceHypercontract>) -> Self {
        match c {
            Outcome::Compatible(c) => Self::new(c),
            Outcome::Incompatible => Self {
                compatible: false,
                s: None,
                e: None,
                m: None,
                inputs: None,
                outputs: None,
            },
        }
    }
}

/// `{"alphabet", "inputs", "states", "initial", "transitions"}`; the
/// transition relation may be partial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDoc {
    pub alphabet: Vec<String>,
    pub inputs: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub transitions: Vec<(String, String, String)>,
}

impl AutomatonDoc {
    pub fn to_automaton(&self) -> Result<InterfaceAutomaton> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let inputs = alphabet.set(self.inputs.iter().map(String::as_str))?;
        let io = IoSignature::from_inputs(&alphabet, inputs)?;
        let index = state_index(&self.states)?;
        let initial = lookup(&index, &self.initial)?;
        let edges: Vec<_> = self
            .transitions
            .iter()
            .map(|(p, s, q)| Ok((lookup(&index, p)?, alphabet.symbol(s)?, lookup(&index, q)?)))
            .collect::<Result<_>>()?;
        InterfaceAutomaton::from_edges(alphabet, io, self.states.clone(), initial, &edges)
    }

    pub fn from_automaton(a: &InterfaceAutomaton) -> Self {
        let sigma = a.alphabet();
        let names = a.state_names();
        Self {
            alphabet: sigma.symbols().to_vec(),
            inputs: symbol_names(sigma, a.io().inputs()),
            states: names.to_vec(),
            initial: names[a.initial() as usize].clone(),
            transitions: a
                .transitions()
                .into_iter()
                .map(|(p, s, q)| (names[p as usize].clone(), sigma.name(s).to_string(), names[q as usize].clone()))
                .collect(),
        }
    }
}

/// Emitted form of an automaton composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionOut {
    pub compatible: bool,
    pub pruned_states: Vec<String>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub automaton: Option<AutomatonDoc>,
}

impl CompositionOut {
    pub fn new(c: &IaComposition) -> Self {
        Self {
            compatible: c.result.is_compatible(),
            pruned_states: c.pruned_states.clone(),
            automaton: c.result.as_ref().compatible().map(AutomatonDoc::from_automaton),
        }
    }
}

/// A component given by name or inline as a list of behaviors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentRef {
    Name(String),
    Inline(Vec<String>),
}

/// A conic compset given by name or inline as a list of components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CompsetRef {
    Name(String),
    Inline(Vec<ComponentRef>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BehavioralContractDoc {
    pub env: CompsetRef,
    #[serde(rename = "impl")]
    pub imp: CompsetRef,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgDoc {
    #[serde(rename = "A")]
    pub a: ComponentRef,
    #[serde(rename = "G")]
    pub g: ComponentRef,
}

/// `{"universe", "components", "compsets", "contracts", "ag"}`; every map
/// is optional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BehavioralDoc {
    pub universe: Vec<String>,
    #[serde(default)]
    pub components: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub compsets: BTreeMap<String, Vec<ComponentRef>>,
    #[serde(default)]
    pub contracts: BTreeMap<String, BehavioralContractDoc>,
    #[serde(default)]
    pub ag: BTreeMap<String, AgDoc>,
}

/// A named operand of a behavioral document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BehavioralItem {
    Compset(ConicCompset),
    Contract(BehavioralHypercontract),
    Ag(AgContract),
}

/// A behavioral document resolved against its universe.
#[derive(Clone, Debug)]
pub struct BehavioralModel {
    universe: Arc<Universe>,
    doc: BehavioralDoc,
}

impl BehavioralModel {
    pub fn new(doc: BehavioralDoc) -> Result<Self> {
        let universe = Universe::new(doc.universe.iter().cloned())?;
        let model = Self { universe, doc };
        for name in model.doc.compsets.keys() {
            model.compset(name)?;
        }
        for name in model.doc.contracts.keys() {
            model.contract(name)?;
        }
        for name in model.doc.ag.keys() {
            model.ag(name)?;
        }
        Ok(model)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    fn component_ref(&self, r: &ComponentRef) -> Result<Component> {
        match r {
            ComponentRef::Name(n) => {
                let labels = self
                    .doc
                    .components
                    .get(n)
                    .ok_or_else(|| invalid(format!("unknown component `{n}`")))?;
                self.universe.component(labels.iter().map(String::as_str))
            }
            ComponentRef::Inline(labels) => self.universe.component(labels.iter().map(String::as_str)),
        }
    }

    fn compset_ref(&self, r: &CompsetRef) -> Result<ConicCompset> {
        match r {
            CompsetRef::Name(n) => self.compset(n),
            CompsetRef::Inline(cs) => self.components(cs),
        }
    }

    fn components(&self, cs: &[ComponentRef]) -> Result<ConicCompset> {
        let cs: Vec<Component> = cs.iter().map(|c| self.component_ref(c)).collect::<Result<_>>()?;
        ConicCompset::normalize(self.universe.clone(), cs)
    }

    pub fn compset(&self, name: &str) -> Result<ConicCompset> {
        let cs = self
            .doc
            .compsets
            .get(name)
            .ok_or_else(|| invalid(format!("unknown compset `{name}`")))?;
        self.components(cs)
    }

    pub fn contract(&self, name: &str) -> Result<BehavioralHypercontract> {
        let c = self
            .doc
            .contracts
            .get(name)
            .ok_or_else(|| invalid(format!("unknown contract `{name}`")))?;
        BehavioralHypercontract::new(self.compset_ref(&c.env)?, self.compset_ref(&c.imp)?)
    }

    pub fn ag(&self, name: &str) -> Result<AgContract> {
        let c = self
            .doc
            .ag
            .get(name)
            .ok_or_else(|| invalid(format!("unknown ag contract `{name}`")))?;
        AgContract::new(self.universe.clone(), self.component_ref(&c.a)?, self.component_ref(&c.g)?)
    }

    /// Looks a name up among contracts, AG contracts and compsets, in that
    /// order. A name defined in more than one section is rejected.
    pub fn item(&self, name: &str) -> Result<BehavioralItem> {
        let hits = [
            self.doc.contracts.contains_key(name),
            self.doc.ag.contains_key(name),
            self.doc.compsets.contains_key(name),
        ];
        match hits {
            [true, false, false] => self.contract(name).map(BehavioralItem::Contract),
            [false, true, false] => self.ag(name).map(BehavioralItem::Ag),
            [false, false, true] => self.compset(name).map(BehavioralItem::Compset),
            [false, false, false] => Err(invalid(format!("unknown name `{name}`"))),
            _ => Err(invalid(format!("name `{name}` is defined more than once"))),
        }
    }

    pub fn component_out(&self, c: Component) -> Vec<String> {
        self.universe.names(c)
    }

    pub fn compset_out(&self, h: &ConicCompset) -> Vec<Vec<String>> {
        h.maximals().iter().map(|&c| self.component_out(c)).collect()
    }
}

/// Emitted form of a behavioral hypercontract: the maximal components of its
/// environments and implementations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BehavioralContractOut {
    pub env: Vec<Vec<String>>,
    #[serde(rename = "impl")]
    pub imp: Vec<Vec<String>>,
}

impl BehavioralContractOut {
    pub fn new(model: &BehavioralModel, c: &BehavioralHypercontract) -> Self {
        Self {
            env: model.compset_out(c.env()),
            imp: model.compset_out(c.imp()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgOut {
    #[serde(rename = "A")]
    pub a: Vec<String>,
    #[serde(rename = "G")]
    pub g: Vec<String>,
}

impl AgOut {
    pub fn new(model: &BehavioralModel, c: &AgContract) -> Self {
        Self {
            a: model.component_out(c.assumption()),
            g: model.component_out(c.guarantee()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(transitions: &[(&str, &str, &str)]) -> LanguageDoc {
        LanguageDoc {
            alphabet: vec!["a".into(), "b".into()],
            states: vec!["x".into(), "y".into()],
            initial: "x".into(),
            accepting: vec!["x".into()],
            transitions: transitions
                .iter()
                .map(|(p, s, q)| (p.to_string(), s.to_string(), q.to_string()))
                .collect(),
            inputs: None,
        }
    }

    #[test]
    fn partial_documents_need_completion() {
        let d = doc(&[("x", "a", "y")]);
        assert!(matches!(d.to_language(false), Err(Error::Incomplete { .. })));
        let l = d.to_language(true).unwrap();
        assert_eq!(l, RegularLanguage::epsilon(l.alphabet().clone()));
    }

    #[test]
    fn rejects_malformed_documents() {
        let nondet = doc(&[("x", "a", "y"), ("x", "a", "x")]);
        assert!(matches!(nondet.to_language(true), Err(Error::Nondeterministic { .. })));
        let unknown = doc(&[("x", "c", "y")]);
        assert!(matches!(unknown.to_language(true), Err(Error::UnknownSymbol(_))));
        let mut bad_initial = doc(&[]);
        bad_initial.initial = "z".into();
        assert!(bad_initial.to_language(true).is_err());
    }

    #[test]
    fn emitted_documents_round_trip() {
        let d = doc(&[("x", "a", "x"), ("x", "b", "y"), ("y", "a", "y"), ("y", "b", "y")]);
        let l = d.to_language(false).unwrap();
        let out = LanguageDoc::from_language(&l);
        assert_eq!(out.to_language(false).unwrap(), l);
        assert_eq!(LanguageDoc::from_language(&out.to_language(false).unwrap()), out);
    }
}
