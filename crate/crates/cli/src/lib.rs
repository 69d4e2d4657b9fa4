//! The `hyperc` command line: every algebra operation on JSON documents.

mod output;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use hypercontracts::behavioral::{BehavioralHypercontract, ConicCompset};
use hypercontracts::doc::{
    AgOut, AutomatonDoc, BehavioralContractOut, BehavioralDoc, BehavioralItem, BehavioralModel, CompositionOut,
    ContractDoc, ContractOut, LanguageDoc,
};
use hypercontracts::oracle::{self, BoundedCheckConfig, CheckKind};
use hypercontracts::receptive::{miss_ext, unc};
use hypercontracts::{Alphabet, Error, InterfaceHypercontract, IoSignature, RegularLanguage, SymbolSet};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub use output::{Format, Output};

#[derive(Debug, Parser)]
#[command(name = "hyperc", version, about = "Hypercontract algebra on JSON documents")]
pub struct Cli {
    /// Output format; operations default to json, predicates and oracle
    /// reports to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result to a file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Complete partial language documents with a rejecting sink.
    #[arg(long, global = true)]
    pub auto_trap: bool,
    #[command(subcommand)]
    pub group: Group,
}

#[derive(Debug, Subcommand)]
pub enum Group {
    /// Regular and receptive languages.
    #[command(subcommand)]
    Lang(LangCmd),
    /// Interface hypercontracts.
    #[command(subcommand)]
    Iface(IfaceCmd),
    /// Interface automata.
    #[command(subcommand)]
    Ia(IaCmd),
    /// Behavioral hypercontracts over a finite universe.
    #[command(subcommand)]
    Beh(BehCmd),
    /// Brute-force checks of every closed form.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct Pair {
    pub a: PathBuf,
    pub b: PathBuf,
}

#[derive(Debug, Args)]
pub struct Symbols {
    /// Comma-separated symbol names.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub gamma: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum LangCmd {
    /// Union; the receptive join when both documents carry inputs.
    Union(Pair),
    /// Intersection; the receptive meet when both documents carry inputs.
    Intersect(Pair),
    Difference(Pair),
    Complement { a: PathBuf },
    /// Re-emit a document in canonical form.
    Canonical { a: PathBuf },
    /// Prefix closure.
    PrefixClosure { a: PathBuf },
    /// Re-sign a receptive language over a larger input set.
    Embed {
        a: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        inputs: Vec<String>,
    },
    /// `B → A` of two receptive languages.
    Exponential(Pair),
    Missext {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        gamma: Symbols,
    },
    Unc {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        gamma: Symbols,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        delta: Vec<String>,
    },
    /// `A / B` of two receptive languages.
    Quotient(Pair),
    /// `A × B` of two receptive languages.
    Compose(Pair),
    /// `A ≤ B`: inclusion, with equal signatures for receptive documents.
    Refines(Pair),
}

#[derive(Debug, Subcommand)]
pub enum IfaceCmd {
    /// Build a contract from a prefix-closed language.
    FromS {
        s: PathBuf,
        /// Input symbols; defaults to the document's `inputs`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        inputs: Option<Vec<String>>,
    },
    Compose(Pair),
    Quotient(Pair),
    Mirror { a: PathBuf },
    Refines(Pair),
    /// Whether a contract document is well formed.
    Validate { a: PathBuf },
    /// Whether language `b` is an environment of contract `a`.
    IsEnvironment(Pair),
    /// Whether language `b` is an implementation of contract `a`.
    IsImplementation(Pair),
    /// The identity contract over a comma-separated alphabet.
    Identity {
        #[arg(long, value_delimiter = ',')]
        alphabet: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum IaCmd {
    Compose(Pair),
    Refines(Pair),
    /// The prefix-closed language of an automaton.
    Language { a: PathBuf },
    ToContract { a: PathBuf },
}

#[derive(Debug, Args)]
pub struct Named {
    pub doc: PathBuf,
    pub a: String,
    pub b: String,
}

#[derive(Debug, Subcommand)]
pub enum BehCmd {
    /// Composition of two contracts or two compsets.
    Compose(Named),
    Quotient(Named),
    Meet(Named),
    Join(Named),
    MergeWeak(Named),
    /// Strong merge; AG contracts merge in AG form.
    MergeStrong {
        #[command(flatten)]
        names: Named,
        /// Evaluate by search over all downsets (at most four behaviors).
        #[arg(long)]
        search: bool,
    },
    Refines(Named),
    Mirror { doc: PathBuf, a: String },
    Saturated { doc: PathBuf, a: String },
    AgCompose(Named),
    /// Convexity of a compset.
    Convexity { doc: PathBuf, a: String },
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// `all` or one check kind.
    pub kind: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub cases: usize,
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,
    #[arg(long, default_value_t = 5)]
    pub max_states: usize,
}

/// Every subcommand and the library operations it exposes.
pub const COMMANDS: &[(&str, &[&str])] = &[
    ("lang union", &["RegularLanguage::union", "ReceptiveLanguage::join"]),
    ("lang intersect", &["RegularLanguage::intersect", "ReceptiveLanguage::meet"]),
    ("lang difference", &["RegularLanguage::difference"]),
    ("lang complement", &["RegularLanguage::complement"]),
    ("lang canonical", &["RegularLanguage::canonicalize"]),
    ("lang prefix-closure", &["RegularLanguage::prefix_closure"]),
    ("lang embed", &["ReceptiveLanguage::embed"]),
    ("lang exponential", &["ReceptiveLanguage::exponential"]),
    ("lang missext", &["miss_ext"]),
    ("lang unc", &["unc"]),
    ("lang quotient", &["ReceptiveLanguage::quotient"]),
    ("lang compose", &["ReceptiveLanguage::compose"]),
    ("lang refines", &["RegularLanguage::is_subset", "ReceptiveLanguage::leq"]),
    ("iface from-s", &["InterfaceHypercontract::from_s"]),
    ("iface compose", &["InterfaceHypercontract::compose"]),
    ("iface quotient", &["InterfaceHypercontract::quotient"]),
    ("iface mirror", &["InterfaceHypercontract::mirror"]),
    ("iface refines", &["InterfaceHypercontract::refines"]),
    ("iface validate", &["ContractDoc::to_contract"]),
    ("iface is-environment", &["InterfaceHypercontract::is_environment"]),
    ("iface is-implementation", &["InterfaceHypercontract::is_implementation"]),
    ("iface identity", &["InterfaceHypercontract::identity"]),
    ("ia compose", &["InterfaceAutomaton::compose"]),
    ("ia refines", &["InterfaceAutomaton::refines"]),
    ("ia language", &["InterfaceAutomaton::language"]),
    ("ia to-contract", &["InterfaceAutomaton::to_contract"]),
    ("beh compose", &["BehavioralHypercontract::compose", "ConicCompset::compose"]),
    ("beh quotient", &["BehavioralHypercontract::quotient", "ConicCompset::quotient"]),
    ("beh meet", &["BehavioralHypercontract::meet", "ConicCompset::meet"]),
    ("beh join", &["BehavioralHypercontract::join", "ConicCompset::join"]),
    ("beh merge-weak", &["BehavioralHypercontract::merge_weak", "AgContract::merge_weak"]),
    (
        "beh merge-strong",
        &[
            "BehavioralHypercontract::merge_strong",
            "BehavioralHypercontract::merge_strong_search",
            "AgContract::merge_strong",
        ],
    ),
    ("beh refines", &["BehavioralHypercontract::refines", "ConicCompset::leq"]),
    ("beh mirror", &["BehavioralHypercontract::mirror"]),
    ("beh saturated", &["BehavioralHypercontract::is_saturated"]),
    ("beh ag-compose", &["AgContract::compose"]),
    ("beh convexity", &["GeneralCompset::convexity"]),
    ("oracle", &["oracle::run", "oracle::run_all"]),
];

/// Result of one invocation.
#[derive(Debug)]
pub struct Response {
    pub output: Output,
    pub operation: Value,
}

impl Response {
    /// Process exit status: predicates and oracle runs report falsity with 1.
    pub fn exit_code(&self) -> i32 {
        match &self.output {
            Output::Bool(false) => 1,
            Output::Reports(rs) if rs.iter().any(|r| !r.passed()) => 1,
            _ => 0,
        }
    }

    pub fn render(&self, format: Option<Format>) -> String {
        let format = format.unwrap_or(match self.output {
            Output::Bool(_) | Output::Reports(_) => Format::Text,
            _ => Format::Json,
        });
        match format {
            Format::Text => self.output.text(),
            Format::Json => {
                let mut v = self.output.json();
                if !v.is_object() {
                    v = json!({ "result": v });
                }
                v.as_object_mut()
                    .expect("object")
                    .insert("operation".into(), self.operation.clone());
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

struct Ctx {
    auto_trap: bool,
    command: String,
    hashes: Vec<String>,
    parameters: BTreeMap<String, Value>,
}

impl Ctx {
    fn load<T: DeserializeOwned>(&mut self, path: &Path) -> anyhow::Result<T> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        let canonical = serde_json::to_vec(&value).expect("serializable");
        self.hashes.push(hex::encode(Sha256::digest(&canonical)));
        serde_json::from_value(value).with_context(|| format!("invalid document {}", path.display()))
    }

    fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.into(), value.into());
    }

    fn language(&mut self, path: &Path) -> anyhow::Result<(LanguageDoc, RegularLanguage)> {
        let doc: LanguageDoc = self.load(path)?;
        let l = doc.to_language(self.auto_trap)?;
        Ok((doc, l))
    }

    fn receptive(&mut self, path: &Path) -> anyhow::Result<hypercontracts::ReceptiveLanguage> {
        let doc: LanguageDoc = self.load(path)?;
        Ok(doc.to_receptive(self.auto_trap)?)
    }

    fn contract(&mut self, path: &Path) -> anyhow::Result<InterfaceHypercontract> {
        let doc: ContractDoc = self.load(path)?;
        Ok(doc.to_contract(self.auto_trap)?)
    }

    fn automaton(&mut self, path: &Path) -> anyhow::Result<hypercontracts::InterfaceAutomaton> {
        let doc: AutomatonDoc = self.load(path)?;
        Ok(doc.to_automaton()?)
    }

    fn model(&mut self, path: &Path) -> anyhow::Result<BehavioralModel> {
        let doc: BehavioralDoc = self.load(path)?;
        Ok(BehavioralModel::new(doc)?)
    }

    fn operation(&self) -> Value {
        let mut op = json!({ "command": self.command, "inputs": self.hashes });
        if !self.parameters.is_empty() {
            op["parameters"] = json!(self.parameters);
        }
        op
    }
}

fn symbol_set(alphabet: &Alphabet, names: &[String]) -> anyhow::Result<SymbolSet> {
    Ok(alphabet.set(names.iter().map(String::as_str).filter(|s| !s.is_empty()))?)
}

/// Parses arguments, returning the command and its subcommand path such as
/// `"lang union"`.
pub fn parse<I, T>(args: I) -> Result<(Cli, String), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let matches = Cli::command().try_get_matches_from(args)?;
    let mut path = Vec::new();
    let mut m = &matches;
    while let Some((name, sub)) = m.subcommand() {
        path.push(name.to_string());
        m = sub;
    }
    Ok((Cli::from_arg_matches(&matches)?, path.join(" ")))
}

/// Runs one parsed command.
pub fn run(cli: &Cli, command: &str) -> anyhow::Result<Response> {
    let mut ctx = Ctx {
        auto_trap: cli.auto_trap,
        command: command.to_string(),
        hashes: Vec::new(),
        parameters: BTreeMap::new(),
    };
    let output = match &cli.group {
        Group::Lang(cmd) => lang(&mut ctx, cmd)?,
        Group::Iface(cmd) => iface(&mut ctx, cmd)?,
        Group::Ia(cmd) => ia(&mut ctx, cmd)?,
        Group::Beh(cmd) => beh(&mut ctx, cmd)?,
        Group::Oracle(args) => run_oracle(&mut ctx, args)?,
    };
    Ok(Response {
        output,
        operation: ctx.operation(),
    })
}

fn lang(ctx: &mut Ctx, cmd: &LangCmd) -> anyhow::Result<Output> {
    let receptive_pair = |ctx: &mut Ctx, p: &Pair| -> anyhow::Result<_> { Ok((ctx.receptive(&p.a)?, ctx.receptive(&p.b)?)) };
    Ok(match cmd {
        LangCmd::Union(p) | LangCmd::Intersect(p) | LangCmd::Difference(p) => {
            let (da, a) = ctx.language(&p.a)?;
            let (db, b) = ctx.language(&p.b)?;
            let union = matches!(cmd, LangCmd::Union(_));
            match (&da.inputs, &db.inputs, matches!(cmd, LangCmd::Difference(_))) {
                (Some(_), Some(_), false) => {
                    let ra = da.to_receptive(ctx.auto_trap)?;
                    let rb = db.to_receptive(ctx.auto_trap)?;
                    let r = if union { ra.join(&rb)? } else { ra.meet(&rb)? };
                    Output::Language(LanguageDoc::from_receptive(&r))
                }
                _ => {
                    let l = match cmd {
                        LangCmd::Union(_) => a.union(&b)?,
                        LangCmd::Intersect(_) => a.intersect(&b)?,
                        _ => a.difference(&b)?,
                    };
                    Output::Language(LanguageDoc::from_language(&l))
                }
            }
        }
        LangCmd::Complement { a } => Output::Language(LanguageDoc::from_language(&ctx.language(a)?.1.complement())),
        LangCmd::Canonical { a } => {
            let (doc, l) = ctx.language(a)?;
            let mut out = LanguageDoc::from_language(&l);
            out.inputs = doc.inputs;
            Output::Language(out)
        }
        LangCmd::PrefixClosure { a } => {
            Output::Language(LanguageDoc::from_language(&ctx.language(a)?.1.prefix_closure()))
        }
        LangCmd::Embed { a, inputs } => {
            let l = ctx.receptive(a)?;
            ctx.param("inputs", inputs.clone());
            let set = symbol_set(l.alphabet(), inputs)?;
            Output::Language(LanguageDoc::from_receptive(&l.embed(set)?))
        }
        LangCmd::Exponential(p) => {
            let (a, b) = receptive_pair(ctx, p)?;
            Output::Language(LanguageDoc::from_receptive(&a.exponential(&b)?))
        }
        LangCmd::Missext { pair, gamma } => {
            let a = ctx.language(&pair.a)?.1;
            let b = ctx.language(&pair.b)?.1;
            ctx.param("gamma", gamma.gamma.clone());
            let g = symbol_set(a.alphabet(), &gamma.gamma)?;
            Output::Language(LanguageDoc::from_language(&miss_ext(&a, &b, g)?))
        }
        LangCmd::Unc { pair, gamma, delta } => {
            let a = ctx.language(&pair.a)?.1;
            let b = ctx.language(&pair.b)?.1;
            ctx.param("gamma", gamma.gamma.clone());
            ctx.param("delta", delta.clone());
            let g = symbol_set(a.alphabet(), &gamma.gamma)?;
            let d = symbol_set(a.alphabet(), delta)?;
            Output::Language(LanguageDoc::from_language(&unc(&a, &b, g, d)?))
        }
        LangCmd::Quotient(p) => {
            let (a, b) = receptive_pair(ctx, p)?;
            Output::Language(LanguageDoc::from_receptive(&a.quotient(&b)?))
        }
        LangCmd::Compose(p) => {
            let (a, b) = receptive_pair(ctx, p)?;
            Output::Language(LanguageDoc::from_receptive(&a.compose(&b)?))
        }
        LangCmd::Refines(p) => {
            let (da, a) = ctx.language(&p.a)?;
            let (db, b) = ctx.language(&p.b)?;
            match (&da.inputs, &db.inputs) {
                (Some(_), Some(_)) => {
                    Output::Bool(da.to_receptive(ctx.auto_trap)?.leq(&db.to_receptive(ctx.auto_trap)?)?)
                }
                _ => Output::Bool(a.is_subset(&b)?),
            }
        }
    })
}

fn iface(ctx: &mut Ctx, cmd: &IfaceCmd) -> anyhow::Result<Output> {
    Ok(match cmd {
        IfaceCmd::FromS { s, inputs } => {
            let (doc, l) = ctx.language(s)?;
            let names = match (inputs, &doc.inputs) {
                (Some(x), _) => {
                    ctx.param("inputs", x.clone());
                    x.clone()
                }
                (None, Some(x)) => x.clone(),
                (None, None) => bail!("no input symbols: pass --inputs or add `inputs` to the document"),
            };
            let io = IoSignature::from_inputs(l.alphabet(), symbol_set(l.alphabet(), &names)?)?;
            Output::Contract(ContractOut::new(&InterfaceHypercontract::from_s(l, io)?))
        }
        IfaceCmd::Compose(p) => {
            let (a, b) = (ctx.contract(&p.a)?, ctx.contract(&p.b)?);
            Output::Contract(ContractOut::from_outcome(&a.compose(&b)?))
        }
        IfaceCmd::Quotient(p) => {
            let (a, b) = (ctx.contract(&p.a)?, ctx.contract(&p.b)?);
            Output::Contract(ContractOut::from_outcome(&a.quotient(&b)?))
        }
        IfaceCmd::Mirror { a } => Output::Contract(ContractOut::new(&ctx.contract(a)?.mirror())),
        IfaceCmd::Refines(p) => {
            let (a, b) = (ctx.contract(&p.a)?, ctx.contract(&p.b)?);
            Output::Bool(a.refines(&b)?)
        }
        IfaceCmd::Validate { a } => {
            let doc: ContractDoc = ctx.load(a)?;
            match doc.to_contract(ctx.auto_trap) {
                Ok(_) => Output::Bool(true),
                Err(e) => {
                    eprintln!("{e}");
                    Output::Bool(false)
                }
            }
        }
        IfaceCmd::IsEnvironment(p) | IfaceCmd::IsImplementation(p) => {
            let c = ctx.contract(&p.a)?;
            let l = ctx.language(&p.b)?.1;
            Output::Bool(match cmd {
                IfaceCmd::IsEnvironment(_) => c.is_environment(&l)?,
                _ => c.is_implementation(&l)?,
            })
        }
        IfaceCmd::Identity { alphabet } => {
            ctx.param("alphabet", alphabet.clone());
            Output::Contract(ContractOut::new(&InterfaceHypercontract::identity(Alphabet::new(
                alphabet.iter().cloned(),
            )?)))
        }
    })
}

fn ia(ctx: &mut Ctx, cmd: &IaCmd) -> anyhow::Result<Output> {
    Ok(match cmd {
        IaCmd::Compose(p) => {
            let (a, b) = (ctx.automaton(&p.a)?, ctx.automaton(&p.b)?);
            Output::Composition(CompositionOut::new(&a.compose(&b)?))
        }
        IaCmd::Refines(p) => {
            let (a, b) = (ctx.automaton(&p.a)?, ctx.automaton(&p.b)?);
            Output::Bool(a.refines(&b)?)
        }
        IaCmd::Language { a } => Output::Language(LanguageDoc::from_language(&ctx.automaton(a)?.language())),
        IaCmd::ToContract { a } => Output::Contract(ContractOut::new(&ctx.automaton(a)?.to_contract()?)),
    })
}

enum Operands {
    Contracts(BehavioralHypercontract, BehavioralHypercontract),
    Compsets(ConicCompset, ConicCompset),
}

fn as_contract(item: BehavioralItem) -> Option<BehavioralHypercontract> {
    match item {
        BehavioralItem::Contract(c) => Some(c),
        BehavioralItem::Ag(c) => Some(c.to_contract()),
        BehavioralItem::Compset(_) => None,
    }
}

fn operands(model: &BehavioralModel, n: &Named) -> anyhow::Result<Operands> {
    match (model.item(&n.a)?, model.item(&n.b)?) {
        (BehavioralItem::Compset(a), BehavioralItem::Compset(b)) => Ok(Operands::Compsets(a, b)),
        (a, b) => match (as_contract(a), as_contract(b)) {
            (Some(a), Some(b)) => Ok(Operands::Contracts(a, b)),
            _ => bail!("operands `{}` and `{}` must both be contracts or both be compsets", n.a, n.b),
        },
    }
}

fn contract_operands(model: &BehavioralModel, n: &Named) -> anyhow::Result<(BehavioralHypercontract, BehavioralHypercontract)> {
    match operands(model, n)? {
        Operands::Contracts(a, b) => Ok((a, b)),
        Operands::Compsets(..) => bail!("`{}` and `{}` are compsets; this operation needs contracts", n.a, n.b),
    }
}

fn ag_operands(model: &BehavioralModel, n: &Named) -> anyhow::Result<Option<(hypercontracts::behavioral::AgContract, hypercontracts::behavioral::AgContract)>> {
    match (model.item(&n.a)?, model.item(&n.b)?) {
        (BehavioralItem::Ag(a), BehavioralItem::Ag(b)) => Ok(Some((a, b))),
        _ => Ok(None),
    }
}

fn beh(ctx: &mut Ctx, cmd: &BehCmd) -> anyhow::Result<Output> {
    let named = |ctx: &mut Ctx, n: &Named| -> anyhow::Result<BehavioralModel> {
        ctx.param("operands", vec![n.a.clone(), n.b.clone()]);
        ctx.model(&n.doc)
    };
    let contract_out = |m: &BehavioralModel, c: &BehavioralHypercontract| Output::BehContract(BehavioralContractOut::new(m, c), c.env().format(), c.imp().format());
    let compset_out = |m: &BehavioralModel, h: &ConicCompset| Output::Compset(m.compset_out(h), h.format());
    Ok(match cmd {
        BehCmd::Compose(n) | BehCmd::Quotient(n) | BehCmd::Meet(n) | BehCmd::Join(n) => {
            let m = named(ctx, n)?;
            match operands(&m, n)? {
                Operands::Contracts(a, b) => {
                    let c = match cmd {
                        BehCmd::Compose(_) => a.compose(&b)?,
                        BehCmd::Quotient(_) => a.quotient(&b)?,
                        BehCmd::Meet(_) => a.meet(&b)?,
                        _ => a.join(&b)?,
                    };
                    contract_out(&m, &c)
                }
                Operands::Compsets(a, b) => {
                    let h = match cmd {
                        BehCmd::Compose(_) => a.compose(&b)?,
                        BehCmd::Quotient(_) => a.quotient(&b)?,
                        BehCmd::Meet(_) => a.meet(&b)?,
                        _ => a.join(&b)?,
                    };
                    compset_out(&m, &h)
                }
            }
        }
        BehCmd::MergeWeak(n) => {
            let m = named(ctx, n)?;
            let c = match ag_operands(&m, n)? {
                Some((a, b)) => a.merge_weak(&b)?,
                None => {
                    let (a, b) = contract_operands(&m, n)?;
                    a.merge_weak(&b)?
                }
            };
            contract_out(&m, &c)
        }
        BehCmd::MergeStrong { names: n, search } => {
            let m = named(ctx, n)?;
            if *search {
                ctx.param("search", true);
            }
            match ag_operands(&m, n)? {
                Some((a, b)) if !search => {
                    let c = a.merge_strong(&b)?;
                    Output::Ag(AgOut::new(&m, &c), m.universe().format(c.assumption()), m.universe().format(c.guarantee()))
                }
                _ => {
                    let (a, b) = contract_operands(&m, n)?;
                    let c = if *search { a.merge_strong_search(&b)? } else { a.merge_strong(&b)? };
                    contract_out(&m, &c)
                }
            }
        }
        BehCmd::Refines(n) => {
            let m = named(ctx, n)?;
            Output::Bool(match operands(&m, n)? {
                Operands::Contracts(a, b) => a.refines(&b)?,
                Operands::Compsets(a, b) => a.leq(&b)?,
            })
        }
        BehCmd::Mirror { doc, a } => {
            ctx.param("operands", vec![a.clone()]);
            let m = ctx.model(doc)?;
            let c = as_contract(m.item(a)?).ok_or_else(|| Error::InvalidDocument(format!("`{a}` is not a contract")))?;
            contract_out(&m, &c.mirror())
        }
        BehCmd::Saturated { doc, a } => {
            ctx.param("operands", vec![a.clone()]);
            let m = ctx.model(doc)?;
            let c = as_contract(m.item(a)?).ok_or_else(|| Error::InvalidDocument(format!("`{a}` is not a contract")))?;
            Output::Bool(c.is_saturated()?)
        }
        BehCmd::AgCompose(n) => {
            let m = named(ctx, n)?;
            let Some((a, b)) = ag_operands(&m, n)? else {
                bail!("`{}` and `{}` must both be AG contracts", n.a, n.b);
            };
            let c = a.compose(&b)?;
            Output::Ag(AgOut::new(&m, &c), m.universe().format(c.assumption()), m.universe().format(c.guarantee()))
        }
        BehCmd::Convexity { doc, a } => {
            ctx.param("operands", vec![a.clone()]);
            let m = ctx.model(doc)?;
            let h = m.compset(a)?;
            Output::Convexity(h.to_general()?.convexity())
        }
    })
}

fn run_oracle(ctx: &mut Ctx, args: &OracleArgs) -> anyhow::Result<Output> {
    let cfg = BoundedCheckConfig {
        max_word_len: args.max_len,
        seed: args.seed,
        num_cases: args.cases,
        max_states: args.max_states,
    };
    ctx.param("kind", args.kind.clone());
    ctx.param("seed", args.seed);
    ctx.param("cases", args.cases);
    ctx.param("max_len", args.max_len);
    ctx.param("max_states", args.max_states);
    let reports = if args.kind == "all" {
        oracle::run_all(&cfg)?
    } else {
        vec![oracle::run(args.kind.parse::<CheckKind>()?, &cfg)?]
    };
    Ok(Output::Reports(reports))
}

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let (cli, command) = match parse(args) {
        Ok(parsed) => parsed,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Ok(v) = std::env::var("HYPERC_MAX_STATES") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => hypercontracts::lang::set_max_states(n),
            _ => {
                eprintln!("error: HYPERC_MAX_STATES must be a positive integer, got `{v}`");
                return 2;
            }
        }
    }
    let response = match run(&cli, &command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return 2;
        }
    };
    let text = response.render(cli.format);
    let written = match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return 2;
    }
    response.exit_code()
}
