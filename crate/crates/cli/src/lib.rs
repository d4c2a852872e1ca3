//! The `bvkit` command line: group operations on diagrams written in the
//! element DSL, and the simplicial complex lab on complexes written as JSON.
//!
//! Every command prints one JSON object (or `key: value` lines with
//! `--plain`). Exit status is 0 on success, 1 when a predicate answers false
//! under `--strict`, and 2 on any error.

pub mod dot;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use bvkit::diagram::{arc_support, dangling_equal, Flavor, GroupContext, Spraige};
use bvkit::dsl::{self, Document};
use bvkit::labeled::Label;
use bvkit_complex::homology::{euler_consistent, reduced_homology};
use bvkit_complex::join::{complete_join_check, VertexMap};
use bvkit_complex::json::{parse_complex, ComplexJson};
use bvkit_complex::matching::{cyclic_matching, linear_matching, restrict_initial};
use bvkit_complex::morse::{filtration_report, HeightFunction};
use bvkit_complex::wcm::wcm_report;
use bvkit_complex::SimplicialComplex;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "bvkit", version, about = "Labeled braided diagram groups and a simplicial complex lab")]
pub struct Cli {
    /// Read the group document or complex JSON from this file instead of stdin.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Print `key: value` lines instead of JSON.
    #[arg(long, global = true)]
    pub plain: bool,
    /// Exit with status 1 when a predicate is false.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Print a Graphviz diagram for commands that produce an element.
    #[arg(long, global = true)]
    pub dot: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlavorArg {
    #[value(name = "V")]
    V,
    #[value(name = "F")]
    F,
    #[value(name = "T")]
    T,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::V => Flavor::V,
            FlavorArg::F => Flavor::F,
            FlavorArg::T => Flavor::T,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SubgroupArg {
    #[value(name = "F")]
    F,
    #[value(name = "T")]
    T,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EmbedMap {
    Iota,
    IotaPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MorseFilter {
    /// Height of a matching-complex vertex is its start position.
    MaxStart,
    /// Heights given with `--heights`, one per vertex in order.
    Heights,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the document with every element reduced.
    Print,
    /// Reduce an element and report the leaf counts.
    Reduce { name: String },
    /// Multiply two elements.
    Mul { a: String, b: String },
    /// Invert an element.
    Inv { a: String },
    /// Whether two elements are equal in the group.
    Eq { a: String, b: String },
    IsIdentity { a: String },
    /// Membership in the pure (F) or cyclic (T) subgroup.
    Member {
        #[arg(long, value_enum)]
        sub: SubgroupArg,
        a: String,
    },
    /// Image under the forgetful map to the unbraided, unlabeled group.
    ProjectV { a: String },
    /// The label of the first strand, realized as a braid.
    Retract { a: String },
    /// Embed a label as a group element.
    Embed {
        #[arg(long, value_enum)]
        map: EmbedMap,
        #[arg(long)]
        label: String,
    },
    /// Equality of elementary braiges up to moves on their dangling feet.
    DanglingEq {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "V")]
        flavor: FlavorArg,
    },
    /// For each caret of the plus forest, the strands feeding into it.
    ArcSupport { a: String },
    /// Build a matching complex.
    Complex {
        #[command(subcommand)]
        kind: ComplexKind,
    },
    /// Reduced integer homology of a complex.
    Homology,
    /// Homological weak Cohen–Macaulay test.
    Wcm {
        #[arg(long, allow_negative_numbers = true)]
        n: isize,
    },
    /// Complete-join test for a vertex map given as {"source", "target", "map"}.
    JoinCheck,
    /// Morse filtration report.
    Morse {
        #[arg(long, value_enum)]
        filter: MorseFilter,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        heights: Vec<i64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexKind {
    LinearMatching(MatchingArgs),
    CyclicMatching(MatchingArgs),
}

#[derive(Debug, clap::Args)]
pub struct MatchingArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub m: usize,
    /// Keep only vertices with these start positions.
    #[arg(long, value_delimiter = ',')]
    pub z: Option<Vec<usize>>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<bvkit::Error> for CliError {
    fn from(e: bvkit::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<bvkit_complex::Error> for CliError {
    fn from(e: bvkit_complex::Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A parsed group document with its named elements.
pub struct Session {
    doc: Document,
}

impl Session {
    pub fn parse(text: &str) -> CliResult<Self> {
        Ok(Session {
            doc: dsl::parse_document(text)?,
        })
    }

    pub fn context(&self) -> &GroupContext {
        &self.doc.context
    }

    /// A named element, any diagram the header admits.
    pub fn get(&self, name: &str) -> CliResult<&Spraige> {
        self.doc
            .get(name)
            .ok_or_else(|| CliError(format!("no element named {name:?}")))
    }

    /// A named element that is a group element (r heads and r feet).
    pub fn element(&self, name: &str) -> CliResult<&Spraige> {
        let s = self.get(name)?;
        self.context().check(s)?;
        Ok(s)
    }

    /// The document with every element replaced by its reduced form.
    pub fn canonical(&self) -> CliResult<String> {
        let spec = self.context().spec();
        let elements = self
            .doc
            .elements
            .iter()
            .map(|(n, s)| Ok((n.clone(), s.reduce(spec)?)))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(dsl::print_document(&Document {
            context: self.context().clone(),
            elements,
        }))
    }
}

enum Output {
    Json(Value),
    /// A JSON answer to a yes/no question, with the answer.
    Predicate(Value, bool),
    Text(String),
}

fn element_json(name: &str, s: &Spraige) -> Value {
    json!({
        "name": name,
        "minus": s.minus().to_string(),
        "braid": s.braid().to_string(),
        "labels": s.labels().iter().map(Label::to_string).collect::<Vec<_>>(),
        "plus": s.plus().to_string(),
        "leaves": s.leaves(),
        "heads": s.heads(),
        "feet": s.feet(),
    })
}

fn element_output(cli: &Cli, name: &str, s: &Spraige, extra: Value) -> Output {
    if cli.dot {
        return Output::Text(dot::element_dot(name, s));
    }
    let mut v = json!({
        "element": element_json(name, s),
        "dsl": dsl::print_element(name, s),
    });
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    Output::Json(v)
}

fn plain(v: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    let has_dsl = map.contains_key("dsl");
    for (k, x) in map {
        if k == "dsl" || (has_dsl && k == "element") {
            continue;
        }
        match x {
            Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
            other => out.push_str(&format!("{k}: {other}\n")),
        }
    }
    if let Some(Value::String(s)) = map.get("dsl") {
        out.push_str(s);
    }
    out
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> CliResult<String> {
    match &cli.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_complex(cli: &Cli, stdin: &mut dyn Read) -> CliResult<SimplicialComplex> {
    Ok(parse_complex(&read_input(cli, stdin)?)?.to_labeled_complex()?)
}

fn session(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Session> {
    Session::parse(&read_input(cli, stdin)?)
}

fn one_based(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|x| x + 1).collect()
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Output> {
    if cli.dot
        && !matches!(
            cli.command,
            Command::Reduce { .. } | Command::Mul { .. } | Command::Inv { .. } | Command::Embed { .. }
        )
    {
        return Err(CliError("--dot only applies to reduce, mul, inv and embed".into()));
    }
    Ok(match &cli.command {
        Command::Print => Output::Text(session(cli, stdin)?.canonical()?),
        Command::Reduce { name } => {
            let s = session(cli, stdin)?;
            let x = s.get(name)?;
            let r = x.reduce(s.context().spec())?;
            element_output(
                cli,
                name,
                &r,
                json!({"leaves_before": x.leaves(), "leaves_after": r.leaves()}),
            )
        }
        Command::Mul { a, b } => {
            let s = session(cli, stdin)?;
            let p = s.context().multiply(s.element(a)?, s.element(b)?)?;
            element_output(cli, "product", &p, json!({}))
        }
        Command::Inv { a } => {
            let s = session(cli, stdin)?;
            let x = s.element(a)?;
            let i = s.context().reduce(&s.context().invert(x))?;
            element_output(cli, "inverse", &i, json!({}))
        }
        Command::Eq { a, b } => {
            let s = session(cli, stdin)?;
            let eq = s.context().equal(s.element(a)?, s.element(b)?)?;
            Output::Predicate(json!({ "equal": eq }), eq)
        }
        Command::IsIdentity { a } => {
            let s = session(cli, stdin)?;
            let id = s.context().is_identity(s.element(a)?)?;
            Output::Predicate(json!({ "identity": id }), id)
        }
        Command::Member { sub, a } => {
            let s = session(cli, stdin)?;
            let x = s.element(a)?;
            let (name, member) = match sub {
                SubgroupArg::F => ("F", s.context().in_bf(x)?),
                SubgroupArg::T => ("T", s.context().in_bt(x)?),
            };
            Output::Predicate(json!({ "subgroup": name, "member": member }), member)
        }
        Command::ProjectV { a } => {
            let s = session(cli, stdin)?;
            let v = s.context().project_to_v(s.element(a)?)?.reduce();
            Output::Json(json!({
                "minus": v.minus().to_string(),
                "permutation": v.perm().iter().map(|x| x + 1).collect::<Vec<_>>(),
                "plus": v.plus().to_string(),
                "leaves": v.minus().leaves(),
            }))
        }
        Command::Retract { a } => {
            let s = session(cli, stdin)?;
            let b = s.context().retract(s.element(a)?)?.canonical();
            Output::Json(json!({ "braid": b.to_string(), "strands": b.strands() }))
        }
        Command::Embed { map, label } => {
            let s = session(cli, stdin)?;
            let h = Label::parse(label)?;
            let (name, e) = match map {
                EmbedMap::Iota => ("iota", s.context().iota(&h)?),
                EmbedMap::IotaPrime => ("iota_prime", s.context().iota_prime(&h)?),
            };
            element_output(cli, name, &s.context().reduce(&e)?, json!({}))
        }
        Command::DanglingEq { a, b, flavor } => {
            let s = session(cli, stdin)?;
            let flavor = Flavor::from(*flavor);
            let eq = dangling_equal(s.context().spec(), flavor, s.get(a)?, s.get(b)?)?;
            Output::Predicate(json!({ "flavor": flavor.to_string(), "equal": eq }), eq)
        }
        Command::ArcSupport { a } => {
            let s = session(cli, stdin)?;
            let arcs: Vec<Vec<usize>> = arc_support(s.get(a)?)?.iter().map(one_based).collect();
            Output::Json(json!({ "arcs": arcs }))
        }
        Command::Complex { kind } => {
            let (args, k) = match kind {
                ComplexKind::LinearMatching(args) => (args, linear_matching(args.d, args.m)?),
                ComplexKind::CyclicMatching(args) => (args, cyclic_matching(args.d, args.m)?),
            };
            let k = match &args.z {
                Some(z) => restrict_initial(&k, &z.iter().copied().collect())?,
                None => k,
            };
            Output::Json(serde_json::to_value(ComplexJson::from_complex(&k)).expect("serializable"))
        }
        Command::Homology => {
            let k = read_complex(cli, stdin)?;
            let h = reduced_homology(&k);
            let mut v = serde_json::to_value(&h).expect("serializable");
            v["betti"] = json!(h.betti_numbers());
            v["euler_consistent"] = json!(euler_consistent(&k, &h));
            Output::Json(v)
        }
        Command::Wcm { n } => {
            let k = read_complex(cli, stdin)?;
            let r = wcm_report(&k, *n);
            let holds = r.holds;
            Output::Predicate(serde_json::to_value(r).expect("serializable"), holds)
        }
        Command::JoinCheck => {
            let text = read_input(cli, stdin)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError(format!("invalid JSON: {e}")))?;
            let part = |key: &str| -> CliResult<SimplicialComplex> {
                let c: ComplexJson = serde_json::from_value(v.get(key).cloned().unwrap_or(Value::Null))
                    .map_err(|e| CliError(format!("{key}: {e}")))?;
                Ok(c.to_complex()?)
            };
            let (source, target) = (part("source")?, part("target")?);
            let map: Vec<usize> = serde_json::from_value(v.get("map").cloned().unwrap_or(Value::Null))
                .map_err(|e| CliError(format!("map: {e}")))?;
            if map.len() != source.vertices().len() {
                return Err(CliError(format!(
                    "map has {} entries for {} source vertices",
                    map.len(),
                    source.vertices().len()
                )));
            }
            let map: BTreeMap<usize, usize> = map.into_iter().enumerate().collect();
            let f = VertexMap::new(source, target, map)?;
            let r = complete_join_check(&f);
            let ok = r.complete_join;
            Output::Predicate(serde_json::to_value(r).expect("serializable"), ok)
        }
        Command::Morse { filter, heights } => {
            let k = read_complex(cli, stdin)?;
            let h = match filter {
                MorseFilter::MaxStart => HeightFunction::from_fn(&k, |v| v as i64),
                MorseFilter::Heights => {
                    if heights.len() != k.vertices().len() {
                        return Err(CliError(format!(
                            "{} heights for {} vertices",
                            heights.len(),
                            k.vertices().len()
                        )));
                    }
                    HeightFunction::new(k.vertices().iter().copied().zip(heights.iter().copied()).collect())
                }
            };
            let levels = filtration_report(&k, &h)?;
            let holds = levels.iter().all(|l| l.holds());
            let filter = match filter {
                MorseFilter::MaxStart => "max-start",
                MorseFilter::Heights => "heights",
            };
            Output::Predicate(
                json!({ "filter": filter, "holds": holds, "levels": levels }),
                holds,
            )
        }
    })
}

/// Runs one command line (program name first) against the given stdin.
pub fn run_command<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(&cli, stdin) {
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Ok(output) => {
            let (value, answer) = match output {
                Output::Text(t) => {
                    return Outcome {
                        code: 0,
                        stdout: t,
                        stderr: String::new(),
                    }
                }
                Output::Json(v) => (v, true),
                Output::Predicate(v, b) => (v, b),
            };
            let stdout = if cli.plain {
                plain(&value)
            } else {
                let mut s = serde_json::to_string_pretty(&value).expect("serializable");
                s.push('\n');
                s
            };
            Outcome {
                code: if cli.strict && !answer { 1 } else { 0 },
                stdout,
                stderr: String::new(),
            }
        }
    }
}
