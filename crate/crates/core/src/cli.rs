//! Command-line front end. `run` does all the work and returns the exit code
//! and output, so it can be driven from tests without a process.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::decomp;
use crate::error::{Error, Result};
use crate::factorlab::{self, IntersectionFamily};
use crate::forbidden::{self, ForbiddenSet};
use crate::graph::Graph;
use crate::partition::{self, Mode};
use crate::properties::classes::Relation;
use crate::properties::{parse_definitions, Definitions, PropertyDef};
use crate::universe::{PropertyView, Universe};

pub const SCHEMA: &str = "propalg.report/1";

#[derive(Parser, Debug)]
#[command(name = "propalg", version, about = "Exhaustive checks on small-graph properties and their products")]
struct Cli {
    /// Output format (default: text for enumerate and member, json otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Property definitions file (`name = expr` per line).
    #[arg(long, global = true)]
    defs: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem2,
    Prop1,
    Lemma5,
    Lemma6,
    Theorem7,
    Prop8,
    Prop9,
    Prop10,
    Roundtrips,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Theorem2 => "theorem2",
            Suite::Prop1 => "prop1",
            Suite::Lemma5 => "lemma5",
            Suite::Lemma6 => "lemma6",
            Suite::Theorem7 => "theorem7",
            Suite::Prop8 => "prop8",
            Suite::Prop9 => "prop9",
            Suite::Prop10 => "prop10",
            Suite::Roundtrips => "roundtrips",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all graphs up to order n in graph6, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Membership of graphs (arguments, or graph6 lines on standard input).
    Member {
        #[arg(long)]
        property: String,
        graphs: Vec<String>,
    },
    /// A partition of a graph into members of the given factors.
    Partition {
        #[arg(long = "property", required = true)]
        properties: Vec<String>,
        graph: String,
        /// Enumerate every partition instead of the first one.
        #[arg(long)]
        all: bool,
        /// With --all, keep one partition per multiset of (factor, part).
        #[arg(long)]
        essential: bool,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        property: Option<String>,
        /// Factor of a product (repeatable).
        #[arg(long)]
        factor: Vec<String>,
        /// Forbidden-set file: `relation=induced|subgraph`, then graph6 lines.
        #[arg(long)]
        forbidden: Option<PathBuf>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Serialize) -> Result<Check> {
        let detail = serde_json::to_value(detail).map_err(|e| Error::Invariant(e.to_string()))?;
        Ok(Check { name: name.into(), pass, detail })
    }
}

#[derive(Serialize)]
struct Report {
    schema: &'static str,
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<&'static str>,
    params: BTreeMap<String, Value>,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null")]
    data: Value,
    pass: bool,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report { schema: SCHEMA, command, suite: None, params: BTreeMap::new(), checks: Vec::new(), data: Value::Null, pass: true }
    }

    fn param(&mut self, key: &str, value: impl Serialize) {
        self.params.insert(key.to_string(), serde_json::to_value(value).expect("plain data"));
    }

    fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }

    fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    fn text(&self) -> String {
        let title = match self.suite {
            Some(s) => format!("{} {s}", self.command),
            None => self.command.to_string(),
        };
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let mut out = format!(
            "{title}: {} ({passed}/{} checks)\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len()
        );
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}\n", if c.pass { "pass" } else { "FAIL" }, c.name));
        }
        out
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok((code, text)) => match &cli.out {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
                Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
            },
            None => Outcome { code, stdout: text, stderr: String::new() },
        },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(i32, String)> {
    let defs = match &cli.defs {
        Some(path) => parse_definitions(&std::fs::read_to_string(path)?)?,
        None => Definitions::new(),
    };
    let (report, raw_text) = match &cli.command {
        Command::Enumerate { n } => enumerate(*n)?,
        Command::Member { property, graphs } => member(&defs, property, graphs, stdin)?,
        Command::Partition { properties, graph, all, essential } => (partition(&defs, properties, graph, *all, *essential)?, None),
        Command::Verify { suite, n, r, s, property, factor, forbidden } => {
            let args = SuiteArgs { n: *n, r: *r, s: *s, property: property.as_deref(), factors: factor, forbidden: forbidden.as_ref() };
            (verify(&defs, *suite, &args)?, None)
        }
    };
    let default = match cli.command {
        Command::Enumerate { .. } | Command::Member { .. } => Format::Text,
        _ => Format::Json,
    };
    let text = match (cli.format.unwrap_or(default), raw_text) {
        (Format::Json, _) => report.json(),
        (Format::Text, Some(raw)) => raw,
        (Format::Text, None) => report.text(),
    };
    Ok((if report.pass { 0 } else { 1 }, text))
}

fn enumerate(n: usize) -> Result<(Report, Option<String>)> {
    let u = Universe::enumerate(n)?;
    let mut report = Report::new("enumerate");
    report.param("n", n);
    report.data = json!({
        "count": u.len(),
        "checksum": u.checksum(),
        "graphs": u.graphs().iter().map(Graph::to_graph6).collect::<Vec<_>>(),
    });
    Ok((report.finish(), Some(u.to_graph6_lines())))
}

fn member(defs: &Definitions, property: &str, graphs: &[String], stdin: &mut dyn Read) -> Result<(Report, Option<String>)> {
    let p = defs.resolve(property)?;
    let lines: Vec<String> = if graphs.is_empty() {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        buf.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
    } else {
        graphs.to_vec()
    };
    let mut report = Report::new("member");
    report.param("property", p.to_string());
    let mut text = String::new();
    let mut results = Vec::new();
    for line in &lines {
        let g = Graph::from_graph6(line)?;
        let m = p.member_detail(&g);
        text.push_str(&format!("{line} {}\n", m.member));
        results.push(json!({ "graph": line, "member": m.member, "truncated": m.truncated }));
    }
    report.data = Value::Array(results);
    Ok((report.finish(), Some(text)))
}

fn partition(defs: &Definitions, properties: &[String], graph: &str, all: bool, essential: bool) -> Result<Report> {
    let factors = properties.iter().map(|p| defs.resolve(p)).collect::<Result<Vec<_>>>()?;
    let g = Graph::from_graph6(graph)?;
    let mut report = Report::new("partition");
    report.param("factors", factors.iter().map(ToString::to_string).collect::<Vec<_>>());
    report.param("graph", g.to_graph6());
    let certs = if all {
        let mode = if essential { Mode::Essential } else { Mode::Labelled };
        partition::enumerate_partitions(&g, &factors, mode)?
    } else {
        partition::find_partition(&g, &factors).into_iter().collect()
    };
    let valid = certs.iter().all(|c| c.validate(&factors));
    report.checks.push(Check::new("partition exists", !certs.is_empty(), certs.len())?);
    report.checks.push(Check::new("certificates validate", valid, valid)?);
    report.data = serde_json::to_value(&certs).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(report.finish())
}

struct SuiteArgs<'a> {
    n: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    property: Option<&'a str>,
    factors: &'a [String],
    forbidden: Option<&'a PathBuf>,
}

fn verify(defs: &Definitions, suite: Suite, a: &SuiteArgs) -> Result<Report> {
    let mut report = Report::new("verify");
    report.suite = Some(suite.name());
    let default_n = match suite {
        Suite::Theorem2 => 7,
        Suite::Roundtrips => 5,
        _ => 6,
    };
    let n = a.n.unwrap_or(default_n);
    report.param("n", n);
    let u = Universe::enumerate(n)?;
    let property = |fallback: &str| defs.resolve(a.property.unwrap_or(fallback));
    match suite {
        Suite::Theorem2 => uniqueness(&mut report, &u, a.r.unwrap_or(2), a.s.unwrap_or(2))?,
        Suite::Prop1 => primitive_factorisation(&mut report, &u, defs, a.property)?,
        Suite::Lemma5 => factor_product(&mut report, &u, defs, a.factors)?,
        Suite::Lemma6 => {
            let p = property("bipartite")?;
            report.param("property", p.to_string());
            for (g, reports) in group_gen0(decomp::check_gen0_pairs(&p.materialize(&u), n.saturating_sub(1))?) {
                let failures: Vec<&decomp::Gen0Report> = reports.iter().filter(|r| !r.holds).collect();
                let detail = json!({ "pairs": reports.len(), "failures": failures });
                report.checks.push(Check::new(format!("pairs below {}", g.to_graph6()), failures.is_empty(), detail)?);
            }
        }
        Suite::Theorem7 => {
            let p = property("bipartite")?;
            report.param("property", p.to_string());
            let f = decomp::factorise_hereditary(&p, &u)?;
            report.param("factors", f.factors.len());
            report.checks.push(Check::new("factorisation", f.holds, &f)?);
        }
        Suite::Prop8 => {
            let p = property("forests")?;
            report.param("property", p.to_string());
            let view = p.materialize(&u);
            let fle = forbidden::minimal_forbidden_induced(&view)?;
            let fsub = forbidden::minimal_forbidden_subgraph(&view)?;
            let finite = forbidden::check_finite_forbidden_sets(&view)?;
            report.checks.push(Check::new("forbidden sets agree with the antichain test", finite.consistent, &finite)?);
            let converted = forbidden::induced_to_subgraph(&fle)?;
            report.checks.push(Check::new("induced to subgraph conversion", converted == fsub, &converted)?);
            let back = forbidden::subgraph_to_induced(&fsub, n)?;
            report.checks.push(Check::new("subgraph to induced conversion", back == fle, &back)?);
        }
        Suite::Prop9 => {
            let fsub = forbidden_input(a.forbidden, Relation::Subgraph, || {
                forbidden::minimal_forbidden_subgraph(&property("forests")?.materialize(&u))
            })?;
            report.param("forbidden", &fsub.graphs);
            let r = forbidden::check_subgraph_criterion(&fsub, &u)?;
            report.param("sets_equal", r.direct);
            report.checks.push(Check::new("edge criterion matches direct comparison", r.holds, &r)?);
        }
        Suite::Prop10 => {
            let fle = forbidden_input(a.forbidden, Relation::Induced, || {
                forbidden::minimal_forbidden_induced(&property("split")?.materialize(&u))
            })?;
            report.param("forbidden", &fle.graphs);
            let r = forbidden::check_heredity_criterion(&fle, &u)?;
            report.param("hereditary", r.direct);
            report.checks.push(Check::new("edge criterion matches direct heredity check", r.holds, &r)?);
        }
        Suite::Roundtrips => roundtrips(&mut report, &u)?,
    }
    Ok(report.finish())
}

fn forbidden_input(
    path: Option<&PathBuf>,
    relation: Relation,
    fallback: impl FnOnce() -> Result<ForbiddenSet>,
) -> Result<ForbiddenSet> {
    let set = match path {
        Some(p) => ForbiddenSet::from_text(&std::fs::read_to_string(p)?)?,
        None => fallback()?,
    };
    if set.relation != relation {
        return Err(Error::Precondition(format!("expected a forbidden set with relation={relation:?}").to_lowercase()));
    }
    Ok(set)
}

fn group_gen0(reports: Vec<decomp::Gen0Report>) -> BTreeMap<Graph, Vec<decomp::Gen0Report>> {
    let mut out: BTreeMap<Graph, Vec<decomp::Gen0Report>> = BTreeMap::new();
    for r in reports {
        out.entry(r.g).or_default().push(r);
    }
    out
}

fn uniqueness(report: &mut Report, u: &Arc<Universe>, r: usize, s: usize) -> Result<()> {
    report.param("r", r);
    report.param("s", s);
    let mut suites = vec![("o_k", factorlab::unique_ok_suite(r, s, u))];
    suites.push(("o_o", factorlab::unique_oo_suite(r, s, u)));
    suites.push(("k_k", factorlab::unique_kk_suite(r, s, u)));
    let mut skipped = Vec::new();
    for (label, rep) in suites {
        match rep {
            Ok(rep) => {
                for c in &rep.checks {
                    report.checks.push(Check::new(format!("{label}: {}", c.name), c.pass, c)?);
                }
                report.param(&format!("{label}_case"), &rep.case);
            }
            Err(Error::CapExceeded(k)) if label != "o_k" => skipped.push(format!("{label} needs order {k}")),
            Err(e) => return Err(e),
        }
    }
    if !skipped.is_empty() {
        report.param("skipped", skipped);
    }
    Ok(())
}

fn primitive_factorisation(report: &mut Report, u: &Arc<Universe>, defs: &Definitions, property: Option<&str>) -> Result<()> {
    let targets = match property {
        Some(p) => vec![defs.resolve(p)?],
        None => vec![
            PropertyDef::UnionOf(vec![PropertyDef::PlusG(Graph::path(3)), PropertyDef::PlusG(Graph::complete(3))]),
            PropertyDef::PlusG(Graph::complete(2)),
        ],
    };
    for p in targets {
        let f = factorlab::primitive_factorisation_geq(&p.materialize(u))?;
        report.checks.push(Check::new(format!("primitive factorisation of {p}"), f.holds, &f)?);
    }
    Ok(())
}

fn factor_product(report: &mut Report, u: &Arc<Universe>, defs: &Definitions, factors: &[String]) -> Result<()> {
    let factors: Vec<PropertyDef> = if factors.is_empty() {
        vec![PropertyDef::O, PropertyDef::O]
    } else {
        factors.iter().map(|f| defs.resolve(f)).collect::<Result<_>>()?
    };
    report.param("factors", factors.iter().map(ToString::to_string).collect::<Vec<_>>());
    let product = partition::product_view(&factors, u);
    let star = decomp::m_star(&product)?;
    for g in &star.graphs {
        let r = decomp::check_max_char(g, &factors, u)?;
        report.checks.push(Check::new(format!("maximal graph {}", g.to_graph6()), r.holds, &r)?);
    }
    Ok(())
}

fn roundtrips(report: &mut Report, u: &Arc<Universe>) -> Result<()> {
    let bad = u.graphs().iter().find(|g| Graph::from_graph6(&g.to_graph6()).ok() != Some(**g));
    report.checks.push(Check::new("graph6", bad.is_none(), bad)?);

    let back = Universe::from_graph6_lines(&u.to_graph6_lines())?;
    report.checks.push(Check::new("universe lines", back.checksum() == u.checksum(), u.checksum())?);

    let props = ["O", "K", "bipartite", "split", "forests", "clique_with_pendants", "bounded_order(3)"];
    let defs = Definitions::new();
    for name in props {
        let p = defs.resolve(name)?;
        let view = p.materialize(u);
        let again = PropertyView::from_hex(u, &view.to_hex())?;
        report.checks.push(Check::new(format!("view hex {name}"), again == view, view.to_hex())?);
        let reparsed = defs.resolve(&p.to_string())?;
        report.checks.push(Check::new(format!("definition {name}"), reparsed == p, p.to_string())?);
    }

    let bad = u.graphs().iter().find(|g| {
        let f = factorlab::intersection_representation(g);
        let text_ok = IntersectionFamily::from_text(&f.to_text()).ok().as_ref() == Some(&f);
        !text_ok || factorlab::intersection_graph(&f).ok() != Some(**g)
    });
    report.checks.push(Check::new("intersection representation", bad.is_none(), bad)?);

    let cycles = ForbiddenSet::new(Relation::Induced, (3..=u.n().max(3)).map(Graph::cycle));
    let again = ForbiddenSet::from_text(&cycles.to_text())?;
    report.checks.push(Check::new("forbidden set text", again == cycles, &cycles.graphs)?);
    Ok(())
}
