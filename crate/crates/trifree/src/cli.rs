//! Command-line front end. [`run`] takes explicit streams so the commands
//! can be driven in-process as well as from the binary.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trifree_core::enumerate::{GenFilter, ENUMERATION_CAP};
use trifree_core::families::identify;
use trifree_core::graph6;
use trifree_core::matching::maximum_matching;
use trifree_core::properties::{find_triangle, has_hamiltonian_path, is_bipartite, BipartitenessCertificate};
use trifree_core::theorems::{self, main_classify, Classification, HypothesisFailure, ScanTally, TheoremId};
use trifree_core::{stats, Diameter, Error};

use crate::input::{graph6_lines, InputLine};
use crate::parallel;
use crate::record;
use crate::report::{self, Format, Record, Reporter};

pub const EXIT_OK: u8 = 0;
/// A violation, counterexample or unreadable input line.
pub const EXIT_FINDINGS: u8 = 1;
/// Usage, IO or capacity error.
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "trifree", version, about = "Exhaustive checks of triangle-free graph theorems")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify graph6 lines by the hypotheses and conclusion of the main theorem.
    Classify(ClassifyArgs),
    /// Report structural properties of graph6 lines.
    Check(CheckArgs),
    /// Print one graph6 line per isomorphism class, in canonical order.
    Enumerate(EnumerateArgs),
    /// Run a theorem checker over every class in a range of orders.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// graph6 file; standard input when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Properties to report.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = Property::all())]
    pub props: Vec<Property>,
    /// Also run this theorem's checker on each graph.
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremArg>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum, value_name = "THEOREM")]
    pub theorem_pos: Option<TheoremArg>,
    #[arg(long = "theorem", value_enum, conflicts_with = "theorem_pos")]
    pub theorem: Option<TheoremArg>,
    #[command(flatten)]
    pub range: RangeArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    /// Scan every class instead of restricting generation by the hypotheses.
    #[arg(long)]
    pub no_pushdown: bool,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Default)]
pub struct RangeArgs {
    #[arg(long, conflicts_with_all = ["min_n", "max_n"])]
    pub n: Option<usize>,
    #[arg(long)]
    pub min_n: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Args, Debug, Default)]
pub struct FilterArgs {
    #[arg(long)]
    pub triangle_free: bool,
    #[arg(long, value_name = "K")]
    pub min_degree: Option<usize>,
    #[arg(long)]
    pub connected: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Mantel,
    Aes,
    Efs,
    Eppt,
    Ore,
    Main,
    ProofSteps,
}

impl From<TheoremArg> for TheoremId {
    fn from(t: TheoremArg) -> TheoremId {
        match t {
            TheoremArg::Mantel => TheoremId::Mantel,
            TheoremArg::Aes => TheoremId::Aes,
            TheoremArg::Efs => TheoremId::Efs,
            TheoremArg::Eppt => TheoremId::Eppt,
            TheoremArg::Ore => TheoremId::Ore,
            TheoremArg::Main => TheoremId::Main,
            TheoremArg::ProofSteps => TheoremId::ProofSteps,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Stats,
    Triangle,
    Bipartite,
    Matching,
    HamPath,
    Family,
}

impl Property {
    fn all() -> Vec<Property> {
        Property::value_variants().to_vec()
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
    Core(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "io error: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// Runs one command; records go to `out`, diagnostics to `err`.
/// Returns the process exit code.
pub fn run(config: RunConfig, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match config.command {
        Command::Classify(a) => with_input(a.input.as_ref(), stdin, |r| classify(r, a.format, out)),
        Command::Check(a) => with_input(a.input.as_ref(), stdin, |r| check(r, &a, out)),
        Command::Enumerate(a) => enumerate(&a, out, err),
        Command::Verify(a) => verify(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "trifree: {e}");
            EXIT_ERROR
        }
    }
}

fn with_input<F>(path: Option<&PathBuf>, stdin: &mut dyn BufRead, body: F) -> Result<u8, CliError>
where
    F: FnOnce(&mut dyn BufRead) -> Result<u8, CliError>,
{
    match path {
        Some(p) => {
            let file = File::open(p).map_err(|e| CliError::Usage(format!("cannot open {}: {e}", p.display())))?;
            body(&mut BufReader::new(file))
        }
        None => body(stdin),
    }
}

fn error_record(line: &InputLine) -> Option<(Record, String)> {
    let e = line.graph.as_ref().err()?;
    let rec = record! {
        "record": "error",
        "line": line.number,
        "graph6": line.text,
        "error": e.message,
        "offset": e.offset,
    };
    let at = e.offset.map(|o| format!(" at byte {o}")).unwrap_or_default();
    Some((rec, format!("{}: error{at}: {}", line.number, e.message)))
}

fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    json!(pairs.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

fn classify(input: &mut dyn BufRead, format: Format, out: &mut dyn Write) -> Result<u8, CliError> {
    let mut rep = Reporter::new(format, out, report::CLASSIFY_COLUMNS);
    let mut code = EXIT_OK;
    for line in graph6_lines(input) {
        let line = line?;
        let g = match &line.graph {
            Ok(g) => g,
            Err(_) => {
                let (rec, human) = error_record(&line).expect("decode failed");
                rep.emit(&rec, || human)?;
                code = EXIT_FINDINGS;
                continue;
            }
        };
        let c = main_classify(g);
        let (hypothesis, detail, detail_text) = match &c {
            Classification::HypothesisFail(f) => {
                let (d, t) = match f {
                    HypothesisFailure::TooSmall { n } => (json!({ "n": n }), format!("n={n}")),
                    HypothesisFailure::MinDegree { vertex, degree } => (
                        json!({ "vertex": vertex, "degree": degree }),
                        format!("vertex {vertex} has degree {degree}"),
                    ),
                    HypothesisFailure::PerfectMatching(m) => (
                        pairs_json(m.pairs()),
                        format!(
                            "perfect matching {}",
                            m.pairs().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
                        ),
                    ),
                    HypothesisFailure::Triangle(t) => {
                        (json!([t.u, t.v, t.w]), format!("triangle {}-{}-{}", t.u, t.v, t.w))
                    }
                };
                (Some(f.label()), d, format!(" ({}) {t}", f.label()))
            }
            Classification::ConcludedBalancedBipartite { a, b } => {
                (None, json!({ "a": a, "b": b }), format!(" K({a},{b})"))
            }
            _ => (None, Value::Null, String::new()),
        };
        let family = identify(g).to_string();
        if c == Classification::Counterexample {
            code = EXIT_FINDINGS;
        }
        let rec = record! {
            "record": "classification",
            "line": line.number,
            "graph6": line.text,
            "verdict": c.label(),
            "hypothesis": hypothesis,
            "detail": detail,
            "family": family,
        };
        rep.emit(&rec, || format!("{}: {} {}{detail_text} [{family}]", line.number, line.text, c.label()))?;
    }
    rep.finish()?;
    Ok(code)
}

fn check(input: &mut dyn BufRead, args: &CheckArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let mut rep = Reporter::new(args.format, out, report::CHECK_COLUMNS);
    let mut code = EXIT_OK;
    let wants = |p: Property| args.props.contains(&p);
    for line in graph6_lines(input) {
        let line = line?;
        let g = match &line.graph {
            Ok(g) => g,
            Err(_) => {
                let (rec, human) = error_record(&line).expect("decode failed");
                rep.emit(&rec, || human)?;
                code = code.max(EXIT_FINDINGS);
                continue;
            }
        };
        let mut rec = record! { "record": "check", "line": line.number, "graph6": line.text };
        let mut human = vec![format!("{}: {}", line.number, line.text)];
        let mut put = |rec: &mut Record, key: &str, value: Value, text: String| {
            human.push(format!("{key}={text}"));
            rec.insert(key.into(), value);
        };
        if wants(Property::Stats) {
            let s = stats(g);
            put(&mut rec, "n", json!(s.n), s.n.to_string());
            put(&mut rec, "m", json!(s.m), s.m.to_string());
            put(&mut rec, "min_degree", json!(s.min_degree), s.min_degree.to_string());
            put(&mut rec, "max_degree", json!(s.max_degree), s.max_degree.to_string());
            let (dv, dt) = match s.diameter {
                Diameter::Finite(d) => (json!(d), d.to_string()),
                Diameter::Disconnected => (json!("disconnected"), "disconnected".into()),
            };
            put(&mut rec, "diameter", dv, dt);
            let rt = s.regular_degree.map_or("none".into(), |d| d.to_string());
            put(&mut rec, "regular_degree", json!(s.regular_degree), rt);
        }
        if wants(Property::Triangle) {
            let t = find_triangle(g);
            let text = t.map_or("none".into(), |t| format!("{}-{}-{}", t.u, t.v, t.w));
            put(&mut rec, "triangle", json!(t.map(|t| [t.u, t.v, t.w])), text);
        }
        if wants(Property::Bipartite) {
            let cert = is_bipartite(g);
            put(&mut rec, "bipartite", json!(cert.is_bipartite()), cert.is_bipartite().to_string());
            match &cert {
                BipartitenessCertificate::TwoColoring { .. } => {
                    let (a, b) = cert.part_sizes(g.order()).expect("two-colouring");
                    put(&mut rec, "parts", json!([a, b]), format!("{a},{b}"));
                }
                BipartitenessCertificate::OddCycle(c) => {
                    let text = c.iter().map(usize::to_string).collect::<Vec<_>>().join("-");
                    put(&mut rec, "odd_cycle", json!(c), text);
                }
            }
        }
        if wants(Property::Matching) {
            let m = maximum_matching(g);
            put(&mut rec, "matching_size", json!(m.size()), m.size().to_string());
            let text = m.pairs().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",");
            put(&mut rec, "matching", pairs_json(m.pairs()), text);
        }
        if wants(Property::HamPath) {
            match has_hamiltonian_path(g) {
                Ok(b) => put(&mut rec, "ham_path", json!(b), b.to_string()),
                Err(e) => {
                    put(&mut rec, "ham_path", Value::Null, "error".into());
                    put(&mut rec, "error", json!(e.to_string()), format!("\"{e}\""));
                    code = EXIT_ERROR;
                }
            }
        }
        if wants(Property::Family) {
            let f = identify(g).to_string();
            put(&mut rec, "family", json!(f), f.clone());
        }
        if let Some(t) = args.theorem {
            let t = TheoremId::from(t);
            put(&mut rec, "theorem", json!(t.name()), t.name().into());
            match theorems::check(t, g) {
                Ok(o) => {
                    put(&mut rec, "hypothesis_met", json!(o.hypothesis_met), o.hypothesis_met.to_string());
                    let (fv, ft) = match &o.finding {
                        Some(f) => {
                            code = code.max(EXIT_FINDINGS);
                            (
                                json!({ "kind": f.kind, "quantities": quantities(&f.quantities) }),
                                format!("{} {}", f.kind, quantities_text(&f.quantities)),
                            )
                        }
                        None => (Value::Null, "none".into()),
                    };
                    put(&mut rec, "finding", fv, ft);
                }
                Err(e) => {
                    put(&mut rec, "error", json!(e.to_string()), format!("\"{e}\""));
                    code = EXIT_ERROR;
                }
            }
        }
        rep.emit(&rec, || human.join(" "))?;
    }
    rep.finish()?;
    Ok(code)
}

fn quantities(q: &[(&str, usize)]) -> Value {
    Value::Object(q.iter().map(|&(k, v)| (k.to_string(), json!(v))).collect())
}

fn quantities_text(q: &[(&str, usize)]) -> String {
    q.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

impl RangeArgs {
    fn resolve(&self) -> Result<(usize, usize), CliError> {
        let (lo, hi) = match (self.n, self.min_n, self.max_n) {
            (Some(n), _, _) => (n, n),
            (None, lo, Some(hi)) => (lo.unwrap_or(1), hi),
            (None, _, None) => return Err(CliError::Usage("give --n or --max-n".into())),
        };
        if lo == 0 || lo > hi {
            return Err(CliError::Usage(format!("empty order range {lo}..{hi}")));
        }
        if hi > ENUMERATION_CAP {
            return Err(CliError::Core(Error::Capacity { what: "graph enumeration", n: hi, cap: ENUMERATION_CAP }));
        }
        Ok((lo, hi))
    }
}

impl FilterArgs {
    /// Tightens `base` by the user's flags; `None` when no graph on `n`
    /// vertices can reach the requested minimum degree.
    fn apply(&self, base: GenFilter, n: usize) -> Option<GenFilter> {
        let min_degree = match (base.min_degree, self.min_degree) {
            (a, None) => a,
            (None, b) => b,
            (Some(a), Some(b)) => Some(a.max(b)),
        };
        if min_degree.is_some_and(|t| t > n - 1) {
            return None;
        }
        Some(GenFilter {
            triangle_free: base.triangle_free || self.triangle_free,
            min_degree,
            connected_only: base.connected_only || self.connected,
        })
    }
}

fn worker_count(jobs: Option<u16>) -> usize {
    jobs.map(usize::from)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn enumerate(args: &EnumerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let (lo, hi) = args.range.resolve()?;
    let jobs = worker_count(args.jobs);
    let mut rep = Reporter::new(args.format, out, report::ENUMERATE_COLUMNS);
    for n in lo..=hi {
        let start = Instant::now();
        let graphs = match args.filter.apply(GenFilter::default(), n) {
            Some(filter) => parallel::enumerate(n, filter, jobs)?,
            None => Vec::new(),
        };
        for g in &graphs {
            let code = graph6::encode(g);
            let rec = record! { "record": "graph", "n": n, "m": g.edge_count(), "graph6": code };
            rep.emit(&rec, || code.clone())?;
        }
        writeln!(err, "n={n}: {} classes in {:.3?}", graphs.len(), start.elapsed())?;
    }
    rep.finish()?;
    Ok(EXIT_OK)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let theorem: TheoremId = args
        .theorem
        .or(args.theorem_pos)
        .ok_or_else(|| CliError::Usage("a theorem is required".into()))?
        .into();
    let (lo, hi) = args.range.resolve()?;
    let jobs = worker_count(args.jobs);
    let mut rep = Reporter::new(args.format, out, report::VERIFY_COLUMNS);
    let (mut scanned, mut satisfied, mut violations) = (0u64, 0u64, 0usize);
    for n in lo..=hi {
        let start = Instant::now();
        let base = if args.no_pushdown { GenFilter::default() } else { theorem.default_filter(n) };
        let tally = match args.filter.apply(base, n) {
            Some(filter) => parallel::scan(theorem, n, filter, jobs)?,
            None => ScanTally::new(theorem, n),
        };
        writeln!(err, "{theorem} n={n}: {} graphs in {:.3?}", tally.graphs_scanned, start.elapsed())?;
        scanned += tally.graphs_scanned;
        satisfied += tally.hypothesis_satisfied;
        violations += tally.violation_count();
        emit_tally(&mut rep, &tally)?;
    }
    let status = if violations == 0 { "pass" } else { "fail" };
    let rec = record! {
        "record": "summary",
        "theorem": theorem.name(),
        "min_n": lo,
        "max_n": hi,
        "graphs_scanned": scanned,
        "hypothesis_satisfied": satisfied,
        "violations": violations,
        "status": status,
    };
    rep.emit(&rec, || {
        format!(
            "{theorem} n={lo}..{hi}: {scanned} graphs, {satisfied} satisfy the hypotheses, {violations} violations: {}",
            status.to_uppercase()
        )
    })?;
    rep.finish()?;
    Ok(if violations == 0 { EXIT_OK } else { EXIT_FINDINGS })
}

fn family_of(code: &str) -> String {
    graph6::decode(code).map(|g| identify(&g).to_string()).unwrap_or_default()
}

fn emit_tally<W: Write>(rep: &mut Reporter<W>, t: &ScanTally) -> io::Result<()> {
    let name = t.theorem.name();
    let mut rec = record! {
        "record": "scan",
        "theorem": name,
        "n": t.n,
        "graphs_scanned": t.graphs_scanned,
        "hypothesis_satisfied": t.hypothesis_satisfied,
        "violations": t.violation_count(),
    };
    let mut human = format!(
        "{name} n={}: {} graphs, {} satisfy the hypotheses, {} violations",
        t.n,
        t.graphs_scanned,
        t.hypothesis_satisfied,
        t.violation_count()
    );
    if let Some(unique) = t.extremal_unique() {
        rec.insert("extremal_unique".into(), json!(unique));
        human.push_str(&format!(", {} extremal classes", t.witnesses.len()));
    }
    rep.emit(&rec, || human)?;
    for f in &t.counterexamples {
        let family = family_of(&f.graph6);
        let rec = record! {
            "record": "counterexample",
            "theorem": name,
            "n": t.n,
            "graph6": f.graph6,
            "kind": f.kind,
            "family": family,
            "quantities": quantities(&f.quantities),
        };
        rep.emit(&rec, || {
            format!("  counterexample {} {} {} [{family}]", f.graph6, f.kind, quantities_text(&f.quantities))
        })?;
    }
    for w in &t.witnesses {
        let family = w.family.to_string();
        let rec = record! {
            "record": "witness",
            "theorem": name,
            "n": t.n,
            "graph6": w.graph6,
            "family": family,
        };
        rep.emit(&rec, || format!("  witness {} [{family}]", w.graph6))?;
    }
    Ok(())
}
