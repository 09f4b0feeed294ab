//! Command-line surface: distances, isometry checks, cube export, sequences
//! and the comparison table.
//!
//! Exit codes: 0 on success, 1 on a domain error (including a failed
//! `table1 --verify`), 2 on a usage error.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::counting;
use crate::cube::{CubeGraph, Metric};
use crate::distance::{minimal_transformations, EditOp, Transformation};
use crate::isometry::{self, IsometryVerdict, Status, Witness};
use crate::word::{count_f_free, BinaryWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable consulted for the worker count.
pub const WORKERS_ENV: &str = "TILDECUBE_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "tildecube", version, about = "Tilde distance, tilde-hypercubes and isometric words")]
pub struct Cli {
    /// Worker threads for parallel checks (defaults to all cores).
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two equal-length words.
    Dist(DistArgs),
    /// Check whether a word is tilde- and/or Ham-isometric up to an order.
    Check(CheckArgs),
    /// Classify every word of one length.
    Classify(ClassifyArgs),
    /// Build a cube and print it as DOT or an edge list.
    Build(BuildArgs),
    /// Diameter of a cube.
    Diameter(DiameterArgs),
    /// Print an integer sequence, one "n value" line per term.
    Seq(SeqArgs),
    /// Reproduce the vertex/edge/ratio comparison table.
    Table1(Table1Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Ham,
    Tilde,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Ham => Metric::Hamming,
            MetricArg::Tilde => Metric::Tilde,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricChoice {
    Ham,
    Tilde,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqName {
    /// |E(Q_n)|
    #[value(name = "EQ")]
    EdgesHypercube,
    /// |E(Q~_n)|
    #[value(name = "EQtilde")]
    EdgesTildeHypercube,
    /// |E(F_n)|
    #[value(name = "EF")]
    EdgesFibonacci,
    /// |E(F~_n)|
    #[value(name = "EFtilde")]
    EdgesTildeFibonacci,
    /// f_n
    #[value(name = "fib")]
    Fibonacci,
    /// |V(F_n)| = f_(n+2)
    #[value(name = "Vfib")]
    VerticesFibonacci,
}

fn parse_word(s: &str) -> Result<BinaryWord, String> {
    s.parse::<BinaryWord>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(value_parser = parse_word)]
    pub u: BinaryWord,
    #[arg(value_parser = parse_word)]
    pub v: BinaryWord,
    #[arg(long, value_enum, default_value_t = MetricArg::Tilde)]
    pub metric: MetricArg,
    /// Also print one minimal transformation.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_parser = parse_word)]
    pub word: BinaryWord,
    /// Largest order examined (defaults to |word| + 4).
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = MetricChoice::Both)]
    pub metric: MetricChoice,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    pub format: TextOrJson,
    /// Refuse when the largest cube has more vertex pairs than this.
    #[arg(long, default_value_t = 1 << 28)]
    pub max_pairs: u128,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Word length, 2 to 5.
    pub length: usize,
    /// Largest order examined (defaults to length + 4).
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    pub format: TextOrJson,
    #[arg(long, default_value_t = 1 << 28)]
    pub max_pairs: u128,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MetricArg::Tilde)]
    pub metric: MetricArg,
    #[arg(long, value_parser = parse_word)]
    pub avoid: Option<BinaryWord>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
    pub format: GraphFormat,
    /// Write to a file instead of stdout.
    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
    /// Largest order allowed (defaults to 16, or 20 with --avoid).
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DiameterArgs {
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MetricArg::Tilde)]
    pub metric: MetricArg,
    #[arg(long, value_parser = parse_word)]
    pub avoid: Option<BinaryWord>,
    /// Largest order allowed (defaults to 14, or 16 with --avoid).
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub name: SeqName,
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(default_value_t = 4)]
    pub from: usize,
    #[arg(default_value_t = 16)]
    pub to: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
    /// Compare against the embedded expected cells and fail on any mismatch.
    #[arg(long)]
    pub verify: bool,
}

/// JSON form of a check result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub word: BinaryWord,
    pub metric: Metric,
    pub status: Status,
    pub checked_max_n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn new(word: BinaryWord, metric: Metric, verdict: &IsometryVerdict) -> Self {
        Self {
            word,
            metric,
            status: verdict.status,
            checked_max_n: verdict.checked_max_n,
            witness: verdict.witness,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    if let Some(workers) = cli.workers {
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build_global();
    }
    let result = match &cli.command {
        Command::Dist(a) => dist(a, out),
        Command::Check(a) => check(a, out),
        Command::Classify(a) => classify(a, out),
        Command::Build(a) => build(a, out),
        Command::Diameter(a) => diameter(a, out),
        Command::Seq(a) => seq(a, out),
        Command::Table1(a) => table1(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Domain(format!("write failed: {e}"))
}

fn dist(a: &DistArgs, out: &mut dyn Write) -> CmdResult {
    if a.u.len() != a.v.len() {
        return Err(Failure::Usage(format!(
            "words must have equal length, got {} and {}",
            a.u.len(),
            a.v.len()
        )));
    }
    let metric = Metric::from(a.metric);
    let d = metric.distance(&a.u, &a.v)?;
    writeln!(out, "{d}").map_err(io)?;
    if a.explain {
        let t = match metric {
            Metric::Tilde => minimal_transformations(&a.u, &a.v)?
                .into_iter()
                .next()
                .expect("a minimal transformation exists"),
            Metric::Hamming => Transformation {
                start: a.u,
                ops: (1..=a.u.len())
                    .filter(|&i| a.u.symbols().nth(i - 1) != a.v.symbols().nth(i - 1))
                    .map(EditOp::Replace)
                    .collect(),
            },
        };
        writeln!(out, "{t}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn check_pair_budget(f: &BinaryWord, max_n: usize, max_pairs: u128) -> Result<(), Failure> {
    if max_n < f.len() || max_n > crate::cube::MAX_ORDER {
        return Err(Failure::Domain(format!(
            "--max-n {max_n} must lie in {}..={}",
            f.len(),
            crate::cube::MAX_ORDER
        )));
    }
    let vertices = count_f_free(max_n, f)?;
    let pairs = vertices * vertices.saturating_sub(1) / 2;
    if pairs > max_pairs {
        return Err(Failure::Domain(format!(
            "order {max_n} needs {pairs} vertex pairs, above the limit {max_pairs} (raise with --max-pairs)"
        )));
    }
    Ok(())
}

fn check(a: &CheckArgs, out: &mut dyn Write) -> CmdResult {
    if a.word.is_empty() {
        return Err(Failure::Usage("the word must be non-empty".into()));
    }
    let max_n = a.max_n.unwrap_or(a.word.len() + 4);
    check_pair_budget(&a.word, max_n, a.max_pairs)?;
    let metrics: &[Metric] = match a.metric {
        MetricChoice::Tilde => &[Metric::Tilde],
        MetricChoice::Ham => &[Metric::Hamming],
        MetricChoice::Both => &[Metric::Tilde, Metric::Hamming],
    };
    let mut reports = Vec::new();
    for &metric in metrics {
        let verdict = isometry::check_isometric(&a.word, max_n, metric)?;
        reports.push(CheckReport::new(a.word, metric, &verdict));
    }
    match a.format {
        TextOrJson::Text => {
            for r in &reports {
                let verdict = IsometryVerdict {
                    status: r.status,
                    checked_max_n: r.checked_max_n,
                    witness: r.witness,
                };
                writeln!(out, "{}", render::verdict_line(&r.word.to_string(), r.metric, &verdict))
                    .map_err(io)?;
            }
        }
        TextOrJson::Json => {
            let text = if reports.len() == 1 {
                serde_json::to_string(&reports[0])
            } else {
                serde_json::to_string(&reports)
            }
            .expect("reports serialize");
            writeln!(out, "{text}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn classify(a: &ClassifyArgs, out: &mut dyn Write) -> CmdResult {
    if !(2..=5).contains(&a.length) {
        return Err(Failure::Domain(format!(
            "length {} outside the supported range 2..=5",
            a.length
        )));
    }
    let max_n = a.max_n.unwrap_or(a.length + 4);
    let ones = BinaryWord::repeat(1, a.length)?;
    // The all-zero word avoids the most words; bounds every length-`length` factor.
    check_pair_budget(&ones, max_n, a.max_pairs)?;
    let rows = isometry::classify_all_words(a.length, max_n)?;
    match a.format {
        TextOrJson::Text => {
            for r in &rows {
                writeln!(
                    out,
                    "{}  tilde: {:<20} ham: {}",
                    r.word,
                    render::status_word(&r.tilde),
                    render::status_word(&r.ham)
                )
                .map_err(io)?;
            }
        }
        TextOrJson::Json => {
            let text = serde_json::to_string(&rows).expect("rows serialize");
            writeln!(out, "{text}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn ceiling(n: usize, explicit: Option<usize>, default: usize) -> Result<(), Failure> {
    let limit = explicit.unwrap_or(default);
    if n > limit {
        return Err(Failure::Domain(format!(
            "order {n} exceeds the limit {limit} (raise with --max-n)"
        )));
    }
    Ok(())
}

fn build(a: &BuildArgs, out: &mut dyn Write) -> CmdResult {
    ceiling(a.n, a.max_n, if a.avoid.is_some() { 20 } else { 16 })?;
    let g = CubeGraph::build(a.n, a.metric.into(), a.avoid.as_ref())?;
    let text = match a.format {
        GraphFormat::Dot => render::dot(&g),
        GraphFormat::Edges => render::edge_list(&g),
    };
    match &a.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes()).map_err(io)?,
    }
    Ok(EXIT_OK)
}

fn diameter(a: &DiameterArgs, out: &mut dyn Write) -> CmdResult {
    ceiling(a.n, a.max_n, if a.avoid.is_some() { 16 } else { 14 })?;
    let g = CubeGraph::build(a.n, a.metric.into(), a.avoid.as_ref())?;
    writeln!(out, "{}", g.diameter()?).map_err(io)?;
    Ok(EXIT_OK)
}

fn seq(a: &SeqArgs, out: &mut dyn Write) -> CmdResult {
    if a.n_max == 0 {
        return Err(Failure::Usage("n_max must be at least 1".into()));
    }
    for n in 1..=a.n_max {
        let value: BigUint = match a.name {
            SeqName::EdgesHypercube => counting::edges_hypercube(n)?,
            SeqName::EdgesTildeHypercube => counting::edges_tilde_hypercube(n)?,
            SeqName::EdgesFibonacci => counting::edges_fibonacci(n)?,
            SeqName::EdgesTildeFibonacci => counting::edges_tilde_fibonacci(n)?,
            SeqName::Fibonacci => counting::fibonacci(n)?,
            SeqName::VerticesFibonacci => counting::vertices_fibonacci(n)?,
        };
        writeln!(out, "{n} {value}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn table1(a: &Table1Args, out: &mut dyn Write) -> CmdResult {
    let columns = counting::table1(a.from, a.to)?;
    if a.verify {
        let check = counting::verify_table1(&columns);
        for m in &check.mismatches {
            writeln!(
                out,
                "mismatch: {} at n={}: expected {}, computed {}",
                m.row, m.n, m.expected, m.computed
            )
            .map_err(io)?;
        }
        if check.all_match() {
            writeln!(out, "all {} cells match", check.compared).map_err(io)?;
            return Ok(EXIT_OK);
        }
        writeln!(
            out,
            "{} of {} cells mismatch",
            check.mismatches.len(),
            check.compared
        )
        .map_err(io)?;
        return Ok(EXIT_DOMAIN);
    }
    let text = match a.format {
        TableFormat::Text => render::table_text(&columns),
        TableFormat::Csv => render::table_csv(&columns)
            .map_err(|e| Failure::Domain(format!("csv: {e}")))?,
        TableFormat::Json => {
            serde_json::to_string(&columns).expect("columns serialize") + "\n"
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}
