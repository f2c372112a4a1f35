//! Batch front door for the library: inspect a single code, print threshold
//! reports, derive quantum parameter sets, scan parameter grids, and run the
//! formula-vs-oracle verification suite.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 outside a theorem's
//! hypotheses, 3 verification found mismatches.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use bchkit::bch::{distance_verdict, BchCode};
use bchkit::duality::{
    euclidean_dual_containing, hermitian_dual_containing, threshold_report, Flavor,
    ThresholdReport,
};
use bchkit::oracle::{run_grid, Check, DeltaSpec, GridSpec, OracleBudget};
use bchkit::quantum::{self, QuantumCodeParams};
use bchkit::{Error, Result};

#[derive(Parser)]
#[command(
    name = "bchkit",
    version,
    about = "BCH codes over finite fields: construction, dual containment, \
             distance thresholds, quantum parameter families, and brute-force \
             verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one BCH code and print its record as JSON.
    Code(CodeArgs),
    /// Print the dual-containment threshold report for (n, q).
    Thresholds(ThresholdsArgs),
    /// Derive a quantum stabilizer parameter set from classical ingredients.
    Quantum(QuantumArgs),
    /// Enumerate code (or quantum) records over a parameter grid.
    Scan(ScanArgs),
    /// Cross-check the formula route against the brute-force oracle.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Code length, coprime to the alphabet size.
    n: u64,
    /// Field size (with --hermitian this is the base q̄; the code lives over q̄²).
    q: u64,
    /// First designed exponent; b = 1 is narrow-sense.
    b: u64,
    /// Designed distance, at least 2.
    #[arg(value_parser = clap::value_parser!(u64).range(2..))]
    delta: u64,
    /// Use the Hermitian inner product (alphabet q² with base q).
    #[arg(long)]
    hermitian: bool,
    /// Include generator polynomial coefficients, ascending powers.
    #[arg(long)]
    with_generator: bool,
}

#[derive(Args)]
struct ThresholdsArgs {
    n: u64,
    /// Base parameter: the alphabet for Euclidean, q̄ for Hermitian.
    q: u64,
    #[arg(long, value_enum, default_value_t = FlavorArg::Euclidean)]
    flavor: FlavorArg,
}

#[derive(Args)]
struct QuantumArgs {
    /// Construction family.
    #[arg(long, value_enum)]
    family: Family,
    /// nested: n q δ₁ δ₂ · euclid: n q δ · hermitian: n q̄ δ · expanded: n q l δ
    #[arg(required = true, num_args = 3..=4)]
    params: Vec<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Nested,
    Euclid,
    Hermitian,
    Expanded,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Euclidean,
    Hermitian,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Euclidean => Flavor::Euclidean,
            FlavorArg::Hermitian => Flavor::Hermitian,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    Codes,
    Quantum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

/// Grid and budget flags shared by `scan` and `verify`. Precedence per
/// field: flag, then environment (parallelism and budgets only), then the
/// --config file, then the built-in default.
#[derive(Args)]
struct GridArgs {
    /// Field sizes to scan, comma-separated (base q̄ for Hermitian).
    #[arg(long = "q", value_delimiter = ',')]
    q: Vec<u64>,
    /// Smallest length (default 2).
    #[arg(long)]
    n_min: Option<u64>,
    /// Largest length.
    #[arg(long)]
    n_max: Option<u64>,
    /// Offsets b to sweep, comma-separated (default 1).
    #[arg(long = "b", value_delimiter = ',')]
    b: Vec<u64>,
    /// Designed distances: "auto" (up to the sufficient threshold), "all",
    /// or an inclusive range "A..B".
    #[arg(long)]
    delta: Option<String>,
    #[arg(long, value_enum)]
    flavor: Option<FlavorArg>,
    /// Worker threads (env BCHKIT_PARALLELISM).
    #[arg(long)]
    parallelism: Option<usize>,
    /// TOML config file supplying any of the grid fields; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Oracle cap on enumerated vectors (env BCHKIT_MAX_MESSAGES).
    #[arg(long)]
    max_messages: Option<u64>,
    /// Oracle cap on swept codeword weight (env BCHKIT_MAX_WEIGHT).
    #[arg(long)]
    max_weight: Option<u64>,
    /// Oracle wall-clock cap per search (env BCHKIT_TIME_BUDGET_SECS).
    #[arg(long)]
    time_budget_secs: Option<u64>,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Emit classical code records or quantum parameter sets.
    #[arg(long, value_enum)]
    emit: Option<EmitArg>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Include generator coefficients (JSON format only).
    #[arg(long)]
    with_generator: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Checks to run, comma-separated: containment, dimension, bch_bound,
    /// distance_verdict, dual_distance, or "all".
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
}

/// Optional config-file counterpart of [`GridArgs`] plus scan/verify extras.
#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    q: Option<Vec<u64>>,
    n_min: Option<u64>,
    n_max: Option<u64>,
    b: Option<Vec<u64>>,
    delta: Option<String>,
    flavor: Option<String>,
    emit: Option<String>,
    format: Option<String>,
    checks: Option<Vec<String>>,
    parallelism: Option<usize>,
    max_messages: Option<u64>,
    max_weight: Option<u64>,
    time_budget_secs: Option<u64>,
}

struct ResolvedGrid {
    spec: GridSpec,
    budget: OracleBudget,
    parallelism: usize,
    file: FileConfig,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::HypothesisViolated(_) | Error::NotApplicable(_) | Error::NotNested => 2,
                _ => 1,
            })
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Code(args) => cmd_code(args),
        Command::Thresholds(args) => cmd_thresholds(args),
        Command::Quantum(args) => cmd_quantum(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_code(args: CodeArgs) -> Result<ExitCode> {
    let flavor = if args.hermitian { Flavor::Hermitian } else { Flavor::Euclidean };
    let record = code_record(args.n, args.q, args.b, args.delta, flavor, args.with_generator)?;
    println!("{record}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_thresholds(args: ThresholdsArgs) -> Result<ExitCode> {
    let report = threshold_report(args.n, args.q, args.flavor.into())?;
    println!("{}", threshold_record(&report));
    Ok(ExitCode::SUCCESS)
}

fn cmd_quantum(args: QuantumArgs) -> Result<ExitCode> {
    let p = &args.params;
    let arity = |family: &str, want: usize| -> Result<()> {
        if p.len() == want {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "family {family} takes {want} parameters, got {}",
                p.len()
            )))
        }
    };
    let params = match args.family {
        Family::Nested => {
            arity("nested", 4)?;
            quantum::nested_css(p[0], p[1], p[2], p[3])?
        }
        Family::Euclid => {
            arity("euclid", 3)?;
            quantum::euclid_css(p[0], p[1], p[2])?
        }
        Family::Hermitian => {
            arity("hermitian", 3)?;
            quantum::hermitian_family(p[0], p[1], p[2])?
        }
        Family::Expanded => {
            arity("expanded", 4)?;
            quantum::expanded_family(p[0], p[1], p[2], p[3])?
        }
    };
    println!("{}", quantum_record(&params));
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode> {
    let resolved = resolve_grid(&args.grid)?;
    let emit = match args.emit {
        Some(e) => e,
        None => match resolved.file.emit.as_deref() {
            Some("codes") | None => EmitArg::Codes,
            Some("quantum") => EmitArg::Quantum,
            Some(other) => {
                return Err(Error::InvalidParameter(format!("unknown emit kind {other:?}")))
            }
        },
    };
    let format = match args.format {
        Some(f) => f,
        None => match resolved.file.format.as_deref() {
            Some("json") | None => FormatArg::Json,
            Some("csv") => FormatArg::Csv,
            Some("table") => FormatArg::Table,
            Some(other) => {
                return Err(Error::InvalidParameter(format!("unknown format {other:?}")))
            }
        },
    };
    let pool = thread_pool(resolved.parallelism)?;
    let rows = pool.install(|| scan_rows(&resolved.spec, emit, args.with_generator))?;
    emit_rows(&rows, emit, format);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let resolved = resolve_grid(&args.grid)?;
    let names: Vec<String> = if args.checks.is_empty() {
        resolved
            .file
            .checks
            .clone()
            .unwrap_or_else(|| vec!["containment".into(), "dimension".into()])
    } else {
        args.checks.clone()
    };
    let checks = parse_checks(&names)?;
    let pool = thread_pool(resolved.parallelism)?;
    let report = pool.install(|| run_grid(&resolved.spec, &checks, &resolved.budget))?;
    for m in &report.mismatches {
        let mut v = serde_json::to_value(m).expect("mismatch serializes");
        v.as_object_mut().expect("object").insert("type".into(), json!("mismatch"));
        println!("{v}");
    }
    for i in &report.inconclusive {
        let mut v = serde_json::to_value(i).expect("entry serializes");
        v.as_object_mut().expect("object").insert("type".into(), json!("inconclusive"));
        println!("{v}");
    }
    eprintln!(
        "verified {} instances ({} checks): {} mismatches, {} inconclusive",
        report.instances,
        report.checks_run,
        report.mismatches.len(),
        report.inconclusive.len()
    );
    Ok(if report.mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

/// One classical code as a flat JSON object (`schema` 1).
fn code_record(
    n: u64,
    q_base: u64,
    b: u64,
    delta: u64,
    flavor: Flavor,
    with_generator: bool,
) -> Result<Value> {
    let alphabet = match flavor {
        Flavor::Euclidean => q_base,
        Flavor::Hermitian => q_base
            .checked_mul(q_base)
            .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?,
    };
    let code = BchCode::construct(n, alphabet, b, delta)?;
    let dual_containing = match flavor {
        Flavor::Euclidean => euclidean_dual_containing(code.defining_set(), n),
        Flavor::Hermitian => hermitian_dual_containing(code.defining_set(), n, q_base),
    };
    // The BCH bound, sharpened by the counting verdict when it applies.
    let d_bound = if code.narrow_sense() {
        distance_verdict(n, alphabet, delta).map(|v| v.d_low).unwrap_or(delta)
    } else {
        delta
    };
    let mut record = json!({
        "schema": 1,
        "n": n,
        "q": q_base,
        "alphabet": alphabet,
        "b": code.b(),
        "delta": delta,
        "m": code.m(),
        "k": code.k(),
        "narrow_sense": code.narrow_sense(),
        "primitive": code.primitive(),
        "flavor": flavor.to_string(),
        "dual_containing": dual_containing,
        "d_bound": d_bound,
        "defining_set": code.defining_set(),
    });
    if with_generator {
        let g = code.generator_polynomial()?;
        record["generator"] = json!(g.coeffs());
    }
    Ok(record)
}

fn threshold_record(report: &ThresholdReport) -> Value {
    let mut record = json!({
        "schema": 1,
        "n": report.n,
        "q": report.q,
        "alphabet": report.alphabet,
        "m": report.m,
        "flavor": report.flavor.to_string(),
        "narrow_sense": report.narrow_sense,
        "sufficient": report.sufficient,
    });
    if let Some((num, den)) = report.kappa_parts() {
        record["kappa"] = json!({ "num": num, "den": den });
    }
    if let Some(v) = report.necessary {
        record["necessary"] = json!(v);
    }
    if let Some(v) = report.exact {
        record["exact"] = json!(v);
    }
    if let Some(v) = report.nonnarrow {
        record["nonnarrow"] = json!(v);
    }
    record
}

fn quantum_record(params: &QuantumCodeParams) -> Value {
    let mut v = serde_json::to_value(params).expect("quantum params serialize");
    v.as_object_mut().expect("object").insert("schema".into(), json!(1));
    v
}

fn parse_checks(names: &[String]) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for name in names {
        match name.as_str() {
            "all" => checks.extend(Check::all()),
            "containment" => checks.push(Check::Containment),
            "dimension" => checks.push(Check::Dimension),
            "bch_bound" => checks.push(Check::BchBound),
            "distance_verdict" => checks.push(Check::DistanceVerdict),
            "dual_distance" => checks.push(Check::DualDistance),
            other => {
                return Err(Error::InvalidParameter(format!("unknown check {other:?}")))
            }
        }
    }
    checks.sort_unstable();
    checks.dedup();
    Ok(checks)
}

fn parse_delta_spec(s: &str) -> Result<DeltaSpec> {
    match s {
        "auto" => Ok(DeltaSpec::Auto),
        "all" => Ok(DeltaSpec::FullRange),
        _ => {
            let (lo, hi) = s
                .split_once("..")
                .ok_or_else(|| Error::InvalidParameter(format!("bad delta spec {s:?}")))?;
            let lo = lo
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad delta bound {lo:?}")))?;
            let hi = hi
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad delta bound {hi:?}")))?;
            if lo < 2 || hi < lo {
                return Err(Error::InvalidParameter(format!(
                    "delta range must satisfy 2 <= {lo} <= {hi}"
                )));
            }
            Ok(DeltaSpec::Range(lo, hi))
        }
    }
}

fn parse_flavor(s: &str) -> Result<Flavor> {
    match s {
        "euclidean" => Ok(Flavor::Euclidean),
        "hermitian" => Ok(Flavor::Hermitian),
        other => Err(Error::InvalidParameter(format!("unknown flavor {other:?}"))),
    }
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok().and_then(|v| v.parse().ok())
}

fn resolve_grid(args: &GridArgs) -> Result<ResolvedGrid> {
    let file: FileConfig = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
            })?;
            toml::from_str(&text)
                .map_err(|e| Error::InvalidParameter(format!("bad config file: {e}")))?
        }
        None => FileConfig::default(),
    };
    let qs = if args.q.is_empty() { file.q.clone().unwrap_or_default() } else { args.q.clone() };
    if qs.is_empty() {
        return Err(Error::InvalidParameter(
            "no field sizes given; pass --q or set q in the config file".into(),
        ));
    }
    let n_min = args.n_min.or(file.n_min).unwrap_or(2);
    let n_max = args
        .n_max
        .or(file.n_max)
        .ok_or_else(|| Error::InvalidParameter("no --n-max given".into()))?;
    if n_min > n_max {
        return Err(Error::InvalidParameter(format!("empty length range {n_min}..{n_max}")));
    }
    let bs = if args.b.is_empty() {
        file.b.clone().unwrap_or_else(|| vec![1])
    } else {
        args.b.clone()
    };
    if bs.is_empty() {
        return Err(Error::InvalidParameter("empty offset list".into()));
    }
    let delta_text: &str = args.delta.as_deref().or(file.delta.as_deref()).unwrap_or("auto");
    let delta = parse_delta_spec(delta_text)?;
    let flavor = match args.flavor {
        Some(f) => f.into(),
        None => match file.flavor.as_deref() {
            Some(s) => parse_flavor(s)?,
            None => Flavor::Euclidean,
        },
    };
    let parallelism = args
        .parallelism
        .or_else(|| env_parse("BCHKIT_PARALLELISM"))
        .or(file.parallelism)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if parallelism == 0 {
        return Err(Error::InvalidParameter("parallelism must be at least 1".into()));
    }
    let defaults = OracleBudget::default();
    let budget = OracleBudget {
        max_messages: args
            .max_messages
            .or_else(|| env_parse("BCHKIT_MAX_MESSAGES"))
            .or(file.max_messages)
            .unwrap_or(defaults.max_messages),
        max_weight: args
            .max_weight
            .or_else(|| env_parse("BCHKIT_MAX_WEIGHT"))
            .or(file.max_weight)
            .unwrap_or(defaults.max_weight),
        time_budget: Duration::from_secs(
            args.time_budget_secs
                .or_else(|| env_parse("BCHKIT_TIME_BUDGET_SECS"))
                .or(file.time_budget_secs)
                .unwrap_or(defaults.time_budget.as_secs()),
        ),
    };
    let spec = GridSpec { qs, n_min, n_max, bs, delta, flavor };
    Ok(ResolvedGrid { spec, budget, parallelism, file })
}

fn thread_pool(parallelism: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot build thread pool: {e}")))
}

/// A scan row keyed for deterministic (q, n, b, δ) output order.
struct ScanRow {
    key: (u64, u64, u64, u64),
    record: Value,
}

fn scan_rows(spec: &GridSpec, emit: EmitArg, with_generator: bool) -> Result<Vec<ScanRow>> {
    use bchkit::arith::gcd;
    use rayon::prelude::*;

    let mut qs = spec.qs.clone();
    qs.sort_unstable();
    qs.dedup();
    let mut pairs = Vec::new();
    for &q in &qs {
        let alphabet = match spec.flavor {
            Flavor::Euclidean => q,
            Flavor::Hermitian => q
                .checked_mul(q)
                .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?,
        };
        for n in spec.n_min.max(2)..=spec.n_max {
            if gcd(n, alphabet) == 1 {
                pairs.push((q, n));
            }
        }
    }
    let groups: Vec<Vec<ScanRow>> = pairs
        .par_iter()
        .map(|&(q, n)| scan_pair(spec, q, n, emit, with_generator))
        .collect::<Result<_>>()?;
    let mut rows: Vec<ScanRow> = groups.into_iter().flatten().collect();
    rows.sort_by_key(|row| row.key);
    Ok(rows)
}

fn scan_pair(
    spec: &GridSpec,
    q: u64,
    n: u64,
    emit: EmitArg,
    with_generator: bool,
) -> Result<Vec<ScanRow>> {
    let (lo, hi) = match spec.delta {
        DeltaSpec::Auto => {
            let report = threshold_report(n, q, spec.flavor)?;
            (2, report.sufficient.min(n))
        }
        DeltaSpec::FullRange => (2, n),
        DeltaSpec::Range(lo, hi) => (lo.max(2), hi.min(n)),
    };
    let mut bs: Vec<u64> = match emit {
        // The quantum families are narrow-sense constructions.
        EmitArg::Quantum => vec![1],
        EmitArg::Codes => spec.bs.iter().map(|&b| b % n).collect(),
    };
    bs.sort_unstable();
    bs.dedup();
    let mut rows = Vec::new();
    for delta in lo..=hi {
        for &b in &bs {
            let record = match emit {
                EmitArg::Codes => {
                    Some(code_record(n, q, b, delta, spec.flavor, with_generator)?)
                }
                EmitArg::Quantum => {
                    let built = match spec.flavor {
                        Flavor::Euclidean => quantum::euclid_css(n, q, delta),
                        Flavor::Hermitian => quantum::hermitian_family(n, q, delta),
                    };
                    match built {
                        Ok(params) => Some(quantum_record(&params)),
                        // Outside the family's hypotheses: no row.
                        Err(Error::HypothesisViolated(_)) | Err(Error::NotApplicable(_)) => None,
                        Err(e) => return Err(e),
                    }
                }
            };
            if let Some(record) = record {
                rows.push(ScanRow { key: (q, n, b, delta), record });
            }
        }
    }
    Ok(rows)
}

const CODE_COLUMNS: &[&str] = &[
    "q", "alphabet", "n", "b", "delta", "m", "k", "narrow_sense", "primitive", "flavor",
    "dual_containing", "d_bound",
];
const QUANTUM_COLUMNS: &[&str] =
    &["q", "n", "delta", "k", "d_low", "pure_to", "construction"];

fn cell(row: &ScanRow, column: &str) -> String {
    if column == "delta" {
        return row.key.3.to_string();
    }
    match row.record.get(column) {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

fn emit_rows(rows: &[ScanRow], emit: EmitArg, format: FormatArg) {
    let columns = match emit {
        EmitArg::Codes => CODE_COLUMNS,
        EmitArg::Quantum => QUANTUM_COLUMNS,
    };
    match format {
        FormatArg::Json => {
            for row in rows {
                println!("{}", row.record);
            }
        }
        FormatArg::Csv => {
            // Cells are numbers, booleans, and bare identifiers; no quoting
            // is ever needed.
            println!("{}", columns.join(","));
            for row in rows {
                let cells: Vec<String> = columns.iter().map(|c| cell(row, c)).collect();
                println!("{}", cells.join(","));
            }
        }
        FormatArg::Table => {
            let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|row| columns.iter().map(|c| cell(row, c)).collect())
                .collect();
            for cells in &table {
                for (w, cell) in widths.iter_mut().zip(cells) {
                    *w = (*w).max(cell.len());
                }
            }
            let print_line = |cells: &[String]| {
                let line: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect();
                println!("{}", line.join("  ").trim_end());
            };
            print_line(&columns.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            for cells in &table {
                print_line(cells);
            }
        }
    }
}
