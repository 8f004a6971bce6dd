//! Command-line front end: construct designs, build and check caching
//! schemes on them, reproduce the parameter table, and run simulations.
//! All structured I/O uses the library's JSON formats.

use clap::{Parser, Subcommand, ValueEnum};
use designcache::caching::{build_scheme, verify_cover, CachingMatrix, Cover, Scheme, SchemeError, SchemeInput, SchemeMetrics};
use designcache::delivery::{simulate, DeliveryError, SimulationReport};
use designcache::designs::{
    builtin_design, builtin_names, complement_design, construct_affine_plane_bibd,
    construct_inversive_plane, construct_projective_plane_bibd, construct_transversal_design,
    trivial_t_design, verify_t_design_budgeted, BuiltinDesign, Design, DesignError,
    TransversalDesign, VerificationOutcome, DEFAULT_SUBSET_BUDGET,
};
use designcache::gf::prime_power;
use designcache::rational::Rational;
use serde::Serialize;
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "designcache",
    version,
    about = "Construct block designs, build coded-caching schemes on them, and simulate delivery"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Affine,
    Projective,
    Inversive,
    Transversal,
    Trivial,
    Builtin,
    Complement,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Bibd,
    Symm,
    T1,
    T2,
    Td,
}

impl SchemeArg {
    fn to_scheme(self) -> Scheme {
        match self {
            SchemeArg::Bibd => Scheme::Bibd,
            SchemeArg::Symm => Scheme::Symm,
            SchemeArg::T1 => Scheme::T1,
            SchemeArg::T2 => Scheme::T2,
            SchemeArg::Td => Scheme::Td,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a design and emit it as JSON
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Plane order, point count for trivial designs, or table bound
        #[arg(long)]
        n: Option<usize>,
        /// Field order for inversive planes and transversal designs
        #[arg(long)]
        q: Option<usize>,
        /// Block size where the family needs one
        #[arg(long)]
        k: Option<usize>,
        /// Builtin fixture name
        #[arg(long)]
        name: Option<String>,
        /// Input design path (complement family)
        #[arg(long)]
        design: Option<PathBuf>,
        /// Output path for the design JSON (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Summaries as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build a scheme's caching matrix
    Matrix {
        #[command(flatten)]
        pipe: PipeArgs,
        /// Output path for the matrix JSON (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a scheme's identity-submatrix cover
    Cover {
        #[command(flatten)]
        pipe: PipeArgs,
        /// Output path for the cover JSON (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a scheme and check its cover
    Verify {
        #[command(flatten)]
        pipe: PipeArgs,
        #[arg(long)]
        json: bool,
    },
    /// Measure scheme parameters against their closed forms
    Metrics {
        #[command(flatten)]
        pipe: PipeArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run the full placement-and-delivery pipeline on random bytes
    Simulate {
        #[command(flatten)]
        pipe: PipeArgs,
        /// Library size (default: one file per user)
        #[arg(long)]
        n_files: Option<usize>,
        /// Subfile size in bytes
        #[arg(long, default_value_t = 64)]
        chunk: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate every supported scheme family over prime powers
    Table1 {
        /// Largest prime power to include
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args)]
struct PipeArgs {
    #[arg(long, value_enum)]
    scheme: SchemeArg,
    /// Design JSON path
    #[arg(long)]
    design: PathBuf,
    /// Strength override for schemes that need one
    #[arg(long)]
    t: Option<usize>,
}

struct CliError {
    code: &'static str,
    message: String,
}

impl CliError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<DesignError> for CliError {
    fn from(e: DesignError) -> Self {
        let code = match e {
            DesignError::NotPrimePower(_) => "NotPrimePower",
            DesignError::UnsupportedBlockSize { .. } => "UnsupportedBlockSize",
            DesignError::UnknownFixture(_) => "UnknownFixture",
            DesignError::NonIntegral { .. } => "NonIntegral",
            DesignError::Invalid(_) => "InvalidDesign",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        let code = match e {
            SchemeError::NotBibd(_) => "NotBibd",
            SchemeError::NotSymmetric { .. } => "NotSymmetric",
            SchemeError::NotLambda2(_) => "NotLambda2",
            SchemeError::RepeatedBlocks(_, _) => "RepeatedBlocks",
            SchemeError::NotSteiner(_) => "NotSteiner",
            SchemeError::BlockSizeBelowGroupSize { .. } => "BlockSizeBelowGroupSize",
            SchemeError::InvalidMatrix(_) => "InvalidMatrix",
            SchemeError::WrongDesignKind { .. } => "WrongDesignKind",
            SchemeError::MissingStrength => "MissingStrength",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<DeliveryError> for CliError {
    fn from(e: DeliveryError) -> Self {
        if let DeliveryError::Scheme(inner) = e {
            return inner.into();
        }
        let code = match e {
            DeliveryError::SubpacketizationMismatch { .. } => "SubpacketizationMismatch",
            DeliveryError::MissingSideInformation { .. } => "MissingSideInformation",
            DeliveryError::DemandOutOfRange { .. } => "DemandOutOfRange",
            DeliveryError::DemandCountMismatch { .. } => "DemandCountMismatch",
            DeliveryError::InvalidCover => "InvalidCover",
            DeliveryError::Scheme(_) => unreachable!(),
        };
        CliError::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!(
                "{}",
                json!({ "error": e.code, "message": e.message })
            );
            ExitCode::FAILURE
        }
    }
}

/// Ok(true) on full success, Ok(false) when a requested verification or
/// simulation ran but did not succeed, Err on anything that stopped a
/// command from completing.
fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Construct {
            family,
            n,
            q,
            k,
            name,
            design,
            out,
            json,
        } => cmd_construct(family, n, q, k, name, design, out, json),
        Command::Matrix { pipe, out } => {
            let (matrix, _, _) = build_pipeline(&pipe)?;
            emit_json(&matrix, out.as_deref())?;
            Ok(true)
        }
        Command::Cover { pipe, out } => {
            let (_, cover, _) = build_pipeline(&pipe)?;
            emit_json(&cover, out.as_deref())?;
            Ok(true)
        }
        Command::Verify { pipe, json } => cmd_verify(&pipe, json),
        Command::Metrics { pipe, json } => cmd_metrics(&pipe, json),
        Command::Simulate {
            pipe,
            n_files,
            chunk,
            seed,
            json,
        } => cmd_simulate(&pipe, n_files, chunk, seed, json),
        Command::Table1 { n, json } => cmd_table1(n, json),
    }
}

fn subset_budget() -> Result<u64, CliError> {
    match std::env::var("DESIGNCACHE_BUDGET") {
        Ok(raw) => raw.parse().map_err(|_| {
            CliError::new(
                "BadBudget",
                format!("DESIGNCACHE_BUDGET must be a nonnegative integer, got {raw:?}"),
            )
        }),
        Err(_) => Ok(DEFAULT_SUBSET_BUDGET),
    }
}

fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new("Io", format!("cannot read {}: {e}", path.display())))
}

fn emit_json<T: Serialize>(value: &T, out: Option<&std::path::Path>) -> Result<(), CliError> {
    let text = serde_json::to_string(value).expect("serializable value");
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::new("Io", format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

enum LoadedDesign {
    Block(Design),
    Transversal(TransversalDesign),
}

impl LoadedDesign {
    fn as_input(&self) -> SchemeInput<'_> {
        match self {
            LoadedDesign::Block(d) => SchemeInput::Block(d),
            LoadedDesign::Transversal(td) => SchemeInput::Transversal(td),
        }
    }
}

fn load_design(path: &std::path::Path) -> Result<LoadedDesign, CliError> {
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::new("BadJson", format!("{}: {e}", path.display())))?;
    let is_transversal = value.get("groups").is_some();
    let parsed = if is_transversal {
        serde_json::from_value::<TransversalDesign>(value).map(LoadedDesign::Transversal)
    } else {
        serde_json::from_value::<Design>(value).map(LoadedDesign::Block)
    };
    parsed.map_err(|e| CliError::new("BadJson", format!("{}: {e}", path.display())))
}

fn build_pipeline(pipe: &PipeArgs) -> Result<(CachingMatrix, Cover, SchemeMetrics), CliError> {
    let loaded = load_design(&pipe.design)?;
    Ok(build_scheme(
        pipe.scheme.to_scheme(),
        loaded.as_input(),
        pipe.t,
    )?)
}

fn need(flag: &'static str, v: Option<usize>, family: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| {
        CliError::new(
            "MissingFlag",
            format!("--{flag} is required for --family {family}"),
        )
    })
}

/// Replication count when it is the same at every point.
fn constant_replication(counts: impl Iterator<Item = usize>) -> Option<usize> {
    let mut counts = counts.peekable();
    let first = *counts.peek()?;
    counts.all(|c| c == first).then_some(first)
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    family: FamilyArg,
    n: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    name: Option<String>,
    design: Option<PathBuf>,
    out: Option<PathBuf>,
    json: bool,
) -> Result<bool, CliError> {
    let built = match family {
        FamilyArg::Affine => {
            let n = need("n", n, "affine")?;
            LoadedDesign::Block(construct_affine_plane_bibd(n as u64)?)
        }
        FamilyArg::Projective => {
            let n = need("n", n, "projective")?;
            LoadedDesign::Block(construct_projective_plane_bibd(n as u64)?)
        }
        FamilyArg::Inversive => {
            let q = need("q", q, "inversive")?;
            LoadedDesign::Block(construct_inversive_plane(q as u64)?)
        }
        FamilyArg::Transversal => {
            let q = need("q", q, "transversal")?;
            let k = need("k", k, "transversal")?;
            LoadedDesign::Transversal(construct_transversal_design(k, q as u64)?)
        }
        FamilyArg::Trivial => {
            let v = need("n", n, "trivial")?;
            let k = need("k", k, "trivial")?;
            LoadedDesign::Block(trivial_t_design(v, k)?)
        }
        FamilyArg::Builtin => {
            let name = name.ok_or_else(|| {
                CliError::new(
                    "MissingFlag",
                    format!(
                        "--name is required for --family builtin (one of {})",
                        builtin_names().join(", ")
                    ),
                )
            })?;
            match builtin_design(&name)? {
                BuiltinDesign::Block(d) => LoadedDesign::Block(d),
                BuiltinDesign::Transversal(td) => LoadedDesign::Transversal(td),
            }
        }
        FamilyArg::Complement => {
            let path = design.ok_or_else(|| {
                CliError::new("MissingFlag", "--design is required for --family complement")
            })?;
            match load_design(&path)? {
                LoadedDesign::Block(d) => LoadedDesign::Block(complement_design(&d)?),
                LoadedDesign::Transversal(_) => {
                    return Err(CliError::new(
                        "WrongDesignKind",
                        "complement is defined here for block designs only",
                    ))
                }
            }
        }
    };

    let budget = subset_budget()?;
    let (summary, ok) = match &built {
        LoadedDesign::Block(d) => {
            emit_json(d, out.as_deref())?;
            let r = constant_replication((0..d.v()).map(|p| d.blocks_through(p).len()));
            let (verdict, ok) = match d.declared() {
                Some(dp) => {
                    let report = verify_t_design_budgeted(d, dp.t, dp.lambda, budget)?;
                    match report.outcome {
                        VerificationOutcome::Passed => ("passed".to_string(), true),
                        VerificationOutcome::Failed(v) => (
                            format!(
                                "failed: subset {:?} lies in {} blocks, expected {}",
                                v.subset, v.actual, v.expected
                            ),
                            false,
                        ),
                        VerificationOutcome::Skipped { needed, budget } => {
                            (format!("skipped: needs {needed} subsets, budget {budget}"), true)
                        }
                    }
                }
                None => ("none".to_string(), true),
            };
            let summary = if json {
                json!({
                    "kind": "block",
                    "v": d.v(),
                    "k": d.k(),
                    "b": d.b(),
                    "r": r,
                    "declared": d.declared().map(|dp| json!({"t": dp.t, "lambda": dp.lambda})),
                    "verification": verdict,
                })
                .to_string()
            } else {
                let declared = d
                    .declared()
                    .map(|dp| format!(" t={} lambda={}", dp.t, dp.lambda))
                    .unwrap_or_default();
                let r = r.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
                format!(
                    "kind=block v={} k={} b={} r={}{declared} verification={verdict}",
                    d.v(),
                    d.k(),
                    d.b(),
                    r
                )
            };
            (summary, ok)
        }
        LoadedDesign::Transversal(td) => {
            emit_json(td, out.as_deref())?;
            let summary = if json {
                json!({
                    "kind": "transversal",
                    "v": td.v(),
                    "k": td.k(),
                    "n": td.n(),
                    "b": td.b(),
                    "r": td.n(),
                    "verification": "validated",
                })
                .to_string()
            } else {
                format!(
                    "kind=transversal v={} k={} n={} b={} r={} verification=validated",
                    td.v(),
                    td.k(),
                    td.n(),
                    td.b(),
                    td.n()
                )
            };
            (summary, true)
        }
    };

    // with no --out the design itself owns stdout
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(ok)
}

fn cmd_verify(pipe: &PipeArgs, json: bool) -> Result<bool, CliError> {
    let (matrix, cover, _) = build_pipeline(pipe)?;
    let report = verify_cover(&matrix, &cover);
    let ok = report.is_valid_cover;
    if json {
        let mut value = serde_json::to_value(&report).expect("serializable report");
        value
            .as_object_mut()
            .expect("report is an object")
            .insert("S".into(), json!(cover.s()));
        println!("{value}");
    } else {
        println!(
            "is_valid_cover={} S={} overlap_count={} ones_total={} ones_covered={} uncovered_ones={}",
            report.is_valid_cover,
            cover.s(),
            report.overlap_count,
            report.ones_total,
            report.ones_covered,
            report.uncovered_ones
        );
        if let Some(bad) = &report.bad_submatrix {
            println!(
                "bad submatrix {} pivot {}: {:?}",
                bad.submatrix, bad.pivot, bad.fault
            );
        }
        if let Some((r, c)) = report.first_uncovered {
            println!("first uncovered 1-entry at row {r}, column {c}");
        }
    }
    Ok(ok)
}

fn cmd_metrics(pipe: &PipeArgs, json: bool) -> Result<bool, CliError> {
    let (_, _, metrics) = build_pipeline(pipe)?;
    if json {
        println!("{}", serde_json::to_string(&metrics).expect("serializable"));
    } else {
        println!(
            "scheme={} K={} F={} Q={} uncached={} S={} rate={} expected_rate={} match={}",
            metrics.scheme,
            metrics.k,
            metrics.f,
            metrics.q,
            metrics.uncached_fraction,
            metrics.s,
            metrics.rate,
            metrics.expected.rate,
            metrics.matches_closed_forms()
        );
        for name in &metrics.mismatches {
            println!("mismatch: {name}");
        }
        for note in &metrics.notes {
            println!("note: {note}");
        }
    }
    Ok(metrics.matches_closed_forms())
}

fn cmd_simulate(
    pipe: &PipeArgs,
    n_files: Option<usize>,
    chunk: usize,
    seed: u64,
    json: bool,
) -> Result<bool, CliError> {
    if chunk == 0 {
        return Err(CliError::new("BadFlags", "--chunk must be at least 1"));
    }
    let loaded = load_design(&pipe.design)?;
    let users = match &loaded {
        LoadedDesign::Block(_) | LoadedDesign::Transversal(_) => {
            let (matrix, _, _) =
                build_scheme(pipe.scheme.to_scheme(), loaded.as_input(), pipe.t)?;
            matrix.k()
        }
    };
    let n_files = n_files.unwrap_or(users);
    if n_files == 0 {
        return Err(CliError::new("BadFlags", "--n-files must be at least 1"));
    }
    let report: SimulationReport = simulate(
        pipe.scheme.to_scheme(),
        loaded.as_input(),
        pipe.t,
        n_files,
        chunk,
        seed,
    )?;
    let ok = report.all_decoded && report.rate_matches;
    if json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!(
            "scheme={} K={} F={} S={} rate={} expected_rate={} match={} seed={} all_decoded={} failures={:?}",
            report.scheme,
            report.k,
            report.f,
            report.s,
            report.rate,
            report.expected_rate,
            report.rate_matches,
            report.seed,
            report.all_decoded,
            report.failures
        );
    }
    Ok(ok)
}

#[derive(Serialize)]
struct TableRow {
    scheme: &'static str,
    family: &'static str,
    param: String,
    status: &'static str,
    #[serde(rename = "K")]
    k: Option<usize>,
    #[serde(rename = "F")]
    f: Option<usize>,
    #[serde(rename = "Q")]
    q: Option<usize>,
    uncached_fraction: Option<Rational>,
    #[serde(rename = "S")]
    s: Option<usize>,
    rate: Option<Rational>,
    expected_rate: Option<Rational>,
    #[serde(rename = "match")]
    matches: Option<bool>,
    flagged: bool,
    notes: Vec<String>,
    skip_reason: Option<String>,
}

impl TableRow {
    fn skipped(scheme: &'static str, family: &'static str, param: String, reason: String) -> Self {
        TableRow {
            scheme,
            family,
            param,
            status: "skipped",
            k: None,
            f: None,
            q: None,
            uncached_fraction: None,
            s: None,
            rate: None,
            expected_rate: None,
            matches: None,
            flagged: false,
            notes: Vec::new(),
            skip_reason: Some(reason),
        }
    }

    fn measured(
        scheme: &'static str,
        family: &'static str,
        param: String,
        metrics: &SchemeMetrics,
        cover_ok: bool,
    ) -> Self {
        TableRow {
            scheme,
            family,
            param,
            status: "ok",
            k: Some(metrics.k),
            f: Some(metrics.f),
            q: Some(metrics.q),
            uncached_fraction: Some(metrics.uncached_fraction),
            s: Some(metrics.s),
            rate: Some(metrics.rate),
            expected_rate: Some(metrics.expected.rate),
            matches: Some(metrics.matches_closed_forms() && cover_ok),
            flagged: !metrics.notes.is_empty(),
            notes: metrics.notes.clone(),
            skip_reason: None,
        }
    }
}

fn table_scheme_row(
    scheme: SchemeArg,
    scheme_name: &'static str,
    family: &'static str,
    param: String,
    built: Result<LoadedDesign, DesignError>,
) -> TableRow {
    let loaded = match built {
        Ok(l) => l,
        Err(e) => return TableRow::skipped(scheme_name, family, param, e.to_string()),
    };
    match build_scheme(scheme.to_scheme(), loaded.as_input(), None) {
        Ok((matrix, cover, metrics)) => {
            let cover_ok = verify_cover(&matrix, &cover).is_valid_cover;
            TableRow::measured(scheme_name, family, param, &metrics, cover_ok)
        }
        Err(e) => TableRow::skipped(scheme_name, family, param, e.to_string()),
    }
}

fn cmd_table1(limit: usize, json: bool) -> Result<bool, CliError> {
    let mut rows = Vec::new();
    for n in 2..=limit as u64 {
        if prime_power(n).is_none() {
            continue;
        }
        rows.push(table_scheme_row(
            SchemeArg::Bibd,
            "bibd",
            "affine",
            format!("n={n}"),
            construct_affine_plane_bibd(n).map(LoadedDesign::Block),
        ));
        rows.push(table_scheme_row(
            SchemeArg::Bibd,
            "bibd",
            "projective",
            format!("n={n}"),
            construct_projective_plane_bibd(n).map(LoadedDesign::Block),
        ));
        rows.push(table_scheme_row(
            SchemeArg::T1,
            "t1",
            "inversive",
            format!("q={n}"),
            construct_inversive_plane(n).map(LoadedDesign::Block),
        ));
        rows.push(table_scheme_row(
            SchemeArg::T2,
            "t2",
            "inversive",
            format!("q={n}"),
            construct_inversive_plane(n).map(LoadedDesign::Block),
        ));
        rows.push(table_scheme_row(
            SchemeArg::Td,
            "td",
            "transversal",
            format!("k=q={n}"),
            construct_transversal_design(n as usize, n).map(LoadedDesign::Transversal),
        ));
    }
    rows.push(table_scheme_row(
        SchemeArg::Symm,
        "symm",
        "biplane_11_5_2",
        "fixture".into(),
        builtin_design("biplane_11_5_2").map(|b| match b {
            BuiltinDesign::Block(d) => LoadedDesign::Block(d),
            BuiltinDesign::Transversal(td) => LoadedDesign::Transversal(td),
        }),
    ));

    let all_ok = rows
        .iter()
        .all(|r| r.status == "skipped" || r.matches == Some(true));

    if json {
        println!("{}", serde_json::to_string(&rows).expect("serializable"));
        return Ok(all_ok);
    }

    let fmt_opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    let fmt_rat = |v: Option<Rational>| v.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    println!(
        "{:<6} {:<15} {:<8} {:>6} {:>7} {:>5} {:>8} {:>6} {:>8} {:>8} {:<5} {}",
        "scheme", "family", "param", "K", "F", "Q", "1-M/N", "S", "R", "table", "match", "flag"
    );
    let mut flagged_notes = Vec::new();
    for row in &rows {
        if row.status == "skipped" {
            println!(
                "{:<6} {:<15} {:<8} skipped ({})",
                row.scheme,
                row.family,
                row.param,
                row.skip_reason.as_deref().unwrap_or("unsupported")
            );
            continue;
        }
        println!(
            "{:<6} {:<15} {:<8} {:>6} {:>7} {:>5} {:>8} {:>6} {:>8} {:>8} {:<5} {}",
            row.scheme,
            row.family,
            row.param,
            fmt_opt(row.k),
            fmt_opt(row.f),
            fmt_opt(row.q),
            fmt_rat(row.uncached_fraction),
            fmt_opt(row.s),
            fmt_rat(row.rate),
            fmt_rat(row.expected_rate),
            row.matches.map(|m| m.to_string()).unwrap_or_default(),
            if row.flagged { "!" } else { "" }
        );
        if row.flagged {
            let mut entry = format!("{} {} {}:", row.scheme, row.family, row.param);
            for note in &row.notes {
                let _ = write!(entry, "\n  note: {note}");
            }
            flagged_notes.push(entry);
        }
    }
    for entry in flagged_notes {
        println!("{entry}");
    }
    Ok(all_ok)
}
