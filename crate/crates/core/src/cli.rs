//! The `rwl` command-line tool.
//!
//! Exit codes: 0 success or passing check, 1 failing check, 2 bad input or
//! flags, 3 counting methods disagree, 4 input exceeds a method's size limit.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::arith::Natural;
use crate::formulas::{self, FormulaError, FormulaId};
use crate::gf;
use crate::graph::{build_family, parse_graph, FamilyKind, FamilySpec, Graph, MAX_DP_ORDER};
use crate::identities::{self, ClaimId, IdentityError, Status, VerificationResult};
use crate::report::{MethodValue, Report, Row};
use crate::series::{PowerSeries, DEFAULT_ORDER};
use crate::walk::{self, DpOptions, WalkError, FULL_TABLE_MAX_ORDER, MAX_WALK_ORDER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "rwl", version, about = "Count random walk labelings of graphs and check the identities behind them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the random walk labelings of one graph.
    Count(CountArgs),
    /// Closed-form counts for a family over a range of n.
    FamilyTable(TableArgs),
    /// Run one of the identity checks.
    Verify(VerifyArgs),
    /// Expand one of the closed-form generating functions.
    Series(SeriesArgs),
    /// Print limits, supported families, claims and formulas.
    Info,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dp,
    Walk,
    Formula,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Complete,
    Path,
    Cycle,
    King,
    Grid,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> FamilyKind {
        match f {
            FamilyArg::Complete => FamilyKind::Complete,
            FamilyArg::Path => FamilyKind::Path,
            FamilyArg::Cycle => FamilyKind::Cycle,
            FamilyArg::King => FamilyKind::King,
            FamilyArg::Grid => FamilyKind::Grid,
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Edge-list file: a header line "n m" followed by m lines "u v".
    #[arg(long, conflicts_with_all = ["family", "n", "m"], required_unless_present = "family")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Row count for king and grid boards.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Dp)]
    pub method: Method,
    /// Use the layered DP even for small graphs.
    #[arg(long)]
    pub low_memory: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    Complete,
    Path,
    Cycle,
    King2,
    Grid2,
}

impl TableFamily {
    fn formula(self) -> FormulaId {
        match self {
            TableFamily::Complete => FormulaId::Complete,
            TableFamily::Path => FormulaId::Path,
            TableFamily::Cycle => FormulaId::Cycle,
            TableFamily::King2 => FormulaId::King2n,
            TableFamily::Grid2 => FormulaId::Grid2nSum,
        }
    }

    fn name(self) -> &'static str {
        match self {
            TableFamily::Complete => "complete",
            TableFamily::Path => "path",
            TableFamily::Cycle => "cycle",
            TableFamily::King2 => "king2",
            TableFamily::Grid2 => "grid2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub family: TableFamily,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_claim(s: &str) -> Result<ClaimId, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = ClaimId::ALL.iter().map(|c| c.name()).collect();
        format!("unknown claim {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_claim)]
    pub claim: ClaimId,
    /// Upper end of the n range (defaults: 100 for exact identities, 20 for
    /// the integral identities, 7 for the oracle comparison).
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Number of series terms to compare.
    #[arg(long, default_value_t = 25)]
    pub terms: usize,
    /// Residual tolerance for the integral identities.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Points for the growth-rate check.
    #[arg(long, value_delimiter = ',', default_values_t = [25, 50, 100, 200, 400])]
    pub ns: Vec<usize>,
    /// Random graphs added to the oracle comparison.
    #[arg(long, default_value_t = 200)]
    pub random: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Egf {
    Gg2,
    A087547,
    A182525,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub egf: Egf,
    #[arg(long)]
    pub terms: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    TooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::TooLarge(_) => EXIT_TOO_LARGE,
        }
    }
}

impl From<WalkError> for CliError {
    fn from(e: WalkError) -> CliError {
        match e {
            WalkError::TooLarge { .. } => CliError::TooLarge(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<IdentityError> for CliError {
    fn from(e: IdentityError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

/// Applies `RWL_THREADS`, if set, as the worker count of the global pool.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("RWL_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("RWL_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))
}

/// Runs one parsed invocation, writing its output to `out`, and returns the
/// process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let started = Instant::now();
    let elapsed = || started.elapsed().as_secs_f64() * 1e3;
    let (text, code) = match &cli.command {
        Command::Count(a) => {
            let (report, code) = cmd_count(a)?;
            (report.with_elapsed(elapsed()).render(), code)
        }
        Command::FamilyTable(a) => (cmd_family_table(a, elapsed)?, EXIT_OK),
        Command::Verify(a) => {
            let (report, code) = cmd_verify(a)?;
            (report.with_elapsed(elapsed()).render(), code)
        }
        Command::Series(a) => (cmd_series(a)?.with_elapsed(elapsed()).render(), EXIT_OK),
        Command::Info => (cmd_info().with_elapsed(elapsed()).render(), EXIT_OK),
    };
    writeln!(out, "{}", text.trim_end()).map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?;
    Ok(code)
}

/// Entry point for the binary: thread setup, run, error printing.
pub fn main_with(cli: Cli) -> i32 {
    let result = configure_threads().and_then(|()| run(&cli, &mut std::io::stdout().lock()));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

enum Source {
    File { path: String, graph: Graph },
    Family(FamilySpec),
}

impl Source {
    fn input(&self) -> String {
        match self {
            Source::File { path, .. } => path.clone(),
            Source::Family(spec) => spec.label(),
        }
    }

    fn order(&self) -> usize {
        match self {
            Source::File { graph, .. } => graph.order(),
            Source::Family(spec) => spec.order(),
        }
    }

    fn graph(&self) -> Result<Graph, CliError> {
        match self {
            Source::File { graph, .. } => Ok(graph.clone()),
            Source::Family(spec) => build_family(spec).map_err(|e| CliError::Usage(e.to_string())),
        }
    }
}

/// Closed-form count for a family member, when one is known. One-row boards
/// are paths, and two-row boards have their own formulas.
pub fn family_formula(spec: &FamilySpec) -> Option<Result<Natural, FormulaError>> {
    Some(match *spec {
        FamilySpec::Complete(n) => formulas::l_complete(n),
        FamilySpec::Path(n) => formulas::l_path(n),
        FamilySpec::Cycle(n) => formulas::l_cycle(n),
        FamilySpec::King { m, n } | FamilySpec::Grid { m, n } if m == 1 || n == 1 => formulas::l_path(m * n),
        FamilySpec::King { m, n } if m == 2 || n == 2 => formulas::l_king2(m.max(n)),
        FamilySpec::Grid { m, n } if m == 2 || n == 2 => formulas::l_grid2_sum(m.max(n)),
        _ => return None,
    })
}

fn count_with(source: &Source, method: Method, low_memory: bool) -> Result<Natural, CliError> {
    match method {
        Method::Dp => {
            let g = source.graph()?;
            Ok(walk::count_labelings_dp_with(&g, DpOptions { low_memory })?)
        }
        Method::Walk => {
            let n = source.order();
            if n > MAX_WALK_ORDER {
                return Err(WalkError::TooLarge { n, limit: MAX_WALK_ORDER }.into());
            }
            Ok(Natural::from(walk::enumerate_labelings_walk(&source.graph()?)?.len()))
        }
        Method::Formula => match source {
            Source::Family(spec) => match family_formula(spec) {
                Some(v) => Ok(v?),
                None => Err(CliError::Usage(format!("no closed form for {spec}; use --method dp"))),
            },
            Source::File { .. } => Err(CliError::Usage("closed forms need --family input".into())),
        },
        Method::All => unreachable!("expanded by the caller"),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Dp => "dp",
        Method::Walk => "walk",
        Method::Formula => "formula",
        Method::All => "all",
    }
}

fn cmd_count(a: &CountArgs) -> Result<(Report, i32), CliError> {
    let source = if let Some(path) = &a.graph {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let graph = parse_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Source::File { path: path.display().to_string(), graph }
    } else {
        let kind: FamilyKind = a.family.expect("clap requires --family without --graph").into();
        let n = a.n.expect("clap requires --n with --family");
        if a.m.is_some() && !kind.is_board() {
            return Err(CliError::Usage(format!("--m only applies to king and grid, not {kind}")));
        }
        Source::Family(FamilySpec::new(kind, a.m, n).map_err(|e| CliError::Usage(e.to_string()))?)
    };

    let n = source.order();
    let methods: Vec<Method> = if a.method == Method::All {
        let mut v = Vec::new();
        if n <= MAX_DP_ORDER {
            v.push(Method::Dp);
        }
        if n <= MAX_WALK_ORDER {
            v.push(Method::Walk);
        }
        if matches!(&source, Source::Family(spec) if family_formula(spec).is_some()) {
            v.push(Method::Formula);
        }
        if v.is_empty() {
            return Err(CliError::TooLarge(format!("no counting method accepts order {n}")));
        }
        v
    } else {
        vec![a.method]
    };

    let mut values = Vec::new();
    for &m in &methods {
        values.push(MethodValue { method: method_name(m).into(), value: count_with(&source, m, a.low_memory)?.to_string() });
    }
    let agree = values.windows(2).all(|w| w[0].value == w[1].value);
    let connected = match &source {
        Source::File { graph, .. } => graph.is_connected(),
        Source::Family(_) => true,
    };
    let status = if !agree {
        "disagreement"
    } else if !connected {
        "disconnected"
    } else {
        "ok"
    };
    let mut report = Report::new(source.input(), method_name(a.method), status).param("order", n);
    match &source {
        Source::File { graph, .. } => report = report.param("edges", graph.edge_count()),
        Source::Family(spec) => {
            report = report.param("family", spec.kind().as_str()).param("n", a.n.unwrap_or(n));
            if let Some(m) = a.m {
                report = report.param("m", m);
            }
        }
    }
    if agree {
        report.value = values.first().map(|v| v.value.clone());
    }
    if a.method == Method::All {
        report.methods = values;
    }
    Ok((report, if agree { EXIT_OK } else { EXIT_DISAGREE }))
}

fn cmd_family_table(a: &TableArgs, elapsed: impl Fn() -> f64) -> Result<String, CliError> {
    let id = a.family.formula();
    let name = a.family.name();
    if a.n_max < id.min_n() {
        return Err(CliError::Usage(format!("--n-max must be at least {} for {name}", id.min_n())));
    }
    let values: Vec<String> = (id.min_n()..=a.n_max)
        .into_par_iter()
        .map(|n| id.evaluate(n).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    let rows = (id.min_n()..=a.n_max).zip(values);
    Ok(match a.format {
        Format::Text => rows.map(|(n, v)| format!("{name}({n}) = {v}\n")).collect(),
        Format::Csv => {
            let mut s = String::from("family,n,value\n");
            for (n, v) in rows {
                s.push_str(&format!("{name},{n},{v}\n"));
            }
            s
        }
        Format::Json => {
            let mut report = Report::new(name, "formula", "ok").param("n_max", a.n_max).param("formula", id.name());
            report.rows = rows.map(|(n, value)| Row { family: Some(name.into()), n, value, coefficient: None }).collect();
            report.with_elapsed(elapsed()).render()
        }
    })
}

fn verification_report(claim: ClaimId, method: &str, v: VerificationResult) -> (Report, i32) {
    let code = if v.status == Status::Pass { EXIT_OK } else { EXIT_FAIL };
    let status = if code == EXIT_OK { "pass" } else { "fail" };
    let mut report = Report::new(claim.name(), method, status)
        .param("n_min", v.n_min)
        .param("n_max", v.n_max);
    if let Some(max) = v.max_residual() {
        report = report.float_param("max_residual", max);
    }
    report.verification = Some(v);
    (report, code)
}

fn cmd_verify(a: &VerifyArgs) -> Result<(Report, i32), CliError> {
    let claim = a.claim;
    let (result, method) = match claim {
        ClaimId::GridForms | ClaimId::SumVsRecursion | ClaimId::InverseCentralSums | ClaimId::PublishedForms => {
            (identities::verify_exact_identity(claim, a.n_max.unwrap_or(100))?, "exact")
        }
        ClaimId::EgfGg2 => (identities::verify_egf_gg2(a.terms)?, "series"),
        ClaimId::OgfA087547 => (identities::verify_ogf_a087547(a.terms)?, "series"),
        ClaimId::EgfA182525 => (identities::verify_egf_a182525(a.terms)?, "series"),
        ClaimId::IntegralIdentities => (identities::verify_integral_identities(a.n_max.unwrap_or(20), a.tol)?, "quadrature"),
        ClaimId::Asymptotic => (identities::check_asymptotic_gg2(&a.ns)?, "ratio"),
        ClaimId::OracleEquivalence => {
            let n_max = a.n_max.unwrap_or(7);
            if n_max > MAX_WALK_ORDER {
                return Err(CliError::TooLarge(format!("walk enumeration is limited to order {MAX_WALK_ORDER}")));
            }
            (identities::verify_oracle_equivalence(n_max, a.random, a.seed)?, "walk-vs-dp")
        }
    };
    let (mut report, code) = verification_report(claim, method, result);
    report = match claim {
        ClaimId::EgfGg2 | ClaimId::OgfA087547 | ClaimId::EgfA182525 => report.param("terms", a.terms),
        ClaimId::IntegralIdentities => report.float_param("tol", a.tol),
        ClaimId::Asymptotic => report.param("ns", json!(a.ns)),
        ClaimId::OracleEquivalence => report.param("random", a.random).param("seed", a.seed),
        _ => report,
    };
    Ok((report, code))
}

fn cmd_series(a: &SeriesArgs) -> Result<Report, CliError> {
    let order = DEFAULT_ORDER.max(a.terms + 1);
    let series = |r: Result<PowerSeries, _>| r.map_err(|e: crate::series::SeriesError| CliError::Usage(e.to_string()));
    // (series, first index, scaling k! with k = n - shift)
    let (s, first, shift, name) = match a.egf {
        Egf::Gg2 => (series(gf::grid2_egf(order))?, 1, 0, "gg2"),
        Egf::A087547 => (series(gf::a087547_ogf(order))?, 1, 1, "a087547"),
        Egf::A182525 => (series(gf::a182525_egf(order))?, 0, 0, "a182525"),
    };
    let mut report = Report::new(name, "series", "ok").param("terms", a.terms).param("order", order);
    for n in first..=a.terms {
        let coeff = s.coeff(n).map_err(|e| CliError::Usage(e.to_string()))?;
        let term = s.scaled_term(n, n - shift).map_err(|e| CliError::Usage(e.to_string()))?;
        report.rows.push(Row { family: None, n, value: term.to_string(), coefficient: Some(coeff.to_string()) });
    }
    report.params.insert("scaling".into(), json!(if shift == 1 { "(n-1)!" } else { "n!" }));
    Ok(report)
}

fn cmd_info() -> Report {
    let mut report = Report::new("rwl", "info", "ok");
    report.value = Some(env!("CARGO_PKG_VERSION").to_string());
    let formulas: Vec<_> = FormulaId::ALL.iter().map(|f| json!({"name": f.name(), "expression": f.expression()})).collect();
    report
        .param("threads", rayon::current_num_threads())
        .param("max_dp_order", MAX_DP_ORDER)
        .param("full_table_max_order", FULL_TABLE_MAX_ORDER)
        .param("max_walk_order", MAX_WALK_ORDER)
        .param("families", json!(["complete", "path", "cycle", "king", "grid"]))
        .param("claims", json!(ClaimId::ALL.iter().map(|c| c.name()).collect::<Vec<_>>()))
        .param("formulas", json!(formulas))
}
