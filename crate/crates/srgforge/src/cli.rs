//! Command-line frontend: parameter classification, bound census sweeps,
//! graph verification and line audits, partial-geometry checks, and the
//! orthogonal-array toolbox.
//!
//! Exit codes are a stable contract: 0 = computed/pass, 1 = domain failure
//! with a witness JSON on stdout, 2 = usage, parse, or I/O errors on stderr.
//! Every conceptually rational number is emitted as an exact fraction
//! string; no floats appear in any output.

use crate::completion::complete;
use crate::graph::{verify_srg, Graph, GraphError};
use crate::lines::{audit_lines, check_partial_geometry, delsarte_lines, extract_lines};
use crate::oa::{
    gen_mols_prime, latin_square_graph, mols_to_oa, LatinSquare, OaError, OrthogonalArray,
};
use crate::params::{
    classify_quadruple, eigendata, has_geometric_parameters, improved_bound, metsch_conditions,
    mu_upper_bound, neumaier_bound, to_classical, StandardParams, VerdictKind,
};
use crate::rat::{rat_floor, rat_string};
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "srgforge",
    version,
    about = "Strongly regular graph parameter calculus and orthogonal array completion",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a parameter quadruple (v, k, lambda, mu)
    Classify {
        v: u64,
        k: u64,
        lambda: u64,
        mu: u64,
    },
    /// Tabulate both lambda bounds over mu for a fixed smallest eigenvalue -m
    Census {
        #[arg(long)]
        m: u64,
        /// Stop at this mu instead of the (2m-3)m^3 cap
        #[arg(long = "mu-max")]
        mu_max: Option<u64>,
        /// Add a column with the largest integer lambda the bounds allow
        #[arg(long = "lambda-mode")]
        lambda_mode: bool,
        /// Emit JSON lines instead of TSV
        #[arg(long)]
        json: bool,
    },
    /// Verify strong regularity of a graph file and report its spectrum
    VerifySrg { path: PathBuf },
    /// Extract the Metsch line system at a given sigma and audit it
    Lines {
        path: PathBuf,
        #[arg(long)]
        sigma: u64,
        /// Extract even when the Metsch conditions fail (validity is still certified)
        #[arg(long = "override")]
        override_conditions: bool,
    },
    /// Check the partial-geometry axioms on the Delsarte line system
    PgCheck { path: PathBuf },
    /// Orthogonal array operations
    Oa {
        #[command(subcommand)]
        command: OaCommand,
    },
}

#[derive(Subcommand)]
enum OaCommand {
    /// Validate an orthogonal array file
    Verify { path: PathBuf },
    /// Assemble an orthogonal array from Latin square files
    FromMols {
        squares: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the Latin square graph of an array in graph text format
    ToGraph {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extend a deficient array to a full OA(n+1, n)
    Complete { path: PathBuf },
    /// Generate cyclic MOLS of prime order as Latin square files
    GenMols {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        count: u32,
        #[arg(long = "out-dir", default_value = ".")]
        out_dir: PathBuf,
    },
}

enum Failure {
    /// Exit 2: usage, parse, or I/O problems; message goes to stderr.
    Usage(String),
    /// Exit 1: a domain property failed; witness JSON goes to stdout.
    Domain { error: String, message: String },
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match &e {
            GraphError::Io(_) | GraphError::Parse { .. } => Failure::Usage(e.to_string()),
            GraphError::NotRegular { .. } => domain("not_regular", e),
            GraphError::NotStronglyRegular { .. } => domain("not_strongly_regular", e),
            GraphError::DiameterExceeded { .. } => domain("diameter_exceeded", e),
            GraphError::InvalidParameters(_) => domain("invalid_parameters", e),
            GraphError::MetschConditionsFailed { .. } => domain("metsch_conditions_failed", e),
            GraphError::NotPartialLinearSpace(_) => domain("not_partial_linear_space", e),
            GraphError::SigmaExceeded { .. } => domain("sigma_exceeded", e),
            GraphError::IrrationalEigenvalues => domain("irrational_eigenvalues", e),
            GraphError::NoDelsarteSize { .. } => domain("no_delsarte_size", e),
        }
    }
}

impl From<OaError> for Failure {
    fn from(e: OaError) -> Self {
        match &e {
            OaError::Io(_) | OaError::Parse { .. } => Failure::Usage(e.to_string()),
            OaError::DimensionMismatch { .. } => domain("dimension_mismatch", e),
            OaError::SymbolOutOfRange { .. } => domain("symbol_out_of_range", e),
            OaError::RepeatedPair { .. } => domain("repeated_pair", e),
            OaError::NotLatin { .. } => domain("not_latin", e),
            OaError::NotOrthogonal { .. } => domain("not_orthogonal", e),
            OaError::NotPrime(_) => domain("not_prime", e),
            OaError::CountTooLarge { .. } => domain("count_too_large", e),
            OaError::ColumnsAgreeTwice { .. } => domain("columns_agree_twice", e),
            OaError::NotGeometric { .. } => domain("not_geometric", e),
            OaError::ParallelismNotTransitive { .. } => domain("parallelism_not_transitive", e),
            OaError::ResultNotOA(_) => domain("result_not_oa", e),
        }
    }
}

fn domain(code: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Domain {
        error: code.to_string(),
        message: e.to_string(),
    }
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    schema: u32,
    error: &'a str,
    message: &'a str,
}

/// Runs the CLI against explicit argv, writing to the given streams and
/// returning the process exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful outputs.
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Classify { v, k, lambda, mu } => cmd_classify(v, k, lambda, mu, stdout),
        Command::Census {
            m,
            mu_max,
            lambda_mode,
            json,
        } => cmd_census(m, mu_max, lambda_mode, json, stdout),
        Command::VerifySrg { path } => cmd_verify_srg(&path, stdout),
        Command::Lines {
            path,
            sigma,
            override_conditions,
        } => cmd_lines(&path, sigma, override_conditions, stdout),
        Command::PgCheck { path } => cmd_pg_check(&path, stdout),
        Command::Oa { command } => match command {
            OaCommand::Verify { path } => cmd_oa_verify(&path, stdout),
            OaCommand::FromMols { squares, out } => cmd_oa_from_mols(&squares, &out, stdout),
            OaCommand::ToGraph { path, out } => cmd_oa_to_graph(&path, out.as_deref(), stdout),
            OaCommand::Complete { path } => cmd_oa_complete(&path, stdout),
            OaCommand::GenMols {
                order,
                count,
                out_dir,
            } => cmd_oa_gen_mols(order, count, &out_dir, stdout),
        },
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Domain { error, message }) => {
            let witness = WitnessJson {
                schema: SCHEMA_VERSION,
                error: &error,
                message: &message,
            };
            let _ = writeln!(stdout, "{}", serde_json::to_string(&witness).unwrap());
            1
        }
    }
}

fn emit<T: Serialize>(value: &T, stdout: &mut dyn Write) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("reports serialize");
    writeln!(stdout, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

/// Flat classification report; optional fields are absent when undefined
/// (e.g. no classical parameters for irrational eigenvalues).
#[derive(Serialize)]
struct ClassifyReport {
    schema: u32,
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conference: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    irrational_eigenvalues: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f_mult: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_mult: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    neumaier: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    improved: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exceeds_neumaier: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exceeds_improved: Option<bool>,
    #[serde(rename = "pg_K", skip_serializing_if = "Option::is_none")]
    pg_points_per_line: Option<u64>,
    #[serde(rename = "pg_R", skip_serializing_if = "Option::is_none")]
    pg_lines_per_point: Option<u64>,
    #[serde(rename = "pg_T", skip_serializing_if = "Option::is_none")]
    pg_transversals: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ls_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    design_points: Option<u64>,
}

/// Builds the full classification report for a quadruple; infeasibility is a
/// verdict, never an error.
pub fn classify_report_json(v: u64, k: u64, lambda: u64, mu: u64) -> serde_json::Value {
    let verdict = classify_quadruple(v, k, lambda, mu);
    let mut report = ClassifyReport {
        schema: SCHEMA_VERSION,
        v,
        k,
        lambda,
        mu,
        verdict: verdict.kind.name(),
        reason: None,
        conference: None,
        irrational_eigenvalues: None,
        theta1: None,
        theta2: None,
        m: None,
        f_mult: None,
        g_mult: None,
        b: None,
        alpha: None,
        beta: None,
        neumaier: None,
        improved: None,
        exceeds_neumaier: None,
        exceeds_improved: None,
        pg_points_per_line: None,
        pg_lines_per_point: None,
        pg_transversals: None,
        ls_order: None,
        design_points: None,
    };
    match &verdict.kind {
        VerdictKind::Infeasible(reason) => report.reason = Some(reason.to_string()),
        VerdictKind::ForcedLatinSquareGeometric { ls_order } => report.ls_order = Some(*ls_order),
        VerdictKind::ForcedSteinerGeometric { design_points } => {
            report.design_points = Some(*design_points)
        }
        _ => {}
    }
    if let Some(bounds) = &verdict.bounds {
        report.neumaier = Some(rat_string(&bounds.neumaier));
        report.improved = Some(rat_string(&bounds.improved));
        report.exceeds_neumaier = Some(bounds.exceeds_neumaier);
        report.exceeds_improved = Some(bounds.exceeds_improved);
    }
    if let Ok(sp) = StandardParams::new(v, k, lambda, mu) {
        if let Ok(ed) = eigendata(&sp) {
            report.conference = Some(ed.conference);
            report.irrational_eigenvalues = Some(ed.m.is_none());
            report.theta1 = Some(ed.theta1.to_string());
            report.theta2 = Some(ed.theta2.to_string());
            report.m = ed.m;
            report.f_mult = Some(ed.f_mult);
            report.g_mult = Some(ed.g_mult);
        }
        if let Ok(cp) = to_classical(&sp) {
            report.b = Some(rat_string(&cp.b));
            report.alpha = Some(rat_string(&cp.alpha));
            report.beta = Some(rat_string(&cp.beta));
        }
        if let Some(pg) = has_geometric_parameters(&sp) {
            report.pg_points_per_line = Some(pg.points_per_line);
            report.pg_lines_per_point = Some(pg.lines_per_point);
            report.pg_transversals = Some(pg.transversals);
        }
    }
    serde_json::to_value(&report).expect("report serializes")
}

fn cmd_classify(
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    emit(&classify_report_json(v, k, lambda, mu), stdout)
}

#[derive(Serialize, Clone)]
pub struct CensusBoundsRow {
    pub mu: u64,
    pub neumaier: String,
    pub improved: String,
    pub smaller: &'static str,
    pub forced: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_max: Option<String>,
}

fn census_row(m: u64, mu: u64, lambda_mode: bool) -> CensusBoundsRow {
    let nb = neumaier_bound(m, mu);
    let ib = improved_bound(m, mu);
    let smaller = match ib.cmp(&nb) {
        std::cmp::Ordering::Less => "improved",
        std::cmp::Ordering::Greater => "neumaier",
        std::cmp::Ordering::Equal => "equal",
    };
    let forced = if mu == m * (m - 1) {
        "latin_square"
    } else if mu == m * m {
        "steiner"
    } else {
        ""
    };
    let lambda_max = lambda_mode.then(|| {
        if forced.is_empty() {
            let cap = rat_floor(&nb.min(ib)).max(-1);
            cap.to_string()
        } else {
            "unbounded".to_string()
        }
    });
    CensusBoundsRow {
        mu,
        neumaier: rat_string(&nb),
        improved: rat_string(&ib),
        smaller,
        forced,
        lambda_max,
    }
}

fn thread_count() -> usize {
    match std::env::var("SRGFORGE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        None | Some(0) => std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1),
        Some(n) => n,
    }
}

/// Computes the census rows for `mu` in `1..=mu_hi`, fanning out over the
/// configured thread count; rows come back in deterministic `mu` order.
pub fn census_rows(m: u64, mu_hi: u64, lambda_mode: bool) -> Vec<CensusBoundsRow> {
    let total = mu_hi as usize;
    let threads = thread_count().clamp(1, total.max(1));
    if threads == 1 || total < 1024 {
        return (1..=mu_hi)
            .map(|mu| census_row(m, mu, lambda_mode))
            .collect();
    }
    let chunk = total.div_ceil(threads);
    let mut out = Vec::with_capacity(total);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let lo = 1 + (t * chunk) as u64;
            let hi = mu_hi.min((t * chunk + chunk) as u64);
            if lo > hi {
                break;
            }
            handles.push(scope.spawn(move || {
                (lo..=hi)
                    .map(|mu| census_row(m, mu, lambda_mode))
                    .collect::<Vec<_>>()
            }));
        }
        for handle in handles {
            out.extend(handle.join().expect("census worker"));
        }
    });
    out
}

#[derive(Serialize)]
struct CensusHeader {
    schema: u32,
    m: u64,
    mu_max: u64,
}

fn cmd_census(
    m: u64,
    mu_max: Option<u64>,
    lambda_mode: bool,
    json: bool,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    if m < 3 {
        return Err(Failure::Usage(format!(
            "census requires m >= 3 (m <= 2 graphs are classified elsewhere), got {m}"
        )));
    }
    if m > 10_000 {
        return Err(Failure::Usage(format!(
            "census supports m <= 10000, got {m}"
        )));
    }
    let cap = mu_upper_bound(m) as u64;
    let mu_hi = mu_max.unwrap_or(cap).min(cap);
    let io_err = |e: std::io::Error| Failure::Usage(e.to_string());
    if json {
        let header = CensusHeader {
            schema: SCHEMA_VERSION,
            m,
            mu_max: mu_hi,
        };
        writeln!(stdout, "{}", serde_json::to_string(&header).unwrap()).map_err(io_err)?;
    } else {
        let mut cols = vec!["mu", "neumaier", "improved", "smaller", "forced"];
        if lambda_mode {
            cols.push("lambda_max");
        }
        writeln!(stdout, "{}", cols.join("\t")).map_err(io_err)?;
    }
    for row in census_rows(m, mu_hi, lambda_mode) {
        if json {
            writeln!(stdout, "{}", serde_json::to_string(&row).unwrap()).map_err(io_err)?;
        } else {
            let mut fields = vec![
                row.mu.to_string(),
                row.neumaier,
                row.improved,
                row.smaller.to_string(),
                row.forced.to_string(),
            ];
            if let Some(lm) = row.lambda_max {
                fields.push(lm);
            }
            writeln!(stdout, "{}", fields.join("\t")).map_err(io_err)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifySrgReport {
    schema: u32,
    file: String,
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
    theta1: String,
    theta2: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    f_mult: u64,
    g_mult: u64,
    conference: bool,
}

fn cmd_verify_srg(path: &Path, stdout: &mut dyn Write) -> Result<(), Failure> {
    let graph = Graph::read_file(path)?;
    let sp = verify_srg(&graph)?;
    let ed = eigendata(&sp).map_err(|e| domain("infeasible_spectrum", e))?;
    emit(
        &VerifySrgReport {
            schema: SCHEMA_VERSION,
            file: path.display().to_string(),
            v: sp.v,
            k: sp.k,
            lambda: sp.lambda,
            mu: sp.mu,
            theta1: ed.theta1.to_string(),
            theta2: ed.theta2.to_string(),
            m: ed.m,
            f_mult: ed.f_mult,
            g_mult: ed.g_mult,
            conference: ed.conference,
        },
        stdout,
    )
}

#[derive(Serialize)]
struct LinesAuditJson {
    m: u64,
    g: u64,
    delsarte_line_count: usize,
    all_lines_delsarte: bool,
    delsarte_vertex_count: usize,
    all_vertices_delsarte: bool,
    v_minus_line_count: i64,
    line_deficit_margin: i64,
    incidence_rank: usize,
    tau_floor_ok: bool,
    line_deficit_ok: bool,
    delsarte_fraction_ok: bool,
    delsarte_fraction_applicable: bool,
}

#[derive(Serialize)]
struct LinesReport {
    schema: u32,
    file: String,
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
    sigma: u64,
    metsch_conditions: bool,
    threshold: i64,
    line_count: usize,
    line_size_min: usize,
    line_size_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<LinesAuditJson>,
}

fn cmd_lines(
    path: &Path,
    sigma: u64,
    override_conditions: bool,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    if sigma == 0 || sigma > (1 << 32) {
        return Err(Failure::Usage("sigma must be between 1 and 2^32".into()));
    }
    let graph = Graph::read_file(path)?;
    let sp = verify_srg(&graph)?;
    let ls = extract_lines(&graph, &sp, sigma, override_conditions)?;
    let threshold = (sp.lambda as i128 + 2 - (sp.mu as i128 - 1) * (sigma as i128 - 1)) as i64;
    let audit = match audit_lines(&ls, &sp) {
        Ok(audit) => {
            let v = sp.v as i64;
            let vd = audit.delsarte_vertices.len();
            let margin = (audit.g_mult as i64).min(vd as i64) - (v - audit.line_count as i64);
            Some(LinesAuditJson {
                m: audit.m,
                g: audit.g_mult,
                delsarte_line_count: audit.delsarte_line_count,
                all_lines_delsarte: audit.delsarte_line_count == audit.line_count,
                delsarte_vertex_count: vd,
                all_vertices_delsarte: vd == sp.v as usize,
                v_minus_line_count: v - audit.line_count as i64,
                line_deficit_margin: margin,
                incidence_rank: audit.incidence_rank,
                tau_floor_ok: audit.tau_floor.ok,
                line_deficit_ok: audit.line_deficit.ok,
                delsarte_fraction_ok: audit.delsarte_fraction.ok,
                delsarte_fraction_applicable: audit.delsarte_fraction.applicable,
            })
        }
        Err(GraphError::IrrationalEigenvalues) => None,
        Err(e) => return Err(e.into()),
    };
    let sizes = ls.lines().iter().map(Vec::len);
    emit(
        &LinesReport {
            schema: SCHEMA_VERSION,
            file: path.display().to_string(),
            v: sp.v,
            k: sp.k,
            lambda: sp.lambda,
            mu: sp.mu,
            sigma,
            metsch_conditions: metsch_conditions(&sp, sigma),
            threshold,
            line_count: ls.line_count(),
            line_size_min: sizes.clone().min().unwrap_or(0),
            line_size_max: sizes.max().unwrap_or(0),
            audit,
        },
        stdout,
    )
}

#[derive(Serialize)]
struct PgCheckReport {
    schema: u32,
    file: String,
    v: u64,
    k: u64,
    lambda: u64,
    mu: u64,
    #[serde(rename = "K")]
    points_per_line: u64,
    #[serde(rename = "R")]
    lines_per_point: u64,
    #[serde(rename = "T")]
    transversals: u64,
    line_count: usize,
    point_graph_params_match: bool,
}

fn cmd_pg_check(path: &Path, stdout: &mut dyn Write) -> Result<(), Failure> {
    let graph = Graph::read_file(path)?;
    let sp = verify_srg(&graph)?;
    let ls = delsarte_lines(&graph, &sp)?;
    let pg =
        check_partial_geometry(&ls).map_err(|v| domain("not_partial_geometry", v.to_string()))?;
    let params_match = crate::params::pg_point_graph_params(&pg) == Ok(sp);
    emit(
        &PgCheckReport {
            schema: SCHEMA_VERSION,
            file: path.display().to_string(),
            v: sp.v,
            k: sp.k,
            lambda: sp.lambda,
            mu: sp.mu,
            points_per_line: pg.points_per_line,
            lines_per_point: pg.lines_per_point,
            transversals: pg.transversals,
            line_count: ls.line_count(),
            point_graph_params_match: params_match,
        },
        stdout,
    )
}

#[derive(Serialize)]
struct OaVerifyReport {
    schema: u32,
    file: String,
    m: u32,
    n: u32,
    delta: u32,
    valid: bool,
}

fn cmd_oa_verify(path: &Path, stdout: &mut dyn Write) -> Result<(), Failure> {
    let oa = OrthogonalArray::read_file(path)?;
    emit(
        &OaVerifyReport {
            schema: SCHEMA_VERSION,
            file: path.display().to_string(),
            m: oa.rows(),
            n: oa.symbols(),
            delta: oa.deficiency(),
            valid: true,
        },
        stdout,
    )
}

#[derive(Serialize)]
struct OaFromMolsReport {
    schema: u32,
    out: String,
    m: u32,
    n: u32,
    squares: usize,
}

fn cmd_oa_from_mols(
    squares: &[PathBuf],
    out: &Path,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    if squares.is_empty() {
        return Err(Failure::Usage(
            "from-mols needs at least one Latin square file".into(),
        ));
    }
    let mut loaded = Vec::with_capacity(squares.len());
    for path in squares {
        loaded.push(LatinSquare::read_file(path)?);
    }
    let n = loaded[0].order();
    let oa = mols_to_oa(&loaded, n)?;
    oa.write_file(out)?;
    emit(
        &OaFromMolsReport {
            schema: SCHEMA_VERSION,
            out: out.display().to_string(),
            m: oa.rows(),
            n: oa.symbols(),
            squares: loaded.len(),
        },
        stdout,
    )
}

#[derive(Serialize)]
struct OaToGraphReport {
    schema: u32,
    out: String,
    v: usize,
    e: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    srg: Option<StandardParams>,
}

fn cmd_oa_to_graph(path: &Path, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    let oa = OrthogonalArray::read_file(path)?;
    let graph = latin_square_graph(&oa)?;
    let out_path = out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| path.with_extension("graph"));
    graph.write_file(&out_path)?;
    emit(
        &OaToGraphReport {
            schema: SCHEMA_VERSION,
            out: out_path.display().to_string(),
            v: graph.vertex_count(),
            e: graph.edge_count(),
            srg: verify_srg(&graph).ok(),
        },
        stdout,
    )
}

#[derive(Serialize)]
struct OaCompleteReport {
    schema: u32,
    out: String,
    #[serde(flatten)]
    report: crate::completion::CompletionReport,
}

fn cmd_oa_complete(path: &Path, stdout: &mut dyn Write) -> Result<(), Failure> {
    let oa = OrthogonalArray::read_file(path)?;
    let outcome = complete(&oa)?;
    let out_path = path.with_extension("full.oa");
    outcome.array.write_file(&out_path)?;
    emit(
        &OaCompleteReport {
            schema: SCHEMA_VERSION,
            out: out_path.display().to_string(),
            report: outcome.report,
        },
        stdout,
    )
}

#[derive(Serialize)]
struct GenMolsReport {
    schema: u32,
    order: u32,
    count: u32,
    files: Vec<String>,
}

fn cmd_oa_gen_mols(
    order: u32,
    count: u32,
    out_dir: &Path,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let squares = gen_mols_prime(order, count)?;
    let mut files = Vec::with_capacity(squares.len());
    for (idx, sq) in squares.iter().enumerate() {
        let name = format!("mols-o{}-a{}.ls", order, idx + 1);
        let path = out_dir.join(name);
        sq.write_file(&path)?;
        files.push(path.display().to_string());
    }
    emit(
        &GenMolsReport {
            schema: SCHEMA_VERSION,
            order,
            count,
            files,
        },
        stdout,
    )
}
