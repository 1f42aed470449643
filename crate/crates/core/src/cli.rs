//! Command-line front end: tree generation, per-tree invariants, statement
//! verification and class enumeration.
//!
//! Exit codes: 0 success, 1 violations found, 2 usage error, 3 internal
//! cross-check failure.

use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::energy::{coulson_energy_of_subdivision, SpectralSummary};
use crate::error::Error;
use crate::extremal::{self, subdivision_matching_poly, TAU_CHAIN_MAX_VERTICES};
use crate::laplacian::{coefficients_via_charpoly, coefficients_via_subdivision, phi_eval, CoeffVector};
use crate::poly::{parse_rational_list, IntPoly, Rational};
use crate::report::{write_csv, Fixed12, VerificationReport};
use crate::trees::{
    enumerate_trees, make_broom, make_complete_d_ary_limited, make_greedy, make_path, make_star, Tree,
    DEFAULT_MAX_VERTICES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Largest order for which `invariants` runs the characteristic polynomial
/// cross-check (it is quartic in the order with big integers).
pub const CHARPOLY_CHECK_MAX_N: usize = 400;

/// Tolerance for the quadrature-versus-eigenvalue energy cross-check,
/// relative to `max(1, E)`.
pub const COULSON_CHECK_TOL: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "lapcoef", version, about = "Matching polynomials, Laplacian coefficients and extremal trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one tree as JSON {"n":..,"edges":[[a,b],..]}.
    ///
    /// Labels are deterministic; each kind documents its labelling.
    Gen(GenArgs),
    /// Read a tree JSON from stdin and print its invariants.
    Invariants(InvariantsArgs),
    /// Check a statement over a range of parameters and print a report.
    ///
    /// CSV columns: statement,n,dplus1,trees,violations,seconds (one row per
    /// order; seconds only with --timing).
    Verify(VerifyArgs),
    /// Print every tree of order n (one JSON object per line), up to
    /// isomorphism, sorted by canonical code.
    Enum(EnumArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Path 0-1-...-(n-1).
    Path,
    /// Star with centre 0.
    Star,
    /// Greedy tree of maximum degree dplus1, breadth-first labels from root 0.
    Greedy,
    /// Path on n-dplus1+1 vertices with dplus1-1 extra leaves at vertex 0.
    Broom,
    /// Complete d-ary tree of height h, breadth-first labels (children of i are d*i+1..).
    Dary,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub kind: GenKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub dplus1: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Evaluation points for phi, as "p/q" separated by commas.
    #[arg(long, default_value = "1/4,1/2,1,2,4")]
    pub x_grid: String,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Statement identifiers accepted by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementId {
    Thm13,
    Thm14,
    Thm37,
    Thm43Lem42,
    Cor45,
    Cor39,
    Lem31,
    Lem44,
    Lem24,
    Thm25Random,
    Conj46,
}

impl StatementId {
    pub const ALL: [StatementId; 11] = [
        StatementId::Thm13,
        StatementId::Thm14,
        StatementId::Thm37,
        StatementId::Thm43Lem42,
        StatementId::Cor45,
        StatementId::Cor39,
        StatementId::Lem31,
        StatementId::Lem44,
        StatementId::Lem24,
        StatementId::Thm25Random,
        StatementId::Conj46,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::Thm13 => "thm13",
            StatementId::Thm14 => "thm14",
            StatementId::Thm37 => "thm37",
            StatementId::Thm43Lem42 => "thm43-lem42",
            StatementId::Cor45 => "cor45",
            StatementId::Cor39 => "cor39",
            StatementId::Lem31 => "lem31",
            StatementId::Lem44 => "lem44",
            StatementId::Lem24 => "lem24",
            StatementId::Thm25Random => "thm25-random",
            StatementId::Conj46 => "conj46",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = StatementId::ALL.iter().map(|id| id.as_str()).collect();
                format!("unknown statement {s:?}; expected one of {}", known.join(", "))
            })
    }
}

/// Inclusive order range, written `A..B` or `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?} in {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty order range {s:?}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// thm13 | thm14 | thm37 | thm43-lem42 | cor45 | cor39 | lem31 | lem44 |
    /// lem24 | thm25-random | conj46
    pub statement: StatementId,
    /// Order or inclusive range `A..B`. For lem44, lem24 and thm25-random the
    /// upper end is the largest order used.
    #[arg(long)]
    pub n: Option<NRange>,
    /// Same as --n.
    #[arg(long, conflicts_with = "n")]
    pub n_range: Option<NRange>,
    /// Maximum degree of the class.
    #[arg(long, default_value_t = 3)]
    pub dplus1: usize,
    /// Branching (lem31) or maximum degrees (lem44), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub d: Vec<usize>,
    /// Largest height for lem31.
    #[arg(long, default_value_t = 8)]
    pub hmax: usize,
    /// Evaluation points as "p/q" separated by commas.
    #[arg(long, default_value = "1/4,1/2,1,2,4")]
    pub x_grid: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
    /// Random instances for lem24 and thm25-random.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Include elapsed seconds (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub n: usize,
    /// Maximum degree bound (default: no bound).
    #[arg(long, visible_alias = "dplus1")]
    pub max_deg: Option<usize>,
    /// Keep only trees whose maximum degree equals the bound.
    #[arg(long, requires = "max_deg")]
    pub exact: bool,
    #[arg(long, default_value_t = 22)]
    pub max_n: usize,
}

/// Failure of a CLI command, mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("internal cross-check failed: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Run a parsed command. Returns the exit code on success paths (0 or 1).
pub fn run(cli: Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen(a) => cmd_gen(&a, stdout),
        Command::Invariants(a) => {
            let mut input = String::new();
            stdin.read_to_string(&mut input)?;
            cmd_invariants(&a, &input, stdout)
        }
        Command::Verify(a) => cmd_verify(&a, stdout),
        Command::Enum(a) => cmd_enum(&a, stdout),
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn check_limit(n: usize, limit: usize) -> Result<(), CliError> {
    if n > limit {
        return Err(Error::TooLarge {
            requested: n as u128,
            limit,
        }
        .into());
    }
    Ok(())
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let t = match a.kind {
        GenKind::Dary => make_complete_d_ary_limited(need(a.d, "d")?, need(a.h, "h")?, a.max_vertices)?.into_tree(),
        kind => {
            let n = need(a.n, "n")?;
            check_limit(n, a.max_vertices)?;
            match kind {
                GenKind::Path => make_path(n)?,
                GenKind::Star => make_star(n)?,
                GenKind::Greedy => make_greedy(n, need(a.dplus1, "dplus1")?)?,
                GenKind::Broom => make_broom(n, need(a.dplus1, "dplus1")?)?,
                GenKind::Dary => unreachable!(),
            }
        }
    };
    writeln!(out, "{}", t.to_json())?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct PhiPoint {
    #[serde(with = "crate::poly::rational_serde")]
    x: Rational,
    #[serde(with = "crate::poly::rational_serde")]
    value: Rational,
}

/// Output record of `invariants`.
#[derive(Debug, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub coefficients: CoeffVector,
    pub matching_poly_of_subdivision: IntPoly,
    phi_at_grid: Vec<PhiPoint>,
    pub hosoya_of_subdivision: String,
    #[serde(serialize_with = "fixed_vec")]
    pub spectrum: Vec<f64>,
    pub lel: Fixed12,
    pub ie: Fixed12,
    pub subdivision_energy: Fixed12,
    pub coulson_energy: Fixed12,
}

fn fixed_vec<S: serde::Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| Fixed12(x)))
}

/// Compute all per-tree invariants and run the cross-checks: both
/// coefficient routes agree, `IE = LEL = E(S(T))/2`, and the Coulson
/// integral matches the eigenvalue energy.
pub fn compute_invariants(t: &Tree, xs: &[Rational]) -> Result<Invariants, CliError> {
    let coefficients = coefficients_via_subdivision(t);
    if t.order() <= CHARPOLY_CHECK_MAX_N && coefficients != coefficients_via_charpoly(t) {
        return Err(CliError::Internal("coefficients from the subdivision and the characteristic polynomial differ".into()));
    }
    if !coefficients.satisfies_tree_identities() {
        return Err(CliError::Internal("coefficient vector fails c_0 = 1, c_1 = 2(n-1), c_n = 0".into()));
    }
    let m = subdivision_matching_poly(t);
    let summary = SpectralSummary::compute(t);
    if !summary.identities_hold() {
        return Err(CliError::Internal(format!(
            "energy identities fail: ie={}, lel={}, E(S)={}",
            summary.ie, summary.lel, summary.subdivision_energy
        )));
    }
    let coulson = coulson_energy_of_subdivision(t).map_err(|e| CliError::Internal(e.to_string()))?;
    if (coulson - summary.subdivision_energy).abs() > COULSON_CHECK_TOL * summary.subdivision_energy.max(1.0) {
        return Err(CliError::Internal(format!(
            "Coulson integral {coulson} differs from eigenvalue energy {}",
            summary.subdivision_energy
        )));
    }
    let phi_at_grid = xs
        .iter()
        .map(|x| PhiPoint {
            x: x.clone(),
            value: phi_eval(&coefficients, x),
        })
        .collect();
    Ok(Invariants {
        n: t.order(),
        hosoya_of_subdivision: m.coeff_sum().to_string(),
        matching_poly_of_subdivision: m,
        coefficients,
        phi_at_grid,
        spectrum: summary.laplacian_eigenvalues,
        lel: Fixed12(summary.lel),
        ie: Fixed12(summary.ie),
        subdivision_energy: Fixed12(summary.subdivision_energy),
        coulson_energy: Fixed12(coulson),
    })
}

fn parse_grid(s: &str) -> Result<Vec<Rational>, CliError> {
    let xs = parse_rational_list(s)?;
    if xs.is_empty() {
        return Err(CliError::Usage("x-grid is empty".into()));
    }
    xs.iter().try_for_each(crate::poly::require_positive)?;
    Ok(xs)
}

pub fn cmd_invariants(a: &InvariantsArgs, input: &str, out: &mut dyn Write) -> Result<i32, CliError> {
    let xs = parse_grid(&a.x_grid)?;
    let t = Tree::from_json(input.trim()).map_err(|e| CliError::Usage(format!("malformed tree JSON: {e}")))?;
    check_limit(t.order(), a.max_vertices)?;
    let inv = compute_invariants(&t, &xs)?;
    writeln!(out, "{}", serde_json::to_string(&inv).expect("invariants serialize"))?;
    Ok(EXIT_OK)
}

fn order_range(a: &VerifyArgs) -> Option<NRange> {
    a.n.or(a.n_range)
}

fn require_range(a: &VerifyArgs) -> Result<NRange, CliError> {
    order_range(a).ok_or_else(|| CliError::Usage(format!("{} needs --n or --n-range", a.statement)))
}

/// Reports for each order (or each branching value), in order.
pub fn verify_reports(a: &VerifyArgs) -> Result<Vec<VerificationReport>, CliError> {
    use StatementId::*;
    let xs = parse_grid(&a.x_grid)?;
    let per_order = |f: &dyn Fn(usize) -> crate::Result<VerificationReport>| -> Result<Vec<_>, CliError> {
        let r = require_range(a)?;
        check_limit(r.hi, a.max_vertices)?;
        (r.lo..=r.hi).map(|n| f(n).map_err(CliError::from)).collect()
    };
    let d = a.dplus1;
    Ok(match a.statement {
        Thm37 => per_order(&|n| extremal::verify_greedy_min_matching(n, d, &xs))?,
        Thm13 => per_order(&|n| extremal::verify_greedy_min_phi(n, d, &xs))?,
        Thm14 => per_order(&|n| extremal::verify_ie_min(n, d))?,
        Thm43Lem42 => per_order(&|n| extremal::verify_broom_max(n, d))?,
        Cor39 => per_order(&|n| extremal::check_hosoya_min(n, d))?,
        Conj46 => per_order(&|n| extremal::check_conjecture46(n, d))?,
        Cor45 => {
            if require_range(a)?.lo < 2 {
                return Err(CliError::Usage("cor45 needs orders of at least 2".into()));
            }
            per_order(&|n| extremal::check_star_path(n, n, &xs))?
        }
        Lem31 => {
            let ds = if a.d.is_empty() { vec![2] } else { a.d.clone() };
            let limit = a.max_vertices.min(TAU_CHAIN_MAX_VERTICES);
            ds.iter()
                .map(|&d| extremal::check_tau_chain(d, a.hmax, &xs, limit).map_err(CliError::from))
                .collect::<Result<_, _>>()?
        }
        Lem44 => {
            let ds = if a.d.is_empty() { vec![2, 3, 4] } else { a.d.clone() };
            let nmax = require_range(a)?.hi;
            check_limit(nmax, a.max_vertices)?;
            vec![extremal::check_cross_degree(nmax, &ds, &xs)?]
        }
        Lem24 | Thm25Random => {
            let nmax = order_range(a).map_or(14, |r| r.hi);
            check_limit(nmax, a.max_vertices)?;
            let f = if a.statement == Lem24 {
                extremal::check_subtree_monotonicity
            } else {
                extremal::check_exchange_random
            };
            vec![f(a.samples, nmax, &xs, a.seed)?]
        }
    })
}

/// Parse the arguments of `verify` (without the program and subcommand names).
pub fn parse_verify_args<I, T>(args: I) -> Result<VerifyArgs, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv = ["lapcoef".into(), "verify".into()]
        .into_iter()
        .chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from::<_, std::ffi::OsString>(argv) {
        Ok(Cli {
            command: Command::Verify(v),
        }) => Ok(v),
        Ok(_) => unreachable!("argv starts with verify"),
        Err(e) => Err(e.to_string()),
    }
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let mut reports = match a.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| verify_reports(a))?,
        None => verify_reports(a)?,
    };
    if !a.timing {
        for r in &mut reports {
            r.elapsed_seconds = None;
        }
    }
    let violated = reports.iter().any(|r| !r.verified);
    let mut buf = Vec::new();
    match a.format {
        Format::Json => {
            let merged = reports
                .iter()
                .cloned()
                .reduce(VerificationReport::merge)
                .expect("at least one report");
            writeln!(buf, "{}", merged.to_json_pretty())?;
        }
        Format::Csv => write_csv(&reports, &mut buf).map_err(|e| CliError::Usage(e.to_string()))?,
    }
    match &a.out {
        Some(path) => std::fs::write(path, &buf)?,
        None => out.write_all(&buf)?,
    }
    Ok(if violated && a.statement != StatementId::Conj46 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

pub fn cmd_enum(a: &EnumArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.n == 0 {
        return Err(Error::EmptyTree.into());
    }
    if a.n > a.max_n {
        return Err(CliError::Usage(format!(
            "enumeration of order {} exceeds --max-n {}",
            a.n, a.max_n
        )));
    }
    let bound = a.max_deg.unwrap_or(a.n.saturating_sub(1).max(1));
    for t in enumerate_trees(a.n, bound, a.exact) {
        writeln!(out, "{}", t.to_json())?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (Result<i32, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("lapcoef").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let code = run(cli, &mut stdin.as_bytes(), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn parse_ranges_and_ids() {
        assert_eq!("4..12".parse::<NRange>().unwrap(), NRange { lo: 4, hi: 12 });
        assert_eq!("7".parse::<NRange>().unwrap(), NRange { lo: 7, hi: 7 });
        assert!("9..4".parse::<NRange>().is_err());
        for id in StatementId::ALL {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), id);
        }
        assert!("thm99".parse::<StatementId>().is_err());
    }

    #[test]
    fn gen_examples() {
        let (code, out) = run_args(&["gen", "path", "--n", "1"], "");
        assert_eq!(code.unwrap(), 0);
        assert_eq!(out, "{\"n\":1,\"edges\":[]}\n");
        let (_, out) = run_args(&["gen", "dary", "--d", "2", "--h", "3"], "");
        assert_eq!(Tree::from_json(out.trim()).unwrap().order(), 7);
        let (_, out) = run_args(&["gen", "greedy", "--n", "10", "--dplus1", "3"], "");
        assert_eq!(Tree::from_json(out.trim()).unwrap().order(), 10);
        let (code, _) = run_args(&["gen", "greedy", "--n", "10"], "");
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn invariants_examples() {
        let (code, out) = run_args(&["invariants"], r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(code.unwrap(), 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficients"], serde_json::json!(["1", "4", "3", "0"]));
        assert_eq!(v["ie"].to_string(), "2.732050807569");
        let (_, out) = run_args(&["invariants"], r#"{"n":4,"edges":[[0,1],[0,2],[0,3]]}"#);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["hosoya_of_subdivision"], "20");
        assert_eq!(v["ie"].to_string(), "4.000000000000");
        let (_, out) = run_args(&["invariants"], r#"{"n":1,"edges":[]}"#);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["coefficients"], serde_json::json!(["1", "0"]));
        assert_eq!(v["lel"].to_string(), "0.000000000000");
        let (code, _) = run_args(&["invariants"], r#"{"n":3,"edges":[[0,1]]}"#);
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out) = run_args(&["verify", "thm37", "--n", "4..8", "--dplus1", "3"], "");
        assert_eq!(code.unwrap(), 0);
        assert!(out.contains("\"verified\": true"));
        assert!(!out.contains("elapsed_seconds"));
        let (code, _) = run_args(&["verify", "lem31", "--d", "2", "--hmax", "8"], "");
        assert_eq!(code.unwrap(), 0);
        let (code, out) = run_args(&["verify", "thm37", "--n", "3", "--dplus1", "3"], "");
        assert_eq!(code.unwrap(), 0);
        assert!(out.contains("\"empty_class\": true"));
        let (code, _) = run_args(&["verify", "thm37", "--n", "5", "--dplus1", "1"], "");
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
        let (code, _) = run_args(&["verify", "thm37", "--n", "5", "--x-grid", "0,1"], "");
        assert_eq!(code.unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn verify_csv_rows_per_order() {
        let (code, out) = run_args(&["verify", "cor39", "--n", "4..6", "--format", "csv"], "");
        assert_eq!(code.unwrap(), 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "statement,n,dplus1,trees,violations,seconds");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("cor39,4,3,1,0,"));
    }

    #[test]
    fn enum_streams_lines() {
        let (code, out) = run_args(&["enum", "--n", "6"], "");
        assert_eq!(code.unwrap(), 0);
        assert_eq!(out.lines().count(), 6);
        let (_, out) = run_args(&["enum", "--n", "6", "--max-deg", "3", "--exact"], "");
        assert_eq!(out.lines().count(), 3);
    }
}
