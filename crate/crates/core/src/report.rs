//! Verification reports and their JSON / CSV forms.

use std::io::Write;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::poly::{rational_vec_serde, Rational};
use crate::trees::Tree;

/// Serialize a float with exactly 12 decimals; non-finite values become null.
pub fn fixed_decimal<S: Serializer>(x: f64, s: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return s.serialize_none();
    }
    let text = format!("{x:.12}");
    let text = if text == "-0.000000000000" { "0.000000000000".to_string() } else { text };
    match serde_json::Number::from_str(&text) {
        Ok(num) => num.serialize(s),
        Err(_) => s.serialize_f64(x),
    }
}

/// Newtype for serializing floats with [`fixed_decimal`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fixed12(pub f64);

impl Serialize for Fixed12 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        fixed_decimal(self.0, s)
    }
}

/// A tree that breaks a checked statement, with the values that show it.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub tree: Tree,
    pub witness: serde_json::Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dplus1: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub d: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hmax: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(with = "rational_vec_serde", skip_serializing_if = "Vec::is_empty")]
    pub xs: Vec<Rational>,
}

impl ReportParams {
    pub fn for_n(n: usize) -> Self {
        ReportParams {
            n_min: Some(n),
            n_max: Some(n),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub params: ReportParams,
    pub trees_examined: u64,
    pub verified: bool,
    pub violations: Vec<Violation>,
    /// Statement-specific audit data (per-x minimizers, per-k minima, ...).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

impl VerificationReport {
    pub fn new(statement: &str, params: ReportParams) -> Self {
        VerificationReport {
            statement: statement.to_string(),
            params,
            trees_examined: 0,
            verified: true,
            violations: Vec::new(),
            details: Vec::new(),
            elapsed_seconds: None,
        }
    }

    pub fn push_violation(&mut self, tree: Tree, witness: serde_json::Value) {
        self.violations.push(Violation { tree, witness });
        self.verified = false;
    }

    /// Combine two reports of the same statement (e.g. consecutive orders).
    /// Counts add, lists concatenate, the parameter range widens.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        debug_assert_eq!(self.statement, other.statement);
        self.trees_examined += other.trees_examined;
        self.violations.extend(other.violations);
        self.details.extend(other.details);
        self.verified = self.violations.is_empty();
        self.params.n_min = min_opt(self.params.n_min, other.params.n_min);
        self.params.n_max = max_opt(self.params.n_max, other.params.n_max);
        for d in other.params.d {
            if !self.params.d.contains(&d) {
                self.params.d.push(d);
            }
        }
        self.elapsed_seconds = match (self.elapsed_seconds, other.elapsed_seconds) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

fn max_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, y) => x.or(y),
    }
}

/// Columns of the CSV summary.
pub const CSV_HEADER: [&str; 6] = ["statement", "n", "dplus1", "trees", "violations", "seconds"];

/// One CSV row per report: statement, n range (`a..b` or `a`), max degree,
/// trees examined, violation count, elapsed seconds.
pub fn write_csv<W: Write>(reports: &[VerificationReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        let n = match (r.params.n_min, r.params.n_max) {
            (Some(a), Some(b)) if a == b => a.to_string(),
            (Some(a), Some(b)) => format!("{a}..{b}"),
            _ => String::new(),
        };
        w.write_record([
            r.statement.clone(),
            n,
            r.params.dplus1.map(|d| d.to_string()).unwrap_or_default(),
            r.trees_examined.to_string(),
            r.violations.len().to_string(),
            r.elapsed_seconds.map(|s| format!("{s:.3}")).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
