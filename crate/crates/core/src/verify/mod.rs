//! Verification suites and their reports.
//!
//! Each suite is a list of [`Check`]s comparing two computed sides. Checks
//! run on a rayon pool and are sorted by id before they are reported, so the
//! output is the same for any degree of parallelism.

mod number;
mod properties;
mod suites;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub use properties::{property_checks, PROPERTY_NAMES};

/// Seed used by the randomised suites unless another is given.
pub const DEFAULT_SEED: u64 = 42;

/// `x` rounded to 15 significant digits, the precision reports carry.
pub fn round15(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.14e}").parse().unwrap_or(x)
    } else {
        x
    }
}

/// One comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    #[serde(with = "number")]
    pub lhs: f64,
    #[serde(with = "number")]
    pub rhs: f64,
    #[serde(with = "number")]
    pub error: f64,
    #[serde(with = "number")]
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    /// Values are rounded to 15 significant digits; `pass` is decided on
    /// the rounded error. A NaN error never passes.
    pub fn new(id: impl Into<String>, lhs: f64, rhs: f64, error: f64, tol: f64) -> Self {
        let (lhs, rhs, error, tol) = (round15(lhs), round15(rhs), round15(error), round15(tol));
        Self {
            id: id.into(),
            lhs,
            rhs,
            error,
            tol,
            pass: error <= tol,
        }
    }

    /// `|lhs − rhs| / |rhs|`.
    pub fn relative(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::new(id, lhs, rhs, ((lhs - rhs) / rhs).abs(), tol)
    }

    /// `|lhs − rhs|`.
    pub fn absolute(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::new(id, lhs, rhs, (lhs - rhs).abs(), tol)
    }

    /// A check whose computation failed.
    pub fn failed(id: impl Into<String>, tol: f64) -> Self {
        Self::new(id, f64::NAN, f64::NAN, f64::NAN, tol)
    }

    fn with_tol(mut self, tol: f64) -> Self {
        self.tol = round15(tol);
        self.pass = self.error <= self.tol;
        self
    }
}

/// Wraps a fallible computation into a check, recording failures as NaN.
pub(crate) fn guarded(
    id: impl Into<String>,
    tol: f64,
    f: impl FnOnce(String, f64) -> Result<Check>,
) -> Check {
    let id = id.into();
    f(id.clone(), tol).unwrap_or_else(|_| Check::failed(id, tol))
}

/// The verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Legendre,
    Reduction,
    Pi,
    Continuation,
    Singular,
    Properties,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const CONCRETE: [Suite; 6] = [
        Self::Legendre,
        Self::Reduction,
        Self::Pi,
        Self::Continuation,
        Self::Singular,
        Self::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Legendre => "legendre",
            Self::Reduction => "reduction",
            Self::Pi => "pi",
            Self::Continuation => "continuation",
            Self::Singular => "singular",
            Self::Properties => "properties",
            Self::All => "all",
        }
    }

    fn checks(self, seed: u64) -> Vec<Check> {
        match self {
            Self::Legendre => suites::legendre(),
            Self::Reduction => suites::reduction(),
            Self::Pi => suites::pi(),
            Self::Continuation => suites::continuation(),
            Self::Singular => suites::singular(),
            Self::Properties => property_checks(seed),
            Self::All => Self::CONCRETE
                .iter()
                .flat_map(|s| {
                    s.checks(seed).into_iter().map(move |mut c| {
                        c.id = format!("{}/{}", s.name(), c.id);
                        c
                    })
                })
                .collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::CONCRETE
            .into_iter()
            .chain([Self::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| domain(format!("unknown suite {s:?}")))
    }
}

/// Run configuration, echoed in the report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Config {
    /// Overrides every check's tolerance when set.
    #[serde(with = "number::optional")]
    pub tol: Option<f64>,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            tol: None,
            seed: DEFAULT_SEED,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub config: Config,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| domain(format!("malformed report: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "lhs", "rhs", "error", "tol", "pass"])
            .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                c.id.clone(),
                number::format(c.lhs),
                number::format(c.rhs),
                number::format(c.error),
                number::format(c.tol),
                c.pass.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
    }

    /// One line per check, then failures and a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}  {:<width$}  {:>19}  {:>19}  err {:.3e}  tol {:.1e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                format!("{:.11e}", c.lhs),
                format!("{:.11e}", c.rhs),
                c.error,
                c.tol,
            );
        }
        let failed: Vec<&str> = self.failures().map(|c| c.id.as_str()).collect();
        if !failed.is_empty() {
            let _ = writeln!(out, "failing: {}", failed.join(", "));
        }
        let _ = writeln!(
            out,
            "{}: {}/{} passed in {} ms",
            self.suite,
            self.checks.len() - failed.len(),
            self.checks.len(),
            self.elapsed_ms
        );
        out
    }
}

/// Runs `suite` on a pool of `config.jobs` threads (`0`: one per core).
pub fn run_suite(suite: Suite, config: Config) -> Result<Report> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| domain(format!("cannot build worker pool: {e}")))?;
    let start = Instant::now();
    let config = Config {
        tol: config.tol.map(round15),
        ..config
    };
    let mut checks = pool.install(|| suite.checks(config.seed));
    if let Some(tol) = config.tol {
        checks = checks.into_iter().map(|c| c.with_tol(tol)).collect();
    }
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report {
        suite: suite.name().to_string(),
        config: Config {
            jobs: pool.current_num_threads(),
            ..config
        },
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report {
            suite: "demo".into(),
            config: Config {
                tol: Some(1e-9),
                seed: 7,
                jobs: 2,
            },
            checks: vec![
                Check::relative(
                    "a,\"quoted\"",
                    std::f64::consts::PI,
                    std::f64::consts::PI * (1.0 + 1e-15),
                    1e-12,
                ),
                Check::absolute("b", 1.0 / 3.0, 0.3, 1e-3),
            ],
            elapsed_ms: 12,
        }
    }

    #[test]
    fn pass_flag_follows_error() {
        let r = sample();
        assert!(r.checks[0].pass);
        assert!(!r.checks[1].pass);
        assert!(!Check::failed("x", 1.0).pass);
        assert!(!r.passed());
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.to_json();
        assert!(text.contains("3.14159265358979e0"));
        assert_eq!(Report::from_json(&text).unwrap(), r);
    }

    #[test]
    fn csv_quotes_ids() {
        let csv = sample().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("id,lhs,rhs,error,tol,pass"));
        assert!(lines.next().unwrap().starts_with("\"a,\"\"quoted\"\"\","));
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::CONCRETE.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn override_recomputes_pass() {
        let c = Check::absolute("b", 1.0 / 3.0, 0.3, 1e-3).with_tol(0.1);
        assert!(c.pass);
    }
}
