//! The `hyperell` command line.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::elliptic::{complete_k, modulus_pair, Modulus, ParamPair};
use crate::formulae::{lauricella_form, pi_estimate};
use crate::lauricella::{
    fd_integral, fd_series, gauss_2f1, HFamily, LauricellaSpec, DEFAULT_MAX_DEGREE,
};
use crate::quadrature::{hyperelliptic_direct, Hyperelliptic, DEFAULT_COMPLEX_TOL, DEFAULT_TOL};
use crate::reduction::{elliptic_closed, reduced_u_form};
use crate::singular::{
    lambda_closed, lambda_solver, ratio_check, singular_identity, theta_modulus,
};
use crate::verify::{run_suite, Config, Suite, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "hyperell",
    version,
    about = "Hyperelliptic, elliptic and Lauricella evaluations with verification suites"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity, e.g. `eval K k=0.5` or `eval pi index=1 a=2 b=1`.
    Eval {
        /// K, Kpair, I_direct, I_closed, I_u, I_lauricella, fd, 2f1, pi,
        /// lambda, theta, ratio or identity.
        target: String,
        /// Arguments as key=value.
        args: Vec<String>,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        /// legendre, reduction, pi, continuation, singular, properties or all.
        suite: String,
        /// Tolerance applied to every check in place of the suite's own.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 0 uses one per logical core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Failure of a command: bad usage (exit 2) or a failed evaluation (exit 1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Eval(crate::Error),
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        Self::Eval(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parsed `key=value` arguments.
struct Args(BTreeMap<String, String>);

impl Args {
    fn parse(raw: &[String], allowed: &[&str]) -> Result<Self, CliError> {
        let mut map = BTreeMap::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| usage(format!("expected key=value, got {item:?}")))?;
            if !allowed.contains(&k) {
                return Err(usage(format!(
                    "unknown argument {k:?}; expected {}",
                    allowed.join(", ")
                )));
            }
            map.insert(k.to_string(), v.to_string());
        }
        Ok(Self(map))
    }

    fn raw(&self, key: &str) -> Result<&str, CliError> {
        self.0
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| usage(format!("missing argument {key}=")))
    }

    fn real(&self, key: &str) -> Result<f64, CliError> {
        let v = self.raw(key)?;
        v.parse()
            .map_err(|_| usage(format!("{key}: not a number: {v:?}")))
    }

    fn real_or(&self, key: &str, default: f64) -> Result<f64, CliError> {
        if self.0.contains_key(key) {
            self.real(key)
        } else {
            Ok(default)
        }
    }

    fn integer(&self, key: &str) -> Result<u32, CliError> {
        let v = self.raw(key)?;
        v.parse()
            .map_err(|_| usage(format!("{key}: not an integer: {v:?}")))
    }

    fn complex(&self, key: &str) -> Result<Complex64, CliError> {
        let v = self.raw(key)?;
        parse_complex(v).ok_or_else(|| usage(format!("{key}: not a complex number: {v:?}")))
    }

    fn complex_list(&self, key: &str) -> Result<Vec<Complex64>, CliError> {
        self.raw(key)?
            .split(',')
            .map(|s| parse_complex(s).ok_or_else(|| usage(format!("{key}: bad entry {s:?}"))))
            .collect()
    }

    fn pair(&self) -> Result<ParamPair, CliError> {
        Ok(ParamPair::new(self.real("a")?, self.real("b")?)?)
    }

    fn integral(&self) -> Result<Hyperelliptic, CliError> {
        Ok(Hyperelliptic::from_index(self.integer("index")? as usize)?)
    }
}

/// `1.5`, `2i`, `-i`, `1+2i`, `1.5e-3-0.25i`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (body[..j].parse().ok()?, &body[j..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse().ok()?,
    };
    Some(Complex64::new(re, im))
}

/// 15 decimals for moderate magnitudes, 15 significant digits otherwise.
pub fn format_value(x: f64) -> String {
    let m = x.abs();
    if (1e-3..1e3).contains(&m) {
        format!("{x:.15}")
    } else {
        format!("{x:.14e}")
    }
}

pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", format_value(z.re), format_value(z.im.abs()))
}

/// Evaluates a target and returns the lines to print.
pub fn eval(target: &str, raw: &[String]) -> Result<Vec<String>, CliError> {
    let line = |label: &str, v: String| format!("{label} {v}");
    let out = match target {
        "K" => {
            let a = Args::parse(raw, &["k"])?;
            vec![format_value(complete_k(Modulus::new(a.real("k")?)?))]
        }
        "Kpair" => {
            let a = Args::parse(raw, &["a", "b"])?;
            let e = modulus_pair(a.pair()?);
            vec![
                line("k_plus", format_value(e.k_plus.k())),
                line("k_minus", format_value(e.k_minus.k())),
                line("K_plus", format_value(e.big_k_plus)),
                line("K_minus", format_value(e.big_k_minus)),
            ]
        }
        "I_direct" => {
            let a = Args::parse(raw, &["index", "a", "b", "tol"])?;
            let r = hyperelliptic_direct(a.integral()?, a.pair()?, a.real_or("tol", DEFAULT_TOL)?)?;
            vec![
                format_value(r.value),
                line("error_estimate", format!("{:.3e}", r.error_estimate)),
            ]
        }
        "I_closed" => {
            let a = Args::parse(raw, &["index", "a", "b"])?;
            vec![format_value(elliptic_closed(a.integral()?, a.pair()?))]
        }
        "I_u" => {
            let a = Args::parse(raw, &["index", "a", "b", "tol"])?;
            vec![format_value(reduced_u_form(a.integral()?, a.pair()?, a.real_or("tol", DEFAULT_TOL)?)?)]
        }
        "I_lauricella" => {
            let a = Args::parse(raw, &["index", "a", "b", "tol"])?;
            let tol = a.real_or("tol", DEFAULT_COMPLEX_TOL)?;
            vec![format_value(lauricella_form(a.integral()?, a.pair()?, tol)?)]
        }
        "fd" => {
            let a = Args::parse(raw, &["a", "b", "c", "x", "tol", "method"])?;
            let spec = LauricellaSpec::new(a.complex("a")?, a.complex_list("b")?, a.complex("c")?, a.complex_list("x")?)?;
            let method = a.0.get("method").map(String::as_str).unwrap_or("integral");
            let (value, err) = match method {
                "integral" => {
                    let r = fd_integral(&spec, a.real_or("tol", DEFAULT_COMPLEX_TOL)?)?;
                    (r.value, r.error_estimate)
                }
                "series" => {
                    let r = fd_series(&spec, a.real_or("tol", 1e-15)?, DEFAULT_MAX_DEGREE)?;
                    (r.value, r.error_estimate)
                }
                m => return Err(usage(format!("method must be integral or series, got {m:?}"))),
            };
            vec![format_complex(value), line("error_estimate", format!("{err:.3e}"))]
        }
        "2f1" => {
            let a = Args::parse(raw, &["a", "b", "c", "x", "tol"])?;
            let v = gauss_2f1(a.complex("a")?, a.complex("b")?, a.complex("c")?, a.complex("x")?, a.real_or("tol", 1e-15)?)?;
            vec![format_complex(v)]
        }
        "pi" => {
            let a = Args::parse(raw, &["index", "a", "b", "tol"])?;
            let v = pi_estimate(a.integral()?, a.pair()?, a.real_or("tol", 1e-10)?)?;
            vec![format_value(v.pi_value), line("abs_error", format!("{:.3e}", v.abs_error))]
        }
        "lambda" => {
            let a = Args::parse(raw, &["n", "tol"])?;
            let n = a.real("n")?;
            let mut v = vec![format_value(lambda_solver(n, a.real_or("tol", 1e-16)?)?.k())];
            if n.fract() == 0.0 && n > 0.0 {
                if let Ok(e) = lambda_closed(n as u32) {
                    v.push(line("closed_form", format_value(e.lambda_closed)));
                    v.push(line("ab_ratio", format_value(e.ab_ratio)));
                }
            }
            v
        }
        "theta" => {
            let a = Args::parse(raw, &["n", "cutoff"])?;
            vec![format_value(theta_modulus(a.real("n")?, a.real_or("cutoff", 1e-17)?)?.k())]
        }
        "ratio" => {
            let a = Args::parse(raw, &["a", "b", "tol"])?;
            let r = ratio_check(a.pair()?, a.real_or("tol", 1e-12)?)?;
            vec![
                line("direct", format_value(r.direct)),
                line("via_quozi", format_value(r.via_quozi)),
                line("via_quozi2", format_value(r.via_quozi2)),
            ]
        }
        "identity" => {
            let a = Args::parse(raw, &["order", "family", "tol"])?;
            let family: HFamily = a.raw("family")?.parse()?;
            let o = singular_identity(a.integer("order")?, family, a.real_or("tol", 1e-12)?)?;
            vec![
                line("lhs", format_value(o.lhs)),
                line("rhs", format_value(o.rhs)),
                line("R", format_value(o.case.r)),
                line("relative_error", format!("{:.3e}", o.relative_error())),
            ]
        }
        t => {
            return Err(usage(format!(
                "unknown target {t:?}; expected K, Kpair, I_direct, I_closed, I_u, I_lauricella, fd, 2f1, pi, lambda, theta, ratio or identity"
            )))
        }
    };
    Ok(out)
}

fn verify(
    suite: &str,
    tol: Option<f64>,
    format: Format,
    out: Option<PathBuf>,
    jobs: usize,
    seed: u64,
) -> Result<bool, CliError> {
    let suite: Suite = suite
        .parse()
        .map_err(|e: crate::Error| usage(e.to_string()))?;
    if let Some(t) = tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(usage(format!("--tol must be positive, got {t}")));
        }
    }
    let report = run_suite(suite, Config { tol, seed, jobs })?;
    let body = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    match out {
        Some(path) => {
            fs::write(&path, body)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            if !report.passed() {
                for c in report.failures() {
                    eprintln!("FAIL {}", c.id);
                }
            }
        }
        None => print!("{body}"),
    }
    Ok(report.passed())
}

/// Runs the parsed command line and maps the outcome to an exit code.
pub fn run(cli: Cli) -> ExitCode {
    let outcome = match cli.command {
        Command::Eval { target, args } => eval(&target, &args).map(|lines| {
            for l in lines {
                println!("{l}");
            }
            true
        }),
        Command::Verify {
            suite,
            tol,
            format,
            out,
            jobs,
            seed,
        } => verify(&suite, tol, format, out, jobs, seed),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Eval(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

pub fn main() -> ExitCode {
    run(Cli::parse())
}
