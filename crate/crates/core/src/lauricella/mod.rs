//! The Lauricella function
//!
//! ```text
//! F_D^(n)(a; b₁…bₙ; c; x₁…xₙ) = Σ (a)_{|m|} ∏(bᵢ)_{mᵢ} / ((c)_{|m|} ∏ mᵢ!) ∏ xᵢ^{mᵢ}
//! ```
//!
//! by series inside the unit polydisc and by its Euler integral outside.

mod integral;
mod pochhammer;
mod series;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

pub use integral::fd_integral;
pub use pochhammer::{pochhammer, PochhammerCache};
pub use series::{fd_series, gauss_2f1, SeriesResult, BOUNDARY_MARGIN, DEFAULT_MAX_DEGREE};

use crate::error::{domain, Error, Result};

/// Parameters and arguments of one `F_D^(n)` evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct LauricellaSpec {
    pub a: Complex64,
    pub b: Vec<Complex64>,
    pub c: Complex64,
    pub x: Vec<Complex64>,
}

impl LauricellaSpec {
    pub fn new(a: Complex64, b: Vec<Complex64>, c: Complex64, x: Vec<Complex64>) -> Result<Self> {
        if b.is_empty() {
            return Err(domain("at least one variable is required"));
        }
        if b.len() != x.len() {
            return Err(domain(format!(
                "{} exponents but {} arguments",
                b.len(),
                x.len()
            )));
        }
        let all = [a, c]
            .into_iter()
            .chain(b.iter().copied())
            .chain(x.iter().copied());
        if all.into_iter().any(|z| !z.is_finite()) {
            return Err(domain("parameters must be finite"));
        }
        Ok(Self { a, b, c, x })
    }

    pub fn real(a: f64, b: &[f64], c: f64, x: &[f64]) -> Result<Self> {
        let lift = |v: &[f64]| v.iter().map(|&t| Complex64::new(t, 0.0)).collect();
        Self::new(
            Complex64::new(a, 0.0),
            lift(b),
            Complex64::new(c, 0.0),
            lift(x),
        )
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

/// The reduction formula, valid when `c = b₁ + … + bₙ`:
///
/// ```text
/// F_D^(n)(a; b; Σb; x) = (1 − xₙ)^(−a) F_D^(n−1)(a; b₁…bₙ₋₁; Σb; (xᵢ − xₙ)/(1 − xₙ))
/// ```
///
/// Returns the prefactor and the reduced specification. The pivot is always
/// the last argument, and the surviving exponents are those of the
/// surviving arguments.
pub fn fd_reduce(spec: &LauricellaSpec) -> Result<(Complex64, LauricellaSpec)> {
    let n = spec.len();
    if n < 2 {
        return Err(Error::Precondition("reduction needs n >= 2".into()));
    }
    let total: Complex64 = spec.b.iter().sum();
    if (spec.c - total).norm() > 1e-12 * spec.c.norm().max(1.0) {
        return Err(Error::Precondition(format!(
            "c = {} differs from the exponent sum {}",
            spec.c, total
        )));
    }
    let pivot = spec.x[n - 1];
    let gap = 1.0 - pivot;
    if gap.norm() <= f64::EPSILON {
        return Err(Error::SingularPivot);
    }
    let prefactor = (-spec.a * gap.ln()).exp();
    let x = spec.x[..n - 1]
        .iter()
        .map(|&xi| (xi - pivot) / gap)
        .collect();
    let reduced = LauricellaSpec::new(spec.a, spec.b[..n - 1].to_vec(), spec.c, x)?;
    Ok((prefactor, reduced))
}

/// The three-variable shorthands with `b = (½, ½, ½)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HFamily {
    /// `F_D^(3)(½; ½,½,½; 2; ·)`
    H1,
    /// `F_D^(3)(½; ½,½,½; 1; ·)`
    G,
    /// `F_D^(3)(3/2; ½,½,½; 2; ·)`
    H2,
}

impl HFamily {
    pub const ALL: [HFamily; 3] = [Self::H1, Self::G, Self::H2];

    /// `(a, c)`.
    pub fn parameters(self) -> (f64, f64) {
        match self {
            Self::H1 => (0.5, 2.0),
            Self::G => (0.5, 1.0),
            Self::H2 => (1.5, 2.0),
        }
    }

    pub fn spec(self, x: f64, y: f64, z: f64) -> Result<LauricellaSpec> {
        let (a, c) = self.parameters();
        LauricellaSpec::real(a, &[0.5; 3], c, &[x, y, z])
    }
}

impl fmt::Display for HFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::H1 => "H1",
            Self::G => "G",
            Self::H2 => "H2",
        })
    }
}

impl FromStr for HFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "H1" => Ok(Self::H1),
            "G" => Ok(Self::G),
            "H2" => Ok(Self::H2),
            _ => Err(domain(format!(
                "unknown family {s:?}, expected H1, G or H2"
            ))),
        }
    }
}

/// A shorthand at real arguments off the cut, by the integral route. The
/// integrand is real there, so only the real part is returned.
pub fn h_eval(family: HFamily, x: f64, y: f64, z: f64, tol: f64) -> Result<f64> {
    Ok(fd_integral(&family.spec(x, y, z)?, tol)?.value.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::ParamPair;
    use crate::quadrature::{hyperelliptic_direct, Hyperelliptic};
    use std::f64::consts::PI;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn spec_validation() {
        assert!(LauricellaSpec::real(0.5, &[], 1.0, &[]).is_err());
        assert!(LauricellaSpec::real(0.5, &[0.5], 1.0, &[0.1, 0.2]).is_err());
        assert!(LauricellaSpec::real(f64::NAN, &[0.5], 1.0, &[0.1]).is_err());
    }

    #[test]
    fn reduce_preconditions() {
        let one = LauricellaSpec::real(0.5, &[0.5], 0.5, &[0.1]).unwrap();
        assert!(matches!(fd_reduce(&one), Err(Error::Precondition(_))));
        let off = LauricellaSpec::real(0.5, &[0.5, 0.5], 2.0, &[0.1, 0.2]).unwrap();
        assert!(matches!(fd_reduce(&off), Err(Error::Precondition(_))));
        let pivot = LauricellaSpec::real(0.5, &[0.5, 0.5], 1.0, &[0.1, 1.0]).unwrap();
        assert!(matches!(fd_reduce(&pivot), Err(Error::SingularPivot)));
    }

    #[test]
    fn reduction_is_an_identity() {
        let spec = LauricellaSpec::real(0.7, &[0.5, 1.25, 0.25], 2.0, &[0.3, -0.2, 0.1]).unwrap();
        let full = fd_series(&spec, 1e-16, DEFAULT_MAX_DEGREE).unwrap().value;
        let (pre, reduced) = fd_reduce(&spec).unwrap();
        let part = fd_series(&reduced, 1e-16, DEFAULT_MAX_DEGREE)
            .unwrap()
            .value;
        assert!(
            (full - pre * part).norm() < 1e-12,
            "{full} vs {}",
            pre * part
        );
    }

    fn prolo_spec(a: f64, b: f64) -> LauricellaSpec {
        let x = vec![
            Complex64::new(1.0, a),
            Complex64::new(1.0, -a),
            Complex64::new(1.0, b),
            Complex64::new(1.0, -b),
        ];
        LauricellaSpec::new(re(0.5), vec![re(0.5); 4], re(2.0), x).unwrap()
    }

    #[test]
    fn four_variable_complex_gives_second_integral() {
        let v = fd_integral(&prolo_spec(2.0, 1.0), 1e-10).unwrap().value;
        let i2 = hyperelliptic_direct(Hyperelliptic::I2, ParamPair::new(2.0, 1.0).unwrap(), 1e-12)
            .unwrap()
            .value;
        assert!(v.im.abs() < 1e-10, "{v}");
        assert!(
            (v.re - 2.0 / PI * i2).abs() < 1e-9,
            "{} vs {}",
            v.re,
            2.0 / PI * i2
        );
    }

    #[test]
    fn reduce_identity_pivot() {
        let spec = LauricellaSpec::real(0.5, &[0.5, 0.25, 0.25], 1.0, &[0.3, -0.6, 0.0]).unwrap();
        let (pre, reduced) = fd_reduce(&spec).unwrap();
        assert_eq!(pre, re(1.0));
        assert_eq!(reduced.x, vec![re(0.3), re(-0.6)]);
        assert_eq!(reduced.b, vec![re(0.5), re(0.25)]);
    }

    #[test]
    fn reduce_continuation_configuration() {
        let (a, b) = (3.0, 1.0);
        let (pre, reduced) = fd_reduce(&prolo_spec(a, b)).unwrap();
        let expected = [(a + b) / b, (b - a) / b, 2.0];
        for (got, want) in reduced.x.iter().zip(expected) {
            assert!((got - re(want)).norm() < 1e-14, "{got} vs {want}");
        }
        let ib_pow = (-0.5 * Complex64::new(0.0, b).ln()).exp();
        assert!((pre - ib_pow).norm() < 1e-14);
    }

    #[test]
    fn reduce_preserves_value_by_integral() {
        let spec = LauricellaSpec::real(0.5, &[0.5, 0.75, 0.25], 1.5, &[0.4, -0.7, 0.5]).unwrap();
        let full = fd_integral(&spec, 1e-12).unwrap().value;
        let (pre, reduced) = fd_reduce(&spec).unwrap();
        let part = fd_integral(&reduced, 1e-12).unwrap().value;
        assert!((full - pre * part).norm() < 1e-9 * full.norm());
    }

    #[test]
    fn single_variable_integral_matches_gauss() {
        let spec = LauricellaSpec::real(0.5, &[0.5], 1.5, &[-0.7]).unwrap();
        let i = fd_integral(&spec, 1e-12).unwrap().value;
        let g = gauss_2f1(re(0.5), re(0.5), re(1.5), re(-0.7), 1e-16).unwrap();
        assert!((i - g).norm() < 1e-10);
    }

    #[test]
    fn sqrt3_shorthand_identities() {
        let m = 2.0 * 3f64.sqrt() * (2.0 - 3f64.sqrt());
        let h1 = h_eval(HFamily::H1, 0.5, 0.25, -0.5, 1e-12).unwrap();
        let g1 = h_eval(HFamily::G, 0.5, 0.25, -0.5, 1e-12).unwrap();
        assert!((h1 - m * g1).abs() < 1e-9 * h1, "{h1} vs {}", m * g1);
        let h2 = h_eval(HFamily::H2, -1.0, 1.0 / 3.0, -1.0 / 3.0, 1e-12).unwrap();
        let g2 = h_eval(HFamily::G, -1.0, 1.0 / 3.0, -1.0 / 3.0, 1e-12).unwrap();
        assert!((h2 - m * g2).abs() < 1e-9 * h2, "{h2} vs {}", m * g2);
        let s = fd_series(
            &HFamily::H1.spec(0.5, 0.25, -0.5).unwrap(),
            1e-15,
            DEFAULT_MAX_DEGREE,
        )
        .unwrap()
        .value;
        assert!((s.re - h1).abs() < 1e-9 * h1);
    }

    #[test]
    fn family_parsing() {
        for f in HFamily::ALL {
            assert_eq!(f.to_string().parse::<HFamily>().unwrap(), f);
        }
        assert!("H3".parse::<HFamily>().is_err());
    }

    #[test]
    fn shorthand_at_origin() {
        for f in HFamily::ALL {
            assert!((h_eval(f, 0.0, 0.0, 0.0, 1e-12).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}
