//! Power-series evaluation of `₂F₁` and `F_D^(n)`.

use num_complex::Complex64;

use super::LauricellaSpec;
use crate::error::{domain, Error, Result};

/// Default cap on the total degree of the `F_D` series.
pub const DEFAULT_MAX_DEGREE: usize = 2000;

/// Distance to the unit circle below which an argument is treated as
/// boundary-adjacent.
pub const BOUNDARY_MARGIN: f64 = 1e-8;

/// Outcome of a series summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    /// Last three layer magnitudes scaled by the geometric tail bound
    /// `1/(1 − max|xᵢ|)`.
    pub error_estimate: f64,
    /// Highest total degree summed.
    pub degree: usize,
    /// Set when some `|xᵢ| ≥ 1 − 1e-8`.
    pub near_boundary: bool,
}

fn is_non_positive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// `₂F₁(a, b; c; x) = Σ (a)ₙ(b)ₙ/((c)ₙ n!) xⁿ` for `|x| < 1`.
pub fn gauss_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    x: Complex64,
    tol: f64,
) -> Result<Complex64> {
    if x.norm() >= 1.0 {
        return Err(domain(format!(
            "series needs |x| < 1, got |x| = {}",
            x.norm()
        )));
    }
    if is_non_positive_integer(c) {
        return Err(Error::Pole(format!("{c}")));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for n in 0..DEFAULT_MAX_DEGREE {
        let k = n as f64;
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if term.norm() < tol * sum.norm() {
            small += 1;
            if small == 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Convergence {
        levels: DEFAULT_MAX_DEGREE,
        estimate: sum.norm(),
        error: term.norm(),
    })
}

/// `F_D^(n)` summed layer by layer in the total degree `M = m₁ + … + mₙ`.
///
/// Each layer is `(a)_M/(c)_M` times the degree-`M` coefficient of
/// `∏ᵢ Σₘ (bᵢ)ₘ xᵢᵐ/m! · zᵐ`, obtained by running convolution. Summation
/// stops once three consecutive layers are each below `tol·|partial sum|`.
pub fn fd_series(spec: &LauricellaSpec, tol: f64, max_degree: usize) -> Result<SeriesResult> {
    let radius = spec.x.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if radius >= 1.0 {
        return Err(domain(format!("series needs max |xᵢ| < 1, got {radius}")));
    }
    if is_non_positive_integer(spec.c) {
        return Err(Error::Pole(format!("{}", spec.c)));
    }
    let n = spec.len();
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);

    // terms[i][m] = (bᵢ)ₘ xᵢᵐ / m!
    let mut terms: Vec<Vec<Complex64>> = vec![vec![one]; n];
    // prefix[k][M]: degree-M coefficient of the product of the first k+1 factors
    let mut prefix: Vec<Vec<Complex64>> = vec![vec![one]; n];
    let mut ratio = one; // (a)_M / (c)_M
    let mut sum = one;
    let mut recent = [f64::INFINITY; 3];
    let mut quiet = 0;

    for m in 1..=max_degree {
        let k = (m - 1) as f64;
        ratio = ratio * (spec.a + k) / (spec.c + k);
        for ((t, &b), &x) in terms.iter_mut().zip(&spec.b).zip(&spec.x) {
            let prev = t[m - 1];
            t.push(prev * (b + k) / m as f64 * x);
        }
        prefix[0].push(terms[0][m]);
        for i in 1..n {
            let mut acc = zero;
            for j in 0..=m {
                acc += prefix[i - 1][m - j] * terms[i][j];
            }
            prefix[i].push(acc);
        }
        let layer = ratio * prefix[n - 1][m];
        sum += layer;
        recent = [recent[1], recent[2], layer.norm()];
        if layer.norm() < tol * sum.norm() {
            quiet += 1;
            if quiet == 3 {
                let tail = 1.0 / (1.0 - radius);
                return Ok(SeriesResult {
                    value: sum,
                    error_estimate: recent.iter().sum::<f64>() * tail,
                    degree: m,
                    near_boundary: radius >= 1.0 - BOUNDARY_MARGIN,
                });
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Convergence {
        levels: max_degree,
        estimate: sum.norm(),
        error: recent.iter().sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn gauss_at_zero_and_log() {
        assert_eq!(
            gauss_2f1(re(0.3), re(2.0), re(1.7), re(0.0), 1e-15).unwrap(),
            re(1.0)
        );
        // brute-force partial sums of −ln(1−x)/x = Σ xⁿ/(n+1)
        let x: f64 = 0.5;
        let oracle: f64 = (0..200).map(|n| x.powi(n) / (n + 1) as f64).sum();
        let v = gauss_2f1(re(1.0), re(1.0), re(2.0), re(x), 1e-16).unwrap();
        assert!((v.re - oracle).abs() < 1e-14);
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-14);
        assert!((v.re - 1.386_294_361_1).abs() < 1e-10);
    }

    #[test]
    fn gauss_errors() {
        assert!(gauss_2f1(re(1.0), re(1.0), re(2.0), re(1.0), 1e-12).is_err());
        assert!(matches!(
            gauss_2f1(re(1.0), re(1.0), re(-2.0), re(0.5), 1e-12),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn single_variable_matches_gauss() {
        let (a, b, c, x) = (re(0.7), re(1.3), re(2.2), Complex64::new(0.4, -0.3));
        let spec = LauricellaSpec::new(a, vec![b], c, vec![x]).unwrap();
        let fd = fd_series(&spec, 1e-16, DEFAULT_MAX_DEGREE).unwrap().value;
        let g = gauss_2f1(a, b, c, x, 1e-16).unwrap();
        assert!((fd - g).norm() < 1e-13 * g.norm());
    }

    #[test]
    fn zero_arguments_give_one() {
        let spec = LauricellaSpec::real(0.5, &[0.5, 0.5, 0.5], 2.0, &[0.0, 0.0, 0.0]).unwrap();
        let r = fd_series(&spec, 1e-15, DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(r.value, re(1.0));
    }

    #[test]
    fn two_variable_brute_force() {
        // direct double sum over m₁, m₂ < 60
        let (a, b1, b2, c, x1, x2): (f64, f64, f64, f64, f64, f64) = (0.5, 0.5, 0.5, 1.0, 0.3, 0.4);
        let mut oracle = 0.0;
        for m1 in 0..60 {
            for m2 in 0..60 {
                let t = crate::lauricella::pochhammer(re(a), m1 + m2).re
                    / crate::lauricella::pochhammer(re(c), m1 + m2).re
                    * crate::lauricella::pochhammer(re(b1), m1).re
                    * crate::lauricella::pochhammer(re(b2), m2).re
                    / (factorial(m1) * factorial(m2))
                    * x1.powi(m1 as i32)
                    * x2.powi(m2 as i32);
                oracle += t;
            }
        }
        let spec = LauricellaSpec::real(a, &[b1, b2], c, &[x1, x2]).unwrap();
        let v = fd_series(&spec, 1e-16, DEFAULT_MAX_DEGREE).unwrap().value;
        assert!((v.re - oracle).abs() < 1e-13, "{} vs {oracle}", v.re);
    }

    fn factorial(n: usize) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    #[test]
    fn domain_and_cap() {
        let spec = LauricellaSpec::real(0.5, &[0.5, 0.5], 1.0, &[0.3, -1.0]).unwrap();
        assert!(fd_series(&spec, 1e-12, 100).is_err());
        let slow = LauricellaSpec::real(0.5, &[0.5], 1.0, &[0.999]).unwrap();
        assert!(matches!(
            fd_series(&slow, 1e-15, 50),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn boundary_flag() {
        let spec = LauricellaSpec::real(0.5, &[0.5], 3.0, &[1.0 - 1e-9]).unwrap();
        let r = fd_series(&spec, 1e-6, 200_000).unwrap();
        assert!(r.near_boundary);
        assert!(r.error_estimate > 0.0);
    }
}
