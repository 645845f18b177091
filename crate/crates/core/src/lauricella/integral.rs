//! Euler-type integral representation of `F_D^(n)`.

use num_complex::Complex64;

use super::LauricellaSpec;
use crate::error::{domain, Error, Result};
use crate::gamma::inverse_beta;
use crate::quadrature::{integrate, IntegrandSpec, Point, QuadResult};

/// `tʷ` for `t ≥ 0` on the principal branch, with the limit value at `t = 0`.
fn real_power(t: f64, w: Complex64) -> Complex64 {
    if w == Complex64::new(0.0, 0.0) {
        return Complex64::new(1.0, 0.0);
    }
    if t == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    (w * t.ln()).exp()
}

/// Rejects arguments on the real cut `[1, ∞)`.
pub(crate) fn check_branch(x: &[Complex64]) -> Result<()> {
    for (i, xi) in x.iter().enumerate() {
        if xi.im == 0.0 && xi.re >= 1.0 {
            return Err(Error::Branch {
                index: i + 1,
                value: format!("{xi}"),
            });
        }
    }
    Ok(())
}

/// ```text
/// F_D = Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ u^(a−1) (1−u)^(c−a−1) ∏ (1 − xᵢu)^(−bᵢ) du
/// ```
///
/// Valid for `Re c > Re a > 0` and every `xᵢ` off the real cut `[1, ∞)`,
/// which continues the series beyond the unit polydisc. Powers take the
/// principal branch.
pub fn fd_integral(spec: &LauricellaSpec, tol: f64) -> Result<QuadResult<Complex64>> {
    let (a, c) = (spec.a, spec.c);
    if !(a.re > 0.0 && c.re > a.re) {
        return Err(domain(format!(
            "integral needs Re c > Re a > 0, got a = {a}, c = {c}"
        )));
    }
    check_branch(&spec.x)?;

    let alpha = (a.re - 1.0).min(0.0);
    let beta = (c.re - a.re - 1.0).min(0.0);
    let left = a - 1.0 - alpha;
    let right = c - a - 1.0 - beta;
    let factors: Vec<(Complex64, Complex64)> = spec
        .x
        .iter()
        .zip(&spec.b)
        .map(|(&x, &b)| (1.0 - x, -b))
        .collect();

    let f = |p: Point| {
        let u = p.x;
        let mut v = real_power(u, left) * real_power(p.from_upper, right);
        for &(gap, minus_b) in &factors {
            // 1 − xu = (1 − u) + u(1 − x)
            let base = gap * u + p.from_upper;
            v *= (minus_b * base.ln()).exp();
        }
        v
    };
    let r = integrate(
        &IntegrandSpec::new(0.0, 1.0, f).with_endpoint_exponents(alpha, beta),
        tol,
    )?;
    let norm = inverse_beta(a, c);
    Ok(QuadResult {
        value: r.value * norm,
        error_estimate: r.error_estimate * norm.norm(),
        evaluations: r.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lauricella::series::{fd_series, DEFAULT_MAX_DEGREE};

    #[test]
    fn agrees_with_series_inside_disc() {
        let spec = LauricellaSpec::real(0.5, &[0.5, 0.5, 0.5], 2.0, &[0.3, -0.4, 0.6]).unwrap();
        let s = fd_series(&spec, 1e-15, DEFAULT_MAX_DEGREE).unwrap().value;
        let i = fd_integral(&spec, 1e-12).unwrap().value;
        assert!((s - i).norm() < 1e-10 * s.norm(), "{s} vs {i}");
    }

    #[test]
    fn complex_arguments_agree_with_series() {
        let x = [Complex64::new(0.2, 0.5), Complex64::new(-0.3, -0.1)];
        let b = [Complex64::new(0.5, 0.0), Complex64::new(1.5, 0.2)];
        let spec = LauricellaSpec::new(
            Complex64::new(0.8, 0.1),
            b.to_vec(),
            Complex64::new(2.5, 0.0),
            x.to_vec(),
        )
        .unwrap();
        let s = fd_series(&spec, 1e-15, DEFAULT_MAX_DEGREE).unwrap().value;
        let i = fd_integral(&spec, 1e-12).unwrap().value;
        assert!((s - i).norm() < 1e-9 * s.norm(), "{s} vs {i}");
    }

    #[test]
    fn elementary_closed_form() {
        // F_D(1; b; 2; x) with n = 1 is 2F1(1, b; 2; x) = (1 − (1−x)^(1−b))/(x(1−b))
        let (b, x) = (0.5, -3.0);
        let expected = (1.0 - (1.0f64 - x).powf(1.0 - b)) / (x * (1.0 - b));
        let spec = LauricellaSpec::real(1.0, &[b], 2.0, &[x]).unwrap();
        let v = fd_integral(&spec, 1e-12).unwrap().value;
        assert!((v.re - expected).abs() < 1e-11 && v.im.abs() < 1e-15);
    }

    #[test]
    fn branch_and_domain_errors() {
        let on_cut = LauricellaSpec::real(0.5, &[0.5, 0.5], 2.0, &[0.2, 1.5]).unwrap();
        assert!(matches!(
            fd_integral(&on_cut, 1e-10),
            Err(Error::Branch { index: 2, .. })
        ));
        let bad = LauricellaSpec::real(2.0, &[0.5], 1.0, &[0.2]).unwrap();
        assert!(matches!(fd_integral(&bad, 1e-10), Err(Error::Domain(_))));
    }
}
