//! Reduction of `I₁ … I₆` to complete elliptic integrals.
//!
//! The substitution `u = p + ab/p` folds `[0, √(ab)]` and `[√(ab), ∞)` onto
//! `[2√(ab), ∞)`. The intermediate u-integrals are evaluated verbatim by
//! quadrature ([`reduced_u_form`]) and the final closed forms
//! ([`elliptic_closed`]) use `K± = K((√a ± √b)/√(2(a+b)))`.

use crate::elliptic::{modulus_pair, ParamPair};
use crate::error::Result;
use crate::quadrature::{integrate, Hyperelliptic, IntegrandSpec, Point};

/// The u-domain integral of the reduction lemma, by quadrature.
///
/// ```text
/// I₁ = 1/√(ab) ∫_{2√(ab)}^∞ du/√((u − 2√(ab))(u² + (a−b)²))
/// I₂ =         ∫_{2√(ab)}^∞ du/√((u − 2√(ab))(u² + (a−b)²))
/// I₃ = 1/(2√(ab)) ∫_{a+b}^∞ (u² − (a+b)²)^(−1/2) [(u − 2√(ab))^(−1/2) − (u + 2√(ab))^(−1/2)] du
/// I₄ = 1/2        ∫_{a+b}^∞ (u² − (a+b)²)^(−1/2) [(u − 2√(ab))^(−1/2) + (u + 2√(ab))^(−1/2)] du
/// I₅ = 1/(2√(ab)) ∫_{a+b}^∞ (u² − (a+b)²)^(−1/2) [(u − 2√(ab))^(−1/2) + (u + 2√(ab))^(−1/2)] du
/// I₆ = 1/2        ∫_{a+b}^∞ (u² − (a+b)²)^(−1/2) [(u − 2√(ab))^(−1/2) − (u + 2√(ab))^(−1/2)] du
/// ```
pub fn reduced_u_form(which: Hyperelliptic, p: ParamPair, tol: f64) -> Result<f64> {
    let (a, b) = (p.a(), p.b());
    let gm = p.geometric_mean();
    let fold = 2.0 * gm;
    let diff = a - b;
    let sum = a + b;

    match which {
        Hyperelliptic::I1 | Hyperelliptic::I2 => {
            let v = integrate(
                &IntegrandSpec::new(fold, f64::INFINITY, |pt: Point| 1.0 / pt.x.hypot(diff))
                    .with_endpoint_exponents(-0.5, 0.0)
                    .with_scale(sum),
                tol,
            )?
            .value;
            Ok(if which == Hyperelliptic::I1 {
                v / gm
            } else {
                v
            })
        }
        _ => {
            let sign = match which {
                Hyperelliptic::I3 | Hyperelliptic::I6 => -1.0,
                _ => 1.0,
            };
            // u − (a+b) is the distance to the lower limit; a + b > 2√(ab)
            let lift = sum - fold;
            let v = integrate(
                &IntegrandSpec::new(sum, f64::INFINITY, move |pt: Point| {
                    let u = pt.x;
                    let near = 1.0 / (pt.from_lower + lift).sqrt();
                    let far = 1.0 / (u + fold).sqrt();
                    (near + sign * far) / (u + sum).sqrt()
                })
                .with_endpoint_exponents(-0.5, 0.0)
                .with_scale(sum),
                tol,
            )?
            .value;
            Ok(match which {
                Hyperelliptic::I3 | Hyperelliptic::I5 => v / (2.0 * gm),
                _ => 0.5 * v,
            })
        }
    }
}

/// Closed forms in `K±`:
///
/// ```text
/// I₁ = 2K₋/√(ab(a+b))          I₄ = (K₊ + K₋)/√(2(a+b))
/// I₂ = 2K₋/√(a+b)              I₅ = (K₊ + K₋)/√(2ab(a+b))
/// I₃ = (K₊ − K₋)/√(2ab(a+b))   I₆ = (K₊ − K₋)/√(2(a+b))
/// ```
pub fn elliptic_closed(which: Hyperelliptic, p: ParamPair) -> f64 {
    let e = modulus_pair(p);
    let (a, b) = (p.a(), p.b());
    let ab = a * b;
    let s = a + b;
    match which {
        Hyperelliptic::I1 => 2.0 * e.big_k_minus / (ab * s).sqrt(),
        Hyperelliptic::I2 => 2.0 * e.big_k_minus / s.sqrt(),
        Hyperelliptic::I3 => e.difference() / (2.0 * ab * s).sqrt(),
        Hyperelliptic::I4 => e.sum() / (2.0 * s).sqrt(),
        Hyperelliptic::I5 => e.sum() / (2.0 * ab * s).sqrt(),
        Hyperelliptic::I6 => e.difference() / (2.0 * s).sqrt(),
    }
}
