//! The classical sextic integral `𝕏 = ∫₀¹ x²/√(1 − x¹²) dx` by four routes,
//! and the modular identities it produces.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use super::{hyperelliptic_direct, integrate, Hyperelliptic, IntegrandSpec, Point, QuadResult};
use crate::elliptic::{complete_k, Modulus, ParamPair};
use crate::error::Result;
use crate::gamma::gamma;

/// Both sides of an identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
}

impl Sides {
    pub fn relative_error(&self) -> f64 {
        ((self.lhs - self.rhs) / self.rhs).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LegendreShowcase {
    /// `∫₀¹ x²/√(1 − x¹²) dx` by quadrature.
    pub x_direct: f64,
    /// `K(1/√2) / (3√2)`.
    pub x_lemniscatic: f64,
    /// `(1/3) ∫₀¹ du/√(1 − u⁴)`.
    pub x_quartic: f64,
    /// `(1/2) ∫₀^∞ dp/√(p(p² + 3)(p² + 4))`, i.e. `I₁(2, √3)/2`.
    pub x_hyperelliptic: f64,
    /// `Γ²(1/4) / (12√(2π))`.
    pub x_gamma: f64,
    /// `K((√2 − ∜3)/(1 + √3))` against `√2/(∜27(√3 − 1))·K(1/√2)`.
    pub modular_minus: Sides,
    /// `K((√2 + ∜3)/(1 + √3))` against `√(3 + 2√3)·K(1/√2)`.
    pub modular_plus: Sides,
    /// `∫₀^∞ z²/√(1 + z¹²) dz` against `I₃(2, √3)/2`. The left side is
    /// twice the right one; see [`sextic_third_unit`](Self::sextic_third_unit).
    pub sextic_third: Sides,
    /// `∫₀^∞ (1 + z⁴)/√(1 + z¹²) dz` against `I₄(2, √3)/2`, off by the same
    /// factor two.
    pub sextic_fourth: Sides,
    /// `∫₀¹ z²/√(1 + z¹²) dz` against `I₃(2, √3)/2`. The integrand is
    /// symmetric under `z → 1/z` (with `dz/z²`), so `∫₀¹` is half of `∫₀^∞`.
    pub sextic_third_unit: Sides,
    /// `∫₀¹ (1 + z⁴)/√(1 + z¹²) dz` against `I₄(2, √3)/2`.
    pub sextic_fourth_unit: Sides,
}

impl LegendreShowcase {
    /// The five evaluations of `𝕏` with their names.
    pub fn x_routes(&self) -> [(&'static str, f64); 5] {
        [
            ("direct", self.x_direct),
            ("lemniscatic", self.x_lemniscatic),
            ("quartic", self.x_quartic),
            ("hyperelliptic", self.x_hyperelliptic),
            ("gamma", self.x_gamma),
        ]
    }

    pub fn identities(&self) -> [(&'static str, Sides); 6] {
        [
            ("modular_minus", self.modular_minus),
            ("modular_plus", self.modular_plus),
            ("sextic_third", self.sextic_third),
            ("sextic_fourth", self.sextic_fourth),
            ("sextic_third_unit", self.sextic_third_unit),
            ("sextic_fourth_unit", self.sextic_fourth_unit),
        ]
    }
}

fn value(r: QuadResult<f64>) -> f64 {
    r.value
}

/// Evaluates every route and both sides of each identity.
pub fn legendre_showcase(tol: f64) -> Result<LegendreShowcase> {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let q3 = 3f64.powf(0.25);

    // 1 − x¹² = (1 − x)·Σ xʲ, j = 0..11
    let x_direct = value(integrate(
        &IntegrandSpec::new(0.0, 1.0, |p: Point| {
            let x = p.x;
            let poly = (0..12).fold(0.0, |acc, _| acc * x + 1.0);
            x * x / poly.sqrt()
        })
        .with_endpoint_exponents(0.0, -0.5),
        tol,
    )?);

    let k_lemniscatic = complete_k(Modulus::new(FRAC_1_SQRT_2)?);
    let x_lemniscatic = k_lemniscatic / (3.0 * s2);

    // 1 − u⁴ = (1 − u)(1 + u)(1 + u²)
    let x_quartic = value(integrate(
        &IntegrandSpec::new(0.0, 1.0, |p: Point| {
            1.0 / ((1.0 + p.x) * (1.0 + p.x * p.x)).sqrt()
        })
        .with_endpoint_exponents(0.0, -0.5),
        tol,
    )?) / 3.0;

    let legendre_pair = ParamPair::new(2.0, s3)?;
    let x_hyperelliptic = 0.5 * hyperelliptic_direct(Hyperelliptic::I1, legendre_pair, tol)?.value;

    let g = gamma(0.25);
    let x_gamma = g * g / (12.0 * (2.0 * PI).sqrt());

    // (√2 ∓ ∜3)/(1 + √3) are complementary: their squares sum to one.
    let k_small = (s2 - q3) / (1.0 + s3);
    let k_large = (s2 + q3) / (1.0 + s3);
    let small = Modulus::with_complement(k_small, k_large)?;
    let large = Modulus::with_complement(k_large, k_small)?;
    let modular_minus = Sides {
        lhs: complete_k(small),
        rhs: s2 / (27f64.powf(0.25) * (s3 - 1.0)) * k_lemniscatic,
    };
    let modular_plus = Sides {
        lhs: complete_k(large),
        rhs: (3.0 + 2.0 * s3).sqrt() * k_lemniscatic,
    };

    let sextic = |numerator: fn(f64) -> f64, upper: f64| {
        integrate(
            &IntegrandSpec::new(0.0, upper, move |p: Point| {
                let z = p.x;
                // √(1 + z¹²) = z⁶·√(1 + z⁻¹²) for large z
                let root = if z > 1.0 {
                    z.powi(6) * (1.0 + z.powi(-12)).sqrt()
                } else {
                    (1.0 + z.powi(12)).sqrt()
                };
                numerator(z) / root
            }),
            tol,
        )
        .map(value)
    };
    let third: fn(f64) -> f64 = |z| z * z;
    let fourth: fn(f64) -> f64 = |z| 1.0 + z.powi(4);
    let half_i3 = 0.5 * hyperelliptic_direct(Hyperelliptic::I3, legendre_pair, tol)?.value;
    let half_i4 = 0.5 * hyperelliptic_direct(Hyperelliptic::I4, legendre_pair, tol)?.value;
    let sextic_third = Sides {
        lhs: sextic(third, f64::INFINITY)?,
        rhs: half_i3,
    };
    let sextic_fourth = Sides {
        lhs: sextic(fourth, f64::INFINITY)?,
        rhs: half_i4,
    };
    let sextic_third_unit = Sides {
        lhs: sextic(third, 1.0)?,
        rhs: half_i3,
    };
    let sextic_fourth_unit = Sides {
        lhs: sextic(fourth, 1.0)?,
        rhs: half_i4,
    };

    Ok(LegendreShowcase {
        x_direct,
        x_lemniscatic,
        x_quartic,
        x_hyperelliptic,
        x_gamma,
        modular_minus,
        modular_plus,
        sextic_third,
        sextic_fourth,
        sextic_third_unit,
        sextic_fourth_unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree() {
        let s = legendre_showcase(1e-12).unwrap();
        let routes = s.x_routes();
        for (name, v) in &routes {
            let rel = ((v - s.x_gamma) / s.x_gamma).abs();
            assert!(rel < 1e-10, "{name}: {v} vs {}", s.x_gamma);
        }
        assert!(s.modular_minus.relative_error() < 1e-11);
        assert!(s.modular_plus.relative_error() < 1e-11);
        assert!(s.sextic_third_unit.relative_error() < 1e-9);
        assert!(s.sextic_fourth_unit.relative_error() < 1e-9);
        // the half-line forms are exactly twice the right-hand sides
        assert!((s.sextic_third.lhs / s.sextic_third.rhs - 2.0).abs() < 1e-9);
        assert!((s.sextic_fourth.lhs / s.sextic_fourth.rhs - 2.0).abs() < 1e-9);
    }
}
