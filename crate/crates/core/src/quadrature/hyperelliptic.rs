use std::fmt;

use super::{integrate, IntegrandSpec, Point, QuadResult};
use crate::elliptic::ParamPair;
use crate::error::{domain, Result};

/// The six hyperelliptic integrals `I₁ … I₆` in the pair `(a, b)`.
///
/// ```text
/// I₁ = ∫₀^∞ dp/√(p(p²+a²)(p²+b²))     I₄ = ∫ₐ^∞ √(p/((p²−a²)(p²−b²))) dp
/// I₂ = ∫₀^∞ √(p/((p²+a²)(p²+b²))) dp   I₅ = ∫₀^b dp/√(p(p²−a²)(p²−b²))
/// I₃ = ∫ₐ^∞ dp/√(p(p²−a²)(p²−b²))     I₆ = ∫₀^b √(p/((p²−a²)(p²−b²))) dp
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hyperelliptic {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
}

impl Hyperelliptic {
    pub const ALL: [Hyperelliptic; 6] =
        [Self::I1, Self::I2, Self::I3, Self::I4, Self::I5, Self::I6];

    pub fn from_index(index: usize) -> Result<Self> {
        Self::ALL
            .get(index.wrapping_sub(1))
            .copied()
            .ok_or_else(|| domain(format!("integral index must be in 1..=6, got {index}")))
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for Hyperelliptic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{}", self.index())
    }
}

/// Direct quadrature of the defining integral.
///
/// Singular endpoints are declared to the engine; on `[0, b]` the product
/// `(p² − a²)(p² − b²)` of two negative factors is taken as
/// `(a² − p²)(b² − p²)`.
pub fn hyperelliptic_direct(
    which: Hyperelliptic,
    p: ParamPair,
    tol: f64,
) -> Result<QuadResult<f64>> {
    let (a, b) = (p.a(), p.b());
    let scale = p.geometric_mean();
    let gap = a - b;
    match which {
        Hyperelliptic::I1 => integrate(
            &IntegrandSpec::new(0.0, f64::INFINITY, |pt: Point| {
                1.0 / (pt.x.hypot(a) * pt.x.hypot(b))
            })
            .with_endpoint_exponents(-0.5, 0.0)
            .with_scale(scale),
            tol,
        ),
        Hyperelliptic::I2 => integrate(
            &IntegrandSpec::new(0.0, f64::INFINITY, |pt: Point| {
                pt.x.sqrt() / (pt.x.hypot(a) * pt.x.hypot(b))
            })
            .with_scale(scale),
            tol,
        ),
        Hyperelliptic::I3 | Hyperelliptic::I4 => {
            let numerator_p = which == Hyperelliptic::I4;
            integrate(
                &IntegrandSpec::new(a, f64::INFINITY, move |pt: Point| {
                    let x = pt.x;
                    // p² − a² = d(p + a), p − b = d + (a − b)
                    let rest = (x + a).sqrt() * (pt.from_lower + gap).sqrt() * (x + b).sqrt();
                    if numerator_p {
                        x.sqrt() / rest
                    } else {
                        1.0 / (x.sqrt() * rest)
                    }
                })
                .with_endpoint_exponents(-0.5, 0.0)
                .with_scale(scale),
                tol,
            )
        }
        Hyperelliptic::I5 | Hyperelliptic::I6 => {
            let numerator_p = which == Hyperelliptic::I6;
            let lower_exp = if numerator_p { 0.0 } else { -0.5 };
            integrate(
                &IntegrandSpec::new(0.0, b, move |pt: Point| {
                    let x = pt.x;
                    // a − p = (a − b) + (b − p)
                    let rest = ((pt.from_upper + gap) * (a + x) * (b + x)).sqrt();
                    if numerator_p {
                        x.sqrt() / rest
                    } else {
                        1.0 / rest
                    }
                })
                .with_endpoint_exponents(lower_exp, -0.5),
                tol,
            )
        }
    }
}
