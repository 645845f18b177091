//! Double-exponential quadrature with declared endpoint singularities.
//!
//! The base rule is tanh-sinh on the unit interval. A finite domain
//! `[lo, hi]` with weight `(x − lo)^α (hi − x)^β`, `α, β ∈ (−1, 0]`, is split
//! at its midpoint and each half is mapped by `x − lo = H·v^(1/(1+α))`
//! (resp. `hi − x = H·v^(1/(1+β))`), which absorbs the algebraic factor into
//! the Jacobian exactly. A semi-infinite domain `[lo, ∞)` is first mapped to
//! `[0, 1)` by `x = lo + L·s/(1 − s)`.
//!
//! Evaluators receive a [`Point`] that carries the distances to both ends of
//! the current piece, computed without cancellation, so that factors such as
//! `1 − x¹²` can be formed as `(1 − x)(1 + x + … + x¹¹)` right up to the
//! endpoint.

mod hyperelliptic;
mod legendre;

use std::f64::consts::FRAC_PI_2;
use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

pub use hyperelliptic::{hyperelliptic_direct, Hyperelliptic};
pub use legendre::{legendre_showcase, LegendreShowcase};

use crate::error::{domain, Error, Result};

/// Default tolerance for real integrands.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default tolerance for complex integrands.
pub const DEFAULT_COMPLEX_TOL: f64 = 1e-8;

/// Number of step halvings after the base level.
const MAX_LEVEL: usize = 12;
/// Levels below this are never accepted as converged.
const MIN_LEVEL: usize = 2;
const BASE_STEP: f64 = 0.5;
/// Abscissa cut-off; the node closest to an endpoint sits ~4e-62 away.
const T_MAX: f64 = 4.5;

/// Scalar types the engine can accumulate.
pub trait QuadValue:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send + Sync
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// An abscissa together with its distances to the ends of the current piece.
///
/// For a semi-infinite piece `from_upper` is `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub from_lower: f64,
    pub from_upper: f64,
}

/// Integral estimate returned by [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// An integrand over `[lower, upper]`, `upper` possibly `+∞`.
///
/// The evaluator returns the regular part of the integrand; the factor
/// `(x − lower)^α (upper − x)^β` set by
/// [`with_endpoint_exponents`](IntegrandSpec::with_endpoint_exponents) is
/// applied by the engine.
#[derive(Clone)]
pub struct IntegrandSpec<F> {
    evaluator: F,
    lower: f64,
    upper: f64,
    exponents: (f64, f64),
    scale: f64,
    breakpoints: Vec<f64>,
}

impl<F> IntegrandSpec<F> {
    pub fn new(lower: f64, upper: f64, evaluator: F) -> Self {
        Self {
            evaluator,
            lower,
            upper,
            exponents: (0.0, 0.0),
            scale: 1.0,
            breakpoints: Vec::new(),
        }
    }

    /// Declares the weight `(x − lower)^lo (upper − x)^hi`, both in `(−1, 0]`.
    pub fn with_endpoint_exponents(mut self, lo: f64, hi: f64) -> Self {
        self.exponents = (lo, hi);
        self
    }

    /// Length scale `L` of the map `x = lower + L·s/(1 − s)` on `[lower, ∞)`.
    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    /// Interior split points. Each piece is integrated separately and the
    /// evaluator's [`Point`] distances refer to the piece, not the domain.
    pub fn with_breakpoints(mut self, points: impl IntoIterator<Item = f64>) -> Self {
        self.breakpoints = points.into_iter().collect();
        self
    }

    fn validate(&self, tol: f64) -> Result<()> {
        if !(1e-14..=1e-3).contains(&tol) {
            return Err(domain(format!("tolerance {tol:e} outside [1e-14, 1e-3]")));
        }
        if !self.lower.is_finite() {
            return Err(domain("lower limit must be finite"));
        }
        if self.upper.is_nan() || self.upper <= self.lower {
            return Err(domain(format!(
                "empty or reversed domain [{}, {}]",
                self.lower, self.upper
            )));
        }
        let (lo, hi) = self.exponents;
        for e in [lo, hi] {
            if !(e > -1.0 && e <= 0.0) {
                return Err(domain(format!("endpoint exponent {e} outside (−1, 0]")));
            }
        }
        if self.upper.is_infinite() && hi != 0.0 {
            return Err(domain("no exponent can be declared at +∞"));
        }
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(domain(format!(
                "scale must be positive, got {}",
                self.scale
            )));
        }
        let mut prev = self.lower;
        for &b in &self.breakpoints {
            if !(b > prev && b < self.upper) {
                return Err(domain(format!(
                    "breakpoint {b} not increasing inside the domain"
                )));
            }
            prev = b;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Node {
    /// `1 − tanh(π/2·sinh t)`, computed without cancellation.
    gap: f64,
    weight: f64,
}

fn node_at(t: f64) -> Node {
    let y = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * y).exp();
    let gap = 2.0 * e / (1.0 + e);
    Node {
        gap,
        weight: FRAC_PI_2 * t.cosh() * gap * (2.0 - gap),
    }
}

/// Node tables per level; level 0 holds `t = j·h₀, j ≥ 1`, level `k` the odd
/// multiples of `h₀/2ᵏ`. Built once and shared.
fn node_levels() -> &'static [Vec<Node>] {
    static LEVELS: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    LEVELS.get_or_init(|| {
        let mut levels = Vec::with_capacity(MAX_LEVEL + 1);
        let base: Vec<Node> = (1..)
            .map(|j| j as f64 * BASE_STEP)
            .take_while(|&t| t <= T_MAX)
            .map(node_at)
            .collect();
        levels.push(base);
        for k in 1..=MAX_LEVEL {
            let h = BASE_STEP / (1u64 << k) as f64;
            let nodes = (0..)
                .map(|j| (2 * j + 1) as f64 * h)
                .take_while(|&t| t <= T_MAX)
                .map(node_at)
                .collect();
            levels.push(nodes);
        }
        levels
    })
}

struct Partial<T> {
    value: T,
    error: f64,
    evaluations: usize,
    converged: bool,
}

/// Tanh-sinh on `[0, 1]`. The closure receives `(v, 1 − v)`.
fn unit_tanh_sinh<T, G>(g: G, tol: f64) -> Result<Partial<T>>
where
    T: QuadValue,
    G: Fn(f64, f64) -> T,
{
    let levels = node_levels();
    let eval = |v: f64, w: f64| -> Result<T> {
        let y = g(v, w);
        if y.magnitude().is_finite() {
            Ok(y)
        } else {
            Err(domain(format!(
                "integrand is not finite at unit abscissa {v:e}"
            )))
        }
    };

    let mut sum = eval(0.5, 0.5)? * FRAC_PI_2;
    let mut l1 = sum.magnitude();
    let mut evaluations = 1usize;
    let mut h = BASE_STEP;
    let mut previous: Option<T> = None;
    let mut last_diff = f64::INFINITY;

    for (level, nodes) in levels.iter().enumerate() {
        if level > 0 {
            h *= 0.5;
        }
        for node in nodes {
            let half_gap = 0.5 * node.gap;
            let right = eval(1.0 - half_gap, half_gap)?;
            let left = eval(half_gap, 1.0 - half_gap)?;
            sum = sum + (right + left) * node.weight;
            l1 += node.weight * (right.magnitude() + left.magnitude());
        }
        evaluations += 2 * nodes.len();
        let estimate = sum * (0.5 * h);
        let roundoff = 16.0 * f64::EPSILON * l1 * 0.5 * h;
        if let Some(prev) = previous {
            last_diff = (estimate - prev).magnitude();
            if level >= MIN_LEVEL
                && (last_diff <= tol * estimate.magnitude() || last_diff <= roundoff)
            {
                return Ok(Partial {
                    value: estimate,
                    error: last_diff + roundoff,
                    evaluations,
                    converged: true,
                });
            }
        }
        previous = Some(estimate);
    }
    Ok(Partial {
        value: previous.unwrap_or_else(T::zero),
        error: last_diff,
        evaluations,
        converged: false,
    })
}

/// Finite piece with weight `(x − lo)^α (hi − x)^β`.
fn finite_piece<T, F>(
    f: &F,
    lo: f64,
    hi: f64,
    alpha: f64,
    beta: f64,
    tol: f64,
) -> Result<Partial<T>>
where
    T: QuadValue,
    F: Fn(Point) -> T,
{
    let width = hi - lo;
    if alpha == 0.0 && beta == 0.0 {
        let part = unit_tanh_sinh(
            |v, w| {
                f(Point {
                    x: lo + width * v,
                    from_lower: width * v,
                    from_upper: width * w,
                })
            },
            tol,
        )?;
        return Ok(Partial {
            value: part.value * width,
            error: part.error * width,
            ..part
        });
    }

    let half = 0.5 * width;
    // left half: x − lo = H·v^(1/(1+α))
    let left = {
        let p = 1.0 / (1.0 + alpha);
        let jac = half.powf(1.0 + alpha) * p;
        let part = unit_tanh_sinh(
            |v, _| {
                let d = half * v.powf(p);
                let up = width - d;
                f(Point {
                    x: lo + d,
                    from_lower: d,
                    from_upper: up,
                }) * up.powf(beta)
            },
            tol,
        )?;
        Partial {
            value: part.value * jac,
            error: part.error * jac,
            ..part
        }
    };
    let right = {
        let p = 1.0 / (1.0 + beta);
        let jac = half.powf(1.0 + beta) * p;
        let part = unit_tanh_sinh(
            |v, _| {
                let d = half * v.powf(p);
                let down = width - d;
                f(Point {
                    x: hi - d,
                    from_lower: down,
                    from_upper: d,
                }) * down.powf(alpha)
            },
            tol,
        )?;
        Partial {
            value: part.value * jac,
            error: part.error * jac,
            ..part
        }
    };
    Ok(combine(left, right))
}

/// `[lo, ∞)` with weight `(x − lo)^α`, mapped by `x − lo = L·s/(1 − s)`.
fn infinite_piece<T, F>(f: &F, lo: f64, alpha: f64, scale: f64, tol: f64) -> Result<Partial<T>>
where
    T: QuadValue,
    F: Fn(Point) -> T,
{
    // (x − lo)^α dx = L^(1+α) s^α (1 − s)^(−2−α) ds
    let jac = scale.powf(1.0 + alpha);
    let mapped = |pt: Point| {
        let s = pt.from_lower;
        let rest = pt.from_upper;
        let d = scale * s / rest;
        f(Point {
            x: lo + d,
            from_lower: d,
            from_upper: f64::INFINITY,
        }) * rest.powf(-2.0 - alpha)
    };
    let part = finite_piece(&mapped, 0.0, 1.0, alpha, 0.0, tol)?;
    Ok(Partial {
        value: part.value * jac,
        error: part.error * jac,
        ..part
    })
}

fn combine<T: QuadValue>(a: Partial<T>, b: Partial<T>) -> Partial<T> {
    Partial {
        value: a.value + b.value,
        error: a.error + b.error,
        evaluations: a.evaluations + b.evaluations,
        converged: a.converged && b.converged,
    }
}

/// Integrates `spec` to relative tolerance `tol ∈ [1e-14, 1e-3]`.
///
/// Fails with [`Error::Convergence`] (carrying the best estimate) if any
/// piece has not converged after the maximum number of step halvings.
pub fn integrate<T, F>(spec: &IntegrandSpec<F>, tol: f64) -> Result<QuadResult<T>>
where
    T: QuadValue,
    F: Fn(Point) -> T,
{
    spec.validate(tol)?;
    let f = &spec.evaluator;
    let mut edges = Vec::with_capacity(spec.breakpoints.len() + 2);
    edges.push(spec.lower);
    edges.extend_from_slice(&spec.breakpoints);
    edges.push(spec.upper);
    let pieces = edges.len() - 1;

    let mut total: Option<Partial<T>> = None;
    let (ga, gb) = spec.exponents;
    for (i, w) in edges.windows(2).enumerate() {
        let (first, last) = (i == 0, i == pieces - 1);
        let alpha = if first { ga } else { 0.0 };
        let beta = if last { gb } else { 0.0 };
        // distances and weights relative to the whole domain, not the piece
        let g = |p: Point| {
            let from_lower = if first {
                p.from_lower
            } else {
                p.x - spec.lower
            };
            let from_upper = if last { p.from_upper } else { spec.upper - p.x };
            let mut weight = 1.0;
            if !first && ga != 0.0 {
                weight *= from_lower.powf(ga);
            }
            if !last && gb != 0.0 {
                weight *= from_upper.powf(gb);
            }
            f(Point {
                x: p.x,
                from_lower,
                from_upper,
            }) * weight
        };
        let part = if w[1].is_infinite() {
            infinite_piece(&g, w[0], alpha, spec.scale, tol)?
        } else {
            finite_piece(&g, w[0], w[1], alpha, beta, tol)?
        };
        total = Some(match total {
            None => part,
            Some(acc) => combine(acc, part),
        });
    }
    let total = total.expect("at least one piece");
    if !total.converged {
        return Err(Error::Convergence {
            levels: MAX_LEVEL,
            estimate: total.value.magnitude(),
            error: total.error,
        });
    }
    Ok(QuadResult {
        value: total.value,
        error_estimate: total.error,
        evaluations: total.evaluations,
    })
}

/// Integrates a plain real function of `x` over `[lower, upper]`.
pub fn integrate_fn(
    f: impl Fn(f64) -> f64,
    lower: f64,
    upper: f64,
    tol: f64,
) -> Result<QuadResult<f64>> {
    integrate(&IntegrandSpec::new(lower, upper, |p: Point| f(p.x)), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::complete_k_of;
    use std::f64::consts::PI;

    #[test]
    fn arcsine_with_declared_singularity() {
        // ∫₀¹ du/√(1−u²) = (1−u)^(−1/2) · 1/√(1+u)
        let spec = IntegrandSpec::new(0.0, 1.0, |p: Point| 1.0 / (1.0 + p.x).sqrt())
            .with_endpoint_exponents(0.0, -0.5);
        let r: QuadResult<f64> = integrate(&spec, 1e-12).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-12);
        assert!(r.error_estimate >= 0.0 && r.evaluations >= 1);
    }

    #[test]
    fn arcsine_undeclared_uses_gap() {
        let spec = IntegrandSpec::new(0.0, 1.0, |p: Point| {
            1.0 / (p.from_upper * (1.0 + p.x)).sqrt()
        });
        let r: QuadResult<f64> = integrate(&spec, 1e-12).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn semi_infinite_rational() {
        // ∫₀^∞ dx/(1+x²) = π/2
        let r = integrate(
            &IntegrandSpec::new(0.0, f64::INFINITY, |p: Point| 1.0 / (1.0 + p.x * p.x)),
            1e-12,
        )
        .unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-13);
        // ∫₀^∞ x^(−1/2)/(1+x) dx = π
        let spec = IntegrandSpec::new(0.0, f64::INFINITY, |p: Point| 1.0 / (1.0 + p.x))
            .with_endpoint_exponents(-0.5, 0.0);
        let r: QuadResult<f64> = integrate(&spec, 1e-12).unwrap();
        assert!((r.value - PI).abs() < 1e-12);
    }

    #[test]
    fn complete_k_against_quadrature() {
        for k in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let spec = IntegrandSpec::new(0.0, 1.0, move |p: Point| {
                1.0 / ((1.0 + p.x) * (1.0 - k * k * p.x * p.x)).sqrt()
            })
            .with_endpoint_exponents(0.0, -0.5);
            let q: QuadResult<f64> = integrate(&spec, 1e-13).unwrap();
            let kk = complete_k_of(k).unwrap();
            assert!(
                ((q.value - kk) / kk).abs() < 1e-12,
                "k={k}: {} vs {kk}",
                q.value
            );
        }
    }

    #[test]
    fn strong_endpoint_singularity() {
        // ∫₀¹ x^(−0.95)(1−x)^(−0.9) dx = B(0.05, 0.1)
        let spec =
            IntegrandSpec::new(0.0, 1.0, |_p: Point| 1.0).with_endpoint_exponents(-0.95, -0.9);
        let r: QuadResult<f64> = integrate(&spec, 1e-12).unwrap();
        let exact =
            crate::gamma::gamma(0.05) * crate::gamma::gamma(0.1) / crate::gamma::gamma(0.15);
        assert!(((r.value - exact) / exact).abs() < 1e-11);
    }

    #[test]
    fn breakpoints_split_domain() {
        let f = |p: Point| (p.x).exp();
        let whole: QuadResult<f64> = integrate(&IntegrandSpec::new(0.0, 2.0, f), 1e-12).unwrap();
        let split: QuadResult<f64> = integrate(
            &IntegrandSpec::new(0.0, 2.0, f).with_breakpoints([0.5, 1.3]),
            1e-12,
        )
        .unwrap();
        assert!((whole.value - split.value).abs() < 1e-13);
        assert!((whole.value - (2f64.exp() - 1.0)).abs() < 1e-13);
    }

    #[test]
    fn breakpoints_keep_declared_weights() {
        // ∫₀¹ x^(−0.3)(1−x)^(−0.6) dx = B(0.7, 0.4), split twice
        let spec = IntegrandSpec::new(0.0, 1.0, |p: Point| {
            assert!(p.from_lower > 0.0 && (p.from_lower - p.x).abs() < 1e-15);
            1.0
        })
        .with_endpoint_exponents(-0.3, -0.6)
        .with_breakpoints([0.2, 0.75]);
        let r: QuadResult<f64> = integrate(&spec, 1e-12).unwrap();
        let exact = crate::gamma::gamma(0.7) * crate::gamma::gamma(0.4) / crate::gamma::gamma(1.1);
        assert!(
            ((r.value - exact) / exact).abs() < 1e-12,
            "{} vs {exact}",
            r.value
        );
    }

    #[test]
    fn complex_integrand() {
        // ∫₀¹ e^(iπx) dx = 2i/π
        let r: QuadResult<Complex64> = integrate(
            &IntegrandSpec::new(0.0, 1.0, |p: Point| Complex64::new(0.0, PI * p.x).exp()),
            1e-10,
        )
        .unwrap();
        assert!((r.value - Complex64::new(0.0, 2.0 / PI)).norm() < 1e-13);
    }

    #[test]
    fn rejects_bad_specs() {
        let f = |p: Point| p.x;
        assert!(integrate::<f64, _>(&IntegrandSpec::new(0.0, 1.0, f), 1e-16).is_err());
        assert!(integrate::<f64, _>(&IntegrandSpec::new(0.0, 1.0, f), 1e-2).is_err());
        assert!(integrate::<f64, _>(&IntegrandSpec::new(1.0, 0.0, f), 1e-8).is_err());
        assert!(integrate::<f64, _>(
            &IntegrandSpec::new(0.0, 1.0, f).with_endpoint_exponents(-1.0, 0.0),
            1e-8
        )
        .is_err());
        assert!(integrate::<f64, _>(
            &IntegrandSpec::new(0.0, f64::INFINITY, f).with_endpoint_exponents(0.0, -0.5),
            1e-8
        )
        .is_err());
    }

    #[test]
    fn non_convergence_reports_best_estimate() {
        // discontinuous integrand without a declared breakpoint
        let spec = IntegrandSpec::new(0.0, 1.0, |p: Point| if p.x < 0.3 { 0.0 } else { 1.0 });
        match integrate::<f64, _>(&spec, 1e-14) {
            Err(Error::Convergence { estimate, .. }) => assert!((estimate - 0.7).abs() < 1e-3),
            other => panic!("expected convergence error, got {other:?}"),
        }
    }
}
