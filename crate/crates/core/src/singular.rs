//! Singular moduli `λ*(n)`, the root of `K'(k)/K(k) = √n`, and the
//! `F_D^(3)` identities they generate.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::elliptic::{complete_k, modulus_pair, Modulus, ParamPair};
use crate::error::{domain, Error, Result};
use crate::lauricella::{h_eval, HFamily};

/// Orders with a closed-form entry.
pub const TABULATED_ORDERS: [u32; 8] = [3, 5, 7, 9, 13, 15, 25, 33];

/// `K'(k)/K(k)` at `k = sin θ`.
fn period_ratio(theta: f64) -> f64 {
    let m = Modulus::from_angle(theta).expect("angle inside (0, π/2)");
    let prime = m.complementary().expect("angle is positive");
    complete_k(prime) / complete_k(m)
}

/// Solves `K'(k)/K(k) = √n` by bisection on the modular angle.
///
/// `K'/K` falls strictly from `+∞` to `0` as `θ` runs over `(0, π/2)`.
/// Bisection stops when the bracket is narrower than `tol` (in radians) or
/// cannot shrink further.
pub fn lambda_solver(n: f64, tol: f64) -> Result<Modulus> {
    if !(n.is_finite() && n > 0.0) {
        return Err(domain(format!("order must be positive, got {n}")));
    }
    let target = n.sqrt();
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= tol {
            break;
        }
        if period_ratio(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Modulus::from_angle(0.5 * (lo + hi))
}

/// A tabulated singular modulus and the ratio `a/b` with `k₋ = λ*(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularEntry {
    pub n: u32,
    pub lambda_closed: f64,
    pub ab_ratio: f64,
}

impl SingularEntry {
    /// The pair `(ratio·β, β)`.
    pub fn pair(&self, beta: f64) -> Result<ParamPair> {
        ParamPair::new(self.ab_ratio * beta, beta)
    }
}

/// Closed forms of `λ*(n)` and `a/b`.
pub fn lambda_closed(n: u32) -> Result<SingularEntry> {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let s7 = 7f64.sqrt();
    let s11 = 11f64.sqrt();
    let s13 = 13f64.sqrt();
    let s33 = 33f64.sqrt();
    let (lambda, ratio) = match n {
        3 => ((s3 - 1.0) / (2.0 * s2), 3.0),
        5 => (
            0.5 * ((s5 - 1.0).sqrt() - (3.0 - s5).sqrt()),
            0.5 * (1.0 + s5),
        ),
        7 => ((3.0 - s7) / (4.0 * s2), 9.0 / 7.0),
        9 => (0.5 * (s2 - 3f64.powf(0.25)) * (s3 - 1.0), 2.0 / s3),
        13 => (
            0.5 * ((5.0 * s13 - 17.0).sqrt() - (19.0 - 5.0 * s13).sqrt()),
            (1.0 + 5.0 * s13) / 18.0,
        ),
        15 => (
            (2.0 - s3) * (3.0 - s5) * (s5 - s3) / (8.0 * s2),
            (21.0 - 8.0 * s5) / 3.0,
        ),
        25 => (
            (3.0 - 2.0 * 5f64.powf(0.25)) * (s5 - 2.0) / s2,
            9.0 / (4.0 * s5),
        ),
        33 => (
            0.5 * ((261.0 - 150.0 * s3 - 78.0 * s11 + 45.0 * s33).sqrt()
                - (-259.0 + 150.0 * s3 + 78.0 * s11 - 45.0 * s33).sqrt()),
            3.0 / 16.0 * (5.0 * s3 - s11),
        ),
        _ => return Err(Error::NotFound(format!("no closed form for order {n}"))),
    };
    Ok(SingularEntry {
        n,
        lambda_closed: lambda,
        ab_ratio: ratio,
    })
}

/// `k = (θ₂(q)/θ₃(q))²` with nome `q = e^(−π√n)`.
///
/// The complement comes from `k' = (θ₄(q)/θ₃(q))²`. Series terms are
/// dropped once they fall below `cutoff`.
pub fn theta_modulus(n: f64, cutoff: f64) -> Result<Modulus> {
    if !(n.is_finite() && n > 0.0) {
        return Err(domain(format!("order must be positive, got {n}")));
    }
    let q = (-PI * n.sqrt()).exp();
    let (mut t2, mut t3, mut t4) = (0.0, 1.0, 1.0);
    for m in 0.. {
        let half = m as f64 + 0.5;
        let a = q.powf(half * half);
        let whole = (m + 1) as f64;
        let b = q.powf(whole * whole);
        t2 += 2.0 * a;
        t3 += 2.0 * b;
        t4 += if m % 2 == 0 { -2.0 * b } else { 2.0 * b };
        if a < cutoff && b < cutoff {
            break;
        }
    }
    let k = (t2 / t3).powi(2);
    let kc = (t4 / t3).powi(2);
    Modulus::with_complement(k, kc).or_else(|_| Modulus::new(k))
}

/// `K₊/K₋` three ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioCheck {
    pub direct: f64,
    /// From `H₁` and `G` at `(½, b/(a+b), b/(b−a))`.
    pub via_quozi: f64,
    /// From `G` and `H₂` at `(−1, b/a, −b/a)`.
    pub via_quozi2: f64,
}

impl RatioCheck {
    /// Largest relative gap between the Lauricella routes and the direct one.
    pub fn spread(&self) -> f64 {
        let rel = |v: f64| ((v - self.direct) / self.direct).abs();
        rel(self.via_quozi).max(rel(self.via_quozi2))
    }
}

/// ```text
/// K₊/K₋ = (√b/2·H₁ + √a·G) / (√a·G − √b/2·H₁)
///       = (2√(a(a+b))·G + √(b(a+b))·H₂) / (2√(a(a+b))·G − √(b(a+b))·H₂)
/// ```
pub fn ratio_check(p: ParamPair, tol: f64) -> Result<RatioCheck> {
    let (a, b) = (p.a(), p.b());
    let direct = modulus_pair(p).ratio();

    let (x, y, z) = (0.5, b / (a + b), b / (b - a));
    let h1 = h_eval(HFamily::H1, x, y, z, tol)?;
    let g = h_eval(HFamily::G, x, y, z, tol)?;
    let (sa, hb) = (a.sqrt(), 0.5 * b.sqrt());
    let via_quozi = (hb * h1 + sa * g) / (sa * g - hb * h1);

    let (x, y, z) = (-1.0, b / a, -b / a);
    let g = h_eval(HFamily::G, x, y, z, tol)?;
    let h2 = h_eval(HFamily::H2, x, y, z, tol)?;
    let u = 2.0 * (a * (a + b)).sqrt() * g;
    let v = (b * (a + b)).sqrt() * h2;
    let via_quozi2 = (u + v) / (u - v);

    Ok(RatioCheck {
        direct,
        via_quozi,
        via_quozi2,
    })
}

/// One identity `H(x, y, z) = R·G(x, y, z)` as transcribed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCase {
    pub order: u32,
    pub family: HFamily,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub r: f64,
}

/// Every tabulated identity, `H₁` cases first, by ascending order.
pub fn identity_cases() -> Vec<IdentityCase> {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s5 = 5f64.sqrt();
    let s7 = 7f64.sqrt();
    let s11 = 11f64.sqrt();
    let s13 = 13f64.sqrt();
    let s15 = 15f64.sqrt();
    let s33 = 33f64.sqrt();
    let r_of = |order: u32| match order {
        3 => 2.0 * s3 * (2.0 - s3),
        5 => 2.0 * (s5 - 2.0).sqrt(),
        7 => 2.0 * (4.0 - s7) / s7,
        9 => s2 / 3f64.powf(0.25),
        13 => 2.0 * (37.0 * s13 - 106.0).sqrt() / 9.0,
        15 => 2.0 * (s3 - 3.0 * s5) * (s5 - 4.0) / (3.0 * (1.0 + s15)),
        25 => 2.0 / 5f64.powf(0.25),
        33 => s3 * (17.0 - s33) * (43.0 - 5.0 * s33).powf(0.25) / 2f64.powf(19.0 / 4.0),
        _ => unreachable!("orders are fixed below"),
    };
    let first = [
        (3, 0.25, -0.5),
        (5, (3.0 - s5) / 2.0, -(1.0 + s5) / 2.0),
        (7, 7.0 / 16.0, -3.5),
        (9, 2.0 * s3 - 3.0, -(2.0 * s3 + 3.0)),
        (13, (19.0 - 5.0 * s13) / 2.0, -(17.0 + 5.0 * s13) / 2.0),
        (15, 3.0 / 32.0 * (3.0 + s5), -1.5 * (9.0 + 4.0 * s5)),
        (25, 4.0 * (9.0 * s5 - 20.0), -4.0 * (20.0 + 9.0 * s5)),
        (
            33,
            16.0 / (16.0 + 15.0 * s3 - 3.0 * s11),
            16.0 / (16.0 - 15.0 * s3 + 3.0 * s11),
        ),
    ];
    let second = [
        (3, 1.0 / 3.0),
        (5, (s5 - 1.0) / 2.0),
        (7, 7.0 / 9.0),
        (9, s3 / 2.0),
        (13, (5.0 * s13 - 1.0) / 18.0),
        (15, 3.0 / 121.0 * (21.0 + 8.0 * s5)),
        (25, 4.0 * s5 / 9.0),
        (33, 16.0 / (15.0 * s3 - 3.0 * s11)),
    ];
    let mut cases: Vec<IdentityCase> = first
        .iter()
        .map(|&(order, y, z)| IdentityCase {
            order,
            family: HFamily::H1,
            x: 0.5,
            y,
            z,
            r: r_of(order),
        })
        .collect();
    cases.extend(second.iter().map(|&(order, y)| IdentityCase {
        order,
        family: HFamily::H2,
        x: -1.0,
        y,
        z: -y,
        r: r_of(order),
    }));
    cases
}

/// Looks up the case for an order and family (`H1` or `H2`).
pub fn identity_case(order: u32, family: HFamily) -> Result<IdentityCase> {
    identity_cases()
        .into_iter()
        .find(|c| c.order == order && c.family == family)
        .ok_or_else(|| Error::NotFound(format!("no {family} identity of order {order}")))
}

/// Both sides of one identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityOutcome {
    pub case: IdentityCase,
    /// `H(x, y, z)`.
    pub lhs: f64,
    /// `R·G(x, y, z)`.
    pub rhs: f64,
    /// `2√(a/b)(√n − 1)/(√n + 1)`, which the ratio expressions force at
    /// `K₊/K₋ = √n`.
    pub reconstructed_r: f64,
}

impl IdentityOutcome {
    pub fn relative_error(&self) -> f64 {
        ((self.lhs - self.rhs) / self.lhs).abs()
    }

    /// `|R − reconstructed R| / R`.
    pub fn r_residual(&self) -> f64 {
        ((self.case.r - self.reconstructed_r) / self.case.r).abs()
    }
}

pub fn singular_identity(order: u32, family: HFamily, tol: f64) -> Result<IdentityOutcome> {
    let case = identity_case(order, family)?;
    let lhs = h_eval(family, case.x, case.y, case.z, tol)?;
    let g = h_eval(HFamily::G, case.x, case.y, case.z, tol)?;
    let entry = lambda_closed(order)?;
    let root_n = (order as f64).sqrt();
    Ok(IdentityOutcome {
        case,
        lhs,
        rhs: case.r * g,
        reconstructed_r: 2.0 * entry.ab_ratio.sqrt() * (root_n - 1.0) / (root_n + 1.0),
    })
}
