//! Complete elliptic integrals of the first kind.
//!
//! `K(k)` is evaluated through the arithmetic-geometric mean,
//!
//! ```text
//! K(k) = π / (2 · agm(1, k'))      k' = √(1 − k²)
//! ```
//!
//! which converges quadratically. Moduli are carried together with their
//! complement so that `K` near `k → 1` does not lose digits to `1 − k²`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Result};

/// Iteration cap for the AGM; quadratic convergence needs < 10 steps in f64.
const AGM_MAX_ITER: usize = 64;

/// Relative degeneracy threshold for `(a − b)/a`.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;

/// An elliptic modulus `k ∈ [0, 1)` stored with its complement `k'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    kc: f64,
}

impl Modulus {
    /// Builds a modulus from `k`, computing `k' = √((1 − k)(1 + k))`.
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || !(0.0..1.0).contains(&k) {
            return Err(domain(format!("modulus must satisfy 0 <= k < 1, got {k}")));
        }
        Ok(Self {
            k,
            kc: ((1.0 - k) * (1.0 + k)).sqrt(),
        })
    }

    /// Builds a modulus from a complementary pair known analytically.
    ///
    /// `k² + k'² = 1` is checked to 1e-14; use this when `k` is close to one
    /// and `k'` is available without cancellation.
    pub fn with_complement(k: f64, kc: f64) -> Result<Self> {
        if !(k.is_finite() && kc.is_finite()) || k < 0.0 || kc <= 0.0 || k >= 1.0 {
            return Err(domain(format!(
                "invalid complementary pair k = {k}, k' = {kc}"
            )));
        }
        let defect = k.mul_add(k, kc * kc) - 1.0;
        if defect.abs() > 1e-14 {
            return Err(domain(format!(
                "k and k' are not complementary (k² + k'² − 1 = {defect:e})"
            )));
        }
        Ok(Self { k, kc })
    }

    /// Builds a modulus from its angle, `k = sin θ`, `k' = cos θ`.
    pub fn from_angle(theta: f64) -> Result<Self> {
        if !(0.0..FRAC_PI_2).contains(&theta) {
            return Err(domain(format!("modular angle {theta} outside [0, π/2)")));
        }
        Ok(Self {
            k: theta.sin(),
            kc: theta.cos(),
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// The complementary modulus `k' = √(1 − k²)`.
    pub fn complement(&self) -> f64 {
        self.kc
    }

    /// The modulus `k'`, with complement `k`. Fails for `k = 0`.
    pub fn complementary(&self) -> Result<Modulus> {
        if self.k == 0.0 {
            return Err(domain("the complement of k = 0 is 1, where K diverges"));
        }
        Ok(Modulus {
            k: self.kc,
            kc: self.k,
        })
    }
}

/// The parameter pair `(a, b)` with `a > b > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPair {
    a: f64,
    b: f64,
}

impl ParamPair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || b <= 0.0 || a <= b {
            return Err(domain(format!("require a > b > 0, got a = {a}, b = {b}")));
        }
        if (a - b) / a < DEGENERACY_THRESHOLD {
            return Err(domain(format!(
                "degenerate pair: (a − b)/a = {:e} < {DEGENERACY_THRESHOLD:e}",
                (a - b) / a
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Geometric mean `√(ab)`.
    pub fn geometric_mean(&self) -> f64 {
        (self.a * self.b).sqrt()
    }

    /// The pair scaled by `λ > 0`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::new(lambda * self.a, lambda * self.b)
    }
}

/// Complementary moduli `k± = (√a ± √b)/√(2(a+b))` with their integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticPair {
    pub k_plus: Modulus,
    pub k_minus: Modulus,
    pub big_k_plus: f64,
    pub big_k_minus: f64,
}

impl EllipticPair {
    pub fn sum(&self) -> f64 {
        self.big_k_plus + self.big_k_minus
    }

    pub fn difference(&self) -> f64 {
        self.big_k_plus - self.big_k_minus
    }

    /// `K₊/K₋`.
    pub fn ratio(&self) -> f64 {
        self.big_k_plus / self.big_k_minus
    }
}

/// Arithmetic-geometric mean of two positive numbers.
///
/// Iterates until `|aₙ − bₙ| ≤ 4ε·aₙ`.
pub fn agm(x: f64, y: f64) -> Result<f64> {
    if !(x.is_finite() && y.is_finite()) || x <= 0.0 || y <= 0.0 {
        return Err(domain(format!(
            "agm needs finite positive inputs, got ({x}, {y})"
        )));
    }
    let (mut a, mut b) = (x, y);
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    Ok(0.5 * (a + b))
}

/// `K(k) = ∫₀¹ du / √((1 − u²)(1 − k²u²))`.
pub fn complete_k(k: Modulus) -> f64 {
    if k.kc == 1.0 {
        return FRAC_PI_2;
    }
    // kc > 0 by construction, so agm cannot fail
    FRAC_PI_2 / agm(1.0, k.kc).expect("complement is positive")
}

/// `K` evaluated at a bare modulus value.
pub fn complete_k_of(k: f64) -> Result<f64> {
    Modulus::new(k).map(complete_k)
}

/// `K'(k) = K(k')`.
pub fn complete_k_prime(k: Modulus) -> Result<f64> {
    k.complementary().map(complete_k)
}

/// The moduli `k±` of a parameter pair and `K(k±)`.
pub fn modulus_pair(p: ParamPair) -> EllipticPair {
    let (sa, sb) = (p.a.sqrt(), p.b.sqrt());
    let norm = (2.0 * (p.a + p.b)).sqrt();
    let plus = (sa + sb) / norm;
    // √a − √b = (a − b)/(√a + √b) avoids cancellation when a ≈ b
    let minus = (p.a - p.b) / (sa + sb) / norm;
    let k_plus = Modulus { k: plus, kc: minus };
    let k_minus = Modulus { k: minus, kc: plus };
    EllipticPair {
        k_plus,
        k_minus,
        big_k_plus: complete_k(k_plus),
        big_k_minus: complete_k(k_minus),
    }
}

/// Descending Landen step: `K(k) = K(2√k/(1+k)) / (1+k)`.
///
/// Returns the new modulus and the factor `1/(1+k)`. The new complement is
/// `(1 − k)/(1 + k)`, exact without cancellation.
pub fn landen_descend(k: Modulus) -> (Modulus, f64) {
    let kk = k.k;
    let new = Modulus {
        k: 2.0 * kk.sqrt() / (1.0 + kk),
        kc: (1.0 - kk) / (1.0 + kk),
    };
    (new, 1.0 / (1.0 + kk))
}
