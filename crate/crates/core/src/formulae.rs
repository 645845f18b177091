//! Lauricella representations of `I₁ … I₆`, the six π formulae they imply,
//! and two evaluations of `F_D^(3)` beyond its branch point.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::elliptic::{modulus_pair, ParamPair};
use crate::error::{Error, Result};
use crate::lauricella::{fd_integral, fd_reduce, LauricellaSpec};
use crate::quadrature::Hyperelliptic;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The `F_D^(4)` with arguments `1 ± ia, 1 ± ib`, `b = (½,½,½,½)`, `c = 2`.
fn conjugate_quartet(lauricella_a: f64, p: ParamPair) -> LauricellaSpec {
    let (a, b) = (p.a(), p.b());
    let x = vec![
        Complex64::new(1.0, a),
        Complex64::new(1.0, -a),
        Complex64::new(1.0, b),
        Complex64::new(1.0, -b),
    ];
    LauricellaSpec::new(re(lauricella_a), vec![re(0.5); 4], re(2.0), x)
        .expect("quartet spec is well formed")
}

/// Prefactor and `F_D` specification with `Iₖ(a, b) = prefactor · F_D(spec)`.
///
/// ```text
/// I₁ = π/2 · F_D^(4)(3/2; ½; 2 | 1±ia, 1±ib)
/// I₂ = π/2 · F_D^(4)(1/2; ½; 2 | 1±ia, 1±ib)
/// I₃ = π/(2√(2a(a²−b²))) · F_D^(3)(½; ½; 2 | ½, b/(a+b), b/(b−a))
/// I₄ = π√(a/(2(a²−b²)))  · F_D^(3)(½; ½; 1 | ½, b/(a+b), b/(b−a))
/// I₅ = π/(a√b)           · F_D^(3)(½; ½; 1 | −1, b/a, −b/a)
/// I₆ = π√b/(2a)          · F_D^(3)(3/2; ½; 2 | −1, b/a, −b/a)
/// ```
pub fn lauricella_parts(which: Hyperelliptic, p: ParamPair) -> (f64, LauricellaSpec) {
    let (a, b) = (p.a(), p.b());
    let d2 = a * a - b * b;
    let triple = |la: f64, c: f64, x: [f64; 3]| {
        LauricellaSpec::real(la, &[0.5; 3], c, &x).expect("triple spec is well formed")
    };
    let shifted = [0.5, b / (a + b), b / (b - a)];
    let scaled = [-1.0, b / a, -b / a];
    match which {
        Hyperelliptic::I1 => (PI / 2.0, conjugate_quartet(1.5, p)),
        Hyperelliptic::I2 => (PI / 2.0, conjugate_quartet(0.5, p)),
        Hyperelliptic::I3 => (
            PI / (2.0 * (2.0 * a * d2).sqrt()),
            triple(0.5, 2.0, shifted),
        ),
        Hyperelliptic::I4 => (PI * (a / (2.0 * d2)).sqrt(), triple(0.5, 1.0, shifted)),
        Hyperelliptic::I5 => (PI / (a * b.sqrt()), triple(0.5, 1.0, scaled)),
        Hyperelliptic::I6 => (PI * b.sqrt() / (2.0 * a), triple(1.5, 2.0, scaled)),
    }
}

/// Real value of an `F_D` that must be real, checked against `tol`.
fn real_fd(spec: &LauricellaSpec, tol: f64) -> Result<f64> {
    let v = fd_integral(spec, tol)?.value;
    if v.im.abs() >= tol * v.re.abs().max(1.0) {
        return Err(Error::Consistency {
            residue: v.im.abs(),
            tol,
        });
    }
    Ok(v.re)
}

/// `Iₖ(a, b)` through its Lauricella representation.
pub fn lauricella_form(which: Hyperelliptic, p: ParamPair, tol: f64) -> Result<f64> {
    let (prefactor, spec) = lauricella_parts(which, p);
    Ok(prefactor * real_fd(&spec, tol)?)
}

/// A π estimate from one formula at one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiVerdict {
    pub index: usize,
    pub pair: ParamPair,
    pub pi_value: f64,
    pub abs_error: f64,
}

/// π as the ratio of an elliptic numerator and a Lauricella denominator.
///
/// ```text
/// π = 4/√(ab(a+b))  · K₋/F₁           π = √(a−b)/√a      · (K₊+K₋)/F₄
/// π = 4/√(a+b)      · K₋/F₂           π = √a/√(2(a+b))   · (K₊+K₋)/F₅
/// π = 2√(a−b)/√b    · (K₊−K₋)/F₃      π = √2·a/√(b(a+b)) · (K₊−K₋)/F₆
/// ```
///
/// where `Fₖ` is the `F_D` of [`lauricella_parts`].
pub fn pi_estimate(which: Hyperelliptic, p: ParamPair, tol: f64) -> Result<PiVerdict> {
    let (a, b) = (p.a(), p.b());
    let e = modulus_pair(p);
    let numerator = match which {
        Hyperelliptic::I1 => 4.0 / (a * b * (a + b)).sqrt() * e.big_k_minus,
        Hyperelliptic::I2 => 4.0 / (a + b).sqrt() * e.big_k_minus,
        Hyperelliptic::I3 => 2.0 * ((a - b) / b).sqrt() * e.difference(),
        Hyperelliptic::I4 => ((a - b) / a).sqrt() * e.sum(),
        Hyperelliptic::I5 => (a / (2.0 * (a + b))).sqrt() * e.sum(),
        Hyperelliptic::I6 => 2f64.sqrt() * a / (b * (a + b)).sqrt() * e.difference(),
    };
    let (_, spec) = lauricella_parts(which, p);
    let pi_value = numerator / real_fd(&spec, tol)?;
    Ok(PiVerdict {
        index: which.index(),
        pair: p,
        pi_value,
        abs_error: (pi_value - PI).abs(),
    })
}

/// One continuation evaluation of `F_D^(3)(α; ½,½,½; 2 | (a+b)/b, (b−a)/b, 2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuationCase {
    /// `(ib)^α · F_D^(4)(α; ½; 2 | 1±ia, 1±ib)`, the reduction formula read
    /// backwards with pivot `1 − ib`.
    pub lhs: Complex64,
    /// The printed closed form.
    pub printed_rhs: Complex64,
    /// The closed form that `lhs` actually satisfies.
    pub corrected_rhs: Complex64,
}

impl ContinuationCase {
    /// `lhs / printed_rhs`.
    pub fn discrepancy(&self) -> Complex64 {
        self.lhs / self.printed_rhs
    }

    pub fn printed_relative_error(&self) -> f64 {
        (self.lhs - self.printed_rhs).norm() / self.printed_rhs.norm()
    }

    pub fn corrected_relative_error(&self) -> f64 {
        (self.lhs - self.corrected_rhs).norm() / self.corrected_rhs.norm()
    }
}

/// Both continuation cases, `α = 3/2` then `α = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuationPair {
    pub first: ContinuationCase,
    pub second: ContinuationCase,
}

/// Printed closed forms
///
/// ```text
/// α = 3/2:  4(−1+i)/(π√2) · √(b/(a+b))     · K₋
/// α = 1/2:  4(1+i)/(π√2)  · √(b/(a(a+b)))  · K₋
/// ```
///
/// against the left sides obtained from the four-variable representations.
/// The principal-branch phases agree with the printed ones, but the moduli
/// differ by `√(b/a)` and `√a` respectively; `corrected_rhs` carries
/// `b/√(a(a+b))` and `√(b/(a+b))` in place of the printed radicals.
pub fn continuation_pair(p: ParamPair, tol: f64) -> Result<ContinuationPair> {
    let (a, b) = (p.a(), p.b());
    let k_minus = modulus_pair(p).big_k_minus;
    let scale = 4.0 / PI * FRAC_1_SQRT_2 * k_minus;
    let phase_first = Complex64::new(-1.0, 1.0) * scale;
    let phase_second = Complex64::new(1.0, 1.0) * scale;

    let case =
        |alpha: f64, phase: Complex64, printed: f64, corrected: f64| -> Result<ContinuationCase> {
            let quartet = conjugate_quartet(alpha, p);
            let (prefactor, reduced) = fd_reduce(&quartet)?;
            debug_assert_eq!(reduced.len(), 3);
            let f4 = fd_integral(&quartet, tol)?.value;
            Ok(ContinuationCase {
                lhs: f4 / prefactor,
                printed_rhs: phase * printed,
                corrected_rhs: phase * corrected,
            })
        };
    Ok(ContinuationPair {
        first: case(
            1.5,
            phase_first,
            (b / (a + b)).sqrt(),
            b / (a * (a + b)).sqrt(),
        )?,
        second: case(
            0.5,
            phase_second,
            (b / (a * (a + b))).sqrt(),
            (b / (a + b)).sqrt(),
        )?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::hyperelliptic_direct;
    use crate::reduction::elliptic_closed;

    fn pair(a: f64, b: f64) -> ParamPair {
        ParamPair::new(a, b).unwrap()
    }

    #[test]
    fn second_form_matches_quadrature() {
        let p = pair(2.0, 1.0);
        let l = lauricella_form(Hyperelliptic::I2, p, 1e-10).unwrap();
        let d = hyperelliptic_direct(Hyperelliptic::I2, p, 1e-12)
            .unwrap()
            .value;
        assert!((l - d).abs() < 1e-8, "{l} vs {d}");
    }

    #[test]
    fn fifth_form_matches_closed() {
        let p = pair(3.0, 1.0);
        let l = lauricella_form(Hyperelliptic::I5, p, 1e-10).unwrap();
        let e = modulus_pair(p);
        let c = e.sum() / 24f64.sqrt();
        assert!((l - c).abs() < 1e-8);
        assert!((c - elliptic_closed(Hyperelliptic::I5, p)).abs() < 1e-14);
    }

    #[test]
    fn every_form_at_five_two() {
        let p = pair(5.0, 2.0);
        for w in Hyperelliptic::ALL {
            let l = lauricella_form(w, p, 1e-10).unwrap();
            let c = elliptic_closed(w, p);
            assert!((l - c).abs() < 1e-8 * c, "{w}: {l} vs {c}");
        }
        assert!(lauricella_form(Hyperelliptic::I1, p, 1e-10).unwrap() > 0.0);
    }

    #[test]
    fn pi_examples() {
        for (w, a, b) in [
            (Hyperelliptic::I1, 2.0, 1.0),
            (Hyperelliptic::I4, 3.0, 1.0),
            (Hyperelliptic::I6, 5.0, 2.0),
        ] {
            let v = pi_estimate(w, pair(a, b), 1e-10).unwrap();
            assert!(v.abs_error < 1e-8, "{w}: {}", v.pi_value);
            assert_eq!(v.index, w.index());
        }
    }

    #[test]
    fn continuation_moduli_and_phases() {
        for (a, b) in [(2.0, 1.0), (3.0, 1.0), (5.0, 2.0)] {
            let c = continuation_pair(pair(a, b), 1e-10).unwrap();
            let ratio = c.first.printed_rhs.norm() / c.second.printed_rhs.norm();
            assert!((ratio - a.sqrt()).abs() < 1e-12);
            assert!(c.first.corrected_relative_error() < 1e-8, "{:?}", c.first);
            assert!(c.second.corrected_relative_error() < 1e-8, "{:?}", c.second);
            // same phase, magnitude off by √(b/a) and √a
            let d1 = c.first.discrepancy();
            let d2 = c.second.discrepancy();
            assert!(d1.im.abs() < 1e-9 && (d1.re - (b / a).sqrt()).abs() < 1e-8);
            assert!(d2.im.abs() < 1e-9 && (d2.re - a.sqrt()).abs() < 1e-8);
        }
    }

    #[test]
    fn continuation_reference_values() {
        let c = continuation_pair(pair(2.0, 1.0), 1e-10).unwrap();
        assert!((c.first.lhs - Complex64::new(-0.58154, 0.58154)).norm() < 1e-5);
        assert!((c.second.lhs - Complex64::new(0.82243, 0.82243)).norm() < 1e-5);
    }
}
