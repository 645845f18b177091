//! Seeded invariant sweeps. Samples are drawn sequentially from one
//! generator and evaluated in parallel, so results depend only on the seed.

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::Check;
use crate::elliptic::{complete_k, landen_descend, modulus_pair, Modulus, ParamPair};
use crate::error::Result;
use crate::lauricella::{fd_integral, fd_reduce, fd_series, LauricellaSpec, DEFAULT_MAX_DEGREE};

pub const PROPERTY_NAMES: [&str; 8] = [
    "complementarity",
    "conjugation",
    "degenerate_collapse",
    "landen",
    "permutation",
    "reduce_preservation",
    "route_agreement",
    "scale_invariance",
];

const QUAD_TOL: f64 = 1e-12;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// A random pair with `b ∈ [0.01, 10)` and `a/b ∈ (1, 100)`.
pub fn random_pair(rng: &mut StdRng) -> ParamPair {
    let b = rng.gen_range(0.01..10.0);
    let ratio = 1.0 + rng.gen_range(1e-6..99.0);
    ParamPair::new(ratio * b, b).expect("ratio exceeds one")
}

/// A point in the disc `|x| ≤ radius`.
fn disc_point(rng: &mut StdRng, radius: f64) -> Complex64 {
    Complex64::from_polar(
        radius * rng.gen::<f64>().sqrt(),
        rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
    )
}

/// A convergent specification: `n ∈ 1..=4`, real `a ∈ [0.1, 2.8]`,
/// `c ∈ [a + 0.1, 3)`, `bᵢ ∈ [0.1, 2.9]`, `|xᵢ| ≤ 0.8`.
pub fn random_spec(rng: &mut StdRng) -> LauricellaSpec {
    let n = rng.gen_range(1..=4);
    let a = rng.gen_range(0.1..2.8);
    let c = rng.gen_range(a + 0.1..3.0);
    let b = (0..n).map(|_| re(rng.gen_range(0.1..2.9))).collect();
    let x = (0..n).map(|_| disc_point(rng, 0.8)).collect();
    LauricellaSpec::new(re(a), b, re(c), x).expect("well formed")
}

fn relative(u: Complex64, v: Complex64) -> f64 {
    (u - v).norm() / v.norm()
}

fn integral(spec: &LauricellaSpec) -> Result<Complex64> {
    Ok(fd_integral(spec, QUAD_TOL)?.value)
}

/// Worst case over a sample; a failed evaluation counts as NaN.
fn worst(id: &str, tol: f64, errors: Vec<Result<f64>>) -> Check {
    let max = errors
        .into_iter()
        .map(|e| e.unwrap_or(f64::NAN))
        .fold(0.0, |m: f64, e| {
            if e.is_nan() || m.is_nan() {
                f64::NAN
            } else {
                m.max(e)
            }
        });
    Check::new(id, max, 0.0, max, tol)
}

pub fn property_checks(seed: u64) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(seed);

    let pairs: Vec<ParamPair> = (0..1000).map(|_| random_pair(&mut rng)).collect();
    let moduli: Vec<f64> = (0..1000).map(|_| rng.gen_range(0.0..0.999)).collect();
    let scales: Vec<(ParamPair, f64)> = (0..200)
        .map(|_| (random_pair(&mut rng), rng.gen_range(1e-3..1e3)))
        .collect();
    let specs: Vec<LauricellaSpec> = (0..200).map(|_| random_spec(&mut rng)).collect();

    let reducible: Vec<LauricellaSpec> = (0..40)
        .map(|_| {
            let b: Vec<f64> = (0..3).map(|_| rng.gen_range(0.2..1.5)).collect();
            let c: f64 = b.iter().sum();
            let a = rng.gen_range(0.1..c - 0.1);
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-0.9..0.9)).collect();
            LauricellaSpec::real(a, &b, c, &x).expect("well formed")
        })
        .collect();

    let conjugate: Vec<LauricellaSpec> = (0..40)
        .map(|_| {
            let a = rng.gen_range(0.1..2.0);
            let c = rng.gen_range(a + 0.2..4.0);
            let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.1..3.0));
            let w: f64 = rng.gen_range(-5.0..0.9);
            let bz = rng.gen_range(0.1..2.0);
            let bw = rng.gen_range(0.1..2.0);
            LauricellaSpec::new(
                re(a),
                vec![re(bz), re(bz), re(bw)],
                re(c),
                vec![z, z.conj(), re(w)],
            )
            .expect("well formed")
        })
        .collect();

    let permuted: Vec<(LauricellaSpec, LauricellaSpec)> = specs
        .iter()
        .filter(|s| s.len() > 1)
        .take(40)
        .map(|s| {
            let mut order: Vec<usize> = (0..s.len()).collect();
            order.rotate_left(1);
            let q = LauricellaSpec::new(
                s.a,
                order.iter().map(|&i| s.b[i]).collect(),
                s.c,
                order.iter().map(|&i| s.x[i]).collect(),
            )
            .expect("well formed");
            (s.clone(), q)
        })
        .collect();

    let collapsed: Vec<(LauricellaSpec, LauricellaSpec)> = specs
        .iter()
        .filter(|s| s.len() > 1)
        .take(40)
        .map(|s| {
            let mut x = s.x.clone();
            x[1] = x[0];
            let full = LauricellaSpec::new(s.a, s.b.clone(), s.c, x.clone()).expect("well formed");
            let mut b = s.b[1..].to_vec();
            b[0] += s.b[0];
            let merged = LauricellaSpec::new(s.a, b, s.c, x[1..].to_vec()).expect("well formed");
            (full, merged)
        })
        .collect();

    vec![
        worst(
            "complementarity",
            1e-14,
            pairs
                .par_iter()
                .map(|&p| {
                    let e = modulus_pair(p);
                    let (kp, km) = (e.k_plus.k(), e.k_minus.k());
                    Ok((kp.mul_add(kp, km * km) - 1.0).abs())
                })
                .collect(),
        ),
        worst(
            "landen",
            1e-12,
            moduli
                .par_iter()
                .map(|&k| {
                    let m = Modulus::new(k)?;
                    let (next, factor) = landen_descend(m);
                    let big = complete_k(m);
                    Ok(((factor * complete_k(next) - big) / big).abs())
                })
                .collect(),
        ),
        worst(
            "scale_invariance",
            1e-14,
            scales
                .par_iter()
                .map(|&(p, s)| {
                    let k = modulus_pair(p).k_minus.k();
                    let ks = modulus_pair(p.scaled(s)?).k_minus.k();
                    Ok((k - ks).abs() / k)
                })
                .collect(),
        ),
        worst(
            "route_agreement",
            1e-9,
            specs
                .par_iter()
                .map(|s| {
                    let series = fd_series(s, 1e-16, DEFAULT_MAX_DEGREE)?.value;
                    Ok(relative(integral(s)?, series))
                })
                .collect(),
        ),
        worst(
            "reduce_preservation",
            1e-9,
            reducible
                .par_iter()
                .map(|s| {
                    let (pre, reduced) = fd_reduce(s)?;
                    Ok(relative(pre * integral(&reduced)?, integral(s)?))
                })
                .collect(),
        ),
        worst(
            "conjugation",
            1e-10,
            conjugate
                .par_iter()
                .map(|s| integral(s).map(|v| v.im.abs() / v.norm()))
                .collect(),
        ),
        worst(
            "permutation",
            1e-12,
            permuted
                .par_iter()
                .map(|(s, q)| Ok(relative(integral(q)?, integral(s)?)))
                .collect(),
        ),
        worst(
            "degenerate_collapse",
            1e-10,
            collapsed
                .par_iter()
                .map(|(full, merged)| Ok(relative(integral(merged)?, integral(full)?)))
                .collect(),
        ),
    ]
}
