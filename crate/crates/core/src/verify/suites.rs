use std::f64::consts::PI;

use rayon::prelude::*;

use super::{guarded, Check};
use crate::elliptic::{modulus_pair, ParamPair};
use crate::formulae::{continuation_pair, pi_estimate, ContinuationCase};
use crate::quadrature::{hyperelliptic_direct, legendre_showcase, Hyperelliptic};
use crate::reduction::{elliptic_closed, reduced_u_form};
use crate::singular::{
    identity_cases, lambda_closed, lambda_solver, ratio_check, singular_identity, theta_modulus,
    TABULATED_ORDERS,
};

const QUAD_TOL: f64 = 1e-12;

fn pair(a: f64, b: f64) -> ParamPair {
    ParamPair::new(a, b).expect("grid pairs are valid")
}

fn label(p: ParamPair) -> String {
    format!("({},{})", p.a(), p.b())
}

/// Every route to `𝕏` against every other, the two modular identities and
/// the two sextic identities (as printed and over `[0, 1]`).
pub fn legendre() -> Vec<Check> {
    let Ok(s) = legendre_showcase(QUAD_TOL) else {
        return [
            "modular_minus",
            "modular_plus",
            "sextic_third",
            "sextic_fourth",
        ]
        .iter()
        .map(|id| Check::failed(*id, 1e-9))
        .collect();
    };
    let routes = s.x_routes();
    let mut checks = Vec::new();
    for (i, (n1, v1)) in routes.iter().enumerate() {
        for (n2, v2) in &routes[i + 1..] {
            checks.push(Check::relative(format!("x/{n1}~{n2}"), *v1, *v2, 1e-10));
        }
    }
    for (name, sides) in s.identities() {
        let tol = if name.starts_with("modular") {
            1e-11
        } else {
            1e-9
        };
        checks.push(Check::relative(name, sides.lhs, sides.rhs, tol));
    }
    checks
}

/// Pairs for the reduction triangle.
pub fn reduction_grid() -> Vec<ParamPair> {
    let mut grid: Vec<ParamPair> = [1.5, 2.0, 3.0, 5.0, 10.0]
        .iter()
        .flat_map(|&a| [0.3, 0.5, 1.0, 1.2].map(|b| pair(a, b)))
        .collect();
    grid.extend([pair(1.001, 1.0), pair(50.0, 0.1)]);
    grid
}

/// Direct quadrature against the u-form and the closed form, all six integrals.
pub fn reduction() -> Vec<Check> {
    let tasks: Vec<(Hyperelliptic, ParamPair)> = reduction_grid()
        .into_iter()
        .flat_map(|p| Hyperelliptic::ALL.map(|w| (w, p)))
        .collect();
    tasks
        .par_iter()
        .flat_map_iter(|&(w, p)| {
            let id = format!("{w}/{}", label(p));
            match hyperelliptic_direct(w, p, QUAD_TOL) {
                Ok(direct) => vec![
                    guarded(format!("{id}/u_form"), 1e-8, |id, tol| {
                        Ok(Check::relative(
                            id,
                            reduced_u_form(w, p, QUAD_TOL)?,
                            direct.value,
                            tol,
                        ))
                    }),
                    Check::relative(
                        format!("{id}/closed"),
                        elliptic_closed(w, p),
                        direct.value,
                        1e-8,
                    ),
                ],
                Err(_) => vec![
                    Check::failed(format!("{id}/u_form"), 1e-8),
                    Check::failed(format!("{id}/closed"), 1e-8),
                ],
            }
        })
        .collect()
}

/// Pairs for the π formulae.
pub fn pi_grid() -> Vec<ParamPair> {
    [1.5, 2.0, 3.0]
        .iter()
        .flat_map(|&a| [0.5, 1.0, 1.3].map(|b| pair(a, b)))
        .collect()
}

pub fn pi() -> Vec<Check> {
    let tasks: Vec<(Hyperelliptic, ParamPair)> = pi_grid()
        .into_iter()
        .flat_map(|p| Hyperelliptic::ALL.map(|w| (w, p)))
        .collect();
    tasks
        .par_iter()
        .map(|&(w, p)| {
            guarded(format!("p{}/{}", w.index(), label(p)), 1e-7, |id, tol| {
                Ok(Check::absolute(
                    id,
                    pi_estimate(w, p, 1e-10)?.pi_value,
                    PI,
                    tol,
                ))
            })
        })
        .collect()
}

/// Pairs for the continuation checks.
pub const CONTINUATION_PAIRS: [(f64, f64); 3] = [(2.0, 1.0), (3.0, 1.0), (5.0, 2.0)];

/// Rows per case: the printed equation, the corrected modulus and the
/// principal-branch phase against the printed one.
pub fn continuation() -> Vec<Check> {
    let rows = |name: &str, p: ParamPair, c: &ContinuationCase| {
        let id = format!("{name}/{}", label(p));
        vec![
            Check::new(
                format!("{id}/printed"),
                c.lhs.norm(),
                c.printed_rhs.norm(),
                c.printed_relative_error(),
                1e-7,
            ),
            Check::new(
                format!("{id}/corrected"),
                c.lhs.norm(),
                c.corrected_rhs.norm(),
                c.corrected_relative_error(),
                1e-7,
            ),
            Check::absolute(
                format!("{id}/phase"),
                c.lhs.arg(),
                c.printed_rhs.arg(),
                1e-9,
            ),
        ]
    };
    CONTINUATION_PAIRS
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let p = pair(a, b);
            match continuation_pair(p, 1e-10) {
                Ok(c) => {
                    let mut v = rows("conti1", p, &c.first);
                    v.extend(rows("conti2", p, &c.second));
                    v
                }
                Err(_) => ["conti1", "conti2"]
                    .iter()
                    .flat_map(|n| {
                        ["printed", "corrected", "phase"]
                            .map(|k| Check::failed(format!("{n}/{}/{k}", label(p)), 1e-7))
                    })
                    .collect(),
            }
        })
        .collect()
}

/// Solver, table, theta route, ratio expressions and the identity lists.
pub fn singular() -> Vec<Check> {
    let mut checks: Vec<Check> = TABULATED_ORDERS
        .par_iter()
        .flat_map_iter(|&n| {
            let e = lambda_closed(n).expect("tabulated");
            let root = (n as f64).sqrt();
            let mut v = vec![guarded(format!("solver/n={n:02}"), 1e-11, |id, tol| {
                Ok(Check::absolute(
                    id,
                    lambda_solver(n as f64, 1e-16)?.k(),
                    e.lambda_closed,
                    tol,
                ))
            })];
            for beta in [1.0, 7.0] {
                v.push(guarded(
                    format!("table/n={n:02}/beta={beta}"),
                    1e-12,
                    |id, tol| {
                        let km = modulus_pair(e.pair(beta)?).k_minus.k();
                        Ok(Check::absolute(id, km, e.lambda_closed, tol))
                    },
                ));
            }
            match e.pair(1.0).and_then(|p| ratio_check(p, QUAD_TOL)) {
                Ok(r) => v.extend([
                    Check::relative(format!("ratio/n={n:02}/direct"), r.direct, root, 1e-8),
                    Check::relative(format!("ratio/n={n:02}/quozi"), r.via_quozi, r.direct, 1e-8),
                    Check::relative(
                        format!("ratio/n={n:02}/quozi2"),
                        r.via_quozi2,
                        r.direct,
                        1e-8,
                    ),
                ]),
                Err(_) => v.extend(
                    ["direct", "quozi", "quozi2"]
                        .map(|k| Check::failed(format!("ratio/n={n:02}/{k}"), 1e-8)),
                ),
            }
            v
        })
        .collect();

    checks.par_extend((1..=40u32).into_par_iter().map(|n| {
        guarded(format!("theta/n={n:02}"), 1e-11, |id, tol| {
            let t = theta_modulus(n as f64, 1e-17)?.k();
            Ok(Check::absolute(
                id,
                t,
                lambda_solver(n as f64, 1e-16)?.k(),
                tol,
            ))
        })
    }));

    let free = pair(2.0, 1.0);
    match ratio_check(free, QUAD_TOL) {
        Ok(r) => checks.extend([
            Check::relative(
                format!("ratio/{}/quozi", label(free)),
                r.via_quozi,
                r.direct,
                1e-8,
            ),
            Check::relative(
                format!("ratio/{}/quozi2", label(free)),
                r.via_quozi2,
                r.direct,
                1e-8,
            ),
        ]),
        Err(_) => checks.push(Check::failed(format!("ratio/{}", label(free)), 1e-8)),
    }

    checks.par_extend(identity_cases().par_iter().flat_map_iter(|c| {
        let id = format!("{}/n={:02}", c.family, c.order);
        match singular_identity(c.order, c.family, QUAD_TOL) {
            Ok(o) => vec![
                Check::new(
                    format!("identity/{id}"),
                    o.lhs,
                    o.rhs,
                    o.relative_error(),
                    1e-8,
                ),
                Check::new(
                    format!("r_closed_form/{id}"),
                    o.case.r,
                    o.reconstructed_r,
                    o.r_residual(),
                    1e-12,
                ),
            ],
            Err(_) => vec![Check::failed(format!("identity/{id}"), 1e-8)],
        }
    }));
    checks
}
