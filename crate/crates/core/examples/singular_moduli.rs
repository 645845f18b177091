//! Singular moduli λ*(n): closed forms, a bisection solver, theta series,
//! and the Lauricella identities H = R·G at the tabulated orders.

use hyperell::lauricella::HFamily;
use hyperell::singular::{
    identity_cases, lambda_closed, lambda_solver, ratio_check, singular_identity, theta_modulus,
    TABULATED_ORDERS,
};

fn main() -> hyperell::Result<()> {
    println!(
        "{:>3} {:>20} {:>20} {:>20} {:>14}",
        "n", "closed", "solver", "theta", "a/b"
    );
    for n in TABULATED_ORDERS {
        let e = lambda_closed(n)?;
        let s = lambda_solver(n as f64, 1e-15)?;
        let t = theta_modulus(n as f64, 1e-17)?;
        println!(
            "{n:>3} {:>20.16} {:>20.16} {:>20.16} {:>14.10}",
            e.lambda_closed,
            s.k(),
            t.k(),
            e.ab_ratio
        );
    }

    println!("\nK₊/K₋ at the singular pairs (β = 1)");
    for n in TABULATED_ORDERS {
        let r = ratio_check(lambda_closed(n)?.pair(1.0)?, 1e-13)?;
        println!(
            "  n = {n:>2}: √n = {:.12}  direct {:.12}  Lauricella spread {:.1e}",
            (n as f64).sqrt(),
            r.direct,
            r.spread()
        );
    }

    println!("\nidentities");
    for case in identity_cases() {
        let o = singular_identity(case.order, case.family, 1e-13)?;
        let tag = match case.family {
            HFamily::H1 => "H₁",
            HFamily::H2 => "H₂",
            HFamily::G => "G",
        };
        println!(
            "  {tag} n = {:>2}: H = {:+.12}  R·G = {:+.12}  rel.err {:.1e}  R − reconstructed {:.1e}",
            case.order,
            o.lhs,
            o.rhs,
            o.relative_error(),
            o.r_residual()
        );
    }
    Ok(())
}
