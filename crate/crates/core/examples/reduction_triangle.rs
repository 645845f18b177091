//! Each of the six hyperelliptic integrals three ways: direct quadrature,
//! the reduced u-form, and the closed form in K₊, K₋.
//!
//! ```text
//! cargo run --example reduction_triangle -- 3 0.5
//! ```

use hyperell::elliptic::ParamPair;
use hyperell::quadrature::{hyperelliptic_direct, Hyperelliptic};
use hyperell::reduction::{elliptic_closed, reduced_u_form};

fn main() -> hyperell::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (2.0, 1.0),
    };
    let p = ParamPair::new(a, b)?;
    println!("a = {a}, b = {b}");
    println!(
        "{:<4} {:>20} {:>20} {:>20} {:>10}",
        "", "direct", "u-form", "closed", "evals"
    );
    for w in Hyperelliptic::ALL {
        let d = hyperelliptic_direct(w, p, 1e-13)?;
        let u = reduced_u_form(w, p, 1e-13)?;
        let c = elliptic_closed(w, p);
        println!(
            "{w:<4} {:>20.15} {u:>20.15} {c:>20.15} {:>10}",
            d.value, d.evaluations
        );
    }
    Ok(())
}
