//! The sextic integral ∫₀¹ x²/√(1 − x¹²) dx by five routes, and the
//! modular and sextic identities built on it.
//!
//! ```text
//! cargo run --example legendre_showcase
//! ```

use hyperell::quadrature::legendre_showcase;

fn main() -> hyperell::Result<()> {
    let s = legendre_showcase(1e-13)?;
    println!("routes to the sextic integral");
    for (name, v) in s.x_routes() {
        println!("  {name:<14} {v:.16}");
    }
    println!("\nidentities");
    for (name, sides) in s.identities() {
        println!(
            "  {name:<19} lhs {:.15}  rhs {:.15}  ratio {:.12}  rel.err {:.2e}",
            sides.lhs,
            sides.rhs,
            sides.lhs / sides.rhs,
            sides.relative_error()
        );
    }
    Ok(())
}
