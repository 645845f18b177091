//! π from the six ratios of an elliptic numerator to a Lauricella
//! denominator, at a few parameter pairs.

use hyperell::elliptic::ParamPair;
use hyperell::formulae::pi_estimate;
use hyperell::quadrature::Hyperelliptic;

fn main() -> hyperell::Result<()> {
    for (a, b) in [(2.0, 1.0), (3.0, 0.5), (1.5, 1.3)] {
        let p = ParamPair::new(a, b)?;
        println!("a = {a}, b = {b}");
        for w in Hyperelliptic::ALL {
            let v = pi_estimate(w, p, 1e-13)?;
            println!(
                "  formula {}  π ≈ {:.15}  |error| {:.1e}",
                v.index, v.pi_value, v.abs_error
            );
        }
    }
    Ok(())
}
