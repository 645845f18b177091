//! Complete elliptic integrals by AGM, complementary moduli from a
//! parameter pair, and one Landen step.

use hyperell::elliptic::{
    agm, complete_k, complete_k_prime, landen_descend, modulus_pair, Modulus, ParamPair,
};

fn main() -> hyperell::Result<()> {
    println!("agm(1, √2) = {:.16}", agm(1.0, 2f64.sqrt())?);
    for k in [0.1, 0.5, 2f64.sqrt() / 2.0, 0.9, 0.999999] {
        let m = Modulus::new(k)?;
        let (next, factor) = landen_descend(m);
        println!(
            "k = {k:<10.6}  K = {:.15}  K' = {:.15}  Landen: {factor:.6}·K({:.3e}) = {:.15}",
            complete_k(m),
            complete_k_prime(m)?,
            next.k(),
            factor * complete_k(next)
        );
    }

    println!();
    for (a, b) in [(2.0, 1.0), (3.0, 1.0), (10.0, 0.3)] {
        let e = modulus_pair(ParamPair::new(a, b)?);
        println!(
            "(a, b) = ({a}, {b}): k₊ = {:.15}, k₋ = {:.15}, k₊² + k₋² − 1 = {:.1e}, K₊/K₋ = {:.15}",
            e.k_plus.k(),
            e.k_minus.k(),
            e.k_plus.k().powi(2) + e.k_minus.k().powi(2) - 1.0,
            e.ratio()
        );
    }
    Ok(())
}
