//! The Lauricella function F_D by its series and by its Euler integral,
//! including complex arguments outside the unit polydisc, and the
//! reduction that trades one variable for a prefactor.

use num_complex::Complex64;

use hyperell::lauricella::{
    fd_integral, fd_reduce, fd_series, gauss_2f1, LauricellaSpec, DEFAULT_MAX_DEGREE,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> hyperell::Result<()> {
    let two_f_one = gauss_2f1(c(0.5, 0.0), c(0.5, 0.0), c(1.0, 0.0), c(0.25, 0.0), 1e-15)?;
    println!("2F1(½, ½; 1; ¼) = {two_f_one:.15}  (= 2K(½)/π)");

    let inside = LauricellaSpec::real(0.7, &[0.4, 1.1, 0.3], 2.2, &[0.5, -0.6, 0.3])?;
    let s = fd_series(&inside, 1e-15, DEFAULT_MAX_DEGREE)?;
    let i = fd_integral(&inside, 1e-13)?;
    println!("\nthree variables inside the disc");
    println!(
        "  series   {:.15}  (degree {}, est. {:.1e})",
        s.value, s.degree, s.error_estimate
    );
    println!(
        "  integral {:.15}  ({} evaluations)",
        i.value, i.evaluations
    );

    let half = c(0.5, 0.0);
    let outside = LauricellaSpec::new(
        half,
        vec![half; 4],
        c(2.0, 0.0),
        vec![c(1.0, 2.0), c(1.0, -2.0), c(1.0, 1.0), c(1.0, -1.0)],
    )?;
    println!("\nfour conjugate arguments 1 ± 2i, 1 ± i (integral only)");
    println!("  {:.15}", fd_integral(&outside, 1e-13)?.value);

    let b = [0.5, 0.5, 1.0];
    let full = LauricellaSpec::real(0.8, &b, b.iter().sum(), &[0.2, -0.4, 0.6])?;
    let (pre, reduced) = fd_reduce(&full)?;
    println!("\nreduction with c = Σb");
    println!(
        "  F_D^(3)            {:.15}",
        fd_integral(&full, 1e-13)?.value
    );
    println!(
        "  prefactor · F_D^(2) {:.15}",
        pre * fd_integral(&reduced, 1e-13)?.value
    );
    let xs: Vec<String> = reduced.x.iter().map(|x| format!("{:.6}", x.re)).collect();
    println!("  reduced arguments  {}", xs.join(", "));

    match fd_integral(&LauricellaSpec::real(0.5, &[0.5], 2.0, &[2.0])?, 1e-12) {
        Ok(v) => println!("unexpected value {}", v.value),
        Err(e) => println!("\nreal argument past 1: {e}"),
    }
    Ok(())
}
