//! The numerical substrate on its own: error functions, adaptive
//! quadrature and bracketed root finding.

use hbim::{erf, erfc, find_root, ierfc, integrate_full, Tolerance};

fn main() -> hbim::Result<()> {
    println!("{:>6} {:>22} {:>22} {:>22}", "x", "erf", "erfc", "ierfc");
    for i in 0..=8 {
        let x = 0.5 * i as f64;
        println!(
            "{x:>6.2} {:>22.15} {:>22.15} {:>22.15}",
            erf(x)?,
            erfc(x)?,
            ierfc(x)?
        );
    }
    // Complementarity and symmetry hold to rounding.
    let x = 1.234;
    println!("erf + erfc - 1 at {x}: {:.2e}", erf(x)? + erfc(x)? - 1.0);
    println!("erf(-x) + erf(x) at {x}: {:.2e}", erf(-x)? + erf(x)?);
    // ierfc(0) = 1/sqrt(pi).
    println!(
        "ierfc(0) - 1/sqrt(pi): {:.2e}",
        ierfc(0.0)? - 1.0 / std::f64::consts::PI.sqrt()
    );

    let tol = Tolerance::default();
    let q = integrate_full(|v| (-v * v).exp(), 0.0, 2.0, &tol)?;
    println!();
    println!(
        "int exp(-v^2) over [0,2] = {:.15} ({} evaluations, est {:.1e})",
        q.value, q.evaluations, q.error_estimate
    );
    // Same number through the error function.
    let via_erf = 0.5 * std::f64::consts::PI.sqrt() * erf(2.0)?;
    println!("sqrt(pi)/2 erf(2)        = {via_erf:.15}");

    let root = find_root(|v| v * v * v - 2.0, 0.0, 2.0, &tol)?;
    println!();
    println!("cbrt(2) by bracketed root find: {root:.15}");
    Ok(())
}
