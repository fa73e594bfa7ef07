//! Rank profile exponents by the integrated squared residual of the
//! heat equation (the strongest of the error measures here: it needs no
//! exact solution at all) and by the surface heat defect.

use hbim::{closed_form_exponent, delta_q, langford_e, ProblemClass};

fn main() -> hbim::Result<()> {
    let n_star = closed_form_exponent(ProblemClass::Pt);

    println!("residual functional, fixed-temperature profiles, t = 1");
    println!("{:>10} {:>14} {:>10}", "n", "e_n", "converged");
    for n in [1.6, 1.75, n_star, 2.0, 2.25, 2.5, 3.0, 4.0, 20.0] {
        let r = langford_e(ProblemClass::Pt, n, 1.0)?;
        println!("{n:>10.6} {:>14.8} {:>10}", r.normalized, r.converged);
    }
    // The integrand carries v^(2n-4) near the front; below n = 1.5 the
    // integral diverges and the report says so instead of erroring.
    let div = langford_e(ProblemClass::Pt, 1.3, 1.0)?;
    println!("n = 1.3: converged = {} (divergent tail)", div.converged);

    println!();
    println!("fixed-flux profiles, t = 1");
    for n in [2.0, 3.0, closed_form_exponent(ProblemClass::Pf), 4.0] {
        let r = langford_e(ProblemClass::Pf, n, 1.0)?;
        println!("{n:>10.6} {:>14.8}", r.normalized);
    }

    println!();
    println!("surface heat defect delta_q(n) (zero marks the solved exponent)");
    for n in [1.2, 1.5, 1.75, n_star, 2.0, 2.5, 3.0] {
        println!("{n:>10.6} {:>14.10}", delta_q(n)?);
    }
    println!("delta_q({n_star:.6}) = {:.3e}", delta_q(n_star)?);
    Ok(())
}
