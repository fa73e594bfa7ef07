//! Compare the power-law profiles against the exact error-function
//! fields for the fixed-temperature and fixed-flux problems.

use hbim::{
    closed_form_exponent, pf_exact_temperature, pf_profile, pt_exact_temperature, pt_profile,
    Medium, ProblemClass,
};

fn main() -> hbim::Result<()> {
    let m = Medium::new(1.0, 1.0, 1.0)?;
    let t = 1.0;

    let n_pt = closed_form_exponent(ProblemClass::Pt);
    let prof_t = pt_profile(n_pt, &m, 1.0, 0.0, t)?;
    println!("fixed surface temperature, t = {t}, n = {n_pt:.6}");
    println!("{:>6} {:>12} {:>12} {:>10}", "x", "approx", "exact", "abs err");
    for i in 0..=12 {
        let x = 0.3 * i as f64;
        let a = prof_t.evaluate(x)?;
        let e = pt_exact_temperature(&m, 1.0, 0.0, x, t)?;
        println!("{x:>6.2} {a:>12.6} {e:>12.6} {:>10.2e}", (a - e).abs());
    }
    println!("front position: {:.6}", prof_t.front_position());

    let n_pf = closed_form_exponent(ProblemClass::Pf);
    let prof_f = pf_profile(n_pf, &m, 1.0, 0.0, t)?;
    println!();
    println!("fixed surface flux, t = {t}, n = {n_pf:.6}");
    println!("{:>6} {:>12} {:>12} {:>10}", "x", "approx", "exact", "abs err");
    for i in 0..=12 {
        let x = 0.4 * i as f64;
        let a = prof_f.evaluate(x)?;
        let e = pf_exact_temperature(&m, 1.0, 0.0, x, t)?;
        println!("{x:>6.2} {a:>12.6} {e:>12.6} {:>10.2e}", (a - e).abs());
    }
    // The surface values agree by construction: that equality is the
    // constraint the exponent was solved from.
    let surf_a = prof_f.evaluate(0.0)?;
    let surf_e = pf_exact_temperature(&m, 1.0, 0.0, 0.0, t)?;
    println!("surface agreement: {:.3e}", (surf_a - surf_e).abs());
    Ok(())
}
