//! March the over-specified problem (both surface temperature and
//! surface flux imposed) through its heat-up stage.
//!
//! With both conditions pinned, the profile exponent stops being a free
//! constant: n(t) = phi * delta(t) grows with the front, and the stage
//! ends at the heat-up time t_h when the front reaches the layer
//! thickness h0 and n reaches the flux group phi0.

use hbim::{integrate_ode, overspecified_solve, BoundaryProblem, Error, Medium};

fn main() -> hbim::Result<()> {
    let m = Medium::new(1.0, 1.0, 1.0)?;
    let problem = BoundaryProblem::OverSpecified {
        surface_temp: 1.0,
        far_temp: 0.0,
        flux: 1.0,
        thickness: 1.0,
    };

    let probe = overspecified_solve(&m, &problem, 1e-3)?;
    let t_h = probe.heatup_time;
    println!(
        "phi = {}, phi0 = {}, heat-up time t_h = {t_h:.9}",
        probe.groups.phi, probe.groups.phi0
    );
    println!("{:>10} {:>12} {:>12}", "t", "delta", "n");
    for i in 1..=10 {
        let t = t_h * i as f64 / 10.0;
        let s = overspecified_solve(&m, &problem, t)?;
        println!("{t:>10.6} {:>12.8} {:>12.8}", s.delta, s.exponent);
    }

    // Independent cross-check: the closed-form front obeys the depth ODE
    // d(delta)/dt = alpha phi (1 + phi delta) from delta(0) = 0.
    let phi = probe.groups.phi;
    let alpha = m.diffusivity();
    let rk = integrate_ode(|_, d| alpha * phi * (1.0 + phi * d), 0.0, 0.0, t_h, 4000)?;
    let closed = overspecified_solve(&m, &problem, t_h)?.delta;
    println!();
    println!("front at t_h: closed form {closed:.12}, RK4 {rk:.12}");

    match overspecified_solve(&m, &problem, 1.05 * t_h) {
        Err(Error::StageExceeded { t, t_h }) => {
            println!("t = {t:.4} rejected: past the stage limit {t_h:.4} as it must be")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
