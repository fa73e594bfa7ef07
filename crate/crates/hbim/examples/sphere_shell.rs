//! Cooling of the medium around a sphere held at fixed surface
//! temperature, handled through the u = r (T - Tinf) transform.
//!
//! In u the spherical problem is the plane fixed-temperature problem
//! shifted to start at r0, so the slab machinery applies unchanged and
//! the temperature follows by dividing r back out.

use hbim::{sphere_exact_u, sphere_solve, BoundaryProblem, Medium};

fn main() -> hbim::Result<()> {
    let m = Medium::new(1.0, 1.0, 1.0)?;
    let (r0, ts, tinf) = (2.0, 4.0, 1.0);
    let problem = BoundaryProblem::Sphere {
        radius: r0,
        surface_temp: ts,
        far_temp: tinf,
    };

    for t in [0.25, 1.0, 4.0] {
        let sol = sphere_solve(&m, &problem, t)?;
        println!(
            "t = {t}: thermal front at r = {:.6} ({} radii out)",
            sol.front_radius(),
            (sol.front_radius() / r0).round()
        );
        println!("{:>8} {:>12} {:>12} {:>12}", "r", "T approx", "T exact", "u approx");
        for i in 0..=6 {
            let r = r0 + 0.8 * i as f64;
            let ta = sol.temperature(r)?;
            let u = sphere_exact_u(&m, r0 * (ts - tinf), 0.0, r0, r, t)?;
            let te = tinf + u / r;
            println!("{r:>8.2} {ta:>12.6} {te:>12.6} {:>12.6}", sol.u(r)?);
        }
        println!();
    }

    // 1/r geometric decay: at late times the approximate field still
    // drops below the same slab value evaluated at equal depth.
    let sol = sphere_solve(&m, &problem, 4.0)?;
    let depth = 1.5;
    println!(
        "geometry factor at depth {depth}: sphere {:.6} vs planar-u {:.6}",
        sol.temperature(r0 + depth)? - tinf,
        sol.u(r0 + depth)? / r0
    );
    Ok(())
}
