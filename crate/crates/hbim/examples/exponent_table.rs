//! Solve the profile exponent for every boundary class and tabulate how
//! the individual constraint curves agree (or fail to).
//!
//! Run with `cargo run --example exponent_table`.

use hbim::{
    closed_form_exponent, consistency_report, solve_exponent, ConstraintKind, PairOutcome,
    ProblemClass,
};

fn main() -> hbim::Result<()> {
    println!("exponent solutions");
    println!("------------------");
    let pt = solve_exponent(ConstraintKind::FluxMatchPt, ConstraintKind::HeatMatch)?;
    let pf = solve_exponent(
        ConstraintKind::SurfaceTempMatchPf,
        ConstraintKind::HbiDepthPf,
    )?;
    println!(
        "fixed temperature: n = {:.9}  delta/sqrt(at) = {:.9}  (closed form {:.9})",
        pt.n,
        pt.depth_ratio,
        closed_form_exponent(ProblemClass::Pt)
    );
    println!(
        "fixed flux:        n = {:.9}  delta/sqrt(at) = {:.9}  (closed form {:.9})",
        pf.n,
        pf.depth_ratio,
        closed_form_exponent(ProblemClass::Pf)
    );
    println!(
        "sphere:            n = {:.9}  (slab problem in u = r(T - Tinf); same root)",
        closed_form_exponent(ProblemClass::SpherePt)
    );

    for (name, class) in [
        ("fixed temperature", ProblemClass::Pt),
        ("fixed flux", ProblemClass::Pf),
    ] {
        println!();
        println!("constraint pairs, {name}");
        for entry in consistency_report(class) {
            let tag = match entry.outcome {
                PairOutcome::Solved { n, depth_ratio, .. } => {
                    format!("n = {n:.6}, ratio = {depth_ratio:.6}")
                }
                PairOutcome::Coincident => "same curve, no new information".into(),
                PairOutcome::NoCrossing => "no crossing above n = 1".into(),
                PairOutcome::Reference { n, depth_ratio } => {
                    format!("tabulated at n = {n}, ratio = {depth_ratio:.6}")
                }
            };
            println!(
                "  {:<22} x {:<22} [{:?}] {tag}",
                entry.first.to_string(),
                entry.second.to_string(),
                entry.variant
            );
        }
    }
    Ok(())
}
