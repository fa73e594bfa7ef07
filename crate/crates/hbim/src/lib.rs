//! Integral-balance solutions of one-dimensional transient heat
//! conduction in a semi-infinite body.
//!
//! The approximation family is the power-law profile
//! `T = T_inf + b (1 - x/delta)^n` with a finite penetration depth
//! `delta(t)`. The crate solves for the exponent `n` by intersecting
//! pairs of physically motivated constraint curves, evaluates the
//! resulting profiles against the exact error-function solutions, and
//! quantifies the approximation error with integral mismatch metrics
//! and a residual functional of the heat equation.
//!
//! Covered boundary problems:
//!
//! * prescribed surface temperature (exact solution `erf`),
//! * prescribed surface flux (exact solution `ierfc`),
//! * an over-specified front-tracking stage with both temperature and
//!   flux pinned at the surface, valid up to a finite heat-up time,
//! * a cooled sphere, reduced to the slab problem by the substitution
//!   `u = r (T - T_inf)`.
//!
//! The `cli` module exposes the same functionality as the `hbim`
//! binary with `solve`, `profile`, `error` and `bench` subcommands.

pub mod cli;
pub mod error;
pub mod exact;
pub mod medium;
pub mod metrics;
pub mod numerics;
pub mod overspec;
pub mod profile;
pub mod solver;
pub mod sphere;

pub use error::{Error, Result};
pub use exact::{
    pf_exact_temperature, pt_exact_accumulated_heat, pt_exact_surface_flux, pt_exact_temperature,
    sphere_exact_u,
};
pub use medium::Medium;
pub use metrics::{
    accuracy_ratio, delta_q, langford_e, mismatch_integral, mismatch_integral_with,
    reference_error_rows, ErrorReport, ExactComparator, LangfordReport, MismatchSpec,
};
pub use numerics::{
    erf, erfc, find_root, ierfc, integrate, integrate_full, integrate_ode, Quadrature, Tolerance,
};
pub use overspec::{
    algebraic_depth_variant, overspecified_profile, overspecified_solve, OverSpecifiedState,
};
pub use profile::{
    accumulated_heat_approx, front_degeneracy_check, hbi_residual, hbi_residual_scaled, pf_depth,
    pf_profile, pt_depth, pt_profile, surface_flux_approx, BoundaryProblem, DimensionlessGroups,
    PowerLawProfile,
};
pub use solver::{
    closed_form_exponent, consistency_report, depth_ratio, depth_ratio_with, scaling_estimate,
    solve_exponent, solve_exponent_with, solver_tolerance, ConsistencyEntry, ConstraintKind,
    DepthLawVariant, ExponentSolution, GroupKind, PairOutcome, ProblemClass, ScalingEstimate,
};
pub use sphere::{sphere_solve, SphereSolution};
