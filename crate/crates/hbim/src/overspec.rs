//! Heat-up stage of the over-specified boundary problem: both a surface
//! temperature and a surface flux are imposed at x = 0.
//!
//! A fixed exponent cannot satisfy both conditions, so the exponent itself
//! becomes part of the solution. Matching the imposed flux forces
//! n = phi * delta with phi = F / (k (Ts - Tinf)), and the integral balance
//! then drives the depth along
//!
//!   delta(t) = (exp(a phi^2 t) - 1) / phi,
//!
//! equivalently  d delta / dt = a phi (1 + phi delta), delta(0) = 0.
//!
//! The construction is valid while delta <= thickness (the heat-up stage);
//! at its end n reaches the radiation-conduction number phi0 =
//! phi * thickness, and continuing past it requires switching to a
//! fixed-geometry formulation, which this module signals with a
//! stage-exceeded error.

use crate::error::{Error, Result};
use crate::medium::Medium;
use crate::profile::{BoundaryProblem, DimensionlessGroups};

/// Solution of the over-specified problem at one instant of the heat-up
/// stage.
///
/// Invariants: `exponent` = phi * delta bit-exactly; 0 < exponent <= phi0
/// with equality exactly when delta reaches the body thickness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverSpecifiedState {
    pub delta: f64,
    /// Time-dependent profile exponent n(t) = phi * delta(t).
    pub exponent: f64,
    /// End of the heat-up stage: the time at which delta = thickness.
    pub heatup_time: f64,
    pub groups: DimensionlessGroups,
}

/// Solve the over-specified problem at time `t` (0 < t <= heat-up time).
pub fn overspecified_solve(
    medium: &Medium,
    problem: &BoundaryProblem,
    t: f64,
) -> Result<OverSpecifiedState> {
    let (surface_temp, far_temp, flux, thickness) = match *problem {
        BoundaryProblem::OverSpecified {
            surface_temp,
            far_temp,
            flux,
            thickness,
        } => (surface_temp, far_temp, flux, thickness),
        _ => {
            return Err(Error::InvalidInput(
                "overspecified_solve requires an OverSpecified problem".into(),
            ))
        }
    };
    problem.validate()?;

    let alpha = medium.diffusivity();
    let phi = flux / (medium.conductivity() * (surface_temp - far_temp));
    if phi <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "flux and surface_temp - far_temp must point the same way (phi = {phi:e})"
        )));
    }

    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    if t <= 0.0 {
        return Err(Error::DegenerateTime { t });
    }

    let phi0 = phi * thickness;
    let heatup_time = (thickness * thickness / alpha) * (1.0 / (phi0 * phi0)) * phi0.ln_1p();
    if t > heatup_time {
        return Err(Error::StageExceeded { t, t_h: heatup_time });
    }

    let fourier_flux = alpha * phi * phi * t;
    let delta = fourier_flux.exp_m1() / phi;
    // The product form keeps n = phi * delta an exact identity for callers
    // comparing against the stored delta.
    let exponent = phi * delta;

    Ok(OverSpecifiedState {
        delta,
        exponent,
        heatup_time,
        groups: DimensionlessGroups {
            phi,
            phi0,
            biot: None,
            fourier_conduction: alpha * t / (thickness * thickness),
            fourier_flux,
        },
    })
}

/// Temperature of the over-specified profile at depth `x`:
/// far + (surface - far)(1 - x/delta)^n, clamped to far beyond the front.
pub fn overspecified_profile(
    state: &OverSpecifiedState,
    problem: &BoundaryProblem,
    x: f64,
) -> Result<f64> {
    let (surface_temp, far_temp) = match *problem {
        BoundaryProblem::OverSpecified {
            surface_temp,
            far_temp,
            ..
        } => (surface_temp, far_temp),
        _ => {
            return Err(Error::InvalidInput(
                "overspecified_profile requires an OverSpecified problem".into(),
            ))
        }
    };
    if !x.is_finite() {
        return Err(Error::NonFinite { name: "x", value: x });
    }
    if x < 0.0 {
        return Err(Error::OutOfDomain {
            name: "x",
            value: x,
            constraint: ">= 0",
        });
    }
    let u = x / state.delta;
    if u >= 1.0 {
        return Ok(far_temp);
    }
    Ok(far_temp + (surface_temp - far_temp) * (1.0 - u).powf(state.exponent))
}

/// Non-canonical depth law delta = a phi t / (1 - a phi^2 t), obtained by
/// differentiating delta/(1 + phi delta) as a plain product instead of
/// solving the separable rate equation. Kept only for comparison; it
/// agrees with the canonical exponential law to first order in t and
/// blows up as a phi^2 t -> 1.
pub fn algebraic_depth_variant(phi: f64, diffusivity: f64, t: f64) -> Result<f64> {
    let fo = diffusivity * phi * phi * t;
    if fo >= 1.0 {
        return Err(Error::OutOfDomain {
            name: "a*phi^2*t",
            value: fo,
            constraint: "< 1 for the algebraic variant",
        });
    }
    Ok(diffusivity * phi * t / (1.0 - fo))
}
