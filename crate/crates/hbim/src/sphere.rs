//! Region outside a sphere held at a fixed surface temperature.
//!
//! The substitution u = r (T - far) turns the radial heat equation into the
//! plain slab equation, so the whole fixed-surface-temperature machinery
//! carries over: same exponent, same depth law, with the profile origin
//! shifted to the sphere surface. The only new step is the backward map
//! T = far + u / r.

use crate::error::{Error, Result};
use crate::medium::Medium;
use crate::profile::{pt_depth, BoundaryProblem, PowerLawProfile};

/// Sphere solution: a slab profile in the transformed variable plus the
/// data needed to map back to temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereSolution {
    /// Power-law profile of u(r) = r (T - far_temp): base 0, amplitude
    /// radius * (surface_temp - far_temp), origin at the sphere surface.
    pub u_profile: PowerLawProfile,
    pub radius: f64,
    pub far_temp: f64,
}

impl SphereSolution {
    /// Transformed field u(r) = r (T - far_temp).
    pub fn u(&self, r: f64) -> Result<f64> {
        self.u_profile.evaluate(r)
    }

    /// Physical temperature at radius `r` (>= sphere radius).
    pub fn temperature(&self, r: f64) -> Result<f64> {
        let u = self.u_profile.evaluate(r)?;
        if r == 0.0 {
            // Only reachable for the degenerate zero-radius sphere, whose
            // field is identically the far temperature.
            return Ok(self.far_temp);
        }
        Ok(self.far_temp + u / r)
    }

    /// Outer edge of the heated shell.
    pub fn front_radius(&self) -> f64 {
        self.u_profile.front_position()
    }
}

/// Solve the sphere problem at time `t` by mapping to the slab.
///
/// The exponent is the fixed-surface-temperature closed form n = 2/(pi - 2)
/// and the shell thickness follows the slab depth law
/// sqrt(2 n (n + 1) a t); both are literally the slab solution because the
/// transformed problem *is* the slab problem.
pub fn sphere_solve(medium: &Medium, problem: &BoundaryProblem, t: f64) -> Result<SphereSolution> {
    let (radius, surface_temp, far_temp) = match *problem {
        BoundaryProblem::Sphere {
            radius,
            surface_temp,
            far_temp,
        } => (radius, surface_temp, far_temp),
        _ => {
            return Err(Error::InvalidInput(
                "sphere_solve requires a Sphere problem".into(),
            ))
        }
    };
    problem.validate()?;
    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    if t <= 0.0 {
        return Err(Error::DegenerateTime { t });
    }

    let exponent = 2.0 / (std::f64::consts::PI - 2.0);
    let u_profile = PowerLawProfile::new(
        0.0,
        radius * (surface_temp - far_temp),
        pt_depth(exponent, medium.diffusivity(), t),
        exponent,
        radius,
    )?;
    Ok(SphereSolution {
        u_profile,
        radius,
        far_temp,
    })
}
