//! Closed-form reference fields for the semi-infinite conduction problems.
//!
//! These are the classical error-function solutions the integral-method
//! profiles are judged against:
//!
//! * fixed surface temperature: T = Ts + (Tinf - Ts) erf(x / (2 sqrt(a t)))
//! * fixed surface flux: T = Tinf + (2 F / k) sqrt(a t) ierfc(x / (2 sqrt(a t)))
//! * sphere with fixed surface temperature, mapped to a slab through
//!   u = r (T - Tinf)
//!
//! with a the diffusivity and k the conductivity.

use crate::error::{Error, Result};
use crate::medium::Medium;
use crate::numerics::{erf_raw, ierfc_raw};

fn check_coordinate(name: &'static str, value: f64, lower: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite { name, value });
    }
    if value < lower {
        return Err(Error::OutOfDomain {
            name,
            value,
            constraint: "inside the body",
        });
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    if t <= 0.0 {
        return Err(Error::DegenerateTime { t });
    }
    Ok(())
}

/// Temperature at depth `x >= 0`, time `t`, for a surface held at
/// `surface_temp` since t = 0 with initial/far temperature `far_temp`.
///
/// At t <= 0 only the surface point has a defined value (the imposed
/// boundary temperature); any interior point is an error there.
pub fn pt_exact_temperature(
    medium: &Medium,
    surface_temp: f64,
    far_temp: f64,
    x: f64,
    t: f64,
) -> Result<f64> {
    check_coordinate("x", x, 0.0)?;
    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    if t <= 0.0 {
        if x == 0.0 {
            return Ok(surface_temp);
        }
        return Err(Error::DegenerateTime { t });
    }
    let s = x / (2.0 * (medium.diffusivity() * t).sqrt());
    Ok(surface_temp + (far_temp - surface_temp) * erf_raw(s))
}

/// Surface heat flux k (Ts - Tinf) / sqrt(pi a t); diverges like 1/sqrt(t)
/// as t -> 0, hence t > 0 is required.
pub fn pt_exact_surface_flux(
    medium: &Medium,
    surface_temp: f64,
    far_temp: f64,
    t: f64,
) -> Result<f64> {
    check_time(t)?;
    let denom = (std::f64::consts::PI * medium.diffusivity() * t).sqrt();
    Ok(medium.conductivity() * (surface_temp - far_temp) / denom)
}

/// Heat absorbed per unit area up to time `t`:
/// Q = 2 k (Ts - Tinf) sqrt(t / (pi a)). Defined (and zero) at t = 0.
pub fn pt_exact_accumulated_heat(
    medium: &Medium,
    surface_temp: f64,
    far_temp: f64,
    t: f64,
) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    if t < 0.0 {
        return Err(Error::OutOfDomain {
            name: "t",
            value: t,
            constraint: ">= 0",
        });
    }
    let k = medium.conductivity();
    Ok(2.0 * k * (surface_temp - far_temp) * (t / (std::f64::consts::PI * medium.diffusivity())).sqrt())
}

/// Temperature under a constant surface flux `flux` applied since t = 0.
pub fn pf_exact_temperature(
    medium: &Medium,
    flux: f64,
    far_temp: f64,
    x: f64,
    t: f64,
) -> Result<f64> {
    check_coordinate("x", x, 0.0)?;
    check_time(t)?;
    let root = (medium.diffusivity() * t).sqrt();
    let s = x / (2.0 * root);
    Ok(far_temp + 2.0 * flux / medium.conductivity() * root * ierfc_raw(s))
}

/// Exact field of the transformed variable u = r (T - far) outside a
/// sphere of radius `radius`. In u and x = r - radius the problem is the
/// fixed-surface-temperature slab with boundary value `u_surface` and far
/// value `u_far`, so this delegates to that solution verbatim:
/// u = u_surface + (u_far - u_surface) erf((r - radius) / (2 sqrt(a t))).
pub fn sphere_exact_u(
    medium: &Medium,
    u_surface: f64,
    u_far: f64,
    radius: f64,
    r: f64,
    t: f64,
) -> Result<f64> {
    check_coordinate("radius", radius, 0.0)?;
    check_coordinate("r", r, radius)?;
    pt_exact_temperature(medium, u_surface, u_far, r - radius, t)
}
