//! Homogeneous material properties.

use crate::error::{Error, Result};

/// Thermal properties of a homogeneous medium.
///
/// Invariants (enforced at construction): conductivity, density and heat
/// capacity are finite and positive, and the stored diffusivity equals
/// conductivity / (density * heat_capacity) to within 1e-12 relative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medium {
    conductivity: f64,
    density: f64,
    heat_capacity: f64,
    diffusivity: f64,
}

impl Medium {
    /// Build from conductivity, density and specific heat capacity; the
    /// diffusivity is derived.
    pub fn new(conductivity: f64, density: f64, heat_capacity: f64) -> Result<Self> {
        check_positive("conductivity", conductivity)?;
        check_positive("density", density)?;
        check_positive("heat_capacity", heat_capacity)?;
        Ok(Self {
            conductivity,
            density,
            heat_capacity,
            diffusivity: conductivity / (density * heat_capacity),
        })
    }

    /// Build with an explicitly supplied diffusivity, which must be
    /// consistent with the other three properties.
    pub fn with_diffusivity(
        conductivity: f64,
        density: f64,
        heat_capacity: f64,
        diffusivity: f64,
    ) -> Result<Self> {
        let m = Self::new(conductivity, density, heat_capacity)?;
        check_positive("diffusivity", diffusivity)?;
        if (diffusivity - m.diffusivity).abs() > 1e-12 * m.diffusivity {
            return Err(Error::InvalidInput(format!(
                "diffusivity {diffusivity:e} inconsistent with conductivity/(density*heat_capacity) = {:e}",
                m.diffusivity
            )));
        }
        Ok(Self { diffusivity, ..m })
    }

    pub fn conductivity(&self) -> f64 {
        self.conductivity
    }

    pub fn density(&self) -> f64 {
        self.density
    }

    pub fn heat_capacity(&self) -> f64 {
        self.heat_capacity
    }

    pub fn diffusivity(&self) -> f64 {
        self.diffusivity
    }

    /// Volumetric heat capacity density * heat_capacity.
    pub fn volumetric_capacity(&self) -> f64 {
        self.density * self.heat_capacity
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NonFinite { name, value });
    }
    if value <= 0.0 {
        return Err(Error::OutOfDomain {
            name,
            value,
            constraint: "> 0",
        });
    }
    Ok(())
}
