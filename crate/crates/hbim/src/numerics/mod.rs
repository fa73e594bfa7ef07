//! Self-contained numerical kernels: error functions, adaptive quadrature,
//! bracketed root finding and a fixed-step ODE integrator.
//!
//! Everything downstream (exact reference fields, exponent solving, error
//! functionals) is built on these four kernels, so they carry their own
//! reference-value tests.

mod ode;
mod quadrature;
mod roots;
mod special;

pub use ode::integrate_ode;
pub use quadrature::{integrate, integrate_full, Quadrature};
pub use roots::find_root;
pub use special::{erf, erfc, ierfc};

pub(crate) use special::{erf_raw, erfc_raw, ierfc_raw};

use crate::error::{Error, Result};

/// Convergence policy for the iterative kernels.
///
/// `absolute` and `relative` are combined into a single target scale by the
/// consumer (quadrature uses `max(absolute, relative * |estimate|)`, the
/// root finder stops on bracket width <= `absolute`). `max_iterations` is a
/// hard work budget: quadrature counts interval refinements against it, the
/// root finder and ODE stepper count iterations/steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
    pub max_iterations: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            absolute: 1e-10,
            relative: 1e-10,
            max_iterations: 1_000_000,
        }
    }
}

impl Tolerance {
    pub fn new(absolute: f64, relative: f64, max_iterations: usize) -> Result<Self> {
        if !(absolute > 0.0) || !absolute.is_finite() {
            return Err(Error::OutOfDomain {
                name: "absolute",
                value: absolute,
                constraint: "finite and > 0",
            });
        }
        if !(relative > 0.0) || !relative.is_finite() {
            return Err(Error::OutOfDomain {
                name: "relative",
                value: relative,
                constraint: "finite and > 0",
            });
        }
        if max_iterations == 0 {
            return Err(Error::OutOfDomain {
                name: "max_iterations",
                value: 0.0,
                constraint: ">= 1",
            });
        }
        Ok(Self {
            absolute,
            relative,
            max_iterations,
        })
    }

    /// Same value for the absolute and relative targets, default budget.
    pub fn from_scalar(tol: f64) -> Result<Self> {
        Self::new(tol, tol, Tolerance::default().max_iterations)
    }
}
