//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while evaluating profiles, solving for
/// exponents, or running the supporting numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input that must be finite was NaN or infinite.
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// An input violated a documented domain constraint.
    #[error("{name} = {value} out of domain ({constraint})")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// A field was requested at a time where it is undefined.
    #[error("time t = {t} is degenerate here; the field requires t > 0")]
    DegenerateTime { t: f64 },

    /// A root finder was handed an interval without a sign change.
    #[error("no sign change on [{lo}, {hi}]: g(lo) = {g_lo:e}, g(hi) = {g_hi:e}")]
    NoBracket {
        lo: f64,
        hi: f64,
        g_lo: f64,
        g_hi: f64,
    },

    /// An iterative routine ran out of budget before meeting its tolerance.
    /// `best` is the estimate at abort and `error_estimate` how far off it
    /// may still be.
    #[error("{context} did not converge; best estimate {best:e} (error estimate {error_estimate:e})")]
    NonConvergence {
        context: &'static str,
        best: f64,
        error_estimate: f64,
    },

    /// An ODE trajectory left the representable range.
    #[error("ODE state became non-finite at t = {t}")]
    Divergence { t: f64 },

    /// The over-specified solution is only valid during the heat-up stage.
    #[error("t = {t} exceeds the heat-up stage limit t_h = {t_h}")]
    StageExceeded { t: f64, t_h: f64 },

    /// Two constraint curves never intersect on the solver bracket.
    #[error("constraint curves {c1} and {c2} do not cross on the search bracket")]
    NoCrossing { c1: String, c2: String },

    /// Two constraint curves are the same curve; their intersection is not
    /// an isolated point and no exponent can be solved from the pair.
    #[error("constraint curves {c1} and {c2} coincide; no isolated intersection")]
    CoincidentConstraints { c1: String, c2: String },

    /// A structurally invalid input (wrong problem variant, empty list, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
