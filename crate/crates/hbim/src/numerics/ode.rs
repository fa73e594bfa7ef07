//! Fixed-step classical Runge-Kutta (RK4) for scalar initial value
//! problems. Used as an independent cross-check on closed-form depth laws,
//! so it deliberately avoids adaptivity: a fixed grid makes the comparison
//! reproducible bit for bit.

use crate::error::{Error, Result};

/// Integrate dy/dt = rhs(t, y) from `t0` to `t1` with `steps` uniform RK4
/// steps, returning y(t1).
pub fn integrate_ode<F: Fn(f64, f64) -> f64>(
    rhs: F,
    y0: f64,
    t0: f64,
    t1: f64,
    steps: usize,
) -> Result<f64> {
    if !y0.is_finite() {
        return Err(Error::NonFinite { name: "y0", value: y0 });
    }
    if !t0.is_finite() {
        return Err(Error::NonFinite { name: "t0", value: t0 });
    }
    if !t1.is_finite() {
        return Err(Error::NonFinite { name: "t1", value: t1 });
    }
    if t1 < t0 {
        return Err(Error::OutOfDomain {
            name: "t1",
            value: t1,
            constraint: "t1 >= t0",
        });
    }
    if steps == 0 {
        return Err(Error::OutOfDomain {
            name: "steps",
            value: 0.0,
            constraint: ">= 1",
        });
    }
    if t0 == t1 {
        return Ok(y0);
    }

    let h = (t1 - t0) / steps as f64;
    let mut t = t0;
    let mut y = y0;
    for i in 0..steps {
        let k1 = rhs(t, y);
        let k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
        let k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
        let k4 = rhs(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t0 + (i + 1) as f64 * h;
        if !y.is_finite() {
            return Err(Error::Divergence { t });
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_growth() {
        let y = integrate_ode(|_, y| y, 1.0, 0.0, 1.0, 1000).unwrap();
        assert!((y - std::f64::consts::E).abs() <= 1e-11, "got {y}");
    }

    #[test]
    fn constant_rhs_is_exact() {
        let y = integrate_ode(|_, _| 2.5, 1.0, 0.0, 4.0, 7).unwrap();
        assert!((y - 11.0).abs() <= 1e-12);
    }

    #[test]
    fn fourth_order_convergence() {
        // Error should shrink by ~16x when the step halves.
        let f = |t: f64, y: f64| t * y;
        let exact = (0.5f64).exp(); // y' = t y, y(0) = 1, y(1) = e^(1/2)
        let e1 = (integrate_ode(f, 1.0, 0.0, 1.0, 20).unwrap() - exact).abs();
        let e2 = (integrate_ode(f, 1.0, 0.0, 1.0, 40).unwrap() - exact).abs();
        let ratio = e1 / e2;
        println!("step-halving error ratio: {ratio}");
        assert!(ratio > 12.0 && ratio < 20.0, "ratio {ratio}");
    }

    #[test]
    fn zero_span_returns_initial_value() {
        assert_eq!(integrate_ode(|_, y| y, 3.0, 2.0, 2.0, 10).unwrap(), 3.0);
    }

    #[test]
    fn blow_up_is_reported_as_divergence() {
        // y' = y^2 with y(0) = 1 blows up at t = 1.
        let err = integrate_ode(|_, y| y * y, 1.0, 0.0, 2.0, 50).unwrap_err();
        assert!(matches!(err, Error::Divergence { .. }), "{err:?}");
    }

    #[test]
    fn invalid_arguments() {
        assert!(integrate_ode(|_, y| y, 1.0, 0.0, -1.0, 10).is_err());
        assert!(integrate_ode(|_, y| y, 1.0, 0.0, 1.0, 0).is_err());
        assert!(integrate_ode(|_, y| y, f64::NAN, 0.0, 1.0, 10).is_err());
    }
}
