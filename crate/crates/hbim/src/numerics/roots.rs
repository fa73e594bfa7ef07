//! Bracketed scalar root finding: secant steps inside a maintained
//! bisection bracket.
//!
//! The bracket invariant (g changes sign between the endpoints) is checked
//! up front and preserved every iteration, so the method cannot escape or
//! stall: whenever two consecutive steps fail to halve the bracket the next
//! step is forced to bisect.

use crate::error::{Error, Result};
use crate::numerics::Tolerance;

/// Find a root of `g` inside `[lo, hi]`.
///
/// Requires g(lo) and g(hi) to have opposite signs. Terminates when the
/// bracket width drops to `tol.absolute` (returning the bracket midpoint)
/// or an iterate hits g = 0 exactly. Fails with `NoBracket` when there is
/// no sign change and `NonConvergence` when `tol.max_iterations` runs out.
pub fn find_root<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64, tol: &Tolerance) -> Result<f64> {
    if !lo.is_finite() {
        return Err(Error::NonFinite { name: "lo", value: lo });
    }
    if !hi.is_finite() {
        return Err(Error::NonFinite { name: "hi", value: hi });
    }
    if hi <= lo {
        return Err(Error::OutOfDomain {
            name: "hi",
            value: hi,
            constraint: "hi > lo",
        });
    }

    let eval = |x: f64| -> Result<f64> {
        let v = g(x);
        if !v.is_finite() {
            return Err(Error::NonFinite {
                name: "g value",
                value: v,
            });
        }
        Ok(v)
    };

    let mut a = lo;
    let mut b = hi;
    let mut fa = eval(a)?;
    let mut fb = eval(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket {
            lo,
            hi,
            g_lo: fa,
            g_hi: fb,
        });
    }

    let mut since_bisect = 0u32;
    for _ in 0..tol.max_iterations {
        let width = b - a;
        if width <= tol.absolute {
            return Ok(0.5 * (a + b));
        }

        let secant = b - fb * width / (fb - fa);
        let x = if since_bisect < 2 && secant.is_finite() && secant > a && secant < b {
            since_bisect += 1;
            secant
        } else {
            since_bisect = 0;
            0.5 * (a + b)
        };

        let fx = eval(x)?;
        if fx == 0.0 {
            return Ok(x);
        }
        if fa.signum() != fx.signum() {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
    }

    Err(Error::NonConvergence {
        context: "bracketed root search",
        best: 0.5 * (a + b),
        error_estimate: b - a,
    })
}
