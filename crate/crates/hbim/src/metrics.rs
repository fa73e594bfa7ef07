//! Accuracy functionals for the power-law profiles.
//!
//! Three ways of scoring a profile live here:
//!
//! * the similarity-variable mismatch integral
//!   int_0^D [(1 - c X)^n - C(X)]^2 dX, with the comparator C either the
//!   literal erf(X) used in the published tables or the exact
//!   dimensionless field erfc(X/2)
//! * the Langford functional: the integrated squared residual of the heat
//!   equation itself under the approximate profile
//! * the accumulated-heat defect delta_q and relative accuracy ratios
//!
//! The literal table rows are reproduced digit for digit, including their
//! internal inconsistencies (a 3.65 row whose integrand uses 3.75, a
//! coefficient 0.332 where the depth law gives 0.3223, a comparator that
//! is not the exact field). The corrected mode exists so the physically
//! meaningful comparison is also available; neither mode is silently
//! swapped for the other.

use crate::error::{Error, Result};
use crate::numerics::{integrate_full, Tolerance};
use crate::numerics::{erf_raw, erfc_raw};
use crate::solver::ProblemClass;

const SQRT_PI: f64 = 1.7724538509055159;

/// Comparator field of a mismatch integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactComparator {
    /// erf(X), as in the published table rows.
    LiteralErf,
    /// erfc(X/2), the exact dimensionless temperature at X = x/sqrt(a t).
    CorrectedErfcHalf,
}

/// One row of a mismatch table: profile constants plus the comparator.
///
/// `n_label` is the row's nominal exponent; `exponent_used` is what the
/// integrand actually raises to (they differ in one published row).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MismatchSpec {
    pub n_label: f64,
    pub exponent_used: f64,
    /// Multiplier of X inside the profile base, nominally 1/(depth ratio).
    pub coefficient: f64,
    /// Integration limit D, nominally the depth ratio itself.
    pub upper_limit: f64,
    pub exact_comparator: ExactComparator,
}

impl MismatchSpec {
    /// Validating constructor. The profile must vanish near the upper
    /// limit: coefficient * upper_limit within 5% of 1.
    pub fn new(
        n_label: f64,
        exponent_used: f64,
        coefficient: f64,
        upper_limit: f64,
        exact_comparator: ExactComparator,
    ) -> Result<Self> {
        for (name, value) in [
            ("n_label", n_label),
            ("exponent_used", exponent_used),
            ("coefficient", coefficient),
            ("upper_limit", upper_limit),
        ] {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }
        if upper_limit <= 0.0 {
            return Err(Error::OutOfDomain {
                name: "upper_limit",
                value: upper_limit,
                constraint: "> 0",
            });
        }
        if exponent_used < 1.0 {
            return Err(Error::OutOfDomain {
                name: "exponent_used",
                value: exponent_used,
                constraint: ">= 1",
            });
        }
        let product = coefficient * upper_limit;
        if (product - 1.0).abs() > 0.05 {
            return Err(Error::InvalidInput(format!(
                "coefficient * upper_limit = {product}, must lie within 5% of 1 \
                 so the profile vanishes near the limit"
            )));
        }
        Ok(Self {
            n_label,
            exponent_used,
            coefficient,
            upper_limit,
            exact_comparator,
        })
    }

    /// Physically consistent row at exponent `n`: exact coefficient
    /// 1/sqrt(2n(n+1)), limit sqrt(2n(n+1)), comparator erfc(X/2).
    pub fn corrected(n: f64) -> Result<Self> {
        let ratio = depth_ratio_pt(n)?;
        Self::new(n, n, 1.0 / ratio, ratio, ExactComparator::CorrectedErfcHalf)
    }

    /// Literal-comparator row at exponent `n` but with the exact
    /// coefficient instead of a rounded one; settles what a table value
    /// would have been without coefficient rounding.
    pub fn literal_with_exact_coefficient(n: f64) -> Result<Self> {
        let ratio = depth_ratio_pt(n)?;
        Self::new(n, n, 1.0 / ratio, ratio, ExactComparator::LiteralErf)
    }
}

fn depth_ratio_pt(n: f64) -> Result<f64> {
    if !n.is_finite() {
        return Err(Error::NonFinite { name: "n", value: n });
    }
    if n <= 1.0 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n,
            constraint: "> 1",
        });
    }
    Ok((2.0 * n * (n + 1.0)).sqrt())
}

/// A computed mismatch integral with its quadrature error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub spec: MismatchSpec,
    pub value: f64,
    pub quadrature_error_estimate: f64,
}

/// int_0^D [(1 - c X)^n - C(X)]^2 dX at the default tolerance.
pub fn mismatch_integral(spec: &MismatchSpec) -> Result<ErrorReport> {
    mismatch_integral_with(spec, &Tolerance::default())
}

/// Mismatch integral under an explicit quadrature tolerance.
///
/// The base (1 - c X) is clamped at zero beyond its root so non-integer
/// exponents stay real; the integration range is split there because the
/// clamp leaves a kink the adaptive rule should not straddle.
pub fn mismatch_integral_with(spec: &MismatchSpec, tol: &Tolerance) -> Result<ErrorReport> {
    let c = spec.coefficient;
    let n = spec.exponent_used;
    let comparator = spec.exact_comparator;
    let f = move |x: f64| {
        let base = (1.0 - c * x).max(0.0);
        let approx = base.powf(n);
        let exact = match comparator {
            ExactComparator::LiteralErf => erf_raw(x),
            ExactComparator::CorrectedErfcHalf => erfc_raw(x / 2.0),
        };
        let d = approx - exact;
        d * d
    };
    let root = 1.0 / c;
    let (value, err) = if root < spec.upper_limit {
        let head = integrate_full(f, 0.0, root, tol)?;
        let tail = integrate_full(f, root, spec.upper_limit, tol)?;
        (head.value + tail.value, head.error_estimate + tail.error_estimate)
    } else {
        let whole = integrate_full(f, 0.0, spec.upper_limit, tol)?;
        (whole.value, whole.error_estimate)
    };
    Ok(ErrorReport {
        spec: *spec,
        value,
        quadrature_error_estimate: err,
    })
}

/// The six published mismatch rows, verbatim: rounded coefficients, a
/// 3.65 label over a 3.75 integrand, erf comparator throughout.
pub fn reference_error_rows() -> Vec<MismatchSpec> {
    [
        (1.75, 1.75, 0.332, 3.1),
        (2.0, 2.0, 0.288, 3.46),
        (3.0, 3.0, 0.204, 4.89),
        (3.65, 3.75, 0.167, 5.96),
        (4.0, 4.0, 0.158, 6.32),
        (20.0, 20.0, 0.034, 28.98),
    ]
    .into_iter()
    .map(|(label, n, c, d)| {
        MismatchSpec::new(label, n, c, d, ExactComparator::LiteralErf)
            .expect("reference rows are valid by construction")
    })
    .collect()
}

/// Result of evaluating the heat-equation residual functional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LangfordReport {
    /// E(t) = int_0^delta (d2T/dx2 - (1/a) dT/dt)^2 dx in the gauge
    /// a = 1, unit boundary drive, with `t` standing for a t.
    pub value: f64,
    /// Time-invariant form e_n = E * (a t)^{3/2} / amplitude^2.
    pub normalized: f64,
    /// False when the improper integral at the front failed to settle
    /// (it genuinely diverges as the exponent drops toward 1.5).
    pub converged: bool,
}

/// Integrated squared residual of the heat equation under the power-law
/// profile with its own depth law, for the fixed-temperature or
/// fixed-flux family.
///
/// Self-similarity collapses the integrand onto the unit interval in
/// v = 1 - x/delta, where the front v = 0 is an improper endpoint for
/// exponents below 2. The integral is summed over dyadic slivers
/// [2^-k-1, 2^-k] toward the front; E scales quadratically with the
/// boundary drive by construction, so the unit-drive value is returned.
pub fn langford_e(class: ProblemClass, n: f64, t: f64) -> Result<LangfordReport> {
    if !n.is_finite() {
        return Err(Error::NonFinite { name: "n", value: n });
    }
    if n <= 1.0 {
        return Err(Error::OutOfDomain {
            name: "n",
            value: n,
            constraint: "> 1",
        });
    }
    if !t.is_finite() {
        return Err(Error::NonFinite { name: "t", value: t });
    }
    if t <= 0.0 {
        return Err(Error::DegenerateTime { t });
    }
    let (shape, converged) = langford_shape(class, n);
    let c2 = match class {
        ProblemClass::Pt | ProblemClass::SpherePt => 2.0 * n * (n + 1.0),
        ProblemClass::Pf => n * (n + 1.0),
    };
    let normalized = shape / (c2 * c2.sqrt());
    // Unit drive: amplitude 1 for fixed temperature; delta/n for unit
    // flux-to-conductivity ratio in the fixed-flux family.
    let amplitude_sq = match class {
        ProblemClass::Pt | ProblemClass::SpherePt => 1.0,
        ProblemClass::Pf => c2 * t / (n * n),
    };
    Ok(LangfordReport {
        value: normalized * amplitude_sq / (t * t.sqrt()),
        normalized,
        converged,
    })
}

/// Shape integral over v in (0, 1] of the squared residual kernel,
/// before the C^3 normalization. Returns (sum, converged).
fn langford_shape(class: ProblemClass, n: f64) -> (f64, bool) {
    let c2 = match class {
        ProblemClass::Pt | ProblemClass::SpherePt => 2.0 * n * (n + 1.0),
        ProblemClass::Pf => n * (n + 1.0),
    };
    let h = move |v: f64| {
        let kernel = match class {
            // n^2 prefactor folded in so both classes share one shape sum.
            ProblemClass::Pt | ProblemClass::SpherePt => {
                n * ((n - 1.0) * v.powf(n - 2.0)
                    - (c2 / 2.0) * (1.0 - v) * v.powf(n - 1.0))
            }
            ProblemClass::Pf => {
                n * (n - 1.0) * v.powf(n - 2.0)
                    - (c2 / 2.0) * (v.powf(n) + n * (1.0 - v) * v.powf(n - 1.0))
            }
        };
        kernel * kernel
    };
    let sliver_tol = Tolerance {
        absolute: 1e-280,
        relative: 1e-11,
        max_iterations: 200_000,
    };
    // Near the front both kernels behave like n(n-1) v^(n-2), so the
    // squared integrand carries v^(2n-4): the improper integral converges
    // exactly when n > 1.5 (n = 1.5 log-diverges). That is analytic
    // knowledge of the kernel, so the flag is decided by it rather than
    // guessed from the term sequence, which dips and rebounds around the
    // kernel's zero crossing.
    let tail_converges = n > 1.5;
    let max_slivers = if tail_converges { 1000 } else { 64 };
    let mut sum = 0.0;
    let mut hi = 1.0f64;
    for k in 0..max_slivers {
        let lo = hi / 2.0;
        let term = match integrate_full(&h, lo, hi, &sliver_tol) {
            Ok(q) => q.value,
            // Overflow or refusal near the front: report the partial sum
            // as non-converged rather than fail the whole metric.
            Err(_) => return (sum, false),
        };
        sum += term;
        if tail_converges && k >= 8 && term <= 1e-13 * sum {
            return (sum, true);
        }
        hi = lo;
    }
    // Divergent tail: the partial sum over the first slivers is still a
    // representative magnitude. Convergent tails that exhaust the sliver
    // budget (n barely above 1.5) are reported unconverged as well.
    (sum, false)
}

/// Dimensionless accumulated-heat defect of the fixed-temperature family
/// in units rho Cp dT sqrt(a t): sqrt(2n(n+1))/(n+1) - 2/sqrt(pi).
pub fn delta_q(n: f64) -> Result<f64> {
    let ratio = depth_ratio_pt(n)?;
    Ok(ratio / (n + 1.0) - 2.0 / SQRT_PI)
}

/// Relative accuracy penalty of `e_a` against baseline `e_b`:
/// (e_a - e_b)/e_b.
pub fn accuracy_ratio(e_a: f64, e_b: f64) -> Result<f64> {
    for (name, value) in [("e_a", e_a), ("e_b", e_b)] {
        if !value.is_finite() {
            return Err(Error::NonFinite { name, value });
        }
    }
    if e_b <= 0.0 {
        return Err(Error::OutOfDomain {
            name: "e_b",
            value: e_b,
            constraint: "> 0",
        });
    }
    Ok((e_a - e_b) / e_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Quadrature oracle values for the six literal rows, frozen from a
    // 40-digit evaluation of the same integrals.
    const ROW_ORACLE: [f64; 6] = [
        1.64684079094408,
        1.91332203011929,
        3.20756932968624,
        4.20960486314676,
        4.55678644712095,
        26.9550780943847,
    ];
    // The published row values; row 1 prints 1.64674 against a computed
    // 1.64684 (0.006% apart, inside the 1% gate either way).
    const ROW_PRINTED: [f64; 6] = [1.64674, 1.91332, 3.207569, 4.20960, 4.5567, 26.9550];

    const N_PT: f64 = 1.7519383938841087;
    const N_PF: f64 = 3.6597923663254877;

    #[test]
    fn literal_rows_match_the_printed_table() {
        let rows = reference_error_rows();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[3].n_label, 3.65);
        assert_eq!(rows[3].exponent_used, 3.75);
        assert_eq!(rows[0].upper_limit, 3.1);
        let mut values = Vec::new();
        for (row, (oracle, printed)) in rows
            .iter()
            .zip(ROW_ORACLE.iter().zip(ROW_PRINTED.iter()))
        {
            let report = mismatch_integral(row).unwrap();
            println!(
                "n_label {:>5}: E = {:.12e} (oracle {:.12e}, printed {})",
                row.n_label, report.value, oracle, printed
            );
            assert!(
                ((report.value - oracle) / oracle).abs() <= 1e-9,
                "row {} drifted from frozen oracle",
                row.n_label
            );
            assert!(((report.value - printed) / printed).abs() <= 0.01);
            assert!(report.quadrature_error_estimate <= 1e-8 * report.value.max(1.0));
            values.push(report.value);
        }
        // Printed ordering is strict: the 1.75 row is the smallest.
        for pair in values.windows(2) {
            assert!(pair[0] < pair[1], "ordering violated: {pair:?}");
        }
    }

    #[test]
    fn exact_coefficient_variant_is_a_frozen_regression() {
        // Same n = 1.75 row but with coefficient 1/sqrt(2n(n+1)) =
        // 0.32233 and the limit at the true depth ratio. This does NOT
        // land within 1% of the printed 1.64674, which settles that the
        // printed row came from the rounded 0.332.
        let spec = MismatchSpec::literal_with_exact_coefficient(1.75).unwrap();
        assert!((spec.coefficient - 0.32233).abs() <= 1e-5);
        let report = mismatch_integral(&spec).unwrap();
        let frozen = 1.6104392793923727;
        assert!(
            ((report.value - frozen) / frozen).abs() <= 1e-9,
            "value {} vs frozen {frozen}",
            report.value
        );
        assert!(((report.value - 1.64674f64) / 1.64674).abs() > 0.01);
    }

    #[test]
    fn corrected_mode_scores_the_optimum_best() {
        let at = |n: f64| {
            mismatch_integral(&MismatchSpec::corrected(n).unwrap())
                .unwrap()
                .value
        };
        let best = at(N_PT);
        let frozen = 0.001335439290979974;
        assert!(((best - frozen) / frozen).abs() <= 1e-8, "corrected at n* = {best}");
        for n in [3.0, 4.0, 20.0] {
            let other = at(n);
            println!("corrected mismatch n = {n}: {other:.6e} (n*: {best:.6e})");
            assert!(best < other, "optimum not best against n = {n}");
        }
        // n = 2 sits marginally below the erfc-based optimum; that is a
        // real feature of this comparator, not asserted away.
        let frozen_two = 0.0013309547461580924;
        let two = at(2.0);
        assert!(((two - frozen_two) / frozen_two).abs() <= 1e-8);
    }

    #[test]
    fn mismatch_is_tolerance_converged() {
        let spec = reference_error_rows()[1];
        let loose = mismatch_integral_with(&spec, &Tolerance::from_scalar(1e-10).unwrap())
            .unwrap()
            .value;
        let tight = mismatch_integral_with(&spec, &Tolerance::from_scalar(5e-11).unwrap())
            .unwrap()
            .value;
        assert!(
            ((loose - tight) / tight).abs() <= 1e-9,
            "not converged: {loose} vs {tight}"
        );
    }

    #[test]
    fn spec_validation_rejects_inconsistent_rows() {
        assert!(MismatchSpec::new(2.0, 2.0, 0.288, -1.0, ExactComparator::LiteralErf).is_err());
        // Profile nowhere near zero at the limit.
        assert!(MismatchSpec::new(2.0, 2.0, 0.4, 3.46, ExactComparator::LiteralErf).is_err());
        assert!(MismatchSpec::new(2.0, 0.5, 0.288, 3.46, ExactComparator::LiteralErf).is_err());
        assert!(MismatchSpec::corrected(1.0).is_err());
    }

    #[test]
    fn langford_normalized_matches_frozen_values() {
        // (class, n, e_n) frozen from the closed-form reduction of the
        // shape integral at 40-digit precision.
        let cases = [
            // 1.6 sits in the slowly-converging band just above the n = 1.5
            // front singularity; the sliver sum must still close it out.
            (ProblemClass::Pt, 1.6, 0.115170020561),
            (ProblemClass::Pt, 1.75, 0.0386021758271754),
            (ProblemClass::Pt, 2.0, 0.0192450089729875),
            (ProblemClass::Pt, 2.5, 0.0182307935203535),
            (ProblemClass::Pt, 3.0, 0.0233284737407922),
            (ProblemClass::Pt, 4.0, 0.0335301821744838),
            (ProblemClass::Pt, 20.0, 0.073992664964194),
            (ProblemClass::Pt, N_PT, 0.038248758095813478),
            (ProblemClass::Pf, 2.0, 0.0544331053951817),
            (ProblemClass::Pf, 4.0, 0.00255550625999976),
            (ProblemClass::Pf, N_PF, 0.0019222926285983097),
        ];
        for (class, n, frozen) in cases {
            let report = langford_e(class, n, 1.0).unwrap();
            println!("{class:?} n = {n}: e_n = {:.12e} (frozen {frozen:.12e})", report.normalized);
            assert!(report.converged, "not converged at n = {n}");
            assert!(
                ((report.normalized - frozen) / frozen).abs() <= 1e-6,
                "{class:?} n = {n}: {} vs {frozen}",
                report.normalized
            );
        }
        // Residual is smallest near n = 2.5, far from the 20 extreme.
        let mid = langford_e(ProblemClass::Pt, 2.5, 1.0).unwrap();
        let extreme = langford_e(ProblemClass::Pt, 20.0, 1.0).unwrap();
        assert!(mid.normalized < extreme.normalized);
    }

    #[test]
    fn langford_time_scaling() {
        for class in [ProblemClass::Pt, ProblemClass::Pf] {
            let e_n: Vec<f64> = [0.1, 1.0, 10.0]
                .iter()
                .map(|&t| langford_e(class, 2.0, t).unwrap().normalized)
                .collect();
            for pair in e_n.windows(2) {
                assert!(
                    ((pair[0] - pair[1]) / pair[1]).abs() <= 1e-6,
                    "{class:?}: e_n not time-invariant: {pair:?}"
                );
            }
        }
        // Fixed-temperature E follows the 3/2 power of time.
        let e1 = langford_e(ProblemClass::Pt, 3.0, 0.5).unwrap().value;
        let e2 = langford_e(ProblemClass::Pt, 3.0, 5.0).unwrap().value;
        let want = (5.0f64 / 0.5).powf(1.5);
        assert!(((e1 / e2 - want) / want).abs() <= 1e-6, "ratio {}", e1 / e2);
        // Fixed-flux report is consistent with its growing amplitude.
        let t = 3.7;
        let r = langford_e(ProblemClass::Pf, 2.5, t).unwrap();
        let c2 = 2.5 * 3.5;
        let amp_sq = c2 * t / (2.5 * 2.5);
        assert!(
            (r.value - r.normalized * amp_sq / (t * t.sqrt())).abs() <= 1e-15 * r.value.abs(),
        );
    }

    #[test]
    fn langford_flags_the_divergent_regime() {
        let report = langford_e(ProblemClass::Pt, 1.3, 1.0).unwrap();
        assert!(!report.converged, "front singularity must be flagged");
        assert!(report.value.is_finite());
        let fine = langford_e(ProblemClass::Pt, 1.75, 1.0).unwrap();
        assert!(fine.converged);
        assert!(langford_e(ProblemClass::Pt, 1.0, 1.0).is_err());
        assert!(langford_e(ProblemClass::Pt, 2.0, 0.0).is_err());
    }

    #[test]
    fn heat_defect_reference_points() {
        // Hand arithmetic at n = 2: sqrt(12)/3 - 2/sqrt(pi).
        let cases = [
            (1.2, -0.083913231361325545),
            (1.5, -0.032934052085180347),
            (2.0, 0.026321371283738955),
            (2.5, 0.066849442238881066),
            (3.0, 0.096365704296076475),
        ];
        for (n, frozen) in cases {
            let v = delta_q(n).unwrap();
            assert!((v - frozen).abs() <= 1e-15, "delta_q({n}) = {v}");
        }
        let at_star = delta_q(2.0 / (std::f64::consts::PI - 2.0)).unwrap();
        assert!(at_star.abs() <= 1e-15, "defect at the closed form: {at_star:e}");
        assert!(delta_q(1.0).is_err());
    }

    #[test]
    fn accuracy_ratio_reference_points() {
        let r = accuracy_ratio(1.91332, 1.64674).unwrap();
        assert!((r - 0.16188).abs() <= 2e-5, "ratio {r}");
        assert_eq!(accuracy_ratio(3.5, 3.5).unwrap(), 0.0);
        assert_eq!(accuracy_ratio(2.0, 1.0).unwrap(), 1.0);
        assert!(accuracy_ratio(1.0, 0.0).is_err());
        // Full-precision ratio of the two computed integrals.
        let rows = reference_error_rows();
        let e175 = mismatch_integral(&rows[0]).unwrap().value;
        let e2 = mismatch_integral(&rows[1]).unwrap().value;
        let full = accuracy_ratio(e2, e175).unwrap();
        let frozen = 0.16181360131505818;
        assert!((full - frozen).abs() <= 1e-9, "full ratio {full}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn mismatch_is_nonnegative_and_finite(
            n in 1.2f64..25.0,
            wobble in 0.96f64..1.04,
            literal in proptest::bool::ANY,
        ) {
            let ratio = (2.0 * n * (n + 1.0)).sqrt();
            let comparator = if literal {
                ExactComparator::LiteralErf
            } else {
                ExactComparator::CorrectedErfcHalf
            };
            let spec = MismatchSpec::new(n, n, wobble / ratio, ratio, comparator).unwrap();
            let report = mismatch_integral(&spec).unwrap();
            prop_assert!(report.value.is_finite());
            prop_assert!(report.value >= 0.0);
        }

        #[test]
        fn heat_defect_increases_with_the_exponent(
            n in 1.05f64..30.0,
            step in 0.01f64..2.0,
        ) {
            let a = delta_q(n).unwrap();
            let b = delta_q(n + step).unwrap();
            prop_assert!(b > a, "delta_q not increasing at n = {n}");
        }
    }
}
