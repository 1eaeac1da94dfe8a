//! Explicit bounds on |ζ(σ+it)| across the strip ½ ≤ σ ≤ 1+δ.
//!
//! Phragmén–Lindelöf interpolation of line bounds |ζ(½+it)| ≤ k₁t^k₂(log t)^k₃
//! and |ζ(1+it)| ≤ k₄(log t)^k₅ yields two regional bounds that stitch into a
//! uniform one when two rebalancing conditions hold. The inflation factors
//! a₀, a₁ convert bounds phrased in |Q₀+s| into bounds in t.

use crate::error::{Error, Result};
use crate::zeta::{zeta_real, Tolerance};

/// Slack for σ-interval endpoint checks, absorbing rounding at the endpoints.
const SIGMA_SLACK: f64 = 1e-12;

/// Minimal height for the inflation factors to stay small.
pub const MIN_T0: f64 = 1e3;

/// The sextuple (k₁..k₅, Q₀) describing the line bounds fed to the strip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthParams {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub k4: f64,
    pub k5: f64,
    pub q0: f64,
}

impl GrowthParams {
    /// Exponential-sum line bounds: |ζ(½+it)| ≤ 0.732 t^{1/6} log t and
    /// |ζ(1+it)| ≤ ¾ log t.
    pub const fn subconvexity() -> Self {
        GrowthParams {
            k1: 0.732,
            k2: 1.0 / 6.0,
            k3: 1.0,
            k4: 0.75,
            k5: 1.0,
            q0: 5.0,
        }
    }

    /// Approximate-functional-equation line bound |ζ(½+it)| ≤ 4(2π)^{-1/4} t^{1/4},
    /// same 1-line bound, same Q₀ for comparability.
    pub fn convexity() -> Self {
        GrowthParams {
            k1: 4.0 / (2.0 * std::f64::consts::PI).powf(0.25),
            k2: 0.25,
            k3: 0.0,
            k4: 0.75,
            k5: 1.0,
            q0: 5.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.k1 > 0.0 && self.k4 > 0.0) {
            return Err(Error::domain("growth params: k1 and k4 must be positive"));
        }
        if self.k2 < 0.0 || self.k3 < 0.0 || self.k5 < 0.0 || self.q0 < 0.0 {
            return Err(Error::domain("growth params: k2, k3, k5, Q0 must be non-negative"));
        }
        Ok(())
    }
}

/// Strip shape: right edge at σ = 1+δ and the reference height t₀ at which
/// the inflation factors are evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripConfig {
    pub delta: f64,
    pub t0: f64,
}

impl StripConfig {
    pub fn new(delta: f64, t0: f64) -> Result<Self> {
        if !(delta > 0.0 && delta <= 2.0) {
            return Err(Error::domain(format!(
                "strip config: delta must lie in (0, 2], got {delta}"
            )));
        }
        if !(t0 >= MIN_T0) {
            return Err(Error::domain(format!(
                "strip config: t0 must be >= 1e3, got {t0}"
            )));
        }
        Ok(StripConfig { delta, t0 })
    }
}

/// a₀ = (σ+Q₀)/(2t² log t) + π/(2 log t) + π(σ+Q₀)²/(4t log²t).
pub fn a0_factor(sigma: f64, q0: f64, t: f64) -> Result<f64> {
    if !(t >= MIN_T0) {
        return Err(Error::domain(format!("a0_factor: t must be >= 1e3, got {t}")));
    }
    if sigma + q0 < 0.0 {
        return Err(Error::domain("a0_factor: sigma + Q0 must be non-negative"));
    }
    let s = sigma + q0;
    let ln_t = t.ln();
    Ok(s / (2.0 * t * t * ln_t)
        + std::f64::consts::PI / (2.0 * ln_t)
        + std::f64::consts::PI * s * s / (4.0 * t * ln_t * ln_t))
}

/// a₁ = (σ+Q₀)/t.
pub fn a1_factor(sigma: f64, q0: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("a1_factor: t must be positive, got {t}")));
    }
    Ok((sigma + q0) / t)
}

/// The multiplicative corrections α₁, α₂ built from a₀, a₁ at σ = 1+δ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InflationFactors {
    pub a0: f64,
    pub a1: f64,
    pub alpha1: f64,
    pub alpha2: f64,
}

impl InflationFactors {
    pub fn compute(params: &GrowthParams, cfg: &StripConfig) -> Result<Self> {
        params.validate()?;
        let a0 = a0_factor(1.0 + cfg.delta, params.q0, cfg.t0)?;
        let a1 = a1_factor(1.0 + cfg.delta, params.q0, cfg.t0)?;
        let alpha1 = (1.0 + a1).powf(params.k2 + 1.0) * (1.0 + a0).powf(params.k3 + params.k5);
        let alpha2 = (1.0 + a1) * (1.0 + a0).powf(params.k5);
        Ok(InflationFactors { a0, a1, alpha1, alpha2 })
    }
}

fn check_t_at_least(t: f64, t0: f64, what: &str) -> Result<()> {
    if t < t0 {
        return Err(Error::domain(format!("{what}: t ({t}) must be >= t0 ({t0})")));
    }
    Ok(())
}

/// Regional bound on |ζ(σ+it)| for σ ∈ [½, 1]:
/// α₁ k₁^{2(1-σ)} k₄^{2(σ-½)} t^{2k₂(1-σ)} (log t)^{2(k₃(1-σ)+k₅(σ-½))}.
pub fn bound_left(params: &GrowthParams, cfg: &StripConfig, sigma: f64, t: f64) -> Result<f64> {
    if sigma < 0.5 - SIGMA_SLACK || sigma > 1.0 + SIGMA_SLACK {
        return Err(Error::domain(format!(
            "bound_left: sigma must lie in [1/2, 1], got {sigma}"
        )));
    }
    check_t_at_least(t, cfg.t0, "bound_left")?;
    let f = InflationFactors::compute(params, cfg)?;
    let ln_t = t.ln();
    Ok(f.alpha1
        * params.k1.powf(2.0 * (1.0 - sigma))
        * params.k4.powf(2.0 * (sigma - 0.5))
        * t.powf(2.0 * params.k2 * (1.0 - sigma))
        * ln_t.powf(2.0 * (params.k3 * (1.0 - sigma) + params.k5 * (sigma - 0.5))))
}

/// Regional bound on |ζ(σ+it)| for σ ∈ [1, 1+δ]:
/// α₂ k₄^{(1+δ-σ)/δ} ζ(1+δ)^{(σ-1)/δ} (log t)^{k₅(1+δ-σ)/δ}.
pub fn bound_right(params: &GrowthParams, cfg: &StripConfig, sigma: f64, t: f64) -> Result<f64> {
    if sigma < 1.0 - SIGMA_SLACK || sigma > 1.0 + cfg.delta + SIGMA_SLACK {
        return Err(Error::domain(format!(
            "bound_right: sigma must lie in [1, 1+delta], got {sigma}"
        )));
    }
    check_t_at_least(t, cfg.t0, "bound_right")?;
    let f = InflationFactors::compute(params, cfg)?;
    let zeta_edge = zeta_real(1.0 + cfg.delta, Tolerance::default())?.value;
    let ln_t = t.ln();
    let frac_right = (1.0 + cfg.delta - sigma) / cfg.delta;
    let frac_left = (sigma - 1.0) / cfg.delta;
    Ok(f.alpha2
        * params.k4.powf(frac_right)
        * zeta_edge.powf(frac_left)
        * ln_t.powf(params.k5 * frac_right))
}

/// The condition that failed when a uniform bound does not apply at t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedCondition {
    /// t^{k₂}(log t)^{k₃-k₅} ≥ k₄/k₁ fails.
    EdgeRatio,
    /// t ≥ exp[(ζ(1+δ)/k₄)^{1/k₅}] (the threshold) fails.
    HeightThreshold,
    /// t is below the reference height t₀.
    BelowT0,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionViolation {
    pub condition: FailedCondition,
    /// Height at which the bound was requested.
    pub t: f64,
    /// Smallest height accepted by the failed condition, when expressible.
    pub required: f64,
}

impl std::fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.condition {
            FailedCondition::EdgeRatio => write!(
                f,
                "edge-ratio condition t^k2 (log t)^(k3-k5) >= k4/k1 fails at t = {:e}",
                self.t
            ),
            FailedCondition::HeightThreshold => write!(
                f,
                "height threshold fails at t = {:e} (needs t >= {:e})",
                self.t, self.required
            ),
            FailedCondition::BelowT0 => write!(
                f,
                "t = {:e} is below the reference height t0 = {:e}",
                self.t, self.required
            ),
        }
    }
}

/// Outcome of a conditional strip bound: either the bound's value or a report
/// of which validity condition failed. The violation is a value, not an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StripBound {
    Holds(f64),
    Violated(ConditionViolation),
}

impl StripBound {
    pub fn value(&self) -> Option<f64> {
        match self {
            StripBound::Holds(v) => Some(*v),
            StripBound::Violated(_) => None,
        }
    }
}

/// Uniform bound α₁ k₁ t^{k₂} (log t)^{k₃} over σ ∈ [½, 1+δ], valid only when
/// both stitching conditions hold at t.
pub fn uniform_bound(params: &GrowthParams, cfg: &StripConfig, sigma: f64, t: f64) -> Result<StripBound> {
    if sigma < 0.5 - SIGMA_SLACK || sigma > 1.0 + cfg.delta + SIGMA_SLACK {
        return Err(Error::domain(format!(
            "uniform_bound: sigma must lie in [1/2, 1+delta], got {sigma}"
        )));
    }
    check_t_at_least(t, cfg.t0, "uniform_bound")?;
    let f = InflationFactors::compute(params, cfg)?;
    let ln_t = t.ln();

    if t.powf(params.k2) * ln_t.powf(params.k3 - params.k5) < params.k4 / params.k1 {
        return Ok(StripBound::Violated(ConditionViolation {
            condition: FailedCondition::EdgeRatio,
            t,
            required: f64::NAN,
        }));
    }
    let zeta_edge = zeta_real(1.0 + cfg.delta, Tolerance::default())?.value;
    // Log form of t >= exp[(zeta(1+delta)/k4)^{1/k5}]; for k5 = 0 the condition
    // degenerates to zeta(1+delta) <= k4.
    let threshold_ok = if params.k5 > 0.0 {
        let required = ((zeta_edge / params.k4).powf(1.0 / params.k5)).exp();
        if t >= required {
            true
        } else {
            return Ok(StripBound::Violated(ConditionViolation {
                condition: FailedCondition::HeightThreshold,
                t,
                required,
            }));
        }
    } else {
        zeta_edge <= params.k4
    };
    if !threshold_ok {
        return Ok(StripBound::Violated(ConditionViolation {
            condition: FailedCondition::HeightThreshold,
            t,
            required: f64::INFINITY,
        }));
    }
    Ok(StripBound::Holds(f.alpha1 * params.k1 * t.powf(params.k2) * ln_t.powf(params.k3)))
}

/// Sub-convexity specialization of the uniform bound with its explicit
/// threshold t ≥ max{1.16, exp[4ζ(1+δ)/3]}, enforced verbatim.
pub fn corollary_bound(delta: f64, t0: f64, t: f64) -> Result<StripBound> {
    if !(delta > 0.0) {
        return Err(Error::domain(format!(
            "corollary_bound: delta must be positive, got {delta}"
        )));
    }
    let cfg = StripConfig::new(delta, t0)?;
    let params = GrowthParams::subconvexity();
    let zeta_edge = zeta_real(1.0 + delta, Tolerance::default())?.value;
    let threshold = (4.0 * zeta_edge / 3.0).exp().max(1.16);
    if t < threshold {
        return Ok(StripBound::Violated(ConditionViolation {
            condition: FailedCondition::HeightThreshold,
            t,
            required: threshold,
        }));
    }
    if t < t0 {
        return Ok(StripBound::Violated(ConditionViolation {
            condition: FailedCondition::BelowT0,
            t,
            required: t0,
        }));
    }
    let f = InflationFactors::compute(&params, &cfg)?;
    Ok(StripBound::Holds(
        0.732 * (1.0 + f.a1).powf(7.0 / 6.0) * (1.0 + f.a0).powi(2) * t.powf(1.0 / 6.0) * t.ln(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SC: GrowthParams = GrowthParams::subconvexity();

    fn cfg(delta: f64, t0: f64) -> StripConfig {
        StripConfig::new(delta, t0).unwrap()
    }

    #[test]
    fn presets_match_reference_values() {
        assert_eq!(SC.k1, 0.732);
        assert_eq!(SC.k2, 1.0 / 6.0);
        assert_eq!(SC.k3, 1.0);
        assert_eq!(SC.k4, 0.75);
        assert_eq!(SC.k5, 1.0);
        assert_eq!(SC.q0, 5.0);
        let c = GrowthParams::convexity();
        assert!((c.k1 - 2.5264751109842587).abs() < 1e-15);
        assert_eq!(c.k2, 0.25);
        assert_eq!(c.k3, 0.0);
        assert_eq!(c.k4, 0.75);
        assert_eq!(c.k5, 1.0);
        assert_eq!(c.q0, 5.0);
    }

    #[test]
    fn a0_matches_closed_form_oracle() {
        // Frozen high-precision evaluation of the three-term sum.
        let v = a0_factor(1.148, 5.0, 1e5).unwrap();
        assert!((v - 0.13643987509212802).abs() < 1e-15, "{v}");
    }

    #[test]
    fn a0_reduces_to_middle_term_at_zero_numerator() {
        let t = 31_622.0;
        let v = a0_factor(0.0, 0.0, t).unwrap();
        assert_eq!(v, std::f64::consts::PI / (2.0 * t.ln()));
    }

    #[test]
    fn a0_dominated_by_middle_term_at_large_t() {
        let v = a0_factor(1.1, 5.0, 1e8).unwrap();
        let mid = std::f64::consts::PI / (2.0 * 1e8f64.ln());
        assert!((v - mid).abs() < 1e-6);
    }

    #[test]
    fn a0_rejects_small_t() {
        assert!(matches!(a0_factor(1.0, 5.0, 999.0), Err(Error::Domain(_))));
    }

    #[test]
    fn a1_examples() {
        assert_eq!(a1_factor(0.0, 0.0, 1e5).unwrap(), 0.0);
        assert!((a1_factor(1.148, 5.0, 1e5).unwrap() - 6.148e-5).abs() < 1e-19);
        assert!((a1_factor(1.1, 5.0, 1e6).unwrap() - 6.1e-6).abs() < 1e-19);
        assert!(matches!(a1_factor(1.0, 5.0, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_left_at_half_matches_closed_form() {
        let c = cfg(0.148, 1e5);
        let f = InflationFactors::compute(&SC, &c).unwrap();
        let t = 1e5;
        let v = bound_left(&SC, &c, 0.5, t).unwrap();
        let expect = f.alpha1 * 0.732 * t.powf(1.0 / 6.0) * t.ln();
        assert!((v - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn bound_left_at_one_cancels_k1_and_t() {
        let c = cfg(0.148, 1e5);
        let f = InflationFactors::compute(&SC, &c).unwrap();
        for t in [1e5, 3e6] {
            let v = bound_left(&SC, &c, 1.0, t).unwrap();
            let expect = f.alpha1 * SC.k4 * t.ln().powf(SC.k5);
            assert!((v - expect).abs() < 1e-12 * expect);
        }
    }

    #[test]
    fn bound_left_identity_parameters_give_one() {
        let id = GrowthParams { k1: 1.0, k2: 0.0, k3: 0.0, k4: 1.0, k5: 0.0, q0: 0.0 };
        // a1, a0 only enter through exponents k2+1 and k3+k5 = 1 and 0.
        let c = cfg(1.0, 1e9);
        for sigma in [0.5, 0.75, 1.0] {
            let v = bound_left(&id, &c, sigma, 1e9).unwrap();
            assert!((v - 1.0).abs() < 1e-8, "sigma={sigma}: {v}");
        }
    }

    #[test]
    fn bound_right_endpoint_identities() {
        let c = cfg(0.148, 1e5);
        let f = InflationFactors::compute(&SC, &c).unwrap();
        let t = 2e5;
        let zeta_edge = zeta_real(1.148, Tolerance::default()).unwrap().value;
        let at_right = bound_right(&SC, &c, 1.148, t).unwrap();
        assert!((at_right - f.alpha2 * zeta_edge).abs() < 1e-10);
        let at_one = bound_right(&SC, &c, 1.0, t).unwrap();
        let expect = f.alpha2 * SC.k4 * t.ln().powf(SC.k5);
        assert!((at_one - expect).abs() < 1e-10);
    }

    #[test]
    fn bound_right_interior_matches_closed_form() {
        let c = cfg(0.148, 1e5);
        let f = InflationFactors::compute(&SC, &c).unwrap();
        let (sigma, t) = (1.074, 1e5);
        let zeta_edge = zeta_real(1.148, Tolerance::default()).unwrap().value;
        let v = bound_right(&SC, &c, sigma, t).unwrap();
        let fr = (1.0 + 0.148 - sigma) / 0.148;
        let fl = (sigma - 1.0) / 0.148;
        let expect = f.alpha2 * SC.k4.powf(fr) * zeta_edge.powf(fl) * t.ln().powf(fr);
        assert!((v - expect).abs() < 1e-12 * expect);
    }

    #[test]
    fn monotone_stitching_on_dense_grid() {
        // The full chain is contingent on the stitching conditions; for
        // delta = 0.1 the height threshold exceeds 1e6 and only the left
        // region (governed by the edge-ratio condition) stays monotone.
        for &(delta, t) in &[(0.148, 1e5), (0.279, 1e5), (0.1, 1e6)] {
            let c = cfg(delta, 1e5);
            let conditions_hold = matches!(
                uniform_bound(&SC, &c, 0.7, t).unwrap(),
                StripBound::Holds(_)
            );
            assert_eq!(conditions_hold, delta > 0.12, "delta={delta} t={t}");
            let mut prev = f64::INFINITY;
            for i in 0..=100 {
                let sigma = 0.5 + 0.5 * i as f64 / 100.0;
                let v = bound_left(&SC, &c, sigma, t).unwrap();
                assert!(v <= prev * (1.0 + 1e-12), "left not non-increasing at {sigma}");
                prev = v;
            }
            let left_at_one = bound_left(&SC, &c, 1.0, t).unwrap();
            let right_at_one = bound_right(&SC, &c, 1.0, t).unwrap();
            assert!(left_at_one >= right_at_one * (1.0 - 1e-12));
            if !conditions_hold {
                continue;
            }
            let mut prev = f64::INFINITY;
            for i in 0..=100 {
                let sigma = 1.0 + delta * i as f64 / 100.0;
                let v = bound_right(&SC, &c, sigma, t).unwrap();
                assert!(v <= prev * (1.0 + 1e-12), "right not non-increasing at {sigma}");
                prev = v;
            }
        }
    }

    #[test]
    fn uniform_equals_left_at_half() {
        let c = cfg(0.148, 1e5);
        let t = 1e5;
        let u = uniform_bound(&SC, &c, 0.5, t).unwrap().value().unwrap();
        let l = bound_left(&SC, &c, 0.5, t).unwrap();
        assert!((u - l).abs() < 1e-12 * u);
    }

    #[test]
    fn uniform_holds_at_moderate_height_for_delta_0148() {
        // exp(4·ζ(1.148)/3) ≈ 1.8e4 < 1e5, so the bound applies at t = 1e5.
        let c = cfg(0.148, 1e5);
        match uniform_bound(&SC, &c, 0.7, 1e5).unwrap() {
            StripBound::Holds(v) => assert!(v > 0.0),
            StripBound::Violated(v) => panic!("unexpected violation: {v}"),
        }
    }

    #[test]
    fn uniform_reports_edge_ratio_violation() {
        // k4/k1 huge forces the first condition to fail.
        let p = GrowthParams { k1: 1e-12, k2: 0.0, k3: 0.0, k4: 1.0, k5: 0.0, q0: 0.0 };
        let c = cfg(0.5, 1e3);
        match uniform_bound(&p, &c, 0.9, 1e4).unwrap() {
            StripBound::Violated(v) => assert_eq!(v.condition, FailedCondition::EdgeRatio),
            StripBound::Holds(v) => panic!("expected violation, got {v}"),
        }
    }

    #[test]
    fn uniform_reports_height_threshold_violation() {
        // Small delta makes zeta(1+delta) huge, pushing the threshold above t.
        let c = cfg(0.01, 1e3);
        match uniform_bound(&SC, &c, 0.9, 1e3).unwrap() {
            StripBound::Violated(v) => {
                assert_eq!(v.condition, FailedCondition::HeightThreshold);
                assert!(v.required > 1e3);
            }
            StripBound::Holds(v) => panic!("expected violation, got {v}"),
        }
    }

    #[test]
    fn corollary_threshold_rejects_small_t() {
        match corollary_bound(0.148, 1e5, 1.0).unwrap() {
            StripBound::Violated(v) => assert_eq!(v.condition, FailedCondition::HeightThreshold),
            StripBound::Holds(v) => panic!("expected violation, got {v}"),
        }
    }

    #[test]
    fn corollary_matches_frozen_value() {
        let v = corollary_bound(0.148, 1e5, 1e5).unwrap().value().unwrap();
        assert!((v - 74.1573470012593).abs() < 1e-9, "{v}");
    }

    #[test]
    fn corollary_equals_uniform_bound_where_both_defined() {
        for &(delta, t0, t) in &[(0.148, 1e5, 1e5), (0.148, 1e5, 3e7), (0.279, 1e3, 1e4), (0.9, 1e3, 1e3)] {
            let c = cfg(delta, t0);
            let u = uniform_bound(&SC, &c, 0.8, t).unwrap();
            let cor = corollary_bound(delta, t0, t).unwrap();
            match (u, cor) {
                (StripBound::Holds(a), StripBound::Holds(b)) => {
                    assert!((a - b).abs() < 1e-11 * a, "delta={delta} t={t}: {a} vs {b}");
                }
                (a, b) => panic!("expected both to hold, got {a:?} / {b:?}"),
            }
        }
    }

    #[test]
    fn bound_at_one_dominates_one_line_bound() {
        // alpha1 >= 1 keeps the stitched bound above k4 (log t)^{k5} itself.
        let c = cfg(0.148, 1e3);
        for t in [1e3, 1e4] {
            let v = bound_left(&SC, &c, 1.0, t).unwrap();
            assert!(v >= 0.75 * t.ln());
        }
    }

    #[test]
    fn inflation_alpha_ordering() {
        for &(delta, t0) in &[(0.05, 1e3), (0.148, 1e5), (1.0, 1e7), (2.0, 1e10)] {
            let f = InflationFactors::compute(&SC, &cfg(delta, t0)).unwrap();
            assert!(f.alpha1 >= f.alpha2 && f.alpha2 >= 1.0, "{f:?}");
        }
    }

    proptest! {
        #[test]
        fn prop_alpha_ordering(delta in 0.01f64..2.0, t0_exp in 3.0f64..10.0) {
            let t0 = 10f64.powf(t0_exp);
            let f = InflationFactors::compute(&SC, &StripConfig::new(delta, t0).unwrap()).unwrap();
            prop_assert!(f.alpha1 >= f.alpha2);
            prop_assert!(f.alpha2 >= 1.0);
        }

        #[test]
        fn prop_a0_a1_monotone(sq in 0.1f64..10.0, t in 1e3f64..1e9) {
            // Decreasing in t, increasing in sigma + Q0.
            let a0 = a0_factor(sq, 0.0, t).unwrap();
            let a0_bigger_t = a0_factor(sq, 0.0, t * 2.0).unwrap();
            let a0_bigger_s = a0_factor(sq + 0.5, 0.0, t).unwrap();
            prop_assert!(a0_bigger_t < a0);
            prop_assert!(a0_bigger_s > a0);
            let a1 = a1_factor(sq, 0.0, t).unwrap();
            prop_assert!(a1_factor(sq, 0.0, t * 2.0).unwrap() < a1);
            prop_assert!(a1_factor(sq + 0.5, 0.0, t).unwrap() > a1);
        }

        #[test]
        fn prop_uniform_dominates_regional_when_it_holds(
            delta in 0.12f64..0.5,
            sigma_frac in 0.0f64..1.0,
            t_exp in 5.0f64..7.0,
        ) {
            let c = StripConfig::new(delta, 1e5).unwrap();
            let t = 10f64.powf(t_exp);
            let sigma = 0.5 + sigma_frac * (0.5 + delta);
            if let StripBound::Holds(u) = uniform_bound(&SC, &c, sigma, t).unwrap() {
                let regional = if sigma <= 1.0 {
                    bound_left(&SC, &c, sigma, t).unwrap()
                } else {
                    bound_right(&SC, &c, sigma, t).unwrap()
                };
                prop_assert!(regional <= u * (1.0 + 1e-9));
            }
        }
    }
}
