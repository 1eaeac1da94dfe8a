//! Error-bounded evaluation of ζ(σ), ζ(σ+it), ζ'/ζ(σ), and integrals of
//! log ζ, the numeric backbone of the coefficient pipeline.
//!
//! Every operation returns a value paired with a rigorous error bound
//! assembled from explicit truncation estimates; floating-point rounding is
//! covered by a fixed 1e-13 cushion plus a few-ulp relative allowance where
//! the value itself is large.

mod euler_maclaurin;
mod primes;
mod quadrature;

use crate::error::{Error, Result};
use euler_maclaurin::{em_zeta_complex, em_zeta_real, em_zeta_real_deriv, EM_CORRECTION_TERMS};
use num_complex::Complex64;

/// Requested absolute tolerance, restricted to (0, 1e-3].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub fn new(absolute: f64) -> Result<Self> {
        if !(absolute > 0.0 && absolute <= 1e-3) {
            return Err(Error::domain(format!(
                "tolerance must lie in (0, 1e-3], got {absolute:e}"
            )));
        }
        Ok(Tolerance(absolute))
    }

    pub fn absolute(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(1e-12)
    }
}

/// A real value with a rigorous absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub error_bound: f64,
}

/// A complex value with a rigorous bound on the modulus of the error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEvalResult {
    pub value: Complex64,
    pub error_bound: f64,
}

/// Evaluations reject σ this close to the pole at 1.
pub const MIN_SIGMA_GAP: f64 = 1e-6;

/// Fixed cushion absorbing floating-point rounding in O(1)-sized results.
const FP_CUSHION: f64 = 1e-13;

/// The hybrid integral switches from quadrature+series to pure series here.
const SERIES_SPLIT: f64 = 3.0;

const MAX_EM_TERMS: u64 = 1 << 17;

fn require_sigma_gt_one(sigma: f64, what: &str) -> Result<()> {
    if sigma <= 1.0 + MIN_SIGMA_GAP {
        return Err(Error::domain(format!(
            "{what}: sigma must exceed 1 + 1e-6, got {sigma}"
        )));
    }
    Ok(())
}

/// Rounding allowance: fixed cushion plus a few ulps of the value.
fn rounding_allowance(value: f64) -> f64 {
    FP_CUSHION + 8.0 * f64::EPSILON * value.abs()
}

/// ζ(σ) for real σ > 1 + 1e-6.
pub fn zeta_real(sigma: f64, tol: Tolerance) -> Result<EvalResult> {
    require_sigma_gt_one(sigma, "zeta_real")?;
    let mut n = 16u64;
    let mut best = f64::INFINITY;
    loop {
        let (value, rem) = em_zeta_real(sigma, n, EM_CORRECTION_TERMS);
        let bound = rem + rounding_allowance(value);
        if bound <= tol.absolute() {
            return Ok(EvalResult { value, error_bound: bound });
        }
        best = best.min(bound);
        if n >= MAX_EM_TERMS {
            return Err(Error::ToleranceUnreachable {
                requested: tol.absolute(),
                achievable: best,
            });
        }
        n *= 2;
    }
}

/// ζ(σ+it) for σ ∈ [0.4, 2.2], t ∈ [3, 1e6].
///
/// The truncation length is pinned to N = ⌈10 + 2t⌉ with 12 Bernoulli
/// corrections; if that budget cannot meet `tol` the call fails rather than
/// silently degrading.
pub fn zeta_complex(sigma: f64, t: f64, tol: Tolerance) -> Result<ComplexEvalResult> {
    if !(0.4..=2.2).contains(&sigma) {
        return Err(Error::domain(format!(
            "zeta_complex: sigma must lie in [0.4, 2.2], got {sigma}"
        )));
    }
    if !(3.0..=1e6).contains(&t) {
        return Err(Error::domain(format!(
            "zeta_complex: t must lie in [3, 1e6], got {t}"
        )));
    }
    let n = (10.0 + 2.0 * t).ceil() as u64;
    let (value, rem, rounding) = em_zeta_complex(Complex64::new(sigma, t), n, EM_CORRECTION_TERMS);
    let bound = rem + rounding + FP_CUSHION;
    if bound > tol.absolute() {
        return Err(Error::ToleranceUnreachable {
            requested: tol.absolute(),
            achievable: bound,
        });
    }
    Ok(ComplexEvalResult { value, error_bound: bound })
}

/// ζ'(σ)/ζ(σ) for real σ > 1 + 1e-6 (always negative there).
pub fn log_deriv_zeta(sigma: f64, tol: Tolerance) -> Result<EvalResult> {
    require_sigma_gt_one(sigma, "log_deriv_zeta")?;
    let mut n = 64u64;
    let mut best = f64::INFINITY;
    loop {
        let (z, dz, rz, rdz) = em_zeta_real_deriv(sigma, n, EM_CORRECTION_TERMS);
        let value = dz / z;
        // ζ > 1 on σ > 1, so z - rz stays positive once rz is small.
        let denom = z - rz;
        let bound = if denom > 0.0 {
            (rdz * z + dz.abs() * rz) / (z * denom) + rounding_allowance(value)
        } else {
            f64::INFINITY
        };
        if bound <= tol.absolute() {
            return Ok(EvalResult { value, error_bound: bound });
        }
        best = best.min(bound);
        if n >= MAX_EM_TERMS {
            return Err(Error::ToleranceUnreachable {
                requested: tol.absolute(),
                achievable: best,
            });
        }
        n *= 2;
    }
}

/// ∫_{sigma0}^{∞} log ζ(σ) dσ for sigma0 > 1 + 1e-6.
///
/// Uses the identity ∫_X^∞ log ζ = Σ_{n≥2} Λ(n)/(n^X log²n) directly when the
/// truncated series meets the tolerance (X ≥ 3), and otherwise stitches a
/// rigorously bounded quadrature over [X, 3] to the series tail from 3.
pub fn integral_log_zeta_tail(sigma0: f64, tol: Tolerance) -> Result<EvalResult> {
    require_sigma_gt_one(sigma0, "integral_log_zeta_tail")?;
    let budget = tol.absolute() - FP_CUSHION;
    if budget <= 0.0 {
        return Err(Error::ToleranceUnreachable {
            requested: tol.absolute(),
            achievable: FP_CUSHION,
        });
    }
    if sigma0 >= SERIES_SPLIT {
        let (value, series_bound) = primes::tail_series_adaptive(sigma0, budget);
        let bound = series_bound + FP_CUSHION;
        if bound > tol.absolute() {
            return Err(Error::ToleranceUnreachable {
                requested: tol.absolute(),
                achievable: bound,
            });
        }
        return Ok(EvalResult { value, error_bound: bound });
    }
    let (quad_value, quad_bound) = quadrature::log_zeta_integral_quad(sigma0, SERIES_SPLIT);
    if quad_bound >= budget {
        return Err(Error::ToleranceUnreachable {
            requested: tol.absolute(),
            achievable: quad_bound + FP_CUSHION,
        });
    }
    let (series_value, series_bound) = primes::tail_series_adaptive(SERIES_SPLIT, budget - quad_bound);
    let bound = quad_bound + series_bound + FP_CUSHION;
    if bound > tol.absolute() {
        return Err(Error::ToleranceUnreachable {
            requested: tol.absolute(),
            achievable: bound,
        });
    }
    Ok(EvalResult {
        value: quad_value + series_value,
        error_bound: bound,
    })
}

/// ∫_{sigma0}^{sigma1} log ζ(σ) dσ as a difference of two tail integrals.
///
/// A degenerate interval returns exactly 0 with zero error.
pub fn integral_log_zeta_finite(sigma0: f64, sigma1: f64, tol: Tolerance) -> Result<EvalResult> {
    require_sigma_gt_one(sigma0, "integral_log_zeta_finite")?;
    if sigma1 < sigma0 {
        return Err(Error::domain(format!(
            "integral_log_zeta_finite: sigma1 ({sigma1}) must be >= sigma0 ({sigma0})"
        )));
    }
    if sigma0 == sigma1 {
        return Ok(EvalResult { value: 0.0, error_bound: 0.0 });
    }
    let half = Tolerance::new(tol.absolute() / 2.0)?;
    let lower = integral_log_zeta_tail(sigma0, half)?;
    let upper = integral_log_zeta_tail(sigma1, half)?;
    Ok(EvalResult {
        value: lower.value - upper.value,
        error_bound: lower.error_bound + upper.error_bound,
    })
}
