//! Two independent one-dimensional searches minimizing the bound at t₂ ≈ T.
//!
//! Since no term of the objective couples δ and d, the δ-restricted part
//! (A₁/π + b·loglog T) and the d-restricted part (d-component/π + c·log T)
//! are minimized separately: a 200-point coarse grid locates the global
//! bracket without assuming unimodality, then golden-section refines it to a
//! bracket width of 1e-4. Boundary minima are reported as failures.

use crate::coeffs::{self, CoefficientTriple, Knobs, D_RANGE, DELTA_RANGE};
use crate::error::{Error, Result};
use crate::strip::GrowthParams;
use std::f64::consts::PI;

const GRID_POINTS: usize = 200;
const BRACKET_WIDTH: f64 = 1e-4;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Outcome of the combined two-knob search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizationResult {
    pub best_delta: f64,
    pub best_d: f64,
    pub triple: CoefficientTriple,
    pub objective: f64,
    pub evaluations: usize,
    pub bracket_width: f64,
}

/// δ-restricted objective: [δ-terms of πa]/π + b(δ)·loglog T, with the
/// inflation factors taken at t₀ = T.
pub fn delta_objective(params: &GrowthParams, delta: f64, t: f64) -> Result<f64> {
    Ok(coeffs::lemma_a1(params, delta, t)? / PI + coeffs::coeff_b(params, delta)? * t.ln().ln())
}

/// d-restricted objective: [d-terms of πa]/π + c(d)·log T.
pub fn d_objective(params: &GrowthParams, d: f64, t: f64) -> Result<f64> {
    Ok(coeffs::a_d_component(d)? / PI + coeffs::coeff_c(params, d)? * t.ln())
}

fn require_height(t: f64) -> Result<()> {
    if !(t >= 1e5) {
        return Err(Error::domain(format!("optimizer: T must be >= 1e5, got {t}")));
    }
    Ok(())
}

/// Better value wins; ties prefer the smaller knob.
fn consider(best: &mut (f64, f64), value: f64, knob: f64) {
    if value < best.0 || (value == best.0 && knob < best.1) {
        *best = (value, knob);
    }
}

struct SearchOutcome {
    knob: f64,
    value: f64,
    evaluations: usize,
    bracket_width: f64,
}

fn grid_then_golden(
    mut f: impl FnMut(f64) -> Result<f64>,
    lo: f64,
    hi: f64,
    knob_name: &str,
) -> Result<SearchOutcome> {
    let mut evaluations = 0usize;
    let mut grid = Vec::with_capacity(GRID_POINTS);
    let mut best = (f64::INFINITY, f64::NAN);
    let mut best_idx = 0usize;
    for i in 0..GRID_POINTS {
        // Pin the endpoints so rounding cannot step outside [lo, hi].
        let x = if i == GRID_POINTS - 1 {
            hi
        } else {
            lo + (hi - lo) * i as f64 / (GRID_POINTS - 1) as f64
        };
        let v = f(x)?;
        evaluations += 1;
        if v < best.0 {
            best_idx = i;
        }
        consider(&mut best, v, x);
        grid.push((x, v));
    }
    if best_idx == 0 || best_idx == GRID_POINTS - 1 {
        return Err(Error::OptimizationFailure(format!(
            "coarse-grid minimum for {knob_name} sits on the boundary at {}",
            grid[best_idx].0
        )));
    }

    let (mut a, mut b) = (grid[best_idx - 1].0, grid[best_idx + 1].0);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    evaluations += 2;
    consider(&mut best, f1, x1);
    consider(&mut best, f2, x2);
    while b - a > BRACKET_WIDTH {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
            consider(&mut best, f1, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
            consider(&mut best, f2, x2);
        }
        evaluations += 1;
    }
    Ok(SearchOutcome {
        knob: best.1,
        value: best.0,
        evaluations,
        bracket_width: b - a,
    })
}

/// Minimize the δ-restricted objective over [0.05, 1.0].
pub fn optimize_delta(params: &GrowthParams, t: f64) -> Result<(f64, f64)> {
    require_height(t)?;
    let out = grid_then_golden(
        |delta| delta_objective(params, delta, t),
        DELTA_RANGE.0,
        DELTA_RANGE.1,
        "delta",
    )?;
    Ok((out.knob, out.value))
}

/// Minimize the d-restricted objective over [0.55, 1.2].
pub fn optimize_d(params: &GrowthParams, t: f64) -> Result<(f64, f64)> {
    require_height(t)?;
    let out = grid_then_golden(|d| d_objective(params, d, t), D_RANGE.0, D_RANGE.1, "d")?;
    Ok((out.knob, out.value))
}

/// Run both searches and assemble the optimized triple; the objective is the
/// full bound a + b·loglog T + c·log T at the optimum.
pub fn optimize_full(params: &GrowthParams, t: f64) -> Result<OptimizationResult> {
    require_height(t)?;
    let delta_out = grid_then_golden(
        |delta| delta_objective(params, delta, t),
        DELTA_RANGE.0,
        DELTA_RANGE.1,
        "delta",
    )?;
    let d_out = grid_then_golden(|d| d_objective(params, d, t), D_RANGE.0, D_RANGE.1, "d")?;
    let knobs = Knobs::new(delta_out.knob, d_out.knob, t)?;
    let triple = coeffs::compute_triple(params, &knobs)?;
    let objective = triple.bound_at(t)?;
    Ok(OptimizationResult {
        best_delta: delta_out.knob,
        best_d: d_out.knob,
        triple,
        objective,
        evaluations: delta_out.evaluations + d_out.evaluations,
        bracket_width: delta_out.bracket_width.max(d_out.bracket_width),
    })
}
