//! Certified coefficient triples (a, b, c) bounding |∫ S(t) dt| for Turing's
//! method, built from explicit strip bounds on |ζ(σ+it)| and error-bounded
//! zeta evaluations.
//!
//! The pipeline: `zeta` evaluates ζ and the log-ζ integrals with rigorous
//! error bounds; `strip` carries the explicit bounds across ½ ≤ σ ≤ 1+δ;
//! `coeffs` assembles the (a, b, c) triples from two free knobs (δ, d);
//! `optimizer` minimizes the resulting bound height by height; `table`
//! reproduces the reference comparison table and locates the crossover
//! between the convexity and sub-convexity growth presets.

pub mod cli;
pub mod coeffs;
pub mod error;
pub mod optimizer;
pub mod strip;
pub mod table;
pub mod zeta;

pub use coeffs::{CoefficientTriple, Knobs};
pub use error::{Error, Result};
pub use optimizer::OptimizationResult;
pub use strip::{GrowthParams, InflationFactors, StripBound, StripConfig};
pub use table::{PresetPair, ReportFormat, TableRow};
pub use zeta::{ComplexEvalResult, EvalResult, Tolerance};

/// Entry point for the `turing-bounds` binary; returns the process exit code.
pub fn run_cli() -> i32 {
    cli::run()
}
