//! Composite 15-point Gauss–Legendre integration of log ζ on (1, ∞) with a
//! rigorous per-panel remainder.
//!
//! The Gauss error on a panel [a,b] is (b-a)^{2m+1} (m!)^4 / ((2m+1)((2m)!)^3)
//! times f^{(2m)}(ξ). For f = log ζ every derivative is a Dirichlet series,
//! |f^{(m)}(σ)| = |Σ Λ(n)(log n)^{m-1} n^{-σ}| ≤ Σ (log n)^m n^{-σ}
//!             ≤ m!/(σ-1)^{m+1} + 2·(m/σ)^m e^{-m},
//! (integral plus peak of the unimodal summand), evaluated at the panel's left
//! edge. Panels are capped at half the distance to the singularity at σ = 1,
//! so the per-panel remainder shrinks geometrically and the total stays many
//! orders below the tolerances this crate accepts.

use super::euler_maclaurin::{em_zeta_real, EM_CORRECTION_TERMS};

/// Nodes and weights for 15-point Gauss–Legendre on [-1, 1].
const GAUSS15: [(f64, f64); 15] = [
    (-0.9879925180204854, 0.03075324199611727),
    (-0.937273392400706, 0.07036604748810812),
    (-0.8482065834104272, 0.10715922046717194),
    (-0.7244177313601701, 0.13957067792615432),
    (-0.5709721726085388, 0.16626920581699392),
    (-0.3941513470775634, 0.1861610000155622),
    (-0.20119409399743451, 0.19843148532711158),
    (0.0, 0.2025782419255613),
    (0.20119409399743451, 0.19843148532711158),
    (0.3941513470775634, 0.1861610000155622),
    (0.5709721726085388, 0.16626920581699392),
    (0.7244177313601701, 0.13957067792615432),
    (0.8482065834104272, 0.10715922046717194),
    (0.937273392400706, 0.07036604748810812),
    (0.9879925180204854, 0.03075324199611727),
];

/// ln[(15!)^4 / (31·(30!)^3)]
const LN_GAUSS15_ERR_CONST: f64 = -115.81161071561207;

const DERIV_ORDER: f64 = 30.0;

fn ln_factorial(m: f64) -> f64 {
    let mut s = 0.0;
    let mut k = 2.0;
    while k <= m {
        s += k.ln();
        k += 1.0;
    }
    s
}

/// ln of the derivative bound sup_{σ ≥ a} |f^{(m)}(σ)| for f = log ζ.
fn ln_deriv_bound(m: f64, a: f64) -> f64 {
    let t1 = ln_factorial(m) - (m + 1.0) * (a - 1.0).ln();
    let t2 = std::f64::consts::LN_2 + m * ((m / a).ln() - 1.0);
    let (hi, lo) = if t1 >= t2 { (t1, t2) } else { (t2, t1) };
    hi + (lo - hi).exp().ln_1p()
}

/// log ζ at a quadrature node, with the propagated evaluation error.
fn log_zeta_node(sigma: f64) -> (f64, f64) {
    let mut n = 64u64;
    loop {
        let (v, rem) = em_zeta_real(sigma, n, EM_CORRECTION_TERMS);
        if rem < 1e-16 * v || n >= 4096 {
            // |d log| ≤ e/(v-e); 1e-15 covers rounding of ln and the sum.
            return (v.ln(), rem / (v - rem) + 1e-15);
        }
        n *= 2;
    }
}

/// ∫_{x0}^{x1} log ζ(σ) dσ with a rigorous error bound, for 1 < x0 ≤ x1.
pub(crate) fn log_zeta_integral_quad(x0: f64, x1: f64) -> (f64, f64) {
    let mut value = 0.0;
    let mut bound = 0.0;
    let mut a = x0;
    while a < x1 {
        let width = (0.5 * (a - 1.0)).min(x1 - a);
        let b = a + width;
        let half = 0.5 * width;
        let mid = 0.5 * (a + b);
        let mut panel = 0.0;
        let mut node_err = 0.0;
        for &(x, w) in &GAUSS15 {
            let (f, e) = log_zeta_node(mid + half * x);
            panel += w * f;
            node_err += w * e;
        }
        value += half * panel;
        bound += half * node_err;
        // Gauss remainder, assembled in log space to dodge over/underflow.
        let ln_rem = (2.0 * DERIV_ORDER + 1.0) * width.ln()
            + LN_GAUSS15_ERR_CONST
            + ln_deriv_bound(DERIV_ORDER, a);
        bound += ln_rem.exp();
        a = b;
    }
    (value, bound)
}
