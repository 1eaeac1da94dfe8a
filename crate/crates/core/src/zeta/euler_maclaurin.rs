//! Euler–Maclaurin evaluation of ζ(s) with explicit remainder bounds.
//!
//! The formula used is
//!
//!   ζ(s) = Σ_{n≤N} n^{-s} + N^{1-s}/(s-1) - N^{-s}/2
//!        + Σ_{k=1}^{K} B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{1-s-2k} + R_K(s),
//!
//! with the classical remainder bound
//!
//!   |R_K(s)| ≤ |B_{2K+2}/(2K+2)! · s(s+1)…(s+2K) · N^{1-s-2K-2}| · |s+2K+1|/(σ+2K+1),
//!
//! valid for σ > -(2K+1). R_K extends analytically through s = 1 (the pole of
//! ζ cancels against N^{1-s}/(s-1)), so the bound also serves Cauchy-disk
//! estimates for the derivative of the remainder.

use num_complex::Complex64;

/// B_{2k}/(2k)! for k = 1..=13. Index 0 is padding.
pub(crate) const BERN_RATIO: [f64; 14] = [
    0.0,
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
];

/// Number of Bernoulli correction terms. Fixed so the remainder bound is the
/// B_26 term, which is far below any tolerance this crate accepts.
pub(crate) const EM_CORRECTION_TERMS: usize = 12;

/// ζ(σ) for real σ, plus the rigorous truncation bound.
pub(crate) fn em_zeta_real(sigma: f64, n_terms: u64, k_corr: usize) -> (f64, f64) {
    let mut main = 0.0;
    for n in 1..=n_terms {
        main += (n as f64).powf(-sigma);
    }
    let nf = n_terms as f64;
    let ln_n = nf.ln();
    let n_pow_1ms = ((1.0 - sigma) * ln_n).exp(); // N^{1-σ}
    let n_pow_ms = n_pow_1ms / nf; // N^{-σ}

    let mut value = main + n_pow_1ms / (sigma - 1.0) - 0.5 * n_pow_ms;

    // poch = σ(σ+1)…(σ+2k-2); npow = N^{1-σ-2k}
    let mut poch = sigma;
    let mut npow = n_pow_1ms / (nf * nf);
    for k in 1..=k_corr {
        value += BERN_RATIO[k] * poch * npow;
        poch *= (sigma + (2 * k - 1) as f64) * (sigma + (2 * k) as f64);
        npow /= nf * nf;
    }
    // First omitted term; for real s the |s+2K+1|/(σ+2K+1) factor is 1.
    let rem = (BERN_RATIO[k_corr + 1] * poch * npow).abs();
    (value, rem)
}

/// ζ(σ) and ζ'(σ) for real σ > 1, each with a rigorous truncation bound.
///
/// The analytic terms are differentiated exactly; the remainder derivative is
/// bounded by a Cauchy estimate on the disk |w - σ| ≤ r, over which the
/// remainder bound above is majorized term by term.
pub(crate) fn em_zeta_real_deriv(sigma: f64, n_terms: u64, k_corr: usize) -> (f64, f64, f64, f64) {
    let mut main = 0.0;
    let mut dmain = 0.0;
    for n in 1..=n_terms {
        let x = n as f64;
        let p = x.powf(-sigma);
        main += p;
        dmain -= x.ln() * p;
    }
    let nf = n_terms as f64;
    let ln_n = nf.ln();
    let n_pow_1ms = ((1.0 - sigma) * ln_n).exp();
    let n_pow_ms = n_pow_1ms / nf;
    let sm1 = sigma - 1.0;

    let mut value = main + n_pow_1ms / sm1 - 0.5 * n_pow_ms;
    let mut deriv = dmain - ln_n * n_pow_1ms / sm1 - n_pow_1ms / (sm1 * sm1) + 0.5 * ln_n * n_pow_ms;

    let mut poch = sigma;
    let mut hsum = 1.0 / sigma; // Σ 1/(σ+j) over the poch factors
    let mut npow = n_pow_1ms / (nf * nf);
    for k in 1..=k_corr {
        let term = BERN_RATIO[k] * poch * npow;
        value += term;
        deriv += term * (hsum - ln_n);
        let j1 = sigma + (2 * k - 1) as f64;
        let j2 = sigma + (2 * k) as f64;
        poch *= j1 * j2;
        hsum += 1.0 / j1 + 1.0 / j2;
        npow /= nf * nf;
    }
    let rem = (BERN_RATIO[k_corr + 1] * poch * npow).abs();

    // Cauchy estimate: max of the remainder bound on |w - σ| = r, divided by r.
    // On the disk, |w+j| ≤ σ+r+j, Re w ≥ σ-r, and |w+2K+1|/(Re w+2K+1) ≤
    // (σ+r+2K+1)/(σ-r+2K+1), so poch_disk = Π_{j=0}^{2K+1}(σ+r+j) covers both
    // the Pochhammer factors and the trailing ratio's numerator.
    let r = 0.25;
    let m = 2 * k_corr + 1;
    let mut poch_disk = 1.0;
    for j in 0..=m {
        poch_disk *= sigma + r + j as f64;
    }
    let disk_max = BERN_RATIO[k_corr + 1].abs() * poch_disk / (sigma - r + m as f64)
        * ((-(sigma - r) - m as f64) * ln_n).exp();
    let drem = disk_max / r;

    (value, deriv, rem, drem)
}

/// ζ(σ+it) by Euler–Maclaurin with Kahan-compensated main sum.
///
/// Returns the value, the truncation remainder bound, and a rounding
/// allowance of 4·eps·Σ|terms| for the compensated summation.
pub(crate) fn em_zeta_complex(s: Complex64, n_terms: u64, k_corr: usize) -> (Complex64, f64, f64) {
    let sigma = s.re;
    let t = s.im;

    let mut sum_re = 0.0f64;
    let mut sum_im = 0.0f64;
    let mut c_re = 0.0f64;
    let mut c_im = 0.0f64;
    let mut sum_abs = 0.0f64;
    for n in 1..=n_terms {
        let ln = (n as f64).ln();
        let mag = (-sigma * ln).exp();
        let (sin, cos) = (t * ln).sin_cos();
        let (x, y) = (mag * cos, -mag * sin);
        // Kahan
        let yy = x - c_re;
        let tt = sum_re + yy;
        c_re = (tt - sum_re) - yy;
        sum_re = tt;
        let yy = y - c_im;
        let tt = sum_im + yy;
        c_im = (tt - sum_im) - yy;
        sum_im = tt;
        sum_abs += mag;
    }
    let mut value = Complex64::new(sum_re, sum_im);

    let nf = n_terms as f64;
    let ln_n = nf.ln();
    let n_pow_1ms = ((1.0 - s) * ln_n).exp(); // N^{1-s}
    let n_pow_ms = n_pow_1ms / nf;
    value += n_pow_1ms / (s - 1.0) - 0.5 * n_pow_ms;

    let mut poch = s;
    let mut npow = n_pow_1ms / (nf * nf);
    for k in 1..=k_corr {
        value += BERN_RATIO[k] * poch * npow;
        poch *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        npow /= nf * nf;
    }
    let m = (2 * k_corr + 1) as f64;
    let rem = BERN_RATIO[k_corr + 1].abs() * poch.norm() * npow.norm() * (s + m).norm()
        / (sigma + m);
    let rounding = 4.0 * f64::EPSILON * sum_abs;
    (value, rem, rounding)
}
