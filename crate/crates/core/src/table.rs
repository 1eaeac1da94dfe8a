//! Reproduction of the reference comparison table, crossover location, and
//! machine-readable report emission.

use crate::error::{Error, Result};
use crate::optimizer::optimize_full;
use crate::strip::GrowthParams;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Reference bounds from the predecessor theorem, one per canonical height.
/// Stored constants, never recomputed.
pub const THM22_REFERENCE: [(f64, f64); 11] = [
    (1e5, 2.747),
    (1e6, 2.883),
    (1e7, 3.018),
    (1e8, 3.154),
    (1e9, 3.290),
    (1e10, 3.426),
    (1e11, 3.562),
    (1e12, 3.698),
    (1e13, 3.834),
    (1e14, 3.969),
    (1e15, 4.105),
];

/// The 11 canonical heights 1e5 … 1e15.
pub fn canonical_heights() -> Vec<f64> {
    THM22_REFERENCE.iter().map(|&(t, _)| t).collect()
}

/// Stored reference value for a height, if it is one of the canonical ones.
pub fn thm22_reference(t: f64) -> Option<f64> {
    THM22_REFERENCE
        .iter()
        .find(|&&(h, _)| (t - h).abs() <= 1e-9 * h)
        .map(|&(_, v)| v)
}

/// The two growth presets compared by the table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PresetPair {
    pub convexity: GrowthParams,
    pub subconvexity: GrowthParams,
}

impl Default for PresetPair {
    fn default() -> Self {
        PresetPair {
            convexity: GrowthParams::convexity(),
            subconvexity: GrowthParams::subconvexity(),
        }
    }
}

/// One table row: both optimized objectives plus the sub-convexity knobs and
/// triple that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "T")]
    pub t: f64,
    pub thm22: Option<f64>,
    pub convexity: f64,
    pub subconvexity: f64,
    pub d: f64,
    pub delta: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Per-height outcome; a failed row reports its error without suppressing
/// the others.
#[derive(Debug)]
pub struct RowOutcome {
    pub t: f64,
    pub result: Result<TableRow>,
}

fn build_row(t: f64, presets: &PresetPair) -> Result<TableRow> {
    let sc = optimize_full(&presets.subconvexity, t)?;
    let cv = optimize_full(&presets.convexity, t)?;
    Ok(TableRow {
        t,
        thm22: thm22_reference(t),
        convexity: cv.objective,
        subconvexity: sc.objective,
        d: sc.best_d,
        delta: sc.best_delta,
        a: sc.triple.a,
        b: sc.triple.b,
        c: sc.triple.c,
    })
}

/// Build one row per height; rows are computed independently in parallel and
/// returned in input order.
pub fn build_table(heights: &[f64], presets: &PresetPair) -> Vec<RowOutcome> {
    heights
        .par_iter()
        .map(|&t| RowOutcome {
            t,
            result: build_row(t, presets),
        })
        .collect()
}

/// Locate the height where the sub-convexity objective overtakes the
/// convexity one, by bisection on log T to relative width 1e-3.
pub fn find_crossover(presets: &PresetPair, t_low: f64, t_high: f64) -> Result<f64> {
    if !(t_low < t_high) {
        return Err(Error::domain(format!(
            "find_crossover: need t_low < t_high, got [{t_low:e}, {t_high:e}]"
        )));
    }
    let diff = |t: f64| -> Result<f64> {
        let sc = optimize_full(&presets.subconvexity, t)?;
        let cv = optimize_full(&presets.convexity, t)?;
        Ok(sc.objective - cv.objective)
    };
    let d_lo = diff(t_low)?;
    let d_hi = diff(t_high)?;
    if !(d_lo * d_hi < 0.0) {
        return Err(Error::NoSignChange {
            low: t_low,
            high: t_high,
            diff_low: d_lo,
            diff_high: d_hi,
        });
    }
    let mut lo = t_low;
    let mut hi = t_high;
    let sign_lo = d_lo.signum();
    while (hi / lo).ln() > 1e-3 {
        let mid = (lo * hi).sqrt();
        let d_mid = diff(mid)?;
        if d_mid == 0.0 {
            return Ok(mid);
        }
        if d_mid.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo * hi).sqrt())
}

/// Output encodings for `emit_report`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// Reproducibility metadata carried by every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub convexity_preset: String,
    pub subconvexity_preset: String,
    pub q0_convexity: f64,
    pub q0_subconvexity: f64,
    pub engine_tolerance: f64,
    pub version: String,
}

impl Default for ReportMeta {
    fn default() -> Self {
        let p = PresetPair::default();
        ReportMeta {
            convexity_preset: "convexity".to_string(),
            subconvexity_preset: "subconvexity".to_string(),
            q0_convexity: p.convexity.q0,
            q0_subconvexity: p.subconvexity.q0,
            engine_tolerance: crate::coeffs::ENGINE_TOL,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonReport {
    metadata: ReportMeta,
    rows: Vec<TableRow>,
}

fn check_row(row: &TableRow) -> Result<()> {
    let fields = [
        row.t,
        row.convexity,
        row.subconvexity,
        row.d,
        row.delta,
        row.a,
        row.b,
        row.c,
        row.thm22.unwrap_or(0.0),
    ];
    if fields.iter().any(|v| !v.is_finite()) {
        return Err(Error::Serialization(format!(
            "row at T={:e} contains non-finite fields",
            row.t
        )));
    }
    Ok(())
}

/// Encode rows as CSV (6 decimal places) or JSON (full precision), both with
/// a metadata header.
pub fn emit_report(rows: &[TableRow], format: ReportFormat, meta: &ReportMeta) -> Result<Vec<u8>> {
    for row in rows {
        check_row(row)?;
    }
    match format {
        ReportFormat::Csv => {
            let mut out = String::new();
            out.push_str(&format!("# convexity_preset = {}\n", meta.convexity_preset));
            out.push_str(&format!("# subconvexity_preset = {}\n", meta.subconvexity_preset));
            out.push_str(&format!("# q0_convexity = {}\n", meta.q0_convexity));
            out.push_str(&format!("# q0_subconvexity = {}\n", meta.q0_subconvexity));
            out.push_str(&format!("# engine_tolerance = {:e}\n", meta.engine_tolerance));
            out.push_str(&format!("# version = {}\n", meta.version));
            out.push_str("T,thm22,convexity,subconvexity,d,delta,a,b,c\n");
            for row in rows {
                let thm22 = row
                    .thm22
                    .map(|v| format!("{v:.6}"))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{:e},{},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6},{:.6}\n",
                    row.t,
                    thm22,
                    row.convexity,
                    row.subconvexity,
                    row.d,
                    row.delta,
                    row.a,
                    row.b,
                    row.c
                ));
            }
            Ok(out.into_bytes())
        }
        ReportFormat::Json => {
            let report = JsonReport {
                metadata: meta.clone(),
                rows: rows.to_vec(),
            };
            let mut bytes = serde_json::to_vec_pretty(&report)
                .map_err(|e| Error::Serialization(e.to_string()))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
    }
}

/// Decode a JSON report back into metadata and rows.
pub fn parse_report(bytes: &[u8]) -> Result<(ReportMeta, Vec<TableRow>)> {
    let report: JsonReport =
        serde_json::from_slice(bytes).map_err(|e| Error::Serialization(e.to_string()))?;
    Ok((report.metadata, report.rows))
}
