//! Command-line front end: coefficient computation, optimization, table
//! reproduction, crossover search, and strip-bound spot verification.
//!
//! Exit codes: 0 success, 2 domain error, 3 bracketing error, 4 verification
//! violation, 1 anything else. Every command is deterministic given its flags
//! and seed.

use crate::coeffs::{self, Knobs, THEOREM_T0};
use crate::error::{Error, Result};
use crate::optimizer;
use crate::strip::{bound_left, bound_right, GrowthParams, StripConfig};
use crate::table::{
    build_table, canonical_heights, emit_report, find_crossover, PresetPair, ReportFormat,
    ReportMeta,
};
use crate::zeta::{zeta_complex, Tolerance};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "turing-bounds", version, about = "Certified bounds on |∫ S(t) dt| for Turing's method")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the coefficient triple (a, b, c) at given knobs (δ, d)
    Coeffs(CoeffsArgs),
    /// Minimize the bound a + b·loglog T + c·log T at one height T
    Optimize(OptimizeArgs),
    /// Reproduce the comparison table over a list of heights
    Table(TableArgs),
    /// Locate the height where the sub-convexity preset overtakes convexity
    Crossover(CrossoverArgs),
    /// Spot-check |ζ(σ+it)| against the regional strip bounds
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Growth preset: subconvexity, convexity, or custom
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Reference height t0 for the inflation factors
    #[arg(long, global = true)]
    t0: Option<f64>,
    /// Engine tolerance for direct zeta evaluations
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Output format: text, csv, or json
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write the report to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat key = value config file; flags win over file entries
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// k1 for --preset custom
    #[arg(long, global = true)]
    k1: Option<f64>,
    /// k2 for --preset custom
    #[arg(long, global = true)]
    k2: Option<f64>,
    /// k3 for --preset custom
    #[arg(long, global = true)]
    k3: Option<f64>,
    /// k4 for --preset custom
    #[arg(long, global = true)]
    k4: Option<f64>,
    /// k5 for --preset custom
    #[arg(long, global = true)]
    k5: Option<f64>,
    /// Q0 for --preset custom
    #[arg(long, global = true)]
    q0: Option<f64>,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Right-edge offset δ of the strip
    #[arg(long)]
    delta: Option<f64>,
    /// Lower-bound knob d
    #[arg(long)]
    d: Option<f64>,
    /// Also print the bound evaluated at this t2
    #[arg(long = "at-t2")]
    at_t2: Option<f64>,
}

#[derive(Args, Debug)]
struct OptimizeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Height T at which to minimize the bound
    #[arg(long)]
    height: Option<f64>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated heights (defaults to the canonical 11)
    #[arg(long, value_delimiter = ',')]
    heights: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
struct CrossoverArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Lower bracket end
    #[arg(long)]
    low: Option<f64>,
    /// Upper bracket end
    #[arg(long)]
    high: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Number of σ grid points in [1/2, 1+δ]
    #[arg(long = "sigma-grid")]
    sigma_grid: Option<usize>,
    /// Number of sampled heights in [1e3, 1e4]
    #[arg(long = "t-samples")]
    t_samples: Option<usize>,
    /// RNG seed for the height samples
    #[arg(long)]
    seed: Option<u64>,
    /// Strip width δ used for the bounds
    #[arg(long)]
    delta: Option<f64>,
}

/// Flat `key = value` config file; `#` starts a comment.
fn parse_config(path: &Path) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::domain(format!("config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::domain(format!(
                "config {}: line {} is not `key = value`",
                path.display(),
                lineno + 1
            ))
        })?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

struct Settings {
    config: HashMap<String, String>,
}

impl Settings {
    fn load(common: &CommonArgs) -> Result<Self> {
        let config = match &common.config {
            Some(path) => parse_config(path)?,
            None => HashMap::new(),
        };
        Ok(Settings { config })
    }

    fn f64(&self, flag: Option<f64>, key: &str) -> Result<Option<f64>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.get(key) {
            Some(raw) => raw
                .parse::<f64>()
                .map(Some)
                .map_err(|_| Error::domain(format!("config key {key}: cannot parse `{raw}` as a number"))),
            None => Ok(None),
        }
    }

    fn usize(&self, flag: Option<usize>, key: &str) -> Result<Option<usize>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.get(key) {
            Some(raw) => raw
                .parse::<usize>()
                .map(Some)
                .map_err(|_| Error::domain(format!("config key {key}: cannot parse `{raw}` as a count"))),
            None => Ok(None),
        }
    }

    fn u64(&self, flag: Option<u64>, key: &str) -> Result<Option<u64>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.config.get(key) {
            Some(raw) => raw
                .parse::<u64>()
                .map(Some)
                .map_err(|_| Error::domain(format!("config key {key}: cannot parse `{raw}` as an integer"))),
            None => Ok(None),
        }
    }

    fn string(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.config.get(key).cloned())
    }

    fn heights(&self, flag: &Option<Vec<f64>>, key: &str) -> Result<Option<Vec<f64>>> {
        if flag.is_some() {
            return Ok(flag.clone());
        }
        match self.config.get(key) {
            Some(raw) => raw
                .split(',')
                .map(|s| {
                    s.trim().parse::<f64>().map_err(|_| {
                        Error::domain(format!("config key {key}: cannot parse `{s}` as a height"))
                    })
                })
                .collect::<Result<Vec<f64>>>()
                .map(Some),
            None => Ok(None),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

fn parse_format(name: &str) -> Result<OutputFormat> {
    match name {
        "text" => Ok(OutputFormat::Text),
        "csv" => Ok(OutputFormat::Csv),
        "json" => Ok(OutputFormat::Json),
        other => Err(Error::domain(format!(
            "format must be text, csv, or json, got `{other}`"
        ))),
    }
}

fn resolve_params(common: &CommonArgs, settings: &Settings) -> Result<GrowthParams> {
    let name = settings
        .string(&common.preset, "preset")
        .unwrap_or_else(|| "subconvexity".to_string());
    match name.as_str() {
        "subconvexity" => Ok(GrowthParams::subconvexity()),
        "convexity" => Ok(GrowthParams::convexity()),
        "custom" => {
            let grab = |flag: Option<f64>, key: &str| -> Result<f64> {
                settings
                    .f64(flag, key)?
                    .ok_or_else(|| Error::domain(format!("custom preset requires {key}")))
            };
            let params = GrowthParams {
                k1: grab(common.k1, "k1")?,
                k2: grab(common.k2, "k2")?,
                k3: grab(common.k3, "k3")?,
                k4: grab(common.k4, "k4")?,
                k5: grab(common.k5, "k5")?,
                q0: grab(common.q0, "q0")?,
            };
            params.validate()?;
            Ok(params)
        }
        other => Err(Error::domain(format!(
            "preset must be subconvexity, convexity, or custom, got `{other}`"
        ))),
    }
}

fn write_output(out: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| Error::Serialization(format!("writing {}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(bytes)
                .map_err(|e| Error::Serialization(format!("stdout: {e}")))
        }
    }
}

/// One dominance violation found by `verify_dominance`.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct DominanceViolation {
    pub sigma: f64,
    pub t: f64,
    pub modulus: f64,
    pub bound: f64,
    pub ratio: f64,
}

/// Outcome of the empirical strip-bound check.
#[derive(Debug, Clone, serde::Serialize)]
pub struct VerifyOutcome {
    pub delta: f64,
    pub seed: u64,
    pub sigma_points: usize,
    pub t_samples: usize,
    pub samples: usize,
    pub max_ratio: f64,
    pub max_sigma: f64,
    pub max_t: f64,
    pub violations: Vec<DominanceViolation>,
}

/// Compare |ζ(σ+it)| against the regional bounds on a σ-grid × sampled-t set.
///
/// Heights are drawn uniformly from [1e3, 1e4] by a seeded ChaCha stream, the
/// bounds use t0 = 1e3 factors, and ζ is evaluated to 1e-8. A sample counts
/// as a violation only when the certified modulus exceeds the bound.
pub fn verify_dominance(
    delta: f64,
    sigma_points: usize,
    t_samples: usize,
    seed: u64,
) -> Result<VerifyOutcome> {
    if !(delta > 0.0 && delta <= 1.2) {
        return Err(Error::domain(format!(
            "verify: delta must lie in (0, 1.2], got {delta}"
        )));
    }
    if sigma_points == 0 || t_samples == 0 {
        return Err(Error::domain("verify: sample counts must be positive"));
    }
    let params = GrowthParams::subconvexity();
    let cfg = StripConfig::new(delta, 1e3)?;
    let tol = Tolerance::new(1e-8)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let heights: Vec<f64> = (0..t_samples)
        .map(|_| 1e3 + 9e3 * rng.gen::<f64>())
        .collect();

    let mut max_ratio = 0.0f64;
    let mut max_sigma = 0.0f64;
    let mut max_t = 0.0f64;
    let mut violations = Vec::new();
    for i in 0..sigma_points {
        let sigma = if sigma_points == 1 {
            0.5
        } else {
            0.5 + (0.5 + delta) * i as f64 / (sigma_points - 1) as f64
        };
        for &t in &heights {
            let z = zeta_complex(sigma, t, tol)?;
            let bound = if sigma <= 1.0 {
                bound_left(&params, &cfg, sigma, t)?
            } else {
                bound_right(&params, &cfg, sigma, t)?
            };
            let modulus = z.value.norm();
            let ratio = modulus / bound;
            if ratio > max_ratio {
                max_ratio = ratio;
                max_sigma = sigma;
                max_t = t;
            }
            if modulus - z.error_bound > bound {
                violations.push(DominanceViolation {
                    sigma,
                    t,
                    modulus,
                    bound,
                    ratio,
                });
            }
        }
    }
    Ok(VerifyOutcome {
        delta,
        seed,
        sigma_points,
        t_samples,
        samples: sigma_points * t_samples,
        max_ratio,
        max_sigma,
        max_t,
        violations,
    })
}

fn cmd_coeffs(args: &CoeffsArgs) -> Result<()> {
    let settings = Settings::load(&args.common)?;
    let params = resolve_params(&args.common, &settings)?;
    let delta = settings
        .f64(args.delta, "delta")?
        .ok_or_else(|| Error::domain("coeffs requires --delta"))?;
    let d = settings
        .f64(args.d, "d")?
        .ok_or_else(|| Error::domain("coeffs requires --d"))?;
    let t0 = settings.f64(args.common.t0, "t0")?.unwrap_or(THEOREM_T0);
    let at_t2 = settings.f64(args.at_t2, "at-t2")?;
    let knobs = Knobs::new(delta, d, t0)?;
    let triple = coeffs::compute_triple(&params, &knobs)?;
    let bound = at_t2.map(|t2| triple.bound_at(t2)).transpose()?;

    let format = parse_format(
        &settings
            .string(&args.common.format, "format")
            .unwrap_or_else(|| "text".to_string()),
    )?;
    let bytes = match format {
        OutputFormat::Json => {
            let mut doc = serde_json::json!({
                "preset": preset_name(&params),
                "delta": triple.knobs.delta,
                "d": triple.knobs.d,
                "t0": triple.knobs.t0,
                "a": triple.a,
                "b": triple.b,
                "c": triple.c,
            });
            if let (Some(t2), Some(v)) = (at_t2, bound) {
                doc["at_t2"] = serde_json::json!(t2);
                doc["bound"] = serde_json::json!(v);
            }
            let mut s = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Serialization(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
        _ => {
            let mut s = format!(
                "a = {:.6}\nb = {:.6}\nc = {:.6}\n",
                triple.a, triple.b, triple.c
            );
            if let (Some(t2), Some(v)) = (at_t2, bound) {
                s.push_str(&format!("bound at t2 = {t2:e}: {v:.6}\n"));
            }
            s.into_bytes()
        }
    };
    write_output(&args.common.out, &bytes)
}

fn cmd_optimize(args: &OptimizeArgs) -> Result<()> {
    let settings = Settings::load(&args.common)?;
    let params = resolve_params(&args.common, &settings)?;
    let height = settings.f64(args.height, "height")?.unwrap_or(1e10);
    let r = optimizer::optimize_full(&params, height)?;

    let format = parse_format(
        &settings
            .string(&args.common.format, "format")
            .unwrap_or_else(|| "text".to_string()),
    )?;
    let bytes = match format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "preset": preset_name(&params),
                "T": height,
                "delta": r.best_delta,
                "d": r.best_d,
                "a": r.triple.a,
                "b": r.triple.b,
                "c": r.triple.c,
                "objective": r.objective,
                "evaluations": r.evaluations,
                "bracket_width": r.bracket_width,
            });
            let mut s = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Serialization(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
        _ => format!(
            "T = {:e}\ndelta* = {:.6}\nd* = {:.6}\na = {:.6}\nb = {:.6}\nc = {:.6}\nobjective = {:.6}\nevaluations = {}\nbracket_width = {:.2e}\n",
            height, r.best_delta, r.best_d, r.triple.a, r.triple.b, r.triple.c, r.objective,
            r.evaluations, r.bracket_width
        )
        .into_bytes(),
    };
    write_output(&args.common.out, &bytes)
}

fn cmd_table(args: &TableArgs) -> Result<()> {
    let settings = Settings::load(&args.common)?;
    let heights = settings
        .heights(&args.heights, "heights")?
        .unwrap_or_else(canonical_heights);
    let presets = PresetPair::default();
    let outcomes = build_table(&heights, &presets);

    let mut rows = Vec::new();
    let mut first_error: Option<Error> = None;
    for outcome in outcomes {
        match outcome.result {
            Ok(row) => rows.push(row),
            Err(e) => {
                eprintln!("row T={:e} failed: {e}", outcome.t);
                if first_error.is_none() {
                    first_error = Some(e);
                }
            }
        }
    }

    let format = parse_format(
        &settings
            .string(&args.common.format, "format")
            .unwrap_or_else(|| "csv".to_string()),
    )?;
    let meta = ReportMeta::default();
    let bytes = match format {
        OutputFormat::Csv => emit_report(&rows, ReportFormat::Csv, &meta)?,
        OutputFormat::Json => emit_report(&rows, ReportFormat::Json, &meta)?,
        OutputFormat::Text => {
            let mut s = format!(
                "{:>10} {:>8} {:>10} {:>10} {:>8} {:>8} {:>8} {:>8} {:>8}\n",
                "T", "thm22", "C", "SC", "d", "delta", "a", "b", "c"
            );
            for row in &rows {
                s.push_str(&format!(
                    "{:>10e} {:>8} {:>10.6} {:>10.6} {:>8.4} {:>8.4} {:>8.4} {:>8.4} {:>8.4}\n",
                    row.t,
                    row.thm22.map(|v| format!("{v:.3}")).unwrap_or_default(),
                    row.convexity,
                    row.subconvexity,
                    row.d,
                    row.delta,
                    row.a,
                    row.b,
                    row.c
                ));
            }
            s.into_bytes()
        }
    };
    write_output(&args.common.out, &bytes)?;
    match first_error {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn cmd_crossover(args: &CrossoverArgs) -> Result<()> {
    let settings = Settings::load(&args.common)?;
    let low = settings.f64(args.low, "low")?.unwrap_or(1e10);
    let high = settings.f64(args.high, "high")?.unwrap_or(1e11);
    let t_star = find_crossover(&PresetPair::default(), low, high)?;

    let format = parse_format(
        &settings
            .string(&args.common.format, "format")
            .unwrap_or_else(|| "text".to_string()),
    )?;
    let bytes = match format {
        OutputFormat::Json => {
            let doc = serde_json::json!({ "low": low, "high": high, "crossover": t_star });
            let mut s = serde_json::to_string_pretty(&doc)
                .map_err(|e| Error::Serialization(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
        _ => format!("crossover T* = {t_star:.6e}\n").into_bytes(),
    };
    write_output(&args.common.out, &bytes)
}

/// Runs the dominance check and reports; returns true when violations exist.
fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let settings = Settings::load(&args.common)?;
    let sigma_points = settings.usize(args.sigma_grid, "sigma-grid")?.unwrap_or(50);
    let t_samples = settings.usize(args.t_samples, "t-samples")?.unwrap_or(50);
    let seed = settings.u64(args.seed, "seed")?.unwrap_or(42);
    let delta = settings.f64(args.delta, "delta")?.unwrap_or(0.148);
    let outcome = verify_dominance(delta, sigma_points, t_samples, seed)?;

    let format = parse_format(
        &settings
            .string(&args.common.format, "format")
            .unwrap_or_else(|| "text".to_string()),
    )?;
    let bytes = match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&outcome)
                .map_err(|e| Error::Serialization(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
        _ => {
            let mut s = format!(
                "samples = {} (sigma {} x t {}), seed = {}, delta = {:.6}, t0 = 1e3\n",
                outcome.samples, outcome.sigma_points, outcome.t_samples, outcome.seed, outcome.delta
            );
            s.push_str(&format!(
                "max ratio = {:.6} at sigma = {:.6}, t = {:.6}\n",
                outcome.max_ratio, outcome.max_sigma, outcome.max_t
            ));
            s.push_str(&format!("violations = {}\n", outcome.violations.len()));
            for v in &outcome.violations {
                s.push_str(&format!(
                    "VIOLATION sigma = {:.6}, t = {:.6}, |zeta| = {:.6}, bound = {:.6}, ratio = {:.6}\n",
                    v.sigma, v.t, v.modulus, v.bound, v.ratio
                ));
            }
            s.into_bytes()
        }
    };
    write_output(&args.common.out, &bytes)?;
    Ok(!outcome.violations.is_empty())
}

fn preset_name(params: &GrowthParams) -> &'static str {
    if *params == GrowthParams::subconvexity() {
        "subconvexity"
    } else if *params == GrowthParams::convexity() {
        "convexity"
    } else {
        "custom"
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 2,
        Error::NoSignChange { .. } => 3,
        _ => 1,
    }
}

/// Parse argv, dispatch, and return the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Coeffs(args) => cmd_coeffs(args).map(|()| 0),
        Command::Optimize(args) => cmd_optimize(args).map(|()| 0),
        Command::Table(args) => cmd_table(args).map(|()| 0),
        Command::Crossover(args) => cmd_crossover(args).map(|()| 0),
        Command::Verify(args) => cmd_verify(args).map(|found| if found { 4 } else { 0 }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
