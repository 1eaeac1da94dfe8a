//! End-to-end checks of the binary: flags, config files, formats, exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_turing-bounds"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn coeffs_text_reports_reference_triple() {
    let out = run(&["coeffs", "--delta", "0.148", "--d", "0.762", "--t0", "1e10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("a = 1.697342"), "{text}");
    assert!(text.contains("b = 0.182710"), "{text}");
    assert!(text.contains("c = 0.048961"), "{text}");
}

#[test]
fn coeffs_at_t2_prints_headline() {
    let out = run(&[
        "coeffs", "--delta", "0.148", "--d", "0.762", "--t0", "1e10", "--at-t2", "1e10",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("bound at t2 = 1e10: 3.397"), "{text}");
}

#[test]
fn coeffs_rejects_bad_d_with_exit_2() {
    let out = run(&["coeffs", "--delta", "0.148", "--d", "0.4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("d must lie in [0.55, 1.2]"), "{err}");
}

#[test]
fn coeffs_convexity_preset_matches_closed_form() {
    let out = run(&[
        "coeffs", "--preset", "convexity", "--delta", "0.2", "--d", "0.8", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = doc["c"].as_f64().unwrap();
    let expect = (1.0 / 16.0 + 0.5 * 0.64 * (4.0f64.ln() - 1.0)) / std::f64::consts::PI;
    assert!((c - expect).abs() < 1e-12, "c = {c}, expect {expect}");
    assert_eq!(doc["preset"], "convexity");
}

#[test]
fn optimize_reports_reference_minimum() {
    let out = run(&["optimize", "--height", "1e5", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((doc["delta"].as_f64().unwrap() - 0.279).abs() < 0.01);
    assert!((doc["d"].as_f64().unwrap() - 0.883).abs() < 0.01);
    assert!((doc["objective"].as_f64().unwrap() - 2.658).abs() < 5e-3);
}

#[test]
fn table_single_height_emits_one_csv_row() {
    let out = run(&["table", "--heights", "1e8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    let header_idx = lines
        .iter()
        .position(|l| l.starts_with("T,thm22,"))
        .expect("header present");
    assert_eq!(lines.len(), header_idx + 2);
    let row = lines[header_idx + 1];
    assert!(row.starts_with("1e8,3.154000,"), "{row}");
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields.len(), 9);
    let d: f64 = fields[4].parse().unwrap();
    let delta: f64 = fields[5].parse().unwrap();
    let a: f64 = fields[6].parse().unwrap();
    assert!((d - 0.795).abs() < 0.01);
    assert!((delta - 0.182).abs() < 0.01);
    assert!((a - 1.620).abs() < 2e-3);
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "--heights", "1e6", "--format", "json"]);
    assert!(out.status.success());
    let (meta, rows) = turing_bounds::table::parse_report(&out.stdout).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(meta.q0_subconvexity, 5.0);
    assert_eq!(rows[0].thm22, Some(2.883));
    assert!((rows[0].subconvexity - 2.827).abs() < 5e-3);
}

#[test]
fn table_writes_to_out_path() {
    let dir = std::env::temp_dir().join("turing-bounds-cli-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("row.csv");
    let out = run(&["table", "--heights", "1e5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("T,thm22,convexity,subconvexity,d,delta,a,b,c"));
    assert!(text.contains("1e5,2.747000,"));
}

#[test]
fn crossover_without_sign_change_exits_3() {
    let out = run(&["crossover", "--low", "1e5", "--high", "1e6"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("no sign change"), "{err}");
}

#[test]
fn crossover_default_bracket_lands_in_window() {
    let out = run(&["crossover", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let t_star = doc["crossover"].as_f64().unwrap();
    assert!((2.5e10..=3.2e10).contains(&t_star), "{t_star:e}");
}

#[test]
fn verify_small_sample_passes_and_repeats_identically() {
    let args = ["verify", "--sigma-grid", "6", "--t-samples", "6", "--seed", "7"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(stdout(&first).contains("violations = 0"));
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_sigma_one_respects_one_line_bound() {
    // A single grid point lands on sigma = 1/2 by construction; instead pin
    // the one-line check through JSON on a 2-point grid whose upper point is
    // sigma = 1 + delta; use text output max ratio as the smoke signal.
    let out = run(&["verify", "--sigma-grid", "3", "--t-samples", "4", "--seed", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("max ratio = 0."), "{text}");
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = std::env::temp_dir().join("turing-bounds-cli-config");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coeffs.conf");
    std::fs::write(&path, "delta = 0.148\nd = 0.762\nt0 = 1e10\n").unwrap();
    let from_config = run(&["coeffs", "--config", path.to_str().unwrap()]);
    assert!(from_config.status.success());
    assert!(stdout(&from_config).contains("a = 1.697342"));

    // Flag overrides the config's delta; b moves accordingly.
    let overridden = run(&[
        "coeffs", "--config", path.to_str().unwrap(), "--delta", "0.279",
    ]);
    assert!(overridden.status.success());
    assert!(stdout(&overridden).contains("b = 0.203559"), "{}", stdout(&overridden));
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["coeffs", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("coeffs"));
}
