//! End-to-end checks of the binary: exit codes, stream discipline,
//! format agreement, config precedence, and report round-tripping.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use hbim::cli::report::BenchmarkReport;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hbim"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hbim-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn success_paths_exit_zero() {
    for args in [
        vec!["solve", "--problem", "pt"],
        vec!["solve", "--problem", "pf", "--format", "json"],
        vec!["solve", "--problem", "sphere"],
        vec!["solve", "--problem", "overspec", "--time", "0.1,0.5"],
        vec!["profile", "--problem", "pt", "--time", "1", "--x", "0,0.5,1.5"],
        vec!["profile", "--problem", "overspec", "--time", "0.2", "--x", "0,0.1"],
        vec!["error", "--mode", "literal"],
        vec!["error", "--ratio", "2,1.75"],
        vec!["bench", "--no-metadata"],
        vec!["--help"],
    ] {
        let (code, out, err) = run_cli(&args);
        assert_eq!(code, 0, "args {args:?}: stderr {err}");
        assert!(!out.is_empty(), "args {args:?} produced no output");
    }
}

#[test]
fn usage_and_config_errors_exit_one() {
    // Fixed-thickness stage queried beyond its validity horizon.
    let (code, out, err) = run_cli(&[
        "profile", "--problem", "overspec", "--time", "50", "--x", "0",
    ]);
    assert_eq!(code, 1, "stderr: {err}");
    assert!(out.is_empty(), "data stream must stay clean on failure");
    assert!(err.contains("error:"));

    // Mutually exclusive selections.
    let (code, _, err) = run_cli(&["error", "--ratio", "2,1.75", "--n", "2"]);
    assert_eq!(code, 1, "stderr: {err}");

    // Unknown flag is a usage error.
    let (code, _, _) = run_cli(&["solve", "--problem", "pt", "--nonsense"]);
    assert_eq!(code, 1);

    // Unknown key in the config file is rejected, not ignored.
    let bad = scratch("bad.json");
    fs::write(&bad, r#"{"problem": "pt", "temperature": 4.0}"#).unwrap();
    let (code, _, err) = run_cli(&["solve", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "stderr: {err}");

    // Missing required selection.
    let (code, _, _) = run_cli(&["profile", "--time", "1", "--x", "0"]);
    assert_eq!(code, 1);
}

#[test]
fn numerical_failure_exits_two() {
    let (code, out, err) = run_cli(&["error", "--n", "2", "--tol", "1e-30"]);
    assert_eq!(code, 2, "stderr: {err}");
    assert!(out.is_empty());
    assert!(err.contains("error:"));
}

#[test]
fn bench_regression_exits_three_but_writes_report() {
    let path = scratch("degraded.json");
    let (code, _, err) = run_cli(&[
        "bench",
        "--tol",
        "1e-2",
        "--format",
        "json",
        "--no-metadata",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 3, "stderr: {err}");
    assert!(err.contains("FAIL"));
    let report: BenchmarkReport =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.checks.iter().any(|c| !c.pass));
    assert!(report.checks.iter().any(|c| c.pass));
}

#[test]
fn csv_and_json_agree_to_the_digit() {
    let args = ["profile", "--problem", "pt", "--time", "1", "--x", "0,0.4,1.1"];
    let (_, csv, _) = run_cli(&args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (_, json, _) = run_cli(&json_args);

    // Both formats print floats through the same 12-significant-digit
    // formatter, so every numeric CSV cell must appear verbatim in the
    // JSON body.
    let mut checked = 0;
    for line in csv.lines().skip(1) {
        for cell in line.split(',') {
            if cell.contains('e') {
                assert!(json.contains(cell), "token {cell} missing from JSON");
                checked += 1;
            }
        }
    }
    assert!(checked >= 10, "only {checked} numeric cells compared");
}

#[test]
fn config_file_applies_and_flags_override_it() {
    let cfg = scratch("surface.json");
    fs::write(
        &cfg,
        r#"{"problem": "pt", "ts": 5.0, "tinf": 1.0, "time": [1.0], "x": [0.0]}"#,
    )
    .unwrap();

    let (code, out, err) = run_cli(&["profile", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 0, "stderr: {err}");
    let surface: f64 = out
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(surface, 5.0, "surface temperature from config file");

    let (code, out, _) = run_cli(&[
        "profile", "--config", cfg.to_str().unwrap(), "--ts", "9.0",
    ]);
    assert_eq!(code, 0);
    let surface: f64 = out
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(surface, 9.0, "flag must override the config file");
}

#[test]
fn out_flag_redirects_without_touching_stdout() {
    let path = scratch("table.csv");
    let args = ["solve", "--problem", "pf", "--out", path.to_str().unwrap()];
    let (code, out, _) = run_cli(&args);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = fs::read_to_string(&path).unwrap();

    let (_, direct, _) = run_cli(&["solve", "--problem", "pf"]);
    assert_eq!(written, direct, "file and stdout carry identical bytes");
}

#[test]
fn metadata_toggle_controls_timestamp() {
    let (_, with, _) = run_cli(&["solve", "--problem", "pt", "--format", "json"]);
    assert!(with.contains("\"generated_at\""));
    let (_, without, _) = run_cli(&[
        "solve", "--problem", "pt", "--format", "json", "--no-metadata",
    ]);
    assert!(!without.contains("generated_at"));
}

#[test]
fn bench_report_round_trips_losslessly() {
    let (code, json, err) = run_cli(&["bench", "--format", "json", "--no-metadata"]);
    assert_eq!(code, 0, "stderr: {err}");
    let report: BenchmarkReport = serde_json::from_str(&json).unwrap();

    assert_eq!(report.tool, "hbim");
    assert!(report.generated_at.is_none());
    assert_eq!(report.checks.len(), 17);
    assert!(report.checks.iter().all(|c| c.pass), "all benchmark checks pass");
    assert_eq!(report.mismatch.len(), 13);
    assert!(report.mismatch.iter().all(|m| !m.degraded));

    // Every stored float is pre-quantized to the emission grid, so
    // rendering and reparsing is the identity.
    let mut floats: Vec<f64> = Vec::new();
    for row in &report.exponents {
        floats.extend([row.n, row.depth_ratio, row.residual]);
        floats.extend(row.alt_exponent);
        floats.extend(row.alt_depth_ratio);
    }
    for row in &report.mismatch {
        floats.extend([row.value, row.quadrature_error_estimate]);
    }
    for row in &report.heat_defect {
        floats.push(row.delta_q);
    }
    for v in floats {
        let rendered: f64 = format!("{:.11e}", v).parse().unwrap();
        assert_eq!(rendered.to_bits(), v.to_bits(), "{v} not on the 12-digit grid");
    }

    // A second run parses to the identical structure.
    let (_, again, _) = run_cli(&["bench", "--format", "json", "--no-metadata"]);
    let reparsed: BenchmarkReport = serde_json::from_str(&again).unwrap();
    assert_eq!(report, reparsed);
}

#[test]
fn solve_overspec_reports_heatup_horizon() {
    let (code, out, err) = run_cli(&[
        "solve", "--problem", "overspec", "--time", "0.3", "--format", "csv",
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    let rows: Vec<&str> = out.lines().collect();
    let header: Vec<&str> = rows[0].split(',').collect();
    let h = header.iter().position(|c| *c == "heatup_time").unwrap();
    let t_h: f64 = rows[1].split(',').nth(h).unwrap().parse().unwrap();
    let expected = std::f64::consts::LN_2;
    assert!(
        (t_h - expected).abs() <= 1e-11,
        "default heat-up horizon, got {t_h}"
    );
}
