use std::path::PathBuf;
use std::process::Command;

use tempfile::TempDir;
use tjm_cli::{model_size, run_sweep, run_verify, Config, OutputFormat, RunOptions, SweepReport};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_tjm"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn tjm(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(bin()).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn verify_passes_and_reports_sp_dimension() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "a.toml", "p = 3\nf = 1\nn = 2\nd = 2\ntheta_exponent = 1\ntheta_pi = [1, 0]\nchecks = \"all\"\n");
    let (code, out, _) = tjm(&["verify", "--config", cfg.to_str().unwrap(), "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let sp = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "sp_dimension").unwrap();
    assert_eq!(sp["status"], "pass");
    assert_eq!(sp["left"]["coeffs"][0], "1");
}

#[test]
fn odd_d_point_passes() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "a.toml", "p = 3\nn = 3\nd = 3\ntheta_exponent = 1\n");
    let (code, out, _) = tjm(&["verify", "--config", cfg.to_str().unwrap(), "--check", "odd_d"]);
    assert_eq!(code, 0);
    assert!(out.contains("| odd_d | sp_character | pass |"));
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.toml", "p = 3\nn = 2\nd = 2\ntheta_exponent = 4\n");
    let (code, _, err) = tjm(&["verify", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("not regular"));
    let unknown = write(&dir, "u.toml", "p = 3\nn = 2\nd = 2\ntheta_exponent = 1\ncolour = 1\n");
    assert_eq!(tjm(&["verify", "--config", unknown.to_str().unwrap()]).0, 2);
    let even = write(&dir, "e.toml", "p = 2\nn = 2\nd = 2\ntheta_exponent = 1\n");
    assert_eq!(tjm(&["verify", "--config", even.to_str().unwrap()]).0, 2);
    let nodiv = write(&dir, "n.toml", "p = 3\nn = 3\nd = 2\ntheta_exponent = 1\n");
    assert_eq!(tjm(&["verify", "--config", nodiv.to_str().unwrap()]).0, 2);
    assert_eq!(tjm(&["verify"]).0, 2);
    assert_eq!(tjm(&["verify", "--config", "/nonexistent.toml"]).0, 2);
}

#[test]
fn assertion_failure_exits_with_one() {
    // the T^(2m) = theta(varpi_F)^2 check fails at m = 2 with theta(varpi_F) = zeta_4
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "a.toml", "p = 3\nn = 4\nd = 2\ntheta_exponent = 1\ntheta_pi = [4, 1]\nchecks = [\"d2_theorem\"]\n");
    let (code, out, _) = tjm(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("| d2_theorem | t_power_theta_pi_squared | FAIL |"));
}

#[test]
fn large_models_need_the_flag() {
    assert_eq!(model_size(3, 1, 4, 4), 16 * 82);
    let cfg = Config::parse("p = 3\nn = 4\nd = 4\ntheta_exponent = 1\nchecks = [\"characters\"]\n").unwrap();
    assert!(run_verify(&cfg, &RunOptions::default()).is_err());
    let opts = RunOptions { allow_large: true, ..Default::default() };
    assert!(run_verify(&cfg, &opts).unwrap().passed);
}

#[test]
fn report_file_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "a.toml", "p = 3\nn = 2\nd = 2\ntheta_exponent = 3\ntheta_pi = [4, 1]\n");
    let mut bodies = Vec::new();
    for (i, fmt) in ["json", "json", "markdown", "markdown"].iter().enumerate() {
        let path = dir.path().join(format!("r{i}"));
        let (code, out, _) = tjm(&["verify", "--config", cfg.to_str().unwrap(), "--output", fmt, "--report", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.starts_with("PASS"));
        bodies.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    assert_eq!(bodies[2], bodies[3]);
}

#[test]
fn json_and_markdown_carry_the_same_checks() {
    let cfg = Config::parse("p = 5\nn = 2\nd = 2\ntheta_exponent = 1\n").unwrap();
    let json = run_verify(&cfg, &RunOptions { output: Some(OutputFormat::Json), ..Default::default() }).unwrap();
    let md = run_verify(&cfg, &RunOptions { output: Some(OutputFormat::Markdown), ..Default::default() }).unwrap();
    let report: tjm_core::VerificationReport = serde_json::from_str(&json.text).unwrap();
    let rows = md.text.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| group")).count();
    assert_eq!(rows, report.checks.len());
    for c in &report.checks {
        assert!(md.text.contains(&format!("| {} | {} |", c.group, c.name)));
    }
}

#[test]
fn sweep_over_q_has_one_row_per_point() {
    let cfg = Config::parse("sweep_p = [3, 5, 7]\nn = 2\nd = 2\ntheta_exponent = 1\nchecks = [\"gauss_lemma\", \"d2_theorem\"]\n").unwrap();
    let out = run_sweep(&cfg, &RunOptions { output: Some(OutputFormat::Json), ..Default::default() }).unwrap();
    let rep: SweepReport = serde_json::from_str(&out.text).unwrap();
    assert!(out.passed);
    assert_eq!(rep.rows.iter().map(|r| r.p).collect::<Vec<_>>(), vec![3, 5, 7]);
}

#[test]
fn regular_sweep_filters_exponents() {
    // e is regular on F_9 exactly when 3e and e differ mod 8
    let cfg = Config::parse("p = 3\nn = 2\nd = 2\nsweep_theta_exponent = \"regular\"\nchecks = [\"characters\"]\nmax_parallel = 2\n").unwrap();
    let out = run_sweep(&cfg, &RunOptions { output: Some(OutputFormat::Json), ..Default::default() }).unwrap();
    let rep: SweepReport = serde_json::from_str(&out.text).unwrap();
    let expect: Vec<i64> = (0..8).filter(|e| (3 * e) % 8 != *e).collect();
    assert_eq!(rep.rows.iter().map(|r| r.theta_exponent).collect::<Vec<_>>(), expect);
}

#[test]
fn empty_sweep_passes() {
    let cfg = Config::parse("p = 3\nn = 2\nd = 2\nsweep_theta_exponent = []\n").unwrap();
    let out = run_sweep(&cfg, &RunOptions::default()).unwrap();
    assert!(out.passed);
    assert!(out.text.contains("(0 points)"));
}

#[test]
fn sweep_with_a_failing_point_fails() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "s.toml", "p = 3\nsweep_n = [2, 4]\nd = 2\ntheta_exponent = 1\ntheta_pi = [4, 1]\nchecks = [\"d2_theorem\"]\n");
    let (code, out, _) = tjm(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("| 3 | 1 | 2 | 2 | 1 | pass |"));
    assert!(out.contains("| 3 | 1 | 4 | 2 | 1 | FAIL | t_power_theta_pi_squared |"));
}

#[test]
fn show_model_prints_pinned_polynomials() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "a.toml", "p = 3\nn = 2\nd = 2\n");
    let (code, out, _) = tjm(&["show-model", "--config", cfg.to_str().unwrap(), "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let top = &v["conventions"]["levels"][1];
    assert_eq!(top["size"], 9);
    assert_eq!(top["polynomial"], serde_json::json!([2, 2, 1]));
}

#[test]
fn user_polynomials_are_checked() {
    let dir = TempDir::new().unwrap();
    // x^2 + 1 is irreducible over F_3 but not primitive; x^2 + 2 is reducible
    let ok = write(&dir, "a.toml", "p = 3\nn = 2\nd = 2\ntheta_exponent = 1\npoly_n = [1, 0, 1]\nchecks = [\"characters\", \"dimensions\"]\n");
    assert_eq!(tjm(&["verify", "--config", ok.to_str().unwrap()]).0, 0);
    let bad = write(&dir, "b.toml", "p = 3\nn = 2\nd = 2\ntheta_exponent = 1\npoly_n = [2, 0, 1]\n");
    let (code, _, err) = tjm(&["verify", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("not irreducible"));
}
