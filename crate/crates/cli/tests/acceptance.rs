//! Acceptance criteria, one printed line each. Every comparison is exact;
//! the only pinned tolerances are the wall-clock budgets.
//!
//! Criterion 6 contains the identity T^(2m) = theta(varpi_F)^2 Id, which
//! does not hold at m = 2 with theta(varpi_F) = zeta_4 (the operator power
//! is c^(2m) = theta(varpi_F)^(2m) instead). Its line reports FAIL; the
//! test asserts that the failure is exactly that identity at exactly those
//! rows and that every other part of the criterion passes.

use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use tjm_cli::sweep::regular_exponents;
use tjm_cli::{run_verify, Config, RunOptions};
use tjm_core::characters::{gauss_sum, verify_gauss_lemma, verify_hasse_davenport, AddChar, MultChar};
use tjm_core::report::{CheckEntry, Status, VerificationReport};
use tjm_core::{verify_suite, CheckSelection, CycNum, FieldTower, Root, SuiteParams};

struct Outcome {
    passed: bool,
    detail: String,
}

fn ok(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn suite(p: u32, n: u32, d: u32, e: i64, pi: Root, groups: &[&str]) -> VerificationReport {
    let mut sp = SuiteParams::new(p, 1, n, d, e);
    sp.theta_pi = pi;
    verify_suite(&sp, &CheckSelection::only(groups).unwrap()).unwrap()
}

fn entry<'a>(r: &'a VerificationReport, name: &str) -> Option<&'a CheckEntry> {
    r.find(name).next()
}

fn passes(r: &VerificationReport, name: &str) -> bool {
    entry(r, name).is_some_and(|e| e.status == Status::Pass)
}

fn first_failure(r: &VerificationReport) -> Option<String> {
    r.checks.iter().find(|c| c.status == Status::Fail).map(|c| format!("{}: {}", c.name, c.detail))
}

fn criterion_1() -> Outcome {
    let mut rows = 0;
    for q in [3u32, 5, 7] {
        let t = FieldTower::new(q, 1, 2, 2).unwrap();
        for e in regular_exponents(q, 1, 2, 2).unwrap() {
            let theta = MultChar::new(&t, 2, e).unwrap();
            let out = verify_gauss_lemma(&t, &theta).unwrap();
            if let Some(bad) = out.iter().find(|c| c.status != Status::Pass) {
                return ok(false, format!("q = {q}, e = {e}: {}", bad.detail));
            }
            rows += 1;
        }
    }
    ok(true, format!("G(theta^(q-1), psi o Tr) = q theta(-1) for {rows} regular characters, q in {{3, 5, 7}}"))
}

fn criterion_2() -> Outcome {
    let mut rows = 0;
    for (q, m) in [(3u32, 1u32), (3, 2), (5, 1)] {
        let t = FieldTower::new(q, 1, 2 * m, 2).unwrap();
        for e in regular_exponents(q, 1, 2 * m, 2).unwrap() {
            let theta = MultChar::new(&t, 2, e).unwrap();
            let out = verify_hasse_davenport(&t, &theta).unwrap();
            if out.len() != 2 || out.iter().any(|c| c.status != Status::Pass) {
                return ok(false, format!("(q, m) = ({q}, {m}), e = {e}"));
            }
            rows += 1;
        }
    }
    ok(true, format!("lift and closed form hold for {rows} (q, m, theta) rows"))
}

fn dimension_line(r: &VerificationReport, with_sp: bool) -> Result<(), String> {
    let mut names = vec!["whittaker_dimension"];
    if with_sp {
        names.extend(["sp_dimension", "st_dimension"]);
    }
    for name in names {
        if !passes(r, name) {
            return Err(format!("{name} at {:?}: {:?}", (r.parameters.q, r.parameters.n, r.parameters.d), entry(r, name).map(|e| &e.left)));
        }
    }
    Ok(())
}

fn criterion_3() -> (Outcome, Duration) {
    for (p, n, d) in [(3u32, 2u32, 2u32), (5, 2, 2), (3, 3, 3), (3, 4, 2)] {
        let r = suite(p, n, d, 1, Root::one(), &["dimensions"]);
        if let Err(e) = dimension_line(&r, true) {
            return (ok(false, e), Duration::ZERO);
        }
    }
    // the gated point goes through the CLI path with the flag
    let start = Instant::now();
    let cfg = Config::parse("p = 3\nn = 4\nd = 4\ntheta_exponent = 1\nchecks = [\"dimensions\"]\noutput = \"json\"\n").unwrap();
    if run_verify(&cfg, &RunOptions::default()).is_ok() {
        return (ok(false, "(3, 4, 4) ran without --allow-large"), Duration::ZERO);
    }
    let out = run_verify(&cfg, &RunOptions { allow_large: true, ..Default::default() }).unwrap();
    let r: VerificationReport = serde_json::from_str(&out.text).unwrap();
    let large = start.elapsed();
    if let Err(e) = dimension_line(&r, true) {
        return (ok(false, e), large);
    }
    (ok(true, format!("d1 d2, d(d-1)/2, d(d-1)/2 + d at 4 points, plus (3, 4, 4) with --allow-large in {:.2}s", large.as_secs_f64())), large)
}

fn criterion_4() -> Outcome {
    let mut points = 0;
    let mut run = |sp: SuiteParams| -> Result<(), String> {
        let r = verify_suite(&sp, &CheckSelection::only(&["equivariance"]).unwrap()).unwrap();
        for name in ["theta_structure_constants", "shadow_character", "theta_power_n", "theta_frobenius_twist"] {
            if !passes(&r, name) {
                return Err(format!("{name} at {sp:?}"));
            }
        }
        points += entry(&r, "shadow_character").unwrap().points;
        Ok(())
    };
    for (p, n, d) in [(3u32, 2u32, 2u32), (5, 2, 2), (3, 3, 3), (3, 4, 2)] {
        if let Err(e) = run(SuiteParams::new(p, 1, n, d, 1)) {
            return ok(false, e);
        }
    }
    let mut mixed = SuiteParams::new(3, 1, 2, 2, 1);
    mixed.theta2_exponent = Some(2);
    if let Err(e) = run(mixed) {
        return ok(false, e);
    }
    ok(true, format!("structure constants and trace products exact at {points} group elements, including tau1 != tau2 (e = 1, 2)"))
}

fn criterion_5() -> Outcome {
    let mut points = 0;
    let mut rows = 0;
    for (p, n, d, exps) in [(3u32, 3u32, 3u32, regular_exponents(3, 1, 3, 3).unwrap()), (5, 3, 3, vec![1, 2])] {
        for e in exps {
            let r = suite(p, n, d, e, Root::one(), &["odd_d"]);
            if !passes(&r, "sp_character") {
                return ok(false, format!("(q, d, e) = ({p}, {d}, {e}): {:?}", first_failure(&r)));
            }
            points += entry(&r, "sp_character").unwrap().points;
            rows += 1;
        }
    }
    ok(true, format!("chi_Sp = exterior square at {points} group elements over {rows} characters"))
}

struct C6 {
    outcome: Outcome,
    /// True when the only failures are the stated T^(2m) identity at rows
    /// with theta(varpi_F)^(2m) != theta(varpi_F)^2.
    conflict_only: bool,
}

fn criterion_6() -> C6 {
    let required = [
        "t_block_stable",
        "t_power_eigenvalue",
        "t_whittaker_eigenvector",
        "t_eigenvalue_gauss",
        "t_eigenvalue_closed_form",
        "t_eigenvalue_predicted",
        "sp_character_predicted",
    ];
    let mut rows = 0;
    let mut conflict_rows = Vec::new();
    let mut other = None;
    let mut observed = String::new();
    for (q, m) in [(3u32, 1u32), (3, 2), (5, 1)] {
        for e in regular_exponents(q, 1, 2 * m, 2).unwrap() {
            for pi in [Root::one(), Root::new(4, 1)] {
                rows += 1;
                let r = suite(q, 2 * m, 2, e, pi, &["d2_theorem"]);
                if let Some(bad) = required.iter().find(|n| !passes(&r, n)) {
                    other.get_or_insert(format!("{bad} at (q={q}, m={m}, e={e}, pi={pi})"));
                }
                let stated = entry(&r, "t_power_theta_pi_squared");
                if !stated.is_some_and(|s| s.status == Status::Pass) {
                    let explained = pi.pow(2 * m as i64) != pi.pow(2);
                    if !explained {
                        other.get_or_insert(format!("unexplained T^(2m) failure at (q={q}, m={m}, e={e}, pi={pi})"));
                    }
                    if let Some(s) = stated {
                        if observed.is_empty() {
                            observed = format!(
                                "observed T^(2m) = {} vs theta(varpi_F)^2 = {}",
                                s.left.as_ref().map(CycNum::to_string).unwrap_or_default(),
                                s.right.as_ref().map(CycNum::to_string).unwrap_or_default()
                            );
                        }
                    }
                    conflict_rows.push(format!("(q={q}, m={m}, e={e})"));
                }
            }
        }
    }
    let passed = other.is_none() && conflict_rows.is_empty();
    let detail = match (&other, conflict_rows.is_empty()) {
        (Some(o), _) => format!("{o}"),
        (None, true) => format!("T-chain exact on all {rows} rows"),
        (None, false) => format!(
            "T^(2m) = theta(varpi_F)^2 Id fails on {} of {rows} rows, all at m = 2 with theta(varpi_F) = zeta_4 ({observed}); T^(2m) = c^(2m), TW = cW, c = (-1)^(m+1) theta(-varpi_F), c = predicted character at varpi hold on every row",
            conflict_rows.len()
        ),
    };
    C6 { outcome: ok(passed, detail), conflict_only: other.is_none() }
}

fn criterion_7() -> Outcome {
    let (mut agree, mut differ, mut rows) = (0, 0, 0);
    for m in [1u32, 2] {
        for e in regular_exponents(3, 1, 2 * m, 2).unwrap() {
            let r = suite(3, 2 * m, 2, e, Root::one(), &["remark"]);
            let c = entry(&r, "remark_biconditional").unwrap();
            if c.status != Status::Pass {
                return ok(false, format!("m = {m}, e = {e}: {}", c.detail));
            }
            if c.detail.starts_with("Sp character equals") {
                agree += 1;
            } else {
                differ += 1;
            }
            rows += 1;
        }
    }
    ok(agree > 0 && differ > 0, format!("biconditional holds on {rows} rows; {agree} with chi_Sp = exterior square, {differ} without"))
}

fn criterion_8() -> Outcome {
    let mut detail = Vec::new();
    for (n, d) in [(3u32, 3u32), (5, 5), (4, 4)] {
        let r = suite(3, n, d, 1, Root::one(), &["mackey"]);
        if !passes(&r, "mackey_dimension") || !passes(&r, "mackey_twist") {
            return ok(false, format!("d = {d}: {:?}", first_failure(&r)));
        }
        let note = if d % 2 == 0 { " (self-paired y = d/2 reported only)" } else { "" };
        detail.push(format!("d = {d}: {} pairs{note}", entry(&r, "mackey_dimension").unwrap().points));
    }
    ok(true, detail.join("; "))
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_tjm"))
}

fn criterion_9() -> Outcome {
    // Bruhat round trip, exhaustive at Q = 9
    let r = suite(3, 2, 2, 1, Root::one(), &["bruhat"]);
    let rt = entry(&r, "bruhat_round_trip").unwrap();
    if rt.status != Status::Pass || rt.points != 5760 {
        return ok(false, format!("Bruhat round trip: {} points, {:?}", rt.points, rt.status));
    }
    // projectors at every parameter point used above
    let mut blocks = 0;
    for (p, n, d) in [(3u32, 2u32, 2u32), (5, 2, 2), (3, 3, 3), (3, 4, 2), (5, 3, 3), (3, 4, 4)] {
        let r = suite(p, n, d, 1, Root::one(), &["dimensions"]);
        for name in ["whittaker_idempotent", "whittaker_block_rank", "whittaker_eigen"] {
            if !passes(&r, name) {
                return ok(false, format!("{name} at ({p}, {n}, {d})"));
            }
        }
        blocks += d * d;
    }
    // E_y against E_(-y)
    for (p, n, d, group) in [(3u32, 3u32, 3u32, "odd_d"), (5, 3, 3, "odd_d"), (3, 4, 4, "even_d")] {
        let r = suite(p, n, d, 1, Root::one(), &[group]);
        if !passes(&r, "orbit_pairing") {
            return ok(false, format!("orbit pairing at ({p}, {n}, {d})"));
        }
    }
    // |G|^2 = Q for every non-trivial character
    let mut chars = 0;
    for (p, n) in [(3u32, 2u32), (5, 2), (7, 2), (3, 3), (3, 4), (5, 3)] {
        let t = Arc::new(FieldTower::new(p, 1, n, n).unwrap());
        let size = t.size(n) as i64;
        for e in 1..size - 1 {
            let g = gauss_sum(&t, &MultChar::new(&t, n, e).unwrap(), &AddChar::standard(n));
            if &g * &g.conj_complex() != CycNum::from_int(size) {
                return ok(false, format!("|G|^2 at p = {p}, n = {n}, e = {e}"));
            }
            chars += 1;
        }
    }
    // byte-stable reports from two consecutive runs of the binary
    let dir = tempfile::TempDir::new().unwrap();
    let cfg = dir.path().join("point.toml");
    std::fs::write(&cfg, "p = 3\nn = 4\nd = 2\ntheta_exponent = 1\ntheta_pi = [4, 1]\n").unwrap();
    for fmt in ["json", "markdown"] {
        let mut bodies = Vec::new();
        for i in 0..2 {
            let path = dir.path().join(format!("{fmt}{i}"));
            Command::new(bin())
                .args(["verify", "--config", cfg.to_str().unwrap(), "--output", fmt, "--report", path.to_str().unwrap()])
                .output()
                .unwrap();
            bodies.push(std::fs::read(&path).unwrap());
        }
        if bodies[0] != bodies[1] || bodies[0].is_empty() {
            return ok(false, format!("{fmt} report differs between runs"));
        }
    }
    ok(true, format!("5760 Bruhat elements, {blocks} projector blocks, orbit pairing at d = 3, 4, {chars} Gauss sums, stable JSON and markdown"))
}

fn line(id: u32, name: &str, budget_s: u64, elapsed: Duration, o: &Outcome) -> bool {
    let in_budget = elapsed <= Duration::from_secs(budget_s);
    let passed = o.passed && in_budget;
    println!(
        "criterion {id} [{name}]: {} ({:.2}s of {budget_s}s{}) {}",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if in_budget { "" } else { ", over budget" },
        o.detail
    );
    passed
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let (o, t) = timed(criterion_1);
    results.push((1, line(1, "gauss lemma", 1, t, &o)));
    let (o, t) = timed(criterion_2);
    results.push((2, line(2, "hasse-davenport", 5, t, &o)));
    let ((o, large), t) = timed(criterion_3);
    results.push((3, line(3, "dimensions", 30, t.saturating_sub(large), &o)));
    let (o, t) = timed(criterion_4);
    results.push((4, line(4, "equivariance", 10, t, &o)));
    let (o, t) = timed(criterion_5);
    results.push((5, line(5, "odd d", 20, t, &o)));
    let (c6, t) = timed(criterion_6);
    let c6_line = line(6, "d = 2 theorem", 10, t, &c6.outcome);
    let c6_in_budget = t <= Duration::from_secs(10);
    let (o, t) = timed(criterion_7);
    results.push((7, line(7, "remark", 10, t, &o)));
    let (o, t) = timed(criterion_8);
    results.push((8, line(8, "mackey", 10, t, &o)));
    let (o, t) = timed(criterion_9);
    results.push((9, line(9, "properties", 60, t, &o)));

    let failed: Vec<u32> = results.iter().filter(|(_, p)| !p).map(|(i, _)| *i).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
    // criterion 6 may only fail through the stated T^(2m) identity
    assert!(c6_line || (c6.conflict_only && c6_in_budget), "criterion 6 failed beyond the recorded T^(2m) conflict");
}
