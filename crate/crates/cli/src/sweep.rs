//! Grids of parameter points, run concurrently and reported in grid order.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tjm_core::characters::{is_regular, MultChar};
use tjm_core::report::Status;
use tjm_core::{verify_suite, FieldTower, SuiteParams, VerificationReport};

use crate::config::{Config, ExponentAxis};
use crate::{check_size, format_of, render, CliError, Outcome, RunOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: u32,
    pub f: u32,
    pub n: u32,
    pub d: u32,
    pub theta_exponent: i64,
    pub passed: bool,
    /// Names of failing checks.
    pub failed: Vec<String>,
    pub report: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub passed: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn to_markdown(&self) -> String {
        let mut s = String::from("# Sweep report\n\n");
        let _ = writeln!(s, "Overall: {} ({} points)\n", if self.passed { "PASS" } else { "FAIL" }, self.rows.len());
        if self.rows.is_empty() {
            return s;
        }
        s.push_str("| p | f | n | d | theta exponent | status | failing checks |\n|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} |",
                r.p,
                r.f,
                r.n,
                r.d,
                r.theta_exponent,
                if r.passed { "pass" } else { "FAIL" },
                r.failed.join(", ")
            );
        }
        s
    }
}

fn axis(sweep: &Option<Vec<u32>>, single: Option<u32>, key: &str) -> Result<Vec<u32>, CliError> {
    match (sweep, single) {
        (Some(v), _) => Ok(v.clone()),
        (None, Some(x)) => Ok(vec![x]),
        (None, None) => Err(CliError::Usage(format!("missing config key '{key}' or 'sweep_{key}'"))),
    }
}

/// Grid points in the order p, f, n, d, exponent.
pub fn grid(cfg: &Config) -> Result<Vec<SuiteParams>, CliError> {
    let ps = axis(&cfg.sweep_p, cfg.p, "p")?;
    let fs = cfg.sweep_f.clone().unwrap_or_else(|| vec![cfg.f]);
    let ns = axis(&cfg.sweep_n, cfg.n, "n")?;
    let ds = axis(&cfg.sweep_d, cfg.d, "d")?;
    let theta_pi = cfg.theta_pi()?;
    let mut out = Vec::new();
    for &p in &ps {
        for &f in &fs {
            for &n in &ns {
                for &d in &ds {
                    let exps: Vec<i64> = match &cfg.sweep_theta_exponent {
                        Some(ExponentAxis::List(v)) => v.clone(),
                        Some(ExponentAxis::Keyword(k)) if k == "regular" => regular_exponents(p, f, n, d)?,
                        Some(ExponentAxis::Keyword(k)) => {
                            return Err(CliError::Usage(format!("sweep_theta_exponent must be a list or \"regular\", got \"{k}\"")))
                        }
                        None => vec![cfg.theta_exponent.ok_or_else(|| CliError::Usage("missing config key 'theta_exponent'".into()))?],
                    };
                    for e in exps {
                        out.push(SuiteParams {
                            p,
                            f,
                            n,
                            d,
                            theta_exponent: e,
                            theta2_exponent: cfg.theta2_exponent,
                            theta_pi,
                            polys: cfg.polys(d, n),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Exponents e in [0, q^d - 1) whose character of F_(q^d)^x is regular.
pub fn regular_exponents(p: u32, f: u32, n: u32, d: u32) -> Result<Vec<i64>, CliError> {
    let tower = FieldTower::new(p, f, n, d)?;
    let modulus = tower.size(d) as i64 - 1;
    let mut out = Vec::new();
    for e in 0..modulus {
        if is_regular(&tower, &MultChar::new(&tower, d, e)?) {
            out.push(e);
        }
    }
    Ok(out)
}

pub fn run_sweep(cfg: &Config, opts: &RunOptions) -> Result<Outcome, CliError> {
    let points = grid(cfg)?;
    for sp in &points {
        check_size(sp, opts.allow_large)?;
    }
    let sel = cfg.selection(&opts.checks)?;
    let threads = cfg.max_parallel.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    // indexed collect keeps grid order whatever the completion order
    let results: Vec<Result<VerificationReport, tjm_core::Error>> = pool.install(|| points.par_iter().map(|sp| verify_suite(sp, &sel)).collect());
    let mut rows = Vec::with_capacity(points.len());
    for (sp, res) in points.iter().zip(results) {
        let report = res?;
        let failed = report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.clone()).collect();
        rows.push(SweepRow { p: sp.p, f: sp.f, n: sp.n, d: sp.d, theta_exponent: sp.theta_exponent, passed: report.passed(), failed, report });
    }
    let report = SweepReport { passed: rows.iter().all(|r| r.passed), rows };
    let text = render(&report, || report.to_markdown(), format_of(cfg, opts));
    Ok(Outcome { text, passed: report.passed })
}
