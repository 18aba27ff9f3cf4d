//! Command dispatch for the `tjm` binary: single-point verification,
//! parameter sweeps and model inspection, with deterministic reports.

pub mod config;
pub mod sweep;

use serde::Serialize;
use tjm_core::finite_field::TowerSpec;
use tjm_core::report::{conventions_markdown, Conventions, LevelRecord};
use tjm_core::{verify_suite, Error, FieldTower, SuiteParams, VerificationReport};

pub use config::{Config, OutputFormat};
pub use sweep::{run_sweep, SweepReport, SweepRow};

/// Model dimension d²(Q + 1) above which `--allow-large` is required.
pub const LARGE_MODEL_LIMIT: u64 = 1200;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for anything the caller can fix, 1 for an internal failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Internal(_)) | CliError::Core(Error::Cyc(_)) => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub output: Option<OutputFormat>,
    pub checks: Vec<String>,
    pub allow_large: bool,
}

/// Rendered report text and whether every assertion passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

pub fn model_size(p: u32, f: u32, n: u32, d: u32) -> u64 {
    let big_q = (p as u64).saturating_pow(f * n);
    (d as u64).pow(2).saturating_mul(big_q.saturating_add(1))
}

pub(crate) fn check_size(sp: &SuiteParams, allow_large: bool) -> Result<(), CliError> {
    let size = model_size(sp.p, sp.f, sp.n, sp.d);
    if size > LARGE_MODEL_LIMIT && !allow_large {
        return Err(CliError::Usage(format!(
            "model dimension {size} at (p={}, f={}, n={}, d={}) exceeds {LARGE_MODEL_LIMIT}; pass --allow-large",
            sp.p, sp.f, sp.n, sp.d
        )));
    }
    Ok(())
}

fn format_of(cfg: &Config, opts: &RunOptions) -> OutputFormat {
    opts.output.or(cfg.output).unwrap_or_default()
}

pub fn render(report: &impl Serialize, markdown: impl FnOnce() -> String, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Markdown => markdown(),
    }
}

/// Runs the suite at the single point described by `cfg`.
pub fn run_verify(cfg: &Config, opts: &RunOptions) -> Result<Outcome, CliError> {
    if cfg.is_sweep() {
        return Err(CliError::Usage("config has sweep keys; use the sweep command".into()));
    }
    let sp = cfg.suite_params()?;
    check_size(&sp, opts.allow_large)?;
    let sel = cfg.selection(&opts.checks)?;
    let report: VerificationReport = verify_suite(&sp, &sel)?;
    let text = render(&report, || report.to_markdown(), format_of(cfg, opts));
    Ok(Outcome { text, passed: report.passed() })
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelDescription {
    pub p: u32,
    pub f: u32,
    pub q: u64,
    pub n: u32,
    pub d: u32,
    pub conventions: Conventions,
}

/// The pinned polynomials, generators and conventions for a tower.
pub fn run_show_model(cfg: &Config, opts: &RunOptions) -> Result<Outcome, CliError> {
    let p = cfg.p.ok_or_else(|| CliError::Usage("missing config key 'p'".into()))?;
    let n = cfg.n.ok_or_else(|| CliError::Usage("missing config key 'n'".into()))?;
    let d = cfg.d.ok_or_else(|| CliError::Usage("missing config key 'd'".into()))?;
    let tower = FieldTower::build(&TowerSpec { p, f: cfg.f, n, d, polys: cfg.polys(d, n) })?;
    let levels = tower.levels().into_iter().map(|k| tower.level_info(k).map(LevelRecord::from)).collect::<Result<Vec<_>, _>>()?;
    let desc = ModelDescription { p, f: cfg.f, q: tower.q(), n, d, conventions: Conventions::standard(levels) };
    let text = render(
        &desc,
        || format!("# Model\n\np = {}, f = {}, q = {}, n = {}, d = {}\n\n{}", desc.p, desc.f, desc.q, desc.n, desc.d, conventions_markdown(&desc.conventions)),
        format_of(cfg, opts),
    );
    Ok(Outcome { text, passed: true })
}
