//! The flat TOML run configuration.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tjm_core::{CheckSelection, Root, SuiteParams};

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Markdown,
    Json,
}

/// `"all"` or a list of check groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Checks {
    Keyword(String),
    List(Vec<String>),
}

/// A sweep axis over exponents: explicit values or every regular one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExponentAxis {
    Keyword(String),
    List(Vec<i64>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub p: Option<u32>,
    #[serde(default = "one")]
    pub f: u32,
    pub n: Option<u32>,
    pub d: Option<u32>,
    pub theta_exponent: Option<i64>,
    pub theta2_exponent: Option<i64>,
    /// θ(ϖ_F) as [order, exponent].
    pub theta_pi: Option<[u64; 2]>,
    pub checks: Option<Checks>,
    pub output: Option<OutputFormat>,
    pub poly_1: Option<Vec<u32>>,
    pub poly_d: Option<Vec<u32>>,
    pub poly_n: Option<Vec<u32>>,
    pub sweep_p: Option<Vec<u32>>,
    pub sweep_f: Option<Vec<u32>>,
    pub sweep_n: Option<Vec<u32>>,
    pub sweep_d: Option<Vec<u32>>,
    pub sweep_theta_exponent: Option<ExponentAxis>,
    pub max_parallel: Option<usize>,
}

fn one() -> u32 {
    1
}

fn required<T: Copy>(v: Option<T>, key: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing config key '{key}'")))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("bad config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn theta_pi(&self) -> Result<Root, CliError> {
        match self.theta_pi {
            None => Ok(Root::one()),
            Some([0, _]) => Err(CliError::Usage("theta_pi order must be positive".into())),
            Some([order, exp]) => Ok(Root::new(order, exp as i64)),
        }
    }

    pub fn polys(&self, d: u32, n: u32) -> BTreeMap<u32, Vec<u32>> {
        let mut out = BTreeMap::new();
        for (k, v) in [(1, &self.poly_1), (d, &self.poly_d), (n, &self.poly_n)] {
            if let Some(poly) = v {
                out.insert(k, poly.clone());
            }
        }
        out
    }

    /// Suite parameters for a single point.
    pub fn suite_params(&self) -> Result<SuiteParams, CliError> {
        let (p, n, d) = (required(self.p, "p")?, required(self.n, "n")?, required(self.d, "d")?);
        Ok(SuiteParams {
            p,
            f: self.f,
            n,
            d,
            theta_exponent: required(self.theta_exponent, "theta_exponent")?,
            theta2_exponent: self.theta2_exponent,
            theta_pi: self.theta_pi()?,
            polys: self.polys(d, n),
        })
    }

    /// Check groups from the command line if given, else from the config.
    pub fn selection(&self, overrides: &[String]) -> Result<CheckSelection, CliError> {
        let names: Vec<String> = if !overrides.is_empty() {
            overrides.to_vec()
        } else {
            match &self.checks {
                None => Vec::new(),
                Some(Checks::Keyword(k)) if k == "all" => Vec::new(),
                Some(Checks::Keyword(k)) => vec![k.clone()],
                Some(Checks::List(l)) => l.clone(),
            }
        };
        if names.iter().any(|n| n == "all") {
            return Ok(CheckSelection::all());
        }
        Ok(CheckSelection::only(&names)?)
    }

    pub fn is_sweep(&self) -> bool {
        self.sweep_p.is_some() || self.sweep_f.is_some() || self.sweep_n.is_some() || self.sweep_d.is_some() || self.sweep_theta_exponent.is_some()
    }
}
