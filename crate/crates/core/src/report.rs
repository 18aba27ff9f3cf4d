//! Check entries and verification reports, with JSON and markdown rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::finite_field::LevelInfo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported for information, not asserted.
    Info,
}

/// One named identity check. A failed comparison carries both exact values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    /// The check group that produced the entry.
    #[serde(default)]
    pub group: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
    /// Number of points at which the identity was compared.
    pub points: u64,
    pub left: Option<CycNum>,
    pub right: Option<CycNum>,
}

impl CheckEntry {
    pub fn compare(name: &str, detail: impl Into<String>, left: CycNum, right: CycNum) -> Self {
        let status = if left == right { Status::Pass } else { Status::Fail };
        CheckEntry { group: String::new(), name: name.into(), status, detail: detail.into(), points: 1, left: Some(left), right: Some(right) }
    }

    pub fn boolean(name: &str, detail: impl Into<String>, ok: bool) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        CheckEntry { group: String::new(), name: name.into(), status, detail: detail.into(), points: 1, left: None, right: None }
    }

    pub fn info(name: &str, detail: impl Into<String>, value: Option<CycNum>) -> Self {
        CheckEntry { group: String::new(), name: name.into(), status: Status::Info, detail: detail.into(), points: 0, left: value, right: None }
    }

    pub fn with_points(mut self, points: u64) -> Self {
        self.points = points;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Compares two functions on a list of points; on the first mismatch the
/// entry fails and records that point's values.
pub fn compare_all<P: std::fmt::Debug>(
    name: &str,
    detail: &str,
    points: impl IntoIterator<Item = P>,
    mut left: impl FnMut(&P) -> CycNum,
    mut right: impl FnMut(&P) -> CycNum,
) -> CheckEntry {
    let mut count = 0u64;
    for pt in points {
        count += 1;
        let (l, r) = (left(&pt), right(&pt));
        if l != r {
            return CheckEntry {
                group: String::new(),
                name: name.into(),
                status: Status::Fail,
                detail: format!("{detail}; first mismatch at {pt:?}"),
                points: count,
                left: Some(l),
                right: Some(r),
            };
        }
    }
    CheckEntry { group: String::new(), name: name.into(), status: Status::Pass, detail: detail.into(), points: count, left: None, right: None }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub p: u32,
    pub f: u32,
    pub q: u64,
    pub n: u32,
    pub d: u32,
    pub m: u32,
    pub theta_exponent: u64,
    pub theta2_exponent: Option<u64>,
    /// θ(ϖ_F) as (order, exponent).
    pub theta_pi: (u64, u64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Conventions {
    pub weyl_element: String,
    pub signed_weyl_element: String,
    pub additive_character: String,
    pub group_law: String,
    pub tau_uniformizer: String,
    pub whittaker_normalization: String,
    pub modulus_character: String,
    pub levels: Vec<LevelRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub degree_over_q: u32,
    pub size: u64,
    pub polynomial: Vec<u32>,
    pub generator: Vec<u32>,
}

impl From<LevelInfo> for LevelRecord {
    fn from(l: LevelInfo) -> Self {
        LevelRecord { degree_over_q: l.degree_over_q, size: l.size, polynomial: l.polynomial, generator: l.generator }
    }
}

impl Conventions {
    pub fn standard(levels: Vec<LevelRecord>) -> Self {
        Conventions {
            weyl_element: "s = [[0,1],[1,0]]; Bruhat cells B and B s N".into(),
            signed_weyl_element: "the intertwining operator T uses [[0,1],[-1,0]]".into(),
            additive_character: "psi_0 = psi_p o Tr_{F_Q/F_p}, psi_p(1) = zeta_p".into(),
            group_law: "varpi x varpi^-1 = x^q, (x,j)(x',j') = (x Frob^j(x'), j+j')".into(),
            tau_uniformizer: "tau(varpi) e_i = e_{i-1} for i >= 1, e_0 -> lambda e_{d-1}".into(),
            whittaker_normalization: "W(1) = 0, W(s n_x) = psi_0(x)".into(),
            modulus_character: "nu_tau cancels on the diagonal and is not evaluated".into(),
            levels,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub parameters: Parameters,
    pub conventions: Conventions,
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckEntry::passed)
    }

    pub fn find(&self, name: &str) -> impl Iterator<Item = &CheckEntry> {
        let name = name.to_string();
        self.checks.iter().filter(move |c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let p = &self.parameters;
        let _ = writeln!(s, "# Verification report\n");
        let _ = writeln!(
            s,
            "Parameters: p = {}, f = {}, q = {}, n = {}, d = {}, m = {}, theta exponent = {}{}, theta(varpi_F) = zeta_{}^{}\n",
            p.p,
            p.f,
            p.q,
            p.n,
            p.d,
            p.m,
            p.theta_exponent,
            p.theta2_exponent.map(|e| format!(", second exponent = {e}")).unwrap_or_default(),
            p.theta_pi.0,
            p.theta_pi.1
        );
        let _ = writeln!(s, "Overall: {}\n", if self.passed() { "PASS" } else { "FAIL" });
        s.push_str(&conventions_markdown(&self.conventions));
        s.push_str(&checks_markdown(&self.checks));
        s
    }
}

pub fn conventions_markdown(c: &Conventions) -> String {
    let mut s = String::from("## Conventions\n\n");
    for (k, v) in [
        ("Weyl element", &c.weyl_element),
        ("Signed Weyl element", &c.signed_weyl_element),
        ("Additive character", &c.additive_character),
        ("Group law", &c.group_law),
        ("tau(varpi)", &c.tau_uniformizer),
        ("Whittaker normalization", &c.whittaker_normalization),
        ("Modulus character", &c.modulus_character),
    ] {
        let _ = writeln!(s, "- {k}: {v}");
    }
    for l in &c.levels {
        let _ = writeln!(
            s,
            "- Level F_(q^{}) (size {}): polynomial {:?}, generator {:?}",
            l.degree_over_q, l.size, l.polynomial, l.generator
        );
    }
    s.push('\n');
    s
}

pub fn checks_markdown(checks: &[CheckEntry]) -> String {
    let mut s = String::from("## Checks\n\n| group | check | status | points | detail | left | right |\n|---|---|---|---|---|---|---|\n");
    for c in checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Info => "info",
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} |",
            c.group,
            c.name,
            status,
            c.points,
            c.detail.replace('|', "\\|"),
            c.left.as_ref().map(CycNum::compact).unwrap_or_default(),
            c.right.as_ref().map(CycNum::compact).unwrap_or_default()
        );
    }
    s
}
