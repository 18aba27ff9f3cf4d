//! Multiplicative and additive characters of the tower levels, Gauss sums,
//! and the Gauss-sum identities used downstream.

use crate::cyclotomic::{CycNum, Root};
use crate::error::{Error, Result};
use crate::finite_field::{pow_mod, FieldTower, FqElem};
use crate::report::CheckEntry;

/// χ on F_{q^k}^×, determined by χ(γ_k) = ζ_{q^k-1}^exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultChar {
    level: u32,
    modulus: u64,
    exponent: u64,
}

impl MultChar {
    pub fn new(tower: &FieldTower, level: u32, exponent: i64) -> Result<Self> {
        if !tower.has_level(level) {
            return Err(Error::NoSuchLevel(level));
        }
        let modulus = tower.size(level) - 1;
        Ok(MultChar { level, modulus, exponent: exponent.rem_euclid(modulus as i64) as u64 })
    }

    /// The character of level `level` taking the value `root` at γ_level.
    /// Requires `root^(q^k - 1) = 1`.
    pub fn from_generator_value(tower: &FieldTower, level: u32, root: Root) -> Result<Self> {
        let modulus = tower.size(level) - 1;
        if modulus % root.order() != 0 {
            return Err(Error::InvalidParameters(format!(
                "{root} is not a value of a character of F_(q^{level})^x"
            )));
        }
        let e = root.exponent() * (modulus / root.order());
        MultChar::new(tower, level, e as i64)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// q^k - 1.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    pub fn pow(&self, k: i64) -> MultChar {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.modulus as i128) as u64;
        MultChar { exponent: e, ..*self }
    }

    pub fn mul(&self, o: &MultChar) -> MultChar {
        assert_eq!(self.level, o.level, "characters of different levels");
        MultChar { exponent: (self.exponent + o.exponent) % self.modulus, ..*self }
    }

    /// χ(x) as a root of unity; `None` at zero.
    pub fn eval_root(&self, tower: &FieldTower, x: FqElem) -> Option<Root> {
        assert_eq!(x.level(), self.level, "character evaluated off its level");
        let lg = tower.log(x)?;
        let e = (self.exponent as u128 * lg as u128 % self.modulus as u128) as i64;
        Some(Root::new(self.modulus, e))
    }

    /// χ(x), with χ(0) = 0.
    pub fn eval(&self, tower: &FieldTower, x: FqElem) -> CycNum {
        self.eval_root(tower, x).map(|r| r.to_cyc()).unwrap_or_else(CycNum::zero)
    }
}

/// θ is regular when θ^{q^i} ≠ θ for 0 < i < k.
pub fn is_regular(tower: &FieldTower, theta: &MultChar) -> bool {
    let m = theta.modulus;
    (1..theta.level).all(|i| {
        let qi = pow_mod(tower.q(), i as u64, m);
        (theta.exponent as u128 * qi as u128 % m as u128) as u64 != theta.exponent
    })
}

/// θ ∘ N_{F_{q^to}/F_{q^k}}, computed on exponents.
pub fn norm_inflate(tower: &FieldTower, theta: &MultChar, to: u32) -> Result<MultChar> {
    if to % theta.level != 0 || !tower.has_level(to) {
        return Err(Error::NoSuchLevel(to));
    }
    let big = tower.size(to) - 1;
    let factor = big / theta.modulus;
    Ok(MultChar { level: to, modulus: big, exponent: theta.exponent * factor % big })
}

/// ψ_0 = ψ_p ∘ Tr_{F_{q^k}/F_p} with ψ_p(1) = ζ_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AddChar {
    level: u32,
}

impl AddChar {
    pub fn standard(level: u32) -> Self {
        AddChar { level }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn eval_root(&self, tower: &FieldTower, x: FqElem) -> Root {
        assert_eq!(x.level(), self.level, "character evaluated off its level");
        Root::new(tower.p() as u64, tower.absolute_trace(x) as i64)
    }

    pub fn eval(&self, tower: &FieldTower, x: FqElem) -> CycNum {
        self.eval_root(tower, x).to_cyc()
    }
}

/// Σ_{x ∈ F^×} χ(x) ψ(x), accumulated in the group ring of μ_{(q^k-1)p}.
pub fn gauss_sum(tower: &FieldTower, chi: &MultChar, psi: &AddChar) -> CycNum {
    assert_eq!(chi.level, psi.level, "Gauss sum of characters on different levels");
    let m = chi.modulus;
    let p = tower.p() as u64;
    let l = m * p;
    let mut counts = vec![0i64; l as usize];
    for (lg, x) in tower.units(chi.level).enumerate() {
        let a = chi.exponent as u128 * lg as u128 % m as u128;
        let t = tower.absolute_trace(x) as u64;
        let idx = (a as u64 * p + t * m) % l;
        counts[idx as usize] += 1;
    }
    CycNum::from_group_ring(l as u32, &counts)
}

fn minus_one(tower: &FieldTower, level: u32) -> FqElem {
    tower.neg(tower.one(level))
}

/// For regular θ on F_{q^2}: G(θ^{q-1}, ψ_0) = q θ(-1), together with the
/// trace-zero facts used in its proof.
pub fn verify_gauss_lemma(tower: &FieldTower, theta: &MultChar) -> Result<Vec<CheckEntry>> {
    if theta.level != 2 {
        return Err(Error::InvalidParameters("the Gauss-sum lemma needs θ on F_(q^2)".into()));
    }
    if !is_regular(tower, theta) {
        return Err(Error::NotRegular { exponent: theta.exponent, degree: 2 });
    }
    let q = tower.q();
    let g = gauss_sum(tower, &theta.pow(q as i64 - 1), &AddChar::standard(2));
    let rhs = CycNum::from_int(q as i64) * theta.eval(tower, minus_one(tower, 2));
    let mut out = vec![CheckEntry::compare(
        "gauss_lemma",
        format!("G(theta^(q-1), psi_0) = q theta(-1) on F_(q^2), q = {q}, exponent {}", theta.exponent),
        g,
        rhs,
    )];

    let x0 = tower.exp(2, (q as i64 + 1) / 2);
    let tr0 = tower.trace_to(x0, 1)?;
    out.push(CheckEntry::boolean(
        "gauss_lemma_trace_zero_witness",
        "gamma^((q+1)/2) has trace zero to F_q",
        tr0.is_zero(),
    ));
    let zeros: Vec<FqElem> = tower
        .units(2)
        .filter(|&x| tower.trace_to(x, 1).map(|t| t.is_zero()).unwrap_or(false))
        .collect();
    let coset = zeros.len() as u64 == q - 1
        && zeros.iter().all(|&x| {
            let r = tower.div(x, x0).expect("x0 is a unit");
            tower.restrict(r, 1).is_some()
        });
    out.push(CheckEntry::boolean(
        "gauss_lemma_trace_zero_coset",
        format!("trace-zero units form the single coset x0 F_q^x ({} elements)", zeros.len()),
        coset,
    ));
    Ok(out)
}

/// Hasse-Davenport lift from F_{q^2} to F_{q^n}, n = 2m:
/// G(θ̃^{q-1}, ψ_0) = (-1)^{m+1} G(θ^{q-1}, ψ∘Tr)^m = (-1)^{m+1} q^m θ(-1)^m.
pub fn verify_hasse_davenport(tower: &FieldTower, theta: &MultChar) -> Result<Vec<CheckEntry>> {
    let n = tower.n();
    if theta.level != 2 || n % 2 != 0 {
        return Err(Error::InvalidParameters("Hasse-Davenport check needs θ on F_(q^2) and even n".into()));
    }
    let m = n / 2;
    let q = tower.q() as i64;
    let lifted = norm_inflate(tower, theta, n)?;
    let left = gauss_sum(tower, &lifted.pow(q - 1), &AddChar::standard(n));
    let g2 = gauss_sum(tower, &theta.pow(q - 1), &AddChar::standard(2));
    let sign = CycNum::from_int(if m % 2 == 1 { 1 } else { -1 });
    let mid = &sign * &g2.pow(m as i64)?;
    let t_minus = theta.eval(tower, minus_one(tower, 2));
    let right = &sign * &(CycNum::from_int(q).pow(m as i64)? * t_minus.pow(m as i64)?);
    let detail = format!("q = {q}, m = {m}, exponent {}", theta.exponent);
    Ok(vec![
        CheckEntry::compare("hasse_davenport_lift", format!("G over F_(q^n) vs (-1)^(m+1) G_2^m; {detail}"), left.clone(), mid),
        CheckEntry::compare("hasse_davenport_closed_form", format!("G over F_(q^n) vs (-1)^(m+1) q^m theta(-1)^m; {detail}"), left, right),
    ])
}

/// Character-sum sanity checks on level `k`: orthogonality for χ and ψ_0,
/// |G(χ, ψ_0)|^2 = |F| for non-trivial χ, and ψ_0 ∘ Frob = ψ_0.
pub fn character_sum_checks(tower: &FieldTower, chi: &MultChar) -> Vec<CheckEntry> {
    let k = chi.level;
    let psi = AddChar::standard(k);
    let size = tower.size(k) as i64;
    let mut out = Vec::new();
    let chi_sum: CycNum = {
        let mut counts = vec![0i64; chi.modulus as usize];
        for lg in 0..chi.modulus {
            counts[(chi.exponent as u128 * lg as u128 % chi.modulus as u128) as usize] += 1;
        }
        CycNum::from_group_ring(chi.modulus as u32, &counts)
    };
    let expect = if chi.is_trivial() { size - 1 } else { 0 };
    out.push(CheckEntry::compare("character_orthogonality", format!("sum of chi over units of level {k}"), chi_sum, CycNum::from_int(expect)));
    let mut counts = vec![0i64; tower.p() as usize];
    for x in tower.elements(k) {
        counts[tower.absolute_trace(x) as usize] += 1;
    }
    out.push(CheckEntry::compare(
        "additive_orthogonality",
        format!("sum of psi_0 over level {k}"),
        CycNum::from_group_ring(tower.p(), &counts),
        CycNum::zero(),
    ));
    let frob_ok = tower.elements(k).all(|x| tower.absolute_trace(tower.frobenius(x, 1)) == tower.absolute_trace(x));
    out.push(CheckEntry::boolean("additive_frobenius_invariance", format!("psi_0(x^q) = psi_0(x) on level {k}"), frob_ok).with_points(size as u64));
    if !chi.is_trivial() {
        let g = gauss_sum(tower, chi, &psi);
        out.push(CheckEntry::compare(
            "gauss_sum_absolute_value",
            format!("G conj(G) = |F_(q^{k})| for exponent {}", chi.exponent),
            &g * &g.conj_complex(),
            CycNum::from_int(size),
        ));
    }
    out
}
