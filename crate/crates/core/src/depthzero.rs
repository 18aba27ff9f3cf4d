//! The finite model of D^× and its depth-zero representation τ.
//!
//! D^× is modelled by pairs (x, j) with x ∈ F_Q^× and j ∈ Z, standing for
//! x·ϖ^j, with ϖxϖ^{-1} = x^q. τ = Ind θ̃ is realised on e_0, ..., e_{d-1}
//! with x·e_i = θ̃^{q^i}(x) e_i and the uniformizer acting by the lowering
//! shift τ(ϖ)e_i = e_{i-1} (i ≥ 1), τ(ϖ)e_0 = λ e_{d-1}. The lowering
//! direction is forced by ϖxϖ^{-1} = x^q once d ≥ 3; for d = 2 it is
//! conjugate to the raising matrix [[0,λ],[1,0]] by swapping e_0 and e_1.

use std::sync::Arc;

use crate::characters::{is_regular, norm_inflate, MultChar};
use crate::cyclotomic::{CycNum, Root};
use crate::error::{Error, Result};
use crate::finite_field::{FieldTower, FqElem};
use crate::linalg::{rank_of_rows, Matrix};

/// θ on F_{q^d}^× (regular), the value θ(ϖ_F), and the boundary scalar
/// λ = θ(-1)^{m+1} θ(ϖ_F).
#[derive(Clone, Debug)]
pub struct DivisionParams {
    tower: Arc<FieldTower>,
    theta: MultChar,
    theta_pi: Root,
    lambda: Root,
}

impl DivisionParams {
    pub fn new(tower: Arc<FieldTower>, theta_exponent: i64, theta_pi: Root) -> Result<Self> {
        let d = tower.d();
        let theta = MultChar::new(&tower, d, theta_exponent)?;
        if !is_regular(&tower, &theta) {
            return Err(Error::NotRegular { exponent: theta.exponent(), degree: d });
        }
        let m = (tower.n() / d) as i64;
        let minus_one = tower.neg(tower.one(d));
        let t_minus = theta.eval_root(&tower, minus_one).expect("-1 is a unit");
        let lambda = t_minus.pow(m + 1).mul(&theta_pi);
        Ok(DivisionParams { tower, theta, theta_pi, lambda })
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }
    pub fn theta(&self) -> &MultChar {
        &self.theta
    }
    pub fn theta_pi(&self) -> Root {
        self.theta_pi
    }
    pub fn lambda(&self) -> Root {
        self.lambda
    }
    pub fn d(&self) -> u32 {
        self.tower.d()
    }
    pub fn n(&self) -> u32 {
        self.tower.n()
    }
    pub fn m(&self) -> u32 {
        self.tower.n() / self.tower.d()
    }

    /// θ̃ = θ ∘ N_{F_Q/F_{q^d}}.
    pub fn theta_tilde(&self) -> MultChar {
        norm_inflate(&self.tower, &self.theta, self.n()).expect("level n is present")
    }

    /// θ(-1) with -1 ∈ F_{q^d}.
    pub fn theta_minus_one(&self) -> Root {
        let t = &self.tower;
        self.theta.eval_root(t, t.neg(t.one(self.d()))).expect("-1 is a unit")
    }
}

/// x·ϖ^j in the finite model of D^×.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DxElement {
    pub x: FqElem,
    pub j: i64,
}

impl DxElement {
    pub fn new(x: FqElem, j: i64) -> Self {
        DxElement { x, j }
    }

    /// (x, j)(x', j') = (x·x'^{q^j}, j + j').
    pub fn mul(&self, tower: &FieldTower, o: &DxElement) -> DxElement {
        DxElement { x: tower.mul(self.x, tower.frobenius(o.x, self.j)), j: self.j + o.j }
    }

    pub fn inv(&self, tower: &FieldTower) -> DxElement {
        let xi = tower.inv(self.x).expect("units only");
        DxElement { x: tower.frobenius(xi, -self.j), j: -self.j }
    }
}

/// Every (x, j) with x ∈ F_Q^× in generator order and 0 ≤ j < n.
pub fn dx_elements(tower: &FieldTower) -> Vec<DxElement> {
    let n = tower.n();
    (0..n as i64)
        .flat_map(|j| tower.units(n).map(move |x| DxElement { x, j }))
        .collect()
}

#[derive(Clone, Debug)]
pub struct TameRep {
    params: DivisionParams,
    chars: Vec<MultChar>,
    pi: Matrix,
    pi_pows: Vec<Matrix>,
}

impl TameRep {
    pub fn build(params: &DivisionParams) -> Result<Self> {
        let tower = params.tower().clone();
        let d = params.d() as usize;
        let q = tower.q() as i64;
        let tt = params.theta_tilde();
        let chars: Vec<MultChar> = (0..d).map(|i| tt.pow(q.pow(i as u32))).collect();
        for i in 0..d {
            for j in 0..i {
                if chars[i] == chars[j] {
                    return Err(Error::NotRegular { exponent: params.theta().exponent(), degree: d as u32 });
                }
            }
        }
        let lambda = params.lambda().to_cyc();
        let mut pi = Matrix::zeros(d, d);
        for i in 1..d {
            pi.set(i - 1, i, CycNum::one());
        }
        let prev = pi.get(d - 1, 0) + &lambda;
        pi.set(d - 1, 0, prev);
        let mut pi_pows = vec![Matrix::identity(d)];
        for r in 1..d {
            pi_pows.push(pi_pows[r - 1].mul(&pi));
        }
        let rep = TameRep { params: params.clone(), chars, pi, pi_pows };

        // construction invariants
        let pi_d = rep.pi_pows[d - 1].mul(&rep.pi);
        if pi_d != Matrix::scalar(d, lambda) {
            return Err(Error::Internal("tau(varpi)^d differs from lambda".into()));
        }
        let n = tower.n();
        let g = tower.generator(n);
        let lhs = rep.pi.mul(&rep.unit_action(g));
        let rhs = rep.unit_action(tower.frobenius(g, 1)).mul(&rep.pi);
        if lhs != rhs {
            return Err(Error::Internal("twist relation fails at the generator".into()));
        }
        Ok(rep)
    }

    pub fn params(&self) -> &DivisionParams {
        &self.params
    }

    pub fn tower(&self) -> &FieldTower {
        self.params.tower()
    }

    pub fn dim(&self) -> usize {
        self.chars.len()
    }

    /// θ̃^{q^i} for i = 0..d.
    pub fn characters(&self) -> &[MultChar] {
        &self.chars
    }

    pub fn unit_diag(&self, x: FqElem) -> Vec<Root> {
        let t = self.tower();
        self.chars.iter().map(|c| c.eval_root(t, x).expect("units only")).collect()
    }

    pub fn unit_action(&self, x: FqElem) -> Matrix {
        Matrix::diagonal(self.unit_diag(x).iter().map(Root::to_cyc).collect())
    }

    pub fn pi_action(&self) -> &Matrix {
        &self.pi
    }

    /// τ(ϖ)^j for any integer j, using τ(ϖ)^d = λ.
    pub fn pi_power(&self, j: i64) -> Matrix {
        let d = self.dim() as i64;
        let (t, r) = (j.div_euclid(d), j.rem_euclid(d));
        let s = self.params.lambda.pow(t).to_cyc();
        self.pi_pows[r as usize].scale(&s)
    }

    pub fn action(&self, g: &DxElement) -> Matrix {
        self.unit_action(g.x).mul(&self.pi_power(g.j))
    }

    /// tr τ(g).
    pub fn trace(&self, g: &DxElement) -> CycNum {
        self.unit_action(g.x).trace_of_product(&self.pi_power(g.j))
    }

    /// tr ∧²τ(g) via the antisymmetric basis, cross-checked against
    /// (tr τ(g)^2 - tr τ(g^2)) / 2.
    pub fn ext_square_trace(&self, g: &DxElement) -> Result<CycNum> {
        let a = self.action(g);
        let d = self.dim();
        let mut basis = CycNum::zero();
        for i in 0..d {
            for j in i + 1..d {
                let diag = a.get(i, i) * a.get(j, j);
                let cross = a.get(j, i) * a.get(i, j);
                basis = basis + diag - cross;
            }
        }
        let t = self.trace(g);
        let g2 = g.mul(self.tower(), g);
        let formula = (&t * &t - self.trace(&g2)).scale(&num_rational::BigRational::new(1.into(), 2.into()));
        if basis != formula {
            return Err(Error::Internal(format!("exterior-square trace disagrees at {g:?}: {basis} vs {formula}")));
        }
        Ok(basis)
    }

    /// ω_τ(y) for y ∈ F_q^×, read off τ(y), and ω_τ(ϖ_F) read off τ(ϖ^n).
    pub fn central_character(&self) -> Result<(MultChar, Root)> {
        let t = self.tower();
        let n = t.n();
        let y0 = t.embed(t.generator(1), n);
        let diag = self.unit_diag(y0);
        if diag.iter().any(|r| *r != diag[0]) {
            return Err(Error::Internal("F_q^x does not act by scalars".into()));
        }
        let on_units = MultChar::from_generator_value(t, 1, diag[0])?;
        let m = self.params.m() as i64;
        let scalar = self.pi_power(n as i64).as_scalar();
        let expect = self.params.lambda.pow(m);
        if scalar != Some(expect.to_cyc()) {
            return Err(Error::Internal("varpi_F does not act by lambda^m".into()));
        }
        Ok((on_units, expect))
    }
}

/// A character of D^× given by its restriction to units and its value at ϖ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DxCharacter {
    pub unit: MultChar,
    pub at_pi: Root,
}

impl DxCharacter {
    pub fn eval(&self, tower: &FieldTower, g: &DxElement) -> CycNum {
        self.unit.eval_root(tower, g.x).expect("units only").mul(&self.at_pi.pow(g.j)).to_cyc()
    }

    pub fn mul(&self, o: &DxCharacter) -> DxCharacter {
        DxCharacter { unit: self.unit.mul(&o.unit), at_pi: self.at_pi.mul(&o.at_pi) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictedKind {
    /// θ ∘ Nr_{D/F}.
    NormChar,
    /// μ_z: trivial on units, ϖ ↦ z.
    Mu(Root),
    /// ω_τ ∘ Nr_{D/F}.
    Omega,
}

/// Characters of D^× built from θ and τ. Nr_{D/F}(x ϖ^j) is
/// Nr_{F_Q/F_q}(x)·((-1)^{n+1} ϖ_F)^j.
pub fn predicted_char(tau: &TameRep, kind: PredictedKind) -> Result<DxCharacter> {
    let params = tau.params();
    let t = params.tower();
    let n = t.n();
    let d = t.d();
    let sign_n = t.from_int(1, if n % 2 == 1 { 1 } else { -1 });
    // value at γ_n of x ↦ χ(Nr_{F_Q/F_q}(x)) for a character χ of F_q^x
    let nr_gen = t.norm_to(t.generator(n), 1)?;
    match kind {
        PredictedKind::NormChar => {
            let theta = params.theta();
            let at_gen = theta.eval_root(t, t.embed(nr_gen, d)).expect("unit");
            let unit = MultChar::from_generator_value(t, n, at_gen)?;
            let sign = theta.eval_root(t, t.embed(sign_n, d)).expect("unit");
            Ok(DxCharacter { unit, at_pi: sign.mul(&params.theta_pi()) })
        }
        PredictedKind::Mu(z) => Ok(DxCharacter { unit: MultChar::new(t, n, 0)?, at_pi: z }),
        PredictedKind::Omega => {
            let (omega_units, omega_pi) = tau.central_character()?;
            let at_gen = omega_units.eval_root(t, nr_gen).expect("unit");
            let unit = MultChar::from_generator_value(t, n, at_gen)?;
            let sign = omega_units.eval_root(t, sign_n).expect("unit");
            Ok(DxCharacter { unit, at_pi: sign.mul(&omega_pi) })
        }
    }
}

/// Dimensions of T_0D^×-intertwiners between the W spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MackeyDims {
    /// dim Hom(W_y, W_{y'}).
    pub direct: usize,
    /// dim Hom(W_y, W_{y'}^s), with W^s the swapped torus action.
    pub twisted: usize,
    /// dim Hom(W_y, W_{-y'}).
    pub via_negative: usize,
}

impl MackeyDims {
    /// dim Hom(Ind W_y, Ind W_{y'}) by the Mackey formula.
    pub fn total(&self) -> usize {
        self.direct + self.twisted
    }
}

/// Generators of T_0D^× acting on W_y ⊂ τ ⊗ τ, optionally with the torus
/// factors swapped. Order: (γ,1), (1,γ), ϖ.
fn w_generators(tau: &TameRep, y: i64, swapped: bool) -> Result<Vec<Matrix>> {
    let t = tau.tower();
    let d = tau.dim();
    let g = t.generator(t.n());
    let ug = tau.unit_action(g);
    let id = Matrix::identity(d);
    let idx: Vec<usize> = (0..d).map(|i| i * d + (i as i64 + y).rem_euclid(d as i64) as usize).collect();
    let (first, second) = (ug.kron(&id), id.kron(&ug));
    let torus = if swapped { vec![second, first] } else { vec![first, second] };
    let pi2 = tau.pi_action().kron(tau.pi_action());
    let mut out = Vec::new();
    for full in torus.into_iter().chain(std::iter::once(pi2)) {
        for col in &idx {
            for row in 0..d * d {
                if !idx.contains(&row) && !full.get(row, *col).is_zero() {
                    return Err(Error::Internal(format!("W_{y} is not stable")));
                }
            }
        }
        out.push(full.select(&idx, &idx));
    }
    Ok(out)
}

/// dim {X : X·A_g = B_g·X for every generator g}.
fn intertwiner_dim(a: &[Matrix], b: &[Matrix]) -> usize {
    let d = a[0].rows();
    let mut rows = Vec::new();
    for (ag, bg) in a.iter().zip(b) {
        for k in 0..d {
            for l in 0..d {
                // (X A - B X)_{kl} as a linear form in X_{rs}, index r*d+s
                let mut row = vec![CycNum::zero(); d * d];
                for s in 0..d {
                    let v = ag.get(s, l);
                    if !v.is_zero() {
                        row[k * d + s] = &row[k * d + s] + v;
                    }
                }
                for r in 0..d {
                    let v = bg.get(k, r);
                    if !v.is_zero() {
                        row[r * d + l] = &row[r * d + l] - v;
                    }
                }
                rows.push(row);
            }
        }
    }
    d * d - rank_of_rows(rows, d * d)
}

pub fn mackey_hom_dim(tau: &TameRep, y: i64, y2: i64) -> Result<MackeyDims> {
    let wy = w_generators(tau, y, false)?;
    let direct = intertwiner_dim(&wy, &w_generators(tau, y2, false)?);
    let twisted = intertwiner_dim(&wy, &w_generators(tau, y2, true)?);
    let via_negative = intertwiner_dim(&wy, &w_generators(tau, -y2, false)?);
    Ok(MackeyDims { direct, twisted, via_negative })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(p: u32, n: u32, d: u32, e: i64, pi: Root) -> TameRep {
        let t = Arc::new(FieldTower::new(p, 1, n, d).unwrap());
        TameRep::build(&DivisionParams::new(t, e, pi).unwrap()).unwrap()
    }

    #[test]
    fn q3_d2_unit_action_and_lambda() {
        let r = tau(3, 2, 2, 1, Root::one());
        let g = r.tower().generator(2);
        assert_eq!(r.unit_action(g), Matrix::diagonal(vec![CycNum::root_of_unity(8, 1), CycNum::root_of_unity(8, 3)]));
        assert_eq!(r.params().lambda(), Root::one());
    }

    #[test]
    fn non_regular_rejected() {
        let t = Arc::new(FieldTower::new(3, 1, 2, 2).unwrap());
        assert!(matches!(DivisionParams::new(t, 4, Root::one()), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn d1_is_a_character() {
        let r = tau(5, 1, 1, 2, Root::new(4, 1));
        assert_eq!(r.dim(), 1);
        // λ = θ(-1)^2 θ(ϖ_F)
        assert_eq!(r.pi_action(), &Matrix::scalar(1, Root::new(4, 1).to_cyc()));
    }

    #[test]
    fn d2_exterior_square_is_determinant() {
        let r = tau(3, 2, 2, 1, Root::new(4, 1));
        let lam = r.params().lambda().to_cyc();
        let g = DxElement::new(r.tower().one(2), 1);
        assert_eq!(r.ext_square_trace(&g).unwrap(), -lam);
    }

    #[test]
    fn mackey_d3() {
        let r = tau(3, 3, 3, 1, Root::one());
        let dims = mackey_hom_dim(&r, 1, 2).unwrap();
        assert_eq!(dims.total(), 1);
        assert_eq!(dims.direct, 0);
        assert_eq!(mackey_hom_dim(&r, 1, 1).unwrap().total(), 1);
        assert_eq!(mackey_hom_dim(&r, 0, 0).unwrap().total(), 2);
    }
}
