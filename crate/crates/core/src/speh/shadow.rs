//! The action of D^× on the Whittaker span, one coordinate per block.
//!
//! With every block of rank one, a unit x acts diagonally and Θ permutes
//! blocks monomially, so the whole action is a d₁d₂ × d₁d₂ matrix per
//! element. Orbit characters come from the block subsets E_y = {(i, i+y)}.

use num_rational::BigRational;

use super::{PSModel, WhittakerSpace};
use crate::cyclotomic::{CycNum, Root};
use crate::depthzero::DxElement;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct ShadowAction {
    d1: usize,
    d2: usize,
    n: i64,
    /// U(γ^k) for k = 0..Q-1.
    units: Vec<Matrix>,
    theta: Matrix,
    /// Θ^j for j = 0..n-1.
    theta_pows: Vec<Matrix>,
    /// Θ^n as a scalar on the span.
    theta_n: CycNum,
}

/// The splitting of a self-paired orbit E_{d/2} by A = Θ^{d/2}.
#[derive(Clone, Debug)]
pub struct SignCandidates {
    /// Block indices of the orbit, in order i = 0..d.
    pub blocks: Vec<usize>,
    /// A restricted to the orbit.
    pub half_turn: Matrix,
    /// A² when it is a scalar.
    pub square: Option<CycNum>,
    /// (κ, ½(I + A/κ), rank) for κ = ±λ, when A² = λ².
    pub parts: Vec<(CycNum, Matrix, usize)>,
}

impl ShadowAction {
    pub fn compute(model: &PSModel, whit: &WhittakerSpace) -> Result<Self> {
        let t = model.tower();
        let n = t.n();
        let units = t.units(n).map(|x| whit.restrict(model, &model.unit_op(x))).collect::<Result<Vec<_>>>()?;
        let theta = whit.restrict(model, &model.theta_op()?)?;
        let mut theta_pows = vec![Matrix::identity(model.num_blocks())];
        for j in 1..n as usize {
            theta_pows.push(theta_pows[j - 1].mul(&theta));
        }
        let theta_n = theta_pows[n as usize - 1]
            .mul(&theta)
            .as_scalar()
            .ok_or_else(|| Error::Internal("Theta^n is not a scalar on the Whittaker span".into()))?;
        Ok(ShadowAction { d1: model.d1(), d2: model.d2(), n: n as i64, units, theta, theta_pows, theta_n })
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn theta_n(&self) -> &CycNum {
        &self.theta_n
    }

    /// The matrix of x ϖ^j.
    pub fn matrix(&self, model: &PSModel, g: &DxElement) -> Result<Matrix> {
        let t = model.tower();
        let k = t.log(g.x).ok_or_else(|| Error::InvalidParameters("x must be a unit".into()))?;
        let (w, r) = (g.j.div_euclid(self.n), g.j.rem_euclid(self.n));
        let base = self.units[k as usize].mul(&self.theta_pows[r as usize]);
        Ok(if w == 0 { base } else { base.scale(&self.theta_n.pow(w)?) })
    }

    /// The character of the full span.
    pub fn trace(&self, model: &PSModel, g: &DxElement) -> Result<CycNum> {
        Ok(self.matrix(model, g)?.trace())
    }

    fn orbit(&self, y: usize) -> Vec<usize> {
        (0..self.d1).map(|i| i * self.d2 + (i + y) % self.d2).collect()
    }

    /// The character of E_y = span{W_{i, i+y}}; needs d₁ = d₂.
    pub fn orbit_trace(&self, model: &PSModel, y: usize, g: &DxElement) -> Result<CycNum> {
        if self.d1 != self.d2 {
            return Err(Error::InvalidParameters("orbit characters need d1 = d2".into()));
        }
        let m = self.matrix(model, g)?;
        Ok(self.orbit(y).into_iter().map(|b| m.get(b, b).clone()).sum())
    }

    /// The splitting of E_{d/2} for even d = d₁ = d₂.
    pub fn sign_candidates(&self, lambda: Root) -> Result<SignCandidates> {
        if self.d1 != self.d2 || self.d1 % 2 != 0 {
            return Err(Error::InvalidParameters("sign candidates need d1 = d2 even".into()));
        }
        let half = self.d1 / 2;
        let blocks = self.orbit(half);
        let a = self.theta.pow(half as u64);
        let half_turn = a.select(&blocks, &blocks);
        let square = half_turn.mul(&half_turn).as_scalar();
        let lam = lambda.to_cyc();
        let mut parts = Vec::new();
        if square.as_ref() == Some(&(&lam * &lam)) {
            let halfr = CycNum::from_rational(&BigRational::new(1.into(), 2.into()));
            for kappa in [lam.clone(), -lam.clone()] {
                let scaled = half_turn.scale(&kappa.inv()?);
                let proj = Matrix::identity(blocks.len()).add(&scaled).scale(&halfr);
                let rank = proj.rank();
                parts.push((kappa, proj, rank));
            }
        }
        Ok(SignCandidates { blocks, half_turn, square, parts })
    }

    /// tr of g on the image of `proj` inside the orbit of `cand`.
    pub fn candidate_trace(&self, model: &PSModel, cand: &SignCandidates, proj: &Matrix, g: &DxElement) -> Result<CycNum> {
        let m = self.matrix(model, g)?.select(&cand.blocks, &cand.blocks);
        Ok(m.trace_of_product(proj))
    }
}
