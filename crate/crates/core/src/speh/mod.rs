//! The finite principal-series model of the K(1)-invariants of τ₁ × τ₂.
//!
//! The model is the direct sum over blocks (i, j), 0 ≤ i < d₁, 0 ≤ j < d₂,
//! of Ind_{B̄}^{Ḡ}(θ̃₁^{q^i} ⊗ θ̃₂^{q^j}) with Ḡ = GL_2(F_Q). A block vector
//! is the list of values on the coset representatives 1, s n_x (x in
//! generator order, then x = 0), so it has length Q + 1. Right translation
//! ρ(g)φ(r) = φ(rg) is monomial: rg = b'r' gives χ(b')φ(r').
//!
//! The uniformizer of D^× acts by Θ(f)(k) = (τ₁(ϖ) ⊗ τ₂(ϖ)) f(Frob^{-1}(k)),
//! sending block (i, j) to block (i-1, j-1). The modulus characters ν_τ
//! cancel in this action and are not evaluated.

mod intertwining;
mod shadow;
mod suite;
mod whittaker;

pub use intertwining::{intertwining_t, TOperatorResult};
pub use shadow::{ShadowAction, SignCandidates};
pub use suite::{verify_suite, CheckSelection, SuiteParams, CHECK_GROUPS};
pub use whittaker::{WhittakerBlock, WhittakerSpace};

use std::sync::Arc;

use crate::characters::MultChar;
use crate::cyclotomic::{CycNum, Root};
use crate::depthzero::TameRep;
use crate::error::{Error, Result};
use crate::finite_field::{FieldTower, FqElem};
use crate::gl2::{Bruhat, Gl2, Mat2};

/// A monomial map between block vectors: out[r] = coef[r] · in[src[r]].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub src: Vec<usize>,
    pub coef: Vec<Root>,
}

impl Monomial {
    pub fn apply(&self, v: &[CycNum]) -> Vec<CycNum> {
        self.src
            .iter()
            .zip(&self.coef)
            .map(|(&s, c)| if v[s].is_zero() { CycNum::zero() } else { &c.to_cyc() * &v[s] })
            .collect()
    }

    /// `Some(c)` when every coefficient equals `c`.
    pub fn constant(&self) -> Option<Root> {
        let c = *self.coef.first()?;
        self.coef.iter().all(|x| *x == c).then_some(c)
    }
}

/// An operator on the model: source block `b` goes to block `target[b]`
/// through `maps[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelOp {
    pub target: Vec<usize>,
    pub maps: Vec<Monomial>,
}

impl ModelOp {
    /// `self ∘ first`.
    pub fn after(&self, first: &ModelOp) -> ModelOp {
        let mut target = Vec::new();
        let mut maps = Vec::new();
        for (b, mb) in first.maps.iter().enumerate() {
            let mid = first.target[b];
            let ma = &self.maps[mid];
            target.push(self.target[mid]);
            maps.push(Monomial {
                src: ma.src.iter().map(|&r| mb.src[r]).collect(),
                coef: ma.src.iter().zip(&ma.coef).map(|(&r, c)| c.mul(&mb.coef[r])).collect(),
            });
        }
        ModelOp { target, maps }
    }

    /// `Some(c)` when the operator is c · Id on the whole model.
    pub fn as_scalar(&self) -> Option<Root> {
        let mut c = None;
        for (b, m) in self.maps.iter().enumerate() {
            if self.target[b] != b || m.src.iter().enumerate().any(|(r, &s)| r != s) {
                return None;
            }
            let k = m.constant()?;
            if *c.get_or_insert(k) != k {
                return None;
            }
        }
        c
    }
}

#[derive(Clone, Debug)]
pub struct PSModel {
    tower: Arc<FieldTower>,
    tau1: TameRep,
    tau2: TameRep,
    reps: Vec<Mat2>,
    /// Rep index of s n_x, by encoding of x.
    index_of: Vec<usize>,
}

impl PSModel {
    pub fn build(tau1: &TameRep, tau2: &TameRep) -> Result<Self> {
        let t1 = tau1.params().tower();
        let t2 = tau2.params().tower();
        if !t1.compatible_top(t2) {
            return Err(Error::InvalidParameters(
                "the two representations must share p, f, n and the top-level field".into(),
            ));
        }
        let tower = t1.clone();
        let n = tower.n();
        let gl = Gl2::new(&tower);
        let reps = gl.coset_reps();
        let mut index_of = vec![usize::MAX; tower.top_size() as usize];
        for (pos, x) in tower.elements(n).enumerate() {
            index_of[x.encoding() as usize] = pos + 1;
        }
        Ok(PSModel { tower: tower.clone(), tau1: tau1.clone(), tau2: tau2.clone(), reps, index_of })
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tower
    }

    pub fn gl2(&self) -> Gl2<'_> {
        Gl2::new(&self.tower)
    }

    pub fn tau1(&self) -> &TameRep {
        &self.tau1
    }

    pub fn tau2(&self) -> &TameRep {
        &self.tau2
    }

    pub fn d1(&self) -> usize {
        self.tau1.dim()
    }

    pub fn d2(&self) -> usize {
        self.tau2.dim()
    }

    pub fn num_blocks(&self) -> usize {
        self.d1() * self.d2()
    }

    pub fn block_index(&self, i: usize, j: usize) -> usize {
        i * self.d2() + j
    }

    pub fn block_label(&self, b: usize) -> (usize, usize) {
        (b / self.d2(), b % self.d2())
    }

    /// Q + 1.
    pub fn block_len(&self) -> usize {
        self.reps.len()
    }

    pub fn dim(&self) -> usize {
        self.num_blocks() * self.block_len()
    }

    pub fn coset_reps(&self) -> &[Mat2] {
        &self.reps
    }

    /// Index of the coset representative s n_x.
    pub fn big_cell_index(&self, x: FqElem) -> usize {
        self.index_of[x.encoding() as usize]
    }

    /// Index of s itself.
    pub fn s_index(&self) -> usize {
        self.big_cell_index(self.tower.zero(self.tower.n()))
    }

    /// g = b · rep, with b ∈ B̄.
    pub fn locate(&self, g: &Mat2) -> (Mat2, usize) {
        match self.gl2().bruhat(g) {
            Bruhat::Borel { b } => (b, 0),
            Bruhat::Big { b, x } => (b, self.big_cell_index(x)),
        }
    }

    pub fn block_chars(&self, b: usize) -> (MultChar, MultChar) {
        let (i, j) = self.block_label(b);
        (self.tau1.characters()[i], self.tau2.characters()[j])
    }

    /// χ_{ij}(b) = θ̃₁^{q^i}(a) θ̃₂^{q^j}(δ) for b = [[a, *], [0, δ]].
    pub fn block_char(&self, block: usize, b: &Mat2) -> Root {
        let (c1, c2) = self.block_chars(block);
        let t = &self.tower;
        c1.eval_root(t, b.a).expect("Borel diagonal is invertible").mul(&c2.eval_root(t, b.d).expect("Borel diagonal is invertible"))
    }

    /// Evaluates a block vector at an arbitrary group element.
    pub fn eval_at(&self, block: usize, v: &[CycNum], g: &Mat2) -> CycNum {
        let (b, r) = self.locate(g);
        if v[r].is_zero() {
            return CycNum::zero();
        }
        &self.block_char(block, &b).to_cyc() * &v[r]
    }

    /// Right translation by g on every block.
    pub fn translate(&self, g: &Mat2) -> ModelOp {
        let gl = self.gl2();
        let located: Vec<(Mat2, usize)> = self.reps.iter().map(|r| self.locate(&gl.mul(r, g))).collect();
        let maps = (0..self.num_blocks())
            .map(|blk| Monomial {
                src: located.iter().map(|(_, r)| *r).collect(),
                coef: located.iter().map(|(b, _)| self.block_char(blk, b)).collect(),
            })
            .collect();
        ModelOp { target: (0..self.num_blocks()).collect(), maps }
    }

    /// The action of a unit x ∈ O_D^× through its image x·Id in Ḡ.
    pub fn unit_op(&self, x: FqElem) -> ModelOp {
        self.translate(&self.gl2().scalar(x))
    }

    /// c_{ij}: the coefficient of e_{i-1} ⊗ e_{j-1} in τ₁(ϖ)e_i ⊗ τ₂(ϖ)e_j.
    pub fn structure_constant(&self, block: usize) -> CycNum {
        let (i, j) = self.block_label(block);
        let (d1, d2) = (self.d1(), self.d2());
        let a = self.tau1.pi_action().get((i + d1 - 1) % d1, i);
        let b = self.tau2.pi_action().get((j + d2 - 1) % d2, j);
        a * b
    }

    pub fn theta_target(&self, block: usize) -> usize {
        let (i, j) = self.block_label(block);
        self.block_index((i + self.d1() - 1) % self.d1(), (j + self.d2() - 1) % self.d2())
    }

    /// Θ as a model operator; coefficients carry c_{ij} and the block
    /// character of the Borel part of Frob^{-1}(rep).
    pub fn theta_op(&self) -> Result<ModelOp> {
        let gl = self.gl2();
        let located: Vec<(Mat2, usize)> = self.reps.iter().map(|r| self.locate(&gl.frobenius(r, -1))).collect();
        let mut maps = Vec::new();
        let mut target = Vec::new();
        for blk in 0..self.num_blocks() {
            let c = root_of(&self.structure_constant(blk))
                .ok_or_else(|| Error::Internal("structure constant is not a root of unity".into()))?;
            maps.push(Monomial {
                src: located.iter().map(|(_, r)| *r).collect(),
                coef: located.iter().map(|(b, _)| self.block_char(blk, b).mul(&c)).collect(),
            });
            target.push(self.theta_target(blk));
        }
        Ok(ModelOp { target, maps })
    }

    /// The line φ(g) = θ̃^{q^i}(det g) inside the diagonal block (i, i).
    pub fn det_line(&self, i: usize) -> Vec<CycNum> {
        let gl = self.gl2();
        let chi = self.tau1.characters()[i];
        self.reps.iter().map(|r| chi.eval(&self.tower, gl.det(r))).collect()
    }
}

/// Recovers a root of unity from its cyclotomic value when that value is a
/// signed monomial ±ζ_L^k.
pub(crate) fn root_of(v: &CycNum) -> Option<Root> {
    let l = v.order() as u64;
    // roots of unity in Q(ζ_L) are ±ζ_L^k
    for k in 0..l {
        for sign in [1i64, -1] {
            let r = Root::new(l, k as i64).mul(&Root::new(2, if sign < 0 { 1 } else { 0 }));
            if r.to_cyc() == *v {
                return Some(r);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depthzero::DivisionParams;

    fn model(p: u32, n: u32, d: u32, e: i64) -> PSModel {
        let t = Arc::new(FieldTower::new(p, 1, n, d).unwrap());
        let tau = TameRep::build(&DivisionParams::new(t, e, Root::one()).unwrap()).unwrap();
        PSModel::build(&tau, &tau).unwrap()
    }

    #[test]
    fn locate_reassembles() {
        let m = model(3, 2, 2, 1);
        let gl = m.gl2();
        for g in gl.enumerate_group().into_iter().step_by(37) {
            let (b, r) = m.locate(&g);
            assert!(gl.is_borel(&b));
            assert_eq!(gl.mul(&b, &m.coset_reps()[r]), g);
        }
    }

    #[test]
    fn translation_is_a_right_action() {
        let m = model(3, 2, 2, 1);
        let gl = m.gl2();
        let t = m.tower();
        let g = gl.mat(t.generator(2), t.one(2), t.from_int(2, 2), t.zero(2));
        let h = gl.mat(t.one(2), t.exp(2, 3), t.exp(2, 5), t.exp(2, 1));
        let v: Vec<CycNum> = (0..m.block_len()).map(|i| CycNum::from_int(i as i64 + 1)).collect();
        for blk in 0..m.num_blocks() {
            // ρ(g)ρ(h)φ(r) = φ(r g h)
            let lhs = m.translate(&g).maps[blk].apply(&m.translate(&h).maps[blk].apply(&v));
            let rhs = m.translate(&gl.mul(&g, &h)).maps[blk].apply(&v);
            assert_eq!(lhs, rhs);
        }
    }
}
