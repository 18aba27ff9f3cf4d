//! The ψ₀-eigenspace of N̄ = {n_u} in the model, block by block.
//!
//! P = (1/Q) Σ_u ψ₀(u)^{-1} ρ(n_u) is built densely for each block; its
//! image is the eigenspace. The spanning vector W is normalized by
//! W(1) = 0 and W(s n_x) = ψ₀(x).

use num_rational::BigRational;

use super::{ModelOp, PSModel};
use crate::characters::AddChar;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct WhittakerBlock {
    pub rank: usize,
    pub idempotent: bool,
    /// The normalized eigenvector; all zero when `rank == 0`.
    pub vector: Vec<CycNum>,
    /// W(1) = 0 and W(s n_x) = ψ₀(x) for every x.
    pub normalized: bool,
    /// ρ(n_u)W = ψ₀(u)W for every u.
    pub eigen: bool,
}

#[derive(Clone, Debug)]
pub struct WhittakerSpace {
    pub blocks: Vec<WhittakerBlock>,
    projectors: Vec<Matrix>,
}

/// Projectors of every block, in block order.
pub fn projectors(model: &PSModel) -> Vec<Matrix> {
    let t = model.tower();
    let n = t.n();
    let gl = model.gl2();
    let len = model.block_len();
    let big_q = t.top_size() as i64;
    let inv_q = BigRational::new(1.into(), big_q.into());
    let psi = AddChar::standard(n);
    let mut mats = vec![Matrix::zeros(len, len); model.num_blocks()];
    for u in t.elements(n) {
        let w = psi.eval_root(t, u).inv();
        let op = model.translate(&gl.unipotent(u));
        for (blk, mat) in mats.iter_mut().enumerate() {
            let mono = &op.maps[blk];
            for r in 0..len {
                let v = mono.coef[r].mul(&w).to_cyc();
                let cur = mat.get(r, mono.src[r]) + &v;
                mat.set(r, mono.src[r], cur);
            }
        }
    }
    mats.into_iter().map(|m| scale_matrix(&m, &inv_q)).collect()
}

fn scale_matrix(m: &Matrix, r: &BigRational) -> Matrix {
    m.scale(&CycNum::from_rational(r))
}

impl WhittakerSpace {
    pub fn compute(model: &PSModel) -> Result<Self> {
        let t = model.tower();
        let n = t.n();
        let gl = model.gl2();
        let psi = AddChar::standard(n);
        let s = model.s_index();
        let big_q = t.top_size() as i64;
        let projs = projectors(model);
        let mut verified: Vec<(Matrix, bool)> = Vec::new();
        let mut blocks = Vec::new();
        let unipotent_ops: Vec<(CycNum, ModelOp)> =
            t.elements(n).map(|u| (psi.eval(t, u), model.translate(&gl.unipotent(u)))).collect();
        for (blk, p) in projs.iter().enumerate() {
            // identical projectors share one idempotence computation
            let idempotent = match verified.iter().find(|(m, _)| m == p) {
                Some((_, ok)) => *ok,
                None => {
                    let ok = p.mul(p) == *p;
                    verified.push((p.clone(), ok));
                    ok
                }
            };
            let rank = p.rank();
            let (vector, normalized, eigen) = if rank == 0 {
                (vec![CycNum::zero(); model.block_len()], true, true)
            } else {
                let col = p.column(s);
                if col[s].is_zero() {
                    return Err(Error::Internal(format!("Whittaker vector vanishes at s in block {blk}")));
                }
                let w: Vec<CycNum> = col.iter().map(|v| v.scale(&BigRational::from_integer(big_q.into()))).collect();
                let normalized = w[0].is_zero()
                    && t.elements(n).all(|x| w[model.big_cell_index(x)] == psi.eval(t, x));
                let eigen = unipotent_ops.iter().all(|(pv, op)| {
                    let moved = op.maps[blk].apply(&w);
                    moved.iter().zip(&w).all(|(a, b)| *a == pv * b)
                });
                (w, normalized, eigen)
            };
            blocks.push(WhittakerBlock { rank, idempotent, vector, normalized, eigen });
        }
        Ok(WhittakerSpace { blocks, projectors: projs })
    }

    pub fn projector(&self, blk: usize) -> &Matrix {
        &self.projectors[blk]
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    pub fn vector(&self, blk: usize) -> &[CycNum] {
        &self.blocks[blk].vector
    }

    /// The matrix of a model operator on the span of the block vectors,
    /// with exact verification that each image is a multiple of the target
    /// block vector. Requires every block to have rank 1.
    pub fn restrict(&self, model: &PSModel, op: &ModelOp) -> Result<Matrix> {
        let nb = model.num_blocks();
        if self.blocks.iter().any(|b| b.rank != 1) {
            return Err(Error::Internal("restriction needs a one-dimensional eigenspace in every block".into()));
        }
        let s = model.s_index();
        let mut out = Matrix::zeros(nb, nb);
        for src in 0..nb {
            let tgt = op.target[src];
            let mono = &op.maps[src];
            let w = self.vector(src);
            let wt = self.vector(tgt);
            let coef = match mono.constant() {
                Some(c) => {
                    // c · W_src∘σ against a · W_tgt, comparing W_src∘σ = t · W_tgt
                    let tval = &w[mono.src[s]];
                    for r in 0..wt.len() {
                        if w[mono.src[r]] != tval * &wt[r] {
                            return Err(Error::Internal(format!("operator does not preserve the eigenline (block {src} -> {tgt})")));
                        }
                    }
                    &c.to_cyc() * tval
                }
                None => {
                    let img = mono.apply(w);
                    let a = img[s].clone();
                    for r in 0..wt.len() {
                        if img[r] != &a * &wt[r] {
                            return Err(Error::Internal(format!("operator does not preserve the eigenline (block {src} -> {tgt})")));
                        }
                    }
                    a
                }
            };
            out.set(tgt, src, coef);
        }
        Ok(out)
    }
}
