//! The operator T on the block Ind(θ̃^q ⊗ θ̃) for d = 2:
//!
//!   T(φ)(k) = C · Σ_{y ∈ F_Q} φ(s' n_y Frob(k)),  C = θ(-1)^{m+1} θ(ϖ_F) / q^m,
//!
//! where s' = [[0,1],[-1,0]] is the signed Weyl element, used as written and
//! evaluated through the Bruhat decomposition with respect to s.

use num_rational::BigRational;
use num_traits::Pow;

use super::{PSModel, WhittakerSpace};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::gl2::Mat2;
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct TOperatorResult {
    /// C = λ / q^m.
    pub constant: CycNum,
    pub matrix: Matrix,
    /// (Tφ)(b k) = χ(b)(Tφ)(k) for Borel generators b and test vectors φ.
    pub block_stable: bool,
    /// T^{2m}, when it is a scalar.
    pub power_scalar: Option<CycNum>,
    /// T W = c W on the normalized Whittaker vector of the block.
    pub eigenvector: bool,
    /// c = (T W)(s).
    pub eigenvalue: CycNum,
}

pub fn intertwining_t(model: &PSModel, whit: &WhittakerSpace) -> Result<TOperatorResult> {
    if model.d1() != 2 || model.d2() != 2 || model.tau1().params().theta() != model.tau2().params().theta() {
        return Err(Error::InvalidParameters("T is defined for tau x tau with d = 2".into()));
    }
    let params = model.tau1().params();
    let t = model.tower();
    let n = t.n();
    let m = params.m();
    let gl = model.gl2();
    let blk = model.block_index(1, 0);
    let len = model.block_len();
    let q_m = BigRational::from_integer(t.q().into()).pow(m as i32);
    let constant = params.lambda().to_cyc().scale(&q_m.recip());
    let sp = gl.signed_weyl();
    let ys: Vec<Mat2> = t.elements(n).map(|y| gl.mul(&sp, &gl.unipotent(y))).collect();

    // (Tφ)(g) for arbitrary g, as a linear form on block vectors
    let row_at = |g: &Mat2| -> Vec<CycNum> {
        let fg = gl.frobenius(g, 1);
        let mut row = vec![CycNum::zero(); len];
        for sy in &ys {
            let (b, r) = model.locate(&gl.mul(sy, &fg));
            row[r] = &row[r] + &model.block_char(blk, &b).to_cyc();
        }
        row.into_iter().map(|v| &v * &constant).collect()
    };

    let rows: Vec<Vec<CycNum>> = model.coset_reps().iter().map(&row_at).collect();
    let matrix = Matrix::from_rows(rows);

    let w = whit.vector(blk).to_vec();
    let s = model.s_index();
    let mut tests = vec![w.clone()];
    for idx in [0, s] {
        let mut e = vec![CycNum::zero(); len];
        e[idx] = CycNum::one();
        tests.push(e);
    }
    let mut gens = vec![gl.diag(t.generator(n), t.one(n)), gl.diag(t.one(n), t.generator(n))];
    let deg = t.coords(t.one(n)).len();
    for k in 0..deg {
        let mut c = vec![0u32; deg];
        c[k] = 1;
        gens.push(gl.unipotent(t.from_coords(n, &c)?));
    }
    let images: Vec<Vec<CycNum>> = tests.iter().map(|v| matrix.mul_vec(v)).collect();
    let mut block_stable = true;
    'outer: for b in &gens {
        let chi = model.block_char(blk, b).to_cyc();
        for (ri, r) in model.coset_reps().iter().enumerate() {
            let form = row_at(&gl.mul(b, r));
            for (v, img) in tests.iter().zip(&images) {
                let val: CycNum = form.iter().zip(v).filter(|(a, x)| !a.is_zero() && !x.is_zero()).map(|(a, x)| a * x).sum();
                if val != &chi * &img[ri] {
                    block_stable = false;
                    break 'outer;
                }
            }
        }
    }

    let power_scalar = matrix.pow(2 * m as u64).as_scalar();
    let tw = matrix.mul_vec(&w);
    let eigenvalue = tw[s].clone();
    let eigenvector = tw.iter().zip(&w).all(|(a, b)| *a == &eigenvalue * b);
    Ok(TOperatorResult { constant, matrix, block_stable, power_scalar, eigenvector, eigenvalue })
}
