//! GL_2 over the top level F_Q of a tower.
//!
//! Bruhat cells are taken with respect to the upper Borel B̄ and the
//! antidiagonal s = [[0,1],[1,0]]: every g is either in B̄ or equals
//! b · s · n_x with n_x = [[1,x],[0,1]].

use crate::finite_field::{FieldTower, FqElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: FqElem,
    pub b: FqElem,
    pub c: FqElem,
    pub d: FqElem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bruhat {
    /// g ∈ B̄.
    Borel { b: Mat2 },
    /// g = b s n_x.
    Big { b: Mat2, x: FqElem },
}

/// Matrix operations over the top level of `tower`.
#[derive(Clone, Copy)]
pub struct Gl2<'a> {
    tower: &'a FieldTower,
    level: u32,
}

impl<'a> Gl2<'a> {
    pub fn new(tower: &'a FieldTower) -> Self {
        Gl2 { tower, level: tower.n() }
    }

    pub fn tower(&self) -> &'a FieldTower {
        self.tower
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn mat(&self, a: FqElem, b: FqElem, c: FqElem, d: FqElem) -> Mat2 {
        Mat2 { a, b, c, d }
    }

    fn int(&self, v: i64) -> FqElem {
        self.tower.from_int(self.level, v)
    }

    pub fn identity(&self) -> Mat2 {
        self.mat(self.int(1), self.int(0), self.int(0), self.int(1))
    }

    /// s = [[0,1],[1,0]].
    pub fn weyl(&self) -> Mat2 {
        self.mat(self.int(0), self.int(1), self.int(1), self.int(0))
    }

    /// [[0,1],[-1,0]].
    pub fn signed_weyl(&self) -> Mat2 {
        self.mat(self.int(0), self.int(1), self.int(-1), self.int(0))
    }

    /// n_x = [[1,x],[0,1]].
    pub fn unipotent(&self, x: FqElem) -> Mat2 {
        self.mat(self.int(1), x, self.int(0), self.int(1))
    }

    pub fn diag(&self, x: FqElem, y: FqElem) -> Mat2 {
        self.mat(x, self.int(0), self.int(0), y)
    }

    pub fn scalar(&self, x: FqElem) -> Mat2 {
        self.diag(x, x)
    }

    pub fn mul(&self, g: &Mat2, h: &Mat2) -> Mat2 {
        let t = self.tower;
        let dot = |x1, y1, x2, y2| t.add(t.mul(x1, y1), t.mul(x2, y2));
        Mat2 {
            a: dot(g.a, h.a, g.b, h.c),
            b: dot(g.a, h.b, g.b, h.d),
            c: dot(g.c, h.a, g.d, h.c),
            d: dot(g.c, h.b, g.d, h.d),
        }
    }

    pub fn det(&self, g: &Mat2) -> FqElem {
        let t = self.tower;
        t.sub(t.mul(g.a, g.d), t.mul(g.b, g.c))
    }

    pub fn inv(&self, g: &Mat2) -> Option<Mat2> {
        let t = self.tower;
        let di = t.inv(self.det(g))?;
        Some(Mat2 { a: t.mul(g.d, di), b: t.neg(t.mul(g.b, di)), c: t.neg(t.mul(g.c, di)), d: t.mul(g.a, di) })
    }

    pub fn is_borel(&self, g: &Mat2) -> bool {
        g.c.is_zero()
    }

    /// For c ≠ 0: g = [[-det/c, a],[0, c]] · s · n_{d/c}.
    pub fn bruhat(&self, g: &Mat2) -> Bruhat {
        let t = self.tower;
        if g.c.is_zero() {
            return Bruhat::Borel { b: *g };
        }
        let ci = t.inv(g.c).expect("c is non-zero");
        let b = Mat2 { a: t.neg(t.mul(self.det(g), ci)), b: g.a, c: self.int(0), d: g.c };
        Bruhat::Big { b, x: t.mul(g.d, ci) }
    }

    /// Reassembles a Bruhat form into a matrix.
    pub fn compose(&self, form: &Bruhat) -> Mat2 {
        match form {
            Bruhat::Borel { b } => *b,
            Bruhat::Big { b, x } => self.mul(&self.mul(b, &self.weyl()), &self.unipotent(*x)),
        }
    }

    /// Entrywise x ↦ x^{q^i}.
    pub fn frobenius(&self, g: &Mat2, i: i64) -> Mat2 {
        let t = self.tower;
        Mat2 { a: t.frobenius(g.a, i), b: t.frobenius(g.b, i), c: t.frobenius(g.c, i), d: t.frobenius(g.d, i) }
    }

    /// n_x for x = γ^0, ..., γ^{Q-2}, then n_0.
    pub fn enumerate_unipotent(&self) -> Vec<Mat2> {
        self.tower.elements(self.level).map(|x| self.unipotent(x)).collect()
    }

    /// Representatives of B̄ \ G: 1, then s n_x in the same order as
    /// [`Gl2::enumerate_unipotent`].
    pub fn coset_reps(&self) -> Vec<Mat2> {
        let s = self.weyl();
        std::iter::once(self.identity())
            .chain(self.tower.elements(self.level).map(|x| self.mul(&s, &self.unipotent(x))))
            .collect()
    }

    /// Every element of GL_2(F_Q); intended for small Q only.
    pub fn enumerate_group(&self) -> Vec<Mat2> {
        let elems: Vec<FqElem> = self.tower.elements(self.level).collect();
        let mut out = Vec::new();
        for &a in &elems {
            for &b in &elems {
                for &c in &elems {
                    for &d in &elems {
                        let g = Mat2 { a, b, c, d };
                        if !self.det(&g).is_zero() {
                            out.push(g);
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_element_is_big_cell_with_x_zero() {
        let t = FieldTower::new(3, 1, 2, 2).unwrap();
        let g = Gl2::new(&t);
        match g.bruhat(&g.weyl()) {
            Bruhat::Big { b, x } => {
                assert!(x.is_zero());
                assert_eq!(b, g.identity());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn coset_reps_count() {
        let t = FieldTower::new(3, 1, 2, 2).unwrap();
        assert_eq!(Gl2::new(&t).coset_reps().len(), 10);
    }

    #[test]
    fn group_order_q3() {
        // |GL_2(F_3)| = (9-1)(9-3) = 48
        let t = FieldTower::new(3, 1, 1, 1).unwrap();
        assert_eq!(Gl2::new(&t).enumerate_group().len(), 48);
    }
}
