//! Dense matrices over cyclotomic numbers.

use num_integer::Integer;
use num_rational::BigRational;

use crate::cyclotomic::CycNum;

/// Numerator bound for the group-ring product path; keeps i128 sums exact.
const FAST_NUM_BOUND: i64 = 1 << 40;

/// Entries over a common order and denominator, each as sparse terms
/// (power, numerator) in the power basis.
struct Scaled {
    den: i64,
    terms: Vec<Vec<(usize, i64)>>,
}

fn common_order(m: &Matrix) -> u32 {
    m.data.iter().filter(|v| !v.is_zero()).fold(1u32, |l, v| l.lcm(&v.order()))
}

fn scaled(m: &Matrix, l: u32) -> Option<Scaled> {
    let mut embedded = Vec::with_capacity(m.data.len());
    let mut den = 1i64;
    for v in &m.data {
        let e = if v.is_zero() { CycNum::zero() } else { v.embed(l) };
        if let Some((_, d)) = e.small_parts() {
            den = den.lcm(&d);
            if den > FAST_NUM_BOUND {
                return None;
            }
        } else {
            return None;
        }
        embedded.push(e);
    }
    let mut terms = Vec::with_capacity(embedded.len());
    for e in &embedded {
        let mut t = Vec::new();
        if !e.is_zero() {
            let (num, d) = e.small_parts()?;
            let f = den / d;
            for (k, &c) in num.iter().enumerate() {
                if c != 0 {
                    let v = c.checked_mul(f)?;
                    if v.abs() > FAST_NUM_BOUND {
                        return None;
                    }
                    t.push((k, v));
                }
            }
        }
        terms.push(t);
    }
    Some(Scaled { den, terms })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![CycNum::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, CycNum::one())
    }

    pub fn scalar(n: usize, v: CycNum) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn diagonal(entries: Vec<CycNum>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        if self.rows * self.cols * o.cols >= 512 {
            if let Some(m) = self.mul_group_ring(o) {
                return m;
            }
        }
        self.mul_generic(o)
    }

    /// Product accumulated in Z[x]/(x^L - 1) with one reduction per entry.
    fn mul_group_ring(&self, o: &Matrix) -> Option<Matrix> {
        let l = common_order(self).lcm(&common_order(o));
        let a = scaled(self, l)?;
        let b = scaled(o, l)?;
        let lu = l as usize;
        let inv = BigRational::new(1.into(), (a.den as i128 * b.den as i128).into());
        let mut out = Matrix::zeros(self.rows, o.cols);
        let mut acc = vec![0i128; lu * o.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|v| *v = 0);
            let mut touched = vec![false; o.cols];
            for k in 0..self.cols {
                let ta = &a.terms[i * self.cols + k];
                if ta.is_empty() {
                    continue;
                }
                for j in 0..o.cols {
                    let tb = &b.terms[k * o.cols + j];
                    if tb.is_empty() {
                        continue;
                    }
                    touched[j] = true;
                    let base = j * lu;
                    for &(ea, ca) in ta {
                        for &(eb, cb) in tb {
                            let e = (ea + eb) % lu;
                            acc[base + e] += ca as i128 * cb as i128;
                        }
                    }
                }
            }
            for j in 0..o.cols {
                if !touched[j] {
                    continue;
                }
                let counts: Vec<i64> = acc[j * lu..(j + 1) * lu].iter().map(|&v| i64::try_from(v).ok()).collect::<Option<_>>()?;
                out.set(i, j, CycNum::from_group_ring(l, &counts).scale(&inv));
            }
        }
        Some(out)
    }

    fn mul_generic(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "dimension mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &CycNum) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> CycNum {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// tr(self · o) without forming the product.
    pub fn trace_of_product(&self, o: &Matrix) -> CycNum {
        assert_eq!((self.cols, self.rows), (o.rows, o.cols), "dimension mismatch");
        let mut acc = CycNum::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = o.get(k, i);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
        }
        acc
    }

    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// The submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// `Some(c)` when the matrix equals c · Id.
    pub fn as_scalar(&self) -> Option<CycNum> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                let ok = if i == j { *v == c } else { v.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    /// Rank by fraction-free row elimination.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.data.chunks(self.cols.max(1)).map(<[CycNum]>::to_vec).collect(), self.cols)
    }
}

/// Rank of a list of rows of length `cols`, eliminating without division.
pub fn rank_of_rows(mut rows: Vec<Vec<CycNum>>, cols: usize) -> usize {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let e = row[col].clone();
            if e.is_zero() {
                continue;
            }
            for j in col..cols {
                let l = &row[j] * &pv;
                let r = &pivot_row[j] * &e;
                row[j] = l - r;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
