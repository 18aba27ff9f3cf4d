#![allow(dead_code)]

use num_traits::ToPrimitive;
use tjm_core::cyclotomic::CycNum;

/// Numerical value of a cyclotomic number at ζ_L = exp(2πi/L).
pub fn approx(v: &CycNum) -> (f64, f64) {
    let l = v.order() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (k, c) in v.coeffs().iter().enumerate() {
        let c = c.to_f64().unwrap();
        let a = 2.0 * std::f64::consts::PI * k as f64 / l;
        re += c * a.cos();
        im += c * a.sin();
    }
    (re, im)
}

pub fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs();
    (a.0 - b.0).abs() < 1e-8 * scale && (a.1 - b.1).abs() < 1e-8 * scale
}

pub fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub fn root(l: u64, k: u64) -> (f64, f64) {
    let a = 2.0 * std::f64::consts::PI * (k % l) as f64 / l as f64;
    (a.cos(), a.sin())
}

/// Polynomial arithmetic over F_p modulo a monic polynomial, written out
/// directly as an independent reference.
#[derive(Clone)]
pub struct NaiveField {
    pub p: u32,
    pub modulus: Vec<u32>,
}

impl NaiveField {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = self.degree();
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (n..2 * n).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus[..n].iter().enumerate() {
                let t = k - n + i;
                prod[t] = (prod[t] + (p - c) * m as u64) % p;
            }
        }
        prod[..n].iter().map(|&v| v as u32).collect()
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.degree()];
        v[0] = 1;
        v
    }

    pub fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut r = self.one();
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    pub fn all(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let size = (self.p as usize).pow(n as u32);
        (0..size)
            .map(|mut e| {
                (0..n)
                    .map(|_| {
                        let c = (e % self.p as usize) as u32;
                        e /= self.p as usize;
                        c
                    })
                    .collect()
            })
            .collect()
    }
}
