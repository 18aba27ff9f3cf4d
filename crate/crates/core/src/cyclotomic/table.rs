//! Cached cyclotomic polynomials and power tables, keyed by order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) struct CycloTable {
    pub order: u32,
    /// Monic Φ_L, low to high, length φ(L)+1.
    pub poly: Vec<i64>,
    powers: OnceLock<Vec<Vec<i64>>>,
}

impl CycloTable {
    pub fn phi(&self) -> usize {
        self.poly.len() - 1
    }

    /// Reduction of `x^t` modulo Φ_L for `0 <= t < L`.
    pub fn power(&self, t: u64) -> &[i64] {
        let powers = self.powers.get_or_init(|| {
            let phi = self.phi();
            let l = self.order as usize;
            let mut out = Vec::with_capacity(l);
            let mut cur = vec![0i64; phi];
            cur[0] = 1;
            for _ in 0..l {
                out.push(cur.clone());
                let top = cur[phi - 1];
                for i in (1..phi).rev() {
                    cur[i] = cur[i - 1];
                }
                cur[0] = 0;
                if top != 0 {
                    for i in 0..phi {
                        cur[i] -= top * self.poly[i];
                    }
                }
            }
            out
        });
        &powers[(t % self.order as u64) as usize]
    }
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<CycloTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub(crate) fn table(order: u32) -> Arc<CycloTable> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(t) = cache().read().expect("cyclotomic cache poisoned").get(&order) {
        return t.clone();
    }
    let poly = cyclotomic_poly(order);
    let t = Arc::new(CycloTable { order, poly, powers: OnceLock::new() });
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(order)
        .or_insert(t)
        .clone()
}

/// Φ_L computed as (x^L - 1) divided by Φ_d for every proper divisor d.
fn cyclotomic_poly(order: u32) -> Vec<i64> {
    let l = order as usize;
    let mut p = vec![0i64; l + 1];
    p[0] = -1;
    p[l] = 1;
    for d in 1..order {
        if order % d == 0 {
            let div = table(d).poly.clone();
            p = exact_div(&p, &div);
        }
    }
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] = rem[k + i]
                    .checked_sub(c.checked_mul(dc).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
