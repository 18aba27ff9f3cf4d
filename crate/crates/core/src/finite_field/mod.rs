//! The tower F_q ⊂ F_{q^d} ⊂ F_{q^n} over F_p, with q = p^f.
//!
//! Elements are encoded as integers `Σ c_i p^i` from their coordinates in the
//! power basis of the defining polynomial of their level, so `0` and `1` are
//! the encodings of zero and one. Each level carries exp/log tables with
//! respect to a fixed generator γ_k of its unit group.
//!
//! Default defining polynomials: the top level uses the first primitive
//! polynomial in Conway order (`x^D - a_1 x^{D-1} + a_2 x^{D-2} - ...`,
//! compared lexicographically on `(a_1, ..., a_D)`). Subfields use the
//! minimal polynomial of `γ_n^{(q^n-1)/(q^k-1)}`, so the generators are
//! norm-compatible: γ_k = N_{q^n/q^k}(γ_n).

mod poly;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
pub(crate) use poly::pow_mod;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// An element of one level of a [`FieldTower`]. `level` is the degree over F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    level: u32,
    enc: u32,
}

impl FqElem {
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Integer encoding `Σ c_i p^i` of the coordinates.
    pub fn encoding(&self) -> u32 {
        self.enc
    }

    pub fn is_zero(&self) -> bool {
        self.enc == 0
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}#{}", self.level, self.enc)
    }
}

/// Requested shape of a tower and optional defining polynomials, keyed by
/// level (degree over F_q). Polynomials are monic, coefficients low to high.
#[derive(Clone, Debug, Default)]
pub struct TowerSpec {
    pub p: u32,
    pub f: u32,
    pub n: u32,
    pub d: u32,
    pub polys: BTreeMap<u32, Vec<u32>>,
}

#[derive(Clone, Debug)]
struct Level {
    k: u32,
    degree: u32,
    size: u32,
    poly: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    to_top: Vec<u32>,
    from_top: Vec<u32>,
}

/// Description of one level, for reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LevelInfo {
    /// Degree over F_q.
    pub degree_over_q: u32,
    pub size: u64,
    /// Monic defining polynomial over F_p, coefficients low to high.
    pub polynomial: Vec<u32>,
    /// Coordinates of the chosen generator in the power basis.
    pub generator: Vec<u32>,
}

const NONE: u32 = u32::MAX;

fn decode(mut enc: u32, p: u32, degree: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(degree as usize);
    for _ in 0..degree {
        out.push(enc % p);
        enc /= p;
    }
    out
}

fn encode(coords: &[u32], p: u32) -> u32 {
    coords.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two coordinate vectors modulo a monic polynomial.
fn mul_coords(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let deg = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * deg];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for t in (deg..prod.len()).rev() {
        let c = prod[t];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus[..deg].iter().enumerate() {
            let idx = t - deg + i;
            prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
        }
        prod[t] = 0;
    }
    prod.truncate(deg);
    prod.into_iter().map(|v| v as u32).collect()
}

/// exp/log tables for `generator`, or `None` when it is not primitive.
fn log_tables(p: u32, modulus: &[u32], generator: u32) -> Option<(Vec<u32>, Vec<u32>)> {
    let degree = (modulus.len() - 1) as u32;
    let size = p.pow(degree);
    let g = decode(generator, p, degree);
    let mut exp = Vec::with_capacity(size as usize - 1);
    let mut log = vec![NONE; size as usize];
    let mut cur = decode(1, p, degree);
    for i in 0..size - 1 {
        let e = encode(&cur, p);
        if log[e as usize] != NONE {
            return None;
        }
        log[e as usize] = i;
        exp.push(e);
        cur = mul_coords(&cur, &g, modulus, p);
    }
    if encode(&cur, p) != 1 {
        return None;
    }
    Some((exp, log))
}

fn smallest_primitive(p: u32, modulus: &[u32]) -> (u32, Vec<u32>, Vec<u32>) {
    let degree = (modulus.len() - 1) as u32;
    let size = p.pow(degree);
    let x = if degree > 1 { p } else { (p - modulus[0]) % p };
    if let Some((exp, log)) = log_tables(p, modulus, x) {
        return (x, exp, log);
    }
    for g in 1..size {
        if let Some((exp, log)) = log_tables(p, modulus, g) {
            return (g, exp, log);
        }
    }
    unreachable!("a finite field always has a primitive element")
}

/// First primitive polynomial of the given degree in Conway order.
fn conway_ordered_primitive(p: u32, degree: u32) -> Vec<u32> {
    let count = p.pow(degree);
    for idx in 0..count {
        // a_1 is the most significant digit of idx
        let mut a = vec![0u32; degree as usize + 1];
        let mut t = idx;
        for i in (1..=degree as usize).rev() {
            a[i] = t % p;
            t /= p;
        }
        let mut poly = vec![0u32; degree as usize + 1];
        poly[degree as usize] = 1;
        for i in 1..=degree as usize {
            let c = if i % 2 == 0 { a[i] } else { (p - a[i]) % p };
            poly[degree as usize - i] = c;
        }
        if poly[0] == 0 {
            continue;
        }
        let x = if degree > 1 { p } else { (p - poly[0]) % p };
        if log_tables(p, &poly, x).is_some() {
            return poly;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u32,
    f: u32,
    n: u32,
    d: u32,
    q: u64,
    levels: Vec<Level>,
}

impl FieldTower {
    pub fn new(p: u32, f: u32, n: u32, d: u32) -> Result<Self> {
        Self::build(&TowerSpec { p, f, n, d, polys: BTreeMap::new() })
    }

    pub fn build(spec: &TowerSpec) -> Result<Self> {
        let TowerSpec { p, f, n, d, .. } = *spec;
        if !poly::is_prime(p) {
            return Err(Error::InvalidParameters(format!("p = {p} is not prime")));
        }
        if p == 2 {
            return Err(Error::InvalidParameters("p = 2 is not supported (p must be odd)".into()));
        }
        if f == 0 || n == 0 || d == 0 {
            return Err(Error::InvalidParameters("f, n, d must be positive".into()));
        }
        if n % d != 0 {
            return Err(Error::InvalidParameters(format!("d = {d} does not divide n = {n}")));
        }
        let top_degree = f as u64 * n as u64;
        let big = (p as u64).checked_pow(top_degree as u32).unwrap_or(u64::MAX);
        if big > MAX_FIELD_SIZE {
            return Err(Error::FieldTooLarge(big));
        }
        for (&k, pol) in &spec.polys {
            if ![1, d, n].contains(&k) {
                return Err(Error::NoSuchLevel(k));
            }
            let degree = f * k;
            let ok = pol.len() == degree as usize + 1
                && pol.last() == Some(&1)
                && pol.iter().all(|&c| c < p)
                && poly::is_irreducible(pol, p);
            if !ok {
                return Err(Error::NotIrreducible { poly: pol.clone(), degree, p });
            }
        }
        let q = (p as u64).pow(f);
        let top = Self::top_level(p, f * n, n, spec.polys.get(&n))?;
        let mut levels = vec![top];
        let mut ks: Vec<u32> = vec![1, d];
        ks.sort_unstable();
        ks.dedup();
        for k in ks.into_iter().filter(|&k| k != n) {
            let lvl = Self::sub_level(p, f, k, q, &levels[0], spec.polys.get(&k))?;
            levels.push(lvl);
        }
        levels.sort_by_key(|l| l.k);
        Ok(FieldTower { p, f, n, d, q, levels })
    }

    fn top_level(p: u32, degree: u32, k: u32, user: Option<&Vec<u32>>) -> Result<Level> {
        let poly = match user {
            Some(pl) => pl.clone(),
            None => conway_ordered_primitive(p, degree),
        };
        let size = p.pow(degree);
        let (generator, exp, log) = smallest_primitive(p, &poly);
        let ident: Vec<u32> = (0..size).collect();
        Ok(Level {
            k,
            degree,
            size,
            poly,
            generator,
            exp,
            log,
            to_top: ident.clone(),
            from_top: ident,
        })
    }

    fn sub_level(p: u32, f: u32, k: u32, q: u64, top: &Level, user: Option<&Vec<u32>>) -> Result<Level> {
        let degree = f * k;
        let size = p.pow(degree);
        let big_q = top.size as u64;
        let beta = top.exp[((big_q - 1) / (q.pow(k) - 1)) as usize];
        let (poly, root) = match user {
            Some(pl) => {
                let root = (0..top.size - 1)
                    .map(|i| top.exp[i as usize])
                    .find(|&r| top_eval(top, p, pl, r) == 0)
                    .ok_or_else(|| Error::Internal("irreducible polynomial has no root in the top field".into()))?;
                (pl.clone(), root)
            }
            None => (min_poly(top, p, beta, degree), beta),
        };
        // powers of the root in the top field
        let mut rpow = Vec::with_capacity(degree as usize);
        let mut cur = 1u32;
        for _ in 0..degree {
            rpow.push(cur);
            cur = top_mul(top, cur, root);
        }
        let mut to_top = Vec::with_capacity(size as usize);
        let mut from_top = vec![NONE; top.size as usize];
        for enc in 0..size {
            let c = decode(enc, p, degree);
            let mut acc = 0u32;
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    acc = top_add(top, p, acc, top_mul(top, ci, rpow[i]));
                }
            }
            to_top.push(acc);
            from_top[acc as usize] = enc;
        }
        let generator = from_top[beta as usize];
        if generator == NONE {
            return Err(Error::Internal(format!("norm generator missing from level {k}")));
        }
        let (exp, log) = log_tables(p, &poly, generator)
            .ok_or_else(|| Error::Internal(format!("level {k} generator is not primitive")))?;
        Ok(Level { k, degree, size, poly, generator, exp, log, to_top, from_top })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn f(&self) -> u32 {
        self.f
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn d(&self) -> u32 {
        self.d
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    /// |F_{q^n}|.
    pub fn top_size(&self) -> u64 {
        self.level_ref(self.n).size as u64
    }

    /// Levels present, as degrees over F_q.
    pub fn levels(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.k).collect()
    }

    pub fn has_level(&self, k: u32) -> bool {
        self.levels.iter().any(|l| l.k == k)
    }

    fn level_ref(&self, k: u32) -> &Level {
        self.levels
            .iter()
            .find(|l| l.k == k)
            .unwrap_or_else(|| panic!("no level of degree {k} in this tower"))
    }

    pub fn level_info(&self, k: u32) -> Result<LevelInfo> {
        let l = self.levels.iter().find(|l| l.k == k).ok_or(Error::NoSuchLevel(k))?;
        Ok(LevelInfo {
            degree_over_q: k,
            size: l.size as u64,
            polynomial: l.poly.clone(),
            generator: decode(l.generator, self.p, l.degree),
        })
    }

    pub fn size(&self, k: u32) -> u64 {
        self.level_ref(k).size as u64
    }

    pub fn zero(&self, k: u32) -> FqElem {
        self.level_ref(k);
        FqElem { level: k, enc: 0 }
    }

    pub fn one(&self, k: u32) -> FqElem {
        self.level_ref(k);
        FqElem { level: k, enc: 1 }
    }

    pub fn generator(&self, k: u32) -> FqElem {
        FqElem { level: k, enc: self.level_ref(k).generator }
    }

    /// The image of an integer under Z → F_p ⊂ level `k`.
    pub fn from_int(&self, k: u32, c: i64) -> FqElem {
        self.level_ref(k);
        FqElem { level: k, enc: c.rem_euclid(self.p as i64) as u32 }
    }

    pub fn from_coords(&self, k: u32, coords: &[u32]) -> Result<FqElem> {
        let l = self.level_ref(k);
        if coords.len() != l.degree as usize || coords.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameters(format!(
                "coordinates {coords:?} do not describe an element of level {k}"
            )));
        }
        Ok(FqElem { level: k, enc: encode(coords, self.p) })
    }

    pub fn from_encoding(&self, k: u32, enc: u32) -> FqElem {
        assert!(enc < self.level_ref(k).size, "encoding out of range");
        FqElem { level: k, enc }
    }

    pub fn coords(&self, x: FqElem) -> Vec<u32> {
        decode(x.enc, self.p, self.level_ref(x.level).degree)
    }

    /// γ_k^i.
    pub fn exp(&self, k: u32, i: i64) -> FqElem {
        let l = self.level_ref(k);
        let m = (l.size - 1) as i64;
        FqElem { level: k, enc: l.exp[i.rem_euclid(m) as usize] }
    }

    /// Discrete logarithm to base γ_k; `None` for zero.
    pub fn log(&self, x: FqElem) -> Option<u64> {
        if x.enc == 0 {
            return None;
        }
        Some(self.level_ref(x.level).log[x.enc as usize] as u64)
    }

    fn same(&self, a: FqElem, b: FqElem) {
        assert_eq!(a.level, b.level, "field elements from different levels");
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        self.same(a, b);
        FqElem { level: a.level, enc: digit_op(a.enc, b.enc, self.p, |x, y| x + y) }
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.same(a, b);
        FqElem { level: a.level, enc: digit_op(a.enc, b.enc, self.p, |x, y| x + self.p - y) }
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        self.sub(self.zero(a.level), a)
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        self.same(a, b);
        if a.enc == 0 || b.enc == 0 {
            return FqElem { level: a.level, enc: 0 };
        }
        let l = self.level_ref(a.level);
        let m = l.size as u64 - 1;
        let e = (l.log[a.enc as usize] as u64 + l.log[b.enc as usize] as u64) % m;
        FqElem { level: a.level, enc: l.exp[e as usize] }
    }

    pub fn inv(&self, a: FqElem) -> Option<FqElem> {
        if a.enc == 0 {
            return None;
        }
        Some(self.pow(a, -1))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Option<FqElem> {
        Some(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents require `a != 0`.
    pub fn pow(&self, a: FqElem, e: i64) -> FqElem {
        if a.enc == 0 {
            assert!(e >= 0, "zero has no inverse");
            return if e == 0 { self.one(a.level) } else { a };
        }
        let l = self.level_ref(a.level);
        let m = l.size as i128 - 1;
        let t = (l.log[a.enc as usize] as i128 * e as i128).rem_euclid(m);
        FqElem { level: a.level, enc: l.exp[t as usize] }
    }

    /// `x^{q^i}`; `i` may be negative.
    pub fn frobenius(&self, x: FqElem, i: i64) -> FqElem {
        if x.enc == 0 {
            return x;
        }
        let k = x.level as i64;
        let l = self.level_ref(x.level);
        let m = l.size as u64 - 1;
        let qi = pow_mod(self.q, i.rem_euclid(k) as u64, m);
        let e = (l.log[x.enc as usize] as u64 * qi) % m;
        FqElem { level: x.level, enc: l.exp[e as usize] }
    }

    /// Inclusion into a larger level.
    pub fn embed(&self, x: FqElem, to: u32) -> FqElem {
        assert!(to % x.level == 0, "level {} is not contained in level {to}", x.level);
        let top = self.level_ref(x.level).to_top[x.enc as usize];
        let enc = self.level_ref(to).from_top[top as usize];
        debug_assert_ne!(enc, NONE);
        FqElem { level: to, enc }
    }

    /// Preimage under the inclusion of level `to`, if `x` lies in it.
    pub fn restrict(&self, x: FqElem, to: u32) -> Option<FqElem> {
        let top = self.level_ref(x.level).to_top[x.enc as usize];
        let enc = self.level_ref(to).from_top[top as usize];
        (enc != NONE).then_some(FqElem { level: to, enc })
    }

    fn check_sub(&self, x: FqElem, target: u32) -> Result<()> {
        if !self.has_level(target) || x.level % target != 0 {
            return Err(Error::InvalidParameters(format!(
                "level {target} is not a subfield of level {}",
                x.level
            )));
        }
        Ok(())
    }

    /// Tr_{F_{q^k}/F_{q^t}} with `k = x.level()`, `t = target`.
    pub fn trace_to(&self, x: FqElem, target: u32) -> Result<FqElem> {
        self.check_sub(x, target)?;
        let mut acc = self.zero(x.level);
        let mut cur = x;
        for _ in 0..x.level / target {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur, target as i64);
        }
        self.restrict(acc, target)
            .ok_or_else(|| Error::Internal("trace left the subfield".into()))
    }

    /// N_{F_{q^k}/F_{q^t}}.
    pub fn norm_to(&self, x: FqElem, target: u32) -> Result<FqElem> {
        self.check_sub(x, target)?;
        let mut acc = self.one(x.level);
        let mut cur = x;
        for _ in 0..x.level / target {
            acc = self.mul(acc, cur);
            cur = self.frobenius(cur, target as i64);
        }
        self.restrict(acc, target)
            .ok_or_else(|| Error::Internal("norm left the subfield".into()))
    }

    /// Tr_{F_{q^k}/F_p} as an integer in `0..p`.
    pub fn absolute_trace(&self, x: FqElem) -> u32 {
        let y = self.trace_to(x, 1).expect("level 1 is always present");
        // Tr_{F_q/F_p}: sum of the p-power conjugates inside level 1
        let l = self.level_ref(1);
        let m = l.size as u64 - 1;
        let mut acc = self.zero(1);
        if y.enc != 0 {
            let lg = l.log[y.enc as usize] as u64;
            for i in 0..self.f {
                let e = lg * pow_mod(self.p as u64, i as u64, m) % m;
                acc = self.add(acc, FqElem { level: 1, enc: l.exp[e as usize] });
            }
        }
        assert!(acc.enc < self.p, "absolute trace is not in the prime field");
        acc.enc
    }

    /// Units in the order γ^0, γ^1, ..., γ^{size-2}.
    pub fn units(&self, k: u32) -> impl Iterator<Item = FqElem> + '_ {
        self.level_ref(k).exp.iter().map(move |&e| FqElem { level: k, enc: e })
    }

    /// All elements: the units in generator order, then zero.
    pub fn elements(&self, k: u32) -> impl Iterator<Item = FqElem> + '_ {
        self.units(k).chain(std::iter::once(FqElem { level: k, enc: 0 }))
    }

    /// Whether both towers define their common levels identically.
    pub fn compatible_top(&self, other: &FieldTower) -> bool {
        let a = self.level_ref(self.n);
        let b = other.level_ref(other.n);
        self.p == other.p
            && self.f == other.f
            && self.n == other.n
            && a.poly == b.poly
            && a.generator == b.generator
    }
}

fn digit_op(mut a: u32, mut b: u32, p: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let mut out = 0u32;
    let mut scale = 1u32;
    while a > 0 || b > 0 {
        let digit = op(a % p, b % p) % p;
        out += digit * scale;
        scale = scale.wrapping_mul(p);
        a /= p;
        b /= p;
    }
    out
}

fn top_add(top: &Level, p: u32, a: u32, b: u32) -> u32 {
    let _ = top;
    digit_op(a, b, p, |x, y| x + y)
}

fn top_mul(top: &Level, a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        return 0;
    }
    let m = top.size as u64 - 1;
    let e = (top.log[a as usize] as u64 + top.log[b as usize] as u64) % m;
    top.exp[e as usize]
}

fn top_eval(top: &Level, p: u32, poly: &[u32], x: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| top_add(top, p, top_mul(top, acc, x), c))
}

/// Π_{i<degree} (X - β^{p^i}) with coefficients read back in F_p.
fn min_poly(top: &Level, p: u32, beta: u32, degree: u32) -> Vec<u32> {
    let m = top.size as u64 - 1;
    let mut coeffs = vec![1u32];
    let lb = top.log[beta as usize] as u64;
    for i in 0..degree {
        let root = top.exp[(lb * pow_mod(p as u64, i as u64, m) % m) as usize];
        let neg_root = digit_op(0, root, p, |x, y| x + p - y);
        let mut next = vec![0u32; coeffs.len() + 1];
        for (j, &c) in coeffs.iter().enumerate() {
            next[j + 1] = top_add(top, p, next[j + 1], c);
            next[j] = top_add(top, p, next[j], top_mul(top, c, neg_root));
        }
        coeffs = next;
    }
    assert!(coeffs.iter().all(|&c| c < p), "minimal polynomial not over F_p");
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_uses_x2_minus_x_minus_1() {
        let t = FieldTower::new(3, 1, 2, 2).unwrap();
        assert_eq!(t.level_info(2).unwrap().polynomial, vec![2, 2, 1]);
        let x = t.from_coords(2, &[0, 1]).unwrap();
        assert_eq!(t.generator(2), x);
        // x^3 = 2x + 1
        assert_eq!(t.pow(x, 3), t.from_coords(2, &[1, 2]).unwrap());
        // Tr(x + 1) = 0
        let y = t.add(x, t.one(2));
        assert_eq!(t.trace_to(y, 1).unwrap(), t.zero(1));
    }

    #[test]
    fn prime_field_generator_is_norm_of_top() {
        let t = FieldTower::new(3, 1, 2, 2).unwrap();
        assert_eq!(t.generator(1), t.from_int(1, 2));
        assert_eq!(t.norm_to(t.generator(2), 1).unwrap(), t.generator(1));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldTower::new(2, 1, 2, 2).is_err());
        assert!(FieldTower::new(9, 1, 2, 2).is_err());
        assert!(FieldTower::new(3, 1, 4, 3).is_err());
        let mut polys = BTreeMap::new();
        polys.insert(2, vec![2, 0, 1]);
        let spec = TowerSpec { p: 3, f: 1, n: 2, d: 2, polys };
        assert!(matches!(FieldTower::build(&spec), Err(Error::NotIrreducible { .. })));
    }

    #[test]
    fn user_polynomial_with_non_primitive_root() {
        // x^2 + 1 over F_3: x has order 4, so a different generator is chosen
        let mut polys = BTreeMap::new();
        polys.insert(2, vec![1, 0, 1]);
        let t = FieldTower::build(&TowerSpec { p: 3, f: 1, n: 2, d: 2, polys }).unwrap();
        let g = t.generator(2);
        assert_eq!(t.units(2).count(), 8);
        assert_eq!(t.pow(g, 8), t.one(2));
        assert_ne!(t.pow(g, 4), t.one(2));
        assert_eq!(t.norm_to(g, 1).unwrap(), t.generator(1));
    }

    #[test]
    fn user_polynomial_for_subfield() {
        let mut polys = BTreeMap::new();
        polys.insert(2, vec![1, 0, 1]);
        let t = FieldTower::build(&TowerSpec { p: 3, f: 1, n: 4, d: 2, polys }).unwrap();
        let g2 = t.generator(2);
        assert_eq!(t.embed(g2, 4), t.pow(t.generator(4), 10));
        assert_eq!(t.level_info(2).unwrap().polynomial, vec![1, 0, 1]);
    }
}
