//! Integer backends for coefficient vectors.
//!
//! Every routine is written once against [`Coeff`]. The `i64` backend reports
//! overflow through `None`, and the caller retries with `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Non-negative gcd.
    fn gcd(&self, o: &Self) -> Self;
    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, o: &Self) -> Self;
}

// i64::MIN is treated as overflow so that negation and abs never fail.
fn guard(v: Option<i64>) -> Option<i64> {
    v.filter(|&x| x != i64::MIN)
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        guard(self.checked_add(*o))
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        guard(self.checked_sub(*o))
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        guard(self.checked_mul(*o))
    }
    fn neg(&self) -> Option<Self> {
        Some(-*self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

pub(crate) fn to_small(v: &BigInt) -> Option<i64> {
    v.to_i64().filter(|&x| x != i64::MIN)
}

/// Divides out the content so that `gcd(den, num...) = 1` and `den > 0`.
pub(crate) fn normalize<I: Coeff>(num: &mut [I], den: &mut I) -> Option<()> {
    if num.iter().all(Coeff::is_zero) {
        *den = I::from_i64(1);
        return Some(());
    }
    if den.is_negative() {
        *den = den.neg()?;
        for c in num.iter_mut() {
            *c = c.neg()?;
        }
    }
    let mut g = den.clone();
    for c in num.iter() {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    if !g.is_one() {
        *den = den.div_exact(&g);
        for c in num.iter_mut() {
            *c = c.div_exact(&g);
        }
    }
    Some(())
}

/// Reduces a polynomial (low to high) modulo the monic `modulus` in place and
/// truncates it to `deg modulus` coefficients.
pub(crate) fn reduce<I: Coeff>(poly: &mut Vec<I>, modulus: &[i64]) -> Option<()> {
    let phi = modulus.len() - 1;
    if poly.len() > phi {
        for t in (phi..poly.len()).rev() {
            if poly[t].is_zero() {
                continue;
            }
            let c = poly[t].clone();
            for (i, &m) in modulus[..phi].iter().enumerate() {
                if m != 0 {
                    let idx = t - phi + i;
                    poly[idx] = poly[idx].sub(&c.mul(&I::from_i64(m))?)?;
                }
            }
            poly[t] = I::from_i64(0);
        }
    }
    poly.resize(phi, I::from_i64(0));
    Some(())
}

pub(crate) fn add<I: Coeff>(a: &[I], ad: &I, b: &[I], bd: &I, negate_b: bool) -> Option<(Vec<I>, I)> {
    let g = ad.gcd(bd);
    let fa = bd.div_exact(&g);
    let fb = ad.div_exact(&g);
    let den = ad.mul(&fa)?;
    let mut out = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        let l = x.mul(&fa)?;
        let r = y.mul(&fb)?;
        out.push(if negate_b { l.sub(&r)? } else { l.add(&r)? });
    }
    let mut den = den;
    normalize(&mut out, &mut den)?;
    Some((out, den))
}

pub(crate) fn mul<I: Coeff>(a: &[I], ad: &I, b: &[I], bd: &I, modulus: &[i64]) -> Option<(Vec<I>, I)> {
    let n = a.len();
    let zero = I::from_i64(0);
    let mut conv = vec![zero; (2 * n).saturating_sub(1).max(1)];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            conv[i + j] = conv[i + j].add(&x.mul(y)?)?;
        }
    }
    reduce(&mut conv, modulus)?;
    let mut den = ad.mul(bd)?;
    normalize(&mut conv, &mut den)?;
    Some((conv, den))
}

/// Sends `x^k` to `x^{(k * mult) mod order}` and reduces.
pub(crate) fn remap<I: Coeff>(
    a: &[I],
    ad: &I,
    mult: u64,
    order: u32,
    modulus: &[i64],
) -> Option<(Vec<I>, I)> {
    let l = order as u64;
    let zero = I::from_i64(0);
    let mut poly = vec![zero; order.max(1) as usize];
    for (k, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = ((k as u64 % l) * (mult % l) % l) as usize;
        poly[t] = poly[t].add(c)?;
    }
    reduce(&mut poly, modulus)?;
    let mut den = ad.clone();
    normalize(&mut poly, &mut den)?;
    Some((poly, den))
}

pub(crate) fn scale<I: Coeff>(a: &[I], ad: &I, num: &I, den: &I) -> Option<(Vec<I>, I)> {
    let mut out = Vec::with_capacity(a.len());
    for c in a {
        out.push(c.mul(num)?);
    }
    let mut d = ad.mul(den)?;
    normalize(&mut out, &mut d)?;
    Some((out, d))
}
