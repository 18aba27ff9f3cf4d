//! Exact arithmetic in cyclotomic fields Q(ζ_L).
//!
//! A [`CycNum`] stores an order `L` and its coordinates in the power basis
//! `1, ζ_L, ..., ζ_L^{φ(L)-1}` of Q[x]/Φ_L, as integer numerators over one
//! common denominator. Values are kept canonical so that structural equality
//! is field equality at a fixed order:
//!
//! * the order is never `2 mod 4` (Q(ζ_{2h}) = Q(ζ_h) for odd `h`, with
//!   `ζ_{2h} = -ζ_h^{(h+1)/2}`),
//! * rational values have order 1,
//! * the content is divided out and the denominator is positive.
//!
//! Operands of different orders are embedded into the field of the lcm of the
//! orders via the compatible system `ζ_{mL}^m = ζ_L`. Coefficients run on
//! `i64` and fall back to `BigInt` on overflow.

mod coeff;
mod root;
mod table;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use root::Root;
pub use table::euler_phi;

use table::table;

pub type Rational = BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed cyclotomic value: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Coeffs {
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

#[derive(Clone, Debug)]
pub struct CycNum {
    order: u32,
    coeffs: Coeffs,
}

fn canonical_order(l: u32) -> u32 {
    if l % 4 == 2 {
        l / 2
    } else {
        l
    }
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { order: 1, coeffs: Coeffs::Small { num: vec![0], den: 1 } }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(&BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::from_big(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// `ζ_L^k`, stored at its minimal canonical order.
    pub fn root_of_unity(l: u32, k: i64) -> Self {
        assert!(l >= 1, "root of unity order must be positive");
        let r = Root::new(l as u64, k);
        let (o, e) = (r.order() as u32, r.exponent());
        if o == 1 {
            return Self::one();
        }
        if o % 4 == 2 {
            let h = o / 2;
            let sign = if e % 2 == 1 { -1 } else { 1 };
            let t = e * (h as u64 + 1) / 2 % h as u64;
            let tab = table(h);
            let num = tab.power(t).iter().map(|c| c * sign).collect();
            return Self::from_small(h, num, 1);
        }
        let tab = table(o);
        Self::from_small(o, tab.power(e).to_vec(), 1)
    }

    /// Σ_k counts[k] ζ_L^k for `counts.len() == L`.
    pub fn from_group_ring(l: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), l as usize, "group-ring vector has wrong length");
        let dense: Vec<i64> = counts.to_vec();
        Self::from_poly(l, dense)
    }

    /// Builds a value from coordinates in the power basis of Q(ζ_L).
    /// Any order is accepted, including orders `2 mod 4`.
    pub fn from_coeffs(l: u32, coeffs: &[Rational]) -> Result<Self, CycError> {
        if l == 0 {
            return Err(CycError::Malformed("order 0".into()));
        }
        let phi = table(l).phi();
        if coeffs.len() != phi {
            return Err(CycError::Malformed(format!(
                "order {l} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num: Vec<BigInt> =
            coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        if l % 4 == 2 {
            // x_{2h}^k = (-1)^k x_h^{k(h+1)/2}
            let h = l / 2;
            let mut poly = vec![BigInt::zero(); h as usize];
            for (k, c) in num.iter().enumerate() {
                let t = (k as u64 * (h as u64 + 1) / 2 % h as u64) as usize;
                if k % 2 == 1 {
                    poly[t] -= c;
                } else {
                    poly[t] += c;
                }
            }
            let tab = table(h);
            coeff::reduce(&mut poly, &tab.poly).expect("bigint reduce");
            return Ok(Self::from_big(h, poly, den));
        }
        Ok(Self::from_big(l, num, den))
    }

    fn from_poly(l: u32, mut poly: Vec<i64>) -> Self {
        let l = l.max(1);
        if l % 4 == 2 {
            let h = l / 2;
            let mut acc = vec![0i64; h as usize];
            let mut big = false;
            for (k, &c) in poly.iter().enumerate() {
                let t = (k as u64 * (h as u64 + 1) / 2 % h as u64) as usize;
                let v = if k % 2 == 1 { acc[t].checked_sub(c) } else { acc[t].checked_add(c) };
                match v {
                    Some(v) => acc[t] = v,
                    None => {
                        big = true;
                        break;
                    }
                }
            }
            if !big {
                return Self::from_poly(h, acc);
            }
            let mut acc = vec![BigInt::zero(); h as usize];
            for (k, &c) in poly.iter().enumerate() {
                let t = (k as u64 * (h as u64 + 1) / 2 % h as u64) as usize;
                if k % 2 == 1 {
                    acc[t] -= c;
                } else {
                    acc[t] += c;
                }
            }
            let tab = table(h);
            coeff::reduce(&mut acc, &tab.poly).expect("bigint reduce");
            return Self::from_big(h, acc, BigInt::one());
        }
        let tab = table(l);
        let mut attempt = poly.clone();
        if coeff::reduce(&mut attempt, &tab.poly).is_some() {
            return Self::from_small(l, attempt, 1);
        }
        let mut bigp: Vec<BigInt> = poly.drain(..).map(BigInt::from).collect();
        coeff::reduce(&mut bigp, &tab.poly).expect("bigint reduce");
        Self::from_big(l, bigp, BigInt::one())
    }

    fn from_small(order: u32, mut num: Vec<i64>, mut den: i64) -> Self {
        if coeff::normalize(&mut num, &mut den).is_none() {
            let num = num.into_iter().map(BigInt::from).collect();
            return Self::from_big(order, num, BigInt::from(den));
        }
        let mut v = CycNum { order, coeffs: Coeffs::Small { num, den } };
        v.drop_rational_order();
        v
    }

    fn from_big(order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        coeff::normalize(&mut num, &mut den).expect("bigint normalize");
        let small: Option<Vec<i64>> = num.iter().map(coeff::to_small).collect();
        let coeffs = match (small, coeff::to_small(&den)) {
            (Some(num), Some(den)) => Coeffs::Small { num, den },
            _ => Coeffs::Big { num, den },
        };
        let mut v = CycNum { order, coeffs };
        v.drop_rational_order();
        v
    }

    fn drop_rational_order(&mut self) {
        if self.order == 1 {
            return;
        }
        let rational = match &self.coeffs {
            Coeffs::Small { num, .. } => num[1..].iter().all(|c| *c == 0),
            Coeffs::Big { num, .. } => num[1..].iter().all(Zero::is_zero),
        };
        if rational {
            self.order = 1;
            match &mut self.coeffs {
                Coeffs::Small { num, .. } => num.truncate(1),
                Coeffs::Big { num, .. } => num.truncate(1),
            }
        }
    }

    /// The order `L` of the field this value is stored in.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        match &self.coeffs {
            Coeffs::Small { num, .. } => num.iter().all(|c| *c == 0),
            Coeffs::Big { num, .. } => num.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.order == 1 {
            Some(self.coeffs()[0].clone())
        } else {
            None
        }
    }

    /// Power-basis numerators and their common denominator, when they fit
    /// in machine integers.
    pub(crate) fn small_parts(&self) -> Option<(&[i64], i64)> {
        match &self.coeffs {
            Coeffs::Small { num, den } => Some((num, *den)),
            Coeffs::Big { .. } => None,
        }
    }

    /// Power-basis coordinates as exact rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        match &self.coeffs {
            Coeffs::Small { num, den } => num
                .iter()
                .map(|&c| BigRational::new(c.into(), (*den).into()))
                .collect(),
            Coeffs::Big { num, den } => {
                num.iter().map(|c| BigRational::new(c.clone(), den.clone())).collect()
            }
        }
    }

    fn big_parts(&self) -> (Vec<BigInt>, BigInt) {
        match &self.coeffs {
            Coeffs::Small { num, den } => {
                (num.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den))
            }
            Coeffs::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    /// Re-expresses the value in Q(ζ_target). `target` must be a multiple of
    /// the current order; orders `2 mod 4` are replaced by their odd half.
    pub fn embed(&self, target: u32) -> CycNum {
        let target = canonical_order(target);
        assert!(
            target % self.order == 0,
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let m = (target / self.order) as u64;
        let tab = table(target);
        let mut out = self.remap_with(m, target, &tab.poly);
        // embedding keeps the requested order even for rational values
        if out.order != target {
            let (num, den) = out.big_parts();
            let mut n = vec![BigInt::zero(); tab.phi()];
            n[0] = num[0].clone();
            out = CycNum { order: target, coeffs: Coeffs::Big { num: n, den } };
            out.shrink();
        }
        out
    }

    fn shrink(&mut self) {
        if let Coeffs::Big { num, den } = &self.coeffs {
            let small: Option<Vec<i64>> = num.iter().map(coeff::to_small).collect();
            if let (Some(num), Some(den)) = (small, coeff::to_small(den)) {
                self.coeffs = Coeffs::Small { num, den };
            }
        }
    }

    fn remap_with(&self, mult: u64, order: u32, modulus: &[i64]) -> CycNum {
        if let Coeffs::Small { num, den } = &self.coeffs {
            if let Some((n, d)) = coeff::remap(num, den, mult, order, modulus) {
                return Self::from_small(order, n, d);
            }
        }
        let (num, den) = self.big_parts();
        let (n, d) = coeff::remap(&num, &den, mult, order, modulus).expect("bigint remap");
        Self::from_big(order, n, d)
    }

    fn aligned(a: &CycNum, b: &CycNum) -> (CycNum, CycNum, u32) {
        if a.order == b.order {
            return (a.clone(), b.clone(), a.order);
        }
        let l = canonical_order(a.order.lcm(&b.order));
        (a.embed(l), b.embed(l), l)
    }

    fn binary(
        a: &CycNum,
        b: &CycNum,
        small: impl Fn(&[i64], &i64, &[i64], &i64, &[i64]) -> Option<(Vec<i64>, i64)>,
        big: impl Fn(&[BigInt], &BigInt, &[BigInt], &BigInt, &[i64]) -> Option<(Vec<BigInt>, BigInt)>,
    ) -> CycNum {
        let (a, b, l) = if a.order == 1 || b.order == 1 || a.order == b.order {
            // rationals broadcast without a full embedding
            let l = a.order.max(b.order);
            (a.lift_rational(l), b.lift_rational(l), l)
        } else {
            Self::aligned(a, b)
        };
        let tab = table(l);
        if let (Coeffs::Small { num: an, den: ad }, Coeffs::Small { num: bn, den: bd }) =
            (&a.coeffs, &b.coeffs)
        {
            if let Some((n, d)) = small(an, ad, bn, bd, &tab.poly) {
                return Self::from_small(l, n, d);
            }
        }
        let (an, ad) = a.big_parts();
        let (bn, bd) = b.big_parts();
        let (n, d) = big(&an, &ad, &bn, &bd, &tab.poly).expect("bigint arithmetic");
        Self::from_big(l, n, d)
    }

    fn lift_rational(&self, l: u32) -> CycNum {
        if self.order == l {
            return self.clone();
        }
        debug_assert_eq!(self.order, 1);
        let phi = table(l).phi();
        let coeffs = match &self.coeffs {
            Coeffs::Small { num, den } => {
                let mut n = vec![0i64; phi];
                n[0] = num[0];
                Coeffs::Small { num: n, den: *den }
            }
            Coeffs::Big { num, den } => {
                let mut n = vec![BigInt::zero(); phi];
                n[0] = num[0].clone();
                Coeffs::Big { num: n, den: den.clone() }
            }
        };
        CycNum { order: l, coeffs }
    }

    pub fn add_ref(&self, o: &CycNum) -> CycNum {
        Self::binary(
            self,
            o,
            |a, ad, b, bd, _| coeff::add(a, ad, b, bd, false),
            |a, ad, b, bd, _| coeff::add(a, ad, b, bd, false),
        )
    }

    pub fn sub_ref(&self, o: &CycNum) -> CycNum {
        Self::binary(
            self,
            o,
            |a, ad, b, bd, _| coeff::add(a, ad, b, bd, true),
            |a, ad, b, bd, _| coeff::add(a, ad, b, bd, true),
        )
    }

    pub fn mul_ref(&self, o: &CycNum) -> CycNum {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(r) = o.as_rational() {
            return self.scale(&r);
        }
        if let Some(r) = self.as_rational() {
            return o.scale(&r);
        }
        Self::binary(self, o, coeff::mul, coeff::mul)
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        if r.is_zero() {
            return Self::zero();
        }
        if let (Coeffs::Small { num, den }, Some(rn), Some(rd)) =
            (&self.coeffs, coeff::to_small(r.numer()), coeff::to_small(r.denom()))
        {
            if let Some((n, d)) = coeff::scale(num, den, &rn, &rd) {
                return Self::from_small(self.order, n, d);
            }
        }
        let (num, den) = self.big_parts();
        let (n, d) = coeff::scale(&num, &den, r.numer(), r.denom()).expect("bigint scale");
        Self::from_big(self.order, n, d)
    }

    pub fn neg_ref(&self) -> CycNum {
        self.scale(&-BigRational::one())
    }

    /// The Galois automorphism ζ ↦ ζ^k of Q(ζ_L); `k` must be prime to `L`.
    pub fn galois(&self, k: i64) -> CycNum {
        let l = self.order;
        if l == 1 {
            return self.clone();
        }
        let k = k.rem_euclid(l as i64) as u64;
        assert_eq!(k.gcd(&(l as u64)), 1, "Galois exponent must be prime to the order");
        let tab = table(l);
        self.remap_with(k, l, &tab.poly)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj_complex(&self) -> CycNum {
        self.galois(-1)
    }

    pub fn inv(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&r.recip()));
        }
        let coeffs = self.coeffs();
        let nonzero: Vec<usize> = (0..coeffs.len()).filter(|&i| !coeffs[i].is_zero()).collect();
        if nonzero.len() == 1 {
            let i = nonzero[0];
            let z = Self::root_of_unity(self.order, -(i as i64));
            return Ok(z.scale(&coeffs[i].recip()));
        }
        // x^{-1} = (Π_{σ≠1} σx) / N(x)
        let l = self.order as u64;
        let mut prod = Self::one();
        for k in 2..l {
            if k.gcd(&l) == 1 {
                prod = prod.mul_ref(&self.galois(k as i64));
            }
        }
        let norm = self.mul_ref(&prod);
        let n = norm.as_rational().expect("field norm must be rational");
        Ok(prod.scale(&n.recip()))
    }

    pub fn div_ref(&self, o: &CycNum) -> Result<CycNum, CycError> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<CycNum, CycError> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(acc)
    }

    /// Compact one-line rendering, e.g. `[8; 0, -3/2, 0, 1]`.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        format!("[{}; {}]", self.order, parts.join(", "))
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return match (&self.coeffs, &other.coeffs) {
                (Coeffs::Small { .. }, Coeffs::Small { .. })
                | (Coeffs::Big { .. }, Coeffs::Big { .. }) => self.coeffs == other.coeffs,
                _ => self.big_parts() == other.big_parts(),
            };
        }
        if self.order == 1 || other.order == 1 {
            // canonical values of order > 1 are irrational
            return false;
        }
        let (a, b, _) = Self::aligned(self, other);
        a.big_parts() == b.big_parts()
    }
}

impl Eq for CycNum {}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNum {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Root> for CycNum {
    fn from(r: Root) -> Self {
        r.to_cyc()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, o: &CycNum) -> CycNum {
                self.$imp(o)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: CycNum) -> CycNum {
                self.$imp(&o)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: &CycNum) -> CycNum {
                self.$imp(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        self.neg_ref()
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |a, b| a.add_ref(&b))
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let term = match k {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{}", self.order, k),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{term}")?;
            } else {
                write!(f, "{mag}*{term}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycNumRepr {
            order: self.order,
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CycNumRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(|e| format!("{s:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycNum::from_coeffs(repr.order, &coeffs).map_err(serde::de::Error::custom)
    }
}
