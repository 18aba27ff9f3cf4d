use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::CycNum;

/// A root of unity `ζ_order^exponent`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    order: u64,
    exponent: u64,
}

impl Root {
    pub fn new(order: u64, exponent: i64) -> Self {
        assert!(order >= 1, "root of unity order must be positive");
        let e = exponent.rem_euclid(order as i64) as u64;
        let g = order.gcd(&e);
        Root { order: order / g, exponent: e / g }
    }

    pub fn one() -> Self {
        Root { order: 1, exponent: 0 }
    }

    pub fn minus_one() -> Self {
        Root { order: 2, exponent: 1 }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn mul(&self, o: &Root) -> Root {
        let l = self.order.lcm(&o.order);
        let e = (self.exponent * (l / self.order) + o.exponent * (l / o.order)) % l;
        Root::new(l, e as i64)
    }

    pub fn pow(&self, k: i64) -> Root {
        let o = self.order as i128;
        let e = (self.exponent as i128 * k as i128).rem_euclid(o);
        Root::new(self.order, e as i64)
    }

    pub fn inv(&self) -> Root {
        self.pow(-1)
    }

    pub fn to_cyc(&self) -> CycNum {
        CycNum::root_of_unity(self.order as u32, self.exponent as i64)
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (o, e) => write!(f, "ζ{o}^{e}"),
        }
    }
}
