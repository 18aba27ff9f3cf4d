//! Dense polynomials over F_p, coefficients low to high.

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a non-zero `m`.
fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let t = r.len() - 1;
        let c = (r[t] as u64 * lead_inv % p as u64) as u32;
        if c != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = t - dm + i;
                r[idx] = ((r[idx] as u64 + (p - c) as u64 * mc as u64) % p as u64) as u32;
            }
        }
        r.pop();
        if r.is_empty() {
            r.push(0);
        }
    }
    trim(&mut r);
    r
}

fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
    rem(&out, m, p)
}

fn pow_poly_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut r = vec![1u32];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(&r, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test for a monic polynomial of degree `D >= 1`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0u32, 1];
    // x^{p^k} mod f
    let frob = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = pow_poly_mod(&h, p as u64, f, p);
        }
        h
    };
    if sub(&frob(d), &x, p) != vec![0] {
        return false;
    }
    for r in prime_factors(d as u64) {
        let h = sub(&frob(d / r as usize), &x, p);
        let g = gcd(f, &h, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rabin_small_cases() {
        // x^2 + 1 is irreducible over F_3, x^2 - 1 is not
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[2, 0, 1], 3));
        // x^2 + 1 splits over F_5
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // (x^2+1)^2 over F_3 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
    }

    #[test]
    fn rabin_counts_match_necklace_formula() {
        // number of monic irreducibles of degree 4 over F_3 is (81 - 9)/4 = 18
        let mut count = 0;
        for c in 0..81u32 {
            let f = vec![c % 3, c / 3 % 3, c / 9 % 3, c / 27 % 3, 1];
            if is_irreducible(&f, 3) {
                count += 1;
            }
        }
        assert_eq!(count, 18);
    }
}
