mod common;

use common::{approx, close, cmul, root, NaiveField};
use tjm_core::characters::{gauss_sum, is_regular, norm_inflate, AddChar, MultChar};
use tjm_core::finite_field::FieldTower;

/// Σ_k χ(γ^k) ψ(γ^k) in floating point, using only the reference field.
fn naive_gauss(t: &FieldTower, level: u32, exponent: u64) -> (f64, f64) {
    let f = NaiveField { p: t.p(), modulus: t.level_info(level).unwrap().polynomial };
    let g = t.coords(t.generator(level));
    let size = t.size(level);
    let deg = f.degree();
    let mut x = f.one();
    let mut acc = (0.0, 0.0);
    for k in 0..size - 1 {
        let mut tr = vec![0; deg];
        for i in 0..deg {
            tr = f.add(&tr, &f.pow(&x, (t.p() as u64).pow(i as u32)));
        }
        let chi = root(size - 1, (exponent * k) % (size - 1));
        let psi = root(t.p() as u64, tr[0] as u64);
        let v = cmul(chi, psi);
        acc = (acc.0 + v.0, acc.1 + v.1);
        x = f.mul(&x, &g);
    }
    acc
}

#[test]
fn gauss_sums_match_floating_enumeration() {
    for (p, n) in [(3, 2), (5, 2), (3, 3), (7, 2), (3, 4)] {
        let t = FieldTower::new(p, 1, n, n).unwrap();
        let size = t.size(n);
        for e in [1, 2, 5, size - 2] {
            let chi = MultChar::new(&t, n, e as i64).unwrap();
            let g = gauss_sum(&t, &chi, &AddChar::standard(n));
            assert!(close(approx(&g), naive_gauss(&t, n, e % (size - 1))), "p={p} n={n} e={e}");
            // |G|^2 = Q for non-trivial χ
            assert_eq!(&g * &g.conj_complex(), tjm_core::cyclotomic::CycNum::from_int(size as i64));
        }
    }
}

#[test]
fn gauss_lemma_values_by_enumeration() {
    // for regular θ on F_{q^2}: G(θ^{q-1}) = q θ(-1), with θ(-1) = (-1)^e
    for q in [3u32, 5, 7] {
        let t = FieldTower::new(q, 1, 2, 2).unwrap();
        let qq = q as u64;
        for e in 0..qq * qq - 1 {
            let theta = MultChar::new(&t, 2, e as i64).unwrap();
            if !is_regular(&t, &theta) {
                continue;
            }
            let lhs = naive_gauss(&t, 2, (e * (qq - 1)) % (qq * qq - 1));
            let sign = if e % 2 == 0 { 1.0 } else { -1.0 };
            assert!(close(lhs, (qq as f64 * sign, 0.0)), "q={q} e={e}: {lhs:?}");
        }
    }
}

#[test]
fn hasse_davenport_by_enumeration() {
    // the lift of θ to F_{q^n}, n = 2m, has exponent e(1 + q^2 + ... + q^{2(m-1)})
    for (q, m) in [(3u32, 1u32), (3, 2), (5, 1)] {
        let n = 2 * m;
        let t = FieldTower::new(q, 1, n, 2).unwrap();
        let qq = q as u64;
        let big = qq.pow(n) - 1;
        let lift: u64 = (0..m).map(|i| qq.pow(2 * i)).sum();
        for e in 0..qq * qq - 1 {
            let theta = MultChar::new(&t, 2, e as i64).unwrap();
            if !is_regular(&t, &theta) {
                continue;
            }
            let inflated = norm_inflate(&t, &theta, n).unwrap();
            assert_eq!(inflated.exponent(), (e * lift) % big);
            let lhs = naive_gauss(&t, n, (e * lift * (qq - 1)) % big);
            let sign_m1 = if m % 2 == 1 { 1.0 } else { -1.0 };
            let theta_m1 = if (e * m as u64) % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign_m1 * (qq as f64).powi(m as i32) * theta_m1;
            assert!(close(lhs, (rhs, 0.0)), "q={q} m={m} e={e}: {lhs:?} vs {rhs}");
        }
    }
}
