use proptest::prelude::*;
use tjm_core::finite_field::FieldTower;
use tjm_core::gl2::{Bruhat, Gl2};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bruhat_form_reassembles(p in prop::sample::select(vec![3u32, 5, 7]), a in 0u32..49, b in 0u32..49, c in 0u32..49, d in 0u32..49) {
        let t = FieldTower::new(p, 1, 2, 2).unwrap();
        let size = t.top_size() as u32;
        let gl = Gl2::new(&t);
        let e = |v: u32| t.from_encoding(2, v % size);
        let g = gl.mat(e(a), e(b), e(c), e(d));
        prop_assume!(!gl.det(&g).is_zero());
        let form = gl.bruhat(&g);
        match &form {
            Bruhat::Borel { b } => {
                prop_assert!(gl.is_borel(b));
                prop_assert!(gl.is_borel(&g));
            }
            Bruhat::Big { b, .. } => {
                prop_assert!(gl.is_borel(b));
                prop_assert!(!gl.is_borel(&g));
            }
        }
        prop_assert_eq!(gl.compose(&form), g);
    }

    #[test]
    fn frobenius_is_multiplicative(a in 0u32..81, b in 0u32..81, c in 0u32..81, k in 0i64..4) {
        let t = FieldTower::new(3, 1, 4, 2).unwrap();
        let gl = Gl2::new(&t);
        let e = |v: u32| t.from_encoding(4, v % 81);
        let g = gl.mat(e(a), e(b), e(c), e(a ^ 1));
        let h = gl.mat(e(c), e(a), e(b), e(b ^ 2));
        prop_assert_eq!(gl.frobenius(&gl.mul(&g, &h), k), gl.mul(&gl.frobenius(&g, k), &gl.frobenius(&h, k)));
    }
}

#[test]
fn coset_representatives_partition_the_group() {
    let t = FieldTower::new(3, 1, 2, 2).unwrap();
    let gl = Gl2::new(&t);
    let reps = gl.coset_reps();
    assert_eq!(reps.len(), 10);
    let group = gl.enumerate_group();
    assert_eq!(group.len(), 5760);
    // every g lies in exactly one coset B r
    for g in group.iter().step_by(7) {
        let hits = reps.iter().filter(|r| gl.is_borel(&gl.mul(g, &gl.inv(r).unwrap()))).count();
        assert_eq!(hits, 1);
    }
}
