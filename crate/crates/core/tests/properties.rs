use l1class::arith::{
    factorize, fundamental_discriminants, fundamental_unit, gcd, is_fundamental_discriminant, kronecker_symbol,
};
use l1class::binom_series::s_series;
use l1class::characters::{build_group, kronecker_character, ramanujan_sum, ramanujan_sum_direct};
use l1class::classnum::{l1_direct, l1_via_theorem};
use l1class::zeta::hurwitz_zeta;
use l1class::EngineConfig;
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn characters_are_multiplicative(m in 1u64..120, idx in 0u64..1000, a in -500i64..500, b in -500i64..500) {
        let g = build_group(m).unwrap();
        let chi = g.character(idx % g.order()).unwrap();
        let lhs = chi.eval(a * b);
        let rhs = chi.eval(a) * chi.eval(b);
        prop_assert!((lhs - rhs).norm() < 1e-12);
        prop_assert_eq!(chi.eval(a).norm() > 0.5, gcd(a.unsigned_abs(), m) == 1 || m == 1);
    }

    #[test]
    fn ramanujan_formula_matches_definition(m in 1u64..200, k in -400i64..400) {
        let exact = ramanujan_sum(m, k).unwrap() as f64;
        prop_assert!((ramanujan_sum_direct(m, k).re - exact).abs() < 1e-9);
    }

    #[test]
    fn hurwitz_duplication(s in 2u32..6, a in 0.01f64..0.5) {
        let cfg = EngineConfig::default();
        let lhs = hurwitz_zeta(s, a, &cfg).unwrap().value + hurwitz_zeta(s, a + 0.5, &cfg).unwrap().value;
        let rhs = 2f64.powi(s as i32) * hurwitz_zeta(s, 2.0 * a, &cfg).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-11 * rhs.abs().max(1.0));
    }

    #[test]
    fn arcsine_square(theta in 0.001f64..3.0) {
        let v = s_series(2, 2.0 * (theta / 2.0).sin(), &EngineConfig::default()).unwrap().value;
        prop_assert!((2.0 * v - theta * theta).abs() < 1e-12);
    }

    #[test]
    fn kronecker_symbol_is_multiplicative(n in 1u64..5000, k in 1u64..5000) {
        for disc in [5i64, 8, 12, 13, 21, 40, 229] {
            prop_assert_eq!(kronecker_symbol(disc, n * k), kronecker_symbol(disc, n) * kronecker_symbol(disc, k));
        }
    }

    #[test]
    fn squarefree_odd_discriminants(n in 2u64..3000) {
        let f = factorize(n).unwrap();
        let disc = n as i64;
        if disc % 4 == 1 {
            prop_assert_eq!(is_fundamental_discriminant(disc), f.is_squarefree());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unit_has_norm_plus_minus_four(disc in 5i64..2000) {
        prop_assume!(is_fundamental_discriminant(disc));
        let u = fundamental_unit(disc).unwrap();
        let x = BigInt::from(u.x.clone());
        let y = BigInt::from(u.y.clone());
        let norm = &x * &x - BigInt::from(disc) * &y * &y;
        prop_assert_eq!(norm, BigInt::from(4 * u.norm_sign as i64));
    }

    #[test]
    fn routes_agree_for_quadratic_characters(disc in 5i64..300) {
        prop_assume!(is_fundamental_discriminant(disc));
        let chi = kronecker_character(disc).unwrap();
        let t = l1_via_theorem(&chi, &EngineConfig::default()).unwrap();
        let d = l1_direct(&chi).unwrap();
        prop_assert!((t - d).norm() <= 1e-8);
        prop_assert!(t.im.abs() <= 1e-8 && t.re > 0.0);
    }
}

#[test]
fn dirichlet_formula_gives_positive_integers() {
    for disc in fundamental_discriminants(5, 120) {
        let chi = kronecker_character(disc).unwrap();
        let l1 = l1_direct(&chi).unwrap().re;
        let h = (disc as f64).sqrt() * l1 / (2.0 * fundamental_unit(disc).unwrap().regulator);
        assert!(h > 0.5 && (h - h.round()).abs() < 1e-9, "D = {disc}: {h}");
    }
}
