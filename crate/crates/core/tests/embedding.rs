use hyperops::embedding::{
    bullet, embed_int, embed_nat, embed_rat, exp_omega, ln_omega, power_tower, RealLeveled,
    TowerOutcome,
};
use hyperops::{LeveledInt, LeveledNat, LeveledRat};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// `ω↑↑` applied `level` times to `x`, by repeated `powf`.
fn tower(x: f64, level: u32, omega: f64) -> f64 {
    (0..level).fold(x, |acc, _| omega.powf(acc))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn embedding_is_a_homomorphism(level in 0u32..3, a in 0u64..=20, b in 0u64..=20) {
        let x = LeveledNat::new(level, a, 3u32).unwrap();
        let y = LeveledNat::new(level, b, 3u32).unwrap();
        let n = level as i32;
        for (op, exact) in [(n, x.f_add(&y).unwrap()), (n + 1, x.f_mul(&y).unwrap())] {
            let (Ok(ex), Ok(ey), Ok(ez)) = (embed_nat(&x), embed_nat(&y), embed_nat(&exact)) else {
                continue;
            };
            let approx = bullet(op, ex, ey, 3.0).unwrap();
            prop_assert!(rel_err(ez, approx) <= 1e-9, "{} vs {}", ez, approx);
        }
    }

    #[test]
    fn embedding_matches_tower(level in 0u32..3, a in 0u64..=4) {
        let x = LeveledNat::new(level, a, 2u32).unwrap();
        prop_assert_eq!(embed_nat(&x).unwrap(), tower(a as f64, level, 2.0));
    }

    #[test]
    fn exp_commutes_with_embedding(a in -30i64..=30, b in 1i64..=30) {
        let q = LeveledRat::new(0, BigInt::from(a), BigInt::from(b), 4u32).unwrap();
        let lifted = embed_rat(&q.q_exp()).unwrap();
        prop_assert!(rel_err(lifted, exp_omega(embed_rat(&q).unwrap(), 4.0).unwrap()) <= 1e-12);
    }

    #[test]
    fn ln_inverts_exp(x in -50.0f64..50.0, omega in 1.01f64..100.0) {
        let back = ln_omega(exp_omega(x, omega).unwrap(), omega).unwrap();
        prop_assert!((back - x).abs() <= 1e-9 * x.abs().max(1.0));
    }

    #[test]
    fn tropical_limit(a in -1000.0f64..1000.0, b in -1000.0f64..1000.0) {
        let omega = 100f64.exp();
        let soft = bullet(-1, a, b, omega).unwrap();
        prop_assert!((soft - a.max(b)).abs() <= 0.01);
        prop_assert!(soft >= a.max(b));
    }
}

#[test]
fn class_examples() {
    for (level, c) in [(0, 16), (1, 4), (2, 2)] {
        assert_eq!(embed_int(&LeveledInt::new(level, c, 2u32).unwrap()).unwrap(), 16.0);
    }
    let two = |level| LeveledRat::new(level, BigInt::from(2), BigInt::from(1), 4u32).unwrap();
    let images = [
        embed_rat(&two(0)).unwrap(),
        embed_rat(&two(1).q_inv().unwrap()).unwrap(),
        embed_rat(&two(2).q_neg().q_inv().unwrap()).unwrap(),
    ];
    for image in images {
        assert!((image - 2.0).abs() <= 1e-12, "{images:?}");
    }
    assert_eq!(embed_rat(&two(1)).unwrap(), 16.0);
}

#[test]
fn real_leveled_operations() {
    let a = RealLeveled::new(8.0, 1, 2.0).unwrap();
    let b = RealLeveled::new(4.0, 1, 2.0).unwrap();
    assert_eq!(a.add(&b).unwrap().value(), 32.0);
    assert_eq!(a.mul(&b).unwrap().value(), 2f64.powf(6.0));
}

#[test]
fn power_tower_cases() {
    match power_tower(2f64.sqrt(), 1e-12, 100_000).unwrap() {
        TowerOutcome::Converged(h) => assert!((h - 2.0).abs() <= 1e-9),
        other => panic!("{other:?}"),
    }
    let lo = (-std::f64::consts::E).exp();
    let hi = (1.0 / std::f64::consts::E).exp();
    for x in [0.07, 0.5, 1.0, 1.2, 1.44] {
        assert!(x > lo && x < hi);
        match power_tower(x, 1e-12, 100_000).unwrap() {
            TowerOutcome::Converged(h) => assert!((x.powf(h) - h).abs() <= 1e-9, "{x}"),
            other => panic!("{x}: {other:?}"),
        }
    }
    for x in [1.5, 0.06, 3.0] {
        assert!(matches!(
            power_tower(x, 1e-12, 100_000).unwrap(),
            TowerOutcome::Diverged { .. }
        ));
    }
}
