use std::cmp::Ordering;

use hyperops::kernel::Budget;
use hyperops::leveled::f_op;
use hyperops::{LeveledNat, Natural};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ln(level: u32, coord: u64, base: u64) -> LeveledNat {
    LeveledNat::new(level, coord, base).unwrap()
}

/// Exact logarithm by repeated division.
fn exact_log(mut x: Natural, w: &Natural) -> Option<Natural> {
    if x.is_zero() {
        return None;
    }
    let mut k = Natural::zero();
    while x > Natural::one() {
        if (&x % w) != Natural::zero() {
            return None;
        }
        x /= w;
        k += 1u32;
    }
    Some(k)
}

/// `F_m` on plain values: `+`, `×`, then conjugation by `w^·`.
fn f_values(m: u32, x: &Natural, y: &Natural, w: &Natural) -> Option<Natural> {
    match m {
        0 => Some(x + y),
        1 => Some(x * y),
        _ => {
            let inner = f_values(m - 1, &exact_log(x.clone(), w)?, &exact_log(y.clone(), w)?, w)?;
            Some(w.pow(u32::try_from(inner).ok()?))
        }
    }
}

#[test]
fn f_ops_agree_with_value_recursion() {
    let budget = Budget::default();
    let mut checked = 0;
    for w in [2u64, 3] {
        let wn = Natural::from(w);
        for level in 0..=2u32 {
            for m in [level, level + 1] {
                for a in 0..=5u64 {
                    for b in 0..=5u64 {
                        let (x, y) = (ln(level, a, w), ln(level, b, w));
                        let Ok(fast) = f_op(m, &x, &y).unwrap().materialize(&budget) else {
                            continue;
                        };
                        let vx = x.materialize(&budget).unwrap();
                        let vy = y.materialize(&budget).unwrap();
                        let slow = f_values(m, &vx, &vy, &wn).expect("in image");
                        assert_eq!(fast, slow, "F_{m}({a}@{level},{b}@{level}) w={w}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 400, "{checked}");
}

#[test]
fn f_op_rejects_other_levels() {
    assert!(f_op(3, &ln(1, 2, 2), &ln(1, 2, 2)).is_err());
    assert!(f_op(1, &ln(1, 2, 2), &ln(0, 2, 2)).is_err());
    assert!(ln(1, 2, 2).f_add(&ln(1, 2, 3)).is_err());
}

#[test]
fn compare_matches_materialized_order() {
    for w in [2u64, 3] {
        let mut all = Vec::new();
        for level in 0..=3u32 {
            for c in 0..=6u64 {
                let a = ln(level, c, w);
                if let Ok(v) = a.materialize(&Budget::with_bits(4096)) {
                    all.push((a, v));
                }
            }
        }
        for (a, va) in &all {
            for (b, vb) in &all {
                assert_eq!(a.compare(b).unwrap(), va.cmp(vb), "{a} vs {b}");
            }
        }
    }
}

#[test]
fn lower_raise_round_trip() {
    let budget = Budget::default();
    for level in 1..=3u32 {
        for c in 0..=4u64 {
            let a = ln(level, c, 2);
            let down = a.lower(&budget).unwrap();
            assert_eq!(down.raise().unwrap(), a);
            assert_eq!(a.exp().log().unwrap(), a);
            assert_eq!(
                down.materialize(&budget).unwrap(),
                a.materialize(&budget).unwrap()
            );
        }
    }
    assert!(ln(0, 3, 2).raise().is_err());
    assert_eq!(ln(0, 3, 2).successor().predecessor(), Some(ln(0, 3, 2)));
    assert_eq!(ln(2, 0, 2).predecessor(), None);
}

fn leveled(level: u32) -> impl Strategy<Value = (LeveledNat, LeveledNat, LeveledNat)> {
    (prop::sample::select(vec![2u64, 3, 10]), any::<u64>(), any::<u64>(), any::<u64>())
        .prop_map(move |(w, a, b, c)| (ln(level, a, w), ln(level, b, w), ln(level, c, w)))
}

fn semiring_laws(a: &LeveledNat, b: &LeveledNat, c: &LeveledNat) -> Result<(), TestCaseError> {
    let zero = LeveledNat::zero(a.level(), a.base()).unwrap();
    let one = LeveledNat::one(a.level(), a.base()).unwrap();
    let add = |x: &LeveledNat, y: &LeveledNat| x.f_add(y).unwrap();
    let mul = |x: &LeveledNat, y: &LeveledNat| x.f_mul(y).unwrap();
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(mul(a, b), mul(b, a));
    prop_assert_eq!(add(&add(a, b), c), add(a, &add(b, c)));
    prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
    prop_assert_eq!(mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)));
    prop_assert_eq!(add(a, &zero), a.clone());
    prop_assert_eq!(mul(a, &one), a.clone());
    prop_assert_eq!(mul(a, &zero), zero.clone());
    // order is compatible with both operations
    if a.compare(b).unwrap() == Ordering::Less {
        prop_assert_ne!(add(a, c).compare(&add(b, c)).unwrap(), Ordering::Greater);
        prop_assert_ne!(mul(a, c).compare(&mul(b, c)).unwrap(), Ordering::Greater);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn semiring_level_0((a, b, c) in leveled(0)) { semiring_laws(&a, &b, &c)?; }

    #[test]
    fn semiring_level_1((a, b, c) in leveled(1)) { semiring_laws(&a, &b, &c)?; }

    #[test]
    fn semiring_level_2((a, b, c) in leveled(2)) { semiring_laws(&a, &b, &c)?; }

    #[test]
    fn semiring_level_3((a, b, c) in leveled(3)) { semiring_laws(&a, &b, &c)?; }

    #[test]
    fn exp_is_a_semiring_isomorphism(level in 0u32..4, a in any::<u32>(), b in any::<u32>()) {
        let (x, y) = (ln(level, a as u64, 2), ln(level, b as u64, 2));
        prop_assert_eq!(x.f_add(&y).unwrap().exp(), x.exp().f_add(&y.exp()).unwrap());
        prop_assert_eq!(x.f_mul(&y).unwrap().exp(), x.exp().f_mul(&y.exp()).unwrap());
    }

    #[test]
    fn compare_across_levels(a in 0u64..5, b in 0u64..200_000) {
        let budget = Budget::default();
        let hi = ln(2, a, 2);
        let lo = ln(0, b, 2);
        let expected = hi.materialize(&budget).unwrap().cmp(&Natural::from(b));
        prop_assert_eq!(hi.compare(&lo).unwrap(), expected);
        prop_assert_eq!(lo.compare(&hi).unwrap(), expected.reverse());
    }
}
