//! Literal pair and fraction constructions, used as oracles for the
//! canonical-coordinate integers and rationals.
#![allow(dead_code)]

use std::cmp::Ordering;

use hyperops::{LeveledInt, LeveledNat, LeveledRat, NatPair};

pub type Pair = (LeveledNat, LeveledNat);
pub type Frac = (LeveledInt, LeveledInt);

fn add(a: &LeveledNat, b: &LeveledNat) -> LeveledNat {
    a.f_add(b).unwrap()
}

fn mul(a: &LeveledNat, b: &LeveledNat) -> LeveledNat {
    a.f_mul(b).unwrap()
}

pub fn class(p: &Pair) -> LeveledInt {
    LeveledInt::from_pair(&NatPair::new(p.0.clone(), p.1.clone()).unwrap())
}

/// `(a,b) ~ (c,d)` iff `a + d = b + c`.
pub fn pair_equiv(p: &Pair, q: &Pair) -> bool {
    add(&p.0, &q.1) == add(&p.1, &q.0)
}

pub fn pair_add(p: &Pair, q: &Pair) -> Pair {
    (add(&p.0, &q.0), add(&p.1, &q.1))
}

pub fn pair_mul(p: &Pair, q: &Pair) -> Pair {
    (
        add(&mul(&p.0, &q.0), &mul(&p.1, &q.1)),
        add(&mul(&p.0, &q.1), &mul(&p.1, &q.0)),
    )
}

pub fn pair_cmp(p: &Pair, q: &Pair) -> Ordering {
    add(&p.0, &q.1).compare(&add(&p.1, &q.0)).unwrap()
}

pub fn pairs(level: u32, base: u32, max: u32) -> Vec<Pair> {
    let nat = |k: u32| LeveledNat::new(level, k, base).unwrap();
    (0..=max)
        .flat_map(|x| (0..=max).map(move |y| (nat(x), nat(y))))
        .collect()
}

/// Mismatches between canonical integer operations and the pair
/// construction over every pair of pairs; returns (checks, mismatches).
pub fn integer_oracle(level: u32, base: u32, max: u32) -> (u64, Vec<String>) {
    let all = pairs(level, base, max);
    let mut checks = 0;
    let mut bad = Vec::new();
    for p in &all {
        let cp = class(p);
        checks += 1;
        if cp.z_neg() != class(&(p.1.clone(), p.0.clone())) {
            bad.push(format!("neg {p:?}"));
        }
        for q in &all {
            let cq = class(q);
            checks += 4;
            if (cp == cq) != pair_equiv(p, q) {
                bad.push(format!("equivalence {p:?} {q:?}"));
            }
            if cp.z_add(&cq).unwrap() != class(&pair_add(p, q)) {
                bad.push(format!("add {p:?} {q:?}"));
            }
            if cp.z_mul(&cq).unwrap() != class(&pair_mul(p, q)) {
                bad.push(format!("mul {p:?} {q:?}"));
            }
            if cp.z_compare(&cq).unwrap() != pair_cmp(p, q) {
                bad.push(format!("order {p:?} {q:?}"));
            }
        }
    }
    (checks, bad)
}

fn zadd(a: &LeveledInt, b: &LeveledInt) -> LeveledInt {
    a.z_add(b).unwrap()
}

fn zmul(a: &LeveledInt, b: &LeveledInt) -> LeveledInt {
    a.z_mul(b).unwrap()
}

pub fn fraction(f: &Frac) -> LeveledRat {
    LeveledRat::q_from(&f.0, &f.1).unwrap()
}

/// `(a,b) ~ (c,d)` iff `a·d = b·c`.
pub fn frac_equiv(f: &Frac, g: &Frac) -> bool {
    zmul(&f.0, &g.1) == zmul(&f.1, &g.0)
}

pub fn frac_add(f: &Frac, g: &Frac) -> Frac {
    (
        zadd(&zmul(&f.0, &g.1), &zmul(&g.0, &f.1)),
        zmul(&f.1, &g.1),
    )
}

pub fn frac_mul(f: &Frac, g: &Frac) -> Frac {
    (zmul(&f.0, &g.0), zmul(&f.1, &g.1))
}

/// `a/b < c/d` iff `(a·d − c·b)·(b·d) < 0`.
pub fn frac_cmp(f: &Frac, g: &Frac) -> Ordering {
    let diff = zadd(&zmul(&f.0, &g.1), &zmul(&g.0, &f.1).z_neg());
    let sign = zmul(&diff, &zmul(&f.1, &g.1));
    let zero = LeveledInt::zero(sign.level(), sign.base()).unwrap();
    sign.z_compare(&zero).unwrap()
}

pub fn fracs(level: u32, base: u32, max: i64) -> Vec<Frac> {
    let int = |k: i64| LeveledInt::new(level, k, base).unwrap();
    (-max..=max)
        .flat_map(|x| (-max..=max).filter(|y| *y != 0).map(move |y| (int(x), int(y))))
        .collect()
}

/// Same as [`integer_oracle`] for the fraction construction.
pub fn rational_oracle(level: u32, base: u32, max: i64) -> (u64, Vec<String>) {
    let all = fracs(level, base, max);
    let mut checks = 0;
    let mut bad = Vec::new();
    for f in &all {
        let qf = fraction(f);
        checks += 2;
        if qf.q_neg() != fraction(&(f.0.z_neg(), f.1.clone())) {
            bad.push(format!("neg {f:?}"));
        }
        match qf.q_inv() {
            Ok(inv) if !f.0.is_zero() => {
                if inv != fraction(&(f.1.clone(), f.0.clone())) {
                    bad.push(format!("inv {f:?}"));
                }
            }
            Err(_) if f.0.is_zero() => {}
            _ => bad.push(format!("inv domain {f:?}")),
        }
        for g in &all {
            let qg = fraction(g);
            checks += 4;
            if (qf == qg) != frac_equiv(f, g) {
                bad.push(format!("equivalence {f:?} {g:?}"));
            }
            if qf.q_add(&qg).unwrap() != fraction(&frac_add(f, g)) {
                bad.push(format!("add {f:?} {g:?}"));
            }
            if qf.q_mul(&qg).unwrap() != fraction(&frac_mul(f, g)) {
                bad.push(format!("mul {f:?} {g:?}"));
            }
            if qf.q_compare(&qg).unwrap() != frac_cmp(f, g) {
                bad.push(format!("order {f:?} {g:?}"));
            }
        }
    }
    (checks, bad)
}
