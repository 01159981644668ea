//! Natural-number substrate: regular hyperoperations, the base-`w0`
//! exponential and its exact inverse, tetration and filtration depth.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

/// Bounds on result width and on the number of recursion unfoldings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_bits: u64,
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_bits: 1 << 20,
            max_steps: 1_000_000,
        }
    }
}

impl Budget {
    pub fn new(max_bits: u64, max_steps: u64) -> Self {
        Budget {
            max_bits,
            max_steps,
        }
    }

    pub fn with_bits(max_bits: u64) -> Self {
        Budget {
            max_bits,
            ..Budget::default()
        }
    }

    fn check_bits(&self, bits: u64, what: &str) -> Result<()> {
        if bits > self.max_bits {
            Err(Error::budget(format!(
                "{what} needs at least {bits} bits (limit {})",
                self.max_bits
            )))
        } else {
            Ok(())
        }
    }
}

pub(crate) fn require_base(w0: &Natural) -> Result<()> {
    if *w0 < Natural::from(2u32) {
        Err(Error::InvalidBase(format!("base {w0} must be at least 2")))
    } else {
        Ok(())
    }
}

/// `H_n(a, b)`.
///
/// Levels 0 to 3 use native successor, addition, multiplication and
/// square-and-multiply. Higher levels unfold `H_n(a,b) = H_{n-1}(a, H_n(a,b-1))`
/// iteratively, memoized on `(n, a, b)` for the duration of the call.
pub fn hyper(n: u32, a: &Natural, b: &Natural, budget: &Budget) -> Result<Natural> {
    let mut memo = HashMap::new();
    let mut steps = 0u64;
    hyper_memo(n, a, b, budget, &mut memo, &mut steps)
}

fn hyper_memo(
    n: u32,
    a: &Natural,
    b: &Natural,
    budget: &Budget,
    memo: &mut HashMap<(u32, Natural), Natural>,
    steps: &mut u64,
) -> Result<Natural> {
    match n {
        0 => Ok(b + 1u32),
        1 => {
            budget.check_bits(a.bits().max(b.bits()), "addition")?;
            Ok(a + b)
        }
        2 => {
            budget.check_bits((a.bits() + b.bits()).saturating_sub(1), "multiplication")?;
            Ok(a * b)
        }
        3 => power(a, b, budget),
        _ => {
            if let Some(hit) = memo.get(&(n, b.clone())) {
                return Ok(hit.clone());
            }
            let count = b
                .to_u64()
                .ok_or_else(|| Error::budget(format!("H_{n} with unbounded height {b}")))?;
            let mut acc = Natural::one();
            for i in 0..count {
                *steps += 1;
                if *steps > budget.max_steps {
                    return Err(Error::budget(format!(
                        "H_{n} exceeded {} unfoldings",
                        budget.max_steps
                    )));
                }
                let key = (n, Natural::from(i + 1));
                if let Some(hit) = memo.get(&key) {
                    acc = hit.clone();
                    continue;
                }
                acc = hyper_memo(n - 1, a, &acc, budget, memo, steps)?;
                memo.insert(key, acc.clone());
            }
            Ok(acc)
        }
    }
}

fn power(a: &Natural, b: &Natural, budget: &Budget) -> Result<Natural> {
    if b.is_zero() {
        return Ok(Natural::one());
    }
    if *a <= Natural::one() {
        return Ok(a.clone());
    }
    let exponent = b
        .to_u64()
        .ok_or_else(|| Error::budget(format!("exponent {b} too wide")))?;
    let min_bits = exponent.saturating_mul(a.bits() - 1).saturating_add(1);
    budget.check_bits(min_bits, "power")?;
    let exponent = u32::try_from(exponent).map_err(|_| Error::budget("exponent too wide"))?;
    Ok(a.pow(exponent))
}

/// Height-`h` power tower of `w`; `h = -1` gives 0.
pub fn tetration(w: &Natural, h: i64, budget: &Budget) -> Result<Natural> {
    require_base(w)?;
    match h {
        -1 => Ok(Natural::zero()),
        h if h < -1 => Err(Error::DomainError(format!(
            "tetration height {h} is below -1"
        ))),
        h => hyper(4, w, &Natural::from(h as u64), budget),
    }
}

/// `E(a) = w0^a`.
pub fn exp_base(a: &Natural, w0: &Natural, budget: &Budget) -> Result<Natural> {
    require_base(w0)?;
    power(w0, a, budget)
}

/// Applies `E` `times` times.
pub fn exp_iter(a: &Natural, w0: &Natural, times: u32, budget: &Budget) -> Result<Natural> {
    let mut out = a.clone();
    for _ in 0..times {
        out = exp_base(&out, w0, budget)?;
    }
    Ok(out)
}

/// Largest `k` with `w0^k <= a`, together with whether equality holds.
/// `None` for `a = 0`.
pub fn floor_log(a: &Natural, w0: &Natural) -> Option<(Natural, bool)> {
    if a.is_zero() || *w0 < Natural::from(2u32) {
        return None;
    }
    let bits = a.bits();
    // w0 = 2^s: read the answer off the bit length.
    if w0.count_ones() == 1 {
        let s = w0.bits() - 1;
        let k = (bits - 1) / s;
        let exact = (bits - 1).is_multiple_of(s) && a.trailing_zeros() == Some(bits - 1);
        return Some((Natural::from(k), exact));
    }
    // w0^k has between k*(wb-1)+1 and k*wb bits.
    let wb = w0.bits();
    let mut lo = (bits - 1) / wb;
    let mut hi = (bits - 1) / (wb - 1);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if w0.pow(mid as u32) <= *a {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let exact = w0.pow(lo as u32) == *a;
    Some((Natural::from(lo), exact))
}

/// Exact logarithm `L(a)`; fails with `NotInImage` unless `a` is a power of `w0`.
pub fn log_base(a: &Natural, w0: &Natural) -> Result<Natural> {
    require_base(w0)?;
    match floor_log(a, w0) {
        Some((k, true)) => Ok(k),
        _ => Err(Error::NotInImage(format!("{a} (base {w0})"))),
    }
}

/// Largest `n` with `a` in `E^n(N)`.
pub fn filtration_level(a: &Natural, w0: &Natural) -> u32 {
    let mut level = 0;
    let mut cur = a.clone();
    while let Ok(next) = log_base(&cur, w0) {
        level += 1;
        cur = next;
    }
    level
}

/// Conjugation `f(op(f⁻¹(a), f⁻¹(b)))`.
pub fn adjoint_op<F, G, O>(f: F, f_inv: G, op: O, a: &Natural, b: &Natural) -> Result<Natural>
where
    F: Fn(&Natural) -> Result<Natural>,
    G: Fn(&Natural) -> Result<Natural>,
    O: Fn(&Natural, &Natural) -> Natural,
{
    let x = f_inv(a)?;
    let y = f_inv(b)?;
    f(&op(&x, &y))
}

/// A Peano system: an initial element with an injective successor.
pub trait PeanoSystem {
    type Elem: Clone + Eq + Hash;

    fn zero(&self) -> Result<Self::Elem>;
    fn succ(&self, x: &Self::Elem) -> Result<Self::Elem>;
    /// `None` at the initial element.
    fn pred(&self, x: &Self::Elem) -> Result<Option<Self::Elem>>;
}

/// `(N, 0, S)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaturalPeano;

impl PeanoSystem for NaturalPeano {
    type Elem = Natural;

    fn zero(&self) -> Result<Natural> {
        Ok(Natural::zero())
    }

    fn succ(&self, x: &Natural) -> Result<Natural> {
        Ok(x + 1u32)
    }

    fn pred(&self, x: &Natural) -> Result<Option<Natural>> {
        Ok((!x.is_zero()).then(|| x - 1u32))
    }
}

/// Regular hyperoperation generated by the successor of `sys`, evaluated
/// by unfolding the five-case definition literally (memoized, explicit
/// stack). Used as an oracle for every fast path.
pub fn literal_hyper<P: PeanoSystem>(
    sys: &P,
    m: u32,
    a: &P::Elem,
    b: &P::Elem,
    budget: &Budget,
) -> Result<P::Elem> {
    let mut memo: HashMap<(u32, P::Elem), P::Elem> = HashMap::new();
    let mut stack = vec![(m, b.clone())];
    let mut steps = 0u64;
    while let Some((level, arg)) = stack.last().cloned() {
        steps += 1;
        if steps > budget.max_steps {
            return Err(Error::budget(format!(
                "literal recursion exceeded {} steps",
                budget.max_steps
            )));
        }
        if memo.contains_key(&(level, arg.clone())) {
            stack.pop();
            continue;
        }
        let value = if level == 0 {
            Some(sys.succ(&arg)?)
        } else {
            match sys.pred(&arg)? {
                None => Some(match level {
                    1 => a.clone(),
                    2 => sys.zero()?,
                    _ => sys.succ(&sys.zero()?)?,
                }),
                Some(prev) => match memo.get(&(level, prev.clone())) {
                    None => {
                        stack.push((level, prev));
                        None
                    }
                    Some(inner) => match memo.get(&(level - 1, inner.clone())) {
                        Some(v) => Some(v.clone()),
                        None => {
                            stack.push((level - 1, inner.clone()));
                            None
                        }
                    },
                },
            }
        };
        if let Some(v) = value {
            memo.insert((level, arg), v);
            stack.pop();
        }
    }
    Ok(memo
        .remove(&(m, b.clone()))
        .expect("root frame is always resolved"))
}
