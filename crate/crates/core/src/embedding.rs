//! Double-precision images of the exact structures under `exp_ω`.
//!
//! This is an approximate cross-check only. Every exact value has a
//! float image `exp_ωⁿ(coordinate)`; the operations `•ₙ` transport `+`
//! and `×` through `n` applications of `exp_ω`, and `•₋₁` is the log
//! semiring's addition, which tends to `max` as `ω` grows.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fields::LeveledRat;
use crate::integers::LeveledInt;
use crate::kernel::Natural;
use crate::leveled::LeveledNat;

/// A real number tagged with the level of `Rₙ = exp_ωⁿ(R₀)` it lives in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealLeveled {
    value: f64,
    level: i32,
    omega: f64,
}

impl RealLeveled {
    pub fn new(value: f64, level: i32, omega: f64) -> Result<Self> {
        check_omega(omega)?;
        if !value.is_finite() {
            return Err(Error::Overflow(format!("{value}")));
        }
        if level >= 1 && value <= 0.0 {
            return Err(Error::DomainError(format!(
                "{value} is not in the image of exp_ω at level {level}"
            )));
        }
        Ok(RealLeveled {
            value,
            level,
            omega,
        })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `•ₙ` at this element's level: the addition of `(Rₙ, •ₙ, •ₙ₊₁)`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, self.level)
    }

    /// `•ₙ₊₁`: the multiplication of `(Rₙ, •ₙ, •ₙ₊₁)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.combine(other, self.level + 1)
    }

    fn combine(&self, other: &Self, op: i32) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::level(self.level, other.level));
        }
        if self.omega != other.omega {
            return Err(Error::BaseMismatch {
                left: self.omega.to_string(),
                right: other.omega.to_string(),
            });
        }
        Self::new(
            bullet(op, self.value, other.value, self.omega)?,
            self.level,
            self.omega,
        )
    }
}

fn check_omega(omega: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0 && omega != 1.0) {
        return Err(Error::DomainError(format!("ω = {omega} must be positive and ≠ 1")));
    }
    Ok(())
}

fn finite(x: f64, what: &str) -> Result<f64> {
    if x.is_nan() {
        Err(Error::DomainError(format!("{what} is undefined")))
    } else if x.is_infinite() {
        Err(Error::Overflow(what.to_string()))
    } else {
        Ok(x)
    }
}

/// `ω^x`.
pub fn exp_omega(x: f64, omega: f64) -> Result<f64> {
    check_omega(omega)?;
    finite(omega.powf(x), "exp_ω")
}

pub fn ln_omega(x: f64, omega: f64) -> Result<f64> {
    check_omega(omega)?;
    if x <= 0.0 || x.is_nan() {
        return Err(Error::DomainError(format!("ln_ω({x})")));
    }
    finite(x.ln() / omega.ln(), "ln_ω")
}

/// `a •ₙ b` for `n ≥ -1`.
pub fn bullet(n: i32, a: f64, b: f64, omega: f64) -> Result<f64> {
    check_omega(omega)?;
    match n {
        // log-sum-exp in base ω, shifted by the larger operand
        -1 => {
            let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
            let tail = ln_omega(1.0 + exp_omega(lo - hi, omega)?, omega)?;
            finite(hi + tail, "•₋₁")
        }
        0 => finite(a + b, "•₀"),
        1 => finite(a * b, "•₁"),
        n if n >= 2 => {
            let inner = bullet(n - 1, ln_omega(a, omega)?, ln_omega(b, omega)?, omega)?;
            exp_omega(inner, omega)
        }
        n => Err(Error::DomainError(format!("•_{n} is not defined"))),
    }
}

fn omega_of(base: &Natural) -> Result<f64> {
    base.to_f64()
        .filter(|w| w.is_finite())
        .ok_or_else(|| Error::Overflow(format!("base {base}")))
}

fn tower(x: f64, level: u32, omega: f64) -> Result<f64> {
    (0..level).try_fold(x, |acc, _| exp_omega(acc, omega))
}

/// `ψ` on `N̂ⁿ`.
pub fn embed_nat(a: &LeveledNat) -> Result<f64> {
    let x = a
        .coord()
        .to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Overflow(format!("coordinate {}", a.coord())))?;
    tower(x, a.level(), omega_of(a.base())?)
}

/// `ψ_□`.
pub fn embed_int(a: &LeveledInt) -> Result<f64> {
    let x = a
        .coord()
        .to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Overflow(format!("coordinate {}", a.coord())))?;
    tower(x, a.level(), omega_of(a.base())?)
}

/// `ψ_⊠`.
pub fn embed_rat(a: &LeveledRat) -> Result<f64> {
    let x = a
        .value()
        .to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Overflow(format!("fraction {}", a.value())))?;
    tower(x, a.level(), omega_of(a.base())?)
}

/// Result of iterating `t ↦ x^t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TowerOutcome {
    Converged(f64),
    Diverged { last: f64, iterations: u64 },
}

const TOWER_CAP: f64 = 1e100;

/// Infinite power tower `x^x^x^…` by fixed-point iteration from `t = x`.
pub fn power_tower(x: f64, tol: f64, max_iter: u64) -> Result<TowerOutcome> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::DomainError(format!("power tower of {x}")));
    }
    let mut t = x;
    for i in 1..=max_iter {
        let next = x.powf(t);
        if !next.is_finite() || next > TOWER_CAP {
            return Ok(TowerOutcome::Diverged {
                last: next,
                iterations: i,
            });
        }
        if (next - t).abs() < tol {
            return Ok(TowerOutcome::Converged(next));
        }
        t = next;
    }
    Ok(TowerOutcome::Diverged {
        last: t,
        iterations: max_iter,
    })
}
