//! The leveled semirings `(N̂ⁿ, Fₙ, Fₙ₊₁)` in logarithmic coordinates.
//!
//! A [`LeveledNat`] stores `k` for the element `Eⁿ(k)`. On coordinates
//! `Fₙ` is addition and `Fₙ₊₁` is multiplication, so nothing is ever
//! materialized unless asked for.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{exp_base, exp_iter, floor_log, log_base, require_base, Budget, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeveledNat {
    level: u32,
    coord: Natural,
    base: Natural,
}

impl LeveledNat {
    pub fn new(level: u32, coord: impl Into<Natural>, base: impl Into<Natural>) -> Result<Self> {
        let base = base.into();
        require_base(&base)?;
        Ok(LeveledNat {
            level,
            coord: coord.into(),
            base,
        })
    }

    /// `0̂ⁿ`, the `Fₙ` identity.
    pub fn zero(level: u32, base: &Natural) -> Result<Self> {
        Self::new(level, Natural::zero(), base.clone())
    }

    /// `1̂ⁿ`, the `Fₙ₊₁` identity.
    pub fn one(level: u32, base: &Natural) -> Result<Self> {
        Self::new(level, Natural::one(), base.clone())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coord(&self) -> &Natural {
        &self.coord
    }

    pub fn base(&self) -> &Natural {
        &self.base
    }

    pub(crate) fn with_coord(&self, coord: Natural) -> Self {
        LeveledNat {
            level: self.level,
            coord,
            base: self.base.clone(),
        }
    }

    /// `Eⁿ(coord)` as an exact natural.
    pub fn materialize(&self, budget: &Budget) -> Result<Natural> {
        exp_iter(&self.coord, &self.base, self.level, budget)
    }

    /// Same value one level down.
    pub fn lower(&self, budget: &Budget) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::level(0, -1));
        }
        Ok(LeveledNat {
            level: self.level - 1,
            coord: exp_base(&self.coord, &self.base, budget)?,
            base: self.base.clone(),
        })
    }

    /// Same value one level up; `NotInImage` unless the coordinate is an
    /// exact power of the base.
    pub fn raise(&self) -> Result<Self> {
        Ok(LeveledNat {
            level: self.level + 1,
            coord: log_base(&self.coord, &self.base)?,
            base: self.base.clone(),
        })
    }

    /// `E` on `N̂ⁿ`: `k̂ⁿ ↦ k̂ⁿ⁺¹`.
    pub fn exp(&self) -> Self {
        LeveledNat {
            level: self.level + 1,
            coord: self.coord.clone(),
            base: self.base.clone(),
        }
    }

    /// `L` on `N̂ⁿ`. At level 0 this is the exact logarithm of the value.
    pub fn log(&self) -> Result<Self> {
        if self.level == 0 {
            return Ok(self.with_coord(log_base(&self.coord, &self.base)?));
        }
        Ok(LeveledNat {
            level: self.level - 1,
            coord: self.coord.clone(),
            base: self.base.clone(),
        })
    }

    /// `Sₙ(Eⁿ(k)) = Eⁿ(k+1)`.
    pub fn successor(&self) -> Self {
        self.with_coord(&self.coord + 1u32)
    }

    /// `Sₙ⁻¹`, `None` at `0̂ⁿ`.
    pub fn predecessor(&self) -> Option<Self> {
        (!self.coord.is_zero()).then(|| self.with_coord(&self.coord - 1u32))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                left: self.base.to_string(),
                right: other.base.to_string(),
            });
        }
        if self.level != other.level {
            return Err(Error::level(self.level, other.level));
        }
        Ok(())
    }

    /// `Fₙ` on `N̂ⁿ`.
    pub fn f_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coord(&self.coord + &other.coord))
    }

    /// `Fₙ₊₁` on `N̂ⁿ`.
    pub fn f_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coord(&self.coord * &other.coord))
    }

    /// Total order on denoted values, across levels.
    ///
    /// Levels are aligned through exact floor logarithms of the shallower
    /// operand, so towers never need to be materialized.
    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                left: self.base.to_string(),
                right: other.base.to_string(),
            });
        }
        Ok(match self.level.cmp(&other.level) {
            Ordering::Equal => self.coord.cmp(&other.coord),
            Ordering::Greater => cmp_tower(
                &self.coord,
                self.level - other.level,
                &other.coord,
                &self.base,
            ),
            Ordering::Less => cmp_tower(
                &other.coord,
                other.level - self.level,
                &self.coord,
                &self.base,
            )
            .reverse(),
        })
    }
}

/// Compares `E^depth(x)` with `y`.
fn cmp_tower(x: &Natural, depth: u32, y: &Natural, w: &Natural) -> Ordering {
    if depth == 0 {
        return x.cmp(y);
    }
    let Some((log, exact)) = floor_log(y, w) else {
        // y = 0 and every exponential is at least 1.
        return Ordering::Greater;
    };
    match cmp_tower(x, depth - 1, &log, w) {
        Ordering::Equal if !exact => Ordering::Less,
        other => other,
    }
}

/// `F_m` applied to two elements of the same level, which must be `m` or
/// `m - 1`. At level `m` it is the addition of that level's semiring; at
/// level `m - 1` it is the multiplication.
pub fn f_op(m: u32, a: &LeveledNat, b: &LeveledNat) -> Result<LeveledNat> {
    a.check_same(b)?;
    if a.level == m {
        a.f_add(b)
    } else if a.level + 1 == m {
        a.f_mul(b)
    } else {
        Err(Error::level(a.level, m))
    }
}

impl fmt::Display for LeveledNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.coord, self.level)
    }
}
