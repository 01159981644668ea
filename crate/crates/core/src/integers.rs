//! Inverse completion of `(N̂ⁿ, Fₙ)` into the integral domain
//! `(Z_{n,□}, ⊕, ⊗)`.
//!
//! A class `[[(x, y)]]` is stored as the signed coordinate
//! `coord(x) - coord(y)`: the congruence `Fₙ(x,v) = Fₙ(y,u)` is exactly
//! equality of those differences.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{require_base, Natural};
use crate::leveled::LeveledNat;

/// A pair of same-level, same-base elements of `N̂ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NatPair {
    first: LeveledNat,
    second: LeveledNat,
}

impl NatPair {
    pub fn new(first: LeveledNat, second: LeveledNat) -> Result<Self> {
        if first.base() != second.base() {
            return Err(Error::BaseMismatch {
                left: first.base().to_string(),
                right: second.base().to_string(),
            });
        }
        if first.level() != second.level() {
            return Err(Error::level(first.level(), second.level()));
        }
        Ok(NatPair { first, second })
    }

    pub fn first(&self) -> &LeveledNat {
        &self.first
    }

    pub fn second(&self) -> &LeveledNat {
        &self.second
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeveledInt {
    level: u32,
    coord: BigInt,
    base: Natural,
}

impl LeveledInt {
    pub fn new(level: u32, coord: impl Into<BigInt>, base: impl Into<Natural>) -> Result<Self> {
        let base = base.into();
        require_base(&base)?;
        Ok(LeveledInt {
            level,
            coord: coord.into(),
            base,
        })
    }

    /// `k_{n,□} = [[(k̂ⁿ, 0̂ⁿ)]]`.
    pub fn from_nat(a: &LeveledNat) -> Self {
        LeveledInt {
            level: a.level(),
            coord: BigInt::from(a.coord().clone()),
            base: a.base().clone(),
        }
    }

    /// Canonical representative of the class of `p`.
    pub fn from_pair(p: &NatPair) -> Self {
        LeveledInt {
            level: p.first.level(),
            coord: BigInt::from(p.first.coord().clone()) - BigInt::from(p.second.coord().clone()),
            base: p.first.base().clone(),
        }
    }

    /// The representative pair with one side `0̂ⁿ`.
    pub fn to_pair(&self) -> NatPair {
        let magnitude = self.coord.magnitude().clone();
        let big = LeveledNat::new(self.level, magnitude, self.base.clone()).expect("valid base");
        let zero = LeveledNat::zero(self.level, &self.base).expect("valid base");
        if self.coord.sign() == Sign::Minus {
            NatPair {
                first: zero,
                second: big,
            }
        } else {
            NatPair {
                first: big,
                second: zero,
            }
        }
    }

    pub fn zero(level: u32, base: &Natural) -> Result<Self> {
        Self::new(level, 0, base.clone())
    }

    pub fn one(level: u32, base: &Natural) -> Result<Self> {
        Self::new(level, 1, base.clone())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coord(&self) -> &BigInt {
        &self.coord
    }

    pub fn base(&self) -> &Natural {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.coord.is_zero()
    }

    fn with_coord(&self, coord: BigInt) -> Self {
        LeveledInt {
            level: self.level,
            coord,
            base: self.base.clone(),
        }
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

    /// `⊕_{n,□}`.
    pub fn z_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coord(&self.coord + &other.coord))
    }

    /// `⊗_{n,□}`.
    pub fn z_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_coord(&self.coord * &other.coord))
    }

    /// `T_{n,□}`.
    pub fn z_neg(&self) -> Self {
        self.with_coord(-&self.coord)
    }

    pub fn z_compare(&self, other: &Self) -> Result<Ordering> {
        self.check_same(other)?;
        Ok(self.coord.cmp(&other.coord))
    }

    /// `E_□`: componentwise exponential of a representative, one level up.
    pub fn z_exp(&self) -> Self {
        LeveledInt {
            level: self.level + 1,
            coord: self.coord.clone(),
            base: self.base.clone(),
        }
    }

    /// `L_□`.
    pub fn z_log(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::level(0, -1));
        }
        Ok(LeveledInt {
            level: self.level - 1,
            coord: self.coord.clone(),
            base: self.base.clone(),
        })
    }

    pub fn z_abs(&self) -> Self {
        self.with_coord(self.coord.abs())
    }

    pub fn is_one(&self) -> bool {
        self.coord.is_one()
    }
}

impl fmt::Display for LeveledInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coord.sign() == Sign::Minus {
            write!(f, "{}@{}", self.coord, self.level)
        } else {
            write!(f, "+{}@{}", self.coord, self.level)
        }
    }
}
