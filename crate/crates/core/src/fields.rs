//! Fields of quotients `(Q_{n,⊠}, ⊕, ⊗)` over `Z_{n,□}`, with the two
//! involutions, the order, the absolute value and the induced metric.
//!
//! Classes are stored as reduced fractions with positive denominator.
//! `T_{n,⊠}` on its own level is [`LeveledRat::q_neg`]; acting one level
//! below, as `T_{n+1,⊠}` on `Q_{n,⊠}`, it is [`LeveledRat::q_inv`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::integers::LeveledInt;
use crate::kernel::{require_base, Natural};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeveledRat {
    level: u32,
    value: BigRational,
    base: Natural,
}

impl LeveledRat {
    pub fn new(
        level: u32,
        num: impl Into<BigInt>,
        den: impl Into<BigInt>,
        base: impl Into<Natural>,
    ) -> Result<Self> {
        let base = base.into();
        require_base(&base)?;
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(LeveledRat {
            level,
            value: BigRational::new(num.into(), den),
            base,
        })
    }

    /// `[[(zn, zd)]]_{n,⊠}`.
    pub fn q_from(zn: &LeveledInt, zd: &LeveledInt) -> Result<Self> {
        if zn.base() != zd.base() {
            return Err(Error::BaseMismatch {
                left: zn.base().to_string(),
                right: zd.base().to_string(),
            });
        }
        if zn.level() != zd.level() {
            return Err(Error::level(zn.level(), zd.level()));
        }
        Self::new(zn.level(), zn.coord().clone(), zd.coord().clone(), zn.base().clone())
    }

    /// `k_{n,⊠}`.
    pub fn from_int(z: &LeveledInt) -> Self {
        LeveledRat {
            level: z.level(),
            value: BigRational::from_integer(z.coord().clone()),
            base: z.base().clone(),
        }
    }

    pub fn zero(level: u32, base: &Natural) -> Result<Self> {
        Self::new(level, 0, 1, base.clone())
    }

    pub fn one(level: u32, base: &Natural) -> Result<Self> {
        Self::new(level, 1, 1, base.clone())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn base(&self) -> &Natural {
        &self.base
    }

    pub fn num(&self) -> &BigInt {
        self.value.numer()
    }

    /// Always positive.
    pub fn den(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn with_value(&self, value: BigRational) -> Self {
        LeveledRat {
            level: self.level,
            value,
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

    pub fn q_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_value(&self.value + &other.value))
    }

    pub fn q_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_value(&self.value * &other.value))
    }

    /// Additive inverse, `T_{n,⊠}` at level `n`.
    pub fn q_neg(&self) -> Self {
        self.with_value(-&self.value)
    }

    /// Multiplicative inverse, `T_{n+1,⊠}` on `Q_{n,⊠}*`.
    pub fn q_inv(&self) -> Result<Self> {
        if self.value.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with_value(self.value.recip()))
    }

    pub fn q_compare(&self, other: &Self) -> Result<Ordering> {
        self.check_same(other)?;
        // Denominators are positive, so cross-multiplication preserves order.
        Ok((self.num() * other.den()).cmp(&(other.num() * self.den())))
    }

    pub fn q_abs(&self) -> Self {
        if self.value.is_negative() {
            self.q_neg()
        } else {
            self.clone()
        }
    }

    /// `|a ⊕ T b|`.
    pub fn q_dist(&self, other: &Self) -> Result<Self> {
        Ok(self.q_add(&other.q_neg())?.q_abs())
    }

    /// `E_⊠`.
    pub fn q_exp(&self) -> Self {
        LeveledRat {
            level: self.level + 1,
            value: self.value.clone(),
            base: self.base.clone(),
        }
    }

    /// `L_⊠`.
    pub fn q_log(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::level(0, -1));
        }
        Ok(LeveledRat {
            level: self.level - 1,
            value: self.value.clone(),
            base: self.base.clone(),
        })
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }
}

impl fmt::Display for LeveledRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}@{}", self.num(), self.den(), self.level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(level: u32, p: i64, d: i64) -> LeveledRat {
        LeveledRat::new(level, p, d, 2u32).unwrap()
    }

    fn z(level: u32, c: i64) -> LeveledInt {
        LeveledInt::new(level, c, 2u32).unwrap()
    }

    #[test]
    fn construction() {
        let r = LeveledRat::q_from(&z(0, 4), &z(0, -6)).unwrap();
        assert_eq!((r.num().clone(), r.den().clone()), (BigInt::from(-2), BigInt::from(3)));
        assert_eq!(LeveledRat::q_from(&z(2, 5), &z(2, 1)).unwrap(), LeveledRat::from_int(&z(2, 5)));
        assert_eq!(LeveledRat::q_from(&z(1, 0), &z(1, -9)).unwrap(), q(1, 0, 1));
        assert_eq!(
            LeveledRat::q_from(&z(1, 3), &z(1, 0)),
            Err(Error::ZeroDenominator)
        );
        assert!(matches!(
            LeveledRat::q_from(&z(1, 3), &z(2, 1)),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn field_operations() {
        assert_eq!(q(0, 1, 2).q_add(&q(0, 1, 3)).unwrap(), q(0, 5, 6));
        let a = q(1, -7, 4);
        assert_eq!(a.q_mul(&LeveledRat::one(1, a.base()).unwrap()).unwrap(), a);
        assert_eq!(q(1, 2, 3).q_neg(), q(1, -2, 3));
        assert_eq!(q(0, -2, 3).q_inv().unwrap(), q(0, -3, 2));
        assert_eq!(a.q_add(&a.q_neg()).unwrap(), q(1, 0, 1));
        assert_eq!(a.q_mul(&a.q_inv().unwrap()).unwrap(), q(1, 1, 1));
        assert_eq!(q(0, 0, 1).q_inv(), Err(Error::DivisionByZero));
        assert!(matches!(
            q(0, 1, 2).q_add(&q(1, 1, 2)),
            Err(Error::LevelMismatch { .. })
        ));
    }

    #[test]
    fn order_abs_metric() {
        assert_eq!(q(0, 1, 2).q_compare(&q(0, 2, 3)).unwrap(), Ordering::Less);
        assert_eq!(q(0, -1, 2).q_compare(&q(0, -2, 3)).unwrap(), Ordering::Greater);
        assert_eq!(q(1, -3, 2).q_abs(), q(1, 3, 2));
        assert_eq!(q(1, 0, 1).q_abs(), q(1, 0, 1));
        assert_eq!(q(1, 5, 2).q_abs(), q(1, 5, 2));
        assert_eq!(q(0, 1, 2).q_dist(&q(0, 2, 1)).unwrap(), q(0, 3, 2));
    }

    #[test]
    fn level_shifts() {
        assert_eq!(q(0, 2, 3).q_exp(), q(1, 2, 3));
        assert_eq!(q(2, -5, 7).q_exp().q_log().unwrap(), q(2, -5, 7));
        assert!(matches!(q(0, 1, 2).q_log(), Err(Error::LevelMismatch { .. })));
    }

    #[test]
    fn display() {
        assert_eq!(q(0, -2, 3).to_string(), "-2/3@0");
        assert_eq!(q(4, 6, 3).to_string(), "2/1@4");
    }
}
