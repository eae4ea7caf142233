//! Minimal algebraic traits shared by the exact types.
//!
//! `Ring` is an integral domain with exact division; `Field` adds access to a
//! numerator/denominator representation over an underlying ring so that
//! determinants can be computed fraction-free.

use std::fmt::Debug;
use std::ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::mpoly_lcm;
use super::mpoly::MPoly;
use super::ratfunc::RatFunc;

/// An integral domain in which `div_exact` is defined whenever the divisor
/// divides the dividend.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient. Panics if `divisor` is zero or does not divide `self`.
    fn div_exact(&self, divisor: &Self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A field of fractions over a ring `Base`.
pub trait Field: Ring {
    type Base: Ring;

    fn numer(&self) -> Self::Base;
    fn denom(&self) -> Self::Base;
    fn from_base(value: &Self::Base) -> Self;
    fn from_rational(value: &BigRational) -> Self;
    /// Least common multiple in the base ring (up to units).
    fn base_lcm(a: &Self::Base, b: &Self::Base) -> Self::Base;

    fn div(&self, divisor: &Self) -> Self {
        self.div_exact(divisor)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        ops::Add::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ops::Sub::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ops::Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        ops::Neg::neg(self)
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        ops::Add::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ops::Sub::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ops::Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        ops::Neg::neg(self)
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!Zero::is_zero(divisor), "division by zero");
        self / divisor
    }
}

impl Field for BigRational {
    type Base = BigInt;

    fn numer(&self) -> BigInt {
        BigRational::numer(self).clone()
    }
    fn denom(&self) -> BigInt {
        BigRational::denom(self).clone()
    }
    fn from_base(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
    fn from_rational(value: &BigRational) -> Self {
        value.clone()
    }
    fn base_lcm(a: &BigInt, b: &BigInt) -> BigInt {
        a.lcm(b).abs()
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn from_i64(n: i64) -> Self {
        MPoly::from_int(n)
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        MPoly::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        ops::Add::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ops::Sub::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ops::Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        ops::Neg::neg(self)
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        MPoly::div_exact(self, divisor).expect("inexact polynomial division")
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_int(n)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        ops::Add::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        ops::Sub::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        ops::Mul::mul(self, other)
    }
    fn neg(&self) -> Self {
        ops::Neg::neg(self)
    }
    fn div_exact(&self, divisor: &Self) -> Self {
        self.checked_div(divisor)
            .expect("division by the zero rational function")
    }
}

impl Field for RatFunc {
    type Base = MPoly;

    fn numer(&self) -> MPoly {
        RatFunc::numer(self).clone()
    }
    fn denom(&self) -> MPoly {
        RatFunc::denom(self).clone()
    }
    fn from_base(value: &MPoly) -> Self {
        RatFunc::from_poly(value.clone())
    }
    fn from_rational(value: &BigRational) -> Self {
        RatFunc::constant(value.clone())
    }
    fn base_lcm(a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        mpoly_lcm(a, b)
    }
}

/// Parses `"p"` or `"p/q"` into a canonical rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if Zero::is_zero(&den) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let q = rat(-134912, 328);
        assert_eq!(q, rat(-16864, 41));
        assert_eq!(*q.denom(), BigInt::from(41));
        assert_eq!(*rat(0, 7).denom(), BigInt::from(1));
        assert_eq!(rat(3, -6), rat(-1, 2));
    }

    #[test]
    fn parses_rational_literals() {
        assert_eq!(parse_rational("-3/2"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("17"), Some(rat(17, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
