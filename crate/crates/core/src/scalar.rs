//! Scalar traits the matrix and polynomial code is generic over.
//!
//! `num_traits::Zero`/`One` have no receiver, so a tower element cannot build
//! its own zero from them; the `*_like` constructors take a witness instead.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qfield::Elem;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn zero_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn from_bigint_like(&self, v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn try_inv(&self) -> Result<Self>;
    fn characteristic(&self) -> u64;

    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn try_div(&self, o: &Self) -> Result<Self> {
        Ok(self.clone() * &o.try_inv()?)
    }

    /// `self == 2` or `self == -2`.
    fn is_pm_two(&self) -> bool {
        let two = self.from_i64_like(2);
        *self == two || *self == -two
    }
}

/// A field where every monic quadratic splits (possibly after growing).
pub trait QuadClosed: Field {
    /// Roots of `x^2 + a x + b`.
    fn solve_quadratic(a: &Self, b: &Self) -> (Self, Self);

    fn sqrt(&self) -> Self {
        let (r, _) = Self::solve_quadratic(&self.zero_like(), &-self.clone());
        r
    }
}

impl Field for Elem {
    fn zero_like(&self) -> Self {
        self.tower().zero()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        self.tower().int(v)
    }
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        self.tower().bigint(v)
    }
    fn is_zero(&self) -> bool {
        Elem::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Elem::is_one(self)
    }
    fn try_inv(&self) -> Result<Self> {
        Elem::try_inv(self)
    }
    fn characteristic(&self) -> u64 {
        self.tower().characteristic()
    }
}

impl QuadClosed for Elem {
    fn solve_quadratic(a: &Self, b: &Self) -> (Self, Self) {
        a.tower().solve_quadratic(a, b)
    }
    fn sqrt(&self) -> Self {
        self.tower().sqrt(self)
    }
}

impl Field for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn from_i64_like(&self, v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_bigint_like(&self, v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn try_inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}
