//! Exact scalars. Linear algebra runs first over `i128` rationals with
//! checked arithmetic and is repeated over big rationals if anything
//! overflows.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("machine-integer overflow in exact arithmetic")]
pub struct Overflow;

pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_fraction(num: i64, den: i64) -> Self;
    fn add(&self, other: &Self) -> Result<Self, Overflow>;
    fn sub(&self, other: &Self) -> Result<Self, Overflow>;
    fn mul(&self, other: &Self) -> Result<Self, Overflow>;
    /// Division by a nonzero scalar.
    fn div(&self, other: &Self) -> Result<Self, Overflow>;

    /// `self − a·b`, the elimination step.
    fn sub_mul(&self, a: &Self, b: &Self) -> Result<Self, Overflow> {
        self.sub(&a.mul(b)?)
    }
}

pub type SmallRational = Ratio<i128>;

impl Scalar for SmallRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(num.into(), den.into())
    }
    fn add(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_add(other).ok_or(Overflow)
    }
    fn sub(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_sub(other).ok_or(Overflow)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_mul(other).ok_or(Overflow)
    }
    fn div(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_div(other).ok_or(Overflow)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }
    fn add(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self + other)
    }
    fn sub(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self - other)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self * other)
    }
    fn div(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self / other)
    }
}

/// Which scalar type produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    I128,
    BigInt,
}

/// Runs `f` over `i128` rationals, falling back to big rationals on overflow.
pub fn with_fallback<T, E>(
    small: impl FnOnce() -> Result<T, Fallible<E>>,
    big: impl FnOnce() -> Result<T, Fallible<E>>,
) -> Result<(T, Arithmetic), E> {
    match small() {
        Ok(v) => Ok((v, Arithmetic::I128)),
        Err(Fallible::Failed(e)) => Err(e),
        Err(Fallible::Overflow) => match big() {
            Ok(v) => Ok((v, Arithmetic::BigInt)),
            Err(Fallible::Failed(e)) => Err(e),
            Err(Fallible::Overflow) => unreachable!("big rationals do not overflow"),
        },
    }
}

/// An error that is either a genuine failure or a request to retry with
/// wider scalars.
#[derive(Debug)]
pub enum Fallible<E> {
    Overflow,
    Failed(E),
}

impl<E> From<Overflow> for Fallible<E> {
    fn from(_: Overflow) -> Self {
        Fallible::Overflow
    }
}
