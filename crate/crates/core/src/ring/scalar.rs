use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact commutative ring used for coefficients.
///
/// Everything downstream (Laurent polynomials, algebra elements, Gram
/// matrices) is generic over this trait so the same code runs over
/// `Z[φ]` and `Q(φ)`.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_integer(i: BigInt) -> Self;

    fn from_int(i: i64) -> Self {
        Self::from_integer(BigInt::from(i))
    }

    /// Multiplicative inverse if it exists in this ring.
    fn try_inv(&self) -> Option<Self>;

    /// Exact quotient `self / d` if it exists in this ring.
    fn try_div(&self, d: &Self) -> Option<Self>;
}

impl Scalar for BigInt {
    fn from_integer(i: BigInt) -> Self {
        i
    }

    fn try_inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || !(self % d).is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}

impl Scalar for BigRational {
    fn from_integer(i: BigInt) -> Self {
        BigRational::from_integer(i)
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
}
