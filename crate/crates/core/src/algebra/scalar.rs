use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Ring scalar used by matrices, polynomials and operator families.
///
/// Blanket-implemented for every type with the required operator set, so
/// `BigInt`, `BigRational`, [`GaussianRational`](super::GaussianRational)
/// and the primitive floats all qualify.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn is_minus_one(&self) -> bool {
        (self.clone() + Self::one()).is_zero()
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Send
        + Sync
{
}

/// A scalar with multiplicative inverses of nonzero elements.
pub trait FieldScalar: Scalar {
    /// `None` exactly when `self` is zero.
    fn try_inv(&self) -> Option<Self>;
}

impl FieldScalar for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl FieldScalar for f64 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl FieldScalar for f32 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

/// Exact integers embed in every scalar ring used here.
pub fn from_int<S: Scalar>(value: i64) -> S {
    let mut acc = S::zero();
    let unit = if value < 0 { -S::one() } else { S::one() };
    // Repeated doubling keeps this generic without a FromPrimitive bound.
    let mut magnitude = value.unsigned_abs();
    let mut power = unit;
    while magnitude > 0 {
        if magnitude & 1 == 1 {
            acc = acc + power.clone();
        }
        power = power.clone() + power;
        magnitude >>= 1;
    }
    acc
}

pub fn rational_from_bigint(value: &BigInt) -> BigRational {
    BigRational::from_integer(value.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_int_matches_native() {
        for v in [-9i64, -1, 0, 1, 2, 7, 1024] {
            assert_eq!(from_int::<BigInt>(v), BigInt::from(v));
            assert_eq!(from_int::<f64>(v), v as f64);
        }
    }

    #[test]
    fn minus_one_detection() {
        assert!(BigRational::from_integer((-1).into()).is_minus_one());
        assert!(!BigRational::zero().is_minus_one());
        assert!((-1.0f64).is_minus_one());
    }
}
