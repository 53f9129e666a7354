//! Scalar abstractions shared by the linear algebra and symmetric function code.
//!
//! Everything in this crate that only needs ring operations is written against
//! [`Scalar`]; routines that divide (Gaussian elimination, Pfaffians by skew
//! elimination, Schur functions as Vandermonde quotients) require [`Field`].
//! Both traits are implemented for `f32`/`f64` and for exact types such as
//! [`num_rational::BigRational`] and [`num_bigint::BigInt`] (ring only).

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring element usable as a matrix entry.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
    /// Lifts a small integer constant into the scalar type.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer constant not representable")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

/// A scalar with exact or approximate division.
pub trait Field: Scalar + Signed + PartialOrd {
    /// `true` when arithmetic is exact, so any nonzero pivot is as good as another.
    const EXACT: bool;
}

impl Field for f32 {
    const EXACT: bool = false;
}

impl Field for f64 {
    const EXACT: bool = false;
}

impl<I> Field for Ratio<I>
where
    I: Clone + Integer + Signed + Debug + FromPrimitive + Send + Sync,
    Ratio<I>: FromPrimitive,
{
    const EXACT: bool = true;
}

/// `(-1)^e` as a scalar.
pub fn sign<T: Scalar>(e: i64) -> T {
    if e.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// `base^exp` by repeated squaring.
pub fn pow<T: Scalar>(base: &T, mut exp: u32) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b.clone();
        }
        exp >>= 1;
        if exp > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn pow_matches_repeated_product() {
        assert_eq!(pow(&BigInt::from(3), 5), BigInt::from(243));
        assert_eq!(pow(&2.0f64, 10), 1024.0);
        assert_eq!(pow(&BigInt::from(7), 0), BigInt::from(1));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(pow(&half, 3), BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn sign_parity() {
        assert_eq!(sign::<i64>(0), 1);
        assert_eq!(sign::<i64>(3), -1);
        assert_eq!(sign::<i64>(-2), 1);
    }
}
