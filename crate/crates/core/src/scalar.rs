use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// Absolute tolerance for float coordinates.
pub const FLOAT_TOLERANCE: f64 = 1e-6;

/// Coordinate type of flat-surface edge vectors.
///
/// Rationals compare exactly; floats up to [`FLOAT_TOLERANCE`].
pub trait Scalar:
    Clone + PartialEq + PartialOrd + Debug + Num + Neg<Output = Self> + ToPrimitive
{
    /// Lossy conversion used only for corner angles.
    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self;

    /// Zero for the purpose of geometric comparisons.
    fn negligible(&self) -> bool {
        self.is_zero()
    }

    /// `self == other` for the purpose of geometric comparisons.
    fn near(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).negligible()
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn negligible(&self) -> bool {
        (self.abs() as f64) < FLOAT_TOLERANCE
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn negligible(&self) -> bool {
        self.abs() < FLOAT_TOLERANCE
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}
