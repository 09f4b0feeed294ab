use std::ops::{Add, Div, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{Float, ToPrimitive};

use super::fixed::Fixed;

/// Scalar types the interpolated edge counts and ratios are evaluated in.
pub trait Real:
    Clone + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self>
{
    fn from_i64(n: i64) -> Self;
    fn from_count(n: &BigUint) -> Self;
    fn log2(&self) -> Self;
    fn to_f64(&self) -> f64;
}

macro_rules! float_real {
    ($t:ty) => {
        impl Real for $t {
            fn from_i64(n: i64) -> Self {
                n as $t
            }

            fn from_count(n: &BigUint) -> Self {
                n.to_f64().map_or(<$t>::infinity(), |x| x as $t)
            }

            fn log2(&self) -> Self {
                Float::log2(*self)
            }

            fn to_f64(&self) -> f64 {
                f64::from(*self)
            }
        }
    };
}

float_real!(f32);
float_real!(f64);

impl<const FRAC: u32> Real for Fixed<FRAC> {
    fn from_i64(n: i64) -> Self {
        Fixed::from_int(BigInt::from(n))
    }

    fn from_count(n: &BigUint) -> Self {
        Fixed::from_int(BigInt::from(n.clone()))
    }

    fn log2(&self) -> Self {
        Fixed::log2(self)
    }

    fn to_f64(&self) -> f64 {
        Fixed::to_f64(self)
    }
}
