use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Binary fixed-point number with `FRAC` fractional bits over an unbounded
/// integer: the value is `raw / 2^FRAC`.
///
/// Multiplication and division truncate to `FRAC` bits; [`Fixed::log2`] is
/// accurate to a few units in the last place.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fixed<const FRAC: u32> {
    raw: BigInt,
}

impl<const FRAC: u32> Fixed<FRAC> {
    pub fn from_raw(raw: BigInt) -> Self {
        Self { raw }
    }

    pub fn raw(&self) -> &BigInt {
        &self.raw
    }

    pub fn from_int(n: BigInt) -> Self {
        Self { raw: n << FRAC }
    }

    /// Nearest representable value to `num / den`, truncated toward zero.
    pub fn from_ratio(num: &BigInt, den: &BigInt) -> Self {
        Self {
            raw: (num << FRAC) / den,
        }
    }

    /// Base-2 logarithm by repeated squaring of the mantissa.
    ///
    /// # Panics
    /// On non-positive arguments.
    pub fn log2(&self) -> Self {
        assert!(self.raw.is_positive(), "log2 of a non-positive value");
        let mag = self.raw.magnitude();
        let top = mag.bits() - 1;
        let int_part = top as i64 - i64::from(FRAC);
        // Mantissa in [1, 2) with `work` fractional bits.
        let work = u64::from(FRAC) + 64;
        let mut m: BigUint = if top <= work {
            mag << (work - top)
        } else {
            mag >> (top - work)
        };
        let two = BigUint::one() << (work + 1);
        let mut frac = BigUint::zero();
        for _ in 0..FRAC {
            m = (&m * &m) >> work;
            frac <<= 1;
            if m >= two {
                m >>= 1;
                frac |= BigUint::one();
            }
        }
        let raw = (BigInt::from(int_part) << FRAC) + BigInt::from(frac);
        Self { raw }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.raw.magnitude().bits();
        let shift = bits.saturating_sub(64);
        let head = (&self.raw >> shift).to_f64().unwrap_or(f64::NAN);
        head * 2f64.powi(shift as i32 - FRAC as i32)
    }

    /// Decimal expansion rounded half away from zero to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u8).pow(digits as u32);
        let half = BigInt::one() << FRAC.saturating_sub(1);
        let scaled = (self.raw.abs() * scale + half) >> FRAC;
        let text = scaled.to_string();
        let text = if text.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - text.len()), text)
        } else {
            text
        };
        let (int, frac) = text.split_at(text.len() - digits);
        let sign = if self.raw.sign() == Sign::Minus && scaled_nonzero(&text) {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

fn scaled_nonzero(text: &str) -> bool {
    text.bytes().any(|b| b != b'0')
}

impl<const FRAC: u32> Add for Fixed<FRAC> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { raw: self.raw + rhs.raw }
    }
}

impl<const FRAC: u32> Sub for Fixed<FRAC> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { raw: self.raw - rhs.raw }
    }
}

impl<const FRAC: u32> Mul for Fixed<FRAC> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            raw: (self.raw * rhs.raw) >> FRAC,
        }
    }
}

impl<const FRAC: u32> Div for Fixed<FRAC> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        Self {
            raw: (self.raw << FRAC) / rhs.raw,
        }
    }
}

impl<const FRAC: u32> Neg for Fixed<FRAC> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { raw: -self.raw }
    }
}

impl<const FRAC: u32> PartialOrd for Fixed<FRAC> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const FRAC: u32> Ord for Fixed<FRAC> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.raw.cmp(&other.raw)
    }
}

impl<const FRAC: u32> fmt::Display for Fixed<FRAC> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(40);
        f.write_str(&self.to_decimal(digits))
    }
}

impl<const FRAC: u32> fmt::Debug for Fixed<FRAC> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fixed<{FRAC}>({})", self.to_decimal(24))
    }
}
