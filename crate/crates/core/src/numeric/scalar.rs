//! Scalar abstractions used by every algorithm in the crate.
//!
//! [`Field`] covers exact and floating arithmetic alike (rationals, `f64`,
//! [`Mpf`](super::Mpf)); [`Scalar`] adds the transcendental operations that
//! only make sense for floating types. Construction from integers always
//! takes a precision in bits so that arbitrary-precision values never end up
//! at a lower precision than the surrounding computation.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rat;

pub trait Field:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
{
    /// `num / den` rounded to `bits` (exact for rational types).
    fn from_ratio(num: i64, den: i64, bits: u32) -> Self;

    fn from_rat(q: &Rat, bits: u32) -> Self;

    fn from_int(n: i64, bits: u32) -> Self {
        Self::from_ratio(n, 1, bits)
    }

    fn lt_zero(&self) -> bool {
        *self < Self::zero()
    }
}

/// Real floating-point scalar with a working precision.
pub trait Scalar: Field + Display {
    fn from_f64(v: f64, bits: u32) -> Self;

    /// Precision of this value in bits (53 for `f64`).
    fn precision(&self) -> u32;

    /// Copy of `self` re-rounded to `bits` (a no-op for fixed-precision types).
    fn with_precision(&self, bits: u32) -> Self;

    fn pi(bits: u32) -> Self;
    fn ln2(bits: u32) -> Self;
    fn euler_gamma(bits: u32) -> Self;

    fn sqrt(&self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn abs(&self) -> Self;
    fn powi(&self, n: i32) -> Self;

    fn to_f64(&self) -> f64;

    /// Unit roundoff at this value's precision.
    fn epsilon(&self) -> f64 {
        (-(self.precision() as f64)).exp2()
    }

    /// Decimal rendering with `digits` significant digits.
    fn to_decimal(&self, digits: usize) -> String;

    fn is_finite(&self) -> bool;

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl Field for f64 {
    fn from_ratio(num: i64, den: i64, _bits: u32) -> Self {
        num as f64 / den as f64
    }

    fn from_rat(q: &Rat, _bits: u32) -> Self {
        rat_to_f64(q)
    }
}

impl Scalar for f64 {
    fn from_f64(v: f64, _bits: u32) -> Self {
        v
    }
    fn precision(&self) -> u32 {
        53
    }
    fn with_precision(&self, _bits: u32) -> Self {
        *self
    }
    fn pi(_bits: u32) -> Self {
        std::f64::consts::PI
    }
    fn ln2(_bits: u32) -> Self {
        std::f64::consts::LN_2
    }
    fn euler_gamma(_bits: u32) -> Self {
        0.577_215_664_901_532_9
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn sin(&self) -> Self {
        f64::sin(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn powi(&self, n: i32) -> Self {
        f64::powi(*self, n)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1), self)
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

impl Field for Rat {
    fn from_ratio(num: i64, den: i64, _bits: u32) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rat(q: &Rat, _bits: u32) -> Self {
        q.clone()
    }
}

/// Nearest `f64` to a rational, tolerant of huge numerators and denominators.
pub fn rat_to_f64(q: &Rat) -> f64 {
    super::mpf::rat_to_rational(q).to_f64()
}
