//! MPFR-backed arbitrary-precision real.
//!
//! Binary operations round to the larger of the two operand precisions, so a
//! low-precision literal (zero, one) never degrades a working value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rug::float::Constant;
use rug::integer::Order;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::scalar::{Field, Scalar};
use super::Rat;

/// Precision given to the literal values returned by `zero()` and `one()`.
const LITERAL_BITS: u32 = 64;

#[derive(Clone, PartialEq, PartialOrd)]
pub struct Mpf(Float);

impl Mpf {
    pub fn from_float(f: Float) -> Self {
        Mpf(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    /// Parses a decimal literal at the given precision.
    pub fn parse(s: &str, bits: u32) -> Option<Self> {
        let parsed = Float::parse(s).ok()?;
        Some(Mpf(Float::with_val(bits, parsed)))
    }

    fn raise_to(&mut self, bits: u32) {
        if self.0.prec() < bits {
            self.0.set_prec(bits);
        }
    }
}

pub(crate) fn bigint_to_integer(n: &BigInt) -> Integer {
    let (sign, mag) = n.to_bytes_le();
    let v = Integer::from_digits(&mag, Order::Lsf);
    if sign == Sign::Minus {
        -v
    } else {
        v
    }
}

pub(crate) fn rat_to_rational(q: &Rat) -> Rational {
    Rational::from((bigint_to_integer(q.numer()), bigint_to_integer(q.denom())))
}

macro_rules! binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl<'a> $atr<&'a Mpf> for Mpf {
            fn $amethod(&mut self, rhs: &'a Mpf) {
                self.raise_to(rhs.0.prec());
                $atr::$amethod(&mut self.0, &rhs.0);
            }
        }
        impl $atr for Mpf {
            fn $amethod(&mut self, rhs: Mpf) {
                $atr::$amethod(self, &rhs);
            }
        }
        impl<'a> $tr<&'a Mpf> for Mpf {
            type Output = Mpf;
            fn $method(mut self, rhs: &'a Mpf) -> Mpf {
                $atr::$amethod(&mut self, rhs);
                self
            }
        }
        impl $tr for Mpf {
            type Output = Mpf;
            fn $method(mut self, rhs: Mpf) -> Mpf {
                $atr::$amethod(&mut self, &rhs);
                self
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Mpf {
    type Output = Mpf;
    fn neg(self) -> Mpf {
        Mpf(-self.0)
    }
}

impl Zero for Mpf {
    fn zero() -> Self {
        Mpf(Float::new(LITERAL_BITS))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Mpf {
    fn one() -> Self {
        Mpf(Float::with_val(LITERAL_BITS, 1))
    }
}

impl fmt::Debug for Mpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mpf({}, {} bits)", self.to_decimal(30), self.0.prec())
    }
}

impl fmt::Display for Mpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or_else(|| decimal_digits(self.0.prec()));
        f.write_str(&self.to_decimal(digits))
    }
}

/// Significant decimal digits carried by `bits` of mantissa.
pub fn decimal_digits(bits: u32) -> usize {
    ((bits as f64) * std::f64::consts::LOG10_2).floor() as usize
}

impl Field for Mpf {
    fn from_ratio(num: i64, den: i64, bits: u32) -> Self {
        if den == 1 {
            Mpf(Float::with_val(bits, num))
        } else {
            Mpf(Float::with_val(bits, Rational::from((num, den))))
        }
    }

    fn from_rat(q: &Rat, bits: u32) -> Self {
        Mpf(Float::with_val(bits, rat_to_rational(q)))
    }
}

impl Scalar for Mpf {
    fn from_f64(v: f64, bits: u32) -> Self {
        Mpf(Float::with_val(bits, v))
    }
    fn precision(&self) -> u32 {
        self.0.prec()
    }
    fn with_precision(&self, bits: u32) -> Self {
        Mpf(Float::with_val(bits, &self.0))
    }
    fn pi(bits: u32) -> Self {
        Mpf(Float::with_val(bits, Constant::Pi))
    }
    fn ln2(bits: u32) -> Self {
        Mpf(Float::with_val(bits, Constant::Log2))
    }
    fn euler_gamma(bits: u32) -> Self {
        Mpf(Float::with_val(bits, Constant::Euler))
    }
    fn sqrt(&self) -> Self {
        Mpf(self.0.clone().sqrt())
    }
    fn ln(&self) -> Self {
        Mpf(self.0.clone().ln())
    }
    fn exp(&self) -> Self {
        Mpf(self.0.clone().exp())
    }
    fn sin(&self) -> Self {
        Mpf(self.0.clone().sin())
    }
    fn cos(&self) -> Self {
        Mpf(self.0.clone().cos())
    }
    fn abs(&self) -> Self {
        Mpf(self.0.clone().abs())
    }
    fn powi(&self, n: i32) -> Self {
        Mpf(self.0.clone().pow(n))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        self.0.to_string_radix(10, Some(digits.max(1)))
    }
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
}

impl PartialEq<f64> for Mpf {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for Mpf {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}
