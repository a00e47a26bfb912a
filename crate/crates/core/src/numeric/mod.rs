//! Arbitrary-precision reals, exact rationals, constants and the precision
//! context consumed by every evaluator.

mod bernoulli;
mod ctx;
mod mpf;
mod scalar;

pub use bernoulli::bernoulli;
pub use ctx::{
    bits_for_error, PrecisionCtx, DEFAULT_MAX_GEOMETRIC_TERMS, DEFAULT_MAX_TERMS, DEFAULT_PRECISION_BITS,
    DEFAULT_TARGET_ABS_ERR, GUARD_BITS,
};
pub use mpf::{decimal_digits, Mpf};
pub use scalar::{rat_to_f64, Field, Scalar};

use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Exact rational in canonical reduced form.
pub type Rat = num_rational::BigRational;

/// Shorthand for an exact `num/den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constant {
    Pi,
    Log2,
    EulerGamma,
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Constant::Pi),
            "log2" => Ok(Constant::Log2),
            "euler_gamma" => Ok(Constant::EulerGamma),
            other => Err(Error::Usage(format!("unknown constant `{other}` (expected pi, log2, euler_gamma)"))),
        }
    }
}

pub fn constant<T: Scalar>(name: Constant, ctx: &PrecisionCtx) -> T {
    let bits = ctx.precision_bits();
    match name {
        Constant::Pi => T::pi(bits),
        Constant::Log2 => T::ln2(bits),
        Constant::EulerGamma => T::euler_gamma(bits),
    }
}

pub fn rat_to_real<T: Scalar>(q: &Rat, ctx: &PrecisionCtx) -> T {
    T::from_rat(q, ctx.precision_bits())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Sqrt,
    Log,
    Exp,
    PowInt(i32),
    Sin,
}

/// Elementary function with domain checking; the argument is first brought
/// to the context precision.
pub fn elem<T: Scalar>(f: Elementary, x: &T, ctx: &PrecisionCtx) -> Result<T> {
    let x = x.with_precision(ctx.precision_bits().max(x.precision()));
    match f {
        Elementary::Sqrt if x.lt_zero() => domain(format!("sqrt of negative value {x:.20}")),
        Elementary::Sqrt => Ok(x.sqrt()),
        Elementary::Log if !(x > T::zero()) => domain(format!("log of non-positive value {x:.20}")),
        Elementary::Log => Ok(x.ln()),
        Elementary::Exp => Ok(x.exp()),
        Elementary::PowInt(n) if n < 0 && num_traits::Zero::is_zero(&x) => domain("negative power of zero"),
        Elementary::PowInt(n) => Ok(x.powi(n)),
        Elementary::Sin => Ok(x.sin()),
    }
}
