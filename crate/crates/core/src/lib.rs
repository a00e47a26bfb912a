pub mod error;
pub mod exact_series;
pub mod finite_sums;
pub mod hypergeometric;
pub mod mixed;
pub mod numeric;
pub mod registry;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use numeric::{Field, PrecisionCtx, Rat, Scalar};

/// Arbitrary-precision real used by the verification catalog.
pub type Real = numeric::Mpf;
