//! Zeta values, digamma and log-gamma, polylogarithms and `Li_{{2}_r}`.

mod gamma;
mod mpl;
mod polylog;
mod zeta;

pub(crate) use gamma::as_integer;
pub use gamma::{digamma, gamma, gamma_quotient, log_gamma};
pub use mpl::{mpl_2r, zeta_2r, MplNearOne};
pub use polylog::polylog;
pub use zeta::{zeta_int, ZetaCache};
