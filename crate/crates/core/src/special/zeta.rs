//! Riemann zeta at integer arguments through the alternating eta series.

use std::collections::BTreeMap;

use crate::error::{domain, Result};
use crate::numeric::{PrecisionCtx, Scalar, GUARD_BITS};
use crate::series::{cvz_sum, cvz_terms_for_bits};

/// `zeta(m)` for integer `m >= 2` from `eta(m) / (1 - 2^(1-m))`.
pub fn zeta_int<T: Scalar>(m: u32, ctx: &PrecisionCtx) -> Result<T> {
    if m < 2 {
        return domain(format!("zeta_int needs m >= 2, got {m}"));
    }
    let bits = ctx.precision_bits() + GUARD_BITS;
    let n = cvz_terms_for_bits(bits);
    let a: Vec<T> = (1..=n as i64).map(|k| T::one() / T::from_int(k, bits).powi(m as i32)).collect();
    let eta = cvz_sum(&a, bits);
    let factor = T::one() - T::from_int(2, bits).powi(1 - m as i32);
    Ok((eta / factor).with_precision(ctx.precision_bits()))
}

/// Memoized `zeta(m)` at one precision; confined to the thread that owns it.
#[derive(Debug, Clone)]
pub struct ZetaCache<T> {
    ctx: PrecisionCtx,
    values: BTreeMap<u32, T>,
}

impl<T: Scalar> ZetaCache<T> {
    pub fn new(ctx: &PrecisionCtx) -> Self {
        ZetaCache { ctx: *ctx, values: BTreeMap::new() }
    }

    pub fn precision_bits(&self) -> u32 {
        self.ctx.precision_bits()
    }

    pub fn get(&mut self, m: u32) -> Result<T> {
        if let Some(v) = self.values.get(&m) {
            return Ok(v.clone());
        }
        let v: T = zeta_int(m, &self.ctx)?;
        self.values.insert(m, v.clone());
        Ok(v)
    }
}
