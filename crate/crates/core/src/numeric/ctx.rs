use crate::error::{Error, Result};

/// Extra bits carried above what the target error needs.
pub const GUARD_BITS: u32 = 32;

pub const DEFAULT_PRECISION_BITS: u32 = 256;
pub const DEFAULT_TARGET_ABS_ERR: f64 = 1e-30;
pub const DEFAULT_MAX_TERMS: usize = 20_000;
pub const DEFAULT_MAX_GEOMETRIC_TERMS: usize = 1_000_000;

/// Working precision, target error and term budgets for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionCtx {
    target_abs_err: f64,
    precision_bits: u32,
    /// Cap on terms fed to an accelerated (algebraic or alternating) summation.
    max_terms: usize,
    /// Cap on terms of a directly summed geometric series.
    max_geometric_terms: usize,
}

/// Bits needed to resolve `err` plus the guard.
pub fn bits_for_error(err: f64) -> u32 {
    (-err.log2()).ceil().max(0.0) as u32 + GUARD_BITS
}

impl PrecisionCtx {
    pub fn new(target_abs_err: f64, precision_bits: u32) -> Result<Self> {
        Self::with_limits(target_abs_err, precision_bits, DEFAULT_MAX_TERMS, DEFAULT_MAX_GEOMETRIC_TERMS)
    }

    pub fn with_limits(
        target_abs_err: f64,
        precision_bits: u32,
        max_terms: usize,
        max_geometric_terms: usize,
    ) -> Result<Self> {
        if !(target_abs_err > 0.0 && target_abs_err.is_finite()) {
            return Err(Error::Usage(format!("target error must be positive, got {target_abs_err}")));
        }
        if precision_bits < 64 {
            return Err(Error::Usage(format!("precision must be at least 64 bits, got {precision_bits}")));
        }
        let needed = bits_for_error(target_abs_err);
        if precision_bits < needed {
            return Err(Error::Usage(format!(
                "{precision_bits} bits cannot carry a target error of {target_abs_err:e} (needs {needed})"
            )));
        }
        if max_terms == 0 || max_geometric_terms == 0 {
            return Err(Error::Usage("term budgets must be positive".into()));
        }
        Ok(PrecisionCtx { target_abs_err, precision_bits, max_terms, max_geometric_terms })
    }

    /// Context whose target error is the finest the given precision supports.
    pub fn from_bits(precision_bits: u32) -> Result<Self> {
        let target = (-(precision_bits.saturating_sub(GUARD_BITS) as f64)).exp2();
        Self::new(target, precision_bits)
    }

    pub fn target_abs_err(&self) -> f64 {
        self.target_abs_err
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn max_geometric_terms(&self) -> usize {
        self.max_geometric_terms
    }

    /// Precision for an `n`-term summation: target + guard + ceil(log2 n), and
    /// never below the context precision.
    pub fn bits_for_terms(&self, n: usize) -> u32 {
        let log_n = (n.max(1) as f64).log2().ceil() as u32;
        self.precision_bits.max(bits_for_error(self.target_abs_err) + log_n)
    }

    /// Same budgets with a different target error (precision raised if needed).
    pub fn with_target(&self, target_abs_err: f64) -> Result<Self> {
        let bits = self.precision_bits.max(bits_for_error(target_abs_err));
        Self::with_limits(target_abs_err, bits, self.max_terms, self.max_geometric_terms)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    /// Context at `bits` with a target error scaled to match.
    pub fn at_bits(&self, bits: u32) -> Self {
        let bits = bits.max(64);
        let target = self
            .target_abs_err
            .max((-(bits.saturating_sub(GUARD_BITS) as f64)).exp2());
        PrecisionCtx { target_abs_err: target, precision_bits: bits, ..*self }
    }
}

impl Default for PrecisionCtx {
    fn default() -> Self {
        PrecisionCtx {
            target_abs_err: DEFAULT_TARGET_ABS_ERR,
            precision_bits: DEFAULT_PRECISION_BITS,
            max_terms: DEFAULT_MAX_TERMS,
            max_geometric_terms: DEFAULT_MAX_GEOMETRIC_TERMS,
        }
    }
}
