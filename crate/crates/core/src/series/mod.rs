//! Summation of infinite series with error control.
//!
//! Geometric series are summed directly with a rigorous tail bound; series
//! with power-law tails go through the Levin u-transform (heuristic error from
//! the discrepancy between orders `L` and `L + 2`); alternating series use the
//! Cohen–Villegas–Zagier weights.

mod apery;
mod cvz;
mod levin;
mod nested;

pub use apery::{apery_series, apery_series_z, apery_terms, tail_bound_cb, zeta_star_2r};
pub use cvz::{cvz_sum, cvz_terms_for_bits};
pub use levin::levin_u;
pub use nested::{sum_nested_weighted, NestedLevel};

use crate::numeric::{PrecisionCtx, Scalar};

/// Extra bits for Levin cancellation on top of the summation precision.
pub const LEVIN_GUARD_BITS: u32 = 96;

/// Working precision for terms fed to an accelerated (Levin or CVZ) sum.
pub fn accel_bits(ctx: &PrecisionCtx) -> u32 {
    ctx.bits_for_terms(ctx.max_terms()) + LEVIN_GUARD_BITS
}

/// How the terms of a series decay; selects the summation method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DecayClass {
    /// `|a_{n+1} / a_n| <= ratio_bound < 1` from the first index on.
    Geometric { ratio_bound: f64 },
    /// `a_n ~ C n^-exponent` with an asymptotic expansion in `1/n`.
    Algebraic { exponent: f64 },
    /// Signs alternate and magnitudes are smooth and decreasing.
    Alternating,
    /// `a_n ~ C n^-exponent (log n)^log_power`.
    AlgebraicLog { exponent: f64, log_power: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Direct,
    Geometric,
    Levin,
    Cvz,
    Quadrature,
    Closed,
}

/// Outcome of a summation.
#[derive(Debug, Clone, PartialEq)]
pub struct SumResult<T> {
    pub value: T,
    /// Truncation error (rigorous for geometric sums, heuristic otherwise).
    pub trunc_err: f64,
    /// Accumulated rounding budget.
    pub round_err: f64,
    pub terms_used: usize,
    pub method: Method,
    /// False when the term budget ran out before the target error was met.
    pub converged: bool,
    /// Rigorous (possibly loose) bound on the remainder beyond `terms_used`,
    /// reported next to a heuristic `trunc_err`.
    pub tail_bound: Option<f64>,
}

impl<T: Scalar> SumResult<T> {
    pub fn est_err(&self) -> f64 {
        self.trunc_err + self.round_err
    }

    /// A closed-form value with only rounding error.
    pub fn exact(value: T) -> Self {
        let round_err = value.abs().to_f64() * value.epsilon() * 4.0;
        SumResult { value, trunc_err: 0.0, round_err, terms_used: 0, method: Method::Closed, converged: true, tail_bound: None }
    }

    pub fn map<F: FnOnce(T) -> T>(self, f: F, err_scale: f64) -> Self {
        SumResult {
            value: f(self.value),
            trunc_err: self.trunc_err * err_scale.abs(),
            round_err: self.round_err * err_scale.abs(),
            ..self
        }
    }

    /// Linear combination bookkeeping: `self + scale * other`.
    pub fn add_scaled(mut self, other: &SumResult<T>, scale: &T) -> Self {
        let s = scale.abs().to_f64();
        self.value += other.value.clone() * scale;
        self.trunc_err += other.trunc_err * s;
        self.round_err += other.round_err * s;
        self.terms_used += other.terms_used;
        self.converged &= other.converged;
        self
    }
}

/// A series `sum_{n >= first_index} term(n)`.
///
/// `term` is called with strictly increasing indices starting at
/// `first_index`, so generators may carry incremental state.
pub struct TermSeq<'a, T> {
    pub term: Box<dyn FnMut(usize) -> T + 'a>,
    pub decay: DecayClass,
    pub first_index: usize,
}

impl<'a, T> TermSeq<'a, T> {
    pub fn new(first_index: usize, decay: DecayClass, term: impl FnMut(usize) -> T + 'a) -> Self {
        TermSeq { term: Box::new(term), decay, first_index }
    }
}

/// Sums `seq` to `ctx.target_abs_err()` with the method its decay class calls for.
pub fn sum_adaptive<T: Scalar>(seq: TermSeq<'_, T>, ctx: &PrecisionCtx) -> SumResult<T> {
    match seq.decay {
        DecayClass::Geometric { ratio_bound } => sum_geometric(seq, ratio_bound, ctx),
        DecayClass::Alternating => sum_alternating(seq, ctx),
        DecayClass::Algebraic { .. } | DecayClass::AlgebraicLog { .. } => sum_levin(seq, ctx),
    }
}

fn sum_geometric<T: Scalar>(mut seq: TermSeq<'_, T>, ratio_bound: f64, ctx: &PrecisionCtx) -> SumResult<T> {
    let target = ctx.target_abs_err();
    let rho = ratio_bound.clamp(0.0, 1.0);
    let cap = ctx.max_geometric_terms();
    let mut sum = T::zero();
    let mut max_abs = 0.0f64;
    let mut prev_abs: Option<f64> = None;
    let mut eps = f64::EPSILON;
    let mut used = 0;
    let mut tail = f64::INFINITY;
    let mut honest = true;
    for n in seq.first_index.. {
        if used >= cap {
            break;
        }
        let a = (seq.term)(n);
        eps = a.epsilon();
        let a_abs = a.abs().to_f64();
        if let Some(p) = prev_abs {
            // allow for rounding in the ratio itself
            if p > 0.0 && a_abs > p * rho * (1.0 + 1e-12) {
                honest = false;
            }
        }
        sum += a;
        used += 1;
        max_abs = max_abs.max(sum.abs().to_f64());
        tail = if rho < 1.0 { a_abs * rho / (1.0 - rho) } else { f64::INFINITY };
        if a_abs == 0.0 && prev_abs == Some(0.0) {
            // terminating series
            tail = 0.0;
        }
        prev_abs = Some(a_abs);
        if tail <= target * 0.5 {
            break;
        }
    }
    let round_err = used as f64 * eps * max_abs;
    SumResult {
        value: sum,
        trunc_err: tail,
        round_err,
        terms_used: used,
        method: Method::Geometric,
        converged: honest && tail + round_err <= target,
        tail_bound: honest.then_some(tail),
    }
}

fn sum_alternating<T: Scalar>(mut seq: TermSeq<'_, T>, ctx: &PrecisionCtx) -> SumResult<T> {
    let target = ctx.target_abs_err();
    let cap = ctx.max_terms();
    let mut mags: Vec<T> = Vec::new();
    let pull = |mags: &mut Vec<T>, upto: usize, seq: &mut TermSeq<'_, T>| {
        while mags.len() < upto {
            let k = mags.len();
            let t = (seq.term)(seq.first_index + k);
            mags.push(if k % 2 == 0 { t } else { -t });
        }
    };
    let bits_wanted = (-target.log2()).ceil().max(8.0) as u32 + 8;
    let mut n = cvz_terms_for_bits(bits_wanted).min(cap.saturating_sub(8)).max(4);
    let step = 8;
    let mut best: Option<(T, f64, usize)> = None;
    loop {
        let m = (n + step).min(cap);
        pull(&mut mags, m, &mut seq);
        let bits = mags[0].precision();
        let lo = cvz_sum(&mags[..n], bits);
        let hi = cvz_sum(&mags[..m], bits);
        let diff = (hi.clone() - lo).abs().to_f64();
        let round = hi.epsilon() * mags.iter().map(|a| a.abs().to_f64()).fold(0.0, f64::max) * 4.0;
        if best.as_ref().map_or(true, |b| diff < b.1) {
            best = Some((hi, diff, m));
        }
        if diff + round <= target || m >= cap {
            let (value, diff, used) = best.unwrap();
            return SumResult {
                value,
                trunc_err: diff,
                round_err: round,
                terms_used: used,
                method: Method::Cvz,
                converged: diff + round <= target,
                tail_bound: None,
            };
        }
        n = (n + n / 2).min(cap.saturating_sub(step).max(1));
    }
}

/// Order schedule and stall detection for the Levin sums.
const LEVIN_FIRST_ORDER: usize = 6;
pub(crate) const LEVIN_MAX_ORDER: usize = 140;
const LEVIN_STALL: usize = 8;

fn sum_levin<T: Scalar>(mut seq: TermSeq<'_, T>, ctx: &PrecisionCtx) -> SumResult<T> {
    let target = ctx.target_abs_err();
    let cap = ctx.max_terms();
    let mut terms: Vec<T> = Vec::new();
    let mut partial: Vec<T> = Vec::new();
    let extend = |upto: usize, terms: &mut Vec<T>, partial: &mut Vec<T>, seq: &mut TermSeq<'_, T>| {
        while terms.len() < upto {
            let t = (seq.term)(seq.first_index + terms.len());
            let s = partial.last().cloned().unwrap_or_else(T::zero) + &t;
            terms.push(t);
            partial.push(s);
        }
    };
    let max_order = LEVIN_MAX_ORDER.min(cap.saturating_sub(1));
    let mut history: Vec<T> = Vec::new();
    let mut best: Option<(T, f64, usize)> = None;
    let mut since_best = 0;
    let mut k = LEVIN_FIRST_ORDER.min(max_order);
    loop {
        extend(k + 1, &mut terms, &mut partial, &mut seq);
        let bits = terms[0].precision();
        let Some(v) = levin_u(&partial, &terms, 0, k, 1.0, bits) else {
            break;
        };
        history.push(v.clone());
        let h = history.len();
        if h >= 3 {
            let d1 = (history[h - 1].clone() - &history[h - 2]).abs().to_f64();
            let d2 = (history[h - 2].clone() - &history[h - 3]).abs().to_f64();
            let est = d1.max(d2);
            if best.as_ref().map_or(true, |b| est < b.1) {
                best = Some((v.clone(), est, k + 1));
                since_best = 0;
            } else {
                since_best += 1;
            }
            if est <= target * 0.5 || since_best >= LEVIN_STALL {
                break;
            }
        }
        if k + 2 > max_order {
            break;
        }
        k += 2;
    }
    let (value, est, used) = match best {
        Some(b) => b,
        None => {
            let v = partial.last().cloned().unwrap_or_else(T::zero);
            (v, f64::INFINITY, terms.len())
        }
    };
    let round_err = value.abs().to_f64() * value.epsilon() * 16.0;
    SumResult {
        value,
        trunc_err: est,
        round_err,
        terms_used: used,
        method: Method::Levin,
        converged: est + round_err <= target,
        tail_bound: None,
    }
}
