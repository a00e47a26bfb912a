//! Series whose terms carry a nested harmonic-type factor,
//! `sum_n A_n sum_{n >= m_1 (>|>=) m_2 ...} w_1(m_1) w_2(m_2) ...`.
//!
//! Such factors grow like powers of `log n`, which defeats Levin. Summation
//! by parts moves each weight onto the tails `T_m = sum_{n>=m} A_n`, leaving
//! at every level a series with a pure power-law expansion.

use crate::numeric::{PrecisionCtx, Scalar};

use super::{sum_adaptive, DecayClass, SumResult, TermSeq, LEVIN_MAX_ORDER};

/// One level of the nested factor. `strict` relates this index to the next
/// level's (`m_j > m_{j+1}` when true, `>=` otherwise); it is ignored on the
/// innermost level.
pub struct NestedLevel<'a, T> {
    pub weight: Box<dyn Fn(usize) -> T + 'a>,
    pub strict: bool,
}

impl<'a, T> NestedLevel<'a, T> {
    pub fn new(strict: bool, weight: impl Fn(usize) -> T + 'a) -> Self {
        NestedLevel { weight: Box::new(weight), strict }
    }
}

/// Levin sum of a precomputed slice of terms (indices from 1).
fn levin_slice<T: Scalar>(terms: &[T], ctx: &PrecisionCtx) -> SumResult<T> {
    let local = terms.to_vec();
    let seq = TermSeq::new(1, DecayClass::Algebraic { exponent: 1.0 }, move |n| local[n - 1].clone());
    sum_adaptive(seq, &ctx.with_max_terms(terms.len()))
}

/// `sum_{n>=1} base(n) * nested(n)` for the levels given outermost first.
///
/// `base` must have a power-law expansion in `1/n` and is called for
/// `n = 1, 2, ...` in order. The error estimate adds the Levin estimate of
/// the last level to the earlier-level estimates scaled by the weight sums
/// they were multiplied into.
pub fn sum_nested_weighted<T: Scalar>(
    mut base: impl FnMut(usize) -> T,
    levels: &[NestedLevel<'_, T>],
    ctx: &PrecisionCtx,
) -> SumResult<T> {
    let len = LEVIN_MAX_ORDER + 2 + levels.len();
    let mut cur: Vec<T> = (1..=len).map(&mut base).collect();
    let mut carried = 0.0f64;
    let mut terms_used = 0;
    let mut converged = true;
    for (j, level) in levels.iter().enumerate() {
        let s = levin_slice(&cur, ctx);
        terms_used = terms_used.max(s.terms_used);
        converged &= s.converged;
        let last = j + 1 == levels.len();
        let shift = level.strict && !last;
        let mut next = Vec::with_capacity(cur.len());
        let mut tail = s.value.clone();
        let mut wsum = 0.0;
        // tail holds T_m = S - sum_{n<m} B_n
        for m in 1..=cur.len() {
            if m > 1 {
                tail -= &cur[m - 2];
            }
            let w = (level.weight)(m);
            wsum += w.abs().to_f64();
            let b = w * &tail;
            if shift {
                // the strict relation moves this term one index down; the
                // entry for m' = 0 vanishes
                if m >= 2 {
                    next.push(b);
                }
            } else {
                next.push(b);
            }
        }
        carried = (carried + s.est_err()) * (1.0 + wsum);
        cur = next;
    }
    let mut out = levin_slice(&cur, ctx);
    out.trunc_err += carried;
    out.terms_used = out.terms_used.max(terms_used);
    out.converged &= converged && out.est_err() <= ctx.target_abs_err();
    out
}
