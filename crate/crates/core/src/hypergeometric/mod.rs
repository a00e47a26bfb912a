//! Generalized hypergeometric series at real arguments, the closed forms
//! and transformations built on them, the partial-fraction representation
//! and the parametric central-binomial identities.

mod closed;
mod parametric;
mod partial;

pub use closed::{closed_3f2_x, functional_3f2, gauss_2f1_unit, quad_transform_check};
pub use parametric::{hurwitz_param_apery, param_apery, param_apery_lhs, t_apery};
pub use partial::{pf_3f2, pf_3f2_half, pf_3f2_one_sided, pf_3f2_sine};

use crate::error::{domain, Result};
use crate::numeric::{PrecisionCtx, Scalar};
use crate::series::{accel_bits, sum_adaptive, DecayClass, Method, SumResult, TermSeq};
use crate::special::as_integer;

/// `pFq(upper; lower; z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypParams<T> {
    pub upper: Vec<T>,
    pub lower: Vec<T>,
    pub z: T,
}

impl<T: Scalar> HypParams<T> {
    pub fn new(upper: Vec<T>, lower: Vec<T>, z: T) -> Self {
        HypParams { upper, lower, z }
    }

    /// Convergence margin `sum lower - sum upper` at `|z| = 1`.
    pub fn margin(&self) -> f64 {
        self.lower.iter().map(Scalar::to_f64).sum::<f64>() - self.upper.iter().map(Scalar::to_f64).sum::<f64>()
    }

    /// Smallest `m` with some upper parameter equal to `-m`.
    fn terminates_at(&self) -> Option<usize> {
        self.upper
            .iter()
            .filter_map(|a| as_integer(a).filter(|&m| m <= 0).map(|m| (-m) as usize))
            .min()
    }
}

/// Term generator `t_0 = 1`, `t_{n+1} = t_n prod(a+n)/prod(b+n) z/(n+1)`.
struct HypTerms<T> {
    upper: Vec<T>,
    lower: Vec<T>,
    z: T,
    n: usize,
    t: T,
    bits: u32,
}

impl<T: Scalar> HypTerms<T> {
    fn new(p: &HypParams<T>, bits: u32) -> Self {
        HypTerms {
            upper: p.upper.iter().map(|a| a.with_precision(bits)).collect(),
            lower: p.lower.iter().map(|b| b.with_precision(bits)).collect(),
            z: p.z.with_precision(bits),
            n: 0,
            t: T::from_int(1, bits),
            bits,
        }
    }

    /// Returns `t_n` and advances.
    fn next_term(&mut self) -> T {
        let out = self.t.clone();
        let nn = T::from_int(self.n as i64, self.bits);
        let mut num = self.z.clone();
        for a in &self.upper {
            num *= a.clone() + &nn;
        }
        let mut den = T::from_int(self.n as i64 + 1, self.bits);
        for b in &self.lower {
            den *= b.clone() + &nn;
        }
        self.t *= num / den;
        self.n += 1;
        out
    }
}

/// `sup_{n>=N} |t_{n+1}/t_n|`, pairing each upper parameter with a lower
/// one (the `n!` counts as the lower parameter 1). `None` when the bound
/// is not yet valid at `N`.
fn ratio_bound(upper: &[f64], lower: &[f64], z: f64, big_n: f64) -> Option<f64> {
    let mut beta: Vec<f64> = lower.to_vec();
    beta.push(1.0);
    if upper.len() > beta.len() {
        return None;
    }
    let mut rho = z.abs();
    for (i, b) in beta.iter().enumerate() {
        let den = big_n + b;
        if den <= 0.0 {
            return None;
        }
        match upper.get(i) {
            Some(a) => {
                let num = big_n + a;
                if num < 0.0 {
                    return None;
                }
                rho *= (num / den).max(1.0);
            }
            None => rho /= den,
        }
    }
    Some(rho * (1.0 + 1e-12))
}

/// Evaluates the series: finite sums when terminating, direct summation
/// with a rigorous tail for `|z| < 1`, Levin at `z = 1` (margin `s > 0`),
/// CVZ at `z = -1` (margin `s > -1`).
pub fn hyp_eval<T: Scalar>(p: &HypParams<T>, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    let out_bits = ctx.precision_bits();
    let stop = p.terminates_at();
    for b in &p.lower {
        if let Some(m) = as_integer(b).filter(|&m| m <= 0) {
            // a terminating numerator cancels the pole only if it stops first
            if stop.map_or(true, |s| s as i64 > -m) {
                return domain(format!("lower parameter {m} is a nonpositive integer"));
            }
        }
    }
    if let Some(m) = stop {
        let bits = ctx.bits_for_terms(m + 1);
        let mut gen = HypTerms::new(p, bits);
        let mut sum = T::zero();
        for _ in 0..=m {
            sum += gen.next_term();
        }
        let round_err = (m + 1) as f64 * sum.epsilon() * sum.abs().to_f64().max(1.0);
        return Ok(SumResult {
            value: sum.with_precision(out_bits),
            trunc_err: 0.0,
            round_err,
            terms_used: m + 1,
            method: Method::Direct,
            converged: true,
            tail_bound: Some(0.0),
        });
    }
    if p.upper.len() > p.lower.len() + 1 {
        return domain("pFq with p > q + 1 diverges for z != 0");
    }
    let zf = p.z.to_f64();
    let one = T::one();
    let balanced = p.upper.len() == p.lower.len() + 1;
    if balanced && p.z == one {
        let s = p.margin();
        if s <= 0.0 {
            return domain(format!("series at z = 1 needs margin > 0, got {s}"));
        }
        let mut gen = HypTerms::new(p, accel_bits(ctx));
        let seq = TermSeq::new(0, DecayClass::Algebraic { exponent: 1.0 + s }, move |_| gen.next_term());
        let mut res = sum_adaptive(seq, ctx);
        res.value = res.value.with_precision(out_bits);
        return Ok(res);
    }
    if balanced && p.z == -one.clone() {
        let s = p.margin();
        if s <= -1.0 {
            return domain(format!("series at z = -1 needs margin > -1, got {s}"));
        }
        let mut gen = HypTerms::new(p, accel_bits(ctx));
        let seq = TermSeq::new(0, DecayClass::Alternating, move |_| gen.next_term());
        let mut res = sum_adaptive(seq, ctx);
        res.value = res.value.with_precision(out_bits);
        return Ok(res);
    }
    if !(zf.abs() < 1.0 || !balanced) {
        return domain(format!("series diverges at z = {zf}"));
    }
    let upper: Vec<f64> = p.upper.iter().map(Scalar::to_f64).collect();
    let lower: Vec<f64> = p.lower.iter().map(Scalar::to_f64).collect();
    let cap = ctx.max_geometric_terms();
    let bits = ctx.bits_for_terms(cap);
    let target = ctx.target_abs_err();
    let mut gen = HypTerms::new(p, bits);
    let mut sum = gen.next_term();
    let mut max_abs = sum.abs().to_f64();
    let mut tail = f64::INFINITY;
    let mut used = 1;
    while used < cap {
        let t = gen.next_term();
        let t_abs = t.abs().to_f64();
        sum += t;
        used += 1;
        max_abs = max_abs.max(sum.abs().to_f64());
        if let Some(rho) = ratio_bound(&upper, &lower, zf, (used - 1) as f64).filter(|r| *r < 1.0) {
            tail = t_abs * rho / (1.0 - rho);
            if tail <= target * 0.5 {
                break;
            }
        }
    }
    let round_err = used as f64 * sum.epsilon() * max_abs;
    Ok(SumResult {
        value: sum.with_precision(out_bits),
        trunc_err: tail,
        round_err,
        terms_used: used,
        method: Method::Geometric,
        converged: tail + round_err <= target,
        tail_bound: Some(tail),
    })
}
