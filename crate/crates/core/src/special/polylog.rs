//! Polylogarithms `Li_p(x)` on `[-1, 1]`.

use crate::error::{domain, Result};
use crate::numeric::{PrecisionCtx, Scalar};
use crate::series::{accel_bits, sum_adaptive, DecayClass, SumResult, TermSeq};

/// `sum_{n>=1} x^n / n^p`.
///
/// Geometric summation for `|x| <= 1/2` and `0 < x < 1`, CVZ for
/// `-1 <= x < -1/2`, Levin at `x = 1` (with the integral tail bound
/// `N^(1-p)/(p-1)` reported next to the heuristic error).
pub fn polylog<T: Scalar>(p: u32, x: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    if p == 0 {
        return domain("polylog needs p >= 1");
    }
    let one = T::one();
    if *x > one || *x < -one.clone() {
        return domain(format!("polylog is evaluated on [-1, 1], got {x:.20}"));
    }
    let at_one = *x == one;
    if at_one && p == 1 {
        return domain("Li_1 diverges at x = 1");
    }
    if x.is_zero() {
        return Ok(SumResult::exact(T::zero().with_precision(ctx.precision_bits())));
    }
    let half = T::from_ratio(1, 2, 64);
    let p_i = p as i32;
    let mut res = if at_one {
        let bits = accel_bits(ctx);
        let seq = TermSeq::new(1, DecayClass::Algebraic { exponent: p as f64 }, move |n| {
            T::one() / T::from_int(n as i64, bits).powi(p_i)
        });
        let mut r = sum_adaptive(seq, ctx);
        if p > 1 {
            let n = r.terms_used.max(1) as f64;
            r.tail_bound = Some(n.powf(1.0 - p as f64) / (p as f64 - 1.0));
        }
        r
    } else if *x < -half {
        let bits = accel_bits(ctx);
        let xb = x.with_precision(bits);
        let mut pow = T::from_int(1, bits);
        let seq = TermSeq::new(1, DecayClass::Alternating, move |n| {
            pow *= &xb;
            pow.clone() / T::from_int(n as i64, bits).powi(p_i)
        });
        sum_adaptive(seq, ctx)
    } else {
        let bits = ctx.bits_for_terms(ctx.max_geometric_terms());
        let xb = x.with_precision(bits);
        let rho = xb.abs().to_f64();
        let mut pow = T::from_int(1, bits);
        let seq = TermSeq::new(1, DecayClass::Geometric { ratio_bound: rho }, move |n| {
            pow *= &xb;
            pow.clone() / T::from_int(n as i64, bits).powi(p_i)
        });
        sum_adaptive(seq, ctx)
    };
    res.value = res.value.with_precision(ctx.precision_bits());
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Field, Mpf};
    use num_traits::Zero;

    #[test]
    fn li1_half_is_log2() {
        let ctx = PrecisionCtx::default();
        let v = polylog(1, &Mpf::from_ratio(1, 2, 256), &ctx).unwrap();
        assert!((v.value - Mpf::ln2(256)).abs().to_f64() < 1e-30);
        assert!(v.converged);
    }

    #[test]
    fn domain_and_zero() {
        let ctx = PrecisionCtx::default();
        assert!(polylog(1, &Mpf::from_int(1, 256), &ctx).is_err());
        assert!(polylog(2, &Mpf::from_int(2, 256), &ctx).is_err());
        let z = polylog(3, &Mpf::from_int(0, 256), &ctx).unwrap();
        assert!(z.value.is_zero());
    }

    #[test]
    fn li2_at_one_and_minus_one() {
        let ctx = PrecisionCtx::default();
        let pi2 = Mpf::pi(256).powi(2);
        let v = polylog(2, &Mpf::from_int(1, 256), &ctx).unwrap();
        assert!((v.value - pi2.clone() / Mpf::from_int(6, 256)).abs().to_f64() < 1e-30);
        let v = polylog(2, &Mpf::from_int(-1, 256), &ctx).unwrap();
        assert!((v.value + pi2 / Mpf::from_int(12, 256)).abs().to_f64() < 1e-30);
    }
}
