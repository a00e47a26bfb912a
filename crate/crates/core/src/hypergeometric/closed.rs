//! Digamma closed form, the functional form in `t`, the quadratic
//! transformation and Gauss's summation theorem.

use crate::error::{domain, Result};
use crate::finite_sums::pochhammer;
use crate::numeric::{PrecisionCtx, Scalar, GUARD_BITS};
use crate::series::{sum_adaptive, DecayClass, SumResult, TermSeq};
use crate::special::{as_integer, digamma, gamma_quotient};

use super::{hyp_eval, HypParams};

/// `3F2(1,1,3/2; 2-x, 2+x; 1)` through digamma values, `|x| < 1`.
pub fn closed_3f2_x<T: Scalar>(x: &T, ctx: &PrecisionCtx) -> Result<T> {
    let one = T::one();
    if !(x.abs() < one) {
        return domain(format!("closed_3f2_x needs |x| < 1, got {x:.20}"));
    }
    let bits = ctx.precision_bits() + GUARD_BITS;
    let wctx = ctx.at_bits(bits);
    let x = x.with_precision(bits);
    let one = T::from_int(1, bits);
    let half_x = x.clone() / T::from_int(2, bits);
    let w = one.clone() - x.clone() * &x;
    let psi_half = digamma(&(one.clone() - half_x.clone()), &wctx)? + digamma(&(one.clone() + half_x), &wctx)?;
    let psi_full = digamma(&(one.clone() - x.clone()), &wctx)? + digamma(&(one + x), &wctx)?;
    let two = T::from_int(2, bits);
    let v = T::ln2(bits) * T::from_int(4, bits) * &w + two.clone() * &w * psi_half - two * w * psi_full;
    Ok(v.with_precision(ctx.precision_bits()))
}

/// `3F2(1,1,3/2; 2-x, 2+x; 1-t)` from the geometric series in
/// `w = (sqrt t - 1)/(sqrt t + 1)`, `0 < t < 1`.
pub fn functional_3f2<T: Scalar>(x: &T, t: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    let one = T::one();
    if !(*t > T::zero() && *t < one) {
        return domain(format!("functional_3f2 needs 0 < t < 1, got {t:.20}"));
    }
    if as_integer(x).is_some_and(|n| n != 0) {
        return domain(format!("x = {x:.20} is a nonzero integer"));
    }
    let bits = ctx.bits_for_terms(ctx.max_geometric_terms());
    let x = x.with_precision(bits);
    let t = t.with_precision(bits);
    let st = t.sqrt();
    let one = T::from_int(1, bits);
    let w = (st.clone() - &one) / (st + &one);
    let term = |n: usize, wn: &T| -> T {
        let nn = T::from_int(n as i64, bits);
        wn.clone() * (T::one() / (x.clone() - &nn) - T::one() / (x.clone() + nn))
    };
    // n/(n^2 - x^2) decreases once n > |x|: sum the head directly
    let n0 = x.abs().to_f64().floor() as usize + 2;
    let mut wn = T::from_int(1, bits);
    let mut head = T::zero();
    for n in 1..n0 {
        wn *= &w;
        head += term(n, &wn);
    }
    let rho = w.abs().to_f64();
    let (wc, mut pw) = (w.clone(), wn);
    let seq = TermSeq::new(n0, DecayClass::Geometric { ratio_bound: rho }, move |n| {
        pw *= &wc;
        term(n, &pw)
    });
    let res = sum_adaptive(seq, ctx);
    let scale = T::from_int(2, bits) * (one.clone() - x.clone() * &x) / (one - t);
    let s = scale.abs().to_f64();
    let mut out = res.map(|v| (v + head) * &scale, s);
    out.terms_used += n0 - 1;
    out.value = out.value.with_precision(ctx.precision_bits());
    Ok(out)
}

/// Both sides of
/// `3F2(a,b,c; a-b+1, a-c+1; z) = (1-z)^-a 3F2(a-b-c+1, a/2, (a+1)/2; a-b+1, a-c+1; -4z/(1-z)^2)`
/// for `-1 <= z < 0`.
pub fn quad_transform_check<T: Scalar>(
    a: &T,
    b: &T,
    c: &T,
    z: &T,
    ctx: &PrecisionCtx,
) -> Result<(SumResult<T>, SumResult<T>)> {
    let one = T::one();
    if !(z.lt_zero() && *z >= -one.clone()) {
        return domain(format!("quad_transform_check needs -1 <= z < 0, got {z:.20}"));
    }
    let bits = ctx.precision_bits() + GUARD_BITS;
    let (a, b, c, z) = (a.with_precision(bits), b.with_precision(bits), c.with_precision(bits), z.with_precision(bits));
    let one = T::from_int(1, bits);
    let two = T::from_int(2, bits);
    let lower = vec![a.clone() - &b + &one, a.clone() - &c + &one];
    let lhs = hyp_eval(&HypParams::new(vec![a.clone(), b.clone(), c.clone()], lower.clone(), z.clone()), ctx)?;
    let omz = one.clone() - &z;
    let arg = -(T::from_int(4, bits) * &z) / (omz.clone() * &omz);
    // at z = -1 the argument is 1 up to rounding; make it exact
    let arg = if (arg.clone() - &one).abs().to_f64() < arg.epsilon() * 16.0 { one.clone() } else { arg };
    let upper = vec![a.clone() - &b - &c + &one, a.clone() / &two, (a.clone() + &one) / &two];
    let inner = hyp_eval(&HypParams::new(upper, lower, arg), ctx)?;
    let factor = (-(a * omz.ln())).exp();
    let f = factor.abs().to_f64();
    let mut rhs = inner.map(|v| v * &factor, f);
    rhs.value = rhs.value.with_precision(ctx.precision_bits());
    Ok((lhs, rhs))
}

/// `2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
///
/// A nonpositive integer `a` (or `b`) `= -m` uses the terminating form
/// `(c-b)_m / (c)_m`.
pub fn gauss_2f1_unit<T: Scalar>(a: &T, b: &T, c: &T, ctx: &PrecisionCtx) -> Result<T> {
    let bits = ctx.precision_bits() + GUARD_BITS;
    let (a, b, c) = (a.with_precision(bits), b.with_precision(bits), c.with_precision(bits));
    for (p, other) in [(&a, &b), (&b, &a)] {
        if let Some(m) = as_integer(p).filter(|&m| m <= 0) {
            let m = (-m) as usize;
            let den = pochhammer(&c, m, bits);
            if den.is_zero() {
                return domain("Gauss sum: c is a nonpositive integer");
            }
            let v = pochhammer(&(c.clone() - other), m, bits) / den;
            return Ok(v.with_precision(ctx.precision_bits()));
        }
    }
    let s = c.clone() - &a - &b;
    if !(s > T::zero()) || !(c > T::zero()) {
        return domain(format!("Gauss sum needs c > 0 and c - a - b > 0, got c = {c:.12}, c-a-b = {s:.12}"));
    }
    let v = gamma_quotient(&[c.clone(), s], &[c.clone() - &a, c - &b], &ctx.at_bits(bits))?;
    Ok(v.with_precision(ctx.precision_bits()))
}
