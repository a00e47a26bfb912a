//! Partial-fraction representation of `3F2(1,a,b; 2-x, 2+x; 1)`.
//!
//! The bilateral sum over `k != 0` is taken in symmetric pairs `(k, -k)`;
//! each pair contributes `(-1)^k c_k 2k/(k^2 - x^2)` with
//! `c_k = (a)_{k-1} (b)_{k-1} k Gamma(3-a-b) / (Gamma(2+k-a) Gamma(2+k-b))`.

use crate::error::{domain, Result};
use crate::numeric::{PrecisionCtx, Scalar, GUARD_BITS};
use crate::series::{accel_bits, sum_adaptive, DecayClass, SumResult, TermSeq};
use crate::special::{as_integer, gamma_quotient};

fn check_x<T: Scalar>(x: &T) -> Result<()> {
    match as_integer(x) {
        Some(n) if n != 0 => domain(format!("x = {n} is a pole of the partial-fraction sum")),
        _ => Ok(()),
    }
}

/// `sum_{k>=1} (-1)^k m(k)` with `m` smooth for `k > |x|`: the head up to
/// `|x|` is added directly and the rest goes through CVZ. The result is
/// multiplied by `x^2 - 1`.
fn alternating_times_x2m1<T: Scalar>(
    x: &T,
    bits: u32,
    ctx: &PrecisionCtx,
    mut signed_term: impl FnMut(usize) -> T + 'static,
) -> SumResult<T> {
    let k0 = x.abs().to_f64().floor() as usize + 1;
    let mut head = T::zero();
    for k in 1..k0 {
        head += signed_term(k);
    }
    let seq = TermSeq::new(k0, DecayClass::Alternating, signed_term);
    let res = sum_adaptive(seq, ctx);
    let x = x.with_precision(bits);
    let scale = x.clone() * &x - T::one();
    let s = scale.abs().to_f64();
    let mut out = res.map(|v| (v + head) * &scale, s);
    out.terms_used += k0 - 1;
    out.value = out.value.with_precision(ctx.precision_bits());
    out
}

/// `3F2(1,a,b; 2-x, 2+x; 1)` by the paired partial-fraction sum.
///
/// `a, b` may be integers only if they are 0 or 1, and `a + b < 3`.
pub fn pf_3f2<T: Scalar>(a: &T, b: &T, x: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    for p in [a, b] {
        if let Some(n) = as_integer(p) {
            if n != 0 && n != 1 {
                return domain(format!("parameter {n} is an integer other than 0 or 1"));
            }
        }
    }
    let s = a.clone() + b;
    if !(s < T::from_int(3, 64)) {
        return domain(format!("pf_3f2 needs a + b < 3, got {s:.20}"));
    }
    check_x(x)?;
    let bits = accel_bits(ctx);
    let (a, b, xw) = (a.with_precision(bits), b.with_precision(bits), x.with_precision(bits));
    let three = T::from_int(3, bits);
    let c1 = gamma_quotient(
        &[three.clone() - &a - &b],
        &[three.clone() - &a, three - &b],
        &ctx.at_bits(bits + GUARD_BITS),
    )?;
    let x2 = xw.clone() * &xw;
    let mut c = c1;
    let mut sign = -T::one();
    let mut next_k = 1usize;
    let term = move |k: usize| -> T {
        debug_assert_eq!(k, next_k);
        if k > 1 {
            // c_k / c_{k-1} = (a+k-2)(b+k-2) k / ((k-1)(1+k-a)(1+k-b))
            let km = T::from_int(k as i64, bits);
            let two = T::from_int(2, bits);
            let one = T::from_int(1, bits);
            let num = (a.clone() + &km - &two) * (b.clone() + &km - &two) * &km;
            let den = (km.clone() - &one) * (one.clone() + &km - &a) * (one + &km - &b);
            c *= num / den;
            sign = -sign.clone();
        }
        next_k = k + 1;
        let kk = T::from_int(k as i64, bits);
        sign.clone() * &c * (kk.clone() * T::from_int(2, bits)) / (kk.clone() * &kk - &x2)
    };
    Ok(alternating_times_x2m1(x, bits, ctx, term))
}

/// One-sided form for `a = 1`:
/// `(x^2-1) sum_k (-1)^k (b)_{k-1}/(2-b)_k (1/(x+k) - 1/(x-k))`.
pub fn pf_3f2_one_sided<T: Scalar>(b: &T, x: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    if let Some(n) = as_integer(b) {
        if n != 0 && n != 1 {
            return domain(format!("parameter {n} is an integer other than 0 or 1"));
        }
    }
    if !(*b < T::from_int(2, 64)) {
        return domain(format!("one-sided form needs b < 2, got {b:.20}"));
    }
    check_x(x)?;
    let bits = accel_bits(ctx);
    let (b, xw) = (b.with_precision(bits), x.with_precision(bits));
    let one = T::from_int(1, bits);
    // d_1 = (b)_0 / (2-b)_1
    let mut d = one.clone() / (T::from_int(2, bits) - &b);
    let mut sign = -one.clone();
    let term = move |k: usize| -> T {
        let kk = T::from_int(k as i64, bits);
        if k > 1 {
            let km1 = T::from_int(k as i64 - 1, bits);
            d *= (b.clone() + &km1 - &one) / (T::from_int(2, bits) - &b + &km1);
            sign = -sign.clone();
        }
        sign.clone() * &d * (one.clone() / (xw.clone() + &kk) - one.clone() / (xw.clone() - kk))
    };
    Ok(alternating_times_x2m1(x, bits, ctx, term))
}

/// `(x^2-1) sum_k (-1)^k k / ((k^2 - 1/4)(k^2 - x^2))`.
pub fn pf_3f2_half<T: Scalar>(x: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    check_x(x)?;
    let bits = accel_bits(ctx);
    let xw = x.with_precision(bits);
    let x2 = xw.clone() * &xw;
    let quarter = T::from_ratio(1, 4, bits);
    let term = move |k: usize| -> T {
        let kk = T::from_int(k as i64, bits);
        let k2 = kk.clone() * &kk;
        let v = kk / ((k2.clone() - &quarter) * (k2 - &x2));
        if k % 2 == 1 { -v } else { v }
    };
    Ok(alternating_times_x2m1(x, bits, ctx, term))
}

/// `((x^2-1)/x) (1/x - pi / sin(pi x))`, `x` not an integer.
pub fn pf_3f2_sine<T: Scalar>(x: &T, ctx: &PrecisionCtx) -> Result<T> {
    if as_integer(x).is_some() {
        return domain(format!("x = {x:.20} is an integer"));
    }
    let bits = ctx.precision_bits() + GUARD_BITS;
    let x = x.with_precision(bits);
    let one = T::from_int(1, bits);
    let pi = T::pi(bits);
    let v = (x.clone() * &x - &one) / &x * (one / &x - pi.clone() / (pi * &x).sin());
    Ok(v.with_precision(ctx.precision_bits()))
}
