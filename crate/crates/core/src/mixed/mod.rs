//! Mixed values `sum_n Hbar_{2n} zeta_{n-1}({2}_{r-1}) / n^2` and the
//! routes used to cross-check them: an integral of `Li_{{2}_r}(t^2)`, the
//! central-binomial series, and the `t_n`/`H_n` weighted sums.

mod quadrature;

pub use quadrature::{cached_rule, QuadratureRule};

use crate::error::{domain, Result};
use crate::finite_sums::Row2r;
use crate::numeric::{PrecisionCtx, Scalar, GUARD_BITS};
use crate::series::{
    accel_bits, apery_series, cvz_sum, cvz_terms_for_bits, sum_adaptive, sum_nested_weighted, DecayClass, Method,
    NestedLevel, SumResult, TermSeq,
};
use crate::special::{mpl_2r, zeta_2r, zeta_int, MplNearOne};

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        domain("mixed values need r >= 1")
    } else {
        Ok(())
    }
}

/// `Hbar_{2n} + log 2 = sum_{i>=0} (-1)^i / (2n+1+i)`, by CVZ.
pub fn alt_tail<T: Scalar>(n: usize, bits: u32) -> T {
    let m = cvz_terms_for_bits(bits + 8);
    let a: Vec<T> = (0..m).map(|i| T::from_ratio(1, (2 * n + 1 + i) as i64, bits)).collect();
    cvz_sum(&a, bits)
}

/// Generator of `zeta_{n-1}({2}_{r-1}) / n^2` from `n = r`, the first
/// nonzero term.
fn inner_weights<T: Scalar>(r: usize, bits: u32) -> impl FnMut() -> (usize, T) {
    let mut row = Row2r::<T>::new(r - 1, bits);
    for _ in 1..r {
        row.advance();
    }
    move || {
        let c = row.plain(r - 1).clone();
        row.advance();
        let n = row.n();
        (n, c / T::from_int((n * n) as i64, bits))
    }
}

/// `sum_{n>=1} Hbar_{2n} zeta_{n-1}({2}_{r-1}) / n^2`, split as
/// `-log 2 * zeta({2}_r) + sum R_n zeta_{n-1}({2}_{r-1}) / n^2`.
pub fn mixed_lhs<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    check_r(r)?;
    let bits = accel_bits(ctx);
    let mut w = inner_weights::<T>(r, bits);
    let seq = TermSeq::new(r, DecayClass::Algebraic { exponent: 3.0 }, move |_| {
        let (n, c) = w();
        alt_tail::<T>(n, bits) * c
    });
    let rem = sum_adaptive(seq, ctx);
    let wide = ctx.at_bits(ctx.precision_bits() + GUARD_BITS);
    let head = -(T::ln2(wide.precision_bits()) * zeta_2r::<T>(r, &wide));
    let mut out = rem.map(|v| (v + head).with_precision(ctx.precision_bits()), 1.0);
    out.round_err += out.value.abs().to_f64() * out.value.epsilon();
    Ok(out)
}

/// `sum_{j=1}^r (-1)^j (1 - 4^-j) zeta({2}_{r-j}) zeta(2j+1)`.
pub fn mixed_rhs<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> Result<T> {
    check_r(r)?;
    let bits = ctx.precision_bits() + GUARD_BITS;
    let wide = ctx.at_bits(bits);
    let mut acc = T::from_int(0, bits);
    for j in 1..=r {
        let four = T::from_int(4, bits).powi(j as i32);
        let c = T::from_int(1, bits) - T::from_int(1, bits) / four;
        let term = c * zeta_2r::<T>(r - j, &wide) * zeta_int::<T>(2 * j as u32 + 1, &wide)?;
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc.with_precision(ctx.precision_bits()))
}

/// Exponent of the substitution `t = 1 - u^p` that smooths the
/// `(1-t) log(1-t)` behaviour of the integrand at `t = 1`.
const SUBST_POWER: i32 = 5;

/// `2 int_0^1 Li_{{2}_r}(t^2) / (1 + t) dt` by Gauss–Legendre in `u`,
/// doubling the node count from 32 to 1024.
pub fn integral_li<T: Scalar + 'static>(r: usize, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    check_r(r)?;
    let bits = ctx.precision_bits() + GUARD_BITS;
    let wide = ctx.at_bits(bits);
    let near = MplNearOne::<T>::new(r, &wide)?;
    let one = T::from_int(1, bits);
    let two = T::from_int(2, bits);
    let p = T::from_int(SUBST_POWER as i64, bits);
    let half = T::from_ratio(1, 2, bits);
    let eval = |u: &T| -> Result<(T, f64)> {
        let up = u.powi(SUBST_POWER);
        let t = one.clone() - &up;
        let v = up.clone() * (two.clone() - &up);
        let (li, err) = if v >= half {
            let x = t.clone() * &t;
            let s = mpl_2r::<T>(r, &x, &wide)?;
            let e = s.est_err();
            (s.value, e)
        } else {
            near.eval_v(&v)
        };
        let jac = p.clone() * u.powi(SUBST_POWER - 1) * &two / (one.clone() + &t);
        let ja = jac.abs().to_f64();
        Ok((li * jac, err * ja))
    };
    let mut prev: Option<T> = None;
    let mut n = 32;
    let mut last_diff = f64::INFINITY;
    loop {
        let rule = cached_rule::<T>(n, bits);
        let mut acc = T::from_int(0, bits);
        let mut err = 0.0;
        for (u, w) in rule.nodes.iter().zip(&rule.weights) {
            let (f, e) = eval(u)?;
            acc += f * w;
            err += e * w.to_f64();
        }
        let eval_err = err;
        if let Some(pv) = &prev {
            last_diff = (acc.clone() - pv).abs().to_f64();
        }
        let done = last_diff + eval_err <= ctx.target_abs_err();
        if done || n >= 1024 {
            let value = acc.with_precision(ctx.precision_bits());
            let round_err = value.abs().to_f64() * value.epsilon() * 4.0;
            return Ok(SumResult {
                value,
                trunc_err: last_diff + eval_err,
                round_err,
                terms_used: n,
                method: Method::Quadrature,
                converged: done,
                tail_bound: None,
            });
        }
        prev = Some(acc);
        n *= 2;
    }
}

/// The integral against `sum_{j=1}^{r+1} (-1)^{j+1} zeta({2}_{r-j+1}) S_{j-1}`,
/// `S_i` the central-binomial series with `zeta_n^*({2}_i)`.
///
/// Returns `(series side, integral side)`.
pub fn integral_binomial_check<T: Scalar + 'static>(r: usize, ctx: &PrecisionCtx) -> Result<(SumResult<T>, SumResult<T>)> {
    check_r(r)?;
    let bits = ctx.precision_bits();
    let mut lhs = SumResult::exact(T::from_int(0, bits));
    lhs.method = Method::Levin;
    for j in 1..=r + 1 {
        let z = zeta_2r::<T>(r + 1 - j, ctx);
        let s = apery_series::<T>(j - 1, ctx);
        let scale = if j % 2 == 1 { z } else { -z };
        lhs = lhs.add_scaled(&s, &scale);
        lhs.converged &= s.converged;
    }
    let rhs = integral_li::<T>(r, ctx)?;
    Ok((lhs, rhs))
}

/// `2 sum_{n>=1} Hbar_{2n} zeta_{n-1}({2}_{r-1}) / n^2`, summed with the
/// alternating harmonic numbers themselves rather than the split used in
/// [`mixed_lhs`].
pub fn alt_double_sum<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    check_r(r)?;
    let bits = accel_bits(ctx);
    let mut w = inner_weights::<T>(r, bits);
    let mut hbar: T = T::from_rat(&crate::finite_sums::alt_harmonic(2 * (r - 1)), bits);
    let seq = TermSeq::new(r, DecayClass::Algebraic { exponent: 2.0 }, move |_| {
        let (n, c) = w();
        let n = n as i64;
        hbar += T::from_ratio(1, 2 * n, bits) - T::from_ratio(1, 2 * n - 1, bits);
        hbar.clone() * c * T::from_int(2, bits)
    });
    let mut res = sum_adaptive(seq, ctx);
    res.value = res.value.with_precision(ctx.precision_bits());
    Ok(res)
}

/// `sum_{n>=1} c_n zeta_{n-1}({2}_{r-1}) / n^2` with `c_n = sum_{m<=n} 1/(m + shift)`.
///
/// Terms vanish for `n < r`, so `c_n = c_{r-1} + sum_{r<=m<=n}` is split
/// off and the nested sum is reindexed to start at `n = r`.
fn harmonic_weighted<T: Scalar>(r: usize, shift: T, ctx: &PrecisionCtx) -> SumResult<T> {
    let bits = accel_bits(ctx);
    let weight = move |m: usize| T::from_int(1, bits) / (T::from_int(m as i64, bits) + &shift);
    let mut head = T::from_int(0, bits);
    for m in 1..r {
        head += weight(m);
    }
    let mut w = inner_weights::<T>(r, bits);
    let level = NestedLevel::new(false, move |m| weight(m + r - 1));
    let mut res = sum_nested_weighted(|_| w().1, &[level], ctx);
    if r > 1 {
        let mut w = inner_weights::<T>(r, bits);
        let seq = TermSeq::new(r, DecayClass::Algebraic { exponent: 2.0 }, move |_| w().1);
        let plain = sum_adaptive(seq, ctx);
        res = res.add_scaled(&plain, &head);
    }
    res.value = res.value.with_precision(ctx.precision_bits());
    res
}

/// `sum t_n zeta_{n-1}({2}_{r-1}) / n^2` against
/// `sum H_n zeta_{n-1}({2}_{r-1}) / n^2 - 2 * mixed_rhs(r)`.
pub fn t_relation_check<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> Result<(SumResult<T>, SumResult<T>)> {
    check_r(r)?;
    let bits = accel_bits(ctx);
    let lhs = harmonic_weighted(r, -T::from_ratio(1, 2, bits), ctx);
    let h = harmonic_weighted(r, T::from_int(0, bits), ctx);
    let m = mixed_rhs::<T>(r, ctx)?;
    let rhs = h.map(|v| v - m * T::from_int(2, bits), 1.0);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Field, Mpf};

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::default()
    }

    fn z(s: u32) -> Mpf {
        Mpf::from_float(rug::Float::with_val(256, rug::Float::zeta_u(s)))
    }

    #[test]
    fn alt_tail_bracket() {
        for n in [1usize, 2, 10, 500] {
            let t: Mpf = alt_tail(n, 256);
            let v = t.to_f64();
            assert!(v > 0.0 && v < 1.0 / (4.0 * n as f64), "n={n}: {v}");
        }
        let t1: Mpf = alt_tail(1, 256);
        let expect = Mpf::ln2(256) - Mpf::from_ratio(1, 2, 256);
        assert!((t1 - expect).abs().to_f64() < 1e-70);
    }

    #[test]
    fn mixed_r1_and_r2() {
        let l1: SumResult<Mpf> = mixed_lhs(1, &ctx()).unwrap();
        let expect = -(z(3) * Mpf::from_ratio(3, 4, 256));
        assert!((l1.value.clone() - &expect).abs().to_f64() < 1e-25, "{:e}", l1.est_err());
        let r1: Mpf = mixed_rhs(1, &ctx()).unwrap();
        assert!((r1 - expect).abs().to_f64() < 1e-60);
        let l2: SumResult<Mpf> = mixed_lhs(2, &ctx()).unwrap();
        let zeta2 = Mpf::pi(256).powi(2) / Mpf::from_int(6, 256);
        let e2 = -(zeta2 * z(3) * Mpf::from_ratio(3, 4, 256)) + z(5) * Mpf::from_ratio(15, 16, 256);
        assert!((l2.value - e2).abs().to_f64() < 1e-25);
    }

    #[test]
    fn integral_r1_closed_value() {
        let res: SumResult<Mpf> = integral_li(1, &ctx().with_target(1e-20).unwrap()).unwrap();
        let zeta2 = Mpf::pi(256).powi(2) / Mpf::from_int(6, 256);
        let expect = zeta2 * Mpf::ln2(256) * Mpf::from_int(2, 256) - z(3) * Mpf::from_ratio(3, 2, 256);
        let err = (res.value.clone() - expect).abs().to_f64();
        assert!(err < 1e-20, "err {err:e} est {:e} nodes {}", res.est_err(), res.terms_used);
        assert!(res.converged);
    }

    #[test]
    fn double_sum_is_twice_mixed() {
        for r in 1..3 {
            let d: SumResult<Mpf> = alt_double_sum(r, &ctx()).unwrap();
            let m: SumResult<Mpf> = mixed_lhs(r, &ctx()).unwrap();
            let e = (d.value.clone() - m.value * Mpf::from_int(2, 256)).abs().to_f64();
            assert!(e < 1e-20, "r={r}: {e:e}");
            assert!(d.value.lt_zero());
        }
    }

    #[test]
    fn t_relation_holds() {
        for r in 1..3 {
            let (l, rr) = t_relation_check::<Mpf>(r, &ctx()).unwrap();
            let e = (l.value - rr.value).abs().to_f64();
            assert!(e < 1e-20, "r={r}: {e:e}");
        }
    }

    #[test]
    fn r_zero_rejected() {
        assert!(mixed_lhs::<Mpf>(0, &ctx()).is_err());
        assert!(integral_li::<Mpf>(0, &ctx()).is_err());
    }
}
