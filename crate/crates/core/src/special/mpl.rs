//! `zeta({2}_r)` and the depth-`r` multiple polylogarithm `Li_{{2}_r}(x)`.
//!
//! With `f_r = Li_{{2}_r}` and `g_r = Li_{1,{2}_{r-1}}` one has
//! `x f_r' = g_r` and `(1 - x) g_r' = f_{r-1}`, `f_0 = 1`. In `v = 1 - x`
//! both functions are power series in `v` plus `log v` times power series,
//! which is what [`MplNearOne`] carries for `1/2 < x < 1`.

use crate::error::{domain, Result};
use crate::finite_sums::Row2r;
use crate::numeric::{PrecisionCtx, Scalar, GUARD_BITS};
use crate::series::{accel_bits, sum_adaptive, DecayClass, Method, SumResult, TermSeq};

/// `zeta({2}_r) = pi^{2r} / (2r+1)!`.
pub fn zeta_2r<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> T {
    let bits = ctx.precision_bits();
    let mut fact = T::from_int(1, bits);
    for j in 2..=(2 * r + 1) as i64 {
        fact *= T::from_int(j, bits);
    }
    T::pi(bits).powi(2 * r as i32) / fact
}

/// Direct series for `f_s(x)` and `g_s(x)`, `s = 1..=r`, with a rigorous
/// tail bound; needs `0 <= x <= 1/2`.
///
/// Returns `(f, g, err, terms)`.
fn direct_pair<T: Scalar>(r: usize, x: &T, bits: u32) -> (Vec<T>, Vec<T>, f64, usize) {
    let tiny = 2f64.powi(-(bits as i32));
    let xv = x.with_precision(bits);
    let rho = xv.to_f64();
    let mut f = vec![T::zero(); r];
    let mut g = vec![T::zero(); r];
    let mut row = Row2r::<T>::new(r.saturating_sub(1), bits);
    let mut pow = T::from_int(1, bits);
    let mut n = 0usize;
    let mut tail = f64::INFINITY;
    while n < 100_000 {
        n += 1;
        pow *= &xv;
        let inv_n = T::from_ratio(1, n as i64, bits);
        let base = pow.clone() * &inv_n;
        for s in 0..r {
            // coefficient zeta_{n-1}({2}_s), read before advancing to n
            let c = row.plain(s).clone() * &base;
            f[s] += c.clone() * &inv_n;
            g[s] += c;
        }
        row.advance();
        if rho == 0.0 {
            tail = 0.0;
            break;
        }
        // zeta_{m}({2}_s) <= 2, so the g tail is <= 2 x^{n+1} / ((n+1)(1-x))
        tail = 2.0 * rho.powi(n as i32 + 1) / ((n + 1) as f64 * (1.0 - rho));
        if tail < tiny {
            break;
        }
    }
    (f, g, tail, n)
}

/// Coefficients of `sum_n (p_n + q_n log v) v^n`.
#[derive(Debug, Clone)]
struct LogSeries<T> {
    p: Vec<T>,
    q: Vec<T>,
}

impl<T: Scalar> LogSeries<T> {
    fn zero(len: usize) -> Self {
        LogSeries { p: vec![T::zero(); len], q: vec![T::zero(); len] }
    }

    /// Multiplication by `1/(1-v)`: prefix sums.
    fn over_one_minus(&self) -> Self {
        let mut out = self.clone();
        for n in 1..out.p.len() {
            let (pp, qq) = (out.p[n - 1].clone(), out.q[n - 1].clone());
            out.p[n] += pp;
            out.q[n] += qq;
        }
        out
    }

    /// `(h(v) - h(0)) / v`; the `log v` part must vanish at order 0.
    fn drop_constant_over_v(&self) -> Self {
        let len = self.p.len();
        let mut out = Self::zero(len);
        for n in 0..len - 1 {
            out.p[n] = self.p[n + 1].clone();
            out.q[n] = self.q[n + 1].clone();
        }
        out
    }

    /// `int_0^v`, using `int_0^v u^n log u du = v^{n+1} (log v/(n+1) - 1/(n+1)^2)`.
    fn integrate(&self, bits: u32) -> Self {
        let len = self.p.len();
        let mut out = Self::zero(len);
        for n in 0..len - 1 {
            let m = (n + 1) as i64;
            let inv = T::from_ratio(1, m, bits);
            out.p[n + 1] = self.p[n].clone() * &inv - self.q[n].clone() * &inv * &inv;
            out.q[n + 1] = self.q[n].clone() * &inv;
        }
        out
    }

    fn neg(mut self) -> Self {
        for c in self.p.iter_mut().chain(self.q.iter_mut()) {
            *c = -c.clone();
        }
        self
    }

    /// Value and a bound on the size of the last retained term.
    fn eval(&self, v: &T) -> (T, f64) {
        let log_v = v.ln();
        let mut a = T::zero();
        let mut b = T::zero();
        for (p, q) in self.p.iter().rev().zip(self.q.iter().rev()) {
            a = a * v + p;
            b = b * v + q;
        }
        let len = self.p.len();
        let last = (self.p[len - 1].abs().to_f64() + self.q[len - 1].abs().to_f64() * log_v.abs().to_f64())
            * v.to_f64().powi(len as i32 - 1);
        (a + b * log_v, last)
    }
}

/// Expansion of `Li_{{2}_r}(1 - v)` around `v = 0`, valid for `0 < v <= 1/2`.
///
/// Integration constants are fixed by matching the direct series at
/// `x = 1/2`; `levels` keeps the fitted `(C_s, Z_s)` where `Z_s` is the
/// constant term of `f_s` (its value at `x = 1`) and `C_s` that of `g_s`.
#[derive(Debug, Clone)]
pub struct MplNearOne<T> {
    r: usize,
    bits: u32,
    f: LogSeries<T>,
    levels: Vec<(T, T)>,
    fit_err: f64,
}

impl<T: Scalar> MplNearOne<T> {
    pub fn new(r: usize, ctx: &PrecisionCtx) -> Result<Self> {
        if r == 0 {
            return domain("mpl_2r needs r >= 1");
        }
        let bits = ctx.precision_bits() + GUARD_BITS + 16;
        let len = bits as usize + 64;
        let half = T::from_ratio(1, 2, bits);
        let (f_half, g_half, direct_err, _) = direct_pair(r, &half, bits);
        // f_0 = 1
        let mut f_prev = LogSeries::zero(len);
        f_prev.p[0] = T::from_int(1, bits);
        let mut levels = Vec::with_capacity(r);
        let mut fit_err = direct_err;
        for s in 0..r {
            // dg/dv = -f_{s-1}/v: the constant of f_{s-1} gives -Z log v
            let mut g = f_prev.drop_constant_over_v().integrate(bits).neg();
            g.q[0] = -f_prev.p[0].clone();
            let (g_val, g_last) = g.eval(&half);
            let c = g_half[s].clone() - g_val;
            g.p[0] = c.clone();
            // df/dv = -g/(1-v)
            let mut f = g.over_one_minus().integrate(bits).neg();
            let (f_val, f_last) = f.eval(&half);
            let z = f_half[s].clone() - f_val;
            f.p[0] = z.clone();
            fit_err += 4.0 * (g_last + f_last);
            levels.push((c, z));
            f_prev = f;
        }
        Ok(MplNearOne { r, bits, f: f_prev, levels, fit_err })
    }

    pub fn depth(&self) -> usize {
        self.r
    }

    /// Fitted `(C_s, Z_s)` for `s = 1..=r`.
    pub fn constants(&self) -> &[(T, T)] {
        &self.levels
    }

    /// `Li_{{2}_r}(1 - v)` for `0 < v <= 1/2`, with an error estimate.
    pub fn eval_v(&self, v: &T) -> (T, f64) {
        let v = v.with_precision(self.bits);
        let (val, last) = self.f.eval(&v);
        let rho = v.to_f64();
        let trunc = 4.0 * last / (1.0 - rho);
        (val, trunc + self.fit_err * (1.0 + self.r as f64))
    }
}

/// `Li_{{2}_r}(x) = sum_{n>=1} zeta_{n-1}({2}_{r-1}) x^n / n^2` on `[0, 1]`.
///
/// Direct series for `x <= 1/2`, the expansion at `x = 1` for
/// `1/2 < x < 1`, Levin on the defining series at `x = 1`.
pub fn mpl_2r<T: Scalar>(r: usize, x: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    if r == 0 {
        return domain("mpl_2r needs r >= 1");
    }
    let one = T::one();
    if x.lt_zero() || *x > one {
        return domain(format!("mpl_2r is evaluated on [0, 1], got {x:.20}"));
    }
    let out_bits = ctx.precision_bits();
    let half = T::from_ratio(1, 2, 64);
    if *x <= half {
        let bits = ctx.precision_bits() + GUARD_BITS;
        let (f, _, err, terms) = direct_pair(r, x, bits);
        let value = f[r - 1].with_precision(out_bits);
        let round_err = value.abs().to_f64() * value.epsilon() * 8.0;
        return Ok(SumResult {
            value,
            trunc_err: err,
            round_err,
            terms_used: terms,
            method: Method::Geometric,
            converged: err + round_err <= ctx.target_abs_err(),
            tail_bound: Some(err),
        });
    }
    if *x == one {
        let bits = accel_bits(ctx);
        let mut row = Row2r::<T>::new(r - 1, bits);
        for _ in 0..r - 1 {
            row.advance();
        }
        // first nonzero term is n = r
        let seq = TermSeq::new(r, DecayClass::Algebraic { exponent: 2.0 }, move |n| {
            let c = row.plain(r - 1).clone();
            row.advance();
            c / T::from_int((n * n) as i64, bits)
        });
        let mut res = sum_adaptive(seq, ctx);
        res.value = res.value.with_precision(out_bits);
        return Ok(res);
    }
    let exp = MplNearOne::<T>::new(r, ctx)?;
    let v = one - x.clone();
    let (val, err) = exp.eval_v(&v);
    let value = val.with_precision(out_bits);
    let round_err = value.abs().to_f64() * value.epsilon() * 8.0;
    Ok(SumResult {
        value,
        trunc_err: err,
        round_err,
        terms_used: exp.bits as usize + 64,
        method: Method::Direct,
        converged: err + round_err <= ctx.target_abs_err(),
        tail_bound: None,
    })
}
