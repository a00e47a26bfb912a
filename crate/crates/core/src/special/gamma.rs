//! Digamma, log-gamma and gamma quotients for real arguments.

use crate::error::{domain, Result};
use crate::finite_sums::pochhammer;
use crate::numeric::{bernoulli, PrecisionCtx, Scalar, GUARD_BITS};

/// Argument below which the recurrence shifts upward before the asymptotic
/// series is used.
fn shift_threshold(bits: u32) -> f64 {
    (bits as f64 / 4.0).max(12.0)
}

/// Sum of the Bernoulli tail `sum_k B_2k / (scale(k) x^(2k - lag))` until
/// the terms drop below `2^-bits`.
fn bernoulli_tail<T: Scalar>(x: &T, bits: u32, scale: impl Fn(i64) -> i64, lag: i32) -> T {
    let tiny = 2f64.powi(-(bits as i32) - 8);
    let mut acc = T::zero();
    let inv_x2 = T::one() / (x.clone() * x);
    let mut pow = if lag == 0 { inv_x2.clone() } else { T::one() / x.clone() };
    for k in 1..=400i64 {
        let b = T::from_rat(&bernoulli(2 * k as usize), bits);
        let term = b * &pow / T::from_int(scale(k), bits);
        let mag = term.abs().to_f64();
        acc += term;
        if mag < tiny {
            break;
        }
        pow *= &inv_x2;
    }
    acc
}

fn check_positive<T: Scalar>(s: &T, name: &str) -> Result<()> {
    if s > &T::zero() {
        Ok(())
    } else {
        domain(format!("{name} needs a positive argument, got {s:.20}"))
    }
}

/// `psi(s)` for `s > 0`.
pub fn digamma<T: Scalar>(s: &T, ctx: &PrecisionCtx) -> Result<T> {
    check_positive(s, "digamma")?;
    let bits = ctx.precision_bits() + GUARD_BITS;
    let threshold = shift_threshold(bits);
    let mut x = s.with_precision(bits);
    let mut shift = T::zero();
    while x.to_f64() < threshold {
        shift -= T::one() / x.clone();
        x += T::one();
    }
    let half = T::from_ratio(1, 2, bits);
    let tail = bernoulli_tail(&x, bits, |k| 2 * k, 0);
    let v = x.ln() - half / x.clone() - tail + shift;
    Ok(v.with_precision(ctx.precision_bits()))
}

/// `log Gamma(s)` for `s > 0`.
pub fn log_gamma<T: Scalar>(s: &T, ctx: &PrecisionCtx) -> Result<T> {
    check_positive(s, "log_gamma")?;
    let bits = ctx.precision_bits() + GUARD_BITS;
    let threshold = shift_threshold(bits);
    let mut x = s.with_precision(bits);
    let mut prod = T::from_int(1, bits);
    while x.to_f64() < threshold {
        prod *= &x;
        x += T::one();
    }
    let half = T::from_ratio(1, 2, bits);
    let two_pi = T::pi(bits) * T::from_int(2, bits);
    let tail = bernoulli_tail(&x, bits, |k| 2 * k * (2 * k - 1), 1);
    let v = (x.clone() - &half) * x.ln() - x + half * two_pi.ln() + tail - prod.ln();
    Ok(v.with_precision(ctx.precision_bits()))
}

/// Nearest integer when `x` is an integer up to rounding.
pub(crate) fn as_integer<T: Scalar>(x: &T) -> Option<i64> {
    let f = x.to_f64();
    if !f.is_finite() || f.abs() > 1e15 {
        return None;
    }
    let n = f.round();
    let gap = (x.clone() - T::from_int(n as i64, x.precision())).abs().to_f64();
    (gap <= x.epsilon() * 64.0 * f.abs().max(1.0)).then_some(n as i64)
}

/// `Gamma(s)` for real `s` off the poles, using reflection for `s < 0`.
pub fn gamma<T: Scalar>(s: &T, ctx: &PrecisionCtx) -> Result<T> {
    if let Some(n) = as_integer(s) {
        if n <= 0 {
            return domain(format!("Gamma has a pole at {n}"));
        }
    }
    if s > &T::zero() {
        return Ok(log_gamma(s, ctx)?.exp());
    }
    let bits = ctx.precision_bits() + GUARD_BITS;
    let s = s.with_precision(bits);
    let pi = T::pi(bits);
    let refl = gamma(&(T::one() - s.clone()), &ctx.at_bits(bits))?;
    Ok((pi.clone() / ((pi * s).sin() * refl)).with_precision(ctx.precision_bits()))
}

/// `prod Gamma(num_i) / prod Gamma(den_j)`.
///
/// Arguments differing by an integer are paired off as Pochhammer products;
/// the rest go through [`gamma`].
pub fn gamma_quotient<T: Scalar>(num: &[T], den: &[T], ctx: &PrecisionCtx) -> Result<T> {
    let bits = ctx.precision_bits() + GUARD_BITS;
    let wctx = ctx.at_bits(bits);
    let mut den_left: Vec<Option<T>> = den.iter().map(|d| Some(d.with_precision(bits))).collect();
    let mut acc = T::from_int(1, bits);
    for a in num {
        let a = a.with_precision(bits);
        let pair = den_left.iter().enumerate().find_map(|(j, d)| {
            let d = d.as_ref()?;
            let m = as_integer(&(a.clone() - d))?;
            (m.abs() <= 10_000).then_some((j, m))
        });
        match pair {
            // Gamma(d + m) / Gamma(d) = (d)_m, or its reciprocal for m < 0
            Some((j, m)) => {
                let d = den_left[j].take().expect("paired entry present");
                if m >= 0 {
                    acc *= pochhammer(&d, m as usize, bits);
                } else {
                    acc /= pochhammer(&a, (-m) as usize, bits);
                }
            }
            None => acc *= gamma(&a, &wctx)?,
        }
    }
    for d in den_left.into_iter().flatten() {
        acc /= gamma(&d, &wctx)?;
    }
    Ok(acc.with_precision(ctx.precision_bits()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Field, Mpf};

    fn ctx() -> PrecisionCtx {
        PrecisionCtx::default()
    }

    fn close(a: &Mpf, b: &Mpf, tol: f64) -> bool {
        (a.clone() - b).abs().to_f64() < tol
    }

    #[test]
    fn digamma_special_values() {
        let g = Mpf::euler_gamma(256);
        let one = Mpf::from_int(1, 256);
        assert!(close(&digamma(&one, &ctx()).unwrap(), &(-g.clone()), 1e-70));
        let two = Mpf::from_int(2, 256);
        assert!(close(&digamma(&two, &ctx()).unwrap(), &(one - &g), 1e-70));
        let half = Mpf::from_ratio(1, 2, 256);
        let expect = -g - Mpf::ln2(256) * Mpf::from_int(2, 256);
        assert!(close(&digamma(&half, &ctx()).unwrap(), &expect, 1e-70));
        assert!(digamma(&Mpf::from_int(0, 256), &ctx()).is_err());
    }

    #[test]
    fn log_gamma_special_values() {
        let lg = |s: Mpf| log_gamma(&s, &ctx()).unwrap();
        assert!(lg(Mpf::from_int(1, 256)).abs().to_f64() < 1e-70);
        assert!(close(&lg(Mpf::from_int(5, 256)), &Mpf::from_int(24, 256).ln(), 1e-70));
        let sqrt_pi_log = Mpf::pi(256).ln() / Mpf::from_int(2, 256);
        assert!(close(&lg(Mpf::from_ratio(1, 2, 256)), &sqrt_pi_log, 1e-70));
        assert!(log_gamma(&Mpf::from_int(-1, 256), &ctx()).is_err());
    }

    #[test]
    fn gamma_reflection_and_poles() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let v = gamma(&Mpf::from_ratio(-1, 2, 256), &ctx()).unwrap();
        let expect = -(Mpf::pi(256).sqrt() * Mpf::from_int(2, 256));
        assert!(close(&v, &expect, 1e-60));
        assert!(gamma(&Mpf::from_int(-2, 256), &ctx()).is_err());
        assert!(gamma(&Mpf::from_int(0, 256), &ctx()).is_err());
    }

    #[test]
    fn quotient_pairs_integer_offsets() {
        let b = |n, d| Mpf::from_ratio(n, d, 256);
        // Gamma(7/2) / Gamma(1/2) = (1/2)_3 = 15/8
        let q = gamma_quotient(&[b(7, 2)], &[b(1, 2)], &ctx()).unwrap();
        assert!(close(&q, &b(15, 8), 1e-70));
        // Gamma(2) Gamma(1) / Gamma(3/2)^2 = 4/pi
        let q = gamma_quotient(&[b(2, 1), b(1, 1)], &[b(3, 2), b(3, 2)], &ctx()).unwrap();
        assert!(close(&q, &(Mpf::from_int(4, 256) / Mpf::pi(256)), 1e-60));
    }
}
