//! The central-binomial series weighted by `zeta_n^*({2}_r)`.

use crate::error::{domain, Result};
use crate::exact_series::sinc_series;
use crate::finite_sums::Row2r;
use crate::numeric::{PrecisionCtx, Scalar};

use super::{accel_bits, sum_adaptive, DecayClass, SumResult, TermSeq};

/// Generator of `C(2n,n)/4^n * zeta_n^*({2}_r) / n` for `n = 1, 2, ...`,
/// optionally times `q^n`.
pub struct AperyTerms<T> {
    row: Row2r<T>,
    r: usize,
    binom: T,
    power: T,
    q: Option<T>,
    bits: u32,
}

impl<T: Scalar> AperyTerms<T> {
    pub fn next_term(&mut self) -> T {
        self.row.advance();
        let n = self.row.n() as i64;
        self.binom *= T::from_ratio(2 * n - 1, 2 * n, self.bits);
        if let Some(q) = &self.q {
            self.power *= q;
        }
        self.binom.clone() * self.row.star(self.r) * &self.power / T::from_int(n, self.bits)
    }
}

pub fn apery_terms<T: Scalar>(r: usize, q: Option<T>, bits: u32) -> AperyTerms<T> {
    AperyTerms { row: Row2r::new(r, bits), r, binom: T::from_int(1, bits), power: T::from_int(1, bits), q, bits }
}

/// `zeta^*({2}_r) = pi^{2r} [u^r] 1/sinc`, from Euler's product for the sine.
pub fn zeta_star_2r<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> T {
    let bits = ctx.precision_bits();
    let c = sinc_series(r).inv().expect("sinc series starts with 1");
    T::from_rat(c.coeff(r), bits) * T::pi(bits).powi(2 * r as i32)
}

/// Rigorous bound on `sum_{n>N} C(2n,n)/4^n zeta_n^*({2}_r)/n`, from
/// `C(2n,n)/4^n <= 1/sqrt(pi n)` and `zeta_n^* <= zeta^*`:
/// `zeta^*({2}_r) * 2 / (sqrt(pi) sqrt(N))`.
pub fn tail_bound_cb(n: usize, r: usize) -> f64 {
    assert!(n >= 1, "tail bound needs N >= 1");
    let ctx = PrecisionCtx::default().at_bits(128);
    let zs: f64 = zeta_star_2r::<crate::Real>(r, &ctx).to_f64();
    // inflate by a few ulps so the f64 rounding never undercuts the bound
    zs * 2.0 / (std::f64::consts::PI.sqrt() * (n as f64).sqrt()) * (1.0 + 1e-14)
}

/// `sum_{n>=1} C(2n,n)/(n 4^n) zeta_n^*({2}_r)`, accelerated.
pub fn apery_series<T: Scalar>(r: usize, ctx: &PrecisionCtx) -> SumResult<T> {
    let bits = accel_bits(ctx);
    let mut gen = apery_terms::<T>(r, None, bits);
    let seq = TermSeq::new(1, DecayClass::Algebraic { exponent: 1.5 }, move |_| gen.next_term());
    let mut res = sum_adaptive(seq, ctx);
    res.value = res.value.with_precision(ctx.precision_bits());
    res.tail_bound = Some(tail_bound_cb(res.terms_used.max(1), r));
    res
}

/// `sum_{n>=1} C(2n,n)/(n 4^n) zeta_n^*({2}_r) (1-z)^n` for `0 < z <= 1`.
pub fn apery_series_z<T: Scalar>(r: usize, z: &T, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    if !(*z > T::zero() && *z <= T::one()) {
        return domain(format!("apery_series_z needs 0 < z <= 1, got {z:.20}"));
    }
    let bits = ctx.bits_for_terms(ctx.max_geometric_terms());
    let q = T::one() - z.with_precision(bits);
    let rho = q.to_f64().min(1.0);
    let mut gen = apery_terms::<T>(r, Some(q), bits);
    let seq = TermSeq::new(1, DecayClass::Geometric { ratio_bound: rho }, move |_| gen.next_term());
    let mut res = sum_adaptive(seq, ctx);
    res.value = res.value.with_precision(ctx.precision_bits());
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Field, Mpf};
    use crate::Real;

    #[test]
    fn zeta_star_values() {
        let ctx = PrecisionCtx::default();
        let z1: Real = zeta_star_2r(1, &ctx);
        let expect = Mpf::pi(256).powi(2) / Mpf::from_int(6, 256);
        assert!((z1 - expect).abs().to_f64() < 1e-70);
        let z0: Real = zeta_star_2r(0, &ctx);
        assert_eq!(z0, Mpf::from_int(1, 256));
    }

    #[test]
    fn tail_bound_examples() {
        let b = tail_bound_cb(100, 0);
        assert!((b - 2.0 / (10.0 * std::f64::consts::PI.sqrt())).abs() < 1e-12);
        assert!(b <= 0.11284);
        let mut prev = f64::INFINITY;
        for n in [1, 2, 5, 10, 100, 1000] {
            let v = tail_bound_cb(n, 2);
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn apery_series_z_at_one_vanishes() {
        let ctx = PrecisionCtx::default();
        let r = apery_series_z::<Real>(2, &Mpf::from_int(1, 256), &ctx).unwrap();
        assert!(num_traits::Zero::is_zero(&r.value));
        assert!(apery_series_z::<Real>(1, &Mpf::from_int(0, 256), &ctx).is_err());
    }

    #[test]
    fn apery_r0_is_two_log2() {
        let ctx = PrecisionCtx::default();
        let res: SumResult<Real> = apery_series(0, &ctx);
        let two_log2 = Mpf::ln2(256) * Mpf::from_int(2, 256);
        let err = (res.value.clone() - two_log2).abs().to_f64();
        assert!(err < 1e-10, "err {err:e} est {:e} terms {}", res.est_err(), res.terms_used);
    }
}
