use apery_core::numeric::{Field, Mpf, Scalar};
use apery_core::series::{
    apery_series, apery_series_z, levin_u, sum_adaptive, DecayClass, SumResult, TermSeq,
};
use apery_core::PrecisionCtx;
use proptest::prelude::*;

fn q(n: i64, d: i64, bits: u32) -> Mpf {
    Mpf::from_ratio(n, d, bits)
}

fn geometric(rho_num: i64, rho_den: i64, ctx: &PrecisionCtx) -> SumResult<Mpf> {
    let bits = ctx.precision_bits() + 32;
    let rho = q(rho_num, rho_den, bits);
    let seq = TermSeq::new(1, DecayClass::Geometric { ratio_bound: rho.to_f64() }, move |n| {
        rho.powi(n as i32) / q(n as i64, 1, bits)
    });
    sum_adaptive(seq, ctx)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn geometric_estimate_brackets_longer_sums(num in 1i64..9, exp in 10i32..30) {
        let target = 10f64.powi(-exp);
        let ctx = PrecisionCtx::new(target, 256).unwrap();
        let short = geometric(num, 10, &ctx);
        let long_ctx = PrecisionCtx::new(target * target, 256).unwrap();
        let long = geometric(num, 10, &long_ctx);
        prop_assert!(long.terms_used >= 2 * short.terms_used || long.terms_used > short.terms_used);
        let d = (long.value - &short.value).abs().to_f64();
        prop_assert!(d <= short.est_err(), "d={d:e} est={:e}", short.est_err());
        prop_assert!(short.converged);
    }
}

#[test]
fn levin_orders_differ_by_less_than_the_estimate() {
    let ctx = PrecisionCtx::new(1e-25, 256).unwrap();
    for p in [2i32, 3, 4] {
        let bits = 320;
        let terms: Vec<Mpf> = (1..=60).map(|n| q(1, 1, bits) / q(n, 1, bits).powi(p)).collect();
        let mut partial = Vec::new();
        let mut s = q(0, 1, bits);
        for t in &terms {
            s += t;
            partial.push(s.clone());
        }
        let seq_terms = terms.clone();
        let seq = TermSeq::new(1, DecayClass::Algebraic { exponent: p as f64 }, move |n| seq_terms[n - 1].clone());
        let res = sum_adaptive(seq, &ctx.with_max_terms(60));
        let order = res.terms_used - 1;
        let a = levin_u(&partial, &terms, 0, order, 1.0, bits).unwrap();
        let b = levin_u(&partial, &terms, 0, order - 2, 1.0, bits).unwrap();
        assert!((a - b).abs().to_f64() <= res.est_err().max(1e-60) * 1.000001, "p={p}");
    }
}

#[test]
fn apery_series_z_approaches_the_unweighted_sum() {
    let ctx = PrecisionCtx::new(1e-20, 256).unwrap();
    for r in 0..=2 {
        let full = apery_series::<Mpf>(r, &ctx).value;
        let mut prev: Option<Mpf> = None;
        for d in [2, 4, 8, 16] {
            let v = apery_series_z(r, &q(1, d, 256), &ctx).unwrap().value;
            assert!(v < full, "r={r} z=1/{d}");
            if let Some(p) = &prev {
                assert!(v > *p, "r={r} z=1/{d}");
                assert!((full.clone() - &v) < (full.clone() - p));
            }
            prev = Some(v);
        }
    }
}

#[test]
fn summation_is_deterministic() {
    let ctx = PrecisionCtx::new(1e-20, 256).unwrap();
    for r in 0..=3 {
        let a = apery_series::<Mpf>(r, &ctx);
        let b = apery_series::<Mpf>(r, &ctx);
        assert_eq!(a.value.to_decimal(80), b.value.to_decimal(80));
        assert_eq!(a.terms_used, b.terms_used);
        assert_eq!(a.trunc_err.to_bits(), b.trunc_err.to_bits());
    }
}
