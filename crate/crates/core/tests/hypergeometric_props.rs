use apery_core::hypergeometric::{
    closed_3f2_x, functional_3f2, hurwitz_param_apery, hyp_eval, param_apery, pf_3f2, pf_3f2_one_sided, t_apery,
    HypParams,
};
use apery_core::numeric::{Field, Mpf, Scalar};
use apery_core::PrecisionCtx;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

const BITS: u32 = 256;

fn q(n: i64, d: i64) -> Mpf {
    Mpf::from_ratio(n, d, BITS)
}

fn ctx(target: f64) -> PrecisionCtx {
    PrecisionCtx::new(target, BITS).unwrap()
}

fn x_grid() -> [Mpf; 3] {
    [q(1, 10), q(1, 4), q(2, 5)]
}

/// `3F2(1,1,3/2; 2-x,2+x; z)`.
fn f32(x: &Mpf, z: Mpf, c: &PrecisionCtx) -> (Mpf, f64) {
    let p = HypParams::new(vec![q(1, 1), q(1, 1), q(3, 2)], vec![q(2, 1) - x, q(2, 1) + x], z);
    let r = hyp_eval(&p, c).unwrap();
    (r.value.clone(), r.est_err())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn parameter_order_does_not_matter(seed in any::<u64>(), a in 1i64..30, b in 1i64..30, c in 1i64..30, d in 5i64..40, e in 5i64..40, z in -9i64..10) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut up = vec![q(a, 10), q(b, 7), q(c, 3)];
        let mut lo = vec![q(d, 4), q(e, 3)];
        let c0 = ctx(1e-30);
        let base = hyp_eval(&HypParams::new(up.clone(), lo.clone(), q(z, 10)), &c0).unwrap();
        up.shuffle(&mut rng);
        lo.shuffle(&mut rng);
        let perm = hyp_eval(&HypParams::new(up, lo, q(z, 10)), &c0).unwrap();
        let d = (base.value.clone() - &perm.value).abs().to_f64();
        prop_assert!(d <= base.est_err() + perm.est_err() + 1e-60, "d={d:e}");
    }
}

#[test]
fn digamma_closed_form_matches_the_series() {
    let c = ctx(1e-14);
    for x in x_grid() {
        let closed = closed_3f2_x(&x, &c).unwrap();
        let (h, err) = f32(&x, q(1, 1), &c);
        assert!((closed - h).abs().to_f64() <= err + 1e-30, "x={}", x.to_f64());
    }
}

#[test]
fn functional_form_matches_the_series() {
    let c = ctx(1e-30);
    for x in x_grid() {
        for t in [q(1, 4), q(1, 2), q(3, 4)] {
            let f = functional_3f2(&x, &t, &c).unwrap();
            let (h, err) = f32(&x, q(1, 1) - &t, &c);
            assert!((f.value.clone() - h).abs().to_f64() <= f.est_err() + err + 1e-40);
        }
    }
}

#[test]
fn one_sided_partial_fractions() {
    let c = ctx(1e-30);
    for b in [q(1, 2), q(1, 1), q(3, 2)] {
        for x in x_grid() {
            let two = pf_3f2(&q(1, 1), &b, &x, &c).unwrap();
            let one = pf_3f2_one_sided(&b, &x, &c).unwrap();
            assert!((two.value.clone() - &one.value).abs().to_f64() <= two.est_err() + one.est_err());
        }
    }
}

#[test]
fn parametric_sides_agree_within_their_errors() {
    let c = ctx(1e-20);
    for (n, d) in [(1, 3), (1, 2), (2, 3)] {
        let a = q(n, d);
        for r in 0..=2 {
            let (l, rr) = param_apery(&a, r, &c).unwrap();
            assert!((l.value.clone() - &rr.value).abs().to_f64() <= l.est_err() + rr.est_err(), "a={n}/{d} r={r}");
            for k in 1..=2 {
                let (l, rr) = hurwitz_param_apery(&a, k, r, &c).unwrap();
                let d = (l.value.clone() - &rr.value).abs().to_f64();
                assert!(d <= l.est_err() + rr.est_err(), "a={n}/{d} k={k} r={r}");
            }
        }
    }
    for k in 0..=2 {
        for r in 0..=2 {
            let (l, rr) = t_apery::<Mpf>(k, r, &c).unwrap();
            assert!((l.value.clone() - &rr.value).abs().to_f64() <= l.est_err() + rr.est_err(), "k={k} r={r}");
        }
    }
}
