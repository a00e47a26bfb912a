use apery_core::finite_sums::build_table_2r;
use apery_core::mixed::{alt_double_sum, integral_li, mixed_lhs, mixed_rhs};
use apery_core::numeric::{Field, Mpf, Scalar};
use apery_core::special::zeta_2r;
use apery_core::PrecisionCtx;

const BITS: u32 = 256;

fn ctx(target: f64) -> PrecisionCtx {
    PrecisionCtx::new(target, BITS).unwrap()
}

#[test]
fn mixed_value_sides_agree() {
    let c = ctx(1e-20);
    for r in 1..=4 {
        let l = mixed_lhs::<Mpf>(r, &c).unwrap();
        let rhs: Mpf = mixed_rhs(r, &c).unwrap();
        assert!((l.value.clone() - &rhs).abs().to_f64() <= l.est_err() + 1e-40, "r={r}");
    }
    // r = 1: -(3/4) zeta(3)
    let z3 = Mpf::from_float(rug::Float::with_val(BITS, rug::Float::zeta_u(3)));
    let v: Mpf = mixed_rhs(1, &c).unwrap();
    assert!((v + z3 * Mpf::from_ratio(3, 4, BITS)).abs().to_f64() < 1e-60);
}

#[test]
fn double_sum_is_twice_the_split_form() {
    let c = ctx(1e-20);
    for r in 1..=4 {
        let d = alt_double_sum::<Mpf>(r, &c).unwrap();
        let m = mixed_lhs::<Mpf>(r, &c).unwrap();
        let gap = (d.value.clone() - m.value.clone() * Mpf::from_int(2, BITS)).abs().to_f64();
        assert!(gap <= d.est_err() + 2.0 * m.est_err(), "r={r} gap={gap:e}");
    }
}

#[test]
fn quadrature_is_stable_under_node_doubling() {
    // integral_li doubles its node count until two rules agree; a much
    // tighter target forces at least one further doubling
    for r in 1..=3 {
        let loose = integral_li::<Mpf>(r, &ctx(1e-10)).unwrap();
        let tight = integral_li::<Mpf>(r, &ctx(1e-25)).unwrap();
        assert!(tight.terms_used > loose.terms_used);
        let d = (loose.value.clone() - &tight.value).abs().to_f64();
        assert!(d <= loose.est_err(), "r={r} d={d:e} est={:e}", loose.est_err());
    }
}

#[test]
fn partial_sums_of_the_split_bracket_the_limit() {
    let n_max = 400;
    let t = build_table_2r(n_max, 4);
    let c = ctx(1e-30);
    for r in 1..=4 {
        let limit = zeta_2r::<Mpf>(r, &c);
        let prev_limit = zeta_2r::<Mpf>(r - 1, &c).to_f64().max(1.0);
        for big_n in [10usize, 50, 400] {
            let partial = Mpf::from_rat(t.plain(big_n, r), BITS);
            let defect = (limit.clone() - &partial).to_f64();
            assert!(defect > 0.0 && defect < prev_limit / big_n as f64, "r={r} N={big_n}");
        }
    }
}
