use apery_core::finite_sums::{pochhammer_derivative_check, PochhammerRelation};
use apery_core::numeric::{Field, Mpf, Scalar};
use apery_core::registry::{classify, find_case, list_cases, run_suite, verify, Kind, Params, RunConfig, Settings, Status};
use apery_core::{PrecisionCtx, Rat};
use proptest::prelude::*;

/// Each identity, by a fragment its catalog statement must carry.
const COVERAGE: &[(&str, &str)] = &[
    ("I01", "n^3 C(2n,n)"),
    ("I02", "2(1-4^-r) zeta(2r+1)"),
    ("I03", "prod_{j<=m} (1 - x^2/j^2)^-1"),
    ("I04", "4log2(1-x^2)"),
    ("I05", "-4z/(1-z)^2"),
    ("I06", "psi(2s)"),
    ("I07", "2log2 + 2 sum_n (1-4^-n) zeta(2n+1) x^(2n)"),
    ("I08", "1-t"),
    ("I09", "Li_{2r+1}((sqrt z - 1)/(sqrt z + 1))"),
    ("I10", "Hbar_{2n}"),
    ("I11", "pi^(2r) / (2r+1)!"),
    ("I12", "1/sqrt(1-t)"),
    ("I13", "Li_{{2}_r}(t^2)/(1+t)"),
    ("I14", "t_n zeta_{n-1}"),
    ("I16", "Gamma(3-a-b)"),
    ("I17", "(b)_{k-1}/(2-b)_k"),
    ("I18", "pi/sin(pi x)"),
    ("I19", "Gamma(c)Gamma(c-a-b)"),
    ("I20", "a/(1-x^2) 3F2(1,1,1+a"),
    ("I21", "(a)_n/(1-a)_n n^-(2r+1)"),
    ("I22", "zeta_n({1}_k;a)"),
    ("I23", "t_n({1}_k)"),
    ("I24", "d^k/da^k"),
];

#[test]
fn every_identity_has_exactly_one_entry() {
    assert_eq!(list_cases().len(), COVERAGE.len());
    for (id, fragment) in COVERAGE {
        let hits: Vec<_> = list_cases().iter().filter(|c| c.id == *id).collect();
        assert_eq!(hits.len(), 1, "{id}");
        assert!(hits[0].statement.contains(fragment), "{id}: {}", hits[0].statement);
        assert!(!hits[0].description.is_empty());
    }
    assert!(find_case("I15").is_err());
    assert_eq!(find_case("I03").unwrap().kind, Kind::Exact);
}

proptest! {
    #[test]
    fn pass_is_monotone_in_tolerance(d in 0.0f64..1e-3, e1 in 0.0f64..1e-3, e2 in 0.0f64..1e-3, tol in 1e-8f64..1e-2, grow in 1.0f64..1e6, flagged: bool) {
        if classify(d, e1, e2, flagged, tol) == Status::Pass {
            prop_assert_eq!(classify(d, e1, e2, flagged, tol * grow), Status::Pass);
        }
        prop_assert_eq!(classify(d, e1, e2, true, tol) == Status::Pass, false);
    }
}

#[test]
fn reports_are_reproducible() {
    let cfg = RunConfig { ids: vec!["I02".into(), "I19".into(), "I24".into()], jobs: 3, ..Default::default() };
    let a = run_suite(&cfg).unwrap();
    let b = run_suite(&cfg).unwrap();
    let strip = |v: &[apery_core::registry::VerificationReport]| v.iter().map(|r| r.without_timing()).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
}

/// Closed derivatives written out: with `s1 = sum 1/(c+j)`, `s2 = sum 1/(c+j)^2`
/// over `j < n`, `(a)_n' = (a)_n s1`, `(a)_n'' = (a)_n (s1^2 - s2)` at `c = a`;
/// `g = 1/(1-a)_n` has `g' = g s1`, `g'' = g (s1^2 + s2)` at `c = 1-a`.
fn derivative_oracle(a: &Mpf, n: usize, k: usize, rel: PochhammerRelation, bits: u32) -> Mpf {
    let one = Mpf::from_int(1, bits);
    let c = match rel {
        PochhammerRelation::Rising => a.clone(),
        PochhammerRelation::ReciprocalReflected => one.clone() - a,
    };
    let mut poch = one.clone();
    let (mut s1, mut s2) = (Mpf::from_int(0, bits), Mpf::from_int(0, bits));
    for j in 0..n {
        let t = c.clone() + Mpf::from_int(j as i64, bits);
        poch *= &t;
        let inv = one.clone() / t;
        s1 += &inv;
        s2 += inv.clone() * &inv;
    }
    let base = match rel {
        PochhammerRelation::Rising => poch,
        PochhammerRelation::ReciprocalReflected => one.clone() / poch,
    };
    match (k, rel) {
        (0, _) => base,
        (1, _) => base * s1,
        (_, PochhammerRelation::Rising) => base * (s1.clone() * &s1 - s2),
        (_, PochhammerRelation::ReciprocalReflected) => base * (s1.clone() * &s1 + s2),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pochhammer_derivatives_to_1e_12(num in -50i64..50, den in 2i64..9, n in 0usize..12, k in 0usize..3, reflected: bool) {
        let a = Rat::new(num.into(), den.into());
        prop_assume!(!a.is_integer());
        let rel = if reflected { PochhammerRelation::ReciprocalReflected } else { PochhammerRelation::Rising };
        let ctx = PrecisionCtx::new(1e-30, 256).unwrap();
        let (fd, closed): (Mpf, Mpf) = pochhammer_derivative_check(&a, n, k, rel, &ctx).unwrap();
        let oracle = derivative_oracle(&Mpf::from_rat(&a, 256), n, k, rel, 256);
        let scale = oracle.abs().to_f64().max(1.0);
        prop_assert!((fd.clone() - &oracle).abs().to_f64() < 1e-12 * scale, "fd {fd} oracle {oracle}");
        prop_assert!((closed - &oracle).abs().to_f64() < 1e-30 * scale);
    }
}

#[test]
fn i24_registry_grid_passes_at_1e_12() {
    let s = Settings { tol: Some(1e-12), ..Default::default() };
    for p in find_case("I24").unwrap().default_grid() {
        let r = verify("I24", &p, &s).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }
    let bad = Params::from_pairs(&[("a", "1")]);
    assert!(verify("I24", &bad, &s).is_err());
}
