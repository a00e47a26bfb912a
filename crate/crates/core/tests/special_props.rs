use apery_core::numeric::{Field, Mpf, Scalar};
use apery_core::special::{digamma, mpl_2r, polylog, zeta_2r, zeta_int};
use apery_core::{PrecisionCtx, Rat};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rug::Float;

const BITS: u32 = 256;

fn ctx() -> PrecisionCtx {
    PrecisionCtx::new(1e-40, BITS).unwrap()
}

fn q(n: i64, d: i64) -> Mpf {
    Mpf::from_ratio(n, d, BITS)
}

fn gap(a: &Mpf, b: &Mpf) -> f64 {
    (a.clone() - b).abs().to_f64()
}

fn rug_value(f: Float) -> Mpf {
    Mpf::from_float(f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn digamma_recurrence(num in 1i64..10_000, den in 1i64..1_000) {
        let s = q(num, den);
        prop_assume!(s.to_f64() < 10.0);
        let c = ctx();
        let lhs = digamma(&(s.clone() + q(1, 1)), &c).unwrap() - digamma(&s, &c).unwrap();
        prop_assert!(gap(&lhs, &(q(1, 1) / &s)) < 1e-30);
    }

    #[test]
    fn digamma_duplication(num in 1i64..5_000, den in 1i64..1_000) {
        let z = q(num, den);
        prop_assume!(z.to_f64() < 5.0);
        let c = ctx();
        let lhs = digamma(&z, &c).unwrap();
        let rhs = digamma(&(z.clone() * q(2, 1)), &c).unwrap() * q(2, 1)
            - digamma(&(z.clone() + q(1, 2)), &c).unwrap()
            - Mpf::ln2(BITS) * q(2, 1);
        prop_assert!(gap(&lhs, &rhs) < 1e-30);
    }

    #[test]
    fn digamma_agrees_with_mpfr(num in 1i64..4_000, den in 1i64..97) {
        prop_assume!(num % den != 0);
        let s = q(num, den);
        let ours = digamma(&s, &ctx()).unwrap();
        let theirs = rug_value(s.as_float().clone().digamma());
        let scale = ours.abs().to_f64().max(1.0);
        prop_assert!(gap(&ours, &theirs) < 1e-30 * scale);
    }
}

#[test]
fn polylog_at_minus_one_against_mpfr_zeta() {
    let c = PrecisionCtx::new(1e-30, BITS).unwrap();
    let li1 = polylog(1, &q(-1, 1), &c).unwrap();
    assert!(gap(&li1.value, &-Mpf::ln2(BITS)) < 1e-25);
    for r in 1..=3u32 {
        let li = polylog(2 * r + 1, &q(-1, 1), &c).unwrap();
        let zeta = rug_value(Float::with_val(BITS, Float::zeta_u(2 * r + 1)));
        let expect = -((q(1, 1) - q(1, 1) / q(4, 1).powi(r as i32)) * zeta);
        assert!(gap(&li.value, &expect) < 1e-25, "r={r}");
    }
}

#[test]
fn polylog_at_half_against_partial_sums() {
    let c = PrecisionCtx::new(1e-30, BITS).unwrap();
    for p in 1..=6u32 {
        for x in [q(1, 2), q(-1, 2)] {
            let got = polylog(p, &x, &c).unwrap();
            let big_n = 120i32;
            let mut partial = q(0, 1);
            for n in 1..=big_n {
                partial += x.powi(n) / q(n as i64, 1).powi(p as i32);
            }
            // |tail| <= sum_{n>N} 2^-n = 2^-N
            let tail = 0.5f64.powi(big_n);
            assert!(gap(&got.value, &partial) <= tail + got.est_err(), "p={p} x={}", x.to_f64());
        }
    }
}

#[test]
fn mpl_is_monotone_up_to_its_value_at_one() {
    let c = PrecisionCtx::new(1e-30, BITS).unwrap();
    for r in 1..=4 {
        let top = zeta_2r::<Mpf>(r, &c);
        let at_one = mpl_2r(r, &q(1, 1), &c).unwrap();
        assert!(gap(&at_one.value, &top) < 1e-25, "r={r}");
        let mut prev = q(0, 1);
        for k in 1..=20 {
            let v = mpl_2r(r, &q(k, 20), &c).unwrap().value;
            assert!(v > prev, "r={r} x={k}/20");
            assert!(v <= top.clone() + q(1, 1_000_000_000) * q(1, 1_000_000_000), "r={r} x={k}/20");
            prev = v;
        }
    }
}

/// Bernoulli numbers from `sum_{j<=m} C(m+1, j) B_j = 0`.
fn bernoulli_oracle(n: usize) -> Vec<Rat> {
    let mut b = vec![Rat::one()];
    for m in 1..=n {
        let mut acc = Rat::zero();
        let mut binom = Rat::one();
        for (j, bj) in b.iter().enumerate() {
            acc += binom.clone() * bj;
            binom = binom * Rat::from_integer((m + 1 - j).into()) / Rat::from_integer((j + 1).into());
        }
        b.push(-acc / Rat::from_integer((m + 1).into()));
    }
    b
}

#[test]
fn even_zeta_matches_bernoulli_closed_form() {
    let c = PrecisionCtx::new(1e-40, BITS).unwrap();
    let b = bernoulli_oracle(12);
    let mut fact = Rat::one();
    for k in 1..=6usize {
        fact *= Rat::from_integer(((2 * k - 1) * 2 * k).into());
        // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)
        let coef = b[2 * k].clone().abs() / (fact.clone() * Rat::from_integer(2.into()));
        let expect = Mpf::from_rat(&coef, BITS) * (Mpf::pi(BITS) * q(2, 1)).powi(2 * k as i32);
        let got: Mpf = zeta_int(2 * k as u32, &c).unwrap();
        assert!(gap(&got, &expect) < 1e-40, "k={k}");
    }
}
