//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p apery-cli --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use apery_core::finite_sums::{
    alt_harmonic, build_table_2r, pochhammer_derivative_check, PochhammerRelation,
};
use apery_core::numeric::{Field, Mpf, Scalar};
use apery_core::registry::{find_case, verify, Params, Settings, Status, VerificationReport};
use apery_core::special::{digamma, polylog};
use apery_core::{PrecisionCtx, Rat};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rug::Float;

type Check = Result<String, String>;

fn num(s: &str) -> f64 {
    s.parse().unwrap_or(f64::NAN)
}

fn settings(tol: f64) -> Settings {
    Settings { tol: Some(tol), ..Default::default() }
}

fn run(id: &str, pairs: &[(&str, &str)], tol: f64) -> Result<VerificationReport, String> {
    verify(id, &Params::from_pairs(pairs), &settings(tol)).map_err(|e| format!("{id}: {e}"))
}

fn need_pass(r: &VerificationReport) -> Result<(), String> {
    if r.status == Status::Pass {
        Ok(())
    } else {
        Err(format!("{} {:?} {} (abs_diff {}, errors {} + {})", r.id, r.params, r.status, r.abs_diff, r.lhs_err, r.rhs_err))
    }
}

fn grid_pass(id: &str, tol: f64) -> Result<(usize, f64), String> {
    let mut worst = 0.0f64;
    let grid = find_case(id).map_err(|e| e.to_string())?.default_grid();
    for p in &grid {
        let r = verify(id, p, &settings(tol)).map_err(|e| format!("{id}: {e}"))?;
        need_pass(&r)?;
        worst = worst.max(num(&r.abs_diff));
    }
    Ok((grid.len(), worst))
}

fn zeta_oracle(s: u32) -> Mpf {
    Mpf::from_float(Float::with_val(256, Float::zeta_u(s)))
}

fn q(n: i64, d: i64) -> Mpf {
    Mpf::from_ratio(n, d, 256)
}

fn gap(a: &Mpf, b: &Mpf) -> f64 {
    (a.clone() - b).abs().to_f64()
}

fn c1() -> Check {
    let start = Instant::now();
    let r = run("I01", &[], 1e-30)?;
    let elapsed = start.elapsed();
    need_pass(&r)?;
    let terms: usize = r.terms_used.parse().unwrap();
    let diff = num(&r.abs_diff);
    if diff >= 1e-30 || terms > 60 || elapsed >= Duration::from_secs(1) {
        return Err(format!("diff {diff:e}, {terms} terms, {elapsed:?}"));
    }
    Ok(format!("diff {diff:.2e}, {terms} terms, {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn c2() -> Check {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for r in ["1", "2", "3", "4", "0"] {
        let rep = run("I02", &[("r", r)], 1e-10)?;
        need_pass(&rep)?;
        let terms: usize = rep.terms_used.parse().unwrap();
        if terms > 20_000 {
            return Err(format!("r={r} used {terms} terms"));
        }
        worst = worst.max(num(&rep.abs_diff));
    }
    let lhs0 = Mpf::parse(&run("I02", &[("r", "0")], 1e-10)?.lhs, 256).unwrap();
    let two_log2 = Mpf::from_float(Float::with_val(256, rug::float::Constant::Log2)) * q(2, 1);
    if gap(&lhs0, &two_log2) > 1e-10 {
        return Err("r = 0 is not 2 log 2".into());
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("r = 0..4, worst diff {worst:.2e}, {:.2} s", elapsed.as_secs_f64()))
}

fn c3() -> Check {
    let start = Instant::now();
    let r = run("I03", &[("n", "25"), ("R", "40")], 1e-30)?;
    let elapsed = start.elapsed();
    if r.status != Status::Pass || r.abs_diff != "0" {
        return Err(format!("abs_diff {}", r.abs_diff));
    }
    if elapsed >= Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("every m <= 25 to order 40 exact, {:.2} s", elapsed.as_secs_f64()))
}

fn c4() -> Check {
    let mut points = 0;
    for id in ["I04", "I16", "I17", "I18"] {
        points += grid_pass(id, 1e-10)?.0;
    }
    let mut worst = 0.0f64;
    for x in ["1/10", "1/4", "2/5"] {
        let r = run("I18", &[("form", "sine"), ("x", x)], 1e-20)?;
        need_pass(&r)?;
        worst = worst.max(num(&r.abs_diff));
    }
    Ok(format!("{points} points at 1e-10; sine form worst {worst:.2e} at 1e-20"))
}

fn c5() -> Check {
    let mut worst = 0.0f64;
    for r in ["1", "2", "3", "4"] {
        for z in ["1/4", "1/2", "3/4"] {
            let rep = run("I09", &[("r", r), ("z", z)], 1e-25)?;
            need_pass(&rep)?;
            worst = worst.max(num(&rep.abs_diff));
        }
    }
    for z in ["1/4", "1/2", "3/4"] {
        need_pass(&run("I09", &[("r", "0"), ("z", z)], 1e-25)?)?;
        need_pass(&run("I12", &[("form", "log"), ("t", z)], 1e-25)?)?;
    }
    let (n8, w8) = grid_pass("I08", 1e-25)?;
    Ok(format!("polylog form worst {worst:.2e}; r = 0 log forms pass; I08 {n8} points worst {w8:.2e}"))
}

fn c6() -> Check {
    let (n, worst) = grid_pass("I10", 1e-6)?;
    let r1 = run("I10", &[("r", "1")], 1e-6)?;
    let lhs = Mpf::parse(&r1.lhs, 256).unwrap();
    let expect = -(zeta_oracle(3) * q(3, 4));
    let d = gap(&lhs, &expect);
    if d >= 1e-6 {
        return Err(format!("r = 1 gives {} against -(3/4) zeta(3)", r1.lhs));
    }
    Ok(format!("{n} points worst {worst:.2e}; r = 1 off -(3/4) zeta(3) by {d:.2e}"))
}

fn c7() -> Check {
    let mut worst = 0.0f64;
    for r in ["1", "2", "3"] {
        for form in ["binomial", "doublesum"] {
            let rep = run("I13", &[("r", r), ("form", form)], 1e-8)?;
            need_pass(&rep)?;
            worst = worst.max(num(&rep.abs_diff));
        }
    }
    let rep = run("I13", &[("r", "1"), ("form", "binomial")], 1e-8)?;
    let expect = Mpf::pi(256).powi(2) / q(6, 1) * Mpf::ln2(256) * q(2, 1) - zeta_oracle(3) * q(3, 2);
    for side in [&rep.lhs, &rep.rhs] {
        let v = Mpf::parse(side, 256).unwrap();
        if gap(&v, &expect) > 1e-8 {
            return Err(format!("r = 1 side {side} is not zeta(2) 2log2 - (3/2) zeta(3)"));
        }
    }
    Ok(format!("r = 1..3 worst {worst:.2e}; r = 1 value reproduced"))
}

fn c8() -> Check {
    let mut points = 0;
    for id in ["I21", "I22", "I23"] {
        points += grid_pass(id, 1e-6)?.0;
    }
    let mut worst = 0.0f64;
    for r in ["0", "1", "2"] {
        let hur = run("I22", &[("a", "1/2"), ("k", "0"), ("r", r)], 1e-6)?;
        let plain = run("I21", &[("a", "1/2"), ("r", r)], 1e-6)?;
        let apery = run("I02", &[("r", r)], 1e-10)?;
        let base = Mpf::parse(&apery.lhs, 256).unwrap();
        for other in [&hur.lhs, &plain.lhs] {
            let d = gap(&Mpf::parse(other, 256).unwrap(), &base);
            if d > 1e-10 {
                return Err(format!("a = 1/2, r = {r}: {d:e} from the I02 value"));
            }
            worst = worst.max(d);
        }
    }
    Ok(format!("{points} points at 1e-6; a = 1/2, k = 0 within {worst:.2e} of I02"))
}

/// Definitional sum over `n >= n_1 (>|>=) ... n_r >= 1` of `prod 1/n_j^2`.
fn brute_2r(n: usize, depth: usize, star: bool) -> Rat {
    if depth == 0 {
        return Rat::one();
    }
    let mut acc = Rat::zero();
    for m in 1..=n {
        let next = if star { m } else { m - 1 };
        acc += Rat::new(1.into(), ((m * m) as i64).into()) * brute_2r(next, depth - 1, star);
    }
    acc
}

fn c9() -> Check {
    let t = build_table_2r(20, 5);
    for n in 0..=20 {
        for r in 0..=5 {
            if *t.plain(n, r) != brute_2r(n, r, false) || *t.star(n, r) != brute_2r(n, r, true) {
                return Err(format!("table differs from brute force at n={n}, r={r}"));
            }
        }
    }
    let ctx = PrecisionCtx::new(1e-40, 256).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(20240611);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let s = q(rng.gen_range(1..100_000), 10_000);
        let rec = digamma(&(s.clone() + q(1, 1)), &ctx).unwrap() - digamma(&s, &ctx).unwrap();
        let dup = digamma(&(s.clone() * q(2, 1)), &ctx).unwrap() * q(2, 1)
            - digamma(&(s.clone() + q(1, 2)), &ctx).unwrap()
            - Mpf::ln2(256) * q(2, 1);
        let d = gap(&rec, &(q(1, 1) / &s)).max(gap(&dup, &digamma(&s, &ctx).unwrap()));
        worst = worst.max(d);
    }
    if worst >= 1e-30 {
        return Err(format!("digamma identities off by {worst:e}"));
    }
    let pctx = PrecisionCtx::new(1e-30, 256).unwrap();
    for r in 1..=3u32 {
        let li = polylog(2 * r + 1, &q(-1, 1), &pctx).unwrap().value;
        let expect = -((q(1, 1) - q(1, 1) / q(4, 1).powi(r as i32)) * zeta_oracle(2 * r + 1));
        if gap(&li, &expect) >= 1e-25 {
            return Err(format!("Li_{}(-1) off", 2 * r + 1));
        }
    }
    for n in 1..=50usize {
        let h: Rat = (1..=n).map(|k| Rat::new(1.into(), (k as i64).into())).sum();
        let tn: Rat = (1..=n).map(|k| Rat::new(2.into(), (2 * k as i64 - 1).into())).sum();
        if alt_harmonic(2 * n) * Rat::from_integer(2.into()) != h - tn {
            return Err(format!("Hbar identity fails at n={n}"));
        }
    }
    let mut fd_worst = 0.0f64;
    for (a, b) in [(1, 3), (1, 2), (-7, 4), (5, 3)] {
        for n in [2, 3, 5, 8] {
            for k in 1..=2 {
                for rel in [PochhammerRelation::Rising, PochhammerRelation::ReciprocalReflected] {
                    let a = Rat::new(a.into(), b.into());
                    let (fd, closed): (Mpf, Mpf) = pochhammer_derivative_check(&a, n, k, rel, &ctx).unwrap();
                    let rel_err = gap(&fd, &closed) / closed.abs().to_f64().max(1.0);
                    fd_worst = fd_worst.max(rel_err);
                }
            }
        }
    }
    if fd_worst >= 1e-12 {
        return Err(format!("finite differences off by {fd_worst:e}"));
    }
    Ok(format!("tables exact; digamma worst {worst:.2e}; Li(-1) ok; Hbar exact; finite differences worst {fd_worst:.2e}"))
}

fn suite_json(jobs: &str) -> Result<Vec<serde_json::Value>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(["suite", "--format", "json", "--jobs", jobs])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("suite --jobs {jobs} exited with {}", out.status));
    }
    let mut v: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    for r in &mut v {
        r.as_object_mut().unwrap().remove("wall_time_ms");
    }
    Ok(v)
}

fn c10() -> Check {
    let one = suite_json("1")?;
    let four = suite_json("4")?;
    if one != four {
        return Err("reports differ between --jobs 1 and --jobs 4".into());
    }
    Ok(format!("{} reports identical", one.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("I01 Apery series for zeta(3), 1e-30", c1),
        ("I02 central-binomial series, 1e-10", c2),
        ("I03 generating function, exact", c3),
        ("I04/I16/I17/I18 closed and partial-fraction forms, 1e-10", c4),
        ("I08/I09 polylogarithm and functional forms, 1e-25", c5),
        ("I10 mixed values, 1e-6", c6),
        ("I13 integral against series, 1e-8", c7),
        ("I21/I22/I23 parametric series, 1e-6", c8),
        ("property suites", c9),
        ("determinism across job counts", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.2} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2} s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
