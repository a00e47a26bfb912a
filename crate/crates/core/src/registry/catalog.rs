//! The identity catalog: parameter specs, default grids and the two
//! evaluation routes of every case.

use num_traits::Signed;

use crate::error::Result;
use crate::exact_series::{genfunc_rhs_ordered, TruncSeries};
use crate::finite_sums::build_table_2r;
use crate::finite_sums::{pochhammer_derivative_check, PochhammerRelation};
use crate::hypergeometric::{
    closed_3f2_x, functional_3f2, gauss_2f1_unit, hurwitz_param_apery, hyp_eval, param_apery, param_apery_lhs,
    pf_3f2, pf_3f2_half, pf_3f2_one_sided, pf_3f2_sine, quad_transform_check, t_apery, HypParams,
};
use crate::mixed::{alt_double_sum, integral_binomial_check, integral_li, mixed_lhs, mixed_rhs, t_relation_check};
use crate::numeric::{Field, PrecisionCtx, Rat, Scalar, GUARD_BITS};
use crate::series::{apery_series, apery_series_z, sum_adaptive, DecayClass, Method, SumResult, TermSeq};
use crate::special::{digamma, mpl_2r, polylog, zeta_2r, zeta_int};
use crate::Real;

use super::params::{ParamSpec, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Numeric,
    /// Exact rational comparison; passes only with zero difference.
    Exact,
}

/// One side of a check.
#[derive(Debug, Clone)]
pub struct Side {
    pub value: Real,
    pub err: f64,
    pub terms: usize,
    /// The engine could not certify its error estimate.
    pub flagged: bool,
}

impl Side {
    pub fn closed(value: Real) -> Self {
        let err = value.abs().to_f64() * value.epsilon() * 4.0;
        Side { value, err, terms: 0, flagged: false }
    }
}

impl From<SumResult<Real>> for Side {
    fn from(s: SumResult<Real>) -> Self {
        // a missed internal target is judged against the tolerance by the
        // caller; only an unusable estimate or a broken ratio bound flags
        let broken = s.method == Method::Geometric && s.tail_bound.is_none();
        let err = s.est_err();
        Side { flagged: broken || !err.is_finite(), err, terms: s.terms_used, value: s.value }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub lhs: Side,
    pub rhs: Side,
    /// Exact difference, for exact-kind cases.
    pub exact_diff: Option<Rat>,
}

impl Outcome {
    fn new(lhs: impl Into<Side>, rhs: impl Into<Side>) -> Self {
        Outcome { lhs: lhs.into(), rhs: rhs.into(), exact_diff: None }
    }
}

type EvalFn = fn(&Params, &PrecisionCtx) -> Result<Outcome>;

pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity in plain text.
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    pub default_tol: f64,
    pub kind: Kind,
    grid: fn() -> Vec<Params>,
    eval: EvalFn,
}

impl IdentityCase {
    pub fn default_grid(&self) -> Vec<Params> {
        (self.grid)()
    }

    pub fn evaluate(&self, p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
        (self.eval)(p, ctx)
    }

    pub fn param(&self, name: &str) -> Option<&ParamSpec> {
        self.params.iter().find(|s| s.name == name)
    }
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

/// Cartesian product of the axes, first axis varying slowest.
fn grid(axes: &[(&str, &[&str])]) -> Vec<Params> {
    let mut out = vec![Params::new()];
    for (name, values) in axes {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for p in &out {
            for v in *values {
                let mut q = p.clone();
                q.set(name, *v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Explicit rows of values for `names`.
fn rows(names: &[&str], values: &[&[&str]]) -> Vec<Params> {
    values
        .iter()
        .map(|row| {
            let mut p = Params::new();
            for (n, v) in names.iter().zip(row.iter()) {
                p.set(n, *v);
            }
            p
        })
        .collect()
}

fn product(a: Vec<Params>, b: Vec<Params>) -> Vec<Params> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for p in &a {
        for q in &b {
            let mut m = p.clone();
            for (k, v) in &q.0 {
                m.set(k, v.clone());
            }
            out.push(m);
        }
    }
    out
}

const R_1_4: &[&str] = &["1", "2", "3", "4"];
const X_GRID: &[&str] = &["1/10", "1/4", "2/5"];
const Z_GRID: &[&str] = &["1/4", "1/2", "3/4"];
const A_THIRDS: &[&str] = &["1/3", "1/2", "2/3"];
const K_0_2: &[&str] = &["0", "1", "2"];
const R_0_2: &[&str] = &["0", "1", "2"];

fn bits(ctx: &PrecisionCtx) -> u32 {
    ctx.precision_bits() + GUARD_BITS
}

fn q(n: i64, d: i64, b: u32) -> Real {
    Real::from_ratio(n, d, b)
}

/// `3F2(1, 1, c; 2-x, 2+x; z)`.
fn f32_x(c: Real, x: &Real, z: Real, ctx: &PrecisionCtx) -> Result<SumResult<Real>> {
    let b = bits(ctx);
    let one = q(1, 1, b);
    let two = q(2, 1, b);
    hyp_eval(&HypParams::new(vec![one.clone(), one, c], vec![two.clone() - x, two + x], z), ctx)
}

fn i01(_: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = ctx.bits_for_terms(64);
    let mut binom = q(1, 1, b);
    let seq = TermSeq::new(1, DecayClass::Geometric { ratio_bound: 0.25 }, move |n| {
        let n = n as i64;
        binom *= q(2 * n * (2 * n - 1), n * n, b);
        let v = q(5, 2, b) / (q(n * n * n, 1, b) * &binom);
        if n % 2 == 1 {
            v
        } else {
            -v
        }
    });
    let lhs = sum_adaptive(seq, ctx);
    Ok(Outcome::new(lhs, Side::closed(zeta_int(3, ctx)?)))
}

/// `2 (1 - 4^-r) zeta(2r+1)`, or `2 log 2` at `r = 0`.
fn apery_value(r: usize, ctx: &PrecisionCtx) -> Result<Real> {
    let b = ctx.precision_bits();
    if r == 0 {
        return Ok(Real::ln2(b) * q(2, 1, b));
    }
    let c = q(1, 1, b) - q(1, 1, b) / q(4, 1, b).powi(r as i32);
    Ok(c * zeta_int::<Real>(2 * r as u32 + 1, ctx)? * q(2, 1, b))
}

fn i02(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let r = p.int("r")?;
    Ok(Outcome::new(apery_series::<Real>(r, ctx), Side::closed(apery_value(r, ctx)?)))
}

fn i03(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let (n, big_r) = (p.int("n")?, p.int("R")?);
    let b = ctx.precision_bits();
    let table = build_table_2r(n, big_r);
    let zero = || Rat::from_integer(0.into());
    let (mut ls, mut rs, mut diff) = (zero(), zero(), zero());
    // the product for m is the product for m - 1 times one more factor
    let mut prod = TruncSeries::<Rat>::one(big_r);
    for m in 0..=n {
        if m > 0 {
            prod = prod.mul(&genfunc_rhs_ordered(&[m], big_r));
        }
        for (r, c) in prod.coeffs().iter().enumerate() {
            let a = table.star(m, r);
            ls += a;
            rs += c;
            diff += (a - c).abs();
        }
    }
    let side = |v: &Rat| Side { value: Real::from_rat(v, b), err: 0.0, terms: (n + 1) * (big_r + 1), flagged: false };
    Ok(Outcome { lhs: side(&ls), rhs: side(&rs), exact_diff: Some(diff) })
}

fn i04(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let x = p.real("x", b)?;
    let lhs = Side::closed(closed_3f2_x(&x, ctx)?);
    let rhs = f32_x(q(3, 2, b), &x, q(1, 1, b), ctx)?;
    Ok(Outcome::new(lhs, rhs))
}

fn i05(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let (l, r) = quad_transform_check(&p.real("a", b)?, &p.real("b", b)?, &p.real("c", b)?, &p.real("z", b)?, ctx)?;
    Ok(Outcome::new(l, r))
}

fn i06(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let s = p.real("s", b)?;
    let lhs = digamma(&(s.clone() * q(2, 1, b)), ctx)?;
    let rhs = (digamma(&s, ctx)? + digamma(&(s.clone() + q(1, 2, b)), ctx)?) / q(2, 1, b) + Real::ln2(ctx.precision_bits());
    Ok(Outcome::new(Side::closed(lhs), Side::closed(rhs)))
}

/// Smallest `R` with `bound * x^(2(R+1)) / (1 - x^2) <= target`.
fn truncation_order(bound: f64, x: f64, target: f64) -> usize {
    let x2 = x * x;
    if x2 == 0.0 {
        return 0;
    }
    let mut r = 0usize;
    let mut t = bound * x2 / (1.0 - x2);
    while t > target && r < 10_000 {
        r += 1;
        t *= x2;
    }
    r
}

fn i07(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let x = p.real("x", b)?;
    let x2 = x.clone() * &x;
    // every coefficient is at most 2 zeta(3) < 4 log 2
    let bound = 4.0 * std::f64::consts::LN_2;
    let big_r = truncation_order(bound, x.to_f64(), ctx.target_abs_err() * 0.25);
    let mut lhs = Side::closed(q(0, 1, b));
    let mut zeta_side = Side::closed(q(0, 1, b));
    let mut pw = q(1, 1, b);
    for r in 0..=big_r {
        let s = apery_series::<Real>(r, ctx);
        let w = pw.to_f64();
        lhs.value += s.value.clone() * &pw;
        lhs.err += s.est_err() * w;
        lhs.terms += s.terms_used;
        lhs.flagged |= !s.converged;
        zeta_side.value += apery_value(r, ctx)? * &pw;
        pw *= &x2;
    }
    zeta_side.err = zeta_side.value.abs().to_f64() * zeta_side.value.epsilon() * (big_r as f64 + 4.0);
    let rhs = match p.choice("form")? {
        "zeta" => zeta_side,
        _ => {
            lhs.err += bound * pw.to_f64() / (1.0 - x2.to_f64());
            let one = q(1, 1, b);
            let h = f32_x(q(3, 2, b), &x, one.clone(), ctx)?;
            let scale = one.clone() / ((one.clone() - &x2) * q(2, 1, b));
            let s = scale.to_f64();
            h.map(|v| v * &scale, s).into()
        }
    };
    Ok(Outcome::new(lhs, rhs))
}

fn i08(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let (x, t) = (p.real("x", b)?, p.real("t", b)?);
    let lhs = functional_3f2(&x, &t, ctx)?;
    let rhs = f32_x(q(3, 2, b), &x, q(1, 1, b) - &t, ctx)?;
    Ok(Outcome::new(lhs, rhs))
}

fn i09(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let r = p.int("r")?;
    let z = p.real("z", b)?;
    let lhs = apery_series_z(r, &z, ctx)?;
    let one = q(1, 1, b);
    let sz = z.sqrt();
    let rhs: Side = if r == 0 {
        Side::closed((q(2, 1, b) / (one + &sz)).ln() * q(2, 1, b))
    } else {
        let w = (sz.clone() - &one) / (sz + &one);
        let li = polylog(2 * r as u32 + 1, &w, ctx)?;
        li.map(|v| -(v * q(2, 1, b)), 2.0).into()
    };
    Ok(Outcome::new(lhs, rhs))
}

fn i10(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let r = p.int("r")?;
    Ok(Outcome::new(mixed_lhs::<Real>(r, ctx)?, Side::closed(mixed_rhs(r, ctx)?)))
}

fn i11(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let r = p.int("r")?;
    let one = q(1, 1, ctx.precision_bits());
    Ok(Outcome::new(mpl_2r::<Real>(r, &one, ctx)?, Side::closed(zeta_2r(r, ctx))))
}

fn i12(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let one = q(1, 1, b);
    let form = p.choice("form")?;
    if form == "limit" {
        let lhs = apery_series::<Real>(0, ctx);
        return Ok(Outcome::new(lhs, Side::closed(Real::ln2(ctx.precision_bits()) * q(2, 1, b))));
    }
    let t = p.real("t", b)?;
    let s = (one.clone() - &t).sqrt();
    if form == "sqrt" {
        let wb = ctx.bits_for_terms(ctx.max_geometric_terms());
        let tw = t.with_precision(wb);
        let mut c = q(1, 1, wb);
        let seq = TermSeq::new(0, DecayClass::Geometric { ratio_bound: t.to_f64() }, move |n| {
            if n > 0 {
                let n = n as i64;
                c *= q(2 * n - 1, 2 * n, wb) * &tw;
            }
            c.clone()
        });
        let mut lhs = sum_adaptive(seq, ctx);
        lhs.value = lhs.value.with_precision(ctx.precision_bits());
        return Ok(Outcome::new(lhs, Side::closed(one / s)));
    }
    let lhs = apery_series_z(0, &(one.clone() - &t), ctx)?;
    let rhs = (q(2, 1, b) / (one + s)).ln() * q(2, 1, b);
    Ok(Outcome::new(lhs, Side::closed(rhs)))
}

fn i13(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let r = p.int("r")?;
    if p.choice("form")? == "binomial" {
        let (l, i) = integral_binomial_check::<Real>(r, ctx)?;
        return Ok(Outcome::new(l, i));
    }
    let b = ctx.precision_bits();
    let d = alt_double_sum::<Real>(r, ctx)?;
    let i = integral_li::<Real>(r, ctx)?;
    let head = zeta_2r::<Real>(r, ctx) * Real::ln2(b);
    let rhs = i.map(|v| v - head * q(2, 1, b), 1.0);
    Ok(Outcome::new(d, rhs))
}

fn i14(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let (l, r) = t_relation_check::<Real>(p.int("r")?, ctx)?;
    Ok(Outcome::new(l, r))
}

fn i16(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let (a, bb, x) = (p.real("a", b)?, p.real("b", b)?, p.real("x", b)?);
    let lhs = pf_3f2(&a, &bb, &x, ctx)?;
    let one = q(1, 1, b);
    let two = q(2, 1, b);
    let h = hyp_eval(&HypParams::new(vec![one.clone(), a, bb], vec![two.clone() - &x, two + &x], one), ctx)?;
    Ok(Outcome::new(lhs, h))
}

fn i17(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let (bb, x) = (p.real("b", b)?, p.real("x", b)?);
    let lhs = pf_3f2(&q(1, 1, b), &bb, &x, ctx)?;
    Ok(Outcome::new(lhs, pf_3f2_one_sided(&bb, &x, ctx)?))
}

fn i18(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let x = p.real("x", b)?;
    let one = q(1, 1, b);
    Ok(match p.choice("form")? {
        "half" => Outcome::new(pf_3f2(&one, &q(1, 2, b), &x, ctx)?, pf_3f2_half(&x, ctx)?),
        "sine" => Outcome::new(pf_3f2(&one, &one, &x, ctx)?, Side::closed(pf_3f2_sine(&x, ctx)?)),
        _ => Outcome::new(pf_3f2(&one, &q(3, 2, b), &x, ctx)?, Side::closed(closed_3f2_x(&x, ctx)?)),
    })
}

fn i19(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let (a, bb, c) = (p.real("a", b)?, p.real("b", b)?, p.real("c", b)?);
    let rhs = gauss_2f1_unit(&a, &bb, &c, ctx)?;
    let lhs = hyp_eval(&HypParams::new(vec![a, bb], vec![c], q(1, 1, b)), ctx)?;
    Ok(Outcome::new(lhs, Side::closed(rhs)))
}

fn i20(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let b = bits(ctx);
    let (a, x) = (p.real("a", b)?, p.real("x", b)?);
    let one = q(1, 1, b);
    let x2 = x.clone() * &x;
    // coefficients are at most zeta^*({2}_r) sum (a)_n/(n! n) <= 2 (-gamma - psi(1-a))
    let s1 = -(Real::euler_gamma(b) + digamma(&(one.clone() - &a), ctx)?);
    let bound = 2.0 * s1.to_f64() * (1.0 + 1e-12);
    let big_r = truncation_order(bound, x.to_f64(), ctx.target_abs_err() * 0.25);
    let mut lhs = Side::closed(q(0, 1, b));
    let mut pw = q(1, 1, b);
    for r in 0..=big_r {
        let s = param_apery_lhs(&a, r, ctx)?;
        let w = pw.to_f64();
        lhs.value += s.value.clone() * &pw;
        lhs.err += s.est_err() * w;
        lhs.terms += s.terms_used;
        lhs.flagged |= !s.converged;
        pw *= &x2;
    }
    lhs.err += bound * pw.to_f64() / (1.0 - x2.to_f64());
    let h = f32_x(one.clone() + &a, &x, one.clone(), ctx)?;
    let scale = a / (one - &x2);
    let s = scale.to_f64();
    Ok(Outcome::new(lhs, h.map(|v| v * &scale, s)))
}

fn i21(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let (l, r) = param_apery(&p.real("a", bits(ctx))?, p.int("r")?, ctx)?;
    Ok(Outcome::new(l, r))
}

fn i22(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let (l, r) = hurwitz_param_apery(&p.real("a", bits(ctx))?, p.int("k")?, p.int("r")?, ctx)?;
    Ok(Outcome::new(l, r))
}

fn i23(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let (l, r) = t_apery::<Real>(p.int("k")?, p.int("r")?, ctx)?;
    Ok(Outcome::new(l, r))
}

fn i24(p: &Params, ctx: &PrecisionCtx) -> Result<Outcome> {
    let (a, n, k) = (p.rat("a")?, p.int("n")?, p.int("k")?);
    let rel = match p.choice("relation")? {
        "rising" => PochhammerRelation::Rising,
        _ => PochhammerRelation::ReciprocalReflected,
    };
    let wide = ctx.at_bits(bits(ctx));
    let (fd, closed): (Real, Real) = pochhammer_derivative_check(&a, n, k, rel, &wide)?;
    let b = wide.precision_bits() as i32;
    // step h = 2^(-b/3): truncation ~ h^2, cancellation ~ eps / h^k
    let scale = fd.abs().to_f64() + 1.0;
    let err = scale * (2f64.powi(-2 * b / 3) + 8.0 * 2f64.powi(-b + k as i32 * b / 3));
    let fd = Side { value: fd.with_precision(ctx.precision_bits()), err, terms: 0, flagged: false };
    Ok(Outcome::new(fd, Side::closed(closed.with_precision(ctx.precision_bits()))))
}

const P_R: &[ParamSpec] = &[ParamSpec::int("r", 0, 8, "depth of the {2}_r sums")];
const P_R1: &[ParamSpec] = &[ParamSpec::int("r", 1, 8, "depth of the {2}_r sums")];
const P_X: &[ParamSpec] = &[ParamSpec::rational("x", -1.0, 1.0, "shift in the lower parameters 2-x, 2+x")];

pub static CATALOG: [IdentityCase; 23] = [
    IdentityCase {
        id: "I01",
        description: "Apéry's series for zeta(3)",
        statement: "(5/2) sum_{n>=1} (-1)^(n-1) / (n^3 C(2n,n)) = zeta(3)",
        params: &[],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || vec![Params::new()],
        eval: i01,
    },
    IdentityCase {
        id: "I02",
        description: "central-binomial series with zeta_n^*({2}_r)",
        statement: "sum_{n>=1} C(2n,n)/(n 4^n) zeta_n^*({2}_r) = 2(1-4^-r) zeta(2r+1); 2 log 2 at r=0",
        params: P_R,
        default_tol: 1e-10,
        kind: Kind::Numeric,
        grid: || grid(&[("r", &["0", "1", "2", "3", "4"])]),
        eval: i02,
    },
    IdentityCase {
        id: "I03",
        description: "generating function of zeta_m^*({2}_r), exact for every m <= n",
        statement: "sum_r zeta_m^*({2}_r) x^(2r) = prod_{j<=m} (1 - x^2/j^2)^-1, coefficients up to x^(2R)",
        params: &[ParamSpec::int("n", 0, 60, "largest m"), ParamSpec::int("R", 0, 60, "truncation order in x^2")],
        default_tol: 0.0,
        kind: Kind::Exact,
        grid: || grid(&[("n", &["25"]), ("R", &["40"])]),
        eval: i03,
    },
    IdentityCase {
        id: "I04",
        description: "digamma closed form of 3F2(1,1,3/2; 2-x,2+x; 1)",
        statement: "3F2(1,1,3/2;2-x,2+x;1) = 4log2(1-x^2) + 2(1-x^2)(psi(1-x/2)+psi(1+x/2)) - 2(1-x^2)(psi(1-x)+psi(1+x))",
        params: P_X,
        default_tol: 1e-10,
        kind: Kind::Numeric,
        grid: || grid(&[("x", X_GRID)]),
        eval: i04,
    },
    IdentityCase {
        id: "I05",
        description: "quadratic transformation of a well-poised 3F2",
        statement: "3F2(a,b,c;a-b+1,a-c+1;z) = (1-z)^-a 3F2(a-b-c+1,a/2,(a+1)/2;a-b+1,a-c+1;-4z/(1-z)^2)",
        params: &[
            ParamSpec::rational("a", -10.0, 10.0, ""),
            ParamSpec::rational("b", -10.0, 10.0, ""),
            ParamSpec::rational("c", -10.0, 10.0, ""),
            ParamSpec::rational("z", -1.0, 0.0, "argument, -1 < z < 0"),
        ],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || product(rows(&["a", "b", "c"], &[&["2", "6/5", "4/5"]]), grid(&[("z", &["-1/4", "-1/2", "-3/4"])])),
        eval: i05,
    },
    IdentityCase {
        id: "I06",
        description: "digamma duplication",
        statement: "psi(2s) = (psi(s) + psi(s+1/2))/2 + log 2",
        params: &[ParamSpec::rational("s", 0.0, 1e6, "positive argument")],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || grid(&[("s", &["1/3", "1/2", "5/4"])]),
        eval: i06,
    },
    IdentityCase {
        id: "I07",
        description: "power series in x of the 3F2 generating function",
        statement: "sum_r S_r x^(2r) = 2log2 + 2 sum_n (1-4^-n) zeta(2n+1) x^(2n) = 3F2(1,1,3/2;2-x,2+x;1)/(2(1-x^2))",
        params: &[
            ParamSpec::rational("x", -0.9, 0.9, "expansion point"),
            ParamSpec::choice("form", &["zeta", "hyp"], "right side: zeta series or 3F2"),
        ],
        default_tol: 1e-10,
        kind: Kind::Numeric,
        grid: || grid(&[("x", &["1/4", "1/2"]), ("form", &["zeta", "hyp"])]),
        eval: i07,
    },
    IdentityCase {
        id: "I08",
        description: "functional form of the 3F2 at argument 1-t",
        statement: "3F2(1,1,3/2;2-x,2+x;1-t) = 2(1-x^2)/(1-t) sum_n w^n (1/(x-n) - 1/(x+n)) + ..., w = (sqrt t - 1)/(sqrt t + 1)",
        params: &[
            ParamSpec::rational("x", -1.0, 1.0, "shift in the lower parameters"),
            ParamSpec::rational("t", 0.0, 1.0, ""),
        ],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || grid(&[("x", X_GRID), ("t", Z_GRID)]),
        eval: i08,
    },
    IdentityCase {
        id: "I09",
        description: "central-binomial series with factor (1-z)^n as a polylogarithm",
        statement: "sum_{n>=1} C(2n,n)/(n 4^n) zeta_n^*({2}_r) (1-z)^n = -2 Li_{2r+1}((sqrt z - 1)/(sqrt z + 1))",
        params: &[ParamSpec::int("r", 0, 8, "depth"), ParamSpec::rational("z", 0.0, 1.000001, "0 < z <= 1")],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || grid(&[("r", &["0", "1", "2", "3", "4"]), ("z", Z_GRID)]),
        eval: i09,
    },
    IdentityCase {
        id: "I10",
        description: "mixed values with alternating harmonic numbers",
        statement: "sum_n Hbar_{2n} zeta_{n-1}({2}_{r-1}) / n^2 = sum_{j=1}^r (-1)^j (1-4^-j) zeta({2}_{r-j}) zeta(2j+1)",
        params: P_R1,
        default_tol: 1e-6,
        kind: Kind::Numeric,
        grid: || grid(&[("r", R_1_4)]),
        eval: i10,
    },
    IdentityCase {
        id: "I11",
        description: "closed form of zeta({2}_r)",
        statement: "zeta({2}_r) = pi^(2r) / (2r+1)!",
        params: P_R1,
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || grid(&[("r", R_1_4)]),
        eval: i11,
    },
    IdentityCase {
        id: "I12",
        description: "central-binomial generating functions",
        statement: "sum_{n>=0} C(2n,n) t^n/4^n = 1/sqrt(1-t); sum_{n>=1} C(2n,n) t^n/(n 4^n) = 2 log(2/(1+sqrt(1-t))) -> 2 log 2",
        params: &[
            ParamSpec::choice("form", &["sqrt", "log", "limit"], "which generating function; limit is t -> 1"),
            ParamSpec::rational("t", 0.0, 1.0, "argument (unused for limit)"),
        ],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || {
            let mut g = grid(&[("form", &["sqrt", "log"]), ("t", Z_GRID)]);
            g.push(Params::from_pairs(&[("form", "limit")]));
            g
        },
        eval: i12,
    },
    IdentityCase {
        id: "I13",
        description: "integral of Li_{{2}_r}(t^2)/(1+t) against series",
        statement: "2 int_0^1 Li_{{2}_r}(t^2)/(1+t) dt = sum_{j=1}^{r+1} (-1)^(j+1) zeta({2}_{r-j+1}) S_{j-1}; minus 2 zeta({2}_r) log 2 it is 2 sum Hbar_{2n} zeta_{n-1}({2}_{r-1})/n^2",
        params: &[
            ParamSpec::int("r", 1, 6, "depth"),
            ParamSpec::choice("form", &["binomial", "doublesum"], "series side"),
        ],
        default_tol: 1e-6,
        kind: Kind::Numeric,
        grid: || grid(&[("r", R_1_4), ("form", &["binomial", "doublesum"])]),
        eval: i13,
    },
    IdentityCase {
        id: "I14",
        description: "odd harmonic weights against harmonic ones",
        statement: "sum t_n zeta_{n-1}({2}_{r-1})/n^2 = sum H_n zeta_{n-1}({2}_{r-1})/n^2 - 2 sum_{j=1}^r (-1)^j (1-4^-j) zeta({2}_{r-j}) zeta(2j+1)",
        params: &[ParamSpec::int("r", 1, 6, "depth")],
        default_tol: 1e-6,
        kind: Kind::Numeric,
        grid: || grid(&[("r", R_1_4)]),
        eval: i14,
    },
    IdentityCase {
        id: "I16",
        description: "partial-fraction form of 3F2(1,a,b; 2-x,2+x; 1)",
        statement: "3F2(1,a,b;2-x,2+x;1) = (x^2-1) sum_{k!=0} sign(k)|k| Gamma(3-a-b) (a)_{|k|-1}(b)_{|k|-1} / (Gamma(2+|k|-a)Gamma(2+|k|-b)) (-1)^k/(k(x+k)) ...",
        params: &[
            ParamSpec::rational("a", -3.0, 3.0, "not an integer other than 0, 1"),
            ParamSpec::rational("b", -3.0, 3.0, "not an integer other than 0, 1; a + b < 3"),
            ParamSpec::rational("x", -1.0, 1.0, ""),
        ],
        default_tol: 1e-10,
        kind: Kind::Numeric,
        grid: || {
            product(
                rows(&["a", "b"], &[&["1", "1"], &["1", "3/2"], &["1/2", "1/2"], &["1/3", "2/3"]]),
                grid(&[("x", X_GRID)]),
            )
        },
        eval: i16,
    },
    IdentityCase {
        id: "I17",
        description: "one-sided partial fractions for a = 1",
        statement: "3F2(1,1,b;2-x,2+x;1) = (x^2-1) sum_{k>=1} (-1)^k (b)_{k-1}/(2-b)_k (1/(x+k) - 1/(x-k))",
        params: &[ParamSpec::rational("b", -3.0, 2.0, "b < 2"), ParamSpec::rational("x", -1.0, 1.0, "")],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || grid(&[("b", &["1/2", "1", "3/2"]), ("x", X_GRID)]),
        eval: i17,
    },
    IdentityCase {
        id: "I18",
        description: "special cases b = 1/2, 1, 3/2 of the partial-fraction form",
        statement: "b=1/2: (x^2-1) sum (-1)^k k/((k^2-1/4)(k^2-x^2)); b=1: ((x^2-1)/x)(1/x - pi/sin(pi x)); b=3/2: the digamma closed form",
        params: &[
            ParamSpec::choice("form", &["half", "sine", "digamma"], "which special case"),
            ParamSpec::rational("x", -1.0, 1.0, ""),
        ],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || grid(&[("form", &["half", "sine", "digamma"]), ("x", X_GRID)]),
        eval: i18,
    },
    IdentityCase {
        id: "I19",
        description: "Gauss summation",
        statement: "2F1(a,b;c;1) = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))",
        params: &[
            ParamSpec::rational("a", -20.0, 20.0, ""),
            ParamSpec::rational("b", -20.0, 20.0, ""),
            ParamSpec::rational("c", 0.0, 40.0, "c > 0, c - a - b > 0"),
        ],
        default_tol: 1e-25,
        kind: Kind::Numeric,
        grid: || rows(&["a", "b", "c"], &[&["-1", "2", "5"], &["1/2", "1/2", "2"], &["3/10", "2/5", "2"]]),
        eval: i19,
    },
    IdentityCase {
        id: "I20",
        description: "parametric generating function",
        statement: "sum_r (sum_n (a)_n/(n! n) zeta_n^*({2}_r)) x^(2r) = a/(1-x^2) 3F2(1,1,1+a;2-x,2+x;1)",
        params: &[ParamSpec::rational("a", 0.0, 1.0, ""), ParamSpec::rational("x", -0.9, 0.9, "")],
        default_tol: 1e-10,
        kind: Kind::Numeric,
        grid: || rows(&["a", "x"], &[&["1/2", "1/4"], &["1/3", "1/4"]]),
        eval: i20,
    },
    IdentityCase {
        id: "I21",
        description: "parametric central-binomial series",
        statement: "sum_n (a)_n/(n! n) zeta_n^*({2}_r) = 2 sum_n (-1)^(n-1) (a)_n/(1-a)_n n^-(2r+1)",
        params: &[ParamSpec::rational("a", 0.0, 1.0, ""), ParamSpec::int("r", 0, 6, "depth")],
        default_tol: 1e-10,
        kind: Kind::Numeric,
        grid: || grid(&[("a", A_THIRDS), ("r", R_0_2)]),
        eval: i21,
    },
    IdentityCase {
        id: "I22",
        description: "parametric series with Hurwitz-type harmonic weights",
        statement: "sum_n (a)_n/(n! n) zeta_n^*({2}_r) zeta_n({1}_k;a) = 2 sum_{i+j=k} sum_n (-1)^(n-1) n^-(2r+1) (a)_n/(1-a)_n zeta_n({1}_i;a) zeta_n^*({1}_j;1-a)",
        params: &[
            ParamSpec::rational("a", 0.0, 1.0, ""),
            ParamSpec::int("k", 0, 3, "Hurwitz depth"),
            ParamSpec::int("r", 0, 6, "depth"),
        ],
        default_tol: 1e-6,
        kind: Kind::Numeric,
        grid: || grid(&[("a", A_THIRDS), ("k", K_0_2), ("r", R_0_2)]),
        eval: i22,
    },
    IdentityCase {
        id: "I23",
        description: "the a = 1/2 case with t-harmonic sums",
        statement: "sum_n C(2n,n)/(n 4^n) zeta_n^*({2}_r) t_n({1}_k) = 2 sum_{i+j=k} sum_n (-1)^(n-1) n^-(2r+1) t_n({1}_i) t_n^*({1}_j)",
        params: &[ParamSpec::int("k", 0, 3, "depth of t sums"), ParamSpec::int("r", 0, 6, "depth")],
        default_tol: 1e-6,
        kind: Kind::Numeric,
        grid: || grid(&[("k", K_0_2), ("r", R_0_2)]),
        eval: i23,
    },
    IdentityCase {
        id: "I24",
        description: "Pochhammer derivatives by finite differences",
        statement: "d^k/da^k (a)_n = k! (a)_n zeta_n({1}_k;a); d^k/da^k 1/(1-a)_n = k!/(1-a)_n zeta_n^*({1}_k;1-a)",
        params: &[
            ParamSpec::rational("a", -10.0, 10.0, "not an integer"),
            ParamSpec::int("n", 0, 40, ""),
            ParamSpec::int("k", 0, 2, "derivative order"),
            ParamSpec::choice("relation", &["rising", "reflected"], ""),
        ],
        default_tol: 1e-12,
        kind: Kind::Numeric,
        grid: || {
            grid(&[("a", &["1/3", "1/2"]), ("n", &["2", "3", "5"]), ("k", &["1", "2"]), ("relation", &["rising", "reflected"])])
        },
        eval: i24,
    },
];
