//! Parametric central-binomial series `sum (a)_n/(n! n) zeta_n^*({2}_r) ...` and
//! their alternating counterparts.

use crate::error::{domain, Result};
use crate::finite_sums::Row2r;
use crate::numeric::{PrecisionCtx, Scalar};
use crate::series::{
    accel_bits, apery_series, apery_terms, sum_adaptive, sum_nested_weighted, DecayClass, NestedLevel, SumResult,
    TermSeq,
};

fn check_a<T: Scalar>(a: &T) -> Result<()> {
    if *a > T::zero() && *a < T::one() {
        Ok(())
    } else {
        domain(format!("parameter a must lie in (0, 1), got {a:.20}"))
    }
}

/// Generator of `(a)_n / (n! n) * zeta_n^*({2}_r)`.
struct ParamTerms<T> {
    a: T,
    poch: T,
    row: Row2r<T>,
    r: usize,
    bits: u32,
}

impl<T: Scalar> ParamTerms<T> {
    fn new(a: &T, r: usize, bits: u32) -> Self {
        ParamTerms { a: a.with_precision(bits), poch: T::from_int(1, bits), row: Row2r::new(r, bits), r, bits }
    }

    fn next_term(&mut self) -> T {
        self.row.advance();
        let n = self.row.n() as i64;
        let nn = T::from_int(n, self.bits);
        self.poch *= (self.a.clone() + T::from_int(n - 1, self.bits)) / &nn;
        self.poch.clone() * self.row.star(self.r) / nn
    }
}

/// Rising sums `e_i(n) = zeta_n({1}_i; alpha)` and star sums
/// `E_j(n) = zeta_n^*({1}_j; beta)`, advanced one `n` at a time.
struct OneSums<T> {
    strict: Vec<T>,
    star: Vec<T>,
}

impl<T: Scalar> OneSums<T> {
    fn new(k: usize, bits: u32) -> Self {
        let mut strict = vec![T::from_int(0, bits); k + 1];
        let mut star = strict.clone();
        strict[0] = T::from_int(1, bits);
        star[0] = T::from_int(1, bits);
        OneSums { strict, star }
    }

    fn advance(&mut self, w: &T, u: &T) {
        for i in (1..self.strict.len()).rev() {
            let add = self.strict[i - 1].clone() * w;
            self.strict[i] += add;
        }
        for j in 1..self.star.len() {
            let add = self.star[j - 1].clone() * u;
            self.star[j] += add;
        }
    }

    /// `sum_{i+j=k} e_i E_j`.
    fn convolution(&self) -> T {
        let k = self.strict.len() - 1;
        let mut acc = T::zero();
        for i in 0..=k {
            acc += self.strict[i].clone() * &self.star[k - i];
        }
        acc
    }
}

/// `sum_{n>=1} (a)_n / (n! n) * zeta_n^*({2}_r)` for `0 < a < 1`.
pub fn param_apery_lhs<T: Scalar>(a: &T, r: usize, ctx: &PrecisionCtx) -> Result<SumResult<T>> {
    check_a(a)?;
    let bits = accel_bits(ctx);
    let mut gen = ParamTerms::new(a, r, bits);
    let exponent = 2.0 - a.to_f64();
    let seq = TermSeq::new(1, DecayClass::Algebraic { exponent }, move |_| gen.next_term());
    let mut res = sum_adaptive(seq, ctx);
    res.value = res.value.with_precision(ctx.precision_bits());
    Ok(res)
}

/// `2 sum_{n>=1} (-1)^{n-1} n^{-2r-1} (a)_n/(1-a)_n * sum_{i+j=k} w_i(n) s_j(n)`
/// where `w_i`, `s_j` are the strict/star depth-one sums with the given
/// weights.
fn alternating_side<T: Scalar>(
    rho_step: impl Fn(i64) -> T + 'static,
    strict_w: impl Fn(i64) -> T + 'static,
    star_w: impl Fn(i64) -> T + 'static,
    k: usize,
    r: usize,
    ctx: &PrecisionCtx,
) -> SumResult<T> {
    let bits = accel_bits(ctx);
    let mut rho = T::from_int(2, bits);
    let mut sums = OneSums::<T>::new(k, bits);
    let p = 2 * r as i32 + 1;
    let term = move |n: usize| -> T {
        let n = n as i64;
        rho *= rho_step(n);
        sums.advance(&strict_w(n), &star_w(n));
        let v = rho.clone() * sums.convolution() / T::from_int(n, bits).powi(p);
        if n % 2 == 0 { -v } else { v }
    };
    let seq = TermSeq::new(1, DecayClass::Alternating, term);
    let mut res = sum_adaptive(seq, ctx);
    res.value = res.value.with_precision(ctx.precision_bits());
    res
}

/// Both sides of the parametric identity
/// `sum (a)_n/(n! n) zeta_n^*({2}_r) = 2 sum (-1)^{n-1} (a)_n/(1-a)_n n^{-2r-1}`.
pub fn param_apery<T: Scalar>(a: &T, r: usize, ctx: &PrecisionCtx) -> Result<(SumResult<T>, SumResult<T>)> {
    hurwitz_param_apery(a, 0, r, ctx)
}

/// Both sides of the `k`-fold derivative of [`param_apery`] in `a`:
/// the left weights get `zeta_n({1}_k; a)`, the right the convolution
/// `sum_{i+j=k} zeta_n({1}_i; a) zeta_n^*({1}_j; 1-a)`.
pub fn hurwitz_param_apery<T: Scalar>(
    a: &T,
    k: usize,
    r: usize,
    ctx: &PrecisionCtx,
) -> Result<(SumResult<T>, SumResult<T>)> {
    check_a(a)?;
    if k > 3 {
        return domain(format!("depth k = {k} exceeds the supported maximum 3"));
    }
    let bits = accel_bits(ctx);
    let aw = a.with_precision(bits);
    let lhs = if k == 0 {
        param_apery_lhs(a, r, ctx)?
    } else {
        let mut gen = ParamTerms::new(a, r, bits);
        let am1 = aw.clone() - T::from_int(1, bits);
        let levels: Vec<NestedLevel<'_, T>> = (0..k)
            .map(|_| {
                let am1 = am1.clone();
                NestedLevel::new(true, move |m| T::from_int(1, bits) / (T::from_int(m as i64, bits) + &am1))
            })
            .collect();
        let mut res = sum_nested_weighted(|_| gen.next_term(), &levels, ctx);
        res.value = res.value.with_precision(ctx.precision_bits());
        res
    };
    let (a1, a2, a3) = (aw.clone(), aw.clone(), aw);
    let rhs = alternating_side(
        // (a)_n/(1-a)_n gains (a+n-1)/(n-a)
        move |n| (a1.clone() + T::from_int(n - 1, bits)) / (T::from_int(n, bits) - &a1),
        move |n| T::from_int(1, bits) / (T::from_int(n - 1, bits) + &a2),
        move |n| T::from_int(1, bits) / (T::from_int(n, bits) - &a3),
        k,
        r,
        ctx,
    );
    Ok((lhs, rhs))
}

/// The `a = 1/2` case written with central binomials and `t`-sums:
/// `sum C(2n,n)/(n 4^n) zeta_n^*({2}_r) t_n({1}_k)` against
/// `2 sum (-1)^{n-1} n^{-2r-1} sum_{i+j=k} t_n({1}_i) t_n^*({1}_j)`.
pub fn t_apery<T: Scalar>(k: usize, r: usize, ctx: &PrecisionCtx) -> Result<(SumResult<T>, SumResult<T>)> {
    if k > 3 {
        return domain(format!("depth k = {k} exceeds the supported maximum 3"));
    }
    let bits = accel_bits(ctx);
    let lhs = if k == 0 {
        apery_series(r, ctx)
    } else {
        let mut gen = apery_terms::<T>(r, None, bits);
        let half = T::from_ratio(1, 2, bits);
        let levels: Vec<NestedLevel<'_, T>> = (0..k)
            .map(|_| {
                let half = half.clone();
                NestedLevel::new(true, move |m| T::from_int(1, bits) / (T::from_int(m as i64, bits) - &half))
            })
            .collect();
        let mut res = sum_nested_weighted(|_| gen.next_term(), &levels, ctx);
        res.value = res.value.with_precision(ctx.precision_bits());
        res
    };
    let w = move |n: i64| T::from_int(2, bits) / T::from_int(2 * n - 1, bits);
    let rhs = alternating_side(move |_| T::from_int(1, bits), w, w, k, r, ctx);
    Ok((lhs, rhs))
}
