//! Exact finite nested sums: multiple harmonic (star) sums and their Hurwitz
//! and `t` variants, harmonic numbers, Pochhammer symbols and central
//! binomial ratios.
//!
//! Everything is generic over [`Field`], so the same code produces exact
//! [`Rat`] values for tests and working-precision reals for the series
//! engine.

use std::fmt;

use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::numeric::{rat, Field, PrecisionCtx, Rat, Scalar};

/// A finite sequence of positive exponents `(k_1, ..., k_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&k| k == 0) {
            return Err(Error::Usage(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// `{m}_r`: the exponent `m` repeated `r` times.
    pub fn repeated(m: u32, r: usize) -> Self {
        assert!(m > 0, "exponent must be positive");
        Composition(vec![m; r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.first().is_some_and(|&k| k > 1)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `sum over n >= n_1 (>|>=) ... (>|>=) n_r > 0` of `prod weight(n_j, k_j)`.
///
/// Accumulates from the innermost index outwards: `inner[m]` holds the sum
/// over the remaining indices bounded by `m`.
fn nested_sum<C: Field>(n: usize, parts: &[u32], star: bool, weight: impl Fn(usize, u32) -> C) -> C {
    if parts.is_empty() {
        return C::one();
    }
    // inner[m] for m = 0..=n; start with the empty tail (constant 1)
    let mut inner: Vec<C> = vec![C::one(); n + 1];
    for &k in parts.iter().rev() {
        let mut next = vec![C::zero(); n + 1];
        let mut acc = C::zero();
        for m in 1..=n {
            let bound = if star { m } else { m - 1 };
            acc += weight(m, k) * &inner[bound];
            next[m] = acc.clone();
        }
        inner = next;
    }
    inner[n].clone()
}

fn inv_pow<C: Field>(base: C, k: u32) -> C {
    let mut p = C::one();
    for _ in 0..k {
        p *= &base;
    }
    C::one() / p
}

pub fn mhs_in<C: Field>(n: usize, k: &Composition, bits: u32) -> C {
    nested_sum(n, k.parts(), false, |m, e| inv_pow(C::from_int(m as i64, bits), e))
}

pub fn mhss_in<C: Field>(n: usize, k: &Composition, bits: u32) -> C {
    nested_sum(n, k.parts(), true, |m, e| inv_pow(C::from_int(m as i64, bits), e))
}

/// `zeta_n(k)`, strict inequalities.
pub fn mhs(n: usize, k: &Composition) -> Rat {
    mhs_in(n, k, 0)
}

/// `zeta_n^*(k)`, non-strict inequalities.
pub fn mhss(n: usize, k: &Composition) -> Rat {
    mhss_in(n, k, 0)
}

fn check_hurwitz<C: Field>(n: usize, alpha: &C, bits: u32) -> Result<()> {
    for m in 1..=n {
        let d = C::from_int(m as i64 - 1, bits) + alpha;
        if d.is_zero() {
            return domain(format!("Hurwitz sum denominator vanishes at index {m} (alpha = {alpha:?})"));
        }
    }
    Ok(())
}

/// Hurwitz-type sum with indices shifted to `n_j + alpha - 1`.
pub fn hurwitz_mhs_in<C: Field>(n: usize, k: &Composition, alpha: &C, bits: u32) -> Result<C> {
    check_hurwitz(n, alpha, bits)?;
    Ok(nested_sum(n, k.parts(), false, |m, e| inv_pow(C::from_int(m as i64 - 1, bits) + alpha, e)))
}

pub fn hurwitz_mhss_in<C: Field>(n: usize, k: &Composition, alpha: &C, bits: u32) -> Result<C> {
    check_hurwitz(n, alpha, bits)?;
    Ok(nested_sum(n, k.parts(), true, |m, e| inv_pow(C::from_int(m as i64 - 1, bits) + alpha, e)))
}

pub fn hurwitz_mhs(n: usize, k: &Composition, alpha: &Rat) -> Result<Rat> {
    hurwitz_mhs_in(n, k, alpha, 0)
}

pub fn hurwitz_mhss(n: usize, k: &Composition, alpha: &Rat) -> Result<Rat> {
    hurwitz_mhss_in(n, k, alpha, 0)
}

/// Multiple `t`-harmonic (star) sum: weights `1/(n_j - 1/2)^{k_j}`.
pub fn t_sum(n: usize, k: &Composition, star: bool) -> Rat {
    let half = rat(1, 2);
    let r = if star { hurwitz_mhss(n, k, &half) } else { hurwitz_mhs(n, k, &half) };
    r.expect("alpha = 1/2 never produces a zero denominator")
}

/// `H_n = sum_{k<=n} 1/k`.
pub fn harmonic(n: usize) -> Rat {
    (1..=n).fold(Rat::zero(), |acc, k| acc + rat(1, k as i64))
}

/// `t_n = sum_{k<=n} 1/(k - 1/2)`.
pub fn odd_harmonic(n: usize) -> Rat {
    (1..=n).fold(Rat::zero(), |acc, k| acc + rat(2, 2 * k as i64 - 1))
}

/// `sum_{j<=m} (-1)^j / j`; the alternating harmonic number `H̄_{2n}` is
/// `alt_harmonic(2n)` (negative with this sign convention).
pub fn alt_harmonic(m: usize) -> Rat {
    (1..=m).fold(Rat::zero(), |acc, j| acc + rat(if j % 2 == 0 { 1 } else { -1 }, j as i64))
}

/// `C(2n, n) / 4^n` via `b_n = b_{n-1} (2n - 1) / (2n)`.
pub fn central_binomial_ratio_in<C: Field>(n: usize, bits: u32) -> C {
    let mut b = C::one();
    for m in 1..=n as i64 {
        b *= C::from_ratio(2 * m - 1, 2 * m, bits);
    }
    b
}

pub fn central_binomial_ratio(n: usize) -> Rat {
    central_binomial_ratio_in(n, 0)
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, `(a)_0 = 1`.
pub fn pochhammer<C: Field>(a: &C, n: usize, bits: u32) -> C {
    let mut p = C::one();
    for j in 0..n {
        p *= a.clone() + C::from_int(j as i64, bits);
    }
    p
}

/// One row of `zeta_n^*({2}_r)` and `zeta_n({2}_r)` for `r = 0..=R`,
/// advanced one `n` at a time.
#[derive(Debug, Clone)]
pub struct Row2r<C> {
    n: usize,
    bits: u32,
    star: Vec<C>,
    plain: Vec<C>,
}

impl<C: Field> Row2r<C> {
    pub fn new(max_r: usize, bits: u32) -> Self {
        let mut star = vec![C::zero(); max_r + 1];
        let mut plain = vec![C::zero(); max_r + 1];
        star[0] = C::one();
        plain[0] = C::one();
        Row2r { n: 0, bits, star, plain }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Moves from `n` to `n + 1`.
    pub fn advance(&mut self) {
        self.n += 1;
        let m = self.n as i64;
        let inv = C::from_ratio(1, m * m, self.bits);
        // star uses the updated lower entry, plain the previous one
        for r in 1..self.star.len() {
            let lower = self.star[r - 1].clone();
            self.star[r] += inv.clone() * lower;
        }
        for r in (1..self.plain.len()).rev() {
            let lower = self.plain[r - 1].clone();
            self.plain[r] += inv.clone() * lower;
        }
    }

    pub fn star(&self, r: usize) -> &C {
        &self.star[r]
    }

    pub fn plain(&self, r: usize) -> &C {
        &self.plain[r]
    }
}

/// Tables of `zeta_n^*({2}_r)` and `zeta_n({2}_r)` for `n <= N`, `r <= R`.
#[derive(Debug, Clone)]
pub struct SumTable2r<C> {
    star_values: Vec<Vec<C>>,
    plain_values: Vec<Vec<C>>,
}

impl<C: Field> SumTable2r<C> {
    pub fn max_n(&self) -> usize {
        self.star_values.len() - 1
    }

    pub fn max_r(&self) -> usize {
        self.star_values[0].len() - 1
    }

    pub fn star(&self, n: usize, r: usize) -> &C {
        &self.star_values[n][r]
    }

    pub fn plain(&self, n: usize, r: usize) -> &C {
        &self.plain_values[n][r]
    }
}

pub fn build_table_2r_in<C: Field>(max_n: usize, max_r: usize, bits: u32) -> SumTable2r<C> {
    let mut row = Row2r::<C>::new(max_r, bits);
    let mut star_values = Vec::with_capacity(max_n + 1);
    let mut plain_values = Vec::with_capacity(max_n + 1);
    star_values.push(row.star.clone());
    plain_values.push(row.plain.clone());
    for _ in 0..max_n {
        row.advance();
        star_values.push(row.star.clone());
        plain_values.push(row.plain.clone());
    }
    SumTable2r { star_values, plain_values }
}

/// Exact tables.
pub fn build_table_2r(max_n: usize, max_r: usize) -> SumTable2r<Rat> {
    build_table_2r_in(max_n, max_r, 0)
}

/// Which Pochhammer derivative relation to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochhammerRelation {
    /// `d^k/da^k (a)_n = k! (a)_n zeta_n({1}_k; a)`
    Rising,
    /// `d^k/da^k 1/(1-a)_n = k!/(1-a)_n zeta_n^*({1}_k; 1-a)`
    ReciprocalReflected,
}

/// Finite-difference derivative (lhs) versus closed formula (rhs).
///
/// Central differences with step `h = 2^(-bits/3)`; `k` is 0, 1 or 2.
pub fn pochhammer_derivative_check<T: Scalar>(
    a: &Rat,
    n: usize,
    k: usize,
    relation: PochhammerRelation,
    ctx: &PrecisionCtx,
) -> Result<(T, T)> {
    if k > 2 {
        return Err(Error::Usage(format!("derivative order {k} not supported (0..=2)")));
    }
    if a.is_integer() {
        return domain("Pochhammer derivative check needs a non-integer a");
    }
    let bits = ctx.precision_bits();
    let a_r = T::from_rat(a, bits);
    let f = |x: &T| -> T {
        match relation {
            PochhammerRelation::Rising => pochhammer(x, n, bits),
            PochhammerRelation::ReciprocalReflected => {
                T::one() / pochhammer(&(T::one() - x.clone()), n, bits)
            }
        }
    };
    let h = T::from_int(2, bits).powi(-((bits / 3) as i32));
    let lhs = match k {
        0 => f(&a_r),
        1 => (f(&(a_r.clone() + &h)) - f(&(a_r.clone() - &h))) / (T::from_int(2, bits) * &h),
        _ => {
            (f(&(a_r.clone() + &h)) - T::from_int(2, bits) * f(&a_r) + f(&(a_r.clone() - &h))) / (h.clone() * &h)
        }
    };
    let ones = Composition::repeated(1, k);
    let k_fact = T::from_int(if k == 2 { 2 } else { 1 }, bits);
    let rhs = match relation {
        PochhammerRelation::Rising => {
            k_fact * pochhammer(&a_r, n, bits) * hurwitz_mhs_in(n, &ones, &a_r, bits)?
        }
        PochhammerRelation::ReciprocalReflected => {
            let b = T::one() - a_r.clone();
            k_fact / pochhammer(&b, n, bits) * hurwitz_mhss_in(n, &ones, &b, bits)?
        }
    };
    Ok((lhs, rhs))
}
