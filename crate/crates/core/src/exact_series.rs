//! Truncated power series in `y = x^2`.
//!
//! Every series in scope is even in `x`, so coefficient `j` is the
//! coefficient of `x^{2j}`.

use std::ops::Mul;

use num_traits::One;

use crate::error::{domain, Result};
use crate::finite_sums::build_table_2r;
use crate::numeric::{Field, Rat};

/// Coefficients of `x^0, x^2, ..., x^{2 order}`; higher terms are unknown,
/// not zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Field> TruncSeries<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least the constant term");
        TruncSeries { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `1 - c x^2` truncated at `order`.
    pub fn one_minus(c: C, order: usize) -> Self {
        let mut s = Self::one(order);
        if order >= 1 {
            s.coeffs[1] = -c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &C {
        &self.coeffs[j]
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    /// Cauchy product to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return domain("series inverse needs a nonzero constant term");
        }
        let inv0 = C::one() / c0.clone();
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for m in 1..self.coeffs.len() {
            let mut acc = C::zero();
            for i in 1..=m {
                acc += self.coeffs[i].clone() * &out[m - i];
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `self / (1 - c x^2)`, by `out_i = self_i + c out_{i-1}`.
    pub fn div_one_minus(&self, c: &C) -> Self {
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            let v = if i == 0 { a.clone() } else { a.clone() + out[i - 1].clone() * c };
            out.push(v);
        }
        TruncSeries { coeffs: out }
    }

    /// Value at `x^2 = y` of the truncated polynomial.
    pub fn eval(&self, y: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    }
}

impl<C: Field> Mul for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: Self) -> TruncSeries<C> {
        TruncSeries::mul(self, rhs)
    }
}

pub fn series_mul<C: Field>(s: &TruncSeries<C>, t: &TruncSeries<C>) -> TruncSeries<C> {
    s.mul(t)
}

pub fn series_inv<C: Field>(s: &TruncSeries<C>) -> Result<TruncSeries<C>> {
    s.inv()
}

/// `sum_{r<=R} zeta_n^*({2}_r) x^{2r}`.
pub fn genfunc_lhs(n: usize, max_r: usize) -> TruncSeries<Rat> {
    let table = build_table_2r(n, max_r);
    TruncSeries::new((0..=max_r).map(|r| table.star(n, r).clone()).collect())
}

/// `prod_{j<=n} (1 - x^2/j^2)^{-1}` expanded to order `R`.
pub fn genfunc_rhs(n: usize, max_r: usize) -> TruncSeries<Rat> {
    genfunc_rhs_ordered(&(1..=n).collect::<Vec<_>>(), max_r)
}

/// The same product taken over the factors `js` in the given order.
pub fn genfunc_rhs_ordered(js: &[usize], max_r: usize) -> TruncSeries<Rat> {
    let mut acc = TruncSeries::<Rat>::one(max_r);
    for &j in js {
        acc = acc.div_one_minus(&Rat::new(1.into(), ((j * j) as i64).into()));
    }
    acc
}

/// Exact coefficientwise comparison of both sides of the generating function.
pub fn check_gf(n: usize, max_r: usize) -> bool {
    genfunc_lhs(n, max_r) == genfunc_rhs(n, max_r)
}

/// Power series of `sin(pi x) / (pi x)` in `u = pi^2 x^2`:
/// `sum_k (-1)^k u^k / (2k+1)!`.
pub fn sinc_series(order: usize) -> TruncSeries<Rat> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut fact = Rat::one();
    for k in 0..=order {
        if k > 0 {
            fact *= Rat::from_integer(((2 * k) * (2 * k + 1)).into());
        }
        let c = Rat::one() / fact.clone();
        coeffs.push(if k % 2 == 0 { c } else { -c });
    }
    TruncSeries::new(coeffs)
}
