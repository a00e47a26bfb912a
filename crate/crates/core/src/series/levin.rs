//! Levin u-transform for partial sums with power-law tails.

use crate::numeric::Scalar;

/// `L_k^{(n0)}` of the Levin u-transform with shift `beta`.
///
/// `partial[m]` is the partial sum through term `m` and `terms[m]` that term;
/// the remainder estimate is `(beta + m) * terms[m]`. Requires
/// `partial.len() > n0 + k` and nonzero terms in the window.
pub fn levin_u<T: Scalar>(partial: &[T], terms: &[T], n0: usize, k: usize, beta: f64, bits: u32) -> Option<T> {
    if partial.len() <= n0 + k || terms.len() <= n0 + k {
        return None;
    }
    let beta = T::from_f64(beta, bits);
    let last = beta.clone() + T::from_int((n0 + k) as i64, bits);
    let mut num = T::zero();
    let mut den = T::zero();
    // binomial(k, j) * (-1)^j, updated multiplicatively
    let mut binom = T::one();
    for j in 0..=k {
        let m = n0 + j;
        if num_traits::Zero::is_zero(&terms[m]) {
            return None;
        }
        let pos = beta.clone() + T::from_int(m as i64, bits);
        let omega = pos.clone() * &terms[m];
        let scale = if k >= 1 { (pos / &last).powi((k - 1) as i32) } else { T::one() };
        let w = binom.clone() * scale / omega;
        num += w.clone() * &partial[m];
        den += w;
        // C(k, j+1) = C(k, j) * (k - j) / (j + 1), with the sign flip
        binom = -(binom * T::from_ratio((k - j) as i64, (j + 1) as i64, bits));
    }
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(num / den)
}
