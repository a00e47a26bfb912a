//! Cohen–Villegas–Zagier acceleration of alternating series.

use crate::numeric::Scalar;

/// Number of CVZ terms for a relative error of about `2^-bits_wanted`.
pub fn cvz_terms_for_bits(bits_wanted: u32) -> usize {
    // error decays like (3 + sqrt 8)^-n, log2(3 + sqrt 8) = 2.5431
    (bits_wanted as f64 / 2.5431).ceil() as usize + 2
}

/// Approximates `sum_{k>=0} (-1)^k a_k` from `a_0..a_{n-1}` (`n = a.len()`).
pub fn cvz_sum<T: Scalar>(a: &[T], bits: u32) -> T {
    let n = a.len();
    if n == 0 {
        return T::zero();
    }
    let root = (T::from_int(3, bits) + T::from_int(8, bits).sqrt()).powi(n as i32);
    let d = (root.clone() + T::one() / root) / T::from_int(2, bits);
    let mut b = T::from_int(-1, bits);
    let mut c = -d.clone();
    let mut s = T::zero();
    let ni = n as i64;
    for (k, ak) in a.iter().enumerate() {
        let k = k as i64;
        c = b.clone() - c;
        s += c.clone() * ak;
        // b <- (k+n)(k-n) b / ((k+1/2)(k+1))
        b = b * T::from_ratio(2 * (k + ni) * (k - ni), (2 * k + 1) * (k + 1), bits);
    }
    s / d
}
