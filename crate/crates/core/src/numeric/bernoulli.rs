use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rat;

fn cache() -> &'static Mutex<Vec<Rat>> {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rat::one()]))
}

/// Bernoulli number `B_n` (convention `B_1 = -1/2`), exact.
///
/// Computed from `sum_{k=0}^{m} C(m+1, k) B_k = 0` and cached.
pub fn bernoulli(n: usize) -> Rat {
    let mut table = cache().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let m = table.len();
        // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
        let mut binom = BigInt::one();
        let mut acc = Rat::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += Rat::from_integer(binom.clone()) * b;
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        let next = -acc / Rat::from_integer(BigInt::from(m + 1));
        table.push(next);
    }
    table[n].clone()
}
