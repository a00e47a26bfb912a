//! Gauss–Legendre rules on `(0, 1)` at arbitrary precision.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::numeric::Scalar;

#[derive(Debug, Clone)]
pub struct QuadratureRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
    /// Polynomials up to this degree are integrated exactly.
    pub degree: usize,
}

/// `(P_n(x), P_{n-1}(x))` by the three-term recurrence.
fn legendre<T: Scalar>(n: usize, x: &T, bits: u32) -> (T, T) {
    let mut p0 = T::from_int(1, bits);
    let mut p1 = x.clone();
    for k in 1..n {
        let kk = k as i64;
        let p2 = (x.clone() * &p1 * T::from_int(2 * kk + 1, bits) - p0 * T::from_int(kk, bits))
            / T::from_int(kk + 1, bits);
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

fn legendre_f64(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let k = k as f64;
        let p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

impl<T: Scalar> QuadratureRule<T> {
    /// `n`-point rule mapped to `(0, 1)`, computed at `bits` precision.
    pub fn gauss_legendre(n: usize, bits: u32) -> Self {
        assert!(n >= 1, "a quadrature rule needs at least one node");
        let mut nodes = vec![T::zero(); n];
        let mut weights = vec![T::zero(); n];
        let one = T::from_int(1, bits);
        let half = T::from_ratio(1, 2, bits);
        let nn = T::from_int(n as i64, bits);
        let tiny = 2f64.powi(-(bits as i32) + 4);
        for i in 0..n.div_ceil(2) {
            let mut g = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, pm) = legendre_f64(n, g);
                let dp = n as f64 * (g * p - pm) / (g * g - 1.0);
                let dx = p / dp;
                g -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let mut x = T::from_f64(g, bits);
            for _ in 0..64 {
                let (p, pm) = legendre(n, &x, bits);
                let dp = nn.clone() * (x.clone() * &p - pm) / (x.clone() * &x - &one);
                let dx = p / dp;
                x -= &dx;
                if dx.abs().to_f64() <= tiny {
                    break;
                }
            }
            let (p, pm) = legendre(n, &x, bits);
            let dp = nn.clone() * (x.clone() * &p - pm) / (x.clone() * &x - &one);
            // weight on (-1, 1) is 2 / ((1 - x^2) P_n'(x)^2); halved on (0, 1)
            let w = one.clone() / ((one.clone() - x.clone() * &x) * &dp * &dp);
            let xi = (one.clone() + &x) * &half;
            let xj = (one.clone() - &x) * &half;
            nodes[i] = xi;
            weights[i] = w.clone();
            nodes[n - 1 - i] = xj;
            weights[n - 1 - i] = w;
        }
        QuadratureRule { nodes, weights, degree: 2 * n - 1 }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, mut f: impl FnMut(&T) -> T) -> T {
        let mut acc = T::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += f(x) * w;
        }
        acc
    }
}

type RuleCache = Mutex<HashMap<(TypeId, usize, u32), Arc<dyn Any + Send + Sync>>>;

/// Shared rule for `(n, bits)`; built on first use.
pub fn cached_rule<T: Scalar + 'static>(n: usize, bits: u32) -> Arc<QuadratureRule<T>> {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (TypeId::of::<T>(), n, bits);
    if let Some(hit) = cache.lock().expect("quadrature cache poisoned").get(&key) {
        return hit.clone().downcast().expect("cache entry keyed by type");
    }
    let rule = Arc::new(QuadratureRule::<T>::gauss_legendre(n, bits));
    cache.lock().expect("quadrature cache poisoned").insert(key, rule.clone());
    rule
}
