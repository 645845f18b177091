use num_complex::Complex64;

/// Rising factorial `(λ)ₘ = λ(λ+1)…(λ+m−1)`, with `(λ)₀ = 1`.
pub fn pochhammer(lambda: Complex64, m: usize) -> Complex64 {
    (0..m).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (lambda + j as f64))
}

/// Memoised rising factorials of one base.
///
/// Owned per call site; filling is append-only, so the values never depend
/// on the order in which indices were requested.
#[derive(Debug, Clone)]
pub struct PochhammerCache {
    base: Complex64,
    values: Vec<Complex64>,
}

impl PochhammerCache {
    pub fn new(base: Complex64) -> Self {
        Self {
            base,
            values: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn base(&self) -> Complex64 {
        self.base
    }

    /// `(base)ₘ`, extending the table with `(λ)ₘ₊₁ = (λ)ₘ·(λ + m)`.
    pub fn get(&mut self, m: usize) -> Complex64 {
        while self.values.len() <= m {
            let j = self.values.len() - 1;
            let next = self.values[j] * (self.base + j as f64);
            self.values.push(next);
        }
        self.values[m]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn empty_product_and_factorial() {
        assert_eq!(pochhammer(re(3.7), 0), re(1.0));
        let mut fact = 1.0;
        for m in 0..15 {
            assert_eq!(pochhammer(re(1.0), m), re(fact));
            fact *= (m + 1) as f64;
        }
        assert_eq!(pochhammer(re(0.5), 3), re(15.0 / 8.0));
    }

    #[test]
    fn cache_matches_direct_in_any_order() {
        let z = Complex64::new(0.3, -1.2);
        let mut c = PochhammerCache::new(z);
        for m in [7, 2, 11, 0, 5] {
            let d = pochhammer(z, m);
            assert!((c.get(m) - d).norm() <= 1e-14 * d.norm().max(1.0));
        }
        assert_eq!(c.len(), 12);
    }
}
