use num_complex::Complex64;
use std::f64::consts::TAU;

/// Precomputed roots of unity for an `m`-point forward transform:
/// `factors()[j] = e^{-2*pi*i*j/m}`.
///
/// Each entry is computed directly from its angle rather than by repeated
/// multiplication, so the error per entry stays at a few ulps independent
/// of `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwiddleTable {
    factors: Vec<Complex64>,
}

impl TwiddleTable {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "twiddle table needs a positive length");
        let mut factors = Vec::with_capacity(m);
        factors.push(Complex64::new(1.0, 0.0));
        for j in 1..m {
            factors.push(Complex64::cis(-TAU * j as f64 / m as f64));
        }
        Self { factors }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    #[inline]
    pub fn factor(&self, j: usize) -> Complex64 {
        self.factors[j]
    }

    pub fn factors(&self) -> &[Complex64] {
        &self.factors
    }
}
