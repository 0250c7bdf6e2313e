//! Deterministic test-signal generation. All generators are pure functions
//! of their arguments, so the same seed always reproduces the same samples
//! byte for byte.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::Error;
use crate::signal::ComplexSignal;

/// Complex white noise: independent standard-normal real and imaginary
/// parts, seeded explicitly.
pub fn random_signal(n: usize, seed: u64) -> Result<ComplexSignal, Error> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    let mut rng = SplitMix64::new(seed);
    let samples = (0..n)
        .map(|_| {
            let (re, im) = rng.next_normal_pair();
            Complex64::new(re, im)
        })
        .collect();
    Ok(ComplexSignal::from_raw(samples))
}

/// Complex exponential at the given spectrum bin: `x[j] = e^{2*pi*i*bin*j/n}`.
pub fn tone(n: usize, bin: usize) -> Result<ComplexSignal, Error> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    if bin >= n {
        return Err(Error::ToneBinOutOfRange { bin, n });
    }
    let samples = (0..n)
        .map(|j| Complex64::cis(TAU * ((bin * j) % n) as f64 / n as f64))
        .collect();
    Ok(ComplexSignal::from_raw(samples))
}

/// Unit impulse at index 0.
pub fn impulse(n: usize) -> Result<ComplexSignal, Error> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    let mut samples = vec![Complex64::new(0.0, 0.0); n];
    samples[0] = Complex64::new(1.0, 0.0);
    Ok(ComplexSignal::from_raw(samples))
}

/// Constant signal `x[j] = value`.
pub fn constant(n: usize, value: Complex64) -> Result<ComplexSignal, Error> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    ComplexSignal::new(vec![value; n])
}

/// SplitMix64 generator. Small, fast and stable across platforms and
/// releases, which keeps generated fixtures reproducible forever.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in (0, 1]; never zero, so logarithms stay finite.
    fn next_unit(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 1.0) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// One Box-Muller round: two independent standard normals.
    fn next_normal_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_unit();
        let u2 = self.next_unit();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = TAU * u2;
        (radius * angle.cos(), radius * angle.sin())
    }
}
