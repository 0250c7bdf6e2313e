//! DFT backends: a direct `O(M^2)` reference transform that evaluates the
//! defining sum term by term, and an iterative radix-2 decimation-in-time
//! FFT for power-of-two lengths.
//!
//! Both backends compute `out[k] = K * sum_n x[n] * e^{-2*pi*i*k*n/M}` with
//! `K` fixed by the normalization mode over the transform's own length `M`.
//!
//! Counting convention: the reference transform tallies one multiplication
//! per term, `M^2` in total including the trivial ones by the unit root,
//! plus `M*(M-1)` additions. The FFT tallies one multiplication and two
//! additions per butterfly, `(M/2)*log2(M)` multiplications and
//! `M*log2(M)` additions, again with no special case for unit twiddles.
//! The final normalization pass is a real scaling and is never tallied.

use num_complex::Complex64;

use crate::counter::{NoTally, OpCounter, Tally};
use crate::error::Error;
use crate::signal::{ComplexSignal, NormalizationMode};
use crate::twiddle::TwiddleTable;

/// Which transform backend to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// The direct reference transform, any length.
    Naive,
    /// Radix-2 FFT, power-of-two lengths only.
    Fft,
    /// FFT when the length is a power of two, reference transform otherwise.
    Auto,
}

/// Direct evaluation of the DFT sum, ascending `n`, one output bin at a
/// time. This is the reference the fast paths are checked against.
pub fn dft_naive(x: &ComplexSignal, mode: NormalizationMode) -> ComplexSignal {
    transform_naive(x, mode, &mut NoTally)
}

/// Same as [`dft_naive`], tallying operations into `counter`.
pub fn dft_naive_counted(
    x: &ComplexSignal,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> ComplexSignal {
    transform_naive(x, mode, counter)
}

/// Iterative radix-2 decimation-in-time FFT: bit-reversal permutation
/// followed by `log2(M)` butterfly stages.
pub fn fft_radix2(x: &ComplexSignal, mode: NormalizationMode) -> Result<ComplexSignal, Error> {
    transform_fft(x, mode, &mut NoTally)
}

/// Same as [`fft_radix2`], tallying operations into `counter`.
pub fn fft_radix2_counted(
    x: &ComplexSignal,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> Result<ComplexSignal, Error> {
    transform_fft(x, mode, counter)
}

/// Dispatches to the FFT for power-of-two lengths and to the reference
/// transform otherwise, tallying into `counter` when one is supplied.
pub fn dft_auto(
    x: &ComplexSignal,
    mode: NormalizationMode,
    counter: Option<&mut OpCounter>,
) -> ComplexSignal {
    let fft_capable = x.len().is_power_of_two();
    match counter {
        Some(c) => {
            if fft_capable {
                transform_fft(x, mode, c).expect("length checked")
            } else {
                transform_naive(x, mode, c)
            }
        }
        None => {
            if fft_capable {
                fft_radix2(x, mode).expect("length checked")
            } else {
                dft_naive(x, mode)
            }
        }
    }
}

fn transform_naive<T: Tally>(
    x: &ComplexSignal,
    mode: NormalizationMode,
    tally: &mut T,
) -> ComplexSignal {
    let table = TwiddleTable::new(x.len());
    let mut out = naive_kernel(x.samples(), &table, tally);
    apply_scale(&mut out, mode.scale_factor(x.len()));
    ComplexSignal::from_raw(out)
}

fn transform_fft<T: Tally>(
    x: &ComplexSignal,
    mode: NormalizationMode,
    tally: &mut T,
) -> Result<ComplexSignal, Error> {
    let m = x.len();
    if !m.is_power_of_two() {
        return Err(Error::NotAPowerOfTwo(m));
    }
    let table = TwiddleTable::new(m);
    let mut buf = x.samples().to_vec();
    fft_kernel(&mut buf, &table, tally);
    apply_scale(&mut buf, mode.scale_factor(m));
    Ok(ComplexSignal::from_raw(buf))
}

fn naive_kernel<T: Tally>(
    samples: &[Complex64],
    table: &TwiddleTable,
    tally: &mut T,
) -> Vec<Complex64> {
    let m = samples.len();
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let mut acc = samples[0] * table.factor(0);
        tally.mul(1);
        // Twiddle exponent k*n mod m, tracked incrementally so the index
        // never leaves [0, m).
        let mut idx = 0usize;
        for &sample in &samples[1..] {
            idx += k;
            if idx >= m {
                idx -= m;
            }
            acc += sample * table.factor(idx);
            tally.mul(1);
            tally.add(1);
        }
        out.push(acc);
    }
    out
}

fn fft_kernel<T: Tally>(buf: &mut [Complex64], table: &TwiddleTable, tally: &mut T) {
    let m = buf.len();
    debug_assert!(m.is_power_of_two());
    if m == 1 {
        return;
    }

    bit_reverse_permute(buf);

    let mut block = 2;
    while block <= m {
        let half = block / 2;
        let stride = m / block;
        for start in (0..m).step_by(block) {
            for j in 0..half {
                let w = table.factor(j * stride);
                let t = w * buf[start + j + half];
                tally.mul(1);
                let u = buf[start + j];
                buf[start + j] = u + t;
                buf[start + j + half] = u - t;
                tally.add(2);
            }
        }
        block *= 2;
    }
}

fn bit_reverse_permute(buf: &mut [Complex64]) {
    let m = buf.len();
    if m <= 2 {
        return;
    }
    let bits = m.trailing_zeros();
    for i in 0..m {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            buf.swap(i, j);
        }
    }
}

fn apply_scale(values: &mut [Complex64], factor: f64) {
    if factor != 1.0 {
        for v in values.iter_mut() {
            *v *= factor;
        }
    }
}
