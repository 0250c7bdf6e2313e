//! End-to-end computation of square-index coefficients: fold the input to
//! `sqrt(N)` points, transform at the reduced length, then scale once with
//! the factor dimensioned against the original `N`.
//!
//! [`sics_by_full_dft`] computes the same coefficients the expensive way —
//! a full `N`-point reference transform subsampled at stride `sqrt(N)` —
//! and exists purely as the correctness oracle for the fast path.

use num_complex::Complex64;

use crate::compact::{compact_sic, compact_sic_counted};
use crate::counter::OpCounter;
use crate::error::Error;
use crate::signal::{ComplexSignal, NormalizationMode, SicSpectrum};
use crate::transform::{dft_auto, dft_naive, fft_radix2, fft_radix2_counted, dft_naive_counted, Backend};
use crate::twiddle::TwiddleTable;

/// Computes the `sqrt(N)` coefficients `X[k*sqrt(N)]` of the `N`-point DFT
/// of `x` by folding first and transforming the short signal.
///
/// The backend transform always runs unnormalized; the requested mode is
/// applied once at the end with the factor taken over the original length
/// `N`, so a `1/N` mode really divides by `N` and not by `sqrt(N)`.
/// Folding and transform operations are tallied into `counter` when one is
/// supplied; the final scaling is not.
pub fn compute_sics(
    x: &ComplexSignal,
    mode: NormalizationMode,
    counter: Option<&mut OpCounter>,
) -> Result<SicSpectrum, Error> {
    compute_sics_with_backend(x, mode, Backend::Auto, counter)
}

/// [`compute_sics`] with an explicit backend choice for the `sqrt(N)`-point
/// transform. Forcing [`Backend::Fft`] fails with
/// [`Error::NotAPowerOfTwo`] when `sqrt(N)` is not a power of two.
pub fn compute_sics_with_backend(
    x: &ComplexSignal,
    mode: NormalizationMode,
    backend: Backend,
    mut counter: Option<&mut OpCounter>,
) -> Result<SicSpectrum, Error> {
    let square = x.square_length()?;

    let folded = match counter.as_deref_mut() {
        Some(c) => compact_sic_counted(x, c)?,
        None => compact_sic(x)?,
    };
    let short = folded.into_signal();

    let unnormalized = match (backend, counter) {
        (Backend::Auto, c) => dft_auto(&short, NormalizationMode::None, c),
        (Backend::Naive, Some(c)) => dft_naive_counted(&short, NormalizationMode::None, c),
        (Backend::Naive, None) => dft_naive(&short, NormalizationMode::None),
        (Backend::Fft, Some(c)) => fft_radix2_counted(&short, NormalizationMode::None, c)?,
        (Backend::Fft, None) => fft_radix2(&short, NormalizationMode::None)?,
    };

    let values = scale(unnormalized.samples(), mode.scale_factor(square.n()));
    Ok(SicSpectrum::from_raw(values, mode, square.n()))
}

/// Reference path: runs the full `N`-point direct transform and extracts
/// bins `k*sqrt(N)`. Never takes a fast path; the cost is `O(N^2)`.
pub fn sics_by_full_dft(x: &ComplexSignal, mode: NormalizationMode) -> Result<SicSpectrum, Error> {
    let square = x.square_length()?;
    let n = square.n();
    let root = square.root();

    // Unnormalized full spectrum by direct summation, same term order as
    // the naive backend.
    let table = TwiddleTable::new(n);
    let samples = x.samples();
    let mut picked = Vec::with_capacity(root);
    for k in (0..n).step_by(root.max(1)) {
        let mut acc = samples[0] * table.factor(0);
        let mut idx = 0usize;
        for &sample in &samples[1..] {
            idx += k;
            if idx >= n {
                idx -= n;
            }
            acc += sample * table.factor(idx);
        }
        picked.push(acc);
    }

    let values = scale(&picked, mode.scale_factor(n));
    Ok(SicSpectrum::from_raw(values, mode, n))
}

fn scale(values: &[Complex64], factor: f64) -> Vec<Complex64> {
    if factor == 1.0 {
        values.to_vec()
    } else {
        values.iter().map(|v| v * factor).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn nine_point_signal() -> ComplexSignal {
        ComplexSignal::new(vec![
            c(11.0, 11.0),
            c(22.0, 22.0),
            c(33.0, 33.0),
            c(-5.0, -5.0),
            c(-6.0, -6.0),
            c(-7.0, -7.0),
            c(9.0, -9.0),
            c(10.0, -10.0),
            c(11.0, -11.0),
        ])
        .unwrap()
    }

    fn max_rel_err(got: &SicSpectrum, want: &SicSpectrum) -> f64 {
        let scale = want
            .values()
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        got.values()
            .iter()
            .zip(want.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
            / scale
    }

    #[test]
    fn nine_point_golden_sics() {
        let spectrum = compute_sics(&nine_point_signal(), NormalizationMode::OneOverN, None).unwrap();
        let expected = [
            c(8.66667, 2.0),
            c(-2.69936, -0.44152),
            c(-0.9673, -2.5584),
        ];
        assert_eq!(spectrum.len(), 3);
        for (k, (got, want)) in spectrum.values().iter().zip(&expected).enumerate() {
            assert!(
                (got.re - want.re).abs() <= 1e-4 && (got.im - want.im).abs() <= 1e-4,
                "k={k}: {got} vs {want}"
            );
        }
        assert_eq!(spectrum.absolute_bin(1), 3);
    }

    #[test]
    fn constant_signal_concentrates_at_dc() {
        for n in [4usize, 9, 64] {
            let x = generate::constant(n, c(2.5, -1.0)).unwrap();
            let spectrum = compute_sics(&x, NormalizationMode::OneOverN, None).unwrap();
            assert!((spectrum.values()[0] - c(2.5, -1.0)).norm() <= 1e-12);
            for v in &spectrum.values()[1..] {
                assert!(v.norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn matches_subsampled_full_spectrum_on_random_input() {
        let x = generate::random_signal(64, 21).unwrap();
        let fast = compute_sics(&x, NormalizationMode::None, None).unwrap();
        let slow = sics_by_full_dft(&x, NormalizationMode::None).unwrap();
        assert!(max_rel_err(&fast, &slow) <= 1e-9);

        // Spot-check against the full transform directly as well.
        let full = dft_naive(&x, NormalizationMode::None);
        for (k, v) in fast.values().iter().enumerate() {
            let want = full.samples()[k * 8];
            assert!((v - want).norm() <= 1e-9 * want.norm().max(1.0), "k={k}");
        }
    }

    #[test]
    fn oracle_flat_spectrum_for_impulse() {
        let x = generate::impulse(16).unwrap();
        let spectrum = sics_by_full_dft(&x, NormalizationMode::None).unwrap();
        for v in spectrum.values() {
            assert!((v - c(1.0, 0.0)).norm() <= 1e-12);
        }
    }

    #[test]
    fn energy_in_non_square_bins_leaves_sics_empty() {
        // Sum of tones at bins not divisible by sqrt(16) = 4.
        let n = 16;
        let mut samples = vec![c(0.0, 0.0); n];
        for bin in [1usize, 2, 3, 5, 6, 7, 9, 11, 14] {
            let tone = generate::tone(n, bin).unwrap();
            for (acc, t) in samples.iter_mut().zip(tone.samples()) {
                *acc += t;
            }
        }
        let x = ComplexSignal::new(samples).unwrap();
        for spectrum in [
            sics_by_full_dft(&x, NormalizationMode::None).unwrap(),
            compute_sics(&x, NormalizationMode::None, None).unwrap(),
        ] {
            for (k, v) in spectrum.values().iter().enumerate() {
                assert!(v.norm() <= 1e-10, "k={k}: {v}");
            }
        }
    }

    #[test]
    fn first_coefficient_is_the_scaled_total_sum()
    {
        for (n, mode) in [
            (25usize, NormalizationMode::None),
            (36, NormalizationMode::OneOverN),
            (49, NormalizationMode::Unitary),
        ] {
            let x = generate::random_signal(n, n as u64).unwrap();
            let spectrum = compute_sics(&x, mode, None).unwrap();
            let total: Complex64 = x.samples().iter().sum();
            let expected = total * mode.scale_factor(n);
            let err = (spectrum.values()[0] - expected).norm();
            assert!(err <= 1e-12 * expected.norm().max(1.0), "n={n}");
        }
    }

    #[test]
    fn one_over_n_mode_is_the_unnormalized_result_scaled() {
        let x = generate::random_signal(81, 2).unwrap();
        let plain = compute_sics(&x, NormalizationMode::None, None).unwrap();
        let scaled = compute_sics(&x, NormalizationMode::OneOverN, None).unwrap();
        for (a, b) in scaled.values().iter().zip(plain.values()) {
            assert_eq!(*a, b * (1.0 / 81.0));
        }
    }

    #[test]
    fn non_square_input_is_refused() {
        let x = generate::random_signal(12, 0).unwrap();
        assert_eq!(
            compute_sics(&x, NormalizationMode::None, None).unwrap_err(),
            Error::NotASquare(12)
        );
        assert_eq!(
            sics_by_full_dft(&x, NormalizationMode::None).unwrap_err(),
            Error::NotASquare(12)
        );
    }

    #[test]
    fn forced_fft_backend_requires_power_of_two_root() {
        let x = generate::random_signal(9, 0).unwrap();
        assert_eq!(
            compute_sics_with_backend(&x, NormalizationMode::None, Backend::Fft, None)
                .unwrap_err(),
            Error::NotAPowerOfTwo(3)
        );

        let x = generate::random_signal(16, 0).unwrap();
        let via_fft =
            compute_sics_with_backend(&x, NormalizationMode::None, Backend::Fft, None).unwrap();
        let via_naive =
            compute_sics_with_backend(&x, NormalizationMode::None, Backend::Naive, None).unwrap();
        assert!(max_rel_err(&via_fft, &via_naive) <= 1e-12);
    }

    #[test]
    fn pipeline_cost_stays_within_the_folded_budget() {
        // Naive backend: N - sqrt(N) fold additions, then sqrt(N)^2 = N
        // multiplications in the short transform.
        let x = generate::random_signal(81, 5).unwrap();
        let mut counter = OpCounter::new();
        compute_sics_with_backend(&x, NormalizationMode::None, Backend::Naive, Some(&mut counter))
            .unwrap();
        assert_eq!(counter.multiplications(), 81);
        assert_eq!(counter.additions(), (81 - 9) + 9 * 8);
        assert!(counter.additions() <= 2 * 81);

        // FFT backend at N = 2^12: (sqrt(N)/2)*log2(sqrt(N)) butterflies.
        let n = 1 << 12;
        let x = generate::random_signal(n, 5).unwrap();
        let mut counter = OpCounter::new();
        compute_sics_with_backend(&x, NormalizationMode::None, Backend::Fft, Some(&mut counter))
            .unwrap();
        assert_eq!(counter.multiplications(), 64 / 2 * 6);
        assert_eq!(counter.additions(), (n as u64 - 64) + 64 * 6);
        assert!(counter.multiplications() <= 64 / 2 * 6 + 64);
        assert!(counter.additions() <= 2 * n as u64);
    }
}
