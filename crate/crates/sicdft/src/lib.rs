//! Fast computation of the square-index coefficients (SICs) of a DFT.
//!
//! For a signal whose length `N` is a perfect square, the DFT bins at
//! multiples of `sqrt(N)` can be obtained without touching the other bins:
//! summing the input at stride `sqrt(N)` folds it onto `sqrt(N)` points
//! using complex additions only, and the DFT of the folded signal equals
//! the subsampled spectrum. A power-of-two `sqrt(N)` then costs
//! `O(sqrt(N) * log2(sqrt(N)))` multiplications instead of the
//! `O(N * log2(N))` of a full FFT.
//!
//! The crate provides the folding step, direct and radix-2 FFT backends,
//! the end-to-end pipeline together with a full-transform reference path,
//! instrumented operation counting, and a benchmark harness that checks
//! the cost claims with exact tallies.
//!
//! ```
//! use sicdft::{compute_sics, ComplexSignal, Complex64, NormalizationMode};
//!
//! let x = ComplexSignal::new(vec![Complex64::new(1.0, 0.0); 16]).unwrap();
//! let sics = compute_sics(&x, NormalizationMode::OneOverN, None).unwrap();
//! assert_eq!(sics.len(), 4);
//! assert!((sics.values()[0].re - 1.0).abs() < 1e-12);
//! ```

pub mod bench;
mod compact;
mod counter;
mod error;
pub mod generate;
pub mod io;
mod pipeline;
mod signal;
mod transform;
mod twiddle;

pub use compact::{compact_sic, compact_sic_counted};
pub use counter::OpCounter;
pub use error::Error;
pub use num_complex::Complex64;
pub use pipeline::{compute_sics, compute_sics_with_backend, sics_by_full_dft};
pub use signal::{
    validate_square_length, CompactedSignal, ComplexSignal, NormalizationMode, SicSpectrum,
    SquareLength,
};
pub use transform::{
    dft_auto, dft_naive, dft_naive_counted, fft_radix2, fft_radix2_counted, Backend,
};
pub use twiddle::TwiddleTable;
