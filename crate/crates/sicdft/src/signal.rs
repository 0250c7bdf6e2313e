//! Domain types shared by the whole crate: complex signals, square-length
//! validation and normalization semantics.

use num_complex::Complex64;

use crate::error::Error;

/// An immutable, non-empty sequence of finite complex samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSignal {
    samples: Vec<Complex64>,
}

impl ComplexSignal {
    /// Validates that `samples` is non-empty and every component is finite
    /// (no NaN or infinity).
    pub fn new(samples: Vec<Complex64>) -> Result<Self, Error> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        for (i, s) in samples.iter().enumerate() {
            if !s.re.is_finite() || !s.im.is_finite() {
                return Err(Error::NonFiniteSample(i));
            }
        }
        Ok(Self { samples })
    }

    /// Wraps values produced internally by the crate's own kernels.
    pub(crate) fn from_raw(samples: Vec<Complex64>) -> Self {
        debug_assert!(!samples.is_empty());
        Self { samples }
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    #[allow(clippy::len_without_is_empty)] // never empty by construction
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Checks that this signal's length is a perfect square.
    pub fn square_length(&self) -> Result<SquareLength, Error> {
        validate_square_length(self.len())
    }
}

/// A length `n` known to be a perfect square, together with its exact
/// integer square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SquareLength {
    n: usize,
    root: usize,
}

impl SquareLength {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

/// Validates that `n >= 1` is a perfect square, using integer arithmetic
/// only so the check is exact for every representable length.
pub fn validate_square_length(n: usize) -> Result<SquareLength, Error> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    let root = n.isqrt();
    if root * root == n {
        Ok(SquareLength { n, root })
    } else {
        Err(Error::NotASquare(n))
    }
}

/// A signal folded from `N` to `sqrt(N)` points, with the original length
/// kept as provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactedSignal {
    samples: Vec<Complex64>,
    original_length: usize,
}

impl CompactedSignal {
    /// Requires `samples.len()^2 == original_length` and finite samples.
    pub fn new(samples: Vec<Complex64>, original_length: usize) -> Result<Self, Error> {
        let inner = ComplexSignal::new(samples)?;
        if inner.len() * inner.len() != original_length {
            return Err(Error::CompactionMismatch {
                compacted: inner.len(),
                original: original_length,
            });
        }
        Ok(Self {
            samples: inner.samples,
            original_length,
        })
    }

    pub(crate) fn from_raw(samples: Vec<Complex64>, original_length: usize) -> Self {
        debug_assert_eq!(samples.len() * samples.len(), original_length);
        Self {
            samples,
            original_length,
        }
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn original_length(&self) -> usize {
        self.original_length
    }

    /// Reinterprets the folded samples as an ordinary signal of length
    /// `sqrt(N)`, ready to be transformed.
    pub fn into_signal(self) -> ComplexSignal {
        ComplexSignal::from_raw(self.samples)
    }
}

/// Scale convention for transform output.
///
/// The factor is always dimensioned against the length passed to
/// [`NormalizationMode::scale_factor`]; the SIC pipeline passes the
/// *original* `N`-point length even though its backend transform runs on
/// `sqrt(N)` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizationMode {
    /// No scaling (factor 1), the convention of most FFT libraries.
    None,
    /// Factor `1/N`.
    OneOverN,
    /// Factor `1/sqrt(N)`, which preserves signal energy across the
    /// transform.
    Unitary,
}

impl NormalizationMode {
    /// The scale factor `K` for a transform over `original_length` points.
    pub fn scale_factor(self, original_length: usize) -> f64 {
        debug_assert!(original_length >= 1);
        match self {
            NormalizationMode::None => 1.0,
            NormalizationMode::OneOverN => 1.0 / original_length as f64,
            NormalizationMode::Unitary => 1.0 / (original_length as f64).sqrt(),
        }
    }
}

/// The `sqrt(N)` square-index coefficients of an `N`-point DFT.
///
/// `values()[k]` holds the coefficient at absolute bin `k * sqrt(N)` of the
/// original transform, scaled by the recorded normalization mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SicSpectrum {
    values: Vec<Complex64>,
    normalization: NormalizationMode,
    original_length: usize,
}

impl SicSpectrum {
    pub(crate) fn from_raw(
        values: Vec<Complex64>,
        normalization: NormalizationMode,
        original_length: usize,
    ) -> Self {
        debug_assert_eq!(values.len() * values.len(), original_length);
        Self {
            values,
            normalization,
            original_length,
        }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Number of coefficients, `sqrt(N)`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn normalization(&self) -> NormalizationMode {
        self.normalization
    }

    pub fn original_length(&self) -> usize {
        self.original_length
    }

    pub fn root(&self) -> usize {
        self.values.len()
    }

    /// The bin this coefficient occupies in the full `N`-point spectrum,
    /// `k * sqrt(N)`.
    pub fn absolute_bin(&self, k: usize) -> usize {
        k * self.root()
    }
}
