//! Benchmark harness comparing full-spectrum transforms against the
//! fold-then-transform path for square-index coefficients, plus growth-rate
//! fits of the measured operation counts.
//!
//! Per `(n, method)` pair the harness runs one discarded warmup, takes the
//! median wall time over the requested repetitions, and performs a single
//! instrumented run for exact operation tallies. Inputs are generated
//! deterministically from the seed, so tallies are identical across runs;
//! only the wall times vary. Timing covers the computation alone — input
//! generation and serialization happen outside the clock, while folding is
//! inside it for the `Compact*` methods since it is part of that path's
//! cost.

use std::fmt;
use std::hint::black_box;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use crate::counter::OpCounter;
use crate::error::Error;
use crate::generate;
use crate::pipeline::compute_sics_with_backend;
use crate::signal::{ComplexSignal, NormalizationMode};
use crate::transform::{dft_naive, dft_naive_counted, fft_radix2, fft_radix2_counted, Backend};
use crate::validate_square_length;

/// How the coefficients are computed in a benchmark run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Direct transform of all `N` points.
    FullNaive,
    /// Radix-2 FFT of all `N` points.
    FullFft,
    /// Fold to `sqrt(N)`, then direct transform.
    CompactNaive,
    /// Fold to `sqrt(N)`, then radix-2 FFT.
    CompactFft,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::FullNaive,
        Method::FullFft,
        Method::CompactNaive,
        Method::CompactFft,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::FullNaive => "FullNaive",
            Method::FullFft => "FullFft",
            Method::CompactNaive => "CompactNaive",
            Method::CompactFft => "CompactFft",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let folded: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        match folded.as_str() {
            "fullnaive" => Ok(Method::FullNaive),
            "fullfft" => Ok(Method::FullFft),
            "compactnaive" => Ok(Method::CompactNaive),
            "compactfft" => Ok(Method::CompactFft),
            _ => Err(format!(
                "unknown method `{s}` (expected FullNaive, FullFft, CompactNaive or CompactFft)"
            )),
        }
    }
}

/// One benchmark measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub method: Method,
    /// Median wall time over `repetitions` runs, in seconds.
    pub wall_time_s: f64,
    pub additions: u64,
    pub multiplications: u64,
    pub repetitions: usize,
}

/// An `(n, method)` pair the harness could not run, with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedBench {
    pub n: usize,
    pub method: Method,
    pub reason: Error,
}

/// Result of [`run_bench`]: successful records ordered by `(n, method)`
/// plus the per-pair failures.
#[derive(Debug, Clone, Default)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    pub skipped: Vec<SkippedBench>,
}

/// Benchmarks every `(size, method)` combination. Incompatible pairs (a
/// non-square size for a `Compact*` method, a non-power-of-two transform
/// length for an `*Fft` method) are reported in `skipped` without failing
/// the rest. `repetitions` is clamped up to the minimum of 5.
pub fn run_bench(
    sizes: &[usize],
    methods: &[Method],
    repetitions: usize,
    seed: u64,
) -> BenchOutcome {
    let reps = repetitions.max(5);
    let mut pairs: Vec<(usize, Method)> = sizes
        .iter()
        .flat_map(|&n| methods.iter().map(move |&m| (n, m)))
        .collect();
    pairs.sort();
    pairs.dedup();

    let mut outcome = BenchOutcome::default();
    let mut current: Option<(usize, ComplexSignal)> = None;

    for (n, method) in pairs {
        if let Err(reason) = compatibility(n, method) {
            outcome.skipped.push(SkippedBench { n, method, reason });
            continue;
        }

        if current.as_ref().map(|(m, _)| *m) != Some(n) {
            let signal = generate::random_signal(n, per_size_seed(seed, n))
                .expect("compatibility guarantees n >= 1");
            current = Some((n, signal));
        }
        let signal = &current.as_ref().unwrap().1;

        run_method(signal, method); // warmup, discarded
        let mut times: Vec<f64> = (0..reps)
            .map(|_| {
                let start = Instant::now();
                run_method(signal, method);
                start.elapsed().as_secs_f64()
            })
            .collect();

        let mut counter = OpCounter::new();
        run_method_counted(signal, method, &mut counter);

        outcome.records.push(BenchRecord {
            n,
            method,
            wall_time_s: median(&mut times).max(f64::MIN_POSITIVE),
            additions: counter.additions(),
            multiplications: counter.multiplications(),
            repetitions: reps,
        });
    }

    outcome
}

fn compatibility(n: usize, method: Method) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    match method {
        Method::FullNaive => Ok(()),
        Method::FullFft => {
            if n.is_power_of_two() {
                Ok(())
            } else {
                Err(Error::NotAPowerOfTwo(n))
            }
        }
        Method::CompactNaive => validate_square_length(n).map(|_| ()),
        Method::CompactFft => {
            let square = validate_square_length(n)?;
            if square.root().is_power_of_two() {
                Ok(())
            } else {
                Err(Error::NotAPowerOfTwo(square.root()))
            }
        }
    }
}

fn per_size_seed(seed: u64, n: usize) -> u64 {
    generate::SplitMix64::new(seed ^ (n as u64)).next_u64()
}

fn run_method(x: &ComplexSignal, method: Method) {
    match method {
        Method::FullNaive => {
            black_box(dft_naive(black_box(x), NormalizationMode::None));
        }
        Method::FullFft => {
            black_box(fft_radix2(black_box(x), NormalizationMode::None).expect("checked"));
        }
        Method::CompactNaive => {
            black_box(
                compute_sics_with_backend(black_box(x), NormalizationMode::None, Backend::Naive, None)
                    .expect("checked"),
            );
        }
        Method::CompactFft => {
            black_box(
                compute_sics_with_backend(black_box(x), NormalizationMode::None, Backend::Fft, None)
                    .expect("checked"),
            );
        }
    }
}

fn run_method_counted(x: &ComplexSignal, method: Method, counter: &mut OpCounter) {
    match method {
        Method::FullNaive => {
            dft_naive_counted(x, NormalizationMode::None, counter);
        }
        Method::FullFft => {
            fft_radix2_counted(x, NormalizationMode::None, counter).expect("checked");
        }
        Method::CompactNaive => {
            compute_sics_with_backend(x, NormalizationMode::None, Backend::Naive, Some(counter))
                .expect("checked");
        }
        Method::CompactFft => {
            compute_sics_with_backend(x, NormalizationMode::None, Backend::Fft, Some(counter))
                .expect("checked");
        }
    }
}

fn median(times: &mut [f64]) -> f64 {
    times.sort_by(|a, b| a.total_cmp(b));
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        0.5 * (times[mid - 1] + times[mid])
    }
}

/// Writes records in the schema
/// `n,method,wall_time_s,additions,multiplications,repetitions`.
pub fn write_records_csv<W: Write>(mut writer: W, records: &[BenchRecord]) -> std::io::Result<()> {
    writeln!(
        writer,
        "n,method,wall_time_s,additions,multiplications,repetitions"
    )?;
    for r in records {
        writeln!(
            writer,
            "{},{},{},{},{},{}",
            r.n, r.method, r.wall_time_s, r.additions, r.multiplications, r.repetitions
        )?;
    }
    Ok(())
}

/// Which tally a growth fit measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpMetric {
    Additions,
    Multiplications,
}

impl OpMetric {
    fn pick(self, record: &BenchRecord) -> u64 {
        match self {
            OpMetric::Additions => record.additions,
            OpMetric::Multiplications => record.multiplications,
        }
    }
}

impl fmt::Display for OpMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpMetric::Additions => write!(f, "additions"),
            OpMetric::Multiplications => write!(f, "multiplications"),
        }
    }
}

/// Candidate asymptotic cost models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthModel {
    N,
    NLogN,
    NSqrtN,
    NSquared,
    SqrtNLogSqrtN,
}

impl GrowthModel {
    pub fn predict(self, n: usize) -> f64 {
        let nf = n as f64;
        match self {
            GrowthModel::N => nf,
            GrowthModel::NLogN => nf * nf.log2(),
            GrowthModel::NSqrtN => nf * nf.sqrt(),
            GrowthModel::NSquared => nf * nf,
            GrowthModel::SqrtNLogSqrtN => nf.sqrt() * nf.sqrt().log2(),
        }
    }
}

impl fmt::Display for GrowthModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthModel::N => write!(f, "N"),
            GrowthModel::NLogN => write!(f, "N*log2(N)"),
            GrowthModel::NSqrtN => write!(f, "N*sqrt(N)"),
            GrowthModel::NSquared => write!(f, "N^2"),
            GrowthModel::SqrtNLogSqrtN => write!(f, "sqrt(N)*log2(sqrt(N))"),
        }
    }
}

/// One size of a growth fit: the measured count against the model value.
#[derive(Debug, Clone, PartialEq)]
pub struct FitRow {
    pub n: usize,
    pub observed: u64,
    pub predicted: f64,
    pub ratio: f64,
}

/// Ratio table produced by [`fit_growth`]. The fit is considered flat when
/// the observed/predicted ratios of the three largest sizes stay within a
/// factor of 1.25 of each other.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub method: Method,
    pub model: GrowthModel,
    pub metric: OpMetric,
    pub rows: Vec<FitRow>,
}

impl FitReport {
    /// Max-over-min ratio across the three largest sizes.
    pub fn flatness(&self) -> f64 {
        let top = &self.rows[self.rows.len().saturating_sub(3)..];
        let max = top.iter().map(|r| r.ratio).fold(f64::NAN, f64::max);
        let min = top.iter().map(|r| r.ratio).fold(f64::NAN, f64::min);
        if min > 0.0 && max.is_finite() {
            max / min
        } else {
            f64::INFINITY
        }
    }

    pub fn is_flat(&self) -> bool {
        self.flatness() <= 1.25
    }
}

impl fmt::Display for FitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} against {}:",
            self.method, self.metric, self.model
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "  n={:<10} observed={:<14} predicted={:<18.2} ratio={:.6}",
                row.n, row.observed, row.predicted, row.ratio
            )?;
        }
        write!(
            f,
            "  flatness over top three sizes: {:.4} ({})",
            self.flatness(),
            if self.is_flat() { "flat" } else { "not flat" }
        )
    }
}

/// Compares the measured counts of one method against a growth model.
/// Needs at least four distinct sizes for that method.
pub fn fit_growth(
    records: &[BenchRecord],
    method: Method,
    model: GrowthModel,
    metric: OpMetric,
) -> Result<FitReport, Error> {
    let mut rows: Vec<FitRow> = records
        .iter()
        .filter(|r| r.method == method)
        .map(|r| {
            let observed = metric.pick(r);
            let predicted = model.predict(r.n);
            FitRow {
                n: r.n,
                observed,
                predicted,
                ratio: observed as f64 / predicted,
            }
        })
        .collect();
    rows.sort_by_key(|r| r.n);
    rows.dedup_by_key(|r| r.n);

    if rows.len() < 4 {
        return Err(Error::InsufficientData {
            needed: 4,
            found: rows.len(),
        });
    }

    Ok(FitReport {
        method,
        model,
        metric,
        rows,
    })
}
