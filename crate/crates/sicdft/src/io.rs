//! Signal and spectrum serialization.
//!
//! Two signal formats are supported:
//!
//! * CSV — one sample per line as `re,im` in decimal, `#`-prefixed comment
//!   lines allowed, no header. Values are written with 17 significant
//!   digits, which round-trips every finite f64 exactly.
//! * Binary — consecutive little-endian IEEE-754 64-bit pairs (real part
//!   then imaginary part), no header; the sample count is the file size
//!   divided by 16, and the size must be an exact multiple of 16 bytes.
//!
//! Spectra are written as CSV rows `k,bin,re,im` where `bin = k*sqrt(N)`,
//! optionally followed by a `# ops: ...` trailer comment.

use num_complex::Complex64;
use std::fmt::Write as _;
use std::io::{BufRead, Read, Write};
use std::str::FromStr;

use crate::counter::OpCounter;
use crate::error::Error;
use crate::signal::{ComplexSignal, SicSpectrum};

/// On-disk signal encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignalFormat {
    Csv,
    Bin,
}

impl FromStr for SignalFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(SignalFormat::Csv),
            "bin" => Ok(SignalFormat::Bin),
            other => Err(format!("unknown format `{other}` (expected csv or bin)")),
        }
    }
}

impl std::fmt::Display for SignalFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignalFormat::Csv => write!(f, "csv"),
            SignalFormat::Bin => write!(f, "bin"),
        }
    }
}

/// Errors raised while reading a signal file.
#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("byte length {bytes} is not a multiple of 16 (trailing garbage at offset {offset})")]
    BadByteLength { bytes: usize, offset: usize },

    #[error(transparent)]
    Signal(#[from] Error),
}

/// Formats a float with 17 significant digits, enough to reparse the exact
/// same value.
pub fn format_f64(v: f64) -> String {
    let mut s = String::new();
    write!(s, "{v:.16e}").expect("formatting f64 cannot fail");
    s
}

pub fn read_signal<R: BufRead>(reader: R, format: SignalFormat) -> Result<ComplexSignal, ReadError> {
    match format {
        SignalFormat::Csv => read_signal_csv(reader),
        SignalFormat::Bin => read_signal_bin(reader),
    }
}

pub fn write_signal<W: Write>(
    writer: W,
    signal: &ComplexSignal,
    format: SignalFormat,
) -> std::io::Result<()> {
    match format {
        SignalFormat::Csv => write_signal_csv(writer, signal),
        SignalFormat::Bin => write_signal_bin(writer, signal),
    }
}

pub fn read_signal_csv<R: BufRead>(reader: R) -> Result<ComplexSignal, ReadError> {
    let mut samples = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let (re_text, im_text) = text.split_once(',').ok_or_else(|| ReadError::Parse {
            line: lineno,
            message: format!("expected `re,im`, got `{text}`"),
        })?;
        let re = parse_component(re_text, "real", lineno)?;
        let im = parse_component(im_text, "imaginary", lineno)?;
        samples.push(Complex64::new(re, im));
    }
    Ok(ComplexSignal::new(samples)?)
}

fn parse_component(text: &str, which: &str, lineno: usize) -> Result<f64, ReadError> {
    text.trim().parse().map_err(|_| ReadError::Parse {
        line: lineno,
        message: format!("invalid {which} part `{}`", text.trim()),
    })
}

pub fn write_signal_csv<W: Write>(mut writer: W, signal: &ComplexSignal) -> std::io::Result<()> {
    for s in signal.samples() {
        writeln!(writer, "{},{}", format_f64(s.re), format_f64(s.im))?;
    }
    Ok(())
}

pub fn read_signal_bin<R: Read>(mut reader: R) -> Result<ComplexSignal, ReadError> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    if bytes.len() % 16 != 0 {
        return Err(ReadError::BadByteLength {
            bytes: bytes.len(),
            offset: bytes.len() - bytes.len() % 16,
        });
    }
    let samples = bytes
        .chunks_exact(16)
        .map(|chunk| {
            let re = f64::from_le_bytes(chunk[0..8].try_into().unwrap());
            let im = f64::from_le_bytes(chunk[8..16].try_into().unwrap());
            Complex64::new(re, im)
        })
        .collect();
    Ok(ComplexSignal::new(samples)?)
}

pub fn write_signal_bin<W: Write>(mut writer: W, signal: &ComplexSignal) -> std::io::Result<()> {
    for s in signal.samples() {
        writer.write_all(&s.re.to_le_bytes())?;
        writer.write_all(&s.im.to_le_bytes())?;
    }
    Ok(())
}

/// Writes `k,bin,re,im` rows, then an operation tally trailer when one is
/// given.
pub fn write_spectrum_csv<W: Write>(
    mut writer: W,
    spectrum: &SicSpectrum,
    ops: Option<&OpCounter>,
) -> std::io::Result<()> {
    for (k, v) in spectrum.values().iter().enumerate() {
        writeln!(
            writer,
            "{},{},{},{}",
            k,
            spectrum.absolute_bin(k),
            format_f64(v.re),
            format_f64(v.im)
        )?;
    }
    if let Some(counter) = ops {
        writeln!(
            writer,
            "# ops: additions={} multiplications={}",
            counter.additions(),
            counter.multiplications()
        )?;
    }
    Ok(())
}
