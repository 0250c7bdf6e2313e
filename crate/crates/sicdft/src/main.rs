use clap::{Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use sicdft::bench::{run_bench, write_records_csv, Method};
use sicdft::io::{read_signal, write_signal, write_spectrum_csv, ReadError, SignalFormat};
use sicdft::{
    compact_sic_counted, compute_sics_with_backend, generate, Backend, Complex64, ComplexSignal,
    Error, NormalizationMode, OpCounter,
};

/// Exit codes: 0 success, 1 I/O, parse or parameter errors, 2 input length
/// not a perfect square, 3 backend incompatible with the transform length.
#[derive(Parser)]
#[command(
    name = "sicdft",
    version,
    about = "Square-index DFT coefficients: fold a square-length signal to sqrt(N) points and transform the short signal"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fold a square-length signal from N to sqrt(N) points
    Compact {
        /// Input signal file; stdin when omitted (CSV only)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output file; stdout when omitted (CSV only)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Signal file format, used for both input and output
        #[arg(long, value_enum, ignore_case = true, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Compute the coefficients X[k*sqrt(N)] as CSV rows `k,bin,re,im`
    Sics {
        /// Input signal file; stdin when omitted (CSV only)
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output file for the rows; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
        /// Input signal format
        #[arg(long, value_enum, ignore_case = true, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Normalization factor, dimensioned over the original length N
        #[arg(long, value_enum, ignore_case = true, default_value_t = NormArg::None)]
        norm: NormArg,
        /// Transform backend for the sqrt(N)-point DFT
        #[arg(long, value_enum, ignore_case = true, default_value_t = BackendArg::Auto)]
        backend: BackendArg,
        /// Append a `# ops: ...` trailer with exact operation tallies
        #[arg(long)]
        count_ops: bool,
    },
    /// Generate a deterministic test signal
    Gen {
        #[arg(long, value_enum, ignore_case = true)]
        kind: KindArg,
        /// Signal length
        #[arg(long)]
        n: usize,
        /// Seed for --kind random
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Spectrum bin, required for --kind tone
        #[arg(long)]
        bin: Option<usize>,
        /// Sample value for --kind constant, as `re,im`
        #[arg(long, default_value = "1,0")]
        value: String,
        /// Output file; stdout when omitted (CSV only)
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, ignore_case = true, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Time and count full-spectrum vs folded SIC computation
    Bench {
        /// Comma-separated signal lengths
        #[arg(long, required = true, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Comma-separated methods: FullNaive, FullFft, CompactNaive, CompactFft
        #[arg(long, required = true, value_delimiter = ',', value_parser = parse_method)]
        methods: Vec<Method>,
        /// Timed repetitions per (size, method) pair
        #[arg(long, default_value_t = 7)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Bin,
}

impl From<FormatArg> for SignalFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => SignalFormat::Csv,
            FormatArg::Bin => SignalFormat::Bin,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NormArg {
    None,
    #[value(name = "1overN")]
    OneOverN,
    Unitary,
}

impl From<NormArg> for NormalizationMode {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::None => NormalizationMode::None,
            NormArg::OneOverN => NormalizationMode::OneOverN,
            NormArg::Unitary => NormalizationMode::Unitary,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Naive,
    Fft,
    Auto,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Naive => Backend::Naive,
            BackendArg::Fft => Backend::Fft,
            BackendArg::Auto => Backend::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Random,
    Tone,
    Impulse,
    Constant,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<ReadError> for Failure {
    fn from(e: ReadError) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotASquare(_) => 2,
            Error::NotAPowerOfTwo(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compact {
            input,
            output,
            format,
        } => cmd_compact(input, output, format.into()),
        Command::Sics {
            input,
            output,
            format,
            norm,
            backend,
            count_ops,
        } => cmd_sics(input, output, format.into(), norm.into(), backend.into(), count_ops),
        Command::Gen {
            kind,
            n,
            seed,
            bin,
            value,
            output,
            format,
        } => cmd_gen(kind, n, seed, bin, &value, output, format.into()),
        Command::Bench {
            sizes,
            methods,
            reps,
            seed,
            output,
        } => cmd_bench(&sizes, &methods, reps, seed, output),
    }
}

fn cmd_compact(
    input: Option<PathBuf>,
    output: Option<PathBuf>,
    format: SignalFormat,
) -> Result<(), Failure> {
    let signal = read_input(input.as_deref(), format)?;
    let mut counter = OpCounter::new();
    let folded = compact_sic_counted(&signal, &mut counter)?;
    eprintln!(
        "compact: sqrt_n={} additions={}",
        folded.len(),
        counter.additions()
    );
    let mut writer = open_output(output.as_deref(), format == SignalFormat::Bin)?;
    write_signal(&mut writer, &folded.into_signal(), format)?;
    writer.flush()?;
    Ok(())
}

fn cmd_sics(
    input: Option<PathBuf>,
    output: Option<PathBuf>,
    format: SignalFormat,
    norm: NormalizationMode,
    backend: Backend,
    count_ops: bool,
) -> Result<(), Failure> {
    let signal = read_input(input.as_deref(), format)?;
    let mut counter = OpCounter::new();
    let ops = if count_ops { Some(&mut counter) } else { None };
    let spectrum = compute_sics_with_backend(&signal, norm, backend, ops)?;
    let mut writer = open_output(output.as_deref(), false)?;
    write_spectrum_csv(&mut writer, &spectrum, count_ops.then_some(&counter))?;
    writer.flush()?;
    Ok(())
}

fn cmd_gen(
    kind: KindArg,
    n: usize,
    seed: u64,
    bin: Option<usize>,
    value: &str,
    output: Option<PathBuf>,
    format: SignalFormat,
) -> Result<(), Failure> {
    let signal = match kind {
        KindArg::Random => generate::random_signal(n, seed),
        KindArg::Tone => {
            let bin = bin.ok_or_else(|| Failure::usage("--bin is required for --kind tone"))?;
            generate::tone(n, bin)
        }
        KindArg::Impulse => generate::impulse(n),
        KindArg::Constant => generate::constant(n, parse_complex(value)?),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;

    let mut writer = open_output(output.as_deref(), format == SignalFormat::Bin)?;
    write_signal(&mut writer, &signal, format)?;
    writer.flush()?;
    Ok(())
}

fn cmd_bench(
    sizes: &[usize],
    methods: &[Method],
    reps: usize,
    seed: u64,
    output: Option<PathBuf>,
) -> Result<(), Failure> {
    let outcome = run_bench(sizes, methods, reps, seed);
    for skip in &outcome.skipped {
        eprintln!(
            "bench: skipping n={} method={}: {}",
            skip.n, skip.method, skip.reason
        );
    }
    let mut writer = open_output(output.as_deref(), false)?;
    write_records_csv(&mut writer, &outcome.records)?;
    writer.flush()?;
    Ok(())
}

fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let bad = || Failure::usage(format!("invalid --value `{text}`: expected `re,im`"));
    let (re, im) = text.split_once(',').ok_or_else(bad)?;
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

fn read_input(input: Option<&std::path::Path>, format: SignalFormat) -> Result<ComplexSignal, Failure> {
    match input {
        Some(path) => {
            let file = File::open(path).map_err(|e| {
                Failure::usage(format!("cannot open {}: {e}", path.display()))
            })?;
            Ok(read_signal(BufReader::new(file), format)?)
        }
        None => {
            if format == SignalFormat::Bin {
                return Err(Failure::usage("binary input requires --input PATH"));
            }
            Ok(read_signal(std::io::stdin().lock(), format)?)
        }
    }
}

fn open_output(
    output: Option<&std::path::Path>,
    binary: bool,
) -> Result<Box<dyn Write>, Failure> {
    match output {
        Some(path) => {
            let file = File::create(path).map_err(|e| {
                Failure::usage(format!("cannot create {}: {e}", path.display()))
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => {
            if binary {
                return Err(Failure::usage("binary output requires --output PATH"));
            }
            Ok(Box::new(BufWriter::new(std::io::stdout())))
        }
    }
}
