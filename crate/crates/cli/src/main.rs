mod cache;
mod check;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partword::analysis::{compare, degree_histogram, parts_histogram, Histogram};
use partword::graphs::{write_dot, write_edge_csv, SearchOptions};
use partword::graycode::{gray2, gray3, verify};
use partword::words::{write_words, Budget};
use partword::{Dim, Error, PartitionGraph};

#[derive(Parser)]
#[command(name = "partword", version, about = "Partition words, flip graphs and Gray codes")]
struct Cli {
    /// Worker threads for parallel stages (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the words of all d-dimensional partitions of n
    Enumerate {
        #[command(flatten)]
        run: RunArgs,
        /// Print only the number of words
        #[arg(long)]
        count_only: bool,
    },
    /// Build the flip graph and export it or its structure report
    Graph {
        #[command(flatten)]
        run: RunArgs,
        /// Print the structure report as JSON
        #[arg(long)]
        report: bool,
    },
    /// Construct and verify a 2- or 3-Gray code
    Gray {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        k: u32,
    },
    /// Degree or parts histogram with lognormal and normal fits
    Fit {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Source::Degrees)]
        source: Source,
    },
    /// Run a property suite and print a JSON summary
    Check {
        #[arg(long, value_enum, default_value_t = check::Suite::All)]
        suite: check::Suite,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=9))]
    d: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, conflicts_with = "exclude_zero")]
    include_zero: bool,
    /// Leave out the all-zero word
    #[arg(long)]
    exclude_zero: bool,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file (for `fit`, a prefix for .csv and .json)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget_ms: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

impl RunArgs {
    fn dim(&self) -> Dim {
        Dim::new(self.d).expect("range checked by clap")
    }

    fn budget(&self) -> Budget {
        self.budget_ms.map_or_else(Budget::unlimited, |ms| Budget::time(Duration::from_millis(ms)))
    }

    fn graph(&self) -> Result<PartitionGraph, Failure> {
        let words = cache::words(self.cache_dir.as_deref(), self.dim(), self.n, &self.budget())?;
        Ok(PartitionGraph::from_words(words, !self.exclude_zero))
    }

    fn format(&self, allowed: &[Format], default: Format) -> Result<Format, Failure> {
        let format = self.format.unwrap_or(default);
        if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(Failure::Usage(format!("--format {format:?} is not available here").to_lowercase()))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Words,
    Dot,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Degrees,
    Parts,
}

enum Failure {
    Usage(String),
    Property(String),
    Budget(String),
    Degenerate(String),
    Other(String),
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::BudgetExceeded { .. } | Error::SearchExhausted { .. } => Failure::Budget(msg),
            Error::DegenerateSample(_) => Failure::Degenerate(msg),
            Error::Precondition(_) | Error::UnsupportedDimension(_) | Error::ZeroTotal => Failure::Usage(msg),
            Error::Contract(_) => Failure::Property(msg),
            _ => Failure::Other(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Other(e.to_string())
    }
}

fn emit(out: Option<&Path>, write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => {
            let mut stdout = io::stdout().lock();
            write(&mut stdout)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn enumerate(run: &RunArgs, count_only: bool) -> Result<(), Failure> {
    run.format(&[Format::Words], Format::Words)?;
    let words = cache::words(run.cache_dir.as_deref(), run.dim(), run.n, &run.budget())?;
    if count_only {
        return emit(run.out.as_deref(), |w| writeln!(w, "{}", words.len()));
    }
    emit(run.out.as_deref(), |w| write_words(&words, w))
}

fn graph(run: &RunArgs, report: bool) -> Result<(), Failure> {
    let format = if report { Format::Json } else { run.format(&[Format::Dot, Format::Csv, Format::Json], Format::Csv)? };
    let graph = run.graph()?;
    match format {
        Format::Dot => emit(run.out.as_deref(), |w| write_dot(&graph, w)),
        Format::Json => {
            let report = graph.structure_report();
            emit(run.out.as_deref(), |w| {
                serde_json::to_writer_pretty(&mut *w, &report)?;
                writeln!(w)
            })
        }
        _ => emit(run.out.as_deref(), |w| write_edge_csv(&graph, w)),
    }
}

fn gray(run: &RunArgs, k: u32) -> Result<(), Failure> {
    run.format(&[Format::Words], Format::Words)?;
    let (include_zero, explicit) = (k == 3, run.include_zero || run.exclude_zero);
    if explicit && run.include_zero != include_zero {
        let which = if include_zero { "includes" } else { "excludes" };
        return Err(Failure::Usage(format!("a {k}-Gray code always {which} the zero word")));
    }
    let code = if k == 2 {
        if run.d != 1 {
            return Err(Failure::Usage("2-Gray codes are built for d = 1 only".into()));
        }
        let options = SearchOptions {
            budget: Duration::from_millis(run.budget_ms.unwrap_or(10_000)),
            seed: run.seed,
        };
        gray2(run.n, &options)?
    } else {
        gray3(run.dim(), run.n)?
    };
    let graph = partword::graphs::build(run.dim(), run.n, include_zero)?;
    if !verify(&code, &graph)? {
        return Err(Failure::Property(format!("constructed {k}-Gray code failed verification")));
    }
    emit(run.out.as_deref(), |w| code.write(w))
}

fn fit(run: &RunArgs, source: Source) -> Result<(), Failure> {
    let format = run.format(&[Format::Csv, Format::Json], Format::Json)?;
    let histogram = match source {
        Source::Degrees => degree_histogram(&run.graph()?),
        Source::Parts if run.d == 1 => parts_histogram(run.n)?,
        Source::Parts => {
            let words = cache::words(run.cache_dir.as_deref(), run.dim(), run.n, &run.budget())?;
            let top = run.dim().get();
            Histogram::from_values(words.iter().map(|w| 1 + w.iter().filter(|&&s| s < top).count() as u64))
        }
    };
    let report = compare(&histogram.samples())?;
    let write_csv = |w: &mut dyn Write| histogram.write_csv(w);
    let write_json = |w: &mut dyn Write| {
        serde_json::to_writer_pretty(&mut *w, &report)?;
        writeln!(w)
    };
    match &run.out {
        Some(prefix) => {
            emit(Some(&with_suffix(prefix, "csv")), write_csv)?;
            emit(Some(&with_suffix(prefix, "json")), write_json)
        }
        None if format == Format::Csv => emit(None, write_csv),
        None => emit(None, write_json),
    }
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Enumerate { run, count_only } => enumerate(&run, count_only),
        Command::Graph { run, report } => graph(&run, report),
        Command::Gray { run, k } => gray(&run, k),
        Command::Fit { run, source } => fit(&run, source),
        Command::Check { suite, max_n } => {
            let summary = check::run(suite, max_n);
            println!("{}", serde_json::to_string_pretty(&summary).expect("summary serialises"));
            if summary.passed {
                Ok(())
            } else {
                Err(Failure::Property(format!("{} check(s) failed", summary.failures.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let (code, msg) = match run(Cli::parse()) {
        Ok(()) | Err(Failure::Closed) => return ExitCode::SUCCESS,
        Err(Failure::Property(m)) | Err(Failure::Other(m)) => (1, m),
        Err(Failure::Usage(m)) => (2, m),
        Err(Failure::Budget(m)) => (3, m),
        Err(Failure::Degenerate(m)) => (4, m),
    };
    eprintln!("error: {msg}");
    ExitCode::from(code)
}
