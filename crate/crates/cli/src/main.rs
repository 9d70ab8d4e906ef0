use std::fs::File;
use std::io::{self, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use hadwiger_cli::{
    corpus_jobs, file_jobs, revalidate_report, run, Check, Format, RunConfig, RunReport,
};
use hadwiger_core::ingest::{CorpusMode, CorpusSpec};

/// Certificate-producing checks of Hadwiger's conjecture on graphs with
/// independence number at most two.
#[derive(Parser, Debug)]
#[command(name = "hadwiger-w5", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a check on every graph of a graph6 file or generated corpus.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Check::Pipeline)]
        check: Check,
        /// Largest order at which the pipeline also searches for a K_⌈n/2⌉ minor.
        #[arg(long)]
        minor_check_max_n: Option<usize>,
        /// Treat --input as a saved JSON-lines report and re-run its validators.
        #[arg(long, requires = "input")]
        revalidate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Sample random graphs and run the pipeline on those that are W5-free
    /// with an induced C5.
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest order at which the K_⌈n/2⌉ minor cross-check runs.
        #[arg(long, default_value_t = 14)]
        minor_check_max_n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate n, α, ω, χ, h and the derived flags.
    Invariants {
        #[command(flatten)]
        source: Source,
        /// Compute h exactly up to this order; above it only decide h ≥ ⌈n/2⌉.
        #[arg(long, default_value_t = 10)]
        exact_h_max: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// graph6 file, one graph per line.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generated corpus: n=N for all classes, n=N,samples=S,seed=X for random.
    #[arg(long)]
    gen: Option<CorpusSpec>,
}

#[derive(Args, Debug)]
struct Common {
    /// Wall-clock seconds per graph for minor searches.
    #[arg(long)]
    minor_budget: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Record per-graph elapsed time (makes reports nondeterministic).
    #[arg(long)]
    timing: bool,
}

impl Common {
    fn config(&self) -> anyhow::Result<RunConfig> {
        let minor_budget = match self.minor_budget {
            None => None,
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => bail!("--minor-budget must be positive, got {s}"),
        };
        Ok(RunConfig {
            format: self.format,
            minor_budget,
            timing: self.timing,
            ..RunConfig::default()
        })
    }
}

fn run_source(source: &Source, cfg: &RunConfig) -> anyhow::Result<RunReport> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match (&source.input, &source.gen) {
        (Some(path), _) => {
            let file =
                File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
            Ok(run(file_jobs(BufReader::new(file)), cfg, &mut out)?)
        }
        (None, Some(spec)) => Ok(run(corpus_jobs(spec)?, cfg, &mut out)?),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn main_inner(cli: Cli) -> anyhow::Result<RunReport> {
    match cli.command {
        Command::Verify {
            source,
            check,
            minor_check_max_n,
            revalidate,
            common,
        } => {
            if revalidate {
                let path = source.input.as_ref().expect("clap requires --input");
                let file =
                    File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
                return Ok(revalidate_report(
                    BufReader::new(file),
                    common.format,
                    &mut io::stdout().lock(),
                )?);
            }
            let cfg = RunConfig {
                check,
                minor_check_max_n,
                ..common.config()?
            };
            run_source(&source, &cfg)
        }
        Command::Hunt {
            n,
            samples,
            seed,
            minor_check_max_n,
            common,
        } => {
            if n < 5 {
                bail!("hunting needs n >= 5, got {n}");
            }
            let spec = CorpusSpec {
                n,
                mode: CorpusMode::Random { samples, seed },
            };
            let cfg = RunConfig {
                minor_check_max_n: Some(minor_check_max_n),
                hunt_filter: true,
                ..common.config()?
            };
            let source = Source {
                input: None,
                gen: Some(spec),
            };
            run_source(&source, &cfg)
        }
        Command::Invariants {
            source,
            exact_h_max,
            common,
        } => {
            let cfg = RunConfig {
                check: Check::Invariants,
                exact_h_max,
                ..common.config()?
            };
            run_source(&source, &cfg)
        }
    }
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(report) => ExitCode::from(report.exit_code() as u8),
        Err(e) => {
            eprintln!("hadwiger-w5: {e:#}");
            ExitCode::from(1)
        }
    }
}
