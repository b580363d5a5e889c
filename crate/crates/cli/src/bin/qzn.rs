use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qzn_cli::commands;
use qzn_cli::{Algorithm, CliError, InputFormat, OutputFormat, RunConfig, Source};
use qzn_core::FidelityMode;

#[derive(Parser)]
#[command(name = "qzn", version, about = "Quantum Z-number decision toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Factorized,
    CircuitExact,
    CircuitSampled,
}

#[derive(Subcommand)]
enum Command {
    /// Score samples against references and pick the best reference per sample.
    Diagnose {
        /// JSON document, or the samples CSV.
        input: PathBuf,
        /// References CSV; required with CSV input.
        #[arg(long)]
        references: Option<PathBuf>,
        /// Input format; inferred from the file extension when omitted.
        #[arg(long, value_enum)]
        input_format: Option<InputFormat>,
        #[arg(long, value_enum, default_value = "qzn")]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Shots per swap test in circuit-sampled mode.
        #[arg(long, default_value_t = 10_000)]
        shots: u64,
        /// Base seed in circuit-sampled mode.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay the worked QZN examples; exits nonzero if any check fails.
    Examples,
    /// Emit quantum and classical cost totals for K = 1..=k_max as CSV.
    Cost {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        k_max: u64,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn source(
    input: PathBuf,
    references: Option<PathBuf>,
    format: Option<InputFormat>,
) -> Result<Source, CliError> {
    let format = format
        .or_else(|| InputFormat::detect(&input))
        .ok_or_else(|| {
            CliError::Usage(format!(
                "cannot infer the format of {}; pass --input-format",
                input.display()
            ))
        })?;
    match (format, references) {
        (InputFormat::Json, None) => Ok(Source::Json(input)),
        (InputFormat::Json, Some(_)) => Err(CliError::Usage(
            "--references applies to CSV input only".into(),
        )),
        (InputFormat::Csv, Some(references)) => Ok(Source::Csv {
            samples: input,
            references,
        }),
        (InputFormat::Csv, None) => Err(CliError::Usage(
            "CSV input needs --references <path>".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Diagnose {
            input,
            references,
            input_format,
            algorithm,
            mode,
            shots,
            seed,
            format,
            out,
        } => {
            let data = source(input, references, input_format)?.load()?;
            if shots == 0 {
                return Err(CliError::Usage("--shots must be at least 1".into()));
            }
            let mode = match (algorithm, mode) {
                (Algorithm::Zn, _) => None,
                (_, ModeArg::Exact) => Some(FidelityMode::Exact),
                (_, ModeArg::Factorized) => Some(FidelityMode::Factorized),
                (_, ModeArg::CircuitExact) => Some(FidelityMode::CircuitExact),
                (_, ModeArg::CircuitSampled) => Some(FidelityMode::CircuitSampled { shots, seed }),
            };
            let config = RunConfig {
                algorithm,
                mode,
                format,
            };
            let report = qzn_cli::diagnose(&data, config)?;
            let text = match format {
                OutputFormat::Text => qzn_cli::render_text(&report),
                OutputFormat::Json => qzn_cli::render_json(&report),
            };
            emit(&text, out.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Examples => {
            let (text, passed) = commands::examples()?;
            emit(&text, None)?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Cost {
            m,
            n,
            epsilon,
            k_max,
            out,
        } => {
            let run = commands::cost_series(m, n, epsilon, k_max)?;
            let summary = commands::cost_summary(&run);
            match out {
                Some(path) => {
                    commands::write_cost_csv(&run, &path)?;
                    emit(&summary, None)?;
                }
                None => {
                    let mut buf = Vec::new();
                    qzn_core::cost::write_csv(&run.series, &mut buf).expect("in-memory write");
                    emit(&String::from_utf8_lossy(&buf), None)?;
                    eprint!("{summary}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
