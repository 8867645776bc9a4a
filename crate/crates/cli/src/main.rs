use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use relspin_cli::cnot::{cnot_table, write_cnot, DEFAULT_T_LIST};
use relspin_cli::selftest;
use relspin_cli::sweep::{
    analyze_row, run_sweep, validate_precision, write_csv, write_json, Execution, Format,
    SweepConfig, SweepRow, DEFAULT_GRID, DEFAULT_PRECISION,
};
use relspin_cli::{CliError, Result};

#[derive(Parser, Debug)]
#[command(
    name = "relspin",
    version,
    about = "Velocity-mode entanglement of a Wigner-rotated spin-1/2 particle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Output {
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Significant digits, 1 to 17
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyse a single pair of speeds (fractions of c)
    Analyze {
        #[arg(long, allow_negative_numbers = true)]
        v1: f64,
        #[arg(long, allow_negative_numbers = true)]
        v2: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate a grid_n x grid_n grid, v1 outer and v2 inner
    Sweep {
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, value_name = "MIN,MAX", value_parser = parse_range, default_value = "0,1")]
        v1_range: (f64, f64),
        #[arg(long, value_name = "MIN,MAX", value_parser = parse_range, default_value = "0,1")]
        v2_range: (f64, f64),
        #[command(flatten)]
        output: Output,
    },
    /// Fidelity with the light-speed limit state along v1 = v2 = t
    CnotLimit {
        #[arg(
            long,
            value_name = "a,b,c",
            value_delimiter = ',',
            allow_negative_numbers = true
        )]
        t_list: Option<Vec<f64>>,
        #[command(flatten)]
        output: Output,
    },
    /// Run the invariant suites
    Selftest,
}

fn parse_range(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected MIN,MAX, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|source| CliError::Io {
                path: p.clone(),
                source,
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn write_rows(rows: &[SweepRow], output: &Output) -> Result<()> {
    validate_precision(output.precision)?;
    let mut sink = open_output(&output.out)?;
    match output.format {
        Format::Csv => write_csv(&mut sink, rows, output.precision)?,
        Format::Json => write_json(&mut sink, rows, output.precision)?,
    }
    flush(sink, &output.out)
}

fn flush(mut sink: Box<dyn Write>, path: &Option<PathBuf>) -> Result<()> {
    sink.flush().map_err(|source| CliError::Io {
        path: path.clone().unwrap_or_else(|| "<stdout>".into()),
        source,
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { v1, v2, output } => {
            let row = analyze_row(v1, v2)?;
            write_rows(&[row], &output)?;
        }
        Command::Sweep {
            grid,
            v1_range,
            v2_range,
            output,
        } => {
            let config = SweepConfig {
                v1_range,
                v2_range,
                grid_n: grid,
                format: output.format,
                precision: output.precision,
            };
            let rows = run_sweep(&config, Execution::Parallel)?;
            write_rows(&rows, &output)?;
        }
        Command::CnotLimit { t_list, output } => {
            validate_precision(output.precision)?;
            let ts = t_list.unwrap_or_else(|| DEFAULT_T_LIST.to_vec());
            let rows = cnot_table(&ts)?;
            let mut sink = open_output(&output.out)?;
            write_cnot(&mut sink, &rows, output.format, output.precision)?;
            flush(sink, &output.out)?;
        }
        Command::Selftest => {
            let reports = selftest::run_all();
            for r in &reports {
                println!("{r}");
            }
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
            if !failed.is_empty() {
                for r in failed {
                    eprintln!("selftest failed: {} (worst at {})", r.name, r.worst_input);
                }
                return Ok(false);
            }
            println!("all {} suites passed", reports.len());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
