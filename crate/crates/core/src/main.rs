//! Command-line front end: BER sweeps, rate sweeps, gain curves and a
//! self-test. CSV goes to stdout unless `--output` is given.
//!
//! Exit status: 0 success, 1 runtime error, 2 usage error, 3 empty result.

use aco_ofdm::dsp::ConstellationKind;
use aco_ofdm::harness::{
    parse_grid, run_ber_sweep, run_rate_sweep, run_selftest, write_ber_csv, write_rate_csv, RateConfig, RateInput,
    RateQuantity, SimConfig, SnrAxis,
};
use aco_ofdm::txrx::{Receiver, Scheme};
use aco_ofdm::Result;
use clap::{Args, Parser, Subcommand};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "aco-ofdm", version, about = "ACO-OFDM receivers, BER simulation and information rates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monte-Carlo bit error rate sweep.
    Ber(BerArgs),
    /// Information-rate sweep.
    Rate(RateArgs),
    /// Optical and electrical SNR gain of improved receivers.
    Gain(GainArgs),
    /// Quick invariant checks across all modules.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Debug)]
struct Grid(Vec<f64>);

fn grid_arg(s: &str) -> std::result::Result<Grid, String> {
    parse_grid(s).map(Grid).map_err(|e| e.to_string())
}

fn block_length(s: &str) -> std::result::Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    if n >= 4 && n.is_power_of_two() {
        Ok(n)
    } else {
        Err(format!("block length {n} must be a power of two >= 4"))
    }
}

/// SNR grid as `start:stop:step` (inclusive), `start:stop` or a comma list.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GridArgs {
    /// Grid in optical SNR, dB.
    #[arg(long = "snr-o-db", value_parser = grid_arg, allow_hyphen_values = true)]
    optical: Option<Grid>,
    /// Grid in electrical SNR, dB.
    #[arg(long = "snr-e-db", value_parser = grid_arg, allow_hyphen_values = true)]
    electrical: Option<Grid>,
}

impl GridArgs {
    fn resolve(self) -> (Vec<f64>, SnrAxis) {
        match (self.optical, self.electrical) {
            (Some(g), _) => (g.0, SnrAxis::Optical),
            (None, Some(g)) => (g.0, SnrAxis::Electrical),
            (None, None) => unreachable!("clap enforces one grid"),
        }
    }
}

#[derive(Args)]
struct BerArgs {
    #[arg(long, default_value = "aco")]
    scheme: Scheme,
    #[arg(long, default_value = "qam4")]
    constellation: ConstellationKind,
    /// Receivers, comma separated.
    #[arg(long = "receiver", value_delimiter = ',', default_value = "conventional")]
    receivers: Vec<Receiver>,
    /// Block length, a power of two >= 4.
    #[arg(long, default_value_t = 64, value_parser = block_length)]
    n: usize,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, default_value_t = 100_000)]
    max_frames: u64,
    #[arg(long, default_value_t = 200)]
    target_errors: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RateArgs {
    /// `gaussian` or a constellation such as `qam16`.
    #[arg(long, default_value = "gaussian")]
    input: RateInput,
    #[command(flatten)]
    grid: GridArgs,
    /// Rows to emit, comma separated, or `all`. Defaults to `improved` for
    /// Gaussian inputs and `conventional` for constellations.
    #[arg(long = "quantity", value_delimiter = ',')]
    quantities: Vec<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GainArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Outcome {
    Rows,
    Empty,
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn rate_quantities(names: &[String]) -> Result<Option<Vec<RateQuantity>>> {
    if names.is_empty() {
        return Ok(None);
    }
    if names.iter().any(|n| n.eq_ignore_ascii_case("all")) {
        return Ok(Some(RateQuantity::ALL.to_vec()));
    }
    names.iter().map(|n| n.parse()).collect::<Result<Vec<_>>>().map(Some)
}

fn run_rates(config: RateConfig, output: &Option<PathBuf>) -> Result<Outcome> {
    let rows = run_rate_sweep(&config)?;
    write_rate_csv(&rows, sink(output)?)?;
    Ok(if rows.is_empty() { Outcome::Empty } else { Outcome::Rows })
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Ber(a) => {
            let (grid_db, axis) = a.grid.resolve();
            let config = SimConfig {
                scheme: a.scheme,
                constellation: a.constellation,
                receivers: a.receivers,
                n: a.n,
                grid_db,
                axis,
                max_frames: a.max_frames,
                target_errors: a.target_errors,
                seed: a.seed,
                output: a.output.clone(),
                ..SimConfig::default()
            };
            let points = run_ber_sweep(&config)?;
            write_ber_csv(&points, sink(&a.output)?)?;
            Ok(if points.is_empty() { Outcome::Empty } else { Outcome::Rows })
        }
        Command::Rate(a) => {
            let (grid_db, axis) = a.grid.resolve();
            let mut config = RateConfig::new(a.input, grid_db);
            config.axis = axis;
            if let Some(q) = rate_quantities(&a.quantities)? {
                config.quantities = q;
            }
            run_rates(config, &a.output)
        }
        Command::Gain(a) => {
            let (grid_db, axis) = a.grid.resolve();
            let mut config = RateConfig::new(RateInput::Gaussian, grid_db);
            config.axis = axis;
            config.quantities = vec![
                RateQuantity::Delta,
                RateQuantity::GainOpticalDb,
                RateQuantity::GainElectricalDb,
            ];
            run_rates(config, &a.output)
        }
        Command::Selftest { seed } => {
            let results = run_selftest(seed);
            let mut out = io::stdout().lock();
            let mut failed = 0;
            for r in &results {
                writeln!(out, "{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail)?;
                failed += usize::from(!r.passed);
            }
            if failed > 0 {
                return Err(aco_ofdm::Error::Degenerate(format!("{failed} self-test check(s) failed")));
            }
            Ok(Outcome::Rows)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Rows) => ExitCode::SUCCESS,
        Ok(Outcome::Empty) => {
            eprintln!("aco-ofdm: no results");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("aco-ofdm: {e}");
            ExitCode::from(1)
        }
    }
}
