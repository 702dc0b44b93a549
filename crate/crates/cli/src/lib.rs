//! Command-line front end: value generation, raw streams for external test
//! batteries, benchmarks, the built-in statistical self-test and table tools.
//!
//! Exit status is 0 on success, 1 on runtime failure and 2 on bad usage.

pub mod bench;
pub mod error;
pub mod gen;
pub mod raw;
pub mod tables;

use std::io::Write;

use clap::{Parser, Subcommand};
use rngpack::{engines, EngineId};
use rngpack_quality::{run_battery_on, BatteryConfig};

pub use error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "rngpack", version, about = "Portable random number generation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Draw values from a distribution.
    Gen(gen::GenArgs),
    /// Write raw generator bytes.
    Raw(raw::RawArgs),
    /// Time engines and distributions.
    Bench(bench::BenchArgs),
    /// Run the statistical battery on one engine.
    Selftest(SelftestArgs),
    /// List the engines.
    Engines,
    /// Regenerate or check the jump polynomial table.
    Jumptable(tables::TableArgs),
    /// Regenerate or check the ziggurat tables.
    Zigtables(tables::ZigArgs),
}

#[derive(clap::Args, Debug, Clone)]
pub struct SelftestArgs {
    #[arg(long, default_value = "x256++simd")]
    pub engine: String,
    #[arg(short = 'n', default_value_t = 1_000_000)]
    pub n: usize,
    #[arg(long, default_value_t = 20_240_601)]
    pub seed: u64,
    #[arg(long)]
    pub bitexact: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
}

fn selftest(args: &SelftestArgs, out: &mut dyn Write) -> CliResult {
    let id = EngineId::parse(&args.engine)?;
    if args.n < 1000 {
        return Err(CliError::Usage("selftest needs -n of at least 1000".into()));
    }
    let cfg = BatteryConfig { n: args.n, seed: args.seed, ..Default::default() };
    let mut rng = rngpack::Rng::seeded(id, cfg.seed, &[]);
    rng.set_bitexact(args.bitexact);
    let report = run_battery_on(&mut rng, &cfg);
    if args.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        writeln!(out, "{report}")?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Runtime(format!("{} check(s) failed", report.failures().count())))
    }
}

fn list_engines(out: &mut dyn Write) -> CliResult {
    writeln!(out, "{:<12} {:<36} {:<22} {:>4} {:>5}  period", "id", "name", "authors", "year", "words")?;
    for e in engines() {
        writeln!(out, "{:<12} {:<36} {:<22} {:>4} {:>5}  {}", e.id, e.name, e.authors, e.year, e.state_words, e.period)?;
    }
    Ok(())
}

/// Runs one parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Gen(a) => gen::run(a, out),
        Command::Raw(a) => raw::run(a, out),
        Command::Bench(a) => bench::run(a, out),
        Command::Selftest(a) => selftest(a, out),
        Command::Engines => list_engines(out),
        Command::Jumptable(a) => tables::run_jump(a, out),
        Command::Zigtables(a) => tables::run_zig(a, out),
    }
}

/// Parses `args` and runs; returns the exit status. Diagnostics go to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let r = execute(&cli, out).and_then(|()| out.flush().map_err(CliError::from));
    match r {
        Ok(()) => 0,
        Err(CliError::Runtime(m)) if m.contains("Broken pipe") => 0,
        Err(e) => {
            let _ = writeln!(err, "rngpack: {e}");
            e.exit_code()
        }
    }
}
