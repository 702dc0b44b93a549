//! `bench`: throughput of engines (ns per 64 bits) and samplers (ns per value),
//! each averaged over repeated fixed-duration runs that refill a 4096-value
//! buffer.

use std::hint::black_box;
use std::io::Write;
use std::time::{Duration, Instant};

use clap::Args;
use rngpack::{Continuous, EngineId, Rng};

use crate::error::CliResult;

pub const BUFFER: usize = 4096;

#[derive(Args, Clone, Debug)]
pub struct BenchArgs {
    /// Engines to time; all of them by default.
    #[arg(long, value_delimiter = ',')]
    pub engine: Vec<String>,
    /// Engine used for the distribution timings.
    #[arg(long, default_value = "x256++simd")]
    pub dist_engine: String,
    #[arg(long, default_value_t = 10)]
    pub runs: u32,
    /// Seconds per engine run.
    #[arg(long, default_value_t = 1.0)]
    pub engine_seconds: f64,
    /// Seconds per distribution run.
    #[arg(long, default_value_t = 0.5)]
    pub dist_seconds: f64,
    #[arg(long)]
    pub skip_engines: bool,
    #[arg(long)]
    pub skip_dists: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub name: String,
    /// Mean nanoseconds per 64-bit word or per value.
    pub ns: f64,
    pub sd: f64,
    pub runs: u32,
}

/// Repeats `fill` for `secs`, `runs` times, and returns ns per item.
pub fn time_runs(name: &str, runs: u32, secs: f64, mut fill: impl FnMut() -> usize) -> BenchRow {
    let budget = Duration::from_secs_f64(secs);
    // One warm-up fill so first-touch costs are not timed.
    fill();
    let per: Vec<f64> = (0..runs.max(1))
        .map(|_| {
            let start = Instant::now();
            let mut items = 0usize;
            while start.elapsed() < budget {
                items += fill();
            }
            start.elapsed().as_nanos() as f64 / items as f64
        })
        .collect();
    let n = per.len() as f64;
    let ns = per.iter().sum::<f64>() / n;
    let sd = if per.len() > 1 { (per.iter().map(|v| (v - ns) * (v - ns)).sum::<f64>() / (n - 1.0)).sqrt() } else { 0.0 };
    BenchRow { name: name.to_string(), ns, sd, runs: runs.max(1) }
}

pub fn bench_engine(id: EngineId, runs: u32, secs: f64) -> BenchRow {
    let mut rng = Rng::seeded(id, 1, &[]);
    let mut buf = vec![0u64; BUFFER];
    time_runs(id.name(), runs, secs, || {
        rng.take_bulk(&mut buf).expect("benchmark stream");
        black_box(&buf);
        BUFFER
    })
}

/// The distributions timed by default, with their parameters.
pub fn bench_distributions() -> Vec<(String, Continuous)> {
    let c = |name: &str, p: &[f64]| Continuous::from_name(name, p).expect("valid benchmark parameters");
    [
        ("u01", c("u01", &[])),
        ("unif(2,5)", c("unif", &[2.0, 5.0])),
        ("norm", c("norm", &[])),
        ("normal(2,3)", c("normal", &[2.0, 3.0])),
        ("exp", c("exp", &[1.0])),
        ("lognormal(0,1)", c("lognormal", &[0.0, 1.0])),
        ("skew_normal(0,1,3)", c("skew_normal", &[0.0, 1.0, 3.0])),
        ("gumbel(0,1)", c("gumbel", &[0.0, 1.0])),
        ("pareto(1,2)", c("pareto", &[1.0, 2.0])),
        ("gamma(2,3)", c("gamma", &[2.0, 3.0])),
        ("beta(2,5)", c("beta", &[2.0, 5.0])),
        ("chi2(5)", c("chi2", &[5.0])),
        ("t(10)", c("t", &[10.0])),
        ("f(5,10)", c("f", &[5.0, 10.0])),
        ("weibull(3,4)", c("weibull", &[3.0, 4.0])),
    ]
    .into_iter()
    .map(|(n, d)| (n.to_string(), d))
    .collect()
}

pub fn bench_distribution(engine: EngineId, name: &str, d: &Continuous, runs: u32, secs: f64) -> BenchRow {
    let mut rng = Rng::seeded(engine, 1, &[]);
    let mut buf = vec![0.0f64; BUFFER];
    time_runs(name, runs, secs, || {
        rng.continuous(d, &mut buf).expect("benchmark stream");
        black_box(&buf);
        BUFFER
    })
}

fn print_rows(out: &mut dyn Write, title: &str, unit: &str, rows: &[BenchRow]) -> CliResult {
    writeln!(out, "{title}")?;
    writeln!(out, "{:<22} {:>10} {:>8}", "", unit, "sd")?;
    for r in rows {
        writeln!(out, "{:<22} {:>10.3} {:>8.3}", r.name, r.ns, r.sd)?;
    }
    Ok(())
}

pub fn run(args: &BenchArgs, out: &mut dyn Write) -> CliResult {
    let engines: Vec<EngineId> = if args.engine.is_empty() {
        EngineId::ALL.to_vec()
    } else {
        args.engine.iter().map(|e| EngineId::parse(e)).collect::<Result<_, _>>()?
    };
    let dist_engine = EngineId::parse(&args.dist_engine)?;
    if !args.skip_engines {
        let rows: Vec<BenchRow> = engines.iter().map(|&e| bench_engine(e, args.runs, args.engine_seconds)).collect();
        print_rows(out, &format!("engines, mean of {} runs", args.runs), "ns/64 bits", &rows)?;
    }
    if !args.skip_dists {
        let rows: Vec<BenchRow> = bench_distributions()
            .iter()
            .map(|(n, d)| bench_distribution(dist_engine, n, d, args.runs, args.dist_seconds))
            .collect();
        print_rows(out, &format!("distributions on {}, mean of {} runs", dist_engine.name(), args.runs), "ns/value", &rows)?;
    }
    Ok(())
}
