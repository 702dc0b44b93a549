//! `gen`: draw values from one distribution and write them out.

use std::io::Write;

use clap::{Args, ValueEnum};
use rngpack::{Continuous, EngineId, MvnLayout, Rng};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One value per line (one sample per line for vector outputs).
    Text,
    F64le,
    F32le,
    U64le,
}

#[derive(Args, Clone, Debug)]
pub struct GenArgs {
    #[arg(long, default_value = "x256++simd")]
    pub engine: String,
    /// A continuous distribution, or int, uint, perm, sample, mvn.
    #[arg(long, default_value = "u01")]
    pub dist: String,
    /// Comma-separated parameters, positional as in the distribution catalogue.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub params: String,
    #[arg(short = 'n', default_value_t = 10)]
    pub n: u64,
    /// Seed; without one the generator is seeded from system entropy.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "")]
    pub spawn_key: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub bitexact: bool,
    #[arg(long)]
    pub full_mantissa: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("bad {what} value '{t}'"))))
        .collect()
}

/// Builds the generator described by the common flags.
pub fn make_rng(engine: &str, seed: Option<u64>, spawn_key: &str) -> CliResult<Rng> {
    let id = EngineId::parse(engine).map_err(|e| usage(e.to_string()))?;
    let key: Vec<u64> = parse_list(spawn_key, "spawn key")?;
    Ok(match seed {
        Some(s) => Rng::seeded(id, s, &key),
        None => {
            if !key.is_empty() {
                return Err(usage("--spawn-key needs --seed"));
            }
            Rng::new(id)
        }
    })
}

const CHUNK: usize = 4096;

/// Writes `n` draws to `out`.
pub fn run(args: &GenArgs, out: &mut dyn Write) -> CliResult {
    let mut rng = make_rng(&args.engine, args.seed, &args.spawn_key)?;
    rng.set_bitexact(args.bitexact);
    rng.set_full_mantissa(args.full_mantissa);
    let p: Vec<f64> = parse_list(&args.params, "parameter")?;
    match args.dist.as_str() {
        "int" | "uint" => integers(&mut rng, args, &p, out),
        "perm" | "sample" => subsets(&mut rng, args, &p, out),
        "mvn" => mvn(&mut rng, args, &p, out),
        name => {
            let d = Continuous::from_name(name, &p).map_err(|e| usage(e.to_string()))?;
            continuous(&mut rng, args, &d, out)
        }
    }
}

fn continuous(rng: &mut Rng, args: &GenArgs, d: &Continuous, out: &mut dyn Write) -> CliResult {
    if args.format == Format::U64le {
        return Err(usage("u64le output is for integer distributions"));
    }
    let mut left = args.n;
    let mut x = vec![0.0f64; CHUNK];
    let mut y = vec![0.0f32; CHUNK];
    let mut bytes = Vec::with_capacity(8 * CHUNK);
    while left > 0 {
        let m = left.min(CHUNK as u64) as usize;
        bytes.clear();
        if args.format == Format::F32le {
            // Single-precision variants exist for the basic samplers.
            let y = &mut y[..m];
            match *d {
                Continuous::U01 => rng.u01(y)?,
                Continuous::Unif { a, b } => rng.unif(y, a as f32, b as f32)?,
                Continuous::Norm => rng.norm(y)?,
                Continuous::Exp { scale } => rng.exp(y, scale as f32)?,
                _ => {
                    rng.continuous(d, &mut x[..m])?;
                    for (s, v) in y.iter_mut().zip(&x) {
                        *s = *v as f32;
                    }
                }
            }
            bytes.extend(y.iter().flat_map(|v| v.to_le_bytes()));
        } else {
            rng.continuous(d, &mut x[..m])?;
            for v in &x[..m] {
                match args.format {
                    Format::Text => writeln!(bytes, "{v:?}")?,
                    _ => bytes.extend_from_slice(&v.to_le_bytes()),
                }
            }
        }
        out.write_all(&bytes)?;
        left -= m as u64;
    }
    Ok(())
}

fn integers(rng: &mut Rng, args: &GenArgs, p: &[f64], out: &mut dyn Write) -> CliResult {
    let whole = |v: f64| -> CliResult<i128> {
        if v.fract() != 0.0 || v.abs() > 2f64.powi(64) {
            return Err(usage(format!("integer parameter expected, got {v}")));
        }
        Ok(v as i128)
    };
    let ints: Vec<i128> = p.iter().map(|&v| whole(v)).collect::<CliResult<_>>()?;
    let signed = args.dist == "int";
    match (signed, ints.as_slice()) {
        (true, [m, n]) if *m >= i64::MIN as i128 && *n <= i64::MAX as i128 => {}
        (false, [b]) if (0..=u64::MAX as i128).contains(b) => {}
        (true, _) => return Err(usage("int takes two parameters m,n")),
        (false, _) => return Err(usage("uint takes one parameter b (0 for the full 64-bit range)")),
    }
    if matches!(args.format, Format::F64le | Format::F32le) {
        return Err(usage("integer distributions write text or u64le"));
    }
    let mut left = args.n;
    let mut bytes = Vec::with_capacity(8 * CHUNK);
    let (mut si, mut ui) = (vec![0i64; CHUNK], vec![0u64; CHUNK]);
    while left > 0 {
        let m = left.min(CHUNK as u64) as usize;
        bytes.clear();
        if signed {
            rng.long_long(&mut si[..m], ints[0] as i64, ints[1] as i64)?;
            for v in &si[..m] {
                match args.format {
                    Format::Text => writeln!(bytes, "{v}")?,
                    _ => bytes.extend_from_slice(&v.to_le_bytes()),
                }
            }
        } else {
            rng.uint64(&mut ui[..m], ints[0] as u64)?;
            for v in &ui[..m] {
                match args.format {
                    Format::Text => writeln!(bytes, "{v}")?,
                    _ => bytes.extend_from_slice(&v.to_le_bytes()),
                }
            }
        }
        out.write_all(&bytes)?;
        left -= m as u64;
    }
    Ok(())
}

fn write_row<T: std::fmt::Debug + Copy>(bytes: &mut Vec<u8>, row: &[T], le: impl Fn(T) -> [u8; 8], text: bool) -> CliResult {
    if text {
        let parts: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        writeln!(bytes, "{}", parts.join(" "))?;
    } else {
        for &v in row {
            bytes.extend_from_slice(&le(v));
        }
    }
    Ok(())
}

fn subsets(rng: &mut Rng, args: &GenArgs, p: &[f64], out: &mut dyn Write) -> CliResult {
    let size = |v: f64| -> CliResult<usize> {
        if v < 0.0 || v.fract() != 0.0 || v > 1e9 {
            return Err(usage(format!("size parameter expected, got {v}")));
        }
        Ok(v as usize)
    };
    let (n, k) = match (args.dist.as_str(), p) {
        ("perm", [n]) => (size(*n)?, size(*n)?),
        ("sample", [n, k]) => (size(*n)?, size(*k)?),
        ("perm", _) => return Err(usage("perm takes one parameter n")),
        _ => return Err(usage("sample takes two parameters n,k")),
    };
    if !matches!(args.format, Format::Text | Format::U64le) {
        return Err(usage("perm and sample write text or u64le"));
    }
    let text = args.format == Format::Text;
    let mut row = vec![0usize; k];
    let mut bytes = Vec::new();
    for _ in 0..args.n {
        if args.dist == "perm" {
            rng.perm(&mut row)?;
        } else {
            rng.sample(n, &mut row)?;
        }
        bytes.clear();
        write_row(&mut bytes, &row, |v| (v as u64).to_le_bytes(), text)?;
        out.write_all(&bytes)?;
    }
    Ok(())
}

fn mvn(rng: &mut Rng, args: &GenArgs, p: &[f64], out: &mut dyn Write) -> CliResult {
    // d means followed by the d x d covariance, row-major.
    let d = (1..=1000).find(|d| d + d * d >= p.len()).filter(|d| d + d * d == p.len());
    let Some(d) = d else {
        return Err(usage("mvn takes d means followed by a d x d covariance"));
    };
    if matches!(args.format, Format::U64le | Format::F32le) {
        return Err(usage("mvn writes text or f64le"));
    }
    let (mu, sigma) = p.split_at(d);
    let per = (CHUNK / d).max(1);
    let mut left = args.n;
    let mut x = vec![0.0; per * d];
    let mut bytes = Vec::new();
    while left > 0 {
        let m = left.min(per as u64) as usize;
        rng.mvn(&mut x[..m * d], mu, sigma, MvnLayout::SampleMajor)?;
        bytes.clear();
        for row in x[..m * d].chunks_exact(d) {
            write_row(&mut bytes, row, f64::to_le_bytes, args.format == Format::Text)?;
        }
        out.write_all(&bytes)?;
        left -= m as u64;
    }
    Ok(())
}
