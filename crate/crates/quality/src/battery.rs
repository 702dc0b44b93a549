//! The built-in battery: every check on a fixed set of samplers for one engine.

use std::fmt;

use rngpack::{Continuous, EngineId, Rng};
use serde::Serialize;

use crate::cdf::pit;
use crate::checks::{binning_check, bit_balance, chi_square, extreme_check, ks_check, moment_check, Check, Moments};

/// Battery size and family-wise significance level.
#[derive(Clone, Copy, Debug)]
pub struct BatteryConfig {
    /// Samples per sampler.
    pub n: usize,
    /// Level for the whole battery, split evenly over its checks.
    pub level: f64,
    pub seed: u64,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig { n: 1_000_000, level: 1e-4, seed: 20_240_601 }
    }
}

/// Outcome of one battery run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub engine: String,
    pub n: usize,
    /// Per-check threshold after the Bonferroni split.
    pub threshold: f64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Number of p-values below each cutoff, as in an external battery tally.
    pub fn tally(&self, cutoffs: &[f64]) -> Vec<usize> {
        cutoffs.iter().map(|&c| self.checks.iter().filter(|k| k.p_value < c).count()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "engine {}  n = {}  per-check threshold {:.1e}", self.engine, self.n, self.threshold)?;
        for c in &self.checks {
            writeln!(f, "  {:<28} {:>14.6e} p = {:<10.4e} {}", c.name, c.statistic, c.p_value, if c.pass { "ok" } else { "FAIL" })?;
        }
        write!(f, "{}", if self.passed() { "passed" } else { "FAILED" })
    }
}

/// Theoretical moments where they are simple closed forms.
pub fn theoretical_moments(d: &Continuous) -> Option<Moments> {
    let m = |mean: f64, variance: f64, skewness: f64, kurtosis: f64| Some(Moments { mean, variance, skewness, kurtosis });
    match *d {
        Continuous::U01 => m(0.5, 1.0 / 12.0, 0.0, -1.2),
        Continuous::Unif { a, b } => m(0.5 * (a + b), (b - a) * (b - a) / 12.0, 0.0, -1.2),
        Continuous::Norm => m(0.0, 1.0, 0.0, 0.0),
        Continuous::Normal { mu, sigma } => m(mu, sigma * sigma, 0.0, 0.0),
        Continuous::Exp { scale } => m(scale, scale * scale, 2.0, 6.0),
        Continuous::Gamma { shape, scale } => m(shape * scale, shape * scale * scale, 2.0 / shape.sqrt(), 6.0 / shape),
        Continuous::Chi2 { nu } => m(nu, 2.0 * nu, (8.0 / nu).sqrt(), 12.0 / nu),
        Continuous::Beta { a, b } => {
            let s = a + b;
            let var = a * b / (s * s * (s + 1.0));
            let skew = 2.0 * (b - a) * (s + 1.0).sqrt() / ((s + 2.0) * (a * b).sqrt());
            let kurt = 6.0 * ((a - b) * (a - b) * (s + 1.0) - a * b * (s + 2.0)) / (a * b * (s + 2.0) * (s + 3.0));
            m(a / s, var, skew, kurt)
        }
        Continuous::Gumbel { mu, beta } => {
            const EULER: f64 = 0.577_215_664_901_532_9;
            const ZETA3: f64 = 1.202_056_903_159_594_3;
            let pi2 = std::f64::consts::PI * std::f64::consts::PI;
            m(mu + beta * EULER, pi2 * beta * beta / 6.0, 12.0 * 6f64.sqrt() * ZETA3 / (pi2 * std::f64::consts::PI), 2.4)
        }
        _ => None,
    }
}

/// Discrete uniform on {0, ..., b - 1}.
pub fn discrete_uniform_moments(b: u64) -> Moments {
    let b2 = (b * b) as f64;
    Moments { mean: (b as f64 - 1.0) / 2.0, variance: (b2 - 1.0) / 12.0, skewness: 0.0, kurtosis: -6.0 * (b2 + 1.0) / (5.0 * (b2 - 1.0)) }
}

/// Samplers the battery exercises.
pub fn battery_samplers() -> [(&'static str, Continuous); 4] {
    [
        ("u01", Continuous::U01),
        ("norm", Continuous::Norm),
        ("exp", Continuous::Exp { scale: 1.0 }),
        ("gamma(2,3)", Continuous::Gamma { shape: 2.0, scale: 3.0 }),
    ]
}

/// Checks per continuous sampler (KS, binning, extremes, four moments), plus
/// the bounded-integer range, chi-square and moments, plus raw bit balance.
const CHECKS_PER_CONTINUOUS: usize = 7;
const INT_CHECKS: usize = 6;
const BOUND: u64 = 10;

/// Runs the battery on one engine, seeded from `cfg.seed`.
pub fn run_battery(engine: EngineId, cfg: &BatteryConfig) -> Report {
    let mut rng = Rng::seeded(engine, cfg.seed, &[]);
    run_battery_on(&mut rng, cfg)
}

/// Runs the battery on an existing generator.
pub fn run_battery_on(rng: &mut Rng, cfg: &BatteryConfig) -> Report {
    let samplers = battery_samplers();
    let total = samplers.len() * CHECKS_PER_CONTINUOUS + INT_CHECKS + 1;
    let t = cfg.level / total as f64;
    let n = cfg.n;
    let mut checks = Vec::with_capacity(total);
    let mut x = vec![0.0; n];
    for (name, d) in samplers {
        rng.continuous(&d, &mut x).expect("battery parameters are valid");
        let u = pit(&x, &d);
        checks.push(ks_check(&format!("{name} KS"), &u, t));
        checks.push(binning_check(&format!("{name} bins(100)"), &u, 100, t));
        checks.push(extreme_check(&format!("{name} min/max"), &u, t));
        let expected = theoretical_moments(&d).expect("battery samplers have closed-form moments");
        checks.extend(moment_check(name, &x, &expected, t).checks);
    }
    let mut ints = vec![0u64; n];
    rng.uint64(&mut ints, BOUND).expect("bounded draws cannot fail here");
    let outside = ints.iter().filter(|&&v| v >= BOUND).count();
    checks.push(Check::new("uint(10) range", outside as f64, if outside == 0 { 1.0 } else { 0.0 }, t));
    let mut counts = vec![0u64; BOUND as usize];
    for &v in &ints {
        if v < BOUND {
            counts[v as usize] += 1;
        }
    }
    checks.push(chi_square("uint(10) chi-square", &counts, &[0.1; 10], t));
    let as_f64: Vec<f64> = ints.iter().map(|&v| v as f64).collect();
    checks.extend(moment_check("uint(10)", &as_f64, &discrete_uniform_moments(BOUND), t).checks);
    let mut words = vec![0u64; n];
    rng.take_bulk(&mut words).expect("raw words");
    checks.push(bit_balance("raw bit balance", &words, 64, t).check);
    Report { engine: rng.engine().name().to_string(), n, threshold: t, checks }
}
