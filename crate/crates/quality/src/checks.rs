//! Individual statistical checks. Each returns a [`Check`] record with its
//! statistic and p-value; the caller supplies the significance level.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::cdf::phi;

/// One test outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub statistic: f64,
    pub p_value: f64,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, statistic: f64, p_value: f64, level: f64) -> Check {
        // NaN p-values fail.
        Check { name: name.into(), statistic, p_value, pass: p_value > level }
    }
}

/// Kolmogorov distribution tail, P(K > lambda).
pub fn kolmogorov_tail(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=100 {
        let kf = k as f64;
        let term = (-2.0 * kf * kf * lambda * lambda).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Kolmogorov-Smirnov distance of `u` from U(0, 1) and its asymptotic p-value
/// with Stephens' small-sample correction.
pub fn ks_uniform(u: &[f64]) -> (f64, f64) {
    let n = u.len();
    if n == 0 {
        return (0.0, 1.0);
    }
    let mut s = u.to_vec();
    s.sort_unstable_by(f64::total_cmp);
    let nf = n as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in s.iter().enumerate() {
        d = d.max((i + 1) as f64 / nf - x).max(x - i as f64 / nf);
    }
    if s.iter().any(|x| x.is_nan()) {
        d = 1.0;
    }
    let sq = nf.sqrt();
    (d, kolmogorov_tail((sq + 0.12 + 0.11 / sq) * d))
}

pub fn ks_check(name: &str, u: &[f64], level: f64) -> Check {
    let (d, p) = ks_uniform(u);
    Check::new(name, d, p, level)
}

/// Mean, variance, skewness and excess kurtosis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
}

impl Moments {
    pub fn sample(x: &[f64]) -> Moments {
        let n = x.len() as f64;
        let mean = x.iter().sum::<f64>() / n;
        let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
        for &v in x {
            let d = v - mean;
            let d2 = d * d;
            m2 += d2;
            m3 += d2 * d;
            m4 += d2 * d2;
        }
        let (m2, m3, m4) = (m2 / n, m3 / n, m4 / n);
        Moments { mean, variance: m2, skewness: m3 / m2.powf(1.5), kurtosis: m4 / (m2 * m2) - 3.0 }
    }

    fn get(&self, i: usize) -> f64 {
        [self.mean, self.variance, self.skewness, self.kurtosis][i]
    }
}

/// z-scores of the four sample moments against theory.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentCheck {
    pub observed: Moments,
    pub z: [f64; 4],
    pub checks: Vec<Check>,
}

const BATCHES: usize = 50;
const MOMENT_NAMES: [&str; 4] = ["mean", "variance", "skewness", "kurtosis"];

/// Compares sample moments with `expected`. Standard errors come from the
/// spread of the same statistic over 50 equal batches, which works for any
/// distribution with finite eighth moment. Needs at least 1000 samples.
pub fn moment_check(name: &str, x: &[f64], expected: &Moments, level: f64) -> MomentCheck {
    assert!(x.len() >= 1000, "moment check needs at least 1000 samples");
    let observed = Moments::sample(x);
    let size = x.len() / BATCHES;
    let batches: Vec<Moments> = x.chunks_exact(size).take(BATCHES).map(Moments::sample).collect();
    let mut z = [0.0; 4];
    let mut checks = Vec::new();
    for i in 0..4 {
        let vals: Vec<f64> = batches.iter().map(|m| m.get(i)).collect();
        let mean = vals.iter().sum::<f64>() / BATCHES as f64;
        let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (BATCHES - 1) as f64;
        let se = (var / BATCHES as f64).sqrt();
        let diff = observed.get(i) - expected.get(i);
        z[i] = if diff == 0.0 { 0.0 } else { diff / se };
        let p = if z[i].is_nan() { f64::NAN } else { 2.0 * (1.0 - phi(z[i].abs())) };
        checks.push(Check::new(format!("{name} {}", MOMENT_NAMES[i]), z[i], p, level));
    }
    MomentCheck { observed, z, checks }
}

/// Order-statistic test on uniforms: the minimum of n is Beta(1, n) and the
/// maximum Beta(n, 1). Two-sided, the smaller p-value doubled.
pub fn extreme_check(name: &str, u: &[f64], level: f64) -> Check {
    let n = u.len() as f64;
    let min = u.iter().copied().fold(f64::INFINITY, f64::min);
    let max = u.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let f_min = -(n * (-min).ln_1p()).exp_m1();
    let f_max = (n * max.ln()).exp();
    let two = |f: f64| 2.0 * f.min(1.0 - f);
    let p = (2.0 * two(f_min).min(two(f_max))).min(1.0);
    Check::new(name, min.min(1.0 - max), p, level)
}

/// Pearson chi-square of observed counts against expected probabilities.
pub fn chi_square(name: &str, counts: &[u64], probs: &[f64], level: f64) -> Check {
    let total: u64 = counts.iter().sum();
    let stat: f64 = counts
        .iter()
        .zip(probs)
        .map(|(&c, &p)| {
            let e = p * total as f64;
            (c as f64 - e) * (c as f64 - e) / e
        })
        .sum();
    let df = (counts.len() - 1) as f64;
    let p = 1.0 - ChiSquared::new(df).expect("at least two cells").cdf(stat);
    Check::new(name, stat, p, level)
}

/// Histogram balance of uniforms over equal bins.
pub fn binning_check(name: &str, u: &[f64], bins: usize, level: f64) -> Check {
    let mut counts = vec![0u64; bins];
    for &x in u {
        let b = ((x * bins as f64) as usize).min(bins - 1);
        counts[b] += 1;
    }
    chi_square(name, &counts, &vec![1.0 / bins as f64; bins], level)
}

/// Per-bit frequency of ones among the low `bits` bits of each word.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BitBalance {
    pub frequencies: Vec<f64>,
    pub check: Check,
}

/// Each bit should be one half the time; the largest deviation is tested with
/// a Bonferroni correction over the bits.
pub fn bit_balance(name: &str, words: &[u64], bits: u32, level: f64) -> BitBalance {
    let n = words.len() as f64;
    let mut ones = vec![0u64; bits as usize];
    for &w in words {
        for (b, c) in ones.iter_mut().enumerate() {
            *c += w >> b & 1;
        }
    }
    let frequencies: Vec<f64> = ones.iter().map(|&c| c as f64 / n).collect();
    let sd = (0.25 / n).sqrt();
    let zmax = frequencies.iter().map(|f| ((f - 0.5) / sd).abs()).fold(0.0, f64::max);
    let p = (bits as f64 * 2.0 * (1.0 - phi(zmax))).min(1.0);
    BitBalance { frequencies, check: Check::new(name, zmax, p, level) }
}
