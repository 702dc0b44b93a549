//! Digests of sampler output for cross-platform comparison.
//!
//! Each entry is the crc32 and byte length of the little-endian output of one
//! sampler. The set covers what must be identical everywhere: uniforms,
//! normals, exponentials and discrete draws in the default mode for every
//! engine, and every continuous distribution in bitexact mode for a few.

use std::collections::BTreeMap;

use rngpack::{Continuous, EngineId, Rng};

pub const SEED: u64 = 42;
pub const N: usize = 1000;

const FROZEN: &str = include_str!("../data/repro_digests.json");

fn digest(bytes: &[u8]) -> String {
    format!("{:08x}:{}", crc32fast::hash(bytes), bytes.len())
}

fn le<T, const W: usize>(v: &[T], f: impl Fn(&T) -> [u8; W]) -> String {
    digest(&v.iter().flat_map(f).collect::<Vec<u8>>())
}

/// Distributions with the parameters used for the bitexact digests.
pub fn bitexact_cases() -> Vec<Continuous> {
    let c = |name: &str, p: &[f64]| Continuous::from_name(name, p).expect("valid parameters");
    vec![
        c("u01", &[]),
        c("unif", &[-2.0, 5.0]),
        c("norm", &[]),
        c("normal", &[3.0, 0.5]),
        c("exp", &[2.0]),
        c("lognormal", &[0.2, 0.7]),
        c("gamma", &[0.3, 1.0]),
        c("gamma", &[7.5, 0.4]),
        c("beta", &[2.0, 5.0]),
        c("chi2", &[3.0]),
        c("t", &[4.0]),
        c("f", &[5.0, 9.0]),
        c("gumbel", &[1.0, 2.0]),
        c("pareto", &[1.5, 3.0]),
        c("weibull", &[1.7, 2.0]),
        c("skew_normal", &[0.5, 2.0, -4.0]),
        c("gpd", &[0.0, 1.0, 0.3]),
    ]
}

/// Digests computed on this machine.
pub fn compute() -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    let f64s = |x: &[f64]| le(x, |v| v.to_le_bytes());
    let idx = |x: &[usize]| le(x, |&v| (v as u64).to_le_bytes());
    for e in EngineId::ALL {
        let n = e.name();
        let mut r = Rng::seeded(e, SEED, &[]);
        let mut x = vec![0.0f64; N];
        r.u01(&mut x).expect("draw");
        m.insert(format!("{n} u01"), f64s(&x));
        r.norm(&mut x).expect("draw");
        m.insert(format!("{n} norm"), f64s(&x));
        r.exp(&mut x, 1.0).expect("draw");
        m.insert(format!("{n} exp"), f64s(&x));
        let mut y = vec![0.0f32; N];
        r.u01(&mut y).expect("draw");
        m.insert(format!("{n} u01 f32"), le(&y, |v| v.to_le_bytes()));
        let mut i = vec![0i32; N];
        r.int(&mut i, -5, 5).expect("draw");
        m.insert(format!("{n} int(-5,5)"), le(&i, |v| v.to_le_bytes()));
        let mut u = vec![0u64; N];
        r.uint64(&mut u, 1000).expect("draw");
        m.insert(format!("{n} uint64(1000)"), le(&u, |v| v.to_le_bytes()));
        let mut p = vec![0usize; 50];
        r.perm(&mut p).expect("draw");
        m.insert(format!("{n} perm(50)"), idx(&p));
        let mut s = vec![0usize; 20];
        r.sample(100, &mut s).expect("draw");
        m.insert(format!("{n} sample(100,20)"), idx(&s));
        let mut b = vec![0u8; 8 * N + 3];
        r.raw(&mut b).expect("draw");
        m.insert(format!("{n} raw"), digest(&b));
    }
    for e in [EngineId::X256PlusPlusSimd, EngineId::Pcg64, EngineId::Philox] {
        for full in [false, true] {
            let mut r = Rng::seeded(e, SEED, &[]);
            r.set_bitexact(true);
            r.set_full_mantissa(full);
            let mode = if full { "bitexact full" } else { "bitexact" };
            for d in bitexact_cases() {
                let mut x = vec![0.0; N];
                r.continuous(&d, &mut x).expect("draw");
                m.insert(format!("{} {mode} {d:?}", e.name()), f64s(&x));
            }
        }
    }
    m
}

/// The committed digests.
pub fn frozen() -> BTreeMap<String, String> {
    serde_json::from_str(FROZEN).expect("committed digests are valid JSON")
}

/// Keys whose digest differs from the committed one, or is missing on either side.
pub fn mismatches() -> Vec<String> {
    let (now, then) = (compute(), frozen());
    let mut keys: Vec<String> = now.keys().chain(then.keys()).filter(|k| now.get(*k) != then.get(*k)).cloned().collect();
    keys.dedup();
    keys
}
