use rngpack::{Continuous, EngineId, Rng};
use rngpack_quality::battery::{discrete_uniform_moments, theoretical_moments};
use rngpack_quality::{
    binning_check, bit_balance, extreme_check, ks_check, moment_check, pit, run_battery, run_battery_on, BatteryConfig,
};

const LEVEL: f64 = 1e-4;

#[test]
fn every_engine_passes_the_battery() {
    let cfg = BatteryConfig { n: 200_000, ..Default::default() };
    let reports: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = EngineId::ALL.iter().map(|&e| s.spawn(move || run_battery(e, &cfg))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for r in &reports {
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 35);
    }
}

#[test]
fn battery_also_passes_in_bitexact_and_full_mantissa_modes() {
    let cfg = BatteryConfig { n: 200_000, ..Default::default() };
    let mut rng = Rng::seeded(EngineId::X256PlusPlusSimd, 99, &[]);
    rng.set_bitexact(true);
    rng.set_full_mantissa(true);
    let r = run_battery_on(&mut rng, &cfg);
    assert!(r.passed(), "{r}");
}

#[test]
fn report_serializes_and_tallies() {
    let cfg = BatteryConfig { n: 5_000, ..Default::default() };
    let r = run_battery(EngineId::Pcg64, &cfg);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["engine"], "pcg64");
    assert_eq!(v["checks"].as_array().unwrap().len(), r.checks.len());
    let t = r.tally(&[1.1, 0.0]);
    assert_eq!(t, vec![r.checks.len(), 0]);
}

fn draws(d: &Continuous, n: usize, seed: u64) -> Vec<f64> {
    let mut rng = Rng::seeded(EngineId::X256PlusPlusSimd, seed, &[]);
    let mut x = vec![0.0; n];
    rng.continuous(d, &mut x).unwrap();
    x
}

fn catalogue() -> Vec<Continuous> {
    let c = |name: &str, p: &[f64]| Continuous::from_name(name, p).unwrap();
    vec![
        c("u01", &[]),
        c("unif", &[-2.0, 5.0]),
        c("norm", &[]),
        c("normal", &[3.0, 0.5]),
        c("exp", &[2.0]),
        c("lognormal", &[0.2, 0.7]),
        c("gamma", &[0.3, 1.0]),
        c("gamma", &[1.0, 2.0]),
        c("gamma", &[7.5, 0.4]),
        c("beta", &[0.5, 0.5]),
        c("beta", &[2.0, 5.0]),
        c("chi2", &[3.0]),
        c("t", &[4.0]),
        c("f", &[5.0, 9.0]),
        c("gumbel", &[1.0, 2.0]),
        c("pareto", &[1.5, 3.0]),
        c("weibull", &[1.7, 2.0]),
        c("skew_normal", &[0.5, 2.0, -4.0]),
        c("gpd", &[0.0, 1.0, 0.3]),
        c("gpd", &[1.0, 2.0, -0.4]),
        c("gpd", &[0.0, 1.0, 0.0]),
    ]
}

#[test]
fn every_distribution_passes_pit_checks() {
    let cases = catalogue();
    let t = LEVEL / (3 * cases.len()) as f64;
    for (i, d) in cases.iter().enumerate() {
        let u = pit(&draws(d, 100_000, 1000 + i as u64), d);
        let name = format!("{d:?}");
        for c in [ks_check(&name, &u, t), binning_check(&name, &u, 50, t), extreme_check(&name, &u, t)] {
            assert!(c.pass, "{c:?}");
        }
    }
}

#[test]
fn closed_form_moments_match_samples() {
    let cases: Vec<Continuous> = catalogue().into_iter().filter(|d| theoretical_moments(d).is_some()).collect();
    assert!(cases.len() >= 10);
    let t = LEVEL / (4 * cases.len()) as f64;
    for (i, d) in cases.iter().enumerate() {
        let m = moment_check(&format!("{d:?}"), &draws(d, 1_000_000, 2000 + i as u64), &theoretical_moments(d).unwrap(), t);
        for c in &m.checks {
            assert!(c.pass, "{c:?} {:?}", m.observed);
        }
    }
}

#[test]
fn ten_million_normals_and_exponentials() {
    for (i, d) in [Continuous::Norm, Continuous::Exp { scale: 1.0 }].iter().enumerate() {
        let x = draws(d, 10_000_000, 3000 + i as u64);
        let u = pit(&x, d);
        let t = LEVEL / 6.0;
        assert!(ks_check("ks", &u, t).pass);
        assert!(extreme_check("ext", &u, t).pass);
        for c in moment_check("moments", &x, &theoretical_moments(d).unwrap(), t).checks {
            assert!(c.pass, "{c:?}");
        }
    }
}

#[test]
fn bounded_integers_match_discrete_uniform_moments() {
    let mut rng = Rng::seeded(EngineId::Sfc64, 5, &[]);
    let mut v = vec![0u64; 1_000_000];
    rng.uint64(&mut v, 7).unwrap();
    let x: Vec<f64> = v.iter().map(|&k| k as f64).collect();
    for c in moment_check("uint(7)", &x, &discrete_uniform_moments(7), LEVEL).checks {
        assert!(c.pass, "{c:?}");
    }
}

// Negative controls: each check must reject a plausible defect.

#[test]
fn wrong_scale_is_rejected() {
    let x = draws(&Continuous::Norm, 1_000_000, 1);
    let wrong = Continuous::Normal { mu: 0.0, sigma: 1.01 };
    assert!(!ks_check("ks", &pit(&x, &wrong), LEVEL).pass);
    let m = moment_check("m", &x, &theoretical_moments(&wrong).unwrap(), LEVEL);
    assert!(!m.checks[1].pass);
}

#[test]
fn coarse_uniforms_are_rejected() {
    // 8-bit uniforms: visible to KS as a staircase.
    let u: Vec<f64> = draws(&Continuous::U01, 1_000_000, 2).iter().map(|x| (x * 256.0).floor() / 256.0).collect();
    assert!(!ks_check("ks", &u, LEVEL).pass);
}

#[test]
fn light_tails_are_rejected() {
    // Clipping the outer 0.1% leaves KS and binning nearly blind, but not the extremes.
    let u: Vec<f64> = draws(&Continuous::U01, 1_000_000, 3).iter().map(|x| 0.0005 + 0.999 * x).collect();
    assert!(!extreme_check("ext", &u, LEVEL).pass);
}

#[test]
fn lumpy_histogram_is_rejected() {
    let u: Vec<f64> = draws(&Continuous::U01, 1_000_000, 4)
        .iter()
        .map(|&x| if (x * 100.0) as u32 == 37 && x.fract() > 0.0 { (x * 1e6).fract() * 0.9 + 0.05 } else { x })
        .collect();
    // Bin 37 has been emptied into the rest; KS also notices, binning most strongly.
    let c = binning_check("bins", &u, 100, LEVEL);
    assert!(!c.pass && c.p_value < 1e-100, "{c:?}");
}

#[test]
fn skewed_moments_are_rejected() {
    let x: Vec<f64> = draws(&Continuous::Norm, 1_000_000, 5).iter().map(|&z| z + 0.02 * (z * z - 1.0)).collect();
    let m = moment_check("m", &x, &theoretical_moments(&Continuous::Norm).unwrap(), LEVEL);
    assert!(m.checks[0].pass);
    assert!(!m.checks[2].pass);
}

#[test]
fn biased_bit_is_rejected() {
    let mut rng = Rng::seeded(EngineId::X256PlusPlus, 6, &[]);
    let mut w = vec![0u64; 1_000_000];
    rng.take_bulk(&mut w).unwrap();
    let mut v = vec![0u64; 1_000_000];
    rng.take_bulk(&mut v).unwrap();
    // Bit 40 is one with probability 0.505.
    let biased: Vec<u64> = w.iter().zip(&v).map(|(&a, &b)| if b % 100 == 0 { a | 1 << 40 } else { a }).collect();
    let good = bit_balance("good", &w, 64, LEVEL);
    let bad = bit_balance("bad", &biased, 64, LEVEL);
    assert!(good.check.pass);
    assert!(!bad.check.pass);
}
