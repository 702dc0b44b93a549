//! Continuous samplers: exact relations between streams, deterministic math
//! against high-precision oracles, ziggurat envelope soundness and mvn.

use rngpack::ddouble::DD;
use rngpack::detmath::{det_exp, det_log, ulp_distance};
use rngpack::ziggurat::{band, Band, ZigKind};
use rngpack::{Continuous, EngineId, MvnLayout, Rng};

fn rng(seed: u64) -> Rng {
    Rng::seeded(EngineId::X256PlusPlusSimd, seed, &[])
}

/// (is exp, x bits, correctly rounded result bits) from a 200-bit mpmath run.
const MP_POINTS: [(bool, u64, u64); 48] = [
    (true, 0xbfe68ca5e0d58b24, 0x3fdfa227c8bd8e3b),
    (true, 0xc07e8cfa7f3e7e86, 0x13dbc0c083bb704e),
    (true, 0x406a69dd48ce676c, 0x52fce85f33ad47e9),
    (true, 0xbffb5d34316e07c0, 0x3fc725199e17ddac),
    (true, 0x40491e0e1fbc8350, 0x44763735f0564b4b),
    (true, 0xc0678122f320631e, 0x2efa64a737a7c4da),
    (true, 0xbffc49bee0b8ed14, 0x3fc5d89f16890902),
    (true, 0x4024d1eefd24f500, 0x40e034d7f617aefa),
    (true, 0xc0843c0c72b7ac83, 0x058cc3950ce154c2),
    (true, 0xbfd0fc98b29e5570, 0x3fe88a54463fe130),
    (true, 0xc082d19e878f1262, 0x09a2734812c54e8e),
    (true, 0xc081e803a5ec88aa, 0x0c44280ef199758a),
    (true, 0xbfd352b5de1bc450, 0x3fe7a91f51425c14),
    (true, 0x407c997cd2df4534, 0x6931f708ad77ca9a),
    (true, 0xc080756b04599207, 0x1071f15e71133b67),
    (true, 0xbff1b673eaf47a68, 0x3fd5277a4f17f433),
    (true, 0x40664d022420c858, 0x5004e93667afbdc3),
    (true, 0x40839657146e9b5a, 0x78734c8fe2efe8e1),
    (true, 0x3fd3bd04d2bcc158, 0x3ff5c7ba11a0aa3c),
    (true, 0xc06214b6f8ea4cc4, 0x32e3f219e760d731),
    (true, 0x4084d60ea38583ba, 0x7c0e6d0b66b4afe5),
    (true, 0xbffd04ca138bf348, 0x3fc4defa55f6ecc9),
    (true, 0x407f5db18814e3b4, 0x6d3047690e8c3be4),
    (true, 0xc07268c0822a6922, 0x2560a984754b507f),
    (false, 0x3fe533fa1008e214, 0xbfda57844a6936ec),
    (false, 0x105260ff9edba096, 0xc0808050f8c88409),
    (false, 0x3ff4d9697c2b8590, 0x3fd0f15627238f68),
    (false, 0x675105e8b08ef408, 0x407b4bea5001ec59),
    (false, 0x3fe9c130e33529ca, 0xbfcbca9bcc935316),
    (false, 0x4a18f77122bce963, 0x405c2f06d61ea1bc),
    (false, 0x4004bbedfe21f86e, 0x3fee798ddf0dd48f),
    (false, 0x30096d4d876d3f9f, 0xc066094206246b64),
    (false, 0x4001e3be9de09246, 0x3fe9c0c0fd3edb26),
    (false, 0x0977bff74c0ef015, 0xc082e03c1d8c08a9),
    (false, 0x3fd546c58f502742, 0xbff19eda0b12c92a),
    (false, 0x1b4e79ce1814f1f6, 0xc07963ba936cf01c),
    (false, 0x4006074a6912de97, 0x3ff034d0f2fc2ac5),
    (false, 0x36e9a2da89f9bd2d, 0xc059023c3c91bda4),
    (false, 0x3ff533e99d6e8388, 0x3fd204d00e089078),
    (false, 0x4a973c1b73d9b55e, 0x405d8d513acae358),
    (false, 0x3ffde0f2d1053528, 0x3fe3fc5f97348754),
    (false, 0x26fdf1c7977f1bf0, 0xc0714a1d269925d6),
    (false, 0x400995aaf499e10e, 0x3ff299ceae9055d0),
    (false, 0x58b8b62f6a324fc6, 0x40712ebc4b0e6544),
    (false, 0x3ff0d4e532703f81, 0x3fa9f181a54ba2d6),
    (false, 0x493439d14c49c07c, 0x4059b47d6d6d84fb),
    (false, 0x40012fa646a18630, 0x3fe8781ab65d796c),
    (false, 0x6eaa226046c1b969, 0x4080322c3e3c1645),
];

#[test]
fn double_double_oracle_agrees_with_multiprecision() {
    for (is_exp, x, y) in MP_POINTS {
        let (x, y) = (f64::from_bits(x), f64::from_bits(y));
        let dd = if is_exp { DD::from_f64(x).exp() } else { DD::from_f64(x).ln() };
        assert_eq!(dd.to_f64(), y, "{} {x:e}", if is_exp { "exp" } else { "log" });
        let det = if is_exp { det_exp(x) } else { det_log(x) };
        assert!(ulp_distance(det, y) <= 1);
    }
}

#[test]
fn deterministic_log_exp_within_one_ulp_on_a_million_points() {
    let mut r = rng(1);
    let mut u = vec![0.0; 500_000];
    r.u01(&mut u).unwrap();
    let mut worst = (0, 0);
    for &v in &u {
        let x = -700.0 + 1400.0 * v;
        worst.0 = worst.0.max(ulp_distance(det_exp(x), DD::from_f64(x).exp().to_f64()));
    }
    let mut bits = vec![0u64; 500_000];
    r.uint64(&mut bits, 0).unwrap();
    for &b in &bits {
        // Positive normal doubles across the whole exponent range.
        let x = f64::from_bits((b >> 1) % (0x7fe0_0000_0000_0000 - 0x0010_0000_0000_0000) + 0x0010_0000_0000_0000);
        worst.1 = worst.1.max(ulp_distance(det_log(x), DD::from_f64(x).ln().to_f64()));
    }
    assert!(worst.0 <= 1 && worst.1 <= 1, "{worst:?}");
}

#[test]
fn envelope_bands_never_misclassify() {
    // Points just inside each band edge and at the density crossing.
    for kind in [ZigKind::Normal, ZigKind::Exponential] {
        let t = kind.tables();
        let scale = 1u64 << t.magnitude_bits;
        for idx in 1..256 {
            let (lo_f, hi_f) = (t.f[idx], t.f[idx - 1]);
            for j in 0..2000u64 {
                let m = t.k[idx] + ((scale - t.k[idx]) as u128 * j as u128 / 2000) as u64;
                let x = m as f64 * t.w[idx];
                let cross = ((kind.pdf(x) - lo_f) / (hi_f - lo_f) * 9_007_199_254_740_992.0) as i64;
                for d in [-1i64 << 20, -4096, -64, -1, 0, 1, 64, 4096, 1 << 20] {
                    let uy = (cross + d).clamp(0, (1 << 53) - 1) as u64;
                    let y = (hi_f - lo_f) * (uy as f64 / 9_007_199_254_740_992.0) + lo_f;
                    match band(t, idx, m, uy) {
                        Band::Accept => assert!(y < kind.pdf(x), "{kind:?} strip {idx} m {m} uy {uy}"),
                        Band::Reject => assert!(y >= kind.pdf(x), "{kind:?} strip {idx} m {m} uy {uy}"),
                        Band::Undecided => {}
                    }
                }
            }
        }
    }
}

#[test]
fn unif_relations() {
    let mut a = rng(2);
    let mut b = a.clone();
    let (mut x, mut y) = (vec![0.0; 1000], vec![0.0; 1000]);
    a.unif(&mut x, 0.0, 1.0).unwrap();
    b.u01(&mut y).unwrap();
    assert_eq!(x, y);
    a.unif(&mut x, 3.0, 3.0).unwrap();
    assert!(x.iter().all(|&v| v == 3.0));
    assert!(a.unif(&mut x, 2.0, 1.0).is_err());
    // Bitexact mode leaves the affine path unchanged.
    let mut c = rng(3);
    let mut d = c.clone();
    d.set_bitexact(true);
    c.unif(&mut x, -2.5, 7.0).unwrap();
    d.unif(&mut y, -2.5, 7.0).unwrap();
    assert_eq!(x, y);
}

#[test]
fn full_mantissa_uses_53_bits() {
    let mut a = rng(4);
    let mut b = a.clone();
    b.set_full_mantissa(true);
    let words: Vec<u64> = (0..100).map(|_| a.clone().take_u64().unwrap()).collect();
    let _ = words;
    let mut w = vec![0u64; 100];
    a.clone().take_bulk(&mut w).unwrap();
    let (mut x, mut y) = (vec![0.0; 100], vec![0.0; 100]);
    a.u01(&mut x).unwrap();
    b.u01(&mut y).unwrap();
    for i in 0..100 {
        assert_eq!(x[i], (w[i] >> 12) as f64 / 4_503_599_627_370_496.0);
        assert_eq!(y[i], (w[i] >> 11) as f64 / 9_007_199_254_740_992.0);
    }
}

#[test]
fn float_variants_follow_the_double_streams() {
    let mut a = rng(5);
    let mut b = a.clone();
    let mut f = vec![0.0f32; 64];
    let mut d = vec![0.0f64; 64];
    a.norm(&mut f).unwrap();
    b.norm(&mut d).unwrap();
    assert!(f.iter().zip(&d).all(|(&s, &t)| s == t as f32));
    a.exp(&mut f, 2.0).unwrap();
    b.exp(&mut d, 1.0).unwrap();
    assert!(f.iter().zip(&d).all(|(&s, &t)| s == 2.0 * (t as f32)));
    let mut c = rng(6);
    let h = c.clone().take_u32().unwrap();
    c.u01(&mut f[..1]).unwrap();
    assert_eq!(f[0], (h >> 9) as f32 / 8_388_608.0);
}

#[test]
fn scale_location_families_are_exact_transforms() {
    let n = 500;
    let mut base = vec![0.0; n];
    let mut out = vec![0.0; n];
    rng(7).norm(&mut base).unwrap();
    rng(7).normal(&mut out, 1.5, 2.0).unwrap();
    assert!(base.iter().zip(&out).all(|(z, x)| *x == 1.5 + 2.0 * z));
    rng(7).lognormal(&mut out, 0.5, 0.25).unwrap();
    assert!(base.iter().zip(&out).all(|(z, x)| ulp_distance(*x, (0.5 + 0.25 * z).exp()) <= 1));
    rng(7).exp(&mut base, 1.0).unwrap();
    // gpd with xi = 0 is a shifted exponential.
    rng(7).gpd(&mut out, 1.0, 3.0, 0.0).unwrap();
    assert!(base.iter().zip(&out).all(|(e, x)| *x == 1.0 + 3.0 * e));
    rng(7).pareto(&mut out, 2.0, 4.0).unwrap();
    assert!(base.iter().zip(&out).all(|(e, x)| ulp_distance(*x, 2.0 * (e / 4.0).exp()) <= 1));
    rng(7).weibull(&mut out, 2.0, 3.0).unwrap();
    assert!(base.iter().zip(&out).all(|(e, x)| ulp_distance(*x, 3.0 * e.sqrt()) <= 1));
}

#[test]
fn gamma_of_shape_one_and_chi2_are_consistent() {
    let mut a = vec![0.0; 200];
    let mut b = vec![0.0; 200];
    rng(8).gamma(&mut a, 2.5, 2.0).unwrap();
    rng(8).chi2(&mut b, 5.0).unwrap();
    assert_eq!(a, b);
    rng(8).continuous(&Continuous::Gamma { shape: 2.5, scale: 2.0 }, &mut b).unwrap();
    assert_eq!(a, b);
}

#[test]
fn bitexact_and_platform_math_agree_within_4_ulp() {
    let dists = [
        Continuous::Lognormal { mu: 0.3, sigma: 0.7 },
        Continuous::Gamma { shape: 0.4, scale: 1.0 },
        Continuous::Beta { a: 2.0, b: 3.0 },
        Continuous::T { nu: 5.0 },
        Continuous::F { nu1: 3.0, nu2: 7.0 },
        Continuous::Gumbel { mu: 0.0, beta: 1.0 },
        // Location shifts put outputs near zero, where cancellation would magnify any difference.
        Continuous::Gumbel { mu: 1.0, beta: 2.0 },
        Continuous::Gpd { mu: -0.5, sigma: 1.0, xi: 0.2 },
        Continuous::Pareto { xm: 1.0, alpha: 3.0 },
        Continuous::Weibull { k: 1.7, lambda: 2.0 },
        Continuous::SkewNormal { mu: 0.0, sigma: 1.0, alpha: 4.0 },
        Continuous::Gpd { mu: 0.0, sigma: 1.0, xi: 0.3 },
        Continuous::Gpd { mu: 0.0, sigma: 1.0, xi: -0.3 },
    ];
    for d in dists {
        let mut fast = rng(9);
        let mut exact = rng(9);
        exact.set_bitexact(true);
        let (mut x, mut y) = (vec![0.0; 100_000], vec![0.0; 100_000]);
        fast.continuous(&d, &mut x).unwrap();
        exact.continuous(&d, &mut y).unwrap();
        let worst = x.iter().zip(&y).map(|(a, b)| ulp_distance(*a, *b)).max().unwrap();
        assert!(worst <= 4, "{d:?}: {worst} ulp");
    }
}

#[test]
fn every_distribution_rejects_bad_parameters() {
    let mut r = rng(10);
    let mut x = [0.0; 4];
    let before = r.clone().take_u64().unwrap();
    for d in [
        Continuous::Exp { scale: 0.0 },
        Continuous::Normal { mu: 0.0, sigma: -1.0 },
        Continuous::Gamma { shape: 0.0, scale: 1.0 },
        Continuous::Beta { a: 1.0, b: 0.0 },
        Continuous::Chi2 { nu: -2.0 },
        Continuous::T { nu: 0.0 },
        Continuous::F { nu1: 1.0, nu2: 0.0 },
        Continuous::Gumbel { mu: 0.0, beta: 0.0 },
        Continuous::Pareto { xm: 0.0, alpha: 1.0 },
        Continuous::Weibull { k: 1.0, lambda: 0.0 },
        Continuous::SkewNormal { mu: 0.0, sigma: 0.0, alpha: 1.0 },
        Continuous::Gpd { mu: 0.0, sigma: 0.0, xi: 0.0 },
        Continuous::Normal { mu: f64::NAN, sigma: 1.0 },
    ] {
        assert!(r.continuous(&d, &mut x).is_err(), "{d:?}");
        assert!(!r.last_error().is_empty());
    }
    assert_eq!(r.take_u64().unwrap(), before);
}

#[test]
fn mvn_identity_reproduces_the_normal_stream() {
    let (d, n) = (3, 100);
    let mut eye = vec![0.0; d * d];
    for i in 0..d {
        eye[i * d + i] = 1.0;
    }
    let mut x = vec![0.0; d * n];
    let mut z = vec![0.0; d * n];
    rng(11).mvn(&mut x, &[0.0; 3], &eye, MvnLayout::SampleMajor).unwrap();
    rng(11).norm(&mut z).unwrap();
    assert_eq!(x, z);
    let mut t = vec![0.0; d * n];
    rng(11).mvn(&mut t, &[0.0; 3], &eye, MvnLayout::CoordinateMajor).unwrap();
    for j in 0..n {
        for i in 0..d {
            assert_eq!(t[i * n + j], x[j * d + i]);
        }
    }
}

#[test]
fn mvn_rank_one_gives_equal_coordinates() {
    let mut x = vec![0.0; 2000];
    rng(12).mvn(&mut x, &[1.0, 1.0], &[1.0, 1.0, 1.0, 1.0], MvnLayout::SampleMajor).unwrap();
    assert!(x.chunks(2).all(|p| p[0] == p[1]));
}

#[test]
fn mvn_sample_covariance() {
    let n = 100_000;
    let mut x = vec![0.0; 2 * n];
    let sigma = [4.0, 1.2, 1.2, 9.0];
    rng(13).mvn(&mut x, &[1.0, -2.0], &sigma, MvnLayout::SampleMajor).unwrap();
    let mean = |k: usize| x.iter().skip(k).step_by(2).sum::<f64>() / n as f64;
    let (m0, m1) = (mean(0), mean(1));
    let mut c = [0.0; 4];
    for p in x.chunks(2) {
        let (a, b) = (p[0] - m0, p[1] - m1);
        c[0] += a * a;
        c[1] += a * b;
        c[3] += b * b;
    }
    c[2] = c[1];
    for (got, want) in c.iter().map(|v| v / n as f64).zip(sigma) {
        assert!((got - want).abs() < 0.05 * sigma[0].max(want.abs()), "{got} {want}");
    }
    assert!((m0 - 1.0).abs() < 0.05 && (m1 + 2.0).abs() < 0.05);
}

#[test]
fn mvn_errors_leave_the_stream_alone() {
    let mut r = rng(14);
    let before = r.clone().take_u64().unwrap();
    let mut x = vec![0.0; 4];
    assert!(r.mvn(&mut x, &[0.0, 0.0], &[1.0, 2.0, 2.0, 1.0], MvnLayout::SampleMajor).is_err());
    assert!(r.last_error().contains("positive semidefinite"));
    assert!(r.mvn(&mut x, &[0.0, 0.0], &[1.0, 0.5, 0.0, 1.0], MvnLayout::SampleMajor).is_err());
    assert!(r.mvn(&mut x[..3], &[0.0, 0.0], &[1.0, 0.0, 0.0, 1.0], MvnLayout::SampleMajor).is_err());
    assert_eq!(r.take_u64().unwrap(), before);
}
