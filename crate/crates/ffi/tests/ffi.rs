use std::ffi::{CStr, CString};
use std::ptr;

use rngpack::{Continuous, EngineId, MvnLayout, Rng};
use rngpack_ffi::*;

struct Handle(*mut RngHandle);

impl Handle {
    fn new(engine: &str, seed: u64) -> Handle {
        let name = CString::new(engine).unwrap();
        let mut h = ptr::null_mut();
        unsafe {
            assert_eq!(rngpack_create(name.as_ptr(), &mut h), RNGPACK_OK);
            assert_eq!(rngpack_seed(h, seed, ptr::null(), 0), RNGPACK_OK);
        }
        Handle(h)
    }

    fn error(&self) -> String {
        unsafe { CStr::from_ptr(rngpack_last_error(self.0)).to_string_lossy().into_owned() }
    }

    fn serialize(&self) -> Vec<u8> {
        let mut len = 0usize;
        unsafe {
            assert_eq!(rngpack_serialize(self.0, ptr::null_mut(), 0, &mut len), RNGPACK_SHORT_BUFFER);
            let mut buf = vec![0u8; len];
            assert_eq!(rngpack_serialize(self.0, buf.as_mut_ptr(), buf.len(), &mut len), RNGPACK_OK);
            assert_eq!(len, buf.len());
            buf
        }
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { rngpack_free(self.0) }
    }
}

fn native(engine: &str, seed: u64) -> Rng {
    Rng::seeded(EngineId::parse(engine).unwrap(), seed, &[])
}

fn global_error() -> String {
    unsafe { CStr::from_ptr(rngpack_last_error(ptr::null())).to_string_lossy().into_owned() }
}

#[test]
fn first_hundred_uniforms_match_native() {
    let h = Handle::new("x256++simd", 42);
    let mut got = [0.0f64; 100];
    assert_eq!(unsafe { rngpack_u01(h.0, got.as_mut_ptr(), got.len()) }, RNGPACK_OK);
    let mut want = [0.0f64; 100];
    native("x256++simd", 42).u01(&mut want).unwrap();
    assert_eq!(got.map(f64::to_bits), want.map(f64::to_bits));
}

type Fill = unsafe extern "C" fn(*mut RngHandle, *mut f64, usize, f64, f64) -> i32;

#[test]
fn two_parameter_samplers_match_native() {
    let cases: [(Fill, Continuous); 9] = [
        (rngpack_unif, Continuous::Unif { a: -1.0, b: 3.0 }),
        (rngpack_normal, Continuous::Normal { mu: 1.0, sigma: 2.0 }),
        (rngpack_lognormal, Continuous::Lognormal { mu: 0.5, sigma: 0.7 }),
        (rngpack_gamma, Continuous::Gamma { shape: 0.4, scale: 2.0 }),
        (rngpack_beta, Continuous::Beta { a: 2.0, b: 0.5 }),
        (rngpack_f, Continuous::F { nu1: 3.0, nu2: 7.0 }),
        (rngpack_gumbel, Continuous::Gumbel { mu: 1.0, beta: 2.0 }),
        (rngpack_pareto, Continuous::Pareto { xm: 1.0, alpha: 3.0 }),
        (rngpack_weibull, Continuous::Weibull { k: 1.5, lambda: 2.0 }),
    ];
    for (engine, (f, d)) in ["pcg64", "sfc64simd", "chacha20"].iter().cycle().zip(cases) {
        let h = Handle::new(engine, 7);
        let (a, b) = match d {
            Continuous::Unif { a, b } => (a, b),
            Continuous::Normal { mu, sigma } | Continuous::Lognormal { mu, sigma } => (mu, sigma),
            Continuous::Gamma { shape, scale } => (shape, scale),
            Continuous::Beta { a, b } => (a, b),
            Continuous::F { nu1, nu2 } => (nu1, nu2),
            Continuous::Gumbel { mu, beta } => (mu, beta),
            Continuous::Pareto { xm, alpha } => (xm, alpha),
            Continuous::Weibull { k, lambda } => (k, lambda),
            _ => unreachable!(),
        };
        let mut got = vec![0.0; 1000];
        assert_eq!(unsafe { f(h.0, got.as_mut_ptr(), got.len(), a, b) }, RNGPACK_OK, "{d:?}");
        let mut want = vec![0.0; 1000];
        native(engine, 7).continuous(&d, &mut want).unwrap();
        assert_eq!(got, want, "{d:?}");
    }
}

#[test]
fn remaining_samplers_match_native() {
    let h = Handle::new("philox", 3);
    let mut r = native("philox", 3);
    let (mut got, mut want) = (vec![0.0; 500], vec![0.0; 500]);
    unsafe {
        assert_eq!(rngpack_norm(h.0, got.as_mut_ptr(), 500), RNGPACK_OK);
        r.norm(&mut want).unwrap();
        assert_eq!(got, want);
        assert_eq!(rngpack_exp(h.0, got.as_mut_ptr(), 500, 2.5), RNGPACK_OK);
        r.exp(&mut want, 2.5).unwrap();
        assert_eq!(got, want);
        assert_eq!(rngpack_chi2(h.0, got.as_mut_ptr(), 500, 3.0), RNGPACK_OK);
        r.chi2(&mut want, 3.0).unwrap();
        assert_eq!(got, want);
        assert_eq!(rngpack_t(h.0, got.as_mut_ptr(), 500, 4.0), RNGPACK_OK);
        r.student_t(&mut want, 4.0).unwrap();
        assert_eq!(got, want);
        assert_eq!(rngpack_skew_normal(h.0, got.as_mut_ptr(), 500, 1.0, 2.0, -3.0), RNGPACK_OK);
        r.skew_normal(&mut want, 1.0, 2.0, -3.0).unwrap();
        assert_eq!(got, want);
        assert_eq!(rngpack_gpd(h.0, got.as_mut_ptr(), 500, 0.0, 1.0, -0.2), RNGPACK_OK);
        r.gpd(&mut want, 0.0, 1.0, -0.2).unwrap();
        assert_eq!(got, want);

        let (mut gf, mut wf) = (vec![0.0f32; 300], vec![0.0f32; 300]);
        assert_eq!(rngpack_u01_f32(h.0, gf.as_mut_ptr(), 300), RNGPACK_OK);
        r.u01(&mut wf).unwrap();
        assert_eq!(gf, wf);
        assert_eq!(rngpack_unif_f32(h.0, gf.as_mut_ptr(), 300, 2.0, 4.0), RNGPACK_OK);
        r.unif(&mut wf, 2.0f32, 4.0).unwrap();
        assert_eq!(gf, wf);
        assert_eq!(rngpack_norm_f32(h.0, gf.as_mut_ptr(), 300), RNGPACK_OK);
        r.norm(&mut wf).unwrap();
        assert_eq!(gf, wf);
        assert_eq!(rngpack_exp_f32(h.0, gf.as_mut_ptr(), 300, 0.5), RNGPACK_OK);
        r.exp(&mut wf, 0.5f32).unwrap();
        assert_eq!(gf, wf);
    }
}

#[test]
fn catalogue_call_matches_named_call() {
    let (a, b) = (Handle::new("squares", 9), Handle::new("squares", 9));
    let name = CString::new("gamma").unwrap();
    let p = [2.5, 0.5];
    let (mut x, mut y) = ([0.0; 256], [0.0; 256]);
    unsafe {
        assert_eq!(rngpack_continuous(a.0, name.as_ptr(), p.as_ptr(), 2, x.as_mut_ptr(), 256), RNGPACK_OK);
        assert_eq!(rngpack_gamma(b.0, y.as_mut_ptr(), 256, 2.5, 0.5), RNGPACK_OK);
    }
    assert_eq!(x, y);
}

#[test]
fn mvn_matches_native_in_both_layouts() {
    let mu = [1.0, -1.0, 0.0];
    let sigma = [2.0, 0.3, 0.1, 0.3, 1.0, 0.2, 0.1, 0.2, 0.5];
    for (flag, layout) in [(0, MvnLayout::SampleMajor), (1, MvnLayout::CoordinateMajor)] {
        let h = Handle::new("x256**", 5);
        let mut got = vec![0.0; 300];
        let status = unsafe { rngpack_mvn(h.0, got.as_mut_ptr(), 100, 3, mu.as_ptr(), sigma.as_ptr(), flag) };
        assert_eq!(status, RNGPACK_OK);
        let mut want = vec![0.0; 300];
        native("x256**", 5).mvn(&mut want, &mu, &sigma, layout).unwrap();
        assert_eq!(got, want);
    }
}

#[test]
fn discrete_samplers_match_native() {
    let h = Handle::new("cwg128", 11);
    let mut r = native("cwg128", 11);
    unsafe {
        let (mut g, mut w) = ([0i32; 200], [0i32; 200]);
        assert_eq!(rngpack_int(h.0, g.as_mut_ptr(), 200, -5, 5), RNGPACK_OK);
        r.int(&mut w, -5, 5).unwrap();
        assert_eq!(g, w);
        let (mut g, mut w) = ([0i64; 200], [0i64; 200]);
        assert_eq!(rngpack_long_long(h.0, g.as_mut_ptr(), 200, i64::MIN, i64::MAX), RNGPACK_OK);
        r.long_long(&mut w, i64::MIN, i64::MAX).unwrap();
        assert_eq!(g, w);
        let (mut g, mut w) = ([0u32; 200], [0u32; 200]);
        assert_eq!(rngpack_uint32(h.0, g.as_mut_ptr(), 200, 1000), RNGPACK_OK);
        r.uint32(&mut w, 1000).unwrap();
        assert_eq!(g, w);
        let (mut g, mut w) = ([0u64; 200], [0u64; 200]);
        assert_eq!(rngpack_uint64(h.0, g.as_mut_ptr(), 200, 0), RNGPACK_OK);
        r.uint64(&mut w, 0).unwrap();
        assert_eq!(g, w);
        let (mut g, mut w) = ([0usize; 30], [0usize; 30]);
        assert_eq!(rngpack_perm(h.0, g.as_mut_ptr(), 30), RNGPACK_OK);
        r.perm(&mut w).unwrap();
        assert_eq!(g, w);
        assert_eq!(rngpack_sample(h.0, 1000, g.as_mut_ptr(), 30), RNGPACK_OK);
        r.sample(1000, &mut w).unwrap();
        assert_eq!(g, w);
        let (mut g, mut w) = ([0u8; 77], [0u8; 77]);
        assert_eq!(rngpack_raw(h.0, g.as_mut_ptr(), 77), RNGPACK_OK);
        r.raw(&mut w).unwrap();
        assert_eq!(g, w);
    }
}

#[test]
fn seeding_jumps_and_streams_follow_native() {
    let key = [3u64, 1, 4];
    let h = Handle::new("x256++", 0);
    let mut r = Rng::seeded(EngineId::parse("x256++").unwrap(), 77, &key);
    r.jump(128).unwrap();
    let (mut g, mut w) = ([0u64; 64], [0u64; 64]);
    unsafe {
        assert_eq!(rngpack_seed(h.0, 77, key.as_ptr(), key.len()), RNGPACK_OK);
        assert_eq!(rngpack_jump(h.0, 128), RNGPACK_OK);
        assert_eq!(rngpack_uint64(h.0, g.as_mut_ptr(), 64, 0), RNGPACK_OK);
    }
    r.uint64(&mut w, 0).unwrap();
    assert_eq!(g, w);

    let h = Handle::new("pcg64", 1);
    let mut r = native("pcg64", 1);
    r.set_stream(&[99, 5]).unwrap();
    r.pcg64_advance(1 << 70 | 12).unwrap();
    unsafe {
        assert_eq!(rngpack_set_stream(h.0, [99u64, 5].as_ptr(), 2), RNGPACK_OK);
        assert_eq!(rngpack_pcg64_advance(h.0, 12, 1 << 6), RNGPACK_OK);
        assert_eq!(rngpack_uint64(h.0, g.as_mut_ptr(), 64, 0), RNGPACK_OK);
    }
    r.uint64(&mut w, 0).unwrap();
    assert_eq!(g, w);
}

#[test]
fn modes_are_forwarded() {
    let h = Handle::new("sfc64", 8);
    let mut r = native("sfc64", 8);
    r.set_bitexact(true);
    r.set_full_mantissa(true);
    let (mut g, mut w) = ([0.0; 100], [0.0; 100]);
    unsafe {
        assert_eq!(rngpack_set_bitexact(h.0, 1), RNGPACK_OK);
        assert_eq!(rngpack_set_full_mantissa(h.0, 1), RNGPACK_OK);
        assert_eq!(rngpack_lognormal(h.0, g.as_mut_ptr(), 100, 0.0, 1.0), RNGPACK_OK);
        assert_eq!(rngpack_u01(h.0, g.as_mut_ptr(), 50), RNGPACK_OK);
    }
    r.lognormal(&mut w, 0.0, 1.0).unwrap();
    r.u01(&mut w[..50]).unwrap();
    assert_eq!(g, w);
}

#[test]
fn checkpoints_cross_between_binding_and_native() {
    let h = Handle::new("ranlux++", 21);
    let mut skip = [0.0; 37];
    unsafe { rngpack_u01(h.0, skip.as_mut_ptr(), 37) };
    let bytes = h.serialize();

    // Binding checkpoint resumed natively.
    let mut r = Rng::deserialize(&bytes).unwrap();
    let (mut g, mut w) = ([0.0; 500], [0.0; 500]);
    unsafe { rngpack_norm(h.0, g.as_mut_ptr(), 500) };
    r.norm(&mut w).unwrap();
    assert_eq!(g, w);

    // Native checkpoint resumed in the binding.
    let bytes = r.serialize();
    let mut h2 = ptr::null_mut();
    unsafe {
        assert_eq!(rngpack_deserialize(bytes.as_ptr(), bytes.len(), &mut h2), RNGPACK_OK);
        let h2 = Handle(h2);
        assert_eq!(rngpack_norm(h2.0, g.as_mut_ptr(), 500), RNGPACK_OK);
    }
    r.norm(&mut w).unwrap();
    assert_eq!(g, w);
}

#[test]
fn duplicate_continues_identically() {
    let h = Handle::new("chacha20", 4);
    let mut skip = [0u8; 13];
    let mut d = ptr::null_mut();
    let (mut a, mut b) = ([0u64; 40], [0u64; 40]);
    unsafe {
        rngpack_raw(h.0, skip.as_mut_ptr(), 13);
        assert_eq!(rngpack_duplicate(h.0, &mut d), RNGPACK_OK);
        let d = Handle(d);
        rngpack_uint64(h.0, a.as_mut_ptr(), 40, 0);
        rngpack_uint64(d.0, b.as_mut_ptr(), 40, 0);
    }
    assert_eq!(a, b);
}

#[test]
fn failures_report_status_and_message() {
    let bogus = CString::new("no-such-engine").unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { rngpack_create(bogus.as_ptr(), &mut h) }, RNGPACK_ERROR);
    assert!(h.is_null());
    assert!(global_error().contains("unknown engine"), "{}", global_error());

    let h = Handle::new("squares", 1);
    let mut x = [0.0; 4];
    unsafe {
        assert_eq!(rngpack_normal(h.0, x.as_mut_ptr(), 4, 0.0, -1.0), RNGPACK_ERROR);
        assert!(h.error().contains("invalid parameter"), "{}", h.error());
        assert_eq!(rngpack_u01(h.0, x.as_mut_ptr(), 4), RNGPACK_OK);
        assert_eq!(h.error(), "");
        assert_eq!(rngpack_jump(h.0, 64), RNGPACK_ERROR);
        assert!(h.error().contains("jump"), "{}", h.error());
        assert_eq!(rngpack_u01(h.0, ptr::null_mut(), 4), RNGPACK_NULL);
        assert!(h.error().contains("null"));
        assert_eq!(rngpack_u01(h.0, ptr::null_mut(), 0), RNGPACK_OK);
        let sigma = [1.0, 2.0, 2.0, 1.0];
        let status = rngpack_mvn(h.0, x.as_mut_ptr(), 2, 2, [0.0, 0.0].as_ptr(), sigma.as_ptr(), 0);
        assert_eq!(status, RNGPACK_ERROR);
        assert!(h.error().contains("positive semidefinite"), "{}", h.error());
        let unknown = CString::new("cauchy").unwrap();
        assert_eq!(rngpack_continuous(h.0, unknown.as_ptr(), ptr::null(), 0, x.as_mut_ptr(), 4), RNGPACK_ERROR);
        assert_eq!(rngpack_u01(ptr::null_mut(), x.as_mut_ptr(), 4), RNGPACK_NULL);
    }
}

#[test]
fn corrupt_checkpoint_is_rejected() {
    let h = Handle::new("x128+", 2);
    let mut bytes = h.serialize();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 1;
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { rngpack_deserialize(bytes.as_ptr(), bytes.len(), &mut out) }, RNGPACK_ERROR);
    assert!(out.is_null());
    assert!(global_error().contains("checksum"), "{}", global_error());
    let mut len = 0;
    let mut small = [0u8; 4];
    assert_eq!(unsafe { rngpack_serialize(h.0, small.as_mut_ptr(), 4, &mut len) }, RNGPACK_SHORT_BUFFER);
    assert_eq!(len, bytes.len());
}

#[test]
fn entropy_seeded_handles_differ() {
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    let (mut x, mut y) = ([0u64; 2], [0u64; 2]);
    unsafe {
        assert_eq!(rngpack_create(ptr::null(), &mut a), RNGPACK_OK);
        assert_eq!(rngpack_create(ptr::null(), &mut b), RNGPACK_OK);
        let (a, b) = (Handle(a), Handle(b));
        assert_eq!(rngpack_randomize(b.0), RNGPACK_OK);
        rngpack_uint64(a.0, x.as_mut_ptr(), 2, 0);
        rngpack_uint64(b.0, y.as_mut_ptr(), 2, 0);
    }
    assert_ne!(x, y);
}
