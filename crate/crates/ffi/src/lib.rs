//! Flat C interface for foreign-language bindings.
//!
//! Every call returns an integer status. On anything but [`RNGPACK_OK`] the
//! reason is available from [`rngpack_last_error`], which a successful call
//! clears. Arrays are contiguous buffers owned by the caller; a length of zero
//! accepts a null pointer. A handle must not be used from two threads at once.
//!
//! Checkpoints are exchanged only in the serialized byte format, never as raw
//! state words, so every consumer reads the same versioned, checksummed layout.
//!
//! # Safety
//!
//! All functions share one contract: handles come from this library and are
//! not used after [`rngpack_free`], each non-null pointer is valid for the
//! stated number of elements, and strings are NUL-terminated.

// The shared contract above stands in for per-function sections.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rngpack::{Continuous, EngineId, MvnLayout, Rng};

pub const RNGPACK_OK: c_int = 0;
/// The operation failed; see [`rngpack_last_error`].
pub const RNGPACK_ERROR: c_int = 1;
/// A required pointer argument was null.
pub const RNGPACK_NULL: c_int = 2;
/// The output buffer is too small; the required length was stored.
pub const RNGPACK_SHORT_BUFFER: c_int = 3;

/// An opaque generator handle.
pub struct RngHandle {
    rng: Rng,
    msg: CString,
}

thread_local! {
    // Failures that have no handle to report through (create, deserialize).
    static GLOBAL_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn c_message(s: &str) -> CString {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed")
}

fn set_global(s: &str) {
    GLOBAL_ERROR.with(|g| *g.borrow_mut() = c_message(s));
}

/// A status code and its diagnostic.
struct Fail(c_int, String);

type Outcome = Result<(), Fail>;

fn null(what: &str) -> Fail {
    Fail(RNGPACK_NULL, format!("null pointer for {what}"))
}

impl From<rngpack::Error> for Fail {
    fn from(e: rngpack::Error) -> Fail {
        Fail(RNGPACK_ERROR, e.to_string())
    }
}

fn panic_text(p: Box<dyn std::any::Any + Send>) -> String {
    let detail = p
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_default();
    format!("internal error: {detail}")
}

/// Runs `f` on the handle, records its message and converts it to a status.
unsafe fn with_handle(h: *mut RngHandle, f: impl FnOnce(&mut Rng) -> Outcome) -> c_int {
    let Some(h) = h.as_mut() else {
        set_global("null generator handle");
        return RNGPACK_NULL;
    };
    let r = catch_unwind(AssertUnwindSafe(|| f(&mut h.rng)))
        .unwrap_or_else(|p| Err(Fail(RNGPACK_ERROR, panic_text(p))));
    match r {
        Ok(()) => {
            h.msg = CString::default();
            RNGPACK_OK
        }
        Err(Fail(code, m)) => {
            h.msg = c_message(&m);
            code
        }
    }
}

/// Runs a call that produces a new handle.
unsafe fn make_handle(out: *mut *mut RngHandle, f: impl FnOnce() -> Result<Rng, Fail>) -> c_int {
    if out.is_null() {
        set_global("null pointer for the output handle");
        return RNGPACK_NULL;
    }
    *out = ptr::null_mut();
    let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| Err(Fail(RNGPACK_ERROR, panic_text(p))));
    match r {
        Ok(rng) => {
            set_global("");
            *out = Box::into_raw(Box::new(RngHandle { rng, msg: CString::default() }));
            RNGPACK_OK
        }
        Err(Fail(code, m)) => {
            set_global(&m);
            code
        }
    }
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], Fail> {
    match (n, p.is_null()) {
        (0, _) => Ok(&[]),
        (_, true) => Err(null(what)),
        _ => Ok(std::slice::from_raw_parts(p, n)),
    }
}

unsafe fn slice_mut<'a, T>(p: *mut T, n: usize, what: &str) -> Result<&'a mut [T], Fail> {
    match (n, p.is_null()) {
        (0, _) => Ok(&mut []),
        (_, true) => Err(null(what)),
        _ => Ok(std::slice::from_raw_parts_mut(p, n)),
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(RNGPACK_ERROR, format!("{what} is not valid UTF-8")))
}

// ---- lifecycle ----

/// Creates a generator for `engine` (NULL selects x256++simd), seeded from
/// system entropy. Writes the handle to `*out`, or NULL on failure.
#[no_mangle]
pub unsafe extern "C" fn rngpack_create(engine: *const c_char, out: *mut *mut RngHandle) -> c_int {
    make_handle(out, || {
        let name = if engine.is_null() { "x256++simd" } else { text(engine, "engine name")? };
        Ok(Rng::new(EngineId::parse(name)?))
    })
}

/// Releases a handle; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rngpack_free(h: *mut RngHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// An independent copy of the generator, including buffered output.
#[no_mangle]
pub unsafe extern "C" fn rngpack_duplicate(h: *const RngHandle, out: *mut *mut RngHandle) -> c_int {
    let Some(src) = h.as_ref() else {
        set_global("null generator handle");
        return RNGPACK_NULL;
    };
    make_handle(out, || Ok(src.rng.duplicate()))
}

/// The diagnostic for the last failed call on `h`, or the empty string after a
/// success. With a NULL handle, reports the last failed create or deserialize on
/// this thread. The pointer stays valid until the next call on the same handle.
#[no_mangle]
pub unsafe extern "C" fn rngpack_last_error(h: *const RngHandle) -> *const c_char {
    match h.as_ref() {
        Some(h) => h.msg.as_ptr(),
        None => GLOBAL_ERROR.with(|g| g.borrow().as_ptr()),
    }
}

// ---- seeding, streams and modes ----

#[no_mangle]
pub unsafe extern "C" fn rngpack_seed(h: *mut RngHandle, seed: u64, spawn_key: *const u64, key_len: usize) -> c_int {
    with_handle(h, |r| {
        let key = slice(spawn_key, key_len, "spawn key")?;
        r.seed(seed, key);
        Ok(())
    })
}

/// Reseeds from system entropy.
#[no_mangle]
pub unsafe extern "C" fn rngpack_randomize(h: *mut RngHandle) -> c_int {
    with_handle(h, |r| {
        r.randomize();
        Ok(())
    })
}

/// Advances by 2^k steps.
#[no_mangle]
pub unsafe extern "C" fn rngpack_jump(h: *mut RngHandle, k: u32) -> c_int {
    with_handle(h, |r| Ok(r.jump(k)?))
}

/// Selects a stream on counter and multi-stream engines; the selector layout
/// is the one of [`Rng::set_stream`].
#[no_mangle]
pub unsafe extern "C" fn rngpack_set_stream(h: *mut RngHandle, selector: *const u64, len: usize) -> c_int {
    with_handle(h, |r| Ok(r.set_stream(slice(selector, len, "stream selector")?)?))
}

/// Advances a pcg64 generator by `lo + 2^64 hi` steps.
#[no_mangle]
pub unsafe extern "C" fn rngpack_pcg64_advance(h: *mut RngHandle, lo: u64, hi: u64) -> c_int {
    with_handle(h, |r| Ok(r.pcg64_advance(lo as u128 | (hi as u128) << 64)?))
}

#[no_mangle]
pub unsafe extern "C" fn rngpack_set_bitexact(h: *mut RngHandle, on: c_int) -> c_int {
    with_handle(h, |r| {
        r.set_bitexact(on != 0);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn rngpack_set_full_mantissa(h: *mut RngHandle, on: c_int) -> c_int {
    with_handle(h, |r| {
        r.set_full_mantissa(on != 0);
        Ok(())
    })
}

// ---- state ----

/// Writes the serialized state to `buf`. The byte count is always stored in
/// `*len`; a NULL or short buffer returns [`RNGPACK_SHORT_BUFFER`].
#[no_mangle]
pub unsafe extern "C" fn rngpack_serialize(h: *mut RngHandle, buf: *mut u8, cap: usize, len: *mut usize) -> c_int {
    with_handle(h, |r| {
        let Some(len) = len.as_mut() else {
            return Err(null("length"));
        };
        let bytes = r.serialize();
        *len = bytes.len();
        if buf.is_null() || cap < bytes.len() {
            return Err(Fail(
                RNGPACK_SHORT_BUFFER,
                format!("serialized state needs {} bytes, buffer has {cap}", bytes.len()),
            ));
        }
        ptr::copy_nonoverlapping(bytes.as_ptr(), buf, bytes.len());
        Ok(())
    })
}

/// Rebuilds a generator from serialized bytes into a new handle.
#[no_mangle]
pub unsafe extern "C" fn rngpack_deserialize(data: *const u8, len: usize, out: *mut *mut RngHandle) -> c_int {
    make_handle(out, || Ok(Rng::deserialize(slice(data, len, "serialized state")?)?))
}

// ---- continuous ----

macro_rules! fill {
    ($(#[$doc:meta])* $name:ident, $t:ty, |$r:ident, $out:ident $(, $p:ident)*| $body:expr) => {
        $(#[$doc])*
        #[no_mangle]
        pub unsafe extern "C" fn $name(h: *mut RngHandle, out: *mut $t, n: usize $(, $p: $t)*) -> c_int {
            with_handle(h, |$r| {
                let $out = slice_mut(out, n, "output")?;
                Ok($body?)
            })
        }
    };
}

fill!(rngpack_u01, f64, |r, out| r.u01(out));
fill!(rngpack_u01_f32, f32, |r, out| r.u01(out));
fill!(rngpack_unif, f64, |r, out, a, b| r.unif(out, a, b));
fill!(rngpack_unif_f32, f32, |r, out, a, b| r.unif(out, a, b));
fill!(rngpack_norm, f64, |r, out| r.norm(out));
fill!(rngpack_norm_f32, f32, |r, out| r.norm(out));
fill!(rngpack_exp, f64, |r, out, scale| r.exp(out, scale));
fill!(rngpack_exp_f32, f32, |r, out, scale| r.exp(out, scale));
fill!(rngpack_normal, f64, |r, out, mu, sigma| r.normal(out, mu, sigma));
fill!(rngpack_lognormal, f64, |r, out, mu, sigma| r.lognormal(out, mu, sigma));
fill!(rngpack_gamma, f64, |r, out, shape, scale| r.gamma(out, shape, scale));
fill!(rngpack_beta, f64, |r, out, a, b| r.beta(out, a, b));
fill!(rngpack_chi2, f64, |r, out, nu| r.chi2(out, nu));
fill!(rngpack_t, f64, |r, out, nu| r.student_t(out, nu));
fill!(rngpack_f, f64, |r, out, nu1, nu2| r.fisher_f(out, nu1, nu2));
fill!(rngpack_gumbel, f64, |r, out, mu, beta| r.gumbel(out, mu, beta));
fill!(rngpack_pareto, f64, |r, out, xm, alpha| r.pareto(out, xm, alpha));
fill!(rngpack_weibull, f64, |r, out, k, lambda| r.weibull(out, k, lambda));
fill!(rngpack_skew_normal, f64, |r, out, mu, sigma, alpha| r.skew_normal(out, mu, sigma, alpha));
fill!(rngpack_gpd, f64, |r, out, mu, sigma, xi| r.gpd(out, mu, sigma, xi));

/// Any continuous distribution by catalogue name with positional parameters.
#[no_mangle]
pub unsafe extern "C" fn rngpack_continuous(
    h: *mut RngHandle,
    name: *const c_char,
    params: *const f64,
    n_params: usize,
    out: *mut f64,
    n: usize,
) -> c_int {
    with_handle(h, |r| {
        let d = Continuous::from_name(text(name, "distribution name")?, slice(params, n_params, "parameters")?)?;
        Ok(r.continuous(&d, slice_mut(out, n, "output")?)?)
    })
}

/// `n` samples of dimension `d` with mean `mu` (length d) and row-major
/// covariance `sigma` (d x d). `out` holds n * d values, sample-major unless
/// `coordinate_major` is nonzero.
#[no_mangle]
pub unsafe extern "C" fn rngpack_mvn(
    h: *mut RngHandle,
    out: *mut f64,
    n: usize,
    d: usize,
    mu: *const f64,
    sigma: *const f64,
    coordinate_major: c_int,
) -> c_int {
    with_handle(h, |r| {
        let total = n.checked_mul(d).ok_or_else(|| Fail(RNGPACK_ERROR, "n * d overflows".into()))?;
        let mu = slice(mu, d, "mean")?;
        let sigma = slice(sigma, d * d, "covariance")?;
        let out = slice_mut(out, total, "output")?;
        let layout = if coordinate_major != 0 { MvnLayout::CoordinateMajor } else { MvnLayout::SampleMajor };
        Ok(r.mvn(out, mu, sigma, layout)?)
    })
}

// ---- discrete ----

/// Uniform on {m, ..., k}.
#[no_mangle]
pub unsafe extern "C" fn rngpack_int(h: *mut RngHandle, out: *mut i32, n: usize, m: i32, k: i32) -> c_int {
    with_handle(h, |r| Ok(r.int(slice_mut(out, n, "output")?, m, k)?))
}

/// Uniform on {m, ..., k}.
#[no_mangle]
pub unsafe extern "C" fn rngpack_long_long(h: *mut RngHandle, out: *mut i64, n: usize, m: i64, k: i64) -> c_int {
    with_handle(h, |r| Ok(r.long_long(slice_mut(out, n, "output")?, m, k)?))
}

/// Uniform on {0, ..., b - 1}; b = 0 gives the full range.
#[no_mangle]
pub unsafe extern "C" fn rngpack_uint32(h: *mut RngHandle, out: *mut u32, n: usize, b: u32) -> c_int {
    with_handle(h, |r| Ok(r.uint32(slice_mut(out, n, "output")?, b)?))
}

/// Uniform on {0, ..., b - 1}; b = 0 gives the full range.
#[no_mangle]
pub unsafe extern "C" fn rngpack_uint64(h: *mut RngHandle, out: *mut u64, n: usize, b: u64) -> c_int {
    with_handle(h, |r| Ok(r.uint64(slice_mut(out, n, "output")?, b)?))
}

/// A uniform permutation of {0, ..., n - 1}.
#[no_mangle]
pub unsafe extern "C" fn rngpack_perm(h: *mut RngHandle, out: *mut usize, n: usize) -> c_int {
    with_handle(h, |r| Ok(r.perm(slice_mut(out, n, "output")?)?))
}

/// A sorted uniform k-subset of {0, ..., n - 1}.
#[no_mangle]
pub unsafe extern "C" fn rngpack_sample(h: *mut RngHandle, n: usize, out: *mut usize, k: usize) -> c_int {
    with_handle(h, |r| Ok(r.sample(n, slice_mut(out, k, "output")?)?))
}

/// Raw little-endian bytes of the word stream.
#[no_mangle]
pub unsafe extern "C" fn rngpack_raw(h: *mut RngHandle, out: *mut u8, n: usize) -> c_int {
    with_handle(h, |r| Ok(r.raw(slice_mut(out, n, "output")?)?))
}
