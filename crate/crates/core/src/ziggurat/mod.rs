//! Ziggurat sampling of N(0,1) and Exp(1) with 256 equal-area strips.
//!
//! One 64-bit word per attempt. The low byte picks the strip. For normals bit 8
//! is the sign and bits 9..=60 the magnitude; for exponentials bits 8..=60 are
//! the magnitude. Strip i >= 1 covers x in [0, x_i) and accepts at once when
//! the magnitude is below `k[i]`. Otherwise a height y is drawn in
//! [f_i, f_{i-1}) and compared against the secant through the strip corners,
//! widened by the largest distance between secant and density in that strip.
//! Only points inside that band need the density itself. Strip 0 is the base
//! strip plus the tail.
//!
//! `k`, `w` and `f` are NumPy's constants, used verbatim. The integer band
//! widths in `gap_tables.rs` are generated by [`precompute`].

mod gap_tables;
pub mod precompute;
mod reference_tables;

use crate::buffer::WordSource;
use crate::detmath::{det_exp, det_log1p};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZigKind {
    Normal,
    Exponential,
}

impl ZigKind {
    /// Unnormalized density: exp(-x^2/2) or exp(-x).
    pub fn pdf(self, x: f64) -> f64 {
        match self {
            ZigKind::Normal => det_exp(-0.5 * x * x),
            ZigKind::Exponential => det_exp(-x),
        }
    }

    pub fn tables(self) -> &'static ZigTables {
        match self {
            ZigKind::Normal => &NORMAL,
            ZigKind::Exponential => &EXPONENTIAL,
        }
    }
}

/// Constants for one distribution.
#[derive(Debug)]
pub struct ZigTables {
    pub kind: ZigKind,
    /// Fast-accept thresholds on the magnitude.
    pub k: [u64; 256],
    /// Magnitude-to-x scale per strip: x_i / 2^magnitude_bits.
    pub w: [f64; 256],
    /// Density at the outer strip edge, f_i = f(x_i); `f[0]` is f(0).
    pub f: [f64; 256],
    /// Integer band widths below and above the secant, in units of
    /// 2^-53 * (f_{i-1} - f_i) / (2^magnitude_bits - k_i).
    pub gap_lo: [u128; 256],
    pub gap_hi: [u128; 256],
    /// Start of the tail.
    pub r: f64,
    pub magnitude_bits: u32,
}

pub static NORMAL: ZigTables = ZigTables {
    kind: ZigKind::Normal,
    k: reference_tables::NORM_K,
    w: reference_tables::NORM_W,
    f: reference_tables::NORM_F,
    gap_lo: gap_tables::NORM_GAP_LO,
    gap_hi: gap_tables::NORM_GAP_HI,
    r: 3.6541528853610088,
    magnitude_bits: 52,
};

pub static EXPONENTIAL: ZigTables = ZigTables {
    kind: ZigKind::Exponential,
    k: reference_tables::EXP_K,
    w: reference_tables::EXP_W,
    f: reference_tables::EXP_F,
    gap_lo: gap_tables::EXP_GAP_LO,
    gap_hi: gap_tables::EXP_GAP_HI,
    r: 7.69711747013105,
    magnitude_bits: 53,
};

/// Observes the sampler's internal events.
pub trait ZigCounter {
    #[inline(always)]
    fn attempt(&mut self) {}
    #[inline(always)]
    fn rejection(&mut self) {}
    #[inline(always)]
    fn pdf_eval(&mut self) {}
}

impl ZigCounter for () {}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ZigStats {
    pub attempts: u64,
    pub rejections: u64,
    pub pdf_evals: u64,
}

impl ZigCounter for ZigStats {
    fn attempt(&mut self) {
        self.attempts += 1;
    }
    fn rejection(&mut self) {
        self.rejections += 1;
    }
    fn pdf_eval(&mut self) {
        self.pdf_evals += 1;
    }
}

/// A 53-bit uniform in [0, 1) from one word.
#[inline(always)]
pub fn next_double<S: WordSource>(src: &mut S) -> Result<f64> {
    Ok((src.take_u64()? >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Band {
    Accept,
    Reject,
    Undecided,
}

/// Classifies the point (m, uy) of strip `idx` against the secant band;
/// `uy` is the 53-bit height draw.
#[inline(always)]
pub fn band(t: &ZigTables, idx: usize, m: u64, uy: u64) -> Band {
    let scale = 1u64 << t.magnitude_bits;
    let width = (scale - t.k[idx]) as u128;
    let lhs = uy as u128 * width;
    let rhs = ((scale - m) as u128) << 53;
    if lhs + t.gap_lo[idx] < rhs {
        Band::Accept
    } else if lhs >= rhs + t.gap_hi[idx] {
        Band::Reject
    } else {
        Band::Undecided
    }
}

#[inline(always)]
fn strip_test<S: WordSource, C: ZigCounter>(
    t: &ZigTables,
    src: &mut S,
    counter: &mut C,
    idx: usize,
    m: u64,
    x: f64,
) -> Result<bool> {
    let uy = src.take_u64()? >> 11;
    match band(t, idx, m, uy) {
        Band::Accept => Ok(true),
        Band::Reject => Ok(false),
        Band::Undecided => {
            counter.pdf_eval();
            let u = uy as f64 * (1.0 / 9_007_199_254_740_992.0);
            let y = (t.f[idx - 1] - t.f[idx]) * u + t.f[idx];
            Ok(y < t.kind.pdf(x))
        }
    }
}

const MASK52: u64 = (1 << 52) - 1;
const MASK53: u64 = (1 << 53) - 1;

/// One standard normal variate.
#[inline]
pub fn standard_normal<S: WordSource, C: ZigCounter>(src: &mut S, counter: &mut C) -> Result<f64> {
    let t = &NORMAL;
    loop {
        counter.attempt();
        let u = src.take_u64()?;
        let idx = (u & 0xff) as usize;
        // Bit 8 goes straight into the sign bit; a branch on it would mispredict half the time.
        let sign_bit = (u >> 8 & 1) << 63;
        let m = (u >> 9) & MASK52;
        let x = m as f64 * t.w[idx];
        let sign = |v: f64| f64::from_bits(v.to_bits() | sign_bit);
        if m < t.k[idx] {
            return Ok(sign(x));
        }
        if idx == 0 {
            let inv_r = 1.0 / t.r;
            loop {
                let xx = -inv_r * det_log1p(-next_double(src)?);
                let yy = -det_log1p(-next_double(src)?);
                if yy + yy > xx * xx {
                    return Ok(sign(t.r + xx));
                }
                counter.rejection();
            }
        }
        if strip_test(t, src, counter, idx, m, x)? {
            return Ok(sign(x));
        }
        counter.rejection();
    }
}

/// One Exp(1) variate.
#[inline]
pub fn standard_exponential<S: WordSource, C: ZigCounter>(src: &mut S, counter: &mut C) -> Result<f64> {
    let t = &EXPONENTIAL;
    loop {
        counter.attempt();
        let u = src.take_u64()?;
        let idx = (u & 0xff) as usize;
        let m = (u >> 8) & MASK53;
        let x = m as f64 * t.w[idx];
        if m < t.k[idx] {
            return Ok(x);
        }
        if idx == 0 {
            return Ok(t.r - det_log1p(-next_double(src)?));
        }
        if strip_test(t, src, counter, idx, m, x)? {
            return Ok(x);
        }
        counter.rejection();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buffer::Replay;

    #[test]
    fn fast_path_is_a_multiply() {
        // Strip 2, sign bit set, magnitude well below k[2].
        let m = 1000u64;
        assert!(m < NORMAL.k[2]);
        let word = [2 | (1 << 8) | (m << 9)];
        let mut r = Replay::new(&word);
        let x = standard_normal(&mut r, &mut ()).unwrap();
        assert_eq!(x, -(m as f64 * NORMAL.w[2]));
        assert_eq!(r.consumed(), 1);
    }

    #[test]
    fn exponential_fast_path() {
        let m = 12345u64;
        let word = [7 | (m << 8)];
        let mut r = Replay::new(&word);
        assert_eq!(standard_exponential(&mut r, &mut ()).unwrap(), m as f64 * EXPONENTIAL.w[7]);
    }

    #[test]
    fn high_bits_are_ignored() {
        let word = 9 | (77 << 9);
        let (wa, wb) = ([word], [word | (0b111 << 61)]);
        let mut a = Replay::new(&wa);
        let mut b = Replay::new(&wb);
        assert_eq!(standard_normal(&mut a, &mut ()).unwrap(), standard_normal(&mut b, &mut ()).unwrap());
    }
}
