//! Scalar types accepted by the uniform, normal and exponential samplers.

use num_traits::Float;

use crate::buffer::{Stream, WordSource};
use crate::error::Result;

/// `f64` or `f32`.
///
/// Doubles take one 64-bit word per uniform; floats take one 32-bit half.
/// Normal and exponential floats are the double variates rounded to `f32`.
pub trait Real: Float + std::fmt::Debug + Send + Sync + 'static {
    /// Bits of resolution of [`u01_from_word`](Self::u01_from_word) in each mode.
    const COARSE_BITS: u32;
    const FULL_BITS: u32;

    /// A uniform in [0, 1) from the next word or half word.
    fn u01<S: WordSource>(src: &mut S, full_mantissa: bool) -> Result<Self>;

    /// `a + w * u01` for each element; same values as repeated [`u01`](Self::u01).
    #[inline]
    fn fill_affine_u01(src: &mut Stream, out: &mut [Self], a: Self, w: Self, full_mantissa: bool) -> Result<()> {
        for x in out {
            *x = a + w * Self::u01(src, full_mantissa)?;
        }
        Ok(())
    }

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
}

/// Maps a word to [0, 1). The default puts the top 52 bits in the mantissa of
/// a number in [1, 2) and subtracts one; the full-mantissa variant scales the
/// top 53 bits by 2^-53.
#[inline(always)]
pub fn u01_from_u64(u: u64, full_mantissa: bool) -> f64 {
    if full_mantissa {
        (u >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    } else {
        f64::from_bits((u >> 12) | 0x3ff0_0000_0000_0000) - 1.0
    }
}

/// 32-bit analogue of [`u01_from_u64`]: 23 or 24 bits.
#[inline(always)]
pub fn u01_from_u32(u: u32, full_mantissa: bool) -> f32 {
    if full_mantissa {
        (u >> 8) as f32 * (1.0 / 16_777_216.0)
    } else {
        f32::from_bits((u >> 9) | 0x3f80_0000) - 1.0
    }
}

impl Real for f64 {
    const COARSE_BITS: u32 = 52;
    const FULL_BITS: u32 = 53;

    #[inline(always)]
    fn u01<S: WordSource>(src: &mut S, full_mantissa: bool) -> Result<f64> {
        Ok(u01_from_u64(src.take_u64()?, full_mantissa))
    }

    #[inline]
    fn fill_affine_u01(src: &mut Stream, out: &mut [f64], a: f64, w: f64, full_mantissa: bool) -> Result<()> {
        src.map_words(out, |u| a + w * u01_from_u64(u, full_mantissa))
    }

    #[inline(always)]
    fn from_f64(x: f64) -> f64 {
        x
    }

    #[inline(always)]
    fn to_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const COARSE_BITS: u32 = 23;
    const FULL_BITS: u32 = 24;

    #[inline(always)]
    fn u01<S: WordSource>(src: &mut S, full_mantissa: bool) -> Result<f32> {
        Ok(u01_from_u32(src.take_u32()?, full_mantissa))
    }

    #[inline(always)]
    fn from_f64(x: f64) -> f32 {
        x as f32
    }

    #[inline(always)]
    fn to_f64(self) -> f64 {
        self as f64
    }
}
