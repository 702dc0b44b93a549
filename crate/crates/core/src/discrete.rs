//! Integers, permutations and subsets.
//!
//! Bounded integers use Lemire's multiply-shift with threshold rejection,
//! written once for any unsigned word width. 8-, 16- and 32-bit results draw
//! 32-bit halves; 64-bit results, permutations and subsets draw whole words.

use crate::buffer::WordSource;
use crate::error::{invalid_param, Result};

/// An unsigned word with a double-width product.
pub trait LemireWord: Copy + Ord + std::fmt::Debug {
    const ZERO: Self;
    /// Returns (high, low) halves of `self * b`.
    fn wide_mul(self, b: Self) -> (Self, Self);
    /// 2^bits mod b, for b > 0.
    fn neg_mod(b: Self) -> Self;
}

macro_rules! lemire_word {
    ($t:ty, $wide:ty) => {
        impl LemireWord for $t {
            const ZERO: $t = 0;
            #[inline(always)]
            fn wide_mul(self, b: $t) -> ($t, $t) {
                let m = self as $wide * b as $wide;
                ((m >> <$t>::BITS) as $t, m as $t)
            }
            #[inline(always)]
            fn neg_mod(b: $t) -> $t {
                b.wrapping_neg() % b
            }
        }
    };
}

lemire_word!(u8, u16);
lemire_word!(u16, u32);
lemire_word!(u32, u64);
lemire_word!(u64, u128);

/// Uniform on {0, ..., b - 1} for b > 0, pulling words from `next`.
///
/// The low half of x * b is compared with 2^bits mod b; only words whose low
/// half falls below it are redrawn, and the remainder is computed only when
/// the low half is below b.
#[inline(always)]
pub fn lemire<W: LemireWord>(mut next: impl FnMut() -> Result<W>, b: W) -> Result<W> {
    let (mut hi, mut lo) = next()?.wide_mul(b);
    if lo < b {
        let t = W::neg_mod(b);
        while lo < t {
            (hi, lo) = next()?.wide_mul(b);
        }
    }
    Ok(hi)
}

#[inline(always)]
pub(crate) fn bounded_u64<S: WordSource>(src: &mut S, b: u64) -> Result<u64> {
    lemire(|| src.take_u64(), b)
}

#[inline(always)]
pub(crate) fn bounded_u32<S: WordSource>(src: &mut S, b: u32) -> Result<u32> {
    lemire(|| src.take_u32(), b)
}

/// Uniform on {m, ..., n}; a span of 2^64 passes the word through.
pub(crate) fn range_i64<S: WordSource>(src: &mut S, m: i64, n: i64) -> Result<i64> {
    let span = (n as i128 - m as i128 + 1) as u128;
    let off = if span == 1 << 64 { src.take_u64()? } else { bounded_u64(src, span as u64)? };
    Ok((m as i128 + off as i128) as i64)
}

/// Uniform on {m, ..., n}; a span of 2^32 passes the half word through.
pub(crate) fn range_i32<S: WordSource>(src: &mut S, m: i32, n: i32) -> Result<i32> {
    let span = (n as i64 - m as i64 + 1) as u64;
    let off = if span == 1 << 32 { src.take_u32()? } else { bounded_u32(src, span as u32)? };
    Ok((m as i64 + off as i64) as i32)
}

pub(crate) fn check_range<T: PartialOrd + std::fmt::Display>(m: T, n: T) -> Result<()> {
    if m > n {
        return Err(invalid_param(format!("empty integer range: m = {m} > n = {n}")));
    }
    Ok(())
}

/// Fisher-Yates from the identity: for i = n-1 down to 1, swap position i with
/// a uniform j in {0, ..., i}.
pub(crate) fn perm<S: WordSource>(src: &mut S, out: &mut [usize]) -> Result<()> {
    for (i, v) in out.iter_mut().enumerate() {
        *v = i;
    }
    for i in (1..out.len()).rev() {
        let j = bounded_u64(src, i as u64 + 1)? as usize;
        out.swap(i, j);
    }
    Ok(())
}

/// Open-addressing set of small integers with power-of-two capacity.
struct IndexSet {
    slots: Vec<usize>,
    mask: usize,
}

impl IndexSet {
    const EMPTY: usize = usize::MAX;

    fn with_capacity(k: usize) -> Self {
        let cap = (2 * k).next_power_of_two().max(2);
        IndexSet { slots: vec![Self::EMPTY; cap], mask: cap - 1 }
    }

    /// Inserts `v`; false if it was present.
    fn insert(&mut self, v: usize) -> bool {
        let mut i = (v as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) as usize & self.mask;
        loop {
            match self.slots[i] {
                Self::EMPTY => {
                    self.slots[i] = v;
                    return true;
                }
                s if s == v => return false,
                _ => i = (i + 1) & self.mask,
            }
        }
    }
}

/// Floyd: for j = n-k to n-1 draw t in {0, ..., j}; add t, or j when t is taken.
pub(crate) fn sample_floyd<S: WordSource>(src: &mut S, n: usize, out: &mut [usize]) -> Result<()> {
    let k = out.len();
    let mut set = IndexSet::with_capacity(k);
    for (slot, j) in out.iter_mut().zip(n - k..n) {
        let t = bounded_u64(src, j as u64 + 1)? as usize;
        *slot = if set.insert(t) { t } else { set.insert(j); j };
    }
    out.sort_unstable();
    Ok(())
}

/// Reservoir sampling in the output buffer: item i replaces slot j when a
/// uniform j in {0, ..., i} lands below k.
pub(crate) fn sample_reservoir<S: WordSource>(src: &mut S, n: usize, out: &mut [usize]) -> Result<()> {
    let k = out.len();
    for (i, v) in out.iter_mut().enumerate() {
        *v = i;
    }
    for i in k..n {
        let j = bounded_u64(src, i as u64 + 1)? as usize;
        if j < k {
            out[j] = i;
        }
    }
    out.sort_unstable();
    Ok(())
}

/// A sorted uniform k-subset of {0, ..., n-1}, k = `out.len()`. Floyd's method
/// for 2k <= n, reservoir sampling otherwise.
pub(crate) fn sample<S: WordSource>(src: &mut S, n: usize, out: &mut [usize]) -> Result<()> {
    if out.len() > n {
        return Err(invalid_param(format!("cannot sample {} items from {n}", out.len())));
    }
    if 2 * out.len() <= n {
        sample_floyd(src, n, out)
    } else {
        sample_reservoir(src, n, out)
    }
}

/// Little-endian bytes of consecutive words; the unused tail of the last word is dropped.
pub(crate) fn raw<S: WordSource>(src: &mut S, out: &mut [u8]) -> Result<()> {
    let mut chunks = out.chunks_exact_mut(8);
    for c in &mut chunks {
        c.copy_from_slice(&src.take_u64()?.to_le_bytes());
    }
    let rest = chunks.into_remainder();
    if !rest.is_empty() {
        let w = src.take_u64()?.to_le_bytes();
        let n = rest.len();
        rest.copy_from_slice(&w[..n]);
    }
    Ok(())
}
