//! Eight interleaved lanes of xoshiro256 or sfc64.
//!
//! Lane k of the xoshiro variants is the base state jumped by k * 2^253 steps;
//! lane k of the sfc64 variant has its counter offset by k * 2^61. Output word
//! i comes from lane i mod 8. Lanes are stored as structure-of-arrays so the
//! lane loops map onto vector registers. On x86-64 with AVX2 the fills use
//! explicit 4 x 64-bit vector code, two registers per state word; elsewhere a
//! portable loop computes the same words.

use super::{Sfc64, Xoshiro256};
use crate::error::{Error, Result};
use crate::jump;

pub const LANES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xoshiro256x8 {
    /// `s[j][k]` is word j of lane k.
    pub s: [[u64; LANES]; 4],
}

#[inline(always)]
fn x256_advance(s: &mut [[u64; LANES]; 4]) {
    for k in 0..LANES {
        let t = s[1][k] << 17;
        s[2][k] ^= s[0][k];
        s[3][k] ^= s[1][k];
        s[1][k] ^= s[2][k];
        s[0][k] ^= s[3][k];
        s[2][k] ^= t;
        s[3][k] = s[3][k].rotate_left(45);
    }
}

#[inline(always)]
fn x256_fill<const STAR: bool>(s: &mut [[u64; LANES]; 4], out: &mut [u64]) {
    let mut st = *s;
    for chunk in out.chunks_exact_mut(LANES) {
        for k in 0..LANES {
            chunk[k] = if STAR {
                // x * 5 and x * 9 as shift-adds keep the loop vectorizable without 64-bit multiplies.
                let v = st[1][k].wrapping_add(st[1][k] << 2).rotate_left(7);
                v.wrapping_add(v << 3)
            } else {
                st[0][k].wrapping_add(st[3][k]).rotate_left(23).wrapping_add(st[0][k])
            };
        }
        x256_advance(&mut st);
    }
    *s = st;
}

#[inline(always)]
fn x256_dispatch<const STAR: bool>(s: &mut [[u64; LANES]; 4], out: &mut [u64]) {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("avx2") {
            // SAFETY: the CPU supports AVX2, checked just above.
            unsafe { avx2::x256_fill::<STAR>(s, out) };
            return;
        }
    }
    x256_fill::<STAR>(s, out)
}

#[cfg(target_arch = "x86_64")]
mod avx2 {
    use std::arch::x86_64::*;

    use super::{Sfc64x8, LANES};

    macro_rules! rotl {
        ($x:expr, $r:literal) => {
            _mm256_or_si256(_mm256_slli_epi64($x, $r), _mm256_srli_epi64($x, 64 - $r))
        };
    }

    #[inline(always)]
    unsafe fn load(p: &[u64; LANES]) -> [__m256i; 2] {
        [_mm256_loadu_si256(p.as_ptr() as *const __m256i), _mm256_loadu_si256(p.as_ptr().add(4) as *const __m256i)]
    }

    #[inline(always)]
    unsafe fn store(p: &mut [u64], v: [__m256i; 2]) {
        _mm256_storeu_si256(p.as_mut_ptr() as *mut __m256i, v[0]);
        _mm256_storeu_si256(p.as_mut_ptr().add(4) as *mut __m256i, v[1]);
    }

    #[target_feature(enable = "avx2")]
    pub(super) unsafe fn x256_fill<const STAR: bool>(s: &mut [[u64; LANES]; 4], out: &mut [u64]) {
        let mut st = [load(&s[0]), load(&s[1]), load(&s[2]), load(&s[3])];
        for chunk in out.chunks_exact_mut(LANES) {
            let mut r = [_mm256_setzero_si256(); 2];
            for h in 0..2 {
                let [s0, s1, s2, s3] = [st[0][h], st[1][h], st[2][h], st[3][h]];
                r[h] = if STAR {
                    let v = _mm256_add_epi64(s1, _mm256_slli_epi64(s1, 2));
                    let v = rotl!(v, 7);
                    _mm256_add_epi64(v, _mm256_slli_epi64(v, 3))
                } else {
                    let v = _mm256_add_epi64(s0, s3);
                    _mm256_add_epi64(rotl!(v, 23), s0)
                };
                let t = _mm256_slli_epi64(s1, 17);
                let s2 = _mm256_xor_si256(s2, s0);
                let s3 = _mm256_xor_si256(s3, s1);
                let s1 = _mm256_xor_si256(s1, s2);
                let s0 = _mm256_xor_si256(s0, s3);
                let s2 = _mm256_xor_si256(s2, t);
                let s3 = rotl!(s3, 45);
                (st[0][h], st[1][h], st[2][h], st[3][h]) = (s0, s1, s2, s3);
            }
            store(chunk, r);
        }
        for j in 0..4 {
            store(&mut s[j], st[j]);
        }
    }

    #[target_feature(enable = "avx2")]
    pub(super) unsafe fn sfc_fill(g: &mut Sfc64x8, out: &mut [u64]) {
        let (mut a, mut b, mut c, mut d) = (load(&g.a), load(&g.b), load(&g.c), load(&g.counter));
        let one = _mm256_set1_epi64x(1);
        for chunk in out.chunks_exact_mut(LANES) {
            let mut r = [_mm256_setzero_si256(); 2];
            for h in 0..2 {
                let tmp = _mm256_add_epi64(_mm256_add_epi64(a[h], b[h]), d[h]);
                d[h] = _mm256_add_epi64(d[h], one);
                a[h] = _mm256_xor_si256(b[h], _mm256_srli_epi64(b[h], 11));
                b[h] = _mm256_add_epi64(c[h], _mm256_slli_epi64(c[h], 3));
                c[h] = _mm256_add_epi64(rotl!(c[h], 24), tmp);
                r[h] = tmp;
            }
            store(chunk, r);
        }
        store(&mut g.a, a);
        store(&mut g.b, b);
        store(&mut g.c, c);
        store(&mut g.counter, d);
    }
}

impl Xoshiro256x8 {
    pub fn from_base(base: Xoshiro256) -> Self {
        let mut lanes = [[0u64; LANES]; 4];
        let mut cur = base;
        for k in 0..LANES {
            if k > 0 {
                cur = jump::jump_xoshiro256(&cur, jump::LANE_EXPONENT);
            }
            for j in 0..4 {
                lanes[j][k] = cur.s[j];
            }
        }
        Xoshiro256x8 { s: lanes }
    }

    pub(crate) fn from_words(w: &[u64]) -> Result<Self> {
        let mut s = [[0u64; LANES]; 4];
        for k in 0..LANES {
            let lane = &w[4 * k..4 * k + 4];
            if lane.iter().all(|&x| x == 0) {
                return Err(Error::InvalidState(format!("lane {k} state must not be all zero")));
            }
            for j in 0..4 {
                s[j][k] = lane[j];
            }
        }
        Ok(Xoshiro256x8 { s })
    }

    /// Lane-major: the four words of lane 0, then lane 1, and so on.
    pub fn to_words(&self) -> Vec<u64> {
        (0..LANES).flat_map(|k| (0..4).map(move |j| self.s[j][k])).collect()
    }

    pub fn lane(&self, k: usize) -> Xoshiro256 {
        Xoshiro256 { s: [self.s[0][k], self.s[1][k], self.s[2][k], self.s[3][k]] }
    }

    pub fn set_lane(&mut self, k: usize, g: &Xoshiro256) {
        for j in 0..4 {
            self.s[j][k] = g.s[j];
        }
    }

    pub fn fill_plusplus(&mut self, out: &mut [u64]) {
        x256_dispatch::<false>(&mut self.s, out)
    }

    pub fn fill_starstar(&mut self, out: &mut [u64]) {
        x256_dispatch::<true>(&mut self.s, out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sfc64x8 {
    pub a: [u64; LANES],
    pub b: [u64; LANES],
    pub c: [u64; LANES],
    pub counter: [u64; LANES],
}

#[inline(always)]
fn sfc_fill(g: &mut Sfc64x8, out: &mut [u64]) {
    let (mut a, mut b, mut c, mut d) = (g.a, g.b, g.c, g.counter);
    for chunk in out.chunks_exact_mut(LANES) {
        for k in 0..LANES {
            let tmp = a[k].wrapping_add(b[k]).wrapping_add(d[k]);
            d[k] = d[k].wrapping_add(1);
            a[k] = b[k] ^ (b[k] >> 11);
            b[k] = c[k].wrapping_add(c[k] << 3);
            c[k] = c[k].rotate_left(24).wrapping_add(tmp);
            chunk[k] = tmp;
        }
    }
    (g.a, g.b, g.c, g.counter) = (a, b, c, d);
}

impl Sfc64x8 {
    pub fn from_base(base: Sfc64) -> Self {
        let mut g = Sfc64x8 { a: [base.a; LANES], b: [base.b; LANES], c: [base.c; LANES], counter: [0; LANES] };
        for k in 0..LANES {
            g.counter[k] = base.counter.wrapping_add((k as u64) << 61);
        }
        g
    }

    pub(crate) fn from_words(w: &[u64]) -> Self {
        let mut g = Sfc64x8 { a: [0; LANES], b: [0; LANES], c: [0; LANES], counter: [0; LANES] };
        for k in 0..LANES {
            g.set_lane(k, &Sfc64 { a: w[4 * k], b: w[4 * k + 1], c: w[4 * k + 2], counter: w[4 * k + 3] });
        }
        g
    }

    pub fn to_words(&self) -> Vec<u64> {
        (0..LANES).flat_map(|k| [self.a[k], self.b[k], self.c[k], self.counter[k]]).collect()
    }

    pub fn lane(&self, k: usize) -> Sfc64 {
        Sfc64 { a: self.a[k], b: self.b[k], c: self.c[k], counter: self.counter[k] }
    }

    pub fn set_lane(&mut self, k: usize, g: &Sfc64) {
        self.a[k] = g.a;
        self.b[k] = g.b;
        self.c[k] = g.c;
        self.counter[k] = g.counter;
    }

    pub fn fill(&mut self, out: &mut [u64]) {
        #[cfg(target_arch = "x86_64")]
        {
            if std::arch::is_x86_feature_detected!("avx2") {
                // SAFETY: the CPU supports AVX2, checked just above.
                unsafe { avx2::sfc_fill(self, out) };
                return;
            }
        }
        sfc_fill(self, out)
    }
}
