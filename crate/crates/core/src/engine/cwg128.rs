//! cwg128: a 128-bit Collatz-Weyl generator.
//!
//! The published generator returns 128 bits per step; only the low 64 bits are
//! emitted here so that every engine contributes one word per step.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cwg128 {
    pub x: u128,
    pub a: u128,
    pub weyl: u128,
    /// Weyl increment; always odd.
    pub s: u128,
}

fn join(lo: u64, hi: u64) -> u128 {
    lo as u128 | (hi as u128) << 64
}

impl Cwg128 {
    pub(crate) fn from_words(w: &[u64]) -> Result<Self> {
        let s = join(w[6], w[7]);
        if s & 1 == 0 {
            return Err(Error::InvalidState("cwg128 Weyl increment must be odd".into()));
        }
        Ok(Cwg128 { x: join(w[0], w[1]), a: join(w[2], w[3]), weyl: join(w[4], w[5]), s })
    }

    pub fn to_words(&self) -> [u64; 8] {
        let mut out = [0; 8];
        for (i, v) in [self.x, self.a, self.weyl, self.s].into_iter().enumerate() {
            out[2 * i] = v as u64;
            out[2 * i + 1] = (v >> 64) as u64;
        }
        out
    }

    #[inline(always)]
    pub fn next_u64(&mut self) -> u64 {
        self.a = self.a.wrapping_add(self.x);
        self.weyl = self.weyl.wrapping_add(self.s);
        self.x = ((self.x >> 1).wrapping_mul(self.a | 1)) ^ self.weyl;
        ((self.a >> 96) ^ self.x) as u64
    }
}
