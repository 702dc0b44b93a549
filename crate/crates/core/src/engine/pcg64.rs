//! PCG64 with the DXSM output function and the 64-bit "cheap" multiplier.

use crate::error::{Error, Result};

const MULT: u64 = 0xda94_2042_e4dd_58b5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pcg64Dxsm {
    pub state: u128,
    /// Always odd.
    pub inc: u128,
}

impl Pcg64Dxsm {
    pub fn new(state: u128, inc: u128) -> Result<Self> {
        if inc & 1 == 0 {
            return Err(Error::InvalidState("pcg64 increment must be odd".into()));
        }
        Ok(Pcg64Dxsm { state, inc })
    }

    pub(crate) fn from_words(w: &[u64]) -> Result<Self> {
        Self::new(
            w[0] as u128 | (w[1] as u128) << 64,
            w[2] as u128 | (w[3] as u128) << 64,
        )
    }

    pub fn to_words(&self) -> [u64; 4] {
        [
            self.state as u64,
            (self.state >> 64) as u64,
            self.inc as u64,
            (self.inc >> 64) as u64,
        ]
    }

    #[inline(always)]
    pub fn next_u64(&mut self) -> u64 {
        let mut hi = (self.state >> 64) as u64;
        let lo = self.state as u64 | 1;
        hi ^= hi >> 32;
        hi = hi.wrapping_mul(MULT);
        hi ^= hi >> 48;
        hi = hi.wrapping_mul(lo);
        self.state = self.state.wrapping_mul(MULT as u128).wrapping_add(self.inc);
        hi
    }

    /// Advances the state by `delta` steps in O(log delta) time.
    pub fn advance(&mut self, mut delta: u128) {
        // Brown's LCG skip: compose (mult, plus) pairs by repeated squaring.
        let mut cur_mult = MULT as u128;
        let mut cur_plus = self.inc;
        let mut acc_mult: u128 = 1;
        let mut acc_plus: u128 = 0;
        while delta > 0 {
            if delta & 1 == 1 {
                acc_mult = acc_mult.wrapping_mul(cur_mult);
                acc_plus = acc_plus.wrapping_mul(cur_mult).wrapping_add(cur_plus);
            }
            cur_plus = cur_mult.wrapping_add(1).wrapping_mul(cur_plus);
            cur_mult = cur_mult.wrapping_mul(cur_mult);
            delta >>= 1;
        }
        self.state = acc_mult.wrapping_mul(self.state).wrapping_add(acc_plus);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn advance_matches_stepping() {
        let mut a = Pcg64Dxsm::new(0x1234_5678_9abc_def0_0fed_cba9_8765_4321, 0x55 | 1).unwrap();
        let mut b = a.clone();
        a.advance(0);
        assert_eq!(a, b);
        for _ in 0..5 {
            b.next_u64();
        }
        a.advance(5);
        assert_eq!(a, b);
    }

    #[test]
    fn even_increment_rejected() {
        assert!(Pcg64Dxsm::new(1, 2).is_err());
    }
}
