//! ChaCha20 keystream in the RFC 8439 layout: 256-bit key, 32-bit block counter,
//! 96-bit nonce. Each block yields eight little-endian 64-bit words.

/// Counter value that marks a used-up stream. The block at this counter is never
/// produced, so a stream holds 2^32 - 1 blocks.
pub const EXHAUSTED: u32 = u32::MAX;

const SIGMA: [u32; 4] = [0x6170_7865, 0x3320_646e, 0x7962_2d32, 0x6b20_6574];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaCha20 {
    pub key: [u32; 8],
    pub counter: u32,
    pub nonce: [u32; 3],
}

#[inline(always)]
fn quarter(x: &mut [u32; 16], a: usize, b: usize, c: usize, d: usize) {
    x[a] = x[a].wrapping_add(x[b]);
    x[d] = (x[d] ^ x[a]).rotate_left(16);
    x[c] = x[c].wrapping_add(x[d]);
    x[b] = (x[b] ^ x[c]).rotate_left(12);
    x[a] = x[a].wrapping_add(x[b]);
    x[d] = (x[d] ^ x[a]).rotate_left(8);
    x[c] = x[c].wrapping_add(x[d]);
    x[b] = (x[b] ^ x[c]).rotate_left(7);
}

impl ChaCha20 {
    pub(crate) fn from_words(w: &[u64]) -> Self {
        let mut key = [0u32; 8];
        for i in 0..4 {
            key[2 * i] = w[i] as u32;
            key[2 * i + 1] = (w[i] >> 32) as u32;
        }
        ChaCha20 {
            key,
            counter: w[4] as u32,
            nonce: [(w[4] >> 32) as u32, w[5] as u32, (w[5] >> 32) as u32],
        }
    }

    pub fn to_words(&self) -> [u64; 6] {
        let k = |i: usize| self.key[2 * i] as u64 | (self.key[2 * i + 1] as u64) << 32;
        [
            k(0),
            k(1),
            k(2),
            k(3),
            self.counter as u64 | (self.nonce[0] as u64) << 32,
            self.nonce[1] as u64 | (self.nonce[2] as u64) << 32,
        ]
    }

    /// The 16-word keystream block for the current counter.
    pub fn block(&self) -> [u32; 16] {
        let mut input = [0u32; 16];
        input[..4].copy_from_slice(&SIGMA);
        input[4..12].copy_from_slice(&self.key);
        input[12] = self.counter;
        input[13..].copy_from_slice(&self.nonce);
        let mut x = input;
        for _ in 0..10 {
            quarter(&mut x, 0, 4, 8, 12);
            quarter(&mut x, 1, 5, 9, 13);
            quarter(&mut x, 2, 6, 10, 14);
            quarter(&mut x, 3, 7, 11, 15);
            quarter(&mut x, 0, 5, 10, 15);
            quarter(&mut x, 1, 6, 11, 12);
            quarter(&mut x, 2, 7, 8, 13);
            quarter(&mut x, 3, 4, 9, 14);
        }
        for (o, i) in x.iter_mut().zip(input) {
            *o = o.wrapping_add(i);
        }
        x
    }

    pub fn is_exhausted(&self) -> bool {
        self.counter == EXHAUSTED
    }

    /// Fills whole blocks; returns the number of words written.
    pub fn fill(&mut self, out: &mut [u64]) -> usize {
        let mut written = 0;
        for chunk in out.chunks_exact_mut(8) {
            if self.is_exhausted() {
                break;
            }
            let b = self.block();
            for (i, w) in chunk.iter_mut().enumerate() {
                *w = b[2 * i] as u64 | (b[2 * i + 1] as u64) << 32;
            }
            self.counter += 1;
            written += 8;
        }
        written
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_roundtrip() {
        let w = [1, 2, 3, 4, 0xdead_beef_0000_0007, 0x0123_4567_89ab_cdef];
        assert_eq!(ChaCha20::from_words(&w).to_words(), w);
    }

    #[test]
    fn stops_at_sentinel_counter() {
        let mut g = ChaCha20::from_words(&[0; 6]);
        g.counter = EXHAUSTED - 1;
        let mut out = [0u64; 24];
        assert_eq!(g.fill(&mut out), 8);
        assert!(g.is_exhausted());
        assert_eq!(g.fill(&mut out), 0);
    }
}
