//! Philox-4x64 with 10 rounds.

const M0: u64 = 0xD2E7_470E_E14C_6C93;
const M1: u64 = 0xCA5A_8263_9512_1157;
const W0: u64 = 0x9E37_79B9_7F4A_7C15;
const W1: u64 = 0xBB67_AE85_84CA_A73B;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Philox4x64 {
    /// 256-bit counter, least significant word first.
    pub counter: [u64; 4],
    pub key: [u64; 2],
}

#[inline(always)]
fn mulhilo(a: u64, b: u64) -> (u64, u64) {
    let p = a as u128 * b as u128;
    ((p >> 64) as u64, p as u64)
}

impl Philox4x64 {
    /// The keyed bijection applied to one counter block.
    pub fn block(ctr: [u64; 4], key: [u64; 2]) -> [u64; 4] {
        let mut c = ctr;
        let mut k = key;
        for round in 0..10 {
            if round > 0 {
                k[0] = k[0].wrapping_add(W0);
                k[1] = k[1].wrapping_add(W1);
            }
            let (hi0, lo0) = mulhilo(M0, c[0]);
            let (hi1, lo1) = mulhilo(M1, c[2]);
            c = [hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0];
        }
        c
    }

    pub fn next_block(&mut self) -> [u64; 4] {
        let out = Self::block(self.counter, self.key);
        for w in self.counter.iter_mut() {
            *w = w.wrapping_add(1);
            if *w != 0 {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_carries_across_words() {
        let mut g = Philox4x64 { counter: [u64::MAX, u64::MAX, 0, 0], key: [0, 0] };
        g.next_block();
        assert_eq!(g.counter, [0, 0, 1, 0]);
    }
}
