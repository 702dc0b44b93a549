//! The xor-shift-rotate family: xoshiro256++/**, xorshift128+ and xoroshiro128++.
//!
//! Transitions and scramblers follow the authors' reference C code. All four
//! transitions are linear over GF(2), which is what makes polynomial jumps possible.

use super::LinearTransition;

/// State shared by xoshiro256++ and xoshiro256**; they differ only in the output scrambler.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xoshiro256 {
    pub s: [u64; 4],
}

impl Xoshiro256 {
    #[inline(always)]
    fn advance_state(s: &mut [u64; 4]) {
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
    }

    #[inline(always)]
    pub fn next_plusplus(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
        Self::advance_state(s);
        result
    }

    #[inline(always)]
    pub fn next_starstar(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        Self::advance_state(s);
        result
    }

    pub fn fill_plusplus(&mut self, out: &mut [u64]) {
        let mut s = self.s;
        for w in out {
            *w = s[0].wrapping_add(s[3]).rotate_left(23).wrapping_add(s[0]);
            Self::advance_state(&mut s);
        }
        self.s = s;
    }

    pub fn fill_starstar(&mut self, out: &mut [u64]) {
        let mut s = self.s;
        for w in out {
            *w = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
            Self::advance_state(&mut s);
        }
        self.s = s;
    }
}

impl LinearTransition for Xoshiro256 {
    const STATE_BITS: usize = 256;

    fn step(&mut self) {
        Self::advance_state(&mut self.s);
    }

    fn xor_assign(&mut self, other: &Self) {
        for (a, b) in self.s.iter_mut().zip(other.s) {
            *a ^= b;
        }
    }

    fn zeroed() -> Self {
        Xoshiro256 { s: [0; 4] }
    }

    fn low_bit(&self) -> bool {
        self.s[0] & 1 == 1
    }
}

/// xorshift128+ with the (23, 18, 5) shift triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xorshift128Plus {
    pub s: [u64; 2],
}

impl Xorshift128Plus {
    #[inline(always)]
    pub fn next_u64(&mut self) -> u64 {
        let mut s1 = self.s[0];
        let s0 = self.s[1];
        let result = s0.wrapping_add(s1);
        self.s[0] = s0;
        s1 ^= s1 << 23;
        self.s[1] = s1 ^ s0 ^ (s1 >> 18) ^ (s0 >> 5);
        result
    }
}

impl LinearTransition for Xorshift128Plus {
    const STATE_BITS: usize = 128;

    fn step(&mut self) {
        self.next_u64();
    }

    fn xor_assign(&mut self, other: &Self) {
        self.s[0] ^= other.s[0];
        self.s[1] ^= other.s[1];
    }

    fn zeroed() -> Self {
        Xorshift128Plus { s: [0; 2] }
    }

    fn low_bit(&self) -> bool {
        self.s[0] & 1 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xoroshiro128PlusPlus {
    pub s: [u64; 2],
}

impl Xoroshiro128PlusPlus {
    #[inline(always)]
    pub fn next_u64(&mut self) -> u64 {
        let s0 = self.s[0];
        let mut s1 = self.s[1];
        let result = s0.wrapping_add(s1).rotate_left(17).wrapping_add(s0);
        s1 ^= s0;
        self.s[0] = s0.rotate_left(49) ^ s1 ^ (s1 << 21);
        self.s[1] = s1.rotate_left(28);
        result
    }
}

impl LinearTransition for Xoroshiro128PlusPlus {
    const STATE_BITS: usize = 128;

    fn step(&mut self) {
        self.next_u64();
    }

    fn xor_assign(&mut self, other: &Self) {
        self.s[0] ^= other.s[0];
        self.s[1] ^= other.s[1];
    }

    fn zeroed() -> Self {
        Xoroshiro128PlusPlus { s: [0; 2] }
    }

    fn low_bit(&self) -> bool {
        self.s[0] & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xoshiro_small_state_reference_words() {
        // Hand-traced from the reference transition on state {1, 2, 3, 4}.
        let mut g = Xoshiro256 { s: [1, 2, 3, 4] };
        assert_eq!(g.next_plusplus(), 0x0000_0000_0280_0001);
        assert_eq!(g.next_plusplus(), 0x0000_0000_0380_0067);
        let mut g = Xoshiro256 { s: [1, 2, 3, 4] };
        assert_eq!(g.next_starstar(), 0x2d00);
        assert_eq!(g.next_starstar(), 0);
    }

    #[test]
    fn two_steps_differ_from_one() {
        let mut a = Xoshiro256 { s: [7, 11, 13, 17] };
        let mut b = a.clone();
        a.step();
        b.step();
        b.step();
        assert_ne!(a, b);
    }

    #[test]
    fn fill_matches_single_steps() {
        let mut a = Xoshiro256 { s: [9, 8, 7, 6] };
        let mut b = a.clone();
        let mut buf = [0u64; 13];
        a.fill_starstar(&mut buf);
        for w in buf {
            assert_eq!(w, b.next_starstar());
        }
    }
}
