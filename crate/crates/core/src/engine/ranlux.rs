//! ranlux++: an LCG with multiplier A = a^2048 modulo m = 2^576 - 2^240 + 1.
//!
//! Here a = m - (m - 1) / 2^24 is the multiplier that makes the LCG equivalent
//! to the RANLUX subtract-with-borrow recursion; 2048 is the luxury exponent.
//! Arithmetic uses nine 64-bit limbs, least significant first.

use crate::error::{Error, Result};

pub type Limbs = [u64; 9];

/// m = 2^576 - 2^240 + 1.
pub const RANLUX_MODULUS: Limbs = [1, 0, 0, 0xffff_0000_0000_0000, u64::MAX, u64::MAX, u64::MAX, u64::MAX, u64::MAX];

/// A = a^2048 mod m.
pub const RANLUX_MULTIPLIER: Limbs = [
    0xed7f_aa90_747a_aad9,
    0x4cec_2c78_af55_c101,
    0xe64d_cb31_c482_28ec,
    0x6d8a_15a1_3bee_7cb0,
    0x20b2_ca60_cb78_c509,
    0x256c_3d3c_662e_a36c,
    0xff74_e541_0768_4ed2,
    0x492e_dfcc_0cc8_e753,
    0xb48c_187c_f5b2_2097,
];

const W: usize = 20;

fn geq(a: &Limbs, b: &Limbs) -> bool {
    for i in (0..9).rev() {
        if a[i] != b[i] {
            return a[i] > b[i];
        }
    }
    true
}

fn sub_in_place(a: &mut [u64], b: &[u64]) {
    let mut borrow = 0u64;
    for i in 0..a.len() {
        let bi = if i < b.len() { b[i] } else { 0 };
        let (d1, o1) = a[i].overflowing_sub(bi);
        let (d2, o2) = d1.overflowing_sub(borrow);
        a[i] = d2;
        borrow = (o1 | o2) as u64;
    }
    debug_assert_eq!(borrow, 0);
}

fn add_shifted(acc: &mut [u64; W], src: &[u64], shift: usize) {
    let (limb, bits) = (shift / 64, shift % 64);
    let mut carry = 0u64;
    let mut prev = 0u64;
    for i in 0..W - limb {
        let cur = if i < src.len() { src[i] } else { 0 };
        let v = if bits == 0 { cur } else { (cur << bits) | (prev >> (64 - bits)) };
        prev = cur;
        let (s1, o1) = acc[i + limb].overflowing_add(v);
        let (s2, o2) = s1.overflowing_add(carry);
        acc[i + limb] = s2;
        carry = (o1 | o2) as u64;
    }
}

/// Reduces a value held in up to `W` limbs modulo m.
fn reduce(mut v: [u64; W]) -> Limbs {
    // 2^576 = 2^240 - 1 (mod m), so hi * 2^576 + lo = lo + (hi << 240) - hi.
    loop {
        let mut hi = [0u64; W - 9];
        hi.copy_from_slice(&v[9..]);
        if hi.iter().all(|&h| h == 0) {
            break;
        }
        let mut next = [0u64; W];
        next[..9].copy_from_slice(&v[..9]);
        add_shifted(&mut next, &hi, 240);
        sub_in_place(&mut next, &hi);
        v = next;
    }
    let mut out: Limbs = v[..9].try_into().unwrap();
    if geq(&out, &RANLUX_MODULUS) {
        sub_in_place(&mut out, &RANLUX_MODULUS);
    }
    out
}

/// a * b mod m for residues a, b < m.
pub fn mul_mod(a: &Limbs, b: &Limbs) -> Limbs {
    let mut p = [0u64; W];
    for i in 0..9 {
        let mut carry: u128 = 0;
        for j in 0..9 {
            let t = a[i] as u128 * b[j] as u128 + p[i + j] as u128 + carry;
            p[i + j] = t as u64;
            carry = t >> 64;
        }
        p[i + 9] = carry as u64;
    }
    reduce(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranluxpp {
    /// Current residue, 0 < x < m.
    pub x: Limbs,
}

impl Ranluxpp {
    pub(crate) fn from_words(w: &[u64]) -> Result<Self> {
        let x: Limbs = w.try_into().map_err(|_| Error::InvalidState("ranlux++ expects 9 words".into()))?;
        if geq(&x, &RANLUX_MODULUS) {
            return Err(Error::InvalidState("ranlux++ residue must be below the modulus".into()));
        }
        if x.iter().all(|&l| l == 0) {
            return Err(Error::InvalidState("ranlux++ residue must be nonzero".into()));
        }
        Ok(Ranluxpp { x })
    }

    /// Reduces nine arbitrary words modulo m; zero maps to one.
    pub(crate) fn from_seed_words(w: &[u64]) -> Self {
        let mut x: Limbs = w.try_into().unwrap();
        if geq(&x, &RANLUX_MODULUS) {
            sub_in_place(&mut x, &RANLUX_MODULUS);
        }
        if x.iter().all(|&l| l == 0) {
            x[0] = 1;
        }
        Ranluxpp { x }
    }

    pub fn step_with(&mut self, multiplier: &Limbs) {
        self.x = mul_mod(multiplier, &self.x);
    }

    /// One LCG step; the nine limbs of the new residue are the output.
    pub fn next_block(&mut self) -> Limbs {
        self.step_with(&RANLUX_MULTIPLIER);
        self.x
    }

    /// Advances by 2^k steps using A^(2^k) obtained by k squarings.
    pub fn jump_pow2(&mut self, k: u32) {
        let mut m = RANLUX_MULTIPLIER;
        for _ in 0..k {
            m = mul_mod(&m, &m);
        }
        self.step_with(&m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE: Limbs = [1, 0, 0, 0, 0, 0, 0, 0, 0];

    #[test]
    fn identity_multiplier_leaves_residue() {
        let mut g = Ranluxpp { x: [5, 6, 7, 8, 9, 10, 11, 12, 13] };
        let before = g.clone();
        g.step_with(&ONE);
        assert_eq!(g, before);
    }

    #[test]
    fn multiplier_is_a_to_the_2048() {
        // a = m - (m - 1) / 2^24
        let mut m_minus_1 = RANLUX_MODULUS;
        m_minus_1[0] = 0;
        let mut q = [0u64; 9];
        for i in 0..9 {
            let lo = m_minus_1[i] >> 24;
            let hi = if i + 1 < 9 { m_minus_1[i + 1] << 40 } else { 0 };
            q[i] = lo | hi;
        }
        let mut a = RANLUX_MODULUS;
        sub_in_place(&mut a, &q);
        let mut p = a;
        for _ in 0..11 {
            p = mul_mod(&p, &p);
        }
        assert_eq!(p, RANLUX_MULTIPLIER);
    }

    #[test]
    fn modulus_minus_one_squared_is_one() {
        let mut mm1 = RANLUX_MODULUS;
        mm1[0] = 0;
        assert_eq!(mul_mod(&mm1, &mm1), ONE);
    }

    #[test]
    fn jump_matches_stepping() {
        let mut a = Ranluxpp { x: [3, 1, 4, 1, 5, 9, 2, 6, 5] };
        let mut b = a.clone();
        a.jump_pow2(4);
        for _ in 0..16 {
            b.next_block();
        }
        assert_eq!(a, b);
    }

    #[test]
    fn seed_reduction_stays_below_modulus() {
        let g = Ranluxpp::from_seed_words(&[u64::MAX; 9]);
        assert!(!geq(&g.x, &RANLUX_MODULUS));
        let g = Ranluxpp::from_seed_words(&[0; 9]);
        assert_eq!(g.x, ONE);
        assert!(Ranluxpp::from_words(&RANLUX_MODULUS).is_err());
    }
}
