//! Polynomials over GF(2), stored as little-endian bit vectors in `u64` words.
//!
//! Bit i of word i / 64 is the coefficient of x^i.

pub type Poly = Vec<u64>;

pub fn bit(p: &[u64], i: usize) -> bool {
    i / 64 < p.len() && (p[i / 64] >> (i % 64)) & 1 == 1
}

pub fn set_bit(p: &mut Poly, i: usize) {
    if p.len() <= i / 64 {
        p.resize(i / 64 + 1, 0);
    }
    p[i / 64] |= 1 << (i % 64);
}

/// Degree of `p`, or `None` for the zero polynomial.
pub fn degree(p: &[u64]) -> Option<usize> {
    p.iter().rposition(|&w| w != 0).map(|i| 64 * i + 63 - p[i].leading_zeros() as usize)
}

/// Drops high zero words.
pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn xor_shifted(dst: &mut Poly, src: &[u64], shift: usize) {
    let (limb, bits) = (shift / 64, shift % 64);
    let need = src.len() + limb + 1;
    if dst.len() < need {
        dst.resize(need, 0);
    }
    for (i, &w) in src.iter().enumerate() {
        dst[i + limb] ^= w << bits;
        if bits != 0 {
            dst[i + limb + 1] ^= w >> (64 - bits);
        }
    }
}

pub fn mul(a: &[u64], b: &[u64]) -> Poly {
    let mut out = vec![0u64; a.len() + b.len() + 1];
    if let Some(da) = degree(a) {
        for i in 0..=da {
            if bit(a, i) {
                xor_shifted(&mut out, b, i);
            }
        }
    }
    trim(out)
}

/// Remainder of `a` divided by the nonzero polynomial `m`.
pub fn rem(a: &[u64], m: &[u64]) -> Poly {
    let dm = degree(m).expect("division by the zero polynomial");
    let mut r = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        xor_shifted(&mut r, m, dr - dm);
    }
    trim(r)
}

pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64]) -> Poly {
    rem(&mul(a, b), m)
}

/// x^n mod m by square-and-multiply.
pub fn x_pow_mod(n: u128, m: &[u64]) -> Poly {
    let mut result = rem(&[1], m);
    let x = rem(&[2], m);
    for i in (0..128).rev() {
        result = mul_mod(&result, &result, m);
        if (n >> i) & 1 == 1 {
            result = mul_mod(&result, &x, m);
        }
    }
    result
}

/// x^(2^k) mod m by k squarings.
pub fn x_pow2_mod(k: u32, m: &[u64]) -> Poly {
    let mut p = rem(&[2], m);
    for _ in 0..k {
        p = mul_mod(&p, &p, m);
    }
    p
}

/// Shortest linear recurrence generating `seq`, returned as the characteristic
/// polynomial x^L + c_1 x^(L-1) + ... + c_L (Berlekamp-Massey).
pub fn minimal_polynomial(seq: &[bool]) -> Poly {
    let n = seq.len();
    let mut c = vec![false; n + 1];
    let mut b = vec![false; n + 1];
    c[0] = true;
    b[0] = true;
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..n {
        let mut d = seq[i];
        for j in 1..=l {
            d ^= c[j] & seq[i - j];
        }
        if !d {
            m += 1;
        } else if 2 * l <= i {
            let t = c.clone();
            for j in 0..=n - m {
                c[j + m] ^= b[j];
            }
            l = i + 1 - l;
            b = t;
            m = 1;
        } else {
            for j in 0..=n - m {
                c[j + m] ^= b[j];
            }
            m += 1;
        }
    }
    // Connection polynomial C(x) = 1 + c_1 x + ... ; the characteristic polynomial is its reversal.
    let mut p = Poly::new();
    for j in 0..=l {
        if c[j] {
            set_bit(&mut p, l - j);
        }
    }
    trim(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_bits() {
        assert_eq!(degree(&[0]), None);
        assert_eq!(degree(&[1]), Some(0));
        assert_eq!(degree(&[0, 2]), Some(65));
    }

    #[test]
    fn product_of_binomials() {
        // (x + 1)^2 = x^2 + 1 over GF(2)
        assert_eq!(mul(&[3], &[3]), vec![5]);
    }

    #[test]
    fn fibonacci_parity_recurrence() {
        // s_n = s_{n-1} + s_{n-2} has characteristic polynomial x^2 + x + 1.
        let mut s = vec![true, false];
        for i in 2..20 {
            let v = s[i - 1] ^ s[i - 2];
            s.push(v);
        }
        assert_eq!(minimal_polynomial(&s), vec![0b111]);
    }

    #[test]
    fn powers_agree() {
        let m = vec![0b1_0001_1011u64]; // x^8 + x^4 + x^3 + x + 1
        assert_eq!(x_pow_mod(1 << 5, &m), x_pow2_mod(5, &m));
        assert_eq!(x_pow_mod(1, &m), vec![2]);
    }
}
