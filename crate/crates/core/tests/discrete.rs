//! Bounded integers, permutations, subsets and raw bytes.

use std::cell::Cell;
use std::collections::HashMap;

use rngpack::discrete::lemire;
use rngpack::{EngineId, Rng};

fn rng(seed: u64) -> Rng {
    Rng::seeded(EngineId::X256PlusPlus, seed, &[])
}

/// Outcome of feeding byte `x` to the 8-bit algorithm: the value, or None when
/// the byte is rejected and a second draw is requested.
fn first_draw_8bit(x: u8, b: u8) -> Option<u8> {
    let calls = Cell::new(0);
    let v = lemire(
        || {
            calls.set(calls.get() + 1);
            // After a rejection, a byte that is always accepted ends the loop.
            Ok(if calls.get() == 1 { x } else { 255 })
        },
        b,
    )
    .unwrap();
    (calls.get() == 1).then_some(v)
}

#[test]
fn lemire_8bit_exhaustive_is_exactly_uniform() {
    for b in 2u8..=17 {
        let mut counts = vec![0u32; b as usize];
        let mut rejected = 0u32;
        for x in 0..=255u8 {
            match first_draw_8bit(x, b) {
                Some(v) => counts[v as usize] += 1,
                None => rejected += 1,
            }
        }
        assert!(counts.iter().all(|&c| c == counts[0]), "b = {b}: {counts:?}");
        assert_eq!(rejected, 256 % b as u32, "b = {b}");
        assert_eq!(counts[0], 256 / b as u32);
    }
}

#[test]
fn lemire_16bit_exhaustive_for_awkward_bounds() {
    for b in [3u16, 7, 1000, 40_000, 65_535] {
        let mut counts = vec![0u32; b as usize];
        let mut rejected = 0u32;
        for x in 0..=u16::MAX {
            let (hi, lo) = ((x as u32 * b as u32) >> 16, (x as u32 * b as u32) as u16);
            if lo < b && lo < b.wrapping_neg() % b {
                rejected += 1;
            } else {
                counts[hi as usize] += 1;
                let mut once = true;
                let v = lemire(|| { assert!(std::mem::take(&mut once)); Ok(x) }, b).unwrap();
                assert_eq!(v as u32, hi);
            }
        }
        assert!(counts.iter().all(|&c| c == counts[0]), "b = {b}");
        assert_eq!(rejected, 65_536 % b as u32);
    }
}

#[test]
fn bound_one_and_unbounded() {
    let mut r = rng(1);
    let mut copy = r.clone();
    let mut z = [9u64; 50];
    r.uint64(&mut z, 1).unwrap();
    assert!(z.iter().all(|&v| v == 0));
    // One word per draw.
    let mut w = [0u64; 51];
    copy.take_bulk(&mut w).unwrap();
    assert_eq!(r.take_u64().unwrap(), w[50]);
    let mut full = [0u8; 8];
    let mut r = rng(2);
    let h = r.clone().take_u32().unwrap();
    r.uint8(&mut full[..1], 0).unwrap();
    assert_eq!(full[0], h as u8);
}

#[test]
fn power_of_two_bound_takes_top_bits() {
    let mut r = rng(3);
    let raw = r.clone().take_u64().unwrap();
    let mut v = [0u64; 1];
    r.uint64(&mut v, 1 << 32).unwrap();
    assert_eq!(v[0], raw >> 32);
}

#[test]
fn ranges_stay_in_bounds_including_full_spans() {
    let mut r = rng(4);
    let mut a = vec![0i32; 20_000];
    r.int(&mut a, -3, 3).unwrap();
    assert!(a.iter().all(|v| (-3..=3).contains(v)));
    for v in -3..=3 {
        assert!(a.contains(&v));
    }
    r.int(&mut a, i32::MIN, i32::MAX).unwrap();
    assert!(a.iter().any(|&v| v < 0) && a.iter().any(|&v| v > 0));
    r.int(&mut a, 5, 5).unwrap();
    assert!(a.iter().all(|&v| v == 5));
    let mut b = vec![0i64; 20_000];
    r.long_long(&mut b, i64::MIN, i64::MAX).unwrap();
    assert!(b.iter().any(|&v| v < 0) && b.iter().any(|&v| v > 0));
    r.long_long(&mut b, i64::MAX - 2, i64::MAX).unwrap();
    assert!(b.iter().all(|&v| v >= i64::MAX - 2));
    assert!(r.int(&mut a, 2, 1).is_err());
    let mut c = vec![0u16; 20_000];
    r.uint16(&mut c, 1000).unwrap();
    assert!(c.iter().all(|&v| v < 1000));
    let mut d = vec![0u32; 20_000];
    r.uint32(&mut d, 3).unwrap();
    assert!(d.iter().all(|&v| v < 3));
}

#[test]
fn unbounded_bits_are_balanced() {
    let mut r = rng(5);
    let n = 1_000_000;
    let mut x = vec![0u64; n];
    r.uint64(&mut x, 0).unwrap();
    let sigma = (n as f64 * 0.25).sqrt();
    for bit in 0..64 {
        let ones = x.iter().filter(|&&v| v >> bit & 1 == 1).count() as f64;
        assert!((ones - n as f64 / 2.0).abs() < 5.0 * sigma, "bit {bit}");
    }
}

/// Every category within 5 sigma of its binomial expectation.
fn equifrequent<K: std::hash::Hash + Eq + std::fmt::Debug>(counts: &HashMap<K, u64>, categories: usize, trials: u64) {
    assert_eq!(counts.len(), categories);
    let p = 1.0 / categories as f64;
    let sd = (trials as f64 * p * (1.0 - p)).sqrt();
    for (k, &c) in counts {
        assert!((c as f64 - trials as f64 * p).abs() < 5.0 * sd, "{k:?}: {c}");
    }
}

#[test]
fn permutations_of_four_are_equifrequent() {
    let mut r = rng(6);
    let trials = 1_000_000;
    let mut counts = HashMap::new();
    let mut p = [0usize; 4];
    for _ in 0..trials {
        r.perm(&mut p).unwrap();
        *counts.entry(p).or_insert(0u64) += 1;
    }
    equifrequent(&counts, 24, trials);
    let mut empty: [usize; 0] = [];
    r.perm(&mut empty).unwrap();
    let mut one = [7usize];
    r.perm(&mut one).unwrap();
    assert_eq!(one, [0]);
}

#[test]
fn subsets_are_equifrequent_on_both_code_paths() {
    let mut r = rng(7);
    // (2, 4) is Floyd at 2k = n; (3, 6) likewise; (4, 6) is reservoir.
    for (k, n, categories) in [(2usize, 4usize, 6usize), (3, 6, 20), (4, 6, 15), (1, 5, 5)] {
        let trials = 1_000_000;
        let mut counts = HashMap::new();
        let mut out = vec![0usize; k];
        for _ in 0..trials {
            r.sample(n, &mut out).unwrap();
            assert!(out.windows(2).all(|w| w[0] < w[1]) && out.iter().all(|&x| x < n));
            *counts.entry(out.clone()).or_insert(0u64) += 1;
        }
        equifrequent(&counts, categories, trials);
    }
    let mut all = [0usize; 5];
    r.sample(5, &mut all).unwrap();
    assert_eq!(all, [0, 1, 2, 3, 4]);
}

#[test]
fn raw_bytes_are_little_endian_words() {
    let mut r = rng(8);
    let w = [r.clone().take_u64().unwrap(), {
        let mut c = r.clone();
        c.take_u64().unwrap();
        c.take_u64().unwrap()
    }];
    let mut b = [0u8; 16];
    r.raw(&mut b).unwrap();
    assert_eq!(&b[..8], &w[0].to_le_bytes());
    assert_eq!(&b[8..], &w[1].to_le_bytes());
    let mut s = rng(8);
    let (mut x, mut y) = ([0u8; 7], [0u8; 9]);
    s.raw(&mut x).unwrap();
    s.raw(&mut y).unwrap();
    assert_eq!(x, b[..7]);
    assert_ne!([&x[..], &y[..]].concat(), b);
    let mut none: [u8; 0] = [];
    let mut t = rng(8);
    t.raw(&mut none).unwrap();
    assert_eq!(t.take_u64().unwrap(), w[0]);
}
