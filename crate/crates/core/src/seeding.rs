//! Seed mixing and system entropy.
//!
//! A user seed and an optional spawn key are split into 32-bit words
//! (low half first) and fed to O'Neill's `seed_seq_fe128`, which hashes them
//! into a 128-bit pool and expands the pool into as many words as the engine
//! state needs.

use std::time::{SystemTime, UNIX_EPOCH};

const INIT_A: u32 = 0x43b0_d7e5;
const MULT_A: u32 = 0x931e_8875;
const INIT_B: u32 = 0x8b51_f9dd;
const MULT_B: u32 = 0x58f3_8ded;
const MIX_MULT_L: u32 = 0xca01_f9dd;
const MIX_MULT_R: u32 = 0x4973_f715;
const XSHIFT: u32 = 16;
const POOL: usize = 4;

/// The fixed-entropy seed sequence with a four-word (128-bit) pool.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedSeqFe128 {
    mixer: [u32; POOL],
}

#[inline]
fn mix(x: u32, y: u32) -> u32 {
    let r = MIX_MULT_L.wrapping_mul(x).wrapping_sub(MIX_MULT_R.wrapping_mul(y));
    r ^ (r >> XSHIFT)
}

impl SeedSeqFe128 {
    pub fn new(entropy: &[u32]) -> Self {
        let mut hash_const = INIT_A;
        let mut hash = |mut v: u32| {
            v ^= hash_const;
            hash_const = hash_const.wrapping_mul(MULT_A);
            v = v.wrapping_mul(hash_const);
            v ^ (v >> XSHIFT)
        };
        let mut mixer = [0u32; POOL];
        for (i, m) in mixer.iter_mut().enumerate() {
            *m = hash(entropy.get(i).copied().unwrap_or(0));
        }
        for src in 0..POOL {
            for dst in 0..POOL {
                if src != dst {
                    mixer[dst] = mix(mixer[dst], hash(mixer[src]));
                }
            }
        }
        for &e in entropy.iter().skip(POOL) {
            for m in mixer.iter_mut() {
                *m = mix(*m, hash(e));
            }
        }
        SeedSeqFe128 { mixer }
    }

    pub fn generate(&self, out: &mut [u32]) {
        let mut hash_const = INIT_B;
        for (i, o) in out.iter_mut().enumerate() {
            let mut v = self.mixer[i % POOL];
            v ^= hash_const;
            hash_const = hash_const.wrapping_mul(MULT_B);
            v = v.wrapping_mul(hash_const);
            *o = v ^ (v >> XSHIFT);
        }
    }
}

/// Entropy words for a seed and spawn key. A spawn key of `[0]` mixes the same
/// as an empty key, because missing pool words hash as zero.
pub fn entropy_words(seed: u64, spawn_key: &[u64]) -> Vec<u32> {
    std::iter::once(seed)
        .chain(spawn_key.iter().copied())
        .flat_map(|w| [w as u32, (w >> 32) as u32])
        .collect()
}

/// Mixes a seed and spawn key into `out_words` 64-bit words.
pub fn seed_mix(seed: u64, spawn_key: &[u64], out_words: usize) -> Vec<u64> {
    let seq = SeedSeqFe128::new(&entropy_words(seed, spawn_key));
    let mut halves = vec![0u32; 2 * out_words];
    seq.generate(&mut halves);
    halves.chunks_exact(2).map(|p| p[0] as u64 | (p[1] as u64) << 32).collect()
}

/// Where randomization entropy came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntropySource {
    /// The operating system's random number service.
    System,
    /// `/dev/urandom`.
    DeviceFile,
    /// Clock and process data; not cryptographically secure.
    ClockFallback,
}

impl EntropySource {
    pub fn is_degraded(self) -> bool {
        self == EntropySource::ClockFallback
    }
}

fn bytes_to_words(bytes: &[u8], out: &mut [u64]) {
    for (w, c) in out.iter_mut().zip(bytes.chunks_exact(8)) {
        *w = u64::from_le_bytes(c.try_into().unwrap());
    }
}

fn clock_entropy(out: &mut [u64]) {
    let now = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
    let local = 0u8;
    let addr = &local as *const u8 as u64;
    let key = [now.as_secs(), now.subsec_nanos() as u64, std::process::id() as u64, addr];
    let words = seed_mix(now.as_nanos() as u64, &key, out.len());
    out.copy_from_slice(&words);
}

/// Fills `out` with entropy, trying the system service, then `/dev/urandom`,
/// then a clock-based fallback.
pub fn system_entropy(out: &mut [u64]) -> EntropySource {
    let mut bytes = vec![0u8; 8 * out.len()];
    if getrandom::fill(&mut bytes).is_ok() {
        bytes_to_words(&bytes, out);
        return EntropySource::System;
    }
    if let Ok(mut f) = std::fs::File::open("/dev/urandom") {
        use std::io::Read;
        if f.read_exact(&mut bytes).is_ok() {
            bytes_to_words(&bytes, out);
            return EntropySource::DeviceFile;
        }
    }
    clock_entropy(out);
    EntropySource::ClockFallback
}
