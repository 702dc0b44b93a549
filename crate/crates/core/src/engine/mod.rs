//! Engines: state layouts, transitions and raw 64-bit output.
//!
//! Every engine is a plain value type. [`EngineState`] wraps them in a tagged
//! union so the rest of the library can treat all of them uniformly through the
//! word buffer.

mod chacha;
mod cwg128;
mod interleaved;
mod pcg64;
mod philox;
mod ranlux;
mod sfc64;
mod squares;
mod xoshiro;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use chacha::ChaCha20;
pub use cwg128::Cwg128;
pub use interleaved::{Sfc64x8, Xoshiro256x8, LANES};
pub use pcg64::Pcg64Dxsm;
pub use philox::Philox4x64;
pub use ranlux::{Ranluxpp, RANLUX_MODULUS, RANLUX_MULTIPLIER};
pub use sfc64::Sfc64;
pub use squares::Squares64;
pub use xoshiro::{Xoroshiro128PlusPlus, Xorshift128Plus, Xoshiro256};

/// A state transition that is linear over GF(2).
///
/// Jump polynomials are computed and applied through this interface: `step`
/// advances one state without producing output, `xor_assign` adds two states.
pub trait LinearTransition: Clone {
    const STATE_BITS: usize;
    fn step(&mut self);
    fn xor_assign(&mut self, other: &Self);
    fn zeroed() -> Self;
    /// One fixed bit of the state; its sequence under `step` determines the
    /// characteristic polynomial.
    fn low_bit(&self) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum EngineId {
    X256PlusPlus,
    X256StarStar,
    X128Plus,
    XoroPlusPlus,
    Pcg64,
    Squares,
    Philox,
    Sfc64,
    Cwg128,
    Ranluxpp,
    ChaCha20,
    #[default]
    X256PlusPlusSimd,
    X256StarStarSimd,
    Sfc64Simd,
}

impl EngineId {
    pub const ALL: [EngineId; 14] = [
        EngineId::X256PlusPlus,
        EngineId::X256StarStar,
        EngineId::X128Plus,
        EngineId::XoroPlusPlus,
        EngineId::Pcg64,
        EngineId::Squares,
        EngineId::Philox,
        EngineId::Sfc64,
        EngineId::Cwg128,
        EngineId::Ranluxpp,
        EngineId::ChaCha20,
        EngineId::X256PlusPlusSimd,
        EngineId::X256StarStarSimd,
        EngineId::Sfc64Simd,
    ];

    /// Canonical lower-case identifier.
    pub fn name(self) -> &'static str {
        self.info().id
    }

    /// Parses an identifier, ignoring ASCII case. The empty string and `"0"`
    /// select the default engine.
    pub fn parse(s: &str) -> Result<EngineId> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(EngineId::default());
        }
        CATALOGUE
            .iter()
            .find(|e| e.id.eq_ignore_ascii_case(t))
            .map(|e| e.engine)
            .ok_or_else(|| Error::UnknownEngine(s.to_string()))
    }

    pub fn info(self) -> &'static EngineInfo {
        &CATALOGUE[self as usize]
    }

    pub fn state_words(self) -> usize {
        self.info().state_words
    }

    /// Words produced per engine invocation; the buffer refills in multiples of this.
    pub fn chunk(self) -> usize {
        match self {
            EngineId::Ranluxpp => 9,
            EngineId::ChaCha20
            | EngineId::X256PlusPlusSimd
            | EngineId::X256StarStarSimd
            | EngineId::Sfc64Simd => 8,
            EngineId::Philox => 4,
            _ => 1,
        }
    }

    pub fn is_interleaved(self) -> bool {
        matches!(
            self,
            EngineId::X256PlusPlusSimd | EngineId::X256StarStarSimd | EngineId::Sfc64Simd
        )
    }
}

impl fmt::Display for EngineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EngineId::parse(s)
    }
}

/// One row of the engine catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineInfo {
    pub engine: EngineId,
    pub id: &'static str,
    pub name: &'static str,
    pub authors: &'static str,
    pub year: u16,
    pub state_words: usize,
    pub period: &'static str,
}

const fn entry(
    engine: EngineId,
    id: &'static str,
    name: &'static str,
    authors: &'static str,
    year: u16,
    state_words: usize,
    period: &'static str,
) -> EngineInfo {
    EngineInfo { engine, id, name, authors, year, state_words, period }
}

static CATALOGUE: [EngineInfo; 14] = [
    entry(EngineId::X256PlusPlus, "x256++", "xoshiro256++", "Vigna and Blackman", 2019, 4, "2^256-1"),
    entry(EngineId::X256StarStar, "x256**", "xoshiro256**", "Vigna and Blackman", 2018, 4, "2^256-1"),
    entry(EngineId::X128Plus, "x128+", "xorshift128+", "Vigna", 2014, 2, "2^128-1"),
    entry(EngineId::XoroPlusPlus, "xoro++", "xoroshiro128++", "Vigna and Blackman", 2019, 2, "2^128-1"),
    entry(EngineId::Pcg64, "pcg64", "PCG64 DXSM", "O'Neill", 2019, 4, "2^128 per increment"),
    entry(EngineId::Squares, "squares", "squares64", "Widynski", 2021, 2, "2^64 per key"),
    entry(EngineId::Philox, "philox", "Philox-4x64", "Salmon and Moraes", 2011, 6, "2^256 per key"),
    entry(EngineId::Sfc64, "sfc64", "sfc64", "Chris Doty-Humphrey", 2010, 4, ">= 2^64"),
    entry(EngineId::Cwg128, "cwg128", "cwg128", "Działa", 2022, 8, "2^128 per increment"),
    entry(EngineId::Ranluxpp, "ranlux++", "ranlux++", "Sibidanov", 2017, 9, "about 2^570"),
    entry(EngineId::ChaCha20, "chacha20", "ChaCha20", "Bernstein", 2008, 6, "2^35 words per nonce"),
    entry(
        EngineId::X256PlusPlusSimd,
        "x256++simd",
        "xoshiro256++, 8 interleaved lanes",
        "Vigna and Blackman",
        2019,
        32,
        "2^256-1 per lane",
    ),
    entry(
        EngineId::X256StarStarSimd,
        "x256**simd",
        "xoshiro256**, 8 interleaved lanes",
        "Vigna and Blackman",
        2018,
        32,
        "2^256-1 per lane",
    ),
    entry(
        EngineId::Sfc64Simd,
        "sfc64simd",
        "sfc64, 8 interleaved lanes",
        "Chris Doty-Humphrey",
        2010,
        32,
        ">= 2^64 per lane",
    ),
];

/// The supported engines with short descriptions, in identifier order.
pub fn engines() -> &'static [EngineInfo] {
    &CATALOGUE
}

/// Internal state of any engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineState {
    X256PlusPlus(Xoshiro256),
    X256StarStar(Xoshiro256),
    X128Plus(Xorshift128Plus),
    XoroPlusPlus(Xoroshiro128PlusPlus),
    Pcg64(Pcg64Dxsm),
    Squares(Squares64),
    Philox(Philox4x64),
    Sfc64(Sfc64),
    Cwg128(Cwg128),
    Ranluxpp(Ranluxpp),
    ChaCha20(ChaCha20),
    X256PlusPlusSimd(Xoshiro256x8),
    X256StarStarSimd(Xoshiro256x8),
    Sfc64Simd(Sfc64x8),
}

fn check_len(id: EngineId, words: &[u64]) -> Result<()> {
    if words.len() != id.state_words() {
        return Err(Error::InvalidState(format!(
            "{} expects {} state words, got {}",
            id,
            id.state_words(),
            words.len()
        )));
    }
    Ok(())
}

fn nonzero(id: EngineId, words: &[u64]) -> Result<()> {
    if words.iter().all(|&w| w == 0) {
        return Err(Error::InvalidState(format!("{id} state must not be all zero")));
    }
    Ok(())
}

fn x256(w: &[u64]) -> Xoshiro256 {
    Xoshiro256 { s: [w[0], w[1], w[2], w[3]] }
}

impl EngineState {
    pub fn id(&self) -> EngineId {
        match self {
            EngineState::X256PlusPlus(_) => EngineId::X256PlusPlus,
            EngineState::X256StarStar(_) => EngineId::X256StarStar,
            EngineState::X128Plus(_) => EngineId::X128Plus,
            EngineState::XoroPlusPlus(_) => EngineId::XoroPlusPlus,
            EngineState::Pcg64(_) => EngineId::Pcg64,
            EngineState::Squares(_) => EngineId::Squares,
            EngineState::Philox(_) => EngineId::Philox,
            EngineState::Sfc64(_) => EngineId::Sfc64,
            EngineState::Cwg128(_) => EngineId::Cwg128,
            EngineState::Ranluxpp(_) => EngineId::Ranluxpp,
            EngineState::ChaCha20(_) => EngineId::ChaCha20,
            EngineState::X256PlusPlusSimd(_) => EngineId::X256PlusPlusSimd,
            EngineState::X256StarStarSimd(_) => EngineId::X256StarStarSimd,
            EngineState::Sfc64Simd(_) => EngineId::Sfc64Simd,
        }
    }

    /// Installs an exact state, rejecting words that violate the engine's invariants.
    pub fn from_words(id: EngineId, w: &[u64]) -> Result<EngineState> {
        check_len(id, w)?;
        Ok(match id {
            EngineId::X256PlusPlus => {
                nonzero(id, w)?;
                EngineState::X256PlusPlus(x256(w))
            }
            EngineId::X256StarStar => {
                nonzero(id, w)?;
                EngineState::X256StarStar(x256(w))
            }
            EngineId::X128Plus => {
                nonzero(id, w)?;
                EngineState::X128Plus(Xorshift128Plus { s: [w[0], w[1]] })
            }
            EngineId::XoroPlusPlus => {
                nonzero(id, w)?;
                EngineState::XoroPlusPlus(Xoroshiro128PlusPlus { s: [w[0], w[1]] })
            }
            EngineId::Pcg64 => EngineState::Pcg64(Pcg64Dxsm::from_words(w)?),
            EngineId::Squares => EngineState::Squares(Squares64 { counter: w[0], key: w[1] }),
            EngineId::Philox => EngineState::Philox(Philox4x64 {
                counter: [w[0], w[1], w[2], w[3]],
                key: [w[4], w[5]],
            }),
            EngineId::Sfc64 => EngineState::Sfc64(Sfc64 { a: w[0], b: w[1], c: w[2], counter: w[3] }),
            EngineId::Cwg128 => EngineState::Cwg128(Cwg128::from_words(w)?),
            EngineId::Ranluxpp => EngineState::Ranluxpp(Ranluxpp::from_words(w)?),
            EngineId::ChaCha20 => EngineState::ChaCha20(ChaCha20::from_words(w)),
            EngineId::X256PlusPlusSimd => EngineState::X256PlusPlusSimd(Xoshiro256x8::from_words(w)?),
            EngineId::X256StarStarSimd => EngineState::X256StarStarSimd(Xoshiro256x8::from_words(w)?),
            EngineId::Sfc64Simd => EngineState::Sfc64Simd(Sfc64x8::from_words(w)),
        })
    }

    /// Builds a state from mixed seed words, applying the repair rules: an
    /// all-zero xor-family state gets word 0 set to 1, odd-increment engines get
    /// the low increment bit forced, a chacha20 block counter starts at zero and
    /// a ranlux++ residue is reduced modulo m. Interleaved engines seed lane 0
    /// and derive the other lanes from it.
    pub fn from_seed_words(id: EngineId, mixed: &[u64]) -> EngineState {
        let base = match id {
            EngineId::X256PlusPlusSimd | EngineId::X256StarStarSimd | EngineId::Sfc64Simd => 4,
            _ => id.state_words(),
        };
        let mut w = mixed[..base].to_vec();
        match id {
            EngineId::X256PlusPlus
            | EngineId::X256StarStar
            | EngineId::X128Plus
            | EngineId::XoroPlusPlus
            | EngineId::X256PlusPlusSimd
            | EngineId::X256StarStarSimd => {
                if w.iter().all(|&x| x == 0) {
                    w[0] = 1;
                }
            }
            EngineId::Pcg64 => w[2] |= 1,
            EngineId::Cwg128 => w[6] |= 1,
            EngineId::ChaCha20 => w[4] &= !0xffff_ffff,
            EngineId::Ranluxpp => return EngineState::Ranluxpp(Ranluxpp::from_seed_words(&w)),
            _ => {}
        }
        match id {
            EngineId::X256PlusPlusSimd => EngineState::X256PlusPlusSimd(Xoshiro256x8::from_base(x256(&w))),
            EngineId::X256StarStarSimd => EngineState::X256StarStarSimd(Xoshiro256x8::from_base(x256(&w))),
            EngineId::Sfc64Simd => EngineState::Sfc64Simd(Sfc64x8::from_base(Sfc64 {
                a: w[0],
                b: w[1],
                c: w[2],
                counter: w[3],
            })),
            _ => EngineState::from_words(id, &w).expect("repaired seed state is valid"),
        }
    }

    pub fn to_words(&self) -> Vec<u64> {
        match self {
            EngineState::X256PlusPlus(g) | EngineState::X256StarStar(g) => g.s.to_vec(),
            EngineState::X128Plus(g) => g.s.to_vec(),
            EngineState::XoroPlusPlus(g) => g.s.to_vec(),
            EngineState::Pcg64(g) => g.to_words().to_vec(),
            EngineState::Squares(g) => vec![g.counter, g.key],
            EngineState::Philox(g) => {
                let mut v = g.counter.to_vec();
                v.extend_from_slice(&g.key);
                v
            }
            EngineState::Sfc64(g) => vec![g.a, g.b, g.c, g.counter],
            EngineState::Cwg128(g) => g.to_words().to_vec(),
            EngineState::Ranluxpp(g) => g.x.to_vec(),
            EngineState::ChaCha20(g) => g.to_words().to_vec(),
            EngineState::X256PlusPlusSimd(g) | EngineState::X256StarStarSimd(g) => g.to_words(),
            EngineState::Sfc64Simd(g) => g.to_words(),
        }
    }

    /// Writes raw words into `out`, whose length must be a multiple of the
    /// engine chunk. Returns the number of words written, which is short only
    /// when a chacha20 stream runs out of blocks.
    pub fn fill(&mut self, out: &mut [u64]) -> usize {
        debug_assert_eq!(out.len() % self.id().chunk(), 0);
        match self {
            EngineState::X256PlusPlus(g) => g.fill_plusplus(out),
            EngineState::X256StarStar(g) => g.fill_starstar(out),
            EngineState::X128Plus(g) => out.iter_mut().for_each(|w| *w = g.next_u64()),
            EngineState::XoroPlusPlus(g) => out.iter_mut().for_each(|w| *w = g.next_u64()),
            EngineState::Pcg64(g) => out.iter_mut().for_each(|w| *w = g.next_u64()),
            EngineState::Squares(g) => out.iter_mut().for_each(|w| *w = g.next_u64()),
            EngineState::Philox(g) => out.chunks_exact_mut(4).for_each(|c| c.copy_from_slice(&g.next_block())),
            EngineState::Sfc64(g) => g.fill(out),
            EngineState::Cwg128(g) => out.iter_mut().for_each(|w| *w = g.next_u64()),
            EngineState::Ranluxpp(g) => out.chunks_exact_mut(9).for_each(|c| c.copy_from_slice(&g.next_block())),
            EngineState::ChaCha20(g) => return g.fill(out),
            EngineState::X256PlusPlusSimd(g) => g.fill_plusplus(out),
            EngineState::X256StarStarSimd(g) => g.fill_starstar(out),
            EngineState::Sfc64Simd(g) => g.fill(out),
        }
        out.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_is_case_insensitive_and_canonical() {
        assert_eq!(EngineId::parse("RANLUX++").unwrap(), EngineId::Ranluxpp);
        assert_eq!(EngineId::parse("X256**SIMD").unwrap().name(), "x256**simd");
        assert_eq!(EngineId::parse("").unwrap(), EngineId::X256PlusPlusSimd);
        assert_eq!(EngineId::parse("0").unwrap(), EngineId::X256PlusPlusSimd);
        assert!(matches!(EngineId::parse("mt19937"), Err(Error::UnknownEngine(_))));
        assert!(EngineId::parse("xoshiro256++").is_err());
    }

    #[test]
    fn catalogue_is_indexed_by_id() {
        for (i, id) in EngineId::ALL.iter().enumerate() {
            assert_eq!(*id as usize, i);
            assert_eq!(id.info().engine, *id);
        }
    }

    #[test]
    fn chunks_divide_buffer() {
        for id in EngineId::ALL {
            assert_eq!(crate::buffer::CAPACITY % id.chunk(), 0, "{id}");
        }
    }
}
