//! Jump polynomials for the GF(2)-linear engines.
//!
//! For a linear transition T on n state bits with characteristic polynomial P,
//! T^N = p(T) where p = x^N mod P has degree below n. Applying p to a state
//! takes n steps and n/2 state xors on average. P is recovered with
//! Berlekamp-Massey from 2n bits of one state position.
//!
//! The polynomials used at runtime live in `data/jump_polynomials.txt`, which is
//! generated by [`render_table`] and verified by tests.

use std::sync::OnceLock;

use crate::engine::{EngineId, LinearTransition, Xoroshiro128PlusPlus, Xorshift128Plus, Xoshiro256};
use crate::error::{Error, Result};
use crate::gf2::{self, Poly};

/// Lane k of an interleaved xoshiro engine is offset by k * 2^LANE_EXPONENT steps.
pub const LANE_EXPONENT: u32 = 253;

/// Exponents accepted by [`Rng::jump`](crate::Rng::jump).
pub const JUMP_EXPONENTS: [u32; 5] = [32, 64, 96, 128, 192];

const TABLE_TEXT: &str = include_str!("../data/jump_polynomials.txt");
const TABLE_FORMAT: u32 = 1;

/// The distinct linear transitions. xoshiro256++ and xoshiro256** share one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinearEngine {
    Xoshiro256,
    Xorshift128Plus,
    Xoroshiro128,
}

impl LinearEngine {
    pub const ALL: [LinearEngine; 3] =
        [LinearEngine::Xoshiro256, LinearEngine::Xorshift128Plus, LinearEngine::Xoroshiro128];

    pub fn of(id: EngineId) -> Option<LinearEngine> {
        match id {
            EngineId::X256PlusPlus
            | EngineId::X256StarStar
            | EngineId::X256PlusPlusSimd
            | EngineId::X256StarStarSimd => Some(LinearEngine::Xoshiro256),
            EngineId::X128Plus => Some(LinearEngine::Xorshift128Plus),
            EngineId::XoroPlusPlus => Some(LinearEngine::Xoroshiro128),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LinearEngine::Xoshiro256 => "xoshiro256",
            LinearEngine::Xorshift128Plus => "xorshift128+",
            LinearEngine::Xoroshiro128 => "xoroshiro128",
        }
    }

    fn from_name(s: &str) -> Option<LinearEngine> {
        LinearEngine::ALL.into_iter().find(|e| e.name() == s)
    }

    pub fn state_bits(self) -> usize {
        match self {
            LinearEngine::Xoshiro256 => Xoshiro256::STATE_BITS,
            LinearEngine::Xorshift128Plus => Xorshift128Plus::STATE_BITS,
            LinearEngine::Xoroshiro128 => Xoroshiro128PlusPlus::STATE_BITS,
        }
    }

    /// Exponents with committed polynomials.
    pub fn committed_exponents(self) -> &'static [u32] {
        match self {
            LinearEngine::Xoshiro256 => &[32, 64, 96, 128, 192, LANE_EXPONENT],
            _ => &[32, 64, 96],
        }
    }

    /// Characteristic polynomial of the transition, degree `state_bits`.
    pub fn characteristic_polynomial(self) -> Poly {
        match self {
            LinearEngine::Xoshiro256 => charpoly(Xoshiro256 { s: [1, 0, 0, 0] }),
            LinearEngine::Xorshift128Plus => charpoly(Xorshift128Plus { s: [1, 0] }),
            LinearEngine::Xoroshiro128 => charpoly(Xoroshiro128PlusPlus { s: [1, 0] }),
        }
    }
}

fn charpoly<T: LinearTransition>(mut s: T) -> Poly {
    let seq: Vec<bool> = (0..2 * T::STATE_BITS)
        .map(|_| {
            let b = s.low_bit();
            s.step();
            b
        })
        .collect();
    let p = gf2::minimal_polynomial(&seq);
    assert_eq!(gf2::degree(&p), Some(T::STATE_BITS), "sequence does not determine the characteristic polynomial");
    p
}

/// Coefficients of a jump polynomial for one engine and one step count 2^exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpPolynomial {
    pub engine: LinearEngine,
    pub exponent: u32,
    /// Exactly `state_bits / 64` words.
    pub coeffs: Vec<u64>,
}

fn pad(engine: LinearEngine, p: Poly) -> Vec<u64> {
    let mut v = p;
    v.resize(engine.state_bits() / 64, 0);
    v
}

/// Polynomial for 2^k steps, computed from scratch.
pub fn compute_jump_polynomial(engine: LinearEngine, k: u32) -> JumpPolynomial {
    let cp = engine.characteristic_polynomial();
    JumpPolynomial { engine, exponent: k, coeffs: pad(engine, gf2::x_pow2_mod(k, &cp)) }
}

/// Polynomial for an arbitrary step count `n`.
pub fn polynomial_for_steps(engine: LinearEngine, n: u128) -> Vec<u64> {
    let cp = engine.characteristic_polynomial();
    pad(engine, gf2::x_pow_mod(n, &cp))
}

/// Evaluates p(T) on `state`: the state after as many steps as `p` encodes.
pub fn apply<T: LinearTransition>(state: &T, coeffs: &[u64]) -> T {
    let mut acc = T::zeroed();
    let mut s = state.clone();
    for i in 0..T::STATE_BITS {
        if gf2::bit(coeffs, i) {
            acc.xor_assign(&s);
        }
        s.step();
    }
    acc
}

/// Parsed contents of the committed polynomial table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpTable {
    pub charpolys: Vec<(LinearEngine, Poly)>,
    pub jumps: Vec<JumpPolynomial>,
}

impl JumpTable {
    pub fn get(&self, engine: LinearEngine, k: u32) -> Option<&JumpPolynomial> {
        self.jumps.iter().find(|j| j.engine == engine && j.exponent == k)
    }

    pub fn charpoly(&self, engine: LinearEngine) -> Option<&Poly> {
        self.charpolys.iter().find(|(e, _)| *e == engine).map(|(_, p)| p)
    }
}

fn hex_words(w: &[u64]) -> String {
    w.iter().map(|x| format!("{x:#018x}")).collect::<Vec<_>>().join(",")
}

/// Regenerates the table file contents.
pub fn render_table() -> String {
    let mut body = String::new();
    body.push_str("# GF(2) jump polynomials. Coefficient i is bit i % 64 of word i / 64.\n");
    body.push_str("# `jump E k` gives p with p(T) = T^(2^k); regenerate with `rngpack jumptable --write`.\n");
    body.push_str(&format!("format {TABLE_FORMAT}\n"));
    for engine in LinearEngine::ALL {
        let cp = engine.characteristic_polynomial();
        body.push_str(&format!("charpoly {} {}\n", engine.name(), hex_words(&cp)));
        for &k in engine.committed_exponents() {
            let p = pad(engine, gf2::x_pow2_mod(k, &cp));
            body.push_str(&format!("jump {} {} {}\n", engine.name(), k, hex_words(&p)));
        }
    }
    let crc = crc32fast::hash(body.as_bytes());
    body.push_str(&format!("crc32 {crc:#010x}\n"));
    body
}

fn malformed(line: usize, what: &str) -> Error {
    Error::Malformed(format!("jump table line {line}: {what}"))
}

fn parse_words(s: &str, line: usize) -> Result<Vec<u64>> {
    s.split(',')
        .map(|h| {
            u64::from_str_radix(h.trim_start_matches("0x"), 16).map_err(|_| malformed(line, "bad hex word"))
        })
        .collect()
}

pub fn parse_table(text: &str) -> Result<JumpTable> {
    let crc_at = text.rfind("crc32 ").ok_or_else(|| Error::Malformed("jump table has no checksum".into()))?;
    let (body, tail) = text.split_at(crc_at);
    let stated = u32::from_str_radix(tail["crc32 ".len()..].trim().trim_start_matches("0x"), 16)
        .map_err(|_| Error::Malformed("jump table checksum is not hex".into()))?;
    if crc32fast::hash(body.as_bytes()) != stated {
        return Err(Error::ChecksumMismatch);
    }
    let mut table = JumpTable { charpolys: vec![], jumps: vec![] };
    let mut format_seen = false;
    for (n, line) in body.lines().enumerate() {
        let line_no = n + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.as_slice() {
            ["format", v] => {
                if v.parse::<u32>().ok() != Some(TABLE_FORMAT) {
                    return Err(malformed(line_no, "unsupported format"));
                }
                format_seen = true;
            }
            ["charpoly", e, words] => {
                let engine = LinearEngine::from_name(e).ok_or_else(|| malformed(line_no, "unknown engine"))?;
                table.charpolys.push((engine, parse_words(words, line_no)?));
            }
            ["jump", e, k, words] => {
                let engine = LinearEngine::from_name(e).ok_or_else(|| malformed(line_no, "unknown engine"))?;
                let exponent = k.parse().map_err(|_| malformed(line_no, "bad exponent"))?;
                let coeffs = parse_words(words, line_no)?;
                if coeffs.len() != engine.state_bits() / 64 {
                    return Err(malformed(line_no, "wrong coefficient count"));
                }
                table.jumps.push(JumpPolynomial { engine, exponent, coeffs });
            }
            _ => return Err(malformed(line_no, "unrecognized record")),
        }
    }
    if !format_seen {
        return Err(Error::Malformed("jump table has no format line".into()));
    }
    Ok(table)
}

/// The committed table text, as shipped.
pub fn committed_table_text() -> &'static str {
    TABLE_TEXT
}

/// The committed table, parsed once.
pub fn committed_table() -> &'static JumpTable {
    static TABLE: OnceLock<JumpTable> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(TABLE_TEXT).expect("committed jump table is valid"))
}

fn committed(engine: LinearEngine, k: u32) -> &'static [u64] {
    &committed_table().get(engine, k).expect("exponent has a committed polynomial").coeffs
}

pub(crate) fn jump_xoshiro256(s: &Xoshiro256, k: u32) -> Xoshiro256 {
    apply(s, committed(LinearEngine::Xoshiro256, k))
}

pub(crate) fn jump_xorshift128(s: &Xorshift128Plus, k: u32) -> Xorshift128Plus {
    apply(s, committed(LinearEngine::Xorshift128Plus, k))
}

pub(crate) fn jump_xoroshiro128(s: &Xoroshiro128PlusPlus, k: u32) -> Xoroshiro128PlusPlus {
    apply(s, committed(LinearEngine::Xoroshiro128, k))
}

/// Whether `k` is a supported jump exponent for `engine`.
pub(crate) fn supports(engine: LinearEngine, k: u32) -> bool {
    JUMP_EXPONENTS.contains(&k) && engine.committed_exponents().contains(&k)
}
