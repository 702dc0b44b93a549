//! Byte serialization of a whole generator.
//!
//! Layout, little-endian throughout:
//!
//! | field | size |
//! |---|---|
//! | magic `RNGK` | 4 |
//! | format version | 2 |
//! | engine id length, then ASCII id | 1 + n |
//! | flags: bit 0 bitexact, bit 1 full mantissa | 1 |
//! | engine state word count, then words | 2 + 8m |
//! | buffered word count, then words | 2 + 8b |
//! | pending half word present, then value | 1 + 4 |
//! | CRC-32 of everything above | 4 |
//!
//! Buffered words are kept, so a restored generator continues exactly where
//! the original stopped.

use crate::buffer::{Stream, CAPACITY};
use crate::engine::{EngineId, EngineState};
use crate::error::{Error, Result};
use crate::rng::{Rng, SamplerMode};

pub const MAGIC: [u8; 4] = *b"RNGK";
pub const VERSION: u16 = 1;

const FLAG_BITEXACT: u8 = 1;
const FLAG_FULL_MANTISSA: u8 = 2;

struct Reader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let s = self.data.get(self.pos..self.pos + n).ok_or(Error::Truncated)?;
        self.pos += n;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn words(&mut self) -> Result<Vec<u64>> {
        let n = self.u16()? as usize;
        let bytes = self.take(8 * n)?;
        Ok(bytes.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect())
    }
}

fn put_words(out: &mut Vec<u8>, words: &[u64]) {
    out.extend_from_slice(&(words.len() as u16).to_le_bytes());
    for w in words {
        out.extend_from_slice(&w.to_le_bytes());
    }
}

impl Rng {
    /// The complete generator state as bytes.
    pub fn serialize(&self) -> Vec<u8> {
        let id = self.engine().name();
        let mut out = Vec::with_capacity(64 + 8 * CAPACITY);
        out.extend_from_slice(&MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.push(id.len() as u8);
        out.extend_from_slice(id.as_bytes());
        let mut flags = 0;
        if self.mode.bitexact {
            flags |= FLAG_BITEXACT;
        }
        if self.mode.full_mantissa {
            flags |= FLAG_FULL_MANTISSA;
        }
        out.push(flags);
        put_words(&mut out, &self.stream.engine.to_words());
        put_words(&mut out, self.stream.buffered());
        let pending = self.stream.pending;
        out.push(pending.is_some() as u8);
        out.extend_from_slice(&pending.unwrap_or(0).to_le_bytes());
        let crc = crc32fast::hash(&out);
        out.extend_from_slice(&crc.to_le_bytes());
        out
    }

    /// Rebuilds a generator from [`serialize`](Rng::serialize) output.
    ///
    /// Checks run in order: length, magic, version, checksum, then contents.
    pub fn deserialize(data: &[u8]) -> Result<Rng> {
        // Magic, version, id length, flags, two counts, pending, crc.
        const MIN_LEN: usize = 4 + 2 + 1 + 1 + 2 + 2 + 5 + 4;
        if data.len() < MIN_LEN {
            return Err(Error::Truncated);
        }
        if data[..4] != MAGIC {
            return Err(Error::BadMagic);
        }
        let version = u16::from_le_bytes([data[4], data[5]]);
        if version != VERSION {
            return Err(Error::UnsupportedVersion(version));
        }
        let (body, tail) = data.split_at(data.len() - 4);
        if crc32fast::hash(body) != u32::from_le_bytes(tail.try_into().unwrap()) {
            return Err(Error::ChecksumMismatch);
        }
        let mut r = Reader { data: body, pos: 6 };
        let id_len = r.u8()? as usize;
        let id_bytes = r.take(id_len)?;
        let id = std::str::from_utf8(id_bytes)
            .map_err(|_| Error::Malformed("engine id is not ASCII".into()))
            .and_then(EngineId::parse)?;
        let flags = r.u8()?;
        if flags & !(FLAG_BITEXACT | FLAG_FULL_MANTISSA) != 0 {
            return Err(Error::Malformed(format!("unknown flags {flags:#04x}")));
        }
        let state = r.words()?;
        let buffered = r.words()?;
        if buffered.len() > CAPACITY {
            return Err(Error::Malformed(format!("{} buffered words exceed capacity {CAPACITY}", buffered.len())));
        }
        let pending = match (r.u8()?, r.u32()?) {
            (0, _) => None,
            (1, v) => Some(v),
            (p, _) => return Err(Error::Malformed(format!("bad pending marker {p}"))),
        };
        if r.pos != body.len() {
            return Err(Error::Malformed(format!("{} trailing bytes", body.len() - r.pos)));
        }
        let mut stream = Stream::new(EngineState::from_words(id, &state)?);
        stream.restore(&buffered, pending);
        Ok(Rng {
            stream,
            mode: SamplerMode { bitexact: flags & FLAG_BITEXACT != 0, full_mantissa: flags & FLAG_FULL_MANTISSA != 0 },
            last_error: String::new(),
        })
    }
}
