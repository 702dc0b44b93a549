//! The word buffer between engines and samplers.
//!
//! Samplers pull words through [`WordSource`], so they run unchanged on a live
//! generator or on a scripted word list ([`Replay`]). Both share the 32-bit
//! rule: a 64-bit word splits into two 32-bit halves, low half first, and a
//! pending high half is dropped when a full 64-bit word is requested.

use crate::engine::EngineState;
use crate::error::{Error, Result};

/// Buffer capacity in words; a multiple of 72, so every engine chunk size divides it.
pub const CAPACITY: usize = 144;

pub trait WordSource {
    /// The next raw word, ignoring any pending half.
    fn next_word(&mut self) -> Result<u64>;

    /// Slot for the unconsumed high half of the last word split by [`take_u32`](Self::take_u32).
    fn pending_half(&mut self) -> &mut Option<u32>;

    #[inline(always)]
    fn take_u64(&mut self) -> Result<u64> {
        *self.pending_half() = None;
        self.next_word()
    }

    #[inline(always)]
    fn take_u32(&mut self) -> Result<u32> {
        if let Some(h) = self.pending_half().take() {
            return Ok(h);
        }
        let w = self.next_word()?;
        *self.pending_half() = Some((w >> 32) as u32);
        Ok(w as u32)
    }

    fn take_bulk(&mut self, out: &mut [u64]) -> Result<()> {
        *self.pending_half() = None;
        for w in out {
            *w = self.next_word()?;
        }
        Ok(())
    }
}

/// Engine plus buffered output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stream {
    pub(crate) engine: EngineState,
    pub(crate) words: Box<[u64; CAPACITY]>,
    pub(crate) pos: usize,
    pub(crate) len: usize,
    pub(crate) pending: Option<u32>,
}

impl Stream {
    pub fn new(engine: EngineState) -> Self {
        Stream { engine, words: Box::new([0; CAPACITY]), pos: 0, len: 0, pending: None }
    }

    /// Drops all buffered output.
    pub fn clear(&mut self) {
        self.pos = 0;
        self.len = 0;
        self.pending = None;
    }

    /// Words still buffered, in consumption order.
    pub fn buffered(&self) -> &[u64] {
        &self.words[self.pos..self.len]
    }

    pub(crate) fn restore(&mut self, buffered: &[u64], pending: Option<u32>) {
        self.words[..buffered.len()].copy_from_slice(buffered);
        self.pos = 0;
        self.len = buffered.len();
        self.pending = pending;
    }

    /// `out[i] = f(word i)` over whole words, a buffered slice at a time.
    #[inline]
    pub fn map_words<T>(&mut self, out: &mut [T], f: impl Fn(u64) -> T) -> Result<()> {
        self.pending = None;
        let mut done = 0;
        while done < out.len() {
            if self.pos == self.len {
                self.refill()?;
            }
            let n = (self.len - self.pos).min(out.len() - done);
            for (o, &w) in out[done..done + n].iter_mut().zip(&self.words[self.pos..self.pos + n]) {
                *o = f(w);
            }
            self.pos += n;
            done += n;
        }
        Ok(())
    }

    #[cold]
    fn refill(&mut self) -> Result<()> {
        let n = self.engine.fill(&mut self.words[..]);
        self.pos = 0;
        self.len = n;
        if n == 0 {
            return Err(Error::StreamExhausted);
        }
        Ok(())
    }
}

impl WordSource for Stream {
    #[inline(always)]
    fn next_word(&mut self) -> Result<u64> {
        if self.pos == self.len {
            self.refill()?;
        }
        let w = self.words[self.pos];
        self.pos += 1;
        Ok(w)
    }

    fn pending_half(&mut self) -> &mut Option<u32> {
        &mut self.pending
    }

    fn take_bulk(&mut self, out: &mut [u64]) -> Result<()> {
        self.pending = None;
        let mut done = 0;
        while done < out.len() {
            if self.pos == self.len {
                let rest = out.len() - done;
                if rest >= CAPACITY {
                    // Fill straight into the output; equivalent to refilling and copying.
                    let span = rest / CAPACITY * CAPACITY;
                    let n = self.engine.fill(&mut out[done..done + span]);
                    done += n;
                    if n < span {
                        return Err(Error::StreamExhausted);
                    }
                    continue;
                }
                self.refill()?;
            }
            let n = (self.len - self.pos).min(out.len() - done);
            out[done..done + n].copy_from_slice(&self.words[self.pos..self.pos + n]);
            self.pos += n;
            done += n;
        }
        Ok(())
    }
}

/// A scripted word source for replaying known words through a sampler.
#[derive(Clone, Debug)]
pub struct Replay<'a> {
    words: &'a [u64],
    pos: usize,
    pending: Option<u32>,
}

impl<'a> Replay<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        Replay { words, pos: 0, pending: None }
    }

    /// Number of whole words consumed so far.
    pub fn consumed(&self) -> usize {
        self.pos
    }
}

impl WordSource for Replay<'_> {
    fn next_word(&mut self) -> Result<u64> {
        let w = *self.words.get(self.pos).ok_or(Error::StreamExhausted)?;
        self.pos += 1;
        Ok(w)
    }

    fn pending_half(&mut self) -> &mut Option<u32> {
        &mut self.pending
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_low_first_and_dropped_by_u64() {
        let words = [0x1111_1111_2222_2222, 0x3333_3333_4444_4444, 5];
        let mut r = Replay::new(&words);
        assert_eq!(r.take_u32().unwrap(), 0x2222_2222);
        assert_eq!(r.take_u64().unwrap(), 0x3333_3333_4444_4444);
        assert_eq!(r.take_u32().unwrap(), 5);
        assert_eq!(r.take_u32().unwrap(), 0);
        assert!(r.take_u32().is_err());
    }
}
