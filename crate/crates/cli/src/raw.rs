//! `raw`: an unformatted byte stream for external test batteries.

use std::io::{ErrorKind, Write};

use clap::Args;

use crate::error::CliResult;
use crate::gen::make_rng;

#[derive(Args, Clone, Debug)]
pub struct RawArgs {
    #[arg(long, default_value = "x256++simd")]
    pub engine: String,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "")]
    pub spawn_key: String,
    /// Reverse the bit order of every 64-bit word before writing it.
    #[arg(long)]
    pub bit_reverse: bool,
    /// Stop after this many bytes; unlimited by default.
    #[arg(long)]
    pub bytes: Option<u64>,
}

/// Reverses the bits of each little-endian 64-bit word in `buf`; a trailing
/// partial word is reversed as if zero-padded.
pub fn reverse_words(buf: &mut [u8]) {
    for c in buf.chunks_mut(8) {
        let mut w = [0u8; 8];
        w[..c.len()].copy_from_slice(c);
        let r = u64::from_le_bytes(w).reverse_bits().to_le_bytes();
        let n = c.len();
        c.copy_from_slice(&r[..n]);
    }
}

const BLOCK: usize = 1 << 16;

/// Writes raw bytes until the limit or a closed pipe.
pub fn run(args: &RawArgs, out: &mut dyn Write) -> CliResult {
    let mut rng = make_rng(&args.engine, args.seed, &args.spawn_key)?;
    let mut buf = vec![0u8; BLOCK];
    let mut left = args.bytes.unwrap_or(u64::MAX);
    while left > 0 {
        let m = left.min(BLOCK as u64) as usize;
        // Whole words are drawn even when the final block is ragged, so the
        // limit only truncates the stream.
        let words = m.div_ceil(8);
        rng.raw(&mut buf[..words * 8])?;
        if args.bit_reverse {
            reverse_words(&mut buf[..words * 8]);
        }
        match out.write_all(&buf[..m]) {
            Err(e) if e.kind() == ErrorKind::BrokenPipe => return Ok(()),
            r => r?,
        }
        left -= m as u64;
    }
    match out.flush() {
        Err(e) if e.kind() == ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}
