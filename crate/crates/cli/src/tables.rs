//! `jumptable` and `zigtables`: regenerate the committed tables and compare.

use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use rngpack::jump;
use rngpack::ziggurat::precompute;

use crate::error::{CliError, CliResult};

#[derive(Args, Clone, Debug)]
pub struct TableArgs {
    /// Write the regenerated table to this file instead of stdout.
    #[arg(long, conflicts_with = "check")]
    pub write: Option<PathBuf>,
    /// Compare the regenerated table with a file, or with the built-in copy
    /// when no file is given. Differences exit with status 1.
    #[arg(long)]
    pub check: Option<Option<PathBuf>>,
}

#[derive(Args, Clone, Debug)]
pub struct ZigArgs {
    #[command(flatten)]
    pub table: TableArgs,
    /// Emit the Rust source of the gap tables instead of the text dump.
    #[arg(long)]
    pub source: bool,
}

fn emit(args: &TableArgs, what: &str, fresh: &str, builtin: &str, out: &mut dyn Write) -> CliResult {
    if let Some(path) = &args.write {
        std::fs::write(path, fresh)?;
        writeln!(out, "wrote {} ({} bytes)", path.display(), fresh.len())?;
        return Ok(());
    }
    if let Some(path) = &args.check {
        let (label, committed) = match path {
            None => ("built-in copy".to_string(), builtin.to_string()),
            Some(p) => (p.display().to_string(), std::fs::read_to_string(p)?),
        };
        if committed != fresh {
            let line = committed.lines().zip(fresh.lines()).position(|(a, b)| a != b).map_or(
                committed.lines().count().min(fresh.lines().count()) + 1,
                |i| i + 1,
            );
            return Err(CliError::Runtime(format!("{what} differs from {label} at line {line}")));
        }
        writeln!(out, "{what} matches {label}")?;
        return Ok(());
    }
    out.write_all(fresh.as_bytes())?;
    Ok(())
}

pub fn run_jump(args: &TableArgs, out: &mut dyn Write) -> CliResult {
    emit(args, "jump table", &jump::render_table(), jump::committed_table_text(), out)
}

pub fn run_zig(args: &ZigArgs, out: &mut dyn Write) -> CliResult {
    if args.source {
        emit(&args.table, "gap table source", &precompute::render_gap_source(), precompute::committed_gap_source(), out)
    } else {
        emit(&args.table, "ziggurat table dump", &precompute::render_text_dump(), precompute::committed_text_dump(), out)
    }
}
