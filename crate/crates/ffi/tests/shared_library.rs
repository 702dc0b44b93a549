//! Builds a C program against the header and the shared library, then checks
//! its output and checkpoint against the native library in this process.

use std::path::{Path, PathBuf};
use std::process::Command;

use rngpack::{EngineId, Rng};

fn library_dir() -> PathBuf {
    // Integration tests run from target/<profile>/deps, next to the cdylib.
    std::env::current_exe().unwrap().parent().unwrap().to_path_buf()
}

fn compile(dir: &Path) -> Option<PathBuf> {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = dir.join("roundtrip");
    let lib = library_dir();
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg(crate_dir.join("tests/c/roundtrip.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(format!("-L{}", lib.display()))
        .arg(format!("-Wl,-rpath,{}", lib.display()))
        .args(["-lrngpack_ffi", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .status();
    match status {
        Ok(s) => {
            assert!(s.success(), "C compilation failed");
            Some(exe)
        }
        Err(e) => {
            eprintln!("skipped: no C compiler ({e})");
            None
        }
    }
}

fn bits(lines: &[&str]) -> Vec<f64> {
    lines.iter().map(|l| f64::from_bits(u64::from_str_radix(l, 16).unwrap())).collect()
}

#[test]
#[cfg(unix)]
fn c_program_matches_native_and_checkpoint_resumes() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&dir).unwrap();
    let Some(exe) = compile(&dir) else { return };
    let checkpoint = dir.join("checkpoint.bin");
    let out = Command::new(&exe).arg(&checkpoint).output().unwrap();
    assert!(out.status.success(), "exit {:?}: {}", out.status, String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("error unknown engine"), "{}", lines[0]);

    let mut rng = Rng::seeded(EngineId::parse("x256++simd").unwrap(), 42, &[]);
    let mut u = vec![0.0; 100];
    rng.u01(&mut u).unwrap();
    assert_eq!(bits(&lines[1..101]), u);

    // The checkpoint crosses a process boundary before resuming here.
    let mut resumed = Rng::deserialize(&std::fs::read(&checkpoint).unwrap()).unwrap();
    let mut g = vec![0.0; 50];
    resumed.gamma(&mut g, 0.7, 2.0).unwrap();
    assert_eq!(bits(&lines[101..151]), g);
}
