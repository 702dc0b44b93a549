//! Frozen sampler digests. After an intentional stream change, regenerate with
//! `RNGPACK_BLESS=1 cargo test -p rngpack-quality --test reproducibility`.

use rngpack::{EngineId, Rng};
use rngpack_quality::digest::{compute, mismatches, N, SEED};

#[test]
fn outputs_match_frozen_digests() {
    if std::env::var_os("RNGPACK_BLESS").is_some() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/repro_digests.json");
        std::fs::write(path, serde_json::to_string_pretty(&compute()).unwrap() + "\n").unwrap();
        return;
    }
    let bad = mismatches();
    assert!(bad.is_empty(), "changed streams: {bad:?}");
}

#[test]
fn digest_set_covers_every_engine() {
    let d = compute();
    assert_eq!(d.len(), 14 * 9 + 3 * 2 * 17);
    for e in EngineId::ALL {
        assert!(d.contains_key(&format!("{} norm", e.name())));
    }
}

#[test]
fn exact_samplers_do_not_depend_on_the_mode() {
    for e in [EngineId::X256PlusPlus, EngineId::ChaCha20] {
        let mut a = Rng::seeded(e, SEED, &[]);
        let mut b = Rng::seeded(e, SEED, &[]);
        b.set_bitexact(true);
        let (mut x, mut y) = (vec![0.0; N], vec![0.0; N]);
        a.u01(&mut x).unwrap();
        b.u01(&mut y).unwrap();
        assert_eq!(x, y);
        a.norm(&mut x).unwrap();
        b.norm(&mut y).unwrap();
        assert_eq!(x, y);
        a.exp(&mut x, 1.0).unwrap();
        b.exp(&mut y, 1.0).unwrap();
        assert_eq!(x, y);
    }
}
