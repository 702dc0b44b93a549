//! Buffer transparency, checkpointing, duplication, exact state access,
//! stream setters and the error slot.

use proptest::prelude::*;
use rngpack::engine::{Cwg128, Sfc64};
use rngpack::{engines, EngineId, Error, Rng};

fn words(rng: &mut Rng, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.take_u64().unwrap()).collect()
}

#[test]
fn refill_happens_at_word_145() {
    let mut rng = Rng::seeded(EngineId::X256PlusPlus, 1, &[]);
    words(&mut rng, 1);
    let after_first_fill = rng.get_state();
    words(&mut rng, 143);
    assert_eq!(rng.get_state(), after_first_fill);
    words(&mut rng, 1);
    assert_ne!(rng.get_state(), after_first_fill);
}

#[test]
fn u32_halves_are_low_then_high() {
    for id in EngineId::ALL {
        let mut a = Rng::seeded(id, 11, &[]);
        let mut b = a.clone();
        for _ in 0..300 {
            let w = a.take_u64().unwrap();
            let lo = b.take_u32().unwrap();
            let hi = b.take_u32().unwrap();
            assert_eq!(lo as u64 | (hi as u64) << 32, w, "{id}");
        }
    }
}

#[test]
fn pending_half_is_dropped_by_a_u64_request() {
    let mut a = Rng::seeded(EngineId::Pcg64, 2, &[]);
    let raw = words(&mut a.clone(), 3);
    assert_eq!(a.take_u32().unwrap(), raw[0] as u32);
    assert_eq!(a.take_u64().unwrap(), raw[1]);
    assert_eq!(a.take_u32().unwrap(), raw[2] as u32);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn any_mix_of_single_and_bulk_reads_is_the_raw_stream(
        engine in 0usize..14,
        seed in any::<u64>(),
        sizes in proptest::collection::vec(0usize..400, 1..12),
    ) {
        let id = EngineId::ALL[engine];
        let total: usize = sizes.iter().sum();
        let mut reference = Rng::seeded(id, seed, &[]);
        let raw = words(&mut reference, total);
        let mut rng = Rng::seeded(id, seed, &[]);
        let mut got = Vec::new();
        for (i, &n) in sizes.iter().enumerate() {
            if i % 2 == 0 {
                got.extend(words(&mut rng, n));
            } else {
                let mut buf = vec![0; n];
                rng.take_bulk(&mut buf).unwrap();
                got.extend(buf);
            }
        }
        prop_assert_eq!(got, raw);
    }

    #[test]
    fn serialization_roundtrips_at_any_position(engine in 0usize..14, skip in 0usize..600, half in any::<bool>()) {
        let id = EngineId::ALL[engine];
        let mut rng = Rng::seeded(id, 99, &[1]);
        rng.set_full_mantissa(half);
        words(&mut rng, skip);
        if half {
            rng.take_u32().unwrap();
        }
        let mut copy = Rng::deserialize(&rng.serialize()).unwrap();
        prop_assert_eq!(copy.mode(), rng.mode());
        prop_assert_eq!(copy.take_u32().unwrap(), rng.take_u32().unwrap());
        prop_assert_eq!(words(&mut copy, 200), words(&mut rng, 200));
    }
}

#[test]
fn checkpoint_mid_buffer_resumes_for_10000_outputs() {
    for id in EngineId::ALL {
        let mut rng = Rng::seeded(id, 2024, &[7]);
        words(&mut rng, 37);
        let mut x = [0.0; 3];
        rng.norm(&mut x).unwrap();
        let bytes = rng.serialize();
        let mut restored = Rng::deserialize(&bytes).unwrap();
        let mut a = vec![0.0; 10_000];
        let mut b = vec![0.0; 10_000];
        rng.u01(&mut a).unwrap();
        restored.u01(&mut b).unwrap();
        assert_eq!(a, b, "{id}");
        assert_eq!(words(&mut rng, 10_000), words(&mut restored, 10_000), "{id}");
    }
}

#[test]
fn deserialize_diagnostics_are_distinct() {
    let rng = Rng::seeded(EngineId::Philox, 5, &[]);
    let good = rng.serialize();
    let mut bad_magic = good.clone();
    bad_magic[0] ^= 1;
    let mut bad_version = good.clone();
    bad_version[4] = 9;
    let mut bad_crc = good.clone();
    let mid = good.len() / 2;
    bad_crc[mid] ^= 0x40;
    let truncated = &good[..10];
    let errs = [
        Rng::deserialize(&bad_magic).unwrap_err(),
        Rng::deserialize(&bad_version).unwrap_err(),
        Rng::deserialize(&bad_crc).unwrap_err(),
        Rng::deserialize(truncated).unwrap_err(),
    ];
    assert_eq!(errs[0], Error::BadMagic);
    assert_eq!(errs[1], Error::UnsupportedVersion(9));
    assert_eq!(errs[2], Error::ChecksumMismatch);
    assert_eq!(errs[3], Error::Truncated);
    let msgs: std::collections::HashSet<String> = errs.iter().map(|e| e.to_string()).collect();
    assert_eq!(msgs.len(), 4);
    // Dropping the last byte also fails, as a checksum error.
    assert!(Rng::deserialize(&good[..good.len() - 1]).is_err());
}

#[test]
fn serialized_layout_is_fixed() {
    let rng = Rng::from_state(EngineId::X128Plus, &[1, 2]).unwrap();
    let b = rng.serialize();
    assert_eq!(&b[..4], b"RNGK");
    assert_eq!(&b[4..6], &[1, 0]);
    assert_eq!(b[6] as usize, "x128+".len());
    assert_eq!(&b[7..12], b"x128+");
    assert_eq!(b[12], 0);
    assert_eq!(&b[13..15], &[2, 0]);
    assert_eq!(&b[15..23], &1u64.to_le_bytes());
    assert_eq!(b.len(), 15 + 16 + 2 + 5 + 4);
}

#[test]
fn duplicate_preserves_cursor_and_diverges_after_jump() {
    let mut a = Rng::seeded(EngineId::X256PlusPlusSimd, 3, &[]);
    words(&mut a, 5);
    let mut b = a.duplicate();
    assert_eq!(words(&mut a, 10), words(&mut b, 10));
    let mut c = a.duplicate();
    c.jump(128).unwrap();
    let pa = words(&mut a, 1000);
    let pc = words(&mut c, 1000);
    assert!(pa.iter().all(|w| !pc.contains(w)));
}

#[test]
fn state_get_set_and_validation() {
    for id in EngineId::ALL {
        let a = Rng::seeded(id, 8, &[]);
        let mut b = Rng::seeded(id, 9, &[]);
        words(&mut b, 3);
        b.set_state(&a.get_state()).unwrap();
        assert_eq!(b.get_state(), a.get_state());
        // set_state empties the buffer, so b continues from a's engine state.
        assert_eq!(words(&mut b, 50), words(&mut a.clone(), 50), "{id}");
        assert!(b.set_state(&[1]).is_err(), "{id} short state");
    }
    let mut x = Rng::seeded(EngineId::X256PlusPlus, 1, &[]);
    assert!(matches!(x.set_state(&[0; 4]), Err(Error::InvalidState(_))));
    let mut p = Rng::seeded(EngineId::Pcg64, 1, &[]);
    assert!(p.set_state(&[1, 2, 4, 0]).is_err());
    let mut r = Rng::seeded(EngineId::Ranluxpp, 1, &[]);
    assert!(r.set_state(&[u64::MAX; 9]).is_err());
    assert!(!r.last_error().is_empty());
}

#[test]
fn engine_catalogue() {
    let list = engines();
    assert_eq!(list.len(), 14);
    let ids: std::collections::HashSet<&str> = list.iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), 14);
    let ranlux = list.iter().find(|e| e.id == "ranlux++").unwrap();
    assert_eq!(ranlux.state_words, 9);
}

#[test]
fn construction_by_name() {
    assert_eq!(Rng::from_name("").unwrap().engine(), EngineId::X256PlusPlusSimd);
    assert_eq!(Rng::from_name("0").unwrap().engine(), EngineId::X256PlusPlusSimd);
    assert_eq!(Rng::from_name("RANLUX++").unwrap().engine(), EngineId::Ranluxpp);
    let err = Rng::from_name("mt19937").unwrap_err();
    assert!(err.to_string().contains("mt19937"));
}

#[test]
fn seeding_and_randomizing() {
    let mut a = Rng::seeded(EngineId::Sfc64, 1, &[]);
    let mut b = Rng::seeded(EngineId::Sfc64, 1, &[]);
    let mut c = Rng::seeded(EngineId::Sfc64, 2, &[]);
    let wa = words(&mut a, 16);
    assert_eq!(wa, words(&mut b, 16));
    assert_ne!(wa, words(&mut c, 16));
    a.seed(1, &[]);
    assert_eq!(words(&mut a, 16), wa);
    let mut r1 = Rng::new(EngineId::X256PlusPlus);
    let mut r2 = Rng::new(EngineId::X256PlusPlus);
    assert!(!r1.randomize().is_degraded());
    assert_ne!(r1.take_u64().unwrap(), r2.take_u64().unwrap());
}

#[test]
fn sfc64_setter_runs_18_warmup_steps() {
    let mut rng = Rng::seeded(EngineId::Sfc64, 1, &[]);
    rng.sfc64_set_abc([1, 2, 3]).unwrap();
    let st = rng.get_state();
    assert_eq!(st[3], 18);
    let mut g = Sfc64 { a: 1, b: 2, c: 3, counter: 0 };
    for _ in 0..18 {
        g.next_u64();
    }
    assert_eq!(st, [g.a, g.b, g.c, g.counter]);
    let mut wide = Rng::seeded(EngineId::Sfc64Simd, 1, &[]);
    wide.sfc64_set_abc([1, 2, 3]).unwrap();
    let st = wide.get_state();
    for k in 0..8 {
        assert_eq!(st[4 * k + 3], ((k as u64) << 61) + 18);
    }
}

#[test]
fn cwg128_setter_runs_96_warmup_steps() {
    let mut rng = Rng::seeded(EngineId::Cwg128, 1, &[]);
    let w = rng.get_state();
    rng.cwg128_set_weyl(0x1234).unwrap();
    let j = |lo: u64, hi: u64| lo as u128 | (hi as u128) << 64;
    let mut g = Cwg128 { x: j(w[0], w[1]), a: j(w[2], w[3]), weyl: j(w[4], w[5]), s: 0x1235 };
    for _ in 0..96 {
        g.next_u64();
    }
    assert_eq!(rng.get_state(), g.to_words());
}

#[test]
fn setters_reset_counters_and_force_odd_increments() {
    let mut p = Rng::seeded(EngineId::Pcg64, 1, &[]);
    let before = p.get_state();
    p.pcg64_set_inc(10).unwrap();
    let st = p.get_state();
    assert_eq!(&st[..2], &before[..2]);
    assert_eq!(&st[2..], &[11, 0]);
    let mut s = Rng::seeded(EngineId::Squares, 1, &[]);
    s.squares_set_key(77).unwrap();
    assert_eq!(s.get_state(), [0, 77]);
    let mut ph = Rng::seeded(EngineId::Philox, 1, &[]);
    ph.philox_set_key([5, 6]).unwrap();
    assert_eq!(ph.get_state(), [0, 0, 0, 0, 5, 6]);
    let mut ch = Rng::seeded(EngineId::ChaCha20, 1, &[]);
    ch.chacha20_set_nonce([1, 2, 3]).unwrap();
    assert_eq!(&ch.get_state()[4..], &[1 << 32, 2 | 3 << 32]);
    assert_eq!(ch.set_stream(&[1 | 2 << 32, 3]), Ok(()));
    assert_eq!(&ch.get_state()[4..], &[1 << 32, 2 | 3 << 32]);
}

#[test]
fn setters_on_the_wrong_engine_fail_without_side_effects() {
    let mut rng = Rng::seeded(EngineId::X256PlusPlus, 1, &[]);
    words(&mut rng, 3);
    let mut copy = rng.clone();
    assert!(matches!(rng.philox_set_key([1, 2]), Err(Error::WrongEngine(..))));
    assert!(matches!(rng.set_stream(&[1]), Err(Error::StreamUnsupported(_))));
    assert!(!rng.last_error().is_empty());
    assert_eq!(words(&mut rng, 20), words(&mut copy, 20));
    assert!(rng.last_error().is_empty());
    let mut sq = Rng::seeded(EngineId::Squares, 1, &[]);
    assert!(sq.set_stream(&[1, 2]).is_err());
    assert!(sq.jump(32).is_err());
}

#[test]
fn distinct_selectors_give_distinct_streams() {
    let selectors = |i: u64| -> Vec<u64> { vec![i * 0x9e37_79b9 + 1, i, i + 5] };
    for id in [EngineId::Pcg64, EngineId::Squares, EngineId::Philox, EngineId::Sfc64, EngineId::Sfc64Simd, EngineId::Cwg128, EngineId::ChaCha20] {
        let need = match id {
            EngineId::Squares => 1,
            EngineId::Sfc64 | EngineId::Sfc64Simd => 3,
            _ => 2,
        };
        let mut prefixes = Vec::new();
        for i in 0..16 {
            let mut rng = Rng::seeded(id, 1, &[]);
            rng.set_stream(&selectors(i)[..need]).unwrap();
            prefixes.push(words(&mut rng, 256));
        }
        for i in 0..16 {
            for j in 0..i {
                assert_ne!(prefixes[i], prefixes[j], "{id} selectors {i} {j}");
            }
        }
    }
    let mut a = Rng::seeded(EngineId::Philox, 1, &[]);
    let mut b = a.clone();
    a.philox_set_key([1, 0]).unwrap();
    b.philox_set_key([2, 0]).unwrap();
    let (wa, wb) = (words(&mut a, 10_000), words(&mut b, 10_000));
    let set: std::collections::HashSet<u64> = wa.into_iter().collect();
    assert!(wb.iter().all(|w| !set.contains(w)));
}

#[test]
fn chacha_exhaustion_leaves_position_unchanged() {
    let mut rng = Rng::seeded(EngineId::ChaCha20, 1, &[]);
    let mut st = rng.get_state();
    st[4] = (st[4] & !0xffff_ffff) | (u32::MAX - 2) as u64;
    rng.set_state(&st).unwrap();
    let mut reference = rng.clone();
    let mut too_many = vec![0u64; 20];
    assert_eq!(rng.take_bulk(&mut too_many), Err(Error::StreamExhausted));
    assert_eq!(rng.last_error(), "stream exhausted");
    let mut x = vec![0.0; 20];
    assert!(rng.u01(&mut x).is_err());
    assert_eq!(words(&mut rng, 16), words(&mut reference, 16));
    assert_eq!(rng.take_u64(), Err(Error::StreamExhausted));
}

#[test]
fn last_error_tracks_the_latest_call() {
    let mut rng = Rng::seeded(EngineId::X256PlusPlus, 1, &[]);
    assert_eq!(rng.last_error(), "");
    let mut out = [0usize; 5];
    assert!(rng.sample(3, &mut out).is_err());
    assert!(rng.last_error().contains("cannot sample"));
    rng.sample(10, &mut out).unwrap();
    assert_eq!(rng.last_error(), "");
    let mut x = [0.0; 4];
    let before = rng.clone().take_u64().unwrap();
    assert!(rng.gamma(&mut x, -1.0, 1.0).is_err());
    assert_eq!(rng.take_u64().unwrap(), before);
}
