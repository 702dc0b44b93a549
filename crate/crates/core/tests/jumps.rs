//! Jump polynomials against brute-force stepping, composition identities,
//! and the lane layout of the interleaved engines.

use rngpack::engine::{LinearTransition, Ranluxpp, Xoroshiro128PlusPlus, Xorshift128Plus, Xoshiro256, LANES};
use rngpack::jump::{apply, committed_table, compute_jump_polynomial, polynomial_for_steps, LinearEngine};
use rngpack::gf2;
use rngpack::{EngineId, Error, Rng};

fn stepped<T: LinearTransition>(s: &T, n: u64) -> T {
    let mut s = s.clone();
    for _ in 0..n {
        s.step();
    }
    s
}

fn brute_force<T: LinearTransition + PartialEq + std::fmt::Debug>(engine: LinearEngine, start: T) {
    for n in [1u64, 2, 3, 1000, 1_000_000] {
        let jumped = apply(&start, &polynomial_for_steps(engine, n as u128));
        assert_eq!(jumped, stepped(&start, n), "{} n = {n}", engine.name());
    }
}

#[test]
fn polynomials_match_brute_force_stepping() {
    brute_force(LinearEngine::Xoshiro256, Xoshiro256 { s: [1, 2, 3, 4] });
    brute_force(LinearEngine::Xoshiro256, Xoshiro256 { s: [0x9e3779b97f4a7c15, 0, u64::MAX, 7] });
    brute_force(LinearEngine::Xorshift128Plus, Xorshift128Plus { s: [0xdead_beef, 0x1234_5678_9abc] });
    brute_force(LinearEngine::Xoroshiro128, Xoroshiro128PlusPlus { s: [3, 0xffff_0000_ffff_0000] });
}

fn chain<T: LinearTransition + PartialEq + std::fmt::Debug>(engine: LinearEngine, start: T) {
    let table = committed_table();
    let jump = |s: &T, k: u32| apply(s, &table.get(engine, k).unwrap().coeffs);
    let ks = engine.committed_exponents();
    // Each committed polynomial equals one recomputed from scratch.
    for &k in ks {
        assert_eq!(table.get(engine, k).unwrap().coeffs, compute_jump_polynomial(engine, k).coeffs);
    }
    // 2^32 steps twice is 2^33 steps.
    assert_eq!(jump(&jump(&start, 32), 32), apply(&start, &polynomial_for_steps(engine, 1 << 33)));
    for &k in ks.iter().filter(|&&k| k < 128) {
        assert_eq!(jump(&start, k), apply(&start, &polynomial_for_steps(engine, 1u128 << k)));
    }
    // Each committed polynomial is the square of the one for half as many steps.
    for &k in ks {
        let half = compute_jump_polynomial(engine, k - 1).coeffs;
        assert_eq!(apply(&apply(&start, &half), &half), jump(&start, k), "{} 2^{k}", engine.name());
    }
    // Squaring: jumping by 2^k twice equals the polynomial for 2^(k+1).
    for &k in ks {
        assert_eq!(jump(&jump(&start, k), k), apply(&start, &compute_jump_polynomial(engine, k + 1).coeffs));
    }
}

#[test]
fn squaring_chain_for_committed_exponents() {
    chain(LinearEngine::Xoshiro256, Xoshiro256 { s: [1, 2, 3, 4] });
    chain(LinearEngine::Xorshift128Plus, Xorshift128Plus { s: [5, 6] });
    chain(LinearEngine::Xoroshiro128, Xoroshiro128PlusPlus { s: [7, 8] });
}

#[test]
fn rng_jump_matches_polynomial_and_discards_buffer() {
    let mut rng = Rng::seeded(EngineId::X256PlusPlus, 42, &[]);
    rng.take_u64().unwrap();
    // The engine has already produced a buffer's worth of words; the jump
    // starts from there.
    let start = rng.get_state();
    rng.jump(64).unwrap();
    let expect = apply(&Xoshiro256 { s: start.clone().try_into().unwrap() }, &compute_jump_polynomial(LinearEngine::Xoshiro256, 64).coeffs);
    assert_eq!(rng.get_state(), expect.s);
    // The next word comes from the jumped state, not the old buffer.
    let mut fresh = Rng::from_state(EngineId::X256PlusPlus, &expect.s).unwrap();
    assert_eq!(rng.take_u64().unwrap(), fresh.take_u64().unwrap());
}

#[test]
fn jump_support_per_engine() {
    for id in EngineId::ALL {
        let mut rng = Rng::seeded(id, 1, &[]);
        for k in [32, 64, 96, 128, 192] {
            let ok = match id {
                EngineId::X256PlusPlus | EngineId::X256StarStar | EngineId::X256PlusPlusSimd | EngineId::X256StarStarSimd | EngineId::Ranluxpp => true,
                EngineId::X128Plus | EngineId::XoroPlusPlus | EngineId::Pcg64 => k <= 96,
                _ => false,
            };
            let r = rng.jump(k);
            assert_eq!(r.is_ok(), ok, "{id} 2^{k}");
            if !ok {
                assert!(matches!(r, Err(Error::JumpUnsupported(_))));
                assert!(!rng.last_error().is_empty());
            }
        }
        assert!(rng.jump(33).is_err());
    }
}

#[test]
fn pcg64_advance_and_jump() {
    let mut a = Rng::seeded(EngineId::Pcg64, 9, &[]);
    let mut b = a.clone();
    a.pcg64_advance(0).unwrap();
    assert_eq!(a.get_state(), b.get_state());
    a.pcg64_advance(5).unwrap();
    for _ in 0..5 {
        b.take_u64().unwrap();
    }
    // b has buffered words; compare through fresh reads after discarding.
    let mut c = Rng::seeded(EngineId::Pcg64, 9, &[]);
    let skipped: Vec<u64> = (0..6).map(|_| c.take_u64().unwrap()).collect();
    assert_eq!(a.take_u64().unwrap(), skipped[5]);
    let mut j = Rng::seeded(EngineId::Pcg64, 9, &[]);
    let mut adv = j.clone();
    j.jump(64).unwrap();
    adv.pcg64_advance(1 << 64).unwrap();
    assert_eq!(j.get_state(), adv.get_state());
    assert!(Rng::seeded(EngineId::X256PlusPlus, 1, &[]).pcg64_advance(1).is_err());
}

#[test]
fn ranlux_jump_is_repeated_squaring() {
    let seeded = Rng::seeded(EngineId::Ranluxpp, 5, &[]);
    let x: [u64; 9] = seeded.get_state().try_into().unwrap();
    for k in [0, 1, 3, 10] {
        let mut jumped = Ranluxpp { x };
        jumped.jump_pow2(k);
        let mut stepped = Ranluxpp { x };
        for _ in 0..1u32 << k {
            stepped.next_block();
        }
        assert_eq!(jumped, stepped, "2^{k}");
    }
    let mut a = seeded.clone();
    a.jump(32).unwrap();
    let mut b = Ranluxpp { x };
    b.jump_pow2(31);
    b.jump_pow2(31);
    assert_eq!(a.get_state(), b.x);
}

#[test]
fn interleaved_lane_k_is_base_jumped_k_times_2_253() {
    let lane_poly = compute_jump_polynomial(LinearEngine::Xoshiro256, 253).coeffs;
    for (simd, scalar) in [(EngineId::X256PlusPlusSimd, EngineId::X256PlusPlus), (EngineId::X256StarStarSimd, EngineId::X256StarStar)] {
        let mut wide = Rng::seeded(simd, 42, &[]);
        let base = Rng::seeded(scalar, 42, &[]).get_state();
        let mut lanes = Vec::new();
        let mut cur = Xoshiro256 { s: base.try_into().unwrap() };
        for _ in 0..LANES {
            lanes.push(Rng::from_state(scalar, &cur.s).unwrap());
            cur = apply(&cur, &lane_poly);
        }
        for i in 0..1000 {
            for (k, lane) in lanes.iter_mut().enumerate() {
                assert_eq!(wide.take_u64().unwrap(), lane.take_u64().unwrap(), "{simd} lane {k} word {i}");
            }
        }
    }
}

#[test]
fn interleaved_jump_moves_every_lane() {
    let mut wide = Rng::seeded(EngineId::X256PlusPlusSimd, 3, &[]);
    let before = wide.get_state();
    wide.jump(128).unwrap();
    let after = wide.get_state();
    let poly = compute_jump_polynomial(LinearEngine::Xoshiro256, 128).coeffs;
    for k in 0..LANES {
        let lane = Xoshiro256 { s: before[4 * k..4 * k + 4].try_into().unwrap() };
        assert_eq!(apply(&lane, &poly).s, after[4 * k..4 * k + 4]);
    }
}

#[test]
fn committed_pairs_are_related_by_repeated_squaring() {
    // p for 2^(2k) is p for 2^k squared k times modulo the characteristic polynomial.
    let table = committed_table();
    for engine in LinearEngine::ALL {
        let cp = engine.characteristic_polynomial();
        for (lo, hi) in [(32, 64), (64, 128), (96, 192)] {
            let (Some(a), Some(b)) = (table.get(engine, lo), table.get(engine, hi)) else { continue };
            let mut p = gf2::trim(a.coeffs.clone());
            for _ in 0..lo {
                p = gf2::mul_mod(&p, &p, &cp);
            }
            assert_eq!(p, gf2::trim(b.coeffs.clone()), "{} {lo} -> {hi}", engine.name());
        }
    }
}
