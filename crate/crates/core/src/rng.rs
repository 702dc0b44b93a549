//! The generator object: an engine, its word buffer, sampler settings and an
//! error slot.

use crate::buffer::{Stream, WordSource};
use crate::continuous::{self, Continuous, Ctx};
use crate::detmath::Math;
use crate::discrete;
use crate::engine::{EngineId, EngineState, Sfc64, Sfc64x8, LANES};
use crate::error::{invalid_param, Error, Result};
use crate::jump::{self, LinearEngine};
use crate::mvn::{self, MvnLayout};
use crate::real::Real;
use crate::seeding::{seed_mix, system_entropy, EntropySource};
use crate::ziggurat::{standard_exponential, standard_normal, ZigStats};

/// Sampler settings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SamplerMode {
    /// Use the deterministic math functions everywhere, making every
    /// distribution except mvn reproducible bit for bit across platforms.
    pub bitexact: bool,
    /// Uniform doubles with 53 instead of 52 random bits (24 instead of 23 for floats).
    pub full_mantissa: bool,
}

const SFC64_WARMUP: usize = 18;
const CWG128_WARMUP: usize = 96;

/// A random number generator.
///
/// All fallible calls leave the generator's stream position unchanged on
/// failure and record the message in [`last_error`](Rng::last_error), which the
/// next successful call clears. Jumps, stream setters and [`set_state`](Rng::set_state)
/// act on the engine state and discard buffered words.
#[derive(Clone, Debug)]
pub struct Rng {
    pub(crate) stream: Stream,
    pub(crate) mode: SamplerMode,
    pub(crate) last_error: String,
}

/// Words of seed material an engine consumes; interleaved engines seed one lane.
fn seed_words(id: EngineId) -> usize {
    if id.is_interleaved() {
        4
    } else {
        id.state_words()
    }
}

impl Rng {
    /// A generator of the given engine, seeded from system entropy.
    pub fn new(engine: EngineId) -> Rng {
        let mut r = Rng::seeded(engine, 0, &[]);
        r.randomize();
        r
    }

    /// Like [`Rng::new`] with the engine given by name; "" and "0" select the default.
    pub fn from_name(name: &str) -> Result<Rng> {
        Ok(Rng::new(EngineId::parse(name)?))
    }

    /// A generator seeded deterministically from `seed` and `spawn_key`.
    pub fn seeded(engine: EngineId, seed: u64, spawn_key: &[u64]) -> Rng {
        let mixed = seed_mix(seed, spawn_key, seed_words(engine));
        Rng {
            stream: Stream::new(EngineState::from_seed_words(engine, &mixed)),
            mode: SamplerMode::default(),
            last_error: String::new(),
        }
    }

    /// A generator with an exactly specified state.
    pub fn from_state(engine: EngineId, words: &[u64]) -> Result<Rng> {
        Ok(Rng { stream: Stream::new(EngineState::from_words(engine, words)?), mode: SamplerMode::default(), last_error: String::new() })
    }

    pub fn engine(&self) -> EngineId {
        self.stream.engine.id()
    }

    /// Most recent failure message, or "" after a successful call.
    pub fn last_error(&self) -> &str {
        &self.last_error
    }

    pub fn mode(&self) -> SamplerMode {
        self.mode
    }

    pub fn set_mode(&mut self, mode: SamplerMode) {
        self.mode = mode;
    }

    pub fn set_bitexact(&mut self, on: bool) {
        self.mode.bitexact = on;
    }

    pub fn set_full_mantissa(&mut self, on: bool) {
        self.mode.full_mantissa = on;
    }

    /// An independent copy that continues with the same stream.
    pub fn duplicate(&self) -> Rng {
        Rng { last_error: String::new(), ..self.clone() }
    }

    /// Direct access to the buffered word stream.
    pub fn source(&mut self) -> &mut Stream {
        &mut self.stream
    }

    fn ctx(&self) -> Ctx {
        Ctx { math: Math { exact: self.mode.bitexact }, full_mantissa: self.mode.full_mantissa }
    }

    fn record<R>(&mut self, r: Result<R>) -> Result<R> {
        match &r {
            Ok(_) => self.last_error.clear(),
            Err(e) => self.last_error = e.to_string(),
        }
        r
    }

    /// Runs a drawing operation, restoring the stream if it fails midway.
    /// Only chacha20 can fail after drawing, so only it pays for the snapshot.
    #[inline]
    fn draw<R>(&mut self, f: impl FnOnce(&mut Stream, Ctx) -> Result<R>) -> Result<R> {
        let cx = self.ctx();
        let snapshot = matches!(self.stream.engine, EngineState::ChaCha20(_)).then(|| self.stream.clone());
        let r = f(&mut self.stream, cx);
        if r.is_err() {
            if let Some(s) = snapshot {
                self.stream = s;
            }
        }
        self.record(r)
    }

    /// Validates, then draws; nothing is consumed when validation fails.
    fn checked<R>(&mut self, check: Result<()>, f: impl FnOnce(&mut Stream, Ctx) -> Result<R>) -> Result<R> {
        match check {
            Ok(()) => self.draw(f),
            Err(e) => self.record(Err(e)),
        }
    }

    /// Changes the engine state and drops buffered output.
    fn mutate_engine(&mut self, f: impl FnOnce(&mut EngineState) -> Result<()>) -> Result<()> {
        let mut next = self.stream.engine.clone();
        let r = f(&mut next);
        if r.is_ok() {
            self.stream.engine = next;
            self.stream.clear();
        }
        self.record(r)
    }

    // ---- seeding and streams ----

    /// Reseeds from `seed` and `spawn_key`, discarding buffered words.
    pub fn seed(&mut self, seed: u64, spawn_key: &[u64]) {
        let id = self.engine();
        let mixed = seed_mix(seed, spawn_key, seed_words(id));
        self.stream = Stream::new(EngineState::from_seed_words(id, &mixed));
        self.last_error.clear();
    }

    /// Reseeds from operating-system entropy and reports where it came from.
    pub fn randomize(&mut self) -> EntropySource {
        let id = self.engine();
        let mut words = vec![0u64; seed_words(id)];
        let src = system_entropy(&mut words);
        self.stream = Stream::new(EngineState::from_seed_words(id, &words));
        self.last_error.clear();
        src
    }

    /// The engine state words, not counting buffered output.
    pub fn get_state(&self) -> Vec<u64> {
        self.stream.engine.to_words()
    }

    /// Installs an exact engine state and empties the buffer.
    pub fn set_state(&mut self, words: &[u64]) -> Result<()> {
        let id = self.engine();
        self.mutate_engine(|e| {
            *e = EngineState::from_words(id, words)?;
            Ok(())
        })
    }

    /// Advances the engine by 2^k steps, k in {32, 64, 96, 128, 192}.
    ///
    /// Available for the xoshiro and xoroshiro engines (k <= 96 for the two
    /// 128-bit ones), ranlux++ and pcg64 (k < 128, as its period is 2^128).
    /// Interleaved xoshiro engines jump every lane.
    pub fn jump(&mut self, k: u32) -> Result<()> {
        let unsupported = |e: EngineId| Error::JumpUnsupported(format!("engine {e} cannot jump by 2^{k}"));
        let id = self.engine();
        self.mutate_engine(|e| {
            let lin = LinearEngine::of(id);
            if let Some(l) = lin {
                if !jump::supports(l, k) {
                    return Err(unsupported(id));
                }
            }
            match e {
                EngineState::X256PlusPlus(g) | EngineState::X256StarStar(g) => *g = jump::jump_xoshiro256(g, k),
                EngineState::X128Plus(g) => *g = jump::jump_xorshift128(g, k),
                EngineState::XoroPlusPlus(g) => *g = jump::jump_xoroshiro128(g, k),
                EngineState::X256PlusPlusSimd(g) | EngineState::X256StarStarSimd(g) => {
                    for lane in 0..LANES {
                        let j = jump::jump_xoshiro256(&g.lane(lane), k);
                        g.set_lane(lane, &j);
                    }
                }
                EngineState::Pcg64(g) if jump::JUMP_EXPONENTS.contains(&k) && k < 128 => g.advance(1u128 << k),
                EngineState::Ranluxpp(g) if jump::JUMP_EXPONENTS.contains(&k) => g.jump_pow2(k),
                _ => return Err(unsupported(id)),
            }
            Ok(())
        })
    }

    /// Advances a pcg64 engine by an arbitrary number of steps.
    pub fn pcg64_advance(&mut self, delta: u128) -> Result<()> {
        self.mutate_engine(|e| match e {
            EngineState::Pcg64(g) => {
                g.advance(delta);
                Ok(())
            }
            _ => Err(Error::WrongEngine("pcg64_advance", "pcg64")),
        })
    }

    /// Sets the pcg64 increment; the low bit is forced to one.
    pub fn pcg64_set_inc(&mut self, inc: u128) -> Result<()> {
        self.mutate_engine(|e| match e {
            EngineState::Pcg64(g) => {
                g.inc = inc | 1;
                Ok(())
            }
            _ => Err(Error::WrongEngine("pcg64_set_inc", "pcg64")),
        })
    }

    /// Sets the squares64 key and restarts its counter.
    pub fn squares_set_key(&mut self, key: u64) -> Result<()> {
        self.mutate_engine(|e| match e {
            EngineState::Squares(g) => {
                g.key = key;
                g.counter = 0;
                Ok(())
            }
            _ => Err(Error::WrongEngine("squares_set_key", "squares")),
        })
    }

    /// Sets the Philox key and restarts its counter.
    pub fn philox_set_key(&mut self, key: [u64; 2]) -> Result<()> {
        self.mutate_engine(|e| match e {
            EngineState::Philox(g) => {
                g.key = key;
                g.counter = [0; 4];
                Ok(())
            }
            _ => Err(Error::WrongEngine("philox_set_key", "philox")),
        })
    }

    /// Sets (a, b, c) of sfc64 or sfc64simd, zeroes the counter and runs 18
    /// warmup steps. The interleaved engine derives its lanes from the new
    /// base state before warming each lane.
    pub fn sfc64_set_abc(&mut self, abc: [u64; 3]) -> Result<()> {
        let base = Sfc64 { a: abc[0], b: abc[1], c: abc[2], counter: 0 };
        self.mutate_engine(|e| match e {
            EngineState::Sfc64(g) => {
                *g = base;
                for _ in 0..SFC64_WARMUP {
                    g.next_u64();
                }
                Ok(())
            }
            EngineState::Sfc64Simd(g) => {
                *g = Sfc64x8::from_base(base);
                for k in 0..LANES {
                    let mut lane = g.lane(k);
                    for _ in 0..SFC64_WARMUP {
                        lane.next_u64();
                    }
                    g.set_lane(k, &lane);
                }
                Ok(())
            }
            _ => Err(Error::WrongEngine("sfc64_set_abc", "sfc64 or sfc64simd")),
        })
    }

    /// Sets the cwg128 Weyl increment (low bit forced to one) and runs 96 warmup steps.
    pub fn cwg128_set_weyl(&mut self, weyl: u128) -> Result<()> {
        self.mutate_engine(|e| match e {
            EngineState::Cwg128(g) => {
                g.s = weyl | 1;
                for _ in 0..CWG128_WARMUP {
                    g.next_u64();
                }
                Ok(())
            }
            _ => Err(Error::WrongEngine("cwg128_set_weyl", "cwg128")),
        })
    }

    /// Sets the 96-bit ChaCha20 nonce and restarts the block counter.
    pub fn chacha20_set_nonce(&mut self, nonce: [u32; 3]) -> Result<()> {
        self.mutate_engine(|e| match e {
            EngineState::ChaCha20(g) => {
                g.nonce = nonce;
                g.counter = 0;
                Ok(())
            }
            _ => Err(Error::WrongEngine("chacha20_set_nonce", "chacha20")),
        })
    }

    /// Engine-independent stream selection from 64-bit words:
    ///
    /// | engine | words |
    /// |---|---|
    /// | pcg64, cwg128 | low, high half of the 128-bit increment |
    /// | squares | key |
    /// | philox | two key words |
    /// | sfc64, sfc64simd | a, b, c |
    /// | chacha20 | nonce words 0 and 1 packed low first, then nonce word 2 |
    pub fn set_stream(&mut self, selector: &[u64]) -> Result<()> {
        let id = self.engine();
        let need = match id {
            EngineId::Pcg64 | EngineId::Cwg128 | EngineId::Philox | EngineId::ChaCha20 => 2,
            EngineId::Squares => 1,
            EngineId::Sfc64 | EngineId::Sfc64Simd => 3,
            _ => return self.record(Err(Error::StreamUnsupported(id.name()))),
        };
        if selector.len() != need {
            return self.record(Err(invalid_param(format!(
                "{id} stream selector takes {need} words, got {}",
                selector.len()
            ))));
        }
        let wide = || selector[0] as u128 | (selector[1] as u128) << 64;
        match id {
            EngineId::Pcg64 => self.pcg64_set_inc(wide()),
            EngineId::Cwg128 => self.cwg128_set_weyl(wide()),
            EngineId::Philox => self.philox_set_key([selector[0], selector[1]]),
            EngineId::Squares => self.squares_set_key(selector[0]),
            EngineId::Sfc64 | EngineId::Sfc64Simd => self.sfc64_set_abc([selector[0], selector[1], selector[2]]),
            _ => {
                if selector[1] >> 32 != 0 {
                    return self.record(Err(invalid_param("chacha20 nonce is 96 bits")));
                }
                self.chacha20_set_nonce([selector[0] as u32, (selector[0] >> 32) as u32, selector[1] as u32])
            }
        }
    }

    // ---- raw words ----

    pub fn take_u64(&mut self) -> Result<u64> {
        self.draw(|s, _| s.take_u64())
    }

    pub fn take_u32(&mut self) -> Result<u32> {
        self.draw(|s, _| s.take_u32())
    }

    pub fn take_bulk(&mut self, out: &mut [u64]) -> Result<()> {
        self.draw(|s, _| s.take_bulk(out))
    }

    // ---- continuous ----

    /// Uniforms in [0, 1).
    pub fn u01<T: Real>(&mut self, out: &mut [T]) -> Result<()> {
        let full = self.mode.full_mantissa;
        self.draw(|s, _| T::fill_affine_u01(s, out, T::zero(), T::one(), full))
    }

    /// Uniforms in [a, b) as a + (b - a) u.
    pub fn unif<T: Real>(&mut self, out: &mut [T], a: T, b: T) -> Result<()> {
        let full = self.mode.full_mantissa;
        let check = Continuous::Unif { a: a.to_f64(), b: b.to_f64() }.validate();
        self.checked(check, |s, _| T::fill_affine_u01(s, out, a, b - a, full))
    }

    /// Standard normals.
    pub fn norm<T: Real>(&mut self, out: &mut [T]) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = T::from_f64(standard_normal(s, &mut ())?);
            }
            Ok(())
        })
    }

    /// Standard normals, counting the ziggurat's internal events.
    pub fn norm_counted(&mut self, out: &mut [f64], stats: &mut ZigStats) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = standard_normal(s, stats)?;
            }
            Ok(())
        })
    }

    /// Exponentials with the given scale (mean).
    pub fn exp<T: Real>(&mut self, out: &mut [T], scale: T) -> Result<()> {
        let check = Continuous::Exp { scale: scale.to_f64() }.validate();
        self.checked(check, |s, _| {
            for x in out {
                *x = scale * T::from_f64(standard_exponential(s, &mut ())?);
            }
            Ok(())
        })
    }

    /// Standard exponentials, counting the ziggurat's internal events.
    pub fn exp_counted(&mut self, out: &mut [f64], stats: &mut ZigStats) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = standard_exponential(s, stats)?;
            }
            Ok(())
        })
    }

    /// Fills `out` from any continuous distribution.
    pub fn continuous(&mut self, dist: &Continuous, out: &mut [f64]) -> Result<()> {
        let d = *dist;
        self.checked(d.validate(), |s, cx| {
            for x in out {
                *x = d.sample(s, cx)?;
            }
            Ok(())
        })
    }

    pub fn normal(&mut self, out: &mut [f64], mu: f64, sigma: f64) -> Result<()> {
        let check = Continuous::Normal { mu, sigma }.validate();
        self.checked(check, |s, _| {
            for x in out {
                *x = mu + sigma * continuous::norm(s)?;
            }
            Ok(())
        })
    }

    pub fn lognormal(&mut self, out: &mut [f64], mu: f64, sigma: f64) -> Result<()> {
        self.continuous(&Continuous::Lognormal { mu, sigma }, out)
    }

    /// Gamma with shape alpha and scale theta.
    pub fn gamma(&mut self, out: &mut [f64], shape: f64, scale: f64) -> Result<()> {
        let check = Continuous::Gamma { shape, scale }.validate();
        self.checked(check, |s, cx| {
            for x in out {
                *x = scale * continuous::gamma1(s, shape, cx)?;
            }
            Ok(())
        })
    }

    pub fn beta(&mut self, out: &mut [f64], a: f64, b: f64) -> Result<()> {
        self.continuous(&Continuous::Beta { a, b }, out)
    }

    pub fn chi2(&mut self, out: &mut [f64], nu: f64) -> Result<()> {
        self.continuous(&Continuous::Chi2 { nu }, out)
    }

    #[doc(alias = "t")]
    pub fn student_t(&mut self, out: &mut [f64], nu: f64) -> Result<()> {
        self.continuous(&Continuous::T { nu }, out)
    }

    #[doc(alias = "f")]
    pub fn fisher_f(&mut self, out: &mut [f64], nu1: f64, nu2: f64) -> Result<()> {
        self.continuous(&Continuous::F { nu1, nu2 }, out)
    }

    pub fn gumbel(&mut self, out: &mut [f64], mu: f64, beta: f64) -> Result<()> {
        self.continuous(&Continuous::Gumbel { mu, beta }, out)
    }

    pub fn pareto(&mut self, out: &mut [f64], xm: f64, alpha: f64) -> Result<()> {
        self.continuous(&Continuous::Pareto { xm, alpha }, out)
    }

    pub fn weibull(&mut self, out: &mut [f64], k: f64, lambda: f64) -> Result<()> {
        self.continuous(&Continuous::Weibull { k, lambda }, out)
    }

    pub fn skew_normal(&mut self, out: &mut [f64], mu: f64, sigma: f64, alpha: f64) -> Result<()> {
        self.continuous(&Continuous::SkewNormal { mu, sigma, alpha }, out)
    }

    pub fn gpd(&mut self, out: &mut [f64], mu: f64, sigma: f64, xi: f64) -> Result<()> {
        self.continuous(&Continuous::Gpd { mu, sigma, xi }, out)
    }

    /// Multivariate normal samples with mean `mu` (length d) and covariance
    /// `sigma` (d x d, row-major). `out.len()` must be a multiple of d; each
    /// sample draws d standard normals in order and maps them through a
    /// Cholesky factor of `sigma`.
    pub fn mvn(&mut self, out: &mut [f64], mu: &[f64], sigma: &[f64], layout: MvnLayout) -> Result<()> {
        let d = mu.len();
        let prepared = mvn::factor(sigma, d).and_then(|f| {
            if out.len() % d != 0 {
                return Err(invalid_param(format!("output length {} is not a multiple of {d}", out.len())));
            }
            if mu.iter().any(|m| !m.is_finite()) {
                return Err(invalid_param("mean has non-finite entries"));
            }
            Ok(f)
        });
        let f = match prepared {
            Ok(f) => f,
            Err(e) => return self.record(Err(e)),
        };
        let n = out.len() / d;
        self.draw(|s, _| {
            let mut z = vec![0.0; d];
            let mut x = vec![0.0; d];
            for j in 0..n {
                for v in z.iter_mut() {
                    *v = continuous::norm(s)?;
                }
                f.apply(mu, &z, &mut x);
                match layout {
                    MvnLayout::SampleMajor => out[j * d..(j + 1) * d].copy_from_slice(&x),
                    MvnLayout::CoordinateMajor => {
                        for (i, v) in x.iter().enumerate() {
                            out[i * n + j] = *v;
                        }
                    }
                }
            }
            Ok(())
        })
    }

    // ---- discrete ----

    /// Uniform 32-bit integers on {m, ..., n}.
    pub fn int(&mut self, out: &mut [i32], m: i32, n: i32) -> Result<()> {
        self.checked(discrete::check_range(m, n), |s, _| {
            for x in out {
                *x = discrete::range_i32(s, m, n)?;
            }
            Ok(())
        })
    }

    /// Uniform 64-bit integers on {m, ..., n}.
    pub fn long_long(&mut self, out: &mut [i64], m: i64, n: i64) -> Result<()> {
        self.checked(discrete::check_range(m, n), |s, _| {
            for x in out {
                *x = discrete::range_i64(s, m, n)?;
            }
            Ok(())
        })
    }

    /// Uniform on {0, ..., b - 1}, or the full range when b = 0.
    pub fn uint8(&mut self, out: &mut [u8], b: u8) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = if b == 0 { s.take_u32()? as u8 } else { discrete::bounded_u32(s, b as u32)? as u8 };
            }
            Ok(())
        })
    }

    /// Uniform on {0, ..., b - 1}, or the full range when b = 0.
    pub fn uint16(&mut self, out: &mut [u16], b: u16) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = if b == 0 { s.take_u32()? as u16 } else { discrete::bounded_u32(s, b as u32)? as u16 };
            }
            Ok(())
        })
    }

    /// Uniform on {0, ..., b - 1}, or the full range when b = 0.
    pub fn uint32(&mut self, out: &mut [u32], b: u32) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = if b == 0 { s.take_u32()? } else { discrete::bounded_u32(s, b)? };
            }
            Ok(())
        })
    }

    /// Uniform on {0, ..., b - 1}, or the full range when b = 0.
    pub fn uint64(&mut self, out: &mut [u64], b: u64) -> Result<()> {
        self.draw(|s, _| {
            for x in out {
                *x = if b == 0 { s.take_u64()? } else { discrete::bounded_u64(s, b)? };
            }
            Ok(())
        })
    }

    /// A uniform permutation of {0, ..., out.len() - 1}.
    pub fn perm(&mut self, out: &mut [usize]) -> Result<()> {
        self.draw(|s, _| discrete::perm(s, out))
    }

    /// A uniform subset of {0, ..., n - 1} with `out.len()` elements, in increasing order.
    pub fn sample(&mut self, n: usize, out: &mut [usize]) -> Result<()> {
        let check = if out.len() > n {
            Err(invalid_param(format!("cannot sample {} items from {n}", out.len())))
        } else {
            Ok(())
        };
        self.checked(check, |s, _| discrete::sample(s, n, out))
    }

    /// Raw little-endian bytes of the word stream.
    pub fn raw(&mut self, out: &mut [u8]) -> Result<()> {
        self.draw(|s, _| discrete::raw(s, out))
    }
}
