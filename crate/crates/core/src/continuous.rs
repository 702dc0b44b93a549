//! Single-variate continuous samplers.
//!
//! Each function draws from a [`WordSource`] and documents its word order, so
//! the same words always give the same variate. Uniforms inside samplers follow
//! the generator's mantissa setting. Logarithms in the gamma rejection test are
//! always the deterministic ones; other transcendental calls go through
//! [`Math`], which is deterministic only in bit-exact mode.

use crate::buffer::WordSource;
use crate::detmath::{det_expm1, det_log, Math};
use crate::error::{invalid_param, Result};
use crate::real::u01_from_u64;
use crate::ziggurat::{standard_exponential, standard_normal};

/// Per-call sampling context.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ctx {
    pub math: Math,
    pub full_mantissa: bool,
}

impl Ctx {
    #[inline(always)]
    pub fn u01<S: WordSource>(self, src: &mut S) -> Result<f64> {
        Ok(u01_from_u64(src.take_u64()?, self.full_mantissa))
    }
}

#[inline(always)]
pub(crate) fn norm<S: WordSource>(src: &mut S) -> Result<f64> {
    standard_normal(src, &mut ())
}

#[inline(always)]
pub(crate) fn exp1<S: WordSource>(src: &mut S) -> Result<f64> {
    standard_exponential(src, &mut ())
}

/// Gamma(alpha, 1) by Marsaglia and Tsang. Each attempt takes one normal (redrawn
/// while 1 + c x <= 0) and one uniform. Shapes below one draw Gamma(alpha + 1)
/// first and then one more uniform u, returning the gamma variate times u^(1/alpha).
pub(crate) fn gamma1<S: WordSource>(src: &mut S, alpha: f64, cx: Ctx) -> Result<f64> {
    if alpha < 1.0 {
        let g = gamma1(src, alpha + 1.0, cx)?;
        let u = cx.u01(src)?;
        return Ok(g * cx.math.pow(u, 1.0 / alpha));
    }
    let d = alpha - 1.0 / 3.0;
    let c = 1.0 / (9.0 * d).sqrt();
    loop {
        let (x, v) = loop {
            let x = norm(src)?;
            let v = 1.0 + c * x;
            if v > 0.0 {
                break (x, v);
            }
        };
        let v = v * v * v;
        let u = cx.u01(src)?;
        let x2 = x * x;
        if u < 1.0 - 0.0331 * x2 * x2 {
            return Ok(d * v);
        }
        if det_log(u) < 0.5 * x2 + d * (1.0 - v + det_log(v)) {
            return Ok(d * v);
        }
    }
}

/// X / (X + Y), X ~ Gamma(a) drawn before Y ~ Gamma(b). Redrawn in the
/// underflow case X + Y = 0, which needs both shapes far below one.
pub(crate) fn beta<S: WordSource>(src: &mut S, a: f64, b: f64, cx: Ctx) -> Result<f64> {
    loop {
        let x = gamma1(src, a, cx)?;
        let y = gamma1(src, b, cx)?;
        if x + y > 0.0 {
            return Ok(x / (x + y));
        }
    }
}

/// Z / sqrt(V / nu): the normal first, then V ~ chi2(nu).
pub(crate) fn student_t<S: WordSource>(src: &mut S, nu: f64, cx: Ctx) -> Result<f64> {
    let z = norm(src)?;
    let v = 2.0 * gamma1(src, 0.5 * nu, cx)?;
    Ok(z / (v / nu).sqrt())
}

/// (X / nu1) / (Y / nu2) with X ~ Gamma(nu1 / 2) drawn first.
pub(crate) fn fisher_f<S: WordSource>(src: &mut S, nu1: f64, nu2: f64, cx: Ctx) -> Result<f64> {
    let x = gamma1(src, 0.5 * nu1, cx)?;
    let y = gamma1(src, 0.5 * nu2, cx)?;
    Ok((x / nu1) / (y / nu2))
}

/// mu - beta log(-log u). A zero uniform is redrawn. Both logs are always the
/// deterministic ones, so the result is bit-identical in either mode: near
/// u = 1/e the outer log is close to zero, and when mu cancels against the
/// log term a one-ulp difference turns into thousands of ulps in the result.
pub(crate) fn gumbel<S: WordSource>(src: &mut S, mu: f64, scale: f64, cx: Ctx) -> Result<f64> {
    let u = loop {
        let u = cx.u01(src)?;
        if u > 0.0 {
            break u;
        }
    };
    Ok(mu - scale * det_log(-det_log(u)))
}

/// Generalized Pareto. With E ~ Exp(1), the two branches mu + sigma (P - 1) / xi
/// and mu - sigma (1 - 1/P) / xi for P = exp(|xi| E) both equal
/// mu + sigma expm1(xi E) / xi, which stays accurate for small |xi|.
/// expm1 is always deterministic: mu can cancel against the second term.
pub(crate) fn gpd<S: WordSource>(src: &mut S, mu: f64, sigma: f64, xi: f64) -> Result<f64> {
    let e = exp1(src)?;
    if xi == 0.0 {
        return Ok(mu + sigma * e);
    }
    Ok(mu + sigma * det_expm1(xi * e) / xi)
}

/// Azzalini: delta |Z1| + sqrt(1 - delta^2) Z2 with Z1 drawn first.
pub(crate) fn skew_normal<S: WordSource>(src: &mut S, mu: f64, sigma: f64, alpha: f64) -> Result<f64> {
    let delta = alpha / (1.0 + alpha * alpha).sqrt();
    let z1 = norm(src)?;
    let z2 = norm(src)?;
    Ok(mu + sigma * (delta * z1.abs() + (1.0 - delta * delta).sqrt() * z2))
}

/// Parameters of every continuous distribution, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Continuous {
    U01,
    Unif { a: f64, b: f64 },
    Norm,
    Normal { mu: f64, sigma: f64 },
    Exp { scale: f64 },
    Lognormal { mu: f64, sigma: f64 },
    Gamma { shape: f64, scale: f64 },
    Beta { a: f64, b: f64 },
    Chi2 { nu: f64 },
    T { nu: f64 },
    F { nu1: f64, nu2: f64 },
    Gumbel { mu: f64, beta: f64 },
    Pareto { xm: f64, alpha: f64 },
    Weibull { k: f64, lambda: f64 },
    SkewNormal { mu: f64, sigma: f64, alpha: f64 },
    Gpd { mu: f64, sigma: f64, xi: f64 },
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid_param(format!("{name} must be positive and finite, got {v}")))
    }
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid_param(format!("{name} must be finite, got {v}")))
    }
}

impl Continuous {
    /// Names accepted by [`Continuous::from_name`], with their parameter names.
    pub const CATALOGUE: [(&'static str, &'static [&'static str]); 16] = [
        ("u01", &[]),
        ("unif", &["a", "b"]),
        ("norm", &[]),
        ("normal", &["mu", "sigma"]),
        ("exp", &["scale"]),
        ("lognormal", &["mu", "sigma"]),
        ("gamma", &["shape", "scale"]),
        ("beta", &["a", "b"]),
        ("chi2", &["nu"]),
        ("t", &["nu"]),
        ("f", &["nu1", "nu2"]),
        ("gumbel", &["mu", "beta"]),
        ("pareto", &["xm", "alpha"]),
        ("weibull", &["k", "lambda"]),
        ("skew_normal", &["mu", "sigma", "alpha"]),
        ("gpd", &["mu", "sigma", "xi"]),
    ];

    /// The catalogue name.
    pub fn name(&self) -> &'static str {
        let i = match self {
            Continuous::U01 => 0,
            Continuous::Unif { .. } => 1,
            Continuous::Norm => 2,
            Continuous::Normal { .. } => 3,
            Continuous::Exp { .. } => 4,
            Continuous::Lognormal { .. } => 5,
            Continuous::Gamma { .. } => 6,
            Continuous::Beta { .. } => 7,
            Continuous::Chi2 { .. } => 8,
            Continuous::T { .. } => 9,
            Continuous::F { .. } => 10,
            Continuous::Gumbel { .. } => 11,
            Continuous::Pareto { .. } => 12,
            Continuous::Weibull { .. } => 13,
            Continuous::SkewNormal { .. } => 14,
            Continuous::Gpd { .. } => 15,
        };
        Self::CATALOGUE[i].0
    }

    /// Builds a distribution from its name and positional parameters.
    pub fn from_name(name: &str, p: &[f64]) -> Result<Continuous> {
        let (canon, names) = Self::CATALOGUE
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .ok_or_else(|| invalid_param(format!("unknown distribution '{name}'")))?;
        if p.len() != names.len() {
            return Err(invalid_param(format!("{canon} takes {} parameters, got {}", names.len(), p.len())));
        }
        let d = match *canon {
            "u01" => Continuous::U01,
            "unif" => Continuous::Unif { a: p[0], b: p[1] },
            "norm" => Continuous::Norm,
            "normal" => Continuous::Normal { mu: p[0], sigma: p[1] },
            "exp" => Continuous::Exp { scale: p[0] },
            "lognormal" => Continuous::Lognormal { mu: p[0], sigma: p[1] },
            "gamma" => Continuous::Gamma { shape: p[0], scale: p[1] },
            "beta" => Continuous::Beta { a: p[0], b: p[1] },
            "chi2" => Continuous::Chi2 { nu: p[0] },
            "t" => Continuous::T { nu: p[0] },
            "f" => Continuous::F { nu1: p[0], nu2: p[1] },
            "gumbel" => Continuous::Gumbel { mu: p[0], beta: p[1] },
            "pareto" => Continuous::Pareto { xm: p[0], alpha: p[1] },
            "weibull" => Continuous::Weibull { k: p[0], lambda: p[1] },
            "skew_normal" => Continuous::SkewNormal { mu: p[0], sigma: p[1], alpha: p[2] },
            _ => Continuous::Gpd { mu: p[0], sigma: p[1], xi: p[2] },
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Continuous::U01 | Continuous::Norm => Ok(()),
            Continuous::Unif { a, b } => {
                finite("a", a)?;
                finite("b", b)?;
                if a > b {
                    return Err(invalid_param(format!("unif needs a <= b, got a = {a}, b = {b}")));
                }
                Ok(())
            }
            Continuous::Normal { mu, sigma } | Continuous::Lognormal { mu, sigma } => {
                finite("mu", mu)?;
                positive("sigma", sigma)
            }
            Continuous::Exp { scale } => positive("scale", scale),
            Continuous::Gamma { shape, scale } => {
                positive("shape", shape)?;
                positive("scale", scale)
            }
            Continuous::Beta { a, b } => {
                positive("a", a)?;
                positive("b", b)
            }
            Continuous::Chi2 { nu } | Continuous::T { nu } => positive("nu", nu),
            Continuous::F { nu1, nu2 } => {
                positive("nu1", nu1)?;
                positive("nu2", nu2)
            }
            Continuous::Gumbel { mu, beta } => {
                finite("mu", mu)?;
                positive("beta", beta)
            }
            Continuous::Pareto { xm, alpha } => {
                positive("xm", xm)?;
                positive("alpha", alpha)
            }
            Continuous::Weibull { k, lambda } => {
                positive("k", k)?;
                positive("lambda", lambda)
            }
            Continuous::SkewNormal { mu, sigma, alpha } => {
                finite("mu", mu)?;
                positive("sigma", sigma)?;
                finite("alpha", alpha)
            }
            Continuous::Gpd { mu, sigma, xi } => {
                finite("mu", mu)?;
                positive("sigma", sigma)?;
                finite("xi", xi)
            }
        }
    }

    /// One variate. Parameters must already be valid.
    #[inline]
    pub(crate) fn sample<S: WordSource>(&self, src: &mut S, cx: Ctx) -> Result<f64> {
        Ok(match *self {
            Continuous::U01 => cx.u01(src)?,
            Continuous::Unif { a, b } => a + (b - a) * cx.u01(src)?,
            Continuous::Norm => norm(src)?,
            Continuous::Normal { mu, sigma } => mu + sigma * norm(src)?,
            Continuous::Exp { scale } => scale * exp1(src)?,
            Continuous::Lognormal { mu, sigma } => cx.math.exp(mu + sigma * norm(src)?),
            Continuous::Gamma { shape, scale } => scale * gamma1(src, shape, cx)?,
            Continuous::Beta { a, b } => beta(src, a, b, cx)?,
            Continuous::Chi2 { nu } => 2.0 * gamma1(src, 0.5 * nu, cx)?,
            Continuous::T { nu } => student_t(src, nu, cx)?,
            Continuous::F { nu1, nu2 } => fisher_f(src, nu1, nu2, cx)?,
            Continuous::Gumbel { mu, beta } => gumbel(src, mu, beta, cx)?,
            Continuous::Pareto { xm, alpha } => xm * cx.math.exp(exp1(src)? / alpha),
            Continuous::Weibull { k, lambda } => lambda * cx.math.pow(exp1(src)?, 1.0 / k),
            Continuous::SkewNormal { mu, sigma, alpha } => skew_normal(src, mu, sigma, alpha)?,
            Continuous::Gpd { mu, sigma, xi } => gpd(src, mu, sigma, xi)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buffer::Replay;

    const EXACT: Ctx = Ctx { math: Math { exact: true }, full_mantissa: false };

    /// A word that the normal ziggurat turns into exactly +0.0.
    const ZERO_NORMAL: u64 = 2;

    #[test]
    fn gamma_with_zero_normal_returns_d() {
        // x = 0 gives v = 1 and u < 1 always passes the squeeze.
        let words = [ZERO_NORMAL, 0x1234_5678_9abc_def0];
        let mut r = Replay::new(&words);
        let g = gamma1(&mut r, 2.5, EXACT).unwrap();
        assert_eq!(g, 2.5 - 1.0 / 3.0);
        assert_eq!(r.consumed(), 2);
    }

    #[test]
    fn gumbel_at_inverse_e() {
        // u01 of this word is the double nearest 1/e; the result is mu up to rounding.
        let u = (-1.0f64).exp();
        let word = ((u + 1.0).to_bits() & ((1 << 52) - 1)) << 12;
        let mut r = Replay::new(std::slice::from_ref(&word));
        let g = gumbel(&mut r, 3.0, 2.0, EXACT).unwrap();
        assert!((g - 3.0).abs() < 2e-15);
    }

    #[test]
    fn pareto_and_weibull_at_zero() {
        let word = [0u64];
        let p = Continuous::Pareto { xm: 1.5, alpha: 3.0 };
        assert_eq!(p.sample(&mut Replay::new(&word), EXACT).unwrap(), 1.5);
        let w = Continuous::Weibull { k: 2.0, lambda: 4.0 };
        assert_eq!(w.sample(&mut Replay::new(&word), EXACT).unwrap(), 0.0);
    }

    #[test]
    fn parameter_checks() {
        for (name, params) in Continuous::CATALOGUE {
            let p: Vec<f64> = params.iter().map(|_| 1.0).collect();
            assert_eq!(Continuous::from_name(name, &p).unwrap().name(), name);
        }
        assert!(Continuous::from_name("gamma", &[0.0, 1.0]).is_err());
        assert!(Continuous::from_name("unif", &[2.0, 1.0]).is_err());
        assert!(Continuous::from_name("unif", &[1.0, 1.0]).is_ok());
        assert!(Continuous::from_name("normal", &[0.0]).is_err());
        assert!(Continuous::from_name("cauchy", &[]).is_err());
        assert_eq!(Continuous::from_name("SKEW_NORMAL", &[0.0, 1.0, 2.0]).unwrap(), Continuous::SkewNormal {
            mu: 0.0,
            sigma: 1.0,
            alpha: 2.0
        });
    }
}
