//! Distribution functions used to map samples to U(0, 1).
//!
//! Most come from `statrs`. The Gumbel, generalized Pareto and skew-normal
//! functions are written out here; the skew-normal one needs Owen's T, which is
//! integrated numerically.

use rngpack::Continuous;
use statrs::distribution::{
    Beta, ChiSquared, ContinuousCDF, Exp, FisherSnedecor, Gamma, LogNormal, Pareto, StudentsT, Weibull,
};

/// A cumulative distribution function.
pub type Cdf = Box<dyn Fn(f64) -> f64 + Send + Sync>;

fn boxed<D: ContinuousCDF<f64, f64> + Send + Sync + 'static>(d: D) -> Cdf {
    Box::new(move |x| d.cdf(x))
}

/// Standard normal CDF.
pub fn phi(x: f64) -> f64 {
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Owen's T function, T(h, a) = 1/(2 pi) * integral over [0, a] of
/// exp(-h^2 (1 + x^2) / 2) / (1 + x^2) dx.
pub fn owens_t(h: f64, a: f64) -> f64 {
    let f = |x: f64| (-0.5 * h * h * (1.0 + x * x)).exp() / (1.0 + x * x);
    adaptive_simpson(&f, 0.0, a, 1e-14, 40) / (2.0 * std::f64::consts::PI)
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    fn go(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64, whole: f64, m: f64, fm: f64, tol: f64, depth: u32) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        go(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1) + go(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    go(f, a, fa, b, fb, whole, m, fm, tol, depth)
}

/// The CDF of a continuous distribution.
pub fn cdf(d: &Continuous) -> Cdf {
    const OK: &str = "parameters were validated by the distribution";
    match *d {
        Continuous::U01 => Box::new(|x| x.clamp(0.0, 1.0)),
        Continuous::Unif { a, b } => Box::new(move |x| if b > a { ((x - a) / (b - a)).clamp(0.0, 1.0) } else { (x >= a) as u8 as f64 }),
        Continuous::Norm => Box::new(phi),
        Continuous::Normal { mu, sigma } => Box::new(move |x| phi((x - mu) / sigma)),
        Continuous::Exp { scale } => boxed(Exp::new(1.0 / scale).expect(OK)),
        Continuous::Lognormal { mu, sigma } => boxed(LogNormal::new(mu, sigma).expect(OK)),
        Continuous::Gamma { shape, scale } => boxed(Gamma::new(shape, 1.0 / scale).expect(OK)),
        Continuous::Beta { a, b } => boxed(Beta::new(a, b).expect(OK)),
        Continuous::Chi2 { nu } => boxed(ChiSquared::new(nu).expect(OK)),
        Continuous::T { nu } => boxed(StudentsT::new(0.0, 1.0, nu).expect(OK)),
        Continuous::F { nu1, nu2 } => boxed(FisherSnedecor::new(nu1, nu2).expect(OK)),
        Continuous::Gumbel { mu, beta } => Box::new(move |x| (-(-(x - mu) / beta).exp()).exp()),
        Continuous::Pareto { xm, alpha } => boxed(Pareto::new(xm, alpha).expect(OK)),
        Continuous::Weibull { k, lambda } => boxed(Weibull::new(k, lambda).expect(OK)),
        Continuous::SkewNormal { mu, sigma, alpha } => Box::new(move |x| {
            let z = (x - mu) / sigma;
            (phi(z) - 2.0 * owens_t(z, alpha)).clamp(0.0, 1.0)
        }),
        Continuous::Gpd { mu, sigma, xi } => Box::new(move |x| {
            let z = ((x - mu) / sigma).max(0.0);
            if xi == 0.0 {
                return -(-z).exp_m1();
            }
            let t = xi * z;
            if t <= -1.0 {
                return 1.0;
            }
            -(-t.ln_1p() / xi).exp_m1()
        }),
    }
}

/// Probability integral transform: F(x) for each sample.
pub fn pit(samples: &[f64], d: &Continuous) -> Vec<f64> {
    let f = cdf(d);
    samples.iter().map(|&x| f(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_cdf_at_zero() {
        assert_eq!(cdf(&Continuous::Exp { scale: 1.0 })(0.0), 0.0);
    }

    #[test]
    fn owens_t_special_values() {
        // T(0, a) = atan(a) / (2 pi); T(h, 1) = Phi(h)(1 - Phi(h)) / 2.
        for a in [0.3, 1.0, 4.0] {
            assert!((owens_t(0.0, a) - a.atan() / (2.0 * std::f64::consts::PI)).abs() < 1e-13);
        }
        for h in [0.1, 0.7, 2.5] {
            let p = phi(h);
            assert!((owens_t(h, 1.0) - 0.5 * p * (1.0 - p)).abs() < 1e-13, "{h} {} {}", owens_t(h, 1.0), 0.5 * p * (1.0 - p));
        }
        assert!((owens_t(0.5, -2.0) + owens_t(0.5, 2.0)).abs() < 1e-15);
    }

    #[test]
    fn skew_normal_with_zero_alpha_is_normal() {
        let f = cdf(&Continuous::SkewNormal { mu: 1.0, sigma: 2.0, alpha: 0.0 });
        for x in [-3.0, 0.0, 1.0, 4.5] {
            assert!((f(x) - phi((x - 1.0) / 2.0)).abs() < 1e-15);
        }
    }

    #[test]
    fn gpd_reduces_to_pareto_and_uniform() {
        // xi = 1/alpha with sigma = xm xi and mu = xm is Pareto(xm, alpha).
        let g = cdf(&Continuous::Gpd { mu: 2.0, sigma: 0.5, xi: 0.25 });
        let p = cdf(&Continuous::Pareto { xm: 2.0, alpha: 4.0 });
        for x in [2.0, 2.5, 4.0, 10.0] {
            assert!((g(x) - p(x)).abs() < 1e-14);
        }
        // xi = -1 is uniform on [mu, mu + sigma].
        let u = cdf(&Continuous::Gpd { mu: 0.0, sigma: 2.0, xi: -1.0 });
        assert!((u(0.5) - 0.25).abs() < 1e-15);
        assert_eq!(u(3.0), 1.0);
    }
}
