//! Deterministic elementary functions.
//!
//! The `det_*` functions come from the pure-Rust port of the FreeBSD/musl math
//! library, built without architecture-specific code paths. They use only IEEE
//! basic operations, so their results depend on the input bits alone. The
//! platform versions (`f64::ln` and friends) may be faster but are not promised
//! to agree across systems.

#[inline]
pub fn det_log(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn det_exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn det_log1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub fn det_expm1(x: f64) -> f64 {
    libm::expm1(x)
}

#[inline]
pub fn det_pow(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// Chooses between deterministic and platform math.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Math {
    pub exact: bool,
}

impl Math {
    #[inline(always)]
    pub fn exp(self, x: f64) -> f64 {
        if self.exact {
            det_exp(x)
        } else {
            x.exp()
        }
    }

    #[inline(always)]
    pub fn pow(self, x: f64, y: f64) -> f64 {
        if self.exact {
            det_pow(x, y)
        } else {
            x.powf(y)
        }
    }
}

/// Distance in units in the last place between two finite doubles of equal sign.
pub fn ulp_distance(a: f64, b: f64) -> u64 {
    if a == b {
        return 0;
    }
    let key = |x: f64| {
        let bits = x.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    };
    key(a).abs_diff(key(b))
}
