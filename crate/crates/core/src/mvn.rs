//! Covariance factors for multivariate normal sampling.
//!
//! A plain Cholesky factorization is tried first. If it breaks down, a
//! diagonally pivoted one (the LAPACK `dpstrf` scheme) is used instead: it
//! stops at the numerical rank and yields A with Sigma = A A^T, A = P L.

use crate::error::{Error, Result};

/// Memory order of the output of [`Rng::mvn`](crate::Rng::mvn).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MvnLayout {
    /// The d coordinates of each sample are contiguous (n x d row-major).
    #[default]
    SampleMajor,
    /// The n values of each coordinate are contiguous (d x n row-major).
    CoordinateMajor,
}

/// A d x d factor A with Sigma = A A^T, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub d: usize,
    pub a: Vec<f64>,
    pub rank: usize,
    pub pivoted: bool,
}

impl Factor {
    /// x = mu + A z.
    #[inline]
    pub fn apply(&self, mu: &[f64], z: &[f64], x: &mut [f64]) {
        let d = self.d;
        for i in 0..d {
            let row = &self.a[i * d..(i + 1) * d];
            let mut s = 0.0;
            for j in 0..d {
                s += row[j] * z[j];
            }
            x[i] = mu[i] + s;
        }
    }
}

fn not_psd(msg: String) -> Error {
    Error::NotPositiveSemidefinite(msg)
}

/// Lower-triangular L with Sigma = L L^T, or `None` when a pivot is not positive.
pub fn cholesky(sigma: &[f64], d: usize) -> Option<Vec<f64>> {
    let mut l = vec![0.0; d * d];
    for j in 0..d {
        let mut diag = sigma[j * d + j];
        for k in 0..j {
            diag -= l[j * d + k] * l[j * d + k];
        }
        if !(diag > 0.0) {
            return None;
        }
        let ljj = diag.sqrt();
        l[j * d + j] = ljj;
        for i in j + 1..d {
            let mut s = sigma[i * d + j];
            for k in 0..j {
                s -= l[i * d + k] * l[j * d + k];
            }
            l[i * d + j] = s / ljj;
        }
    }
    Some(l)
}

/// Pivoted Cholesky. Stops when the largest remaining diagonal element is at
/// most d * eps * max(diag Sigma); the trailing block must then be negligible,
/// otherwise Sigma is reported as not positive semidefinite.
pub fn pivoted_cholesky(sigma: &[f64], d: usize) -> Result<Factor> {
    let mut s = sigma.to_vec();
    let mut perm: Vec<usize> = (0..d).collect();
    let max_diag = (0..d).map(|i| sigma[i * d + i]).fold(0.0f64, f64::max);
    let tol = d as f64 * f64::EPSILON * max_diag;
    let mut rank = d;
    // Right-looking factorization in place on the lower triangle of s.
    for j in 0..d {
        let (p, &piv) = (j..d)
            .map(|i| (i, &s[i * d + i]))
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("nonempty range");
        if piv <= tol {
            rank = j;
            break;
        }
        if p != j {
            swap_sym(&mut s, d, j, p);
            perm.swap(j, p);
        }
        let ljj = s[j * d + j].sqrt();
        s[j * d + j] = ljj;
        for i in j + 1..d {
            s[i * d + j] /= ljj;
        }
        for c in j + 1..d {
            for i in c..d {
                s[i * d + c] -= s[i * d + j] * s[c * d + j];
            }
        }
    }
    // Trailing Schur complement must be zero to working accuracy.
    let check = (max_diag.max(f64::MIN_POSITIVE)) * (d as f64) * f64::EPSILON.sqrt();
    for c in rank..d {
        for i in c..d {
            let v = s[i * d + c];
            if v.abs() > check || (i == c && v < -check) {
                return Err(not_psd(format!(
                    "residual {v:e} after rank {rank} exceeds tolerance {check:e}"
                )));
            }
        }
    }
    let mut a = vec![0.0; d * d];
    for j in 0..rank {
        for i in j..d {
            a[perm[i] * d + j] = s[i * d + j];
        }
    }
    Ok(Factor { d, a, rank, pivoted: true })
}

fn swap_sym(s: &mut [f64], d: usize, a: usize, b: usize) {
    // Only the lower triangle is current; mirror it, then swap rows and columns.
    for i in 0..d {
        for j in 0..i {
            s[j * d + i] = s[i * d + j];
        }
    }
    for k in 0..d {
        s.swap(a * d + k, b * d + k);
    }
    for k in 0..d {
        s.swap(k * d + a, k * d + b);
    }
}

/// Checks shape, finiteness and symmetry, then factors Sigma.
pub fn factor(sigma: &[f64], d: usize) -> Result<Factor> {
    if d == 0 {
        return Err(Error::InvalidParameter("mvn needs at least one dimension".into()));
    }
    if sigma.len() != d * d {
        return Err(Error::InvalidParameter(format!(
            "covariance has {} entries, expected {}",
            sigma.len(),
            d * d
        )));
    }
    if sigma.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter("covariance has non-finite entries".into()));
    }
    let scale = sigma.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    for i in 0..d {
        if sigma[i * d + i] < 0.0 {
            return Err(not_psd(format!("diagonal entry {i} is negative")));
        }
        for j in 0..i {
            if (sigma[i * d + j] - sigma[j * d + i]).abs() > 100.0 * f64::EPSILON * scale {
                return Err(Error::InvalidParameter(format!("covariance is not symmetric at ({i}, {j})")));
            }
        }
    }
    if let Some(a) = cholesky(sigma, d) {
        return Ok(Factor { d, a, rank: d, pivoted: false });
    }
    pivoted_cholesky(sigma, d)
}
