//! Offline generation and verification of the ziggurat constants.
//!
//! Two independent jobs live here. The first rebuilds `k`, `w` and `f` from the
//! equal-area recursion in double-double arithmetic and measures how far the
//! shipped constants are from the result. The second derives the secant band
//! widths from the shipped constants: within strip i the secant has slope s, the
//! density's distance to it is extremal where f'(x) = s, which gives
//! x = sqrt(-W(-s^2)) for the normal (branch 0 below the inflection point,
//! branch -1 above) and x = -log(-s) for the exponential.

use super::{ZigKind, ZigTables};
use crate::ddouble::DD;
use crate::detmath::ulp_distance;

/// Relative safety margin added to every band width, in units of the strip height.
/// Far larger than the rounding error of computing y and f(x) in doubles.
pub const BAND_MARGIN: f64 = 1e-10;

const TEXT_FORMAT: u32 = 1;

/// Principal branch W0(z) for z >= -1/e.
pub fn lambert_w0(z: f64) -> f64 {
    let e_inv = (-1.0f64).exp();
    if z <= -e_inv {
        return -1.0;
    }
    let mut w = if z < -0.25 {
        // Series about the branch point.
        let p = (2.0 * (1.0 + std::f64::consts::E * z)).sqrt();
        -1.0 + p - p * p / 3.0
    } else if z < 3.0 {
        z / (1.0 + z)
    } else {
        z.ln() - z.ln().ln()
    };
    halley(z, &mut w);
    w
}

/// Lower branch W_{-1}(z) for -1/e <= z < 0.
pub fn lambert_wm1(z: f64) -> f64 {
    let e_inv = (-1.0f64).exp();
    if z <= -e_inv {
        return -1.0;
    }
    let mut w = if z < -0.25 {
        let p = (2.0 * (1.0 + std::f64::consts::E * z)).sqrt();
        -1.0 - p - p * p / 3.0
    } else {
        let l1 = (-z).ln();
        l1 - (-l1).ln()
    };
    halley(z, &mut w);
    w
}

fn halley(z: f64, w: &mut f64) {
    for _ in 0..64 {
        let ew = w.exp();
        let f = *w * ew - z;
        let wp1 = *w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        let step = f / (ew * wp1 - (*w + 2.0) * f / (2.0 * wp1));
        *w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
}

/// Points in strip `idx` where the density's distance to the secant is extremal.
pub fn tangent_points(kind: ZigKind, slope: f64) -> Vec<f64> {
    match kind {
        ZigKind::Normal => {
            let z = -slope * slope;
            if z < -(-1.0f64).exp() {
                return vec![];
            }
            vec![(-lambert_w0(z)).sqrt(), (-lambert_wm1(z)).sqrt()]
        }
        ZigKind::Exponential => vec![-(-slope).ln()],
    }
}

/// Largest distances below and above the secant, as fractions of the strip
/// height f_{i-1} - f_i.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripBand {
    pub below: f64,
    pub above: f64,
    pub tangent_points: usize,
}

/// Band widths of every strip for the given constants. Strip 0 has none.
pub fn strip_bands(t: &ZigTables) -> Vec<StripBand> {
    let scale = (1u64 << t.magnitude_bits) as f64;
    let mut out = vec![StripBand { below: 0.0, above: 0.0, tangent_points: 0 }];
    for i in 1..256 {
        let width = scale - t.k[i] as f64;
        let height = t.f[i - 1] - t.f[i];
        let x_lo = t.k[i] as f64 * t.w[i];
        let x_hi = scale * t.w[i];
        // Secant in magnitude units: f_{i-1} at m = k_i, f_i at m = scale.
        let secant = |x: f64| t.f[i] + height * (scale - x / t.w[i]) / width;
        let slope = -height / (width * t.w[i]);
        let inside: Vec<f64> =
            tangent_points(t.kind, slope).into_iter().filter(|&x| x > x_lo && x < x_hi).collect();
        let mut below = 0.0f64;
        let mut above = 0.0f64;
        for &x in [x_lo, x_hi].iter().chain(inside.iter()) {
            let g = (t.kind.pdf(x) - secant(x)) / height;
            above = above.max(g);
            below = below.max(-g);
        }
        out.push(StripBand { below, above, tangent_points: inside.len() });
    }
    out
}

fn to_integer_gap(frac: f64, width: u64) -> u128 {
    ((frac + BAND_MARGIN) * 9_007_199_254_740_992.0 * width as f64).ceil() as u128
}

/// Integer band widths (below, above) for the given constants.
pub fn integer_gaps(t: &ZigTables) -> (Vec<u128>, Vec<u128>) {
    let scale = 1u64 << t.magnitude_bits;
    let bands = strip_bands(t);
    let mut lo = vec![0u128; 256];
    let mut hi = vec![0u128; 256];
    for i in 1..256 {
        let width = scale - t.k[i];
        lo[i] = to_integer_gap(bands[i].below, width);
        hi[i] = to_integer_gap(bands[i].above, width);
    }
    (lo, hi)
}

fn rust_array(name: &str, v: &[u128]) -> String {
    let mut s = format!("pub(crate) const {name}: [u128; 256] = [\n");
    for x in v {
        s.push_str(&format!("    {x:#x},\n"));
    }
    s.push_str("];\n");
    s
}

/// Source of `gap_tables.rs`.
pub fn render_gap_source() -> String {
    let (nlo, nhi) = integer_gaps(&super::NORMAL);
    let (elo, ehi) = integer_gaps(&super::EXPONENTIAL);
    let mut s = String::from("// Generated by `rngpack zigtables --write`; do not edit.\n\n");
    s.push_str(&rust_array("NORM_GAP_LO", &nlo));
    s.push('\n');
    s.push_str(&rust_array("NORM_GAP_HI", &nhi));
    s.push('\n');
    s.push_str(&rust_array("EXP_GAP_LO", &elo));
    s.push('\n');
    s.push_str(&rust_array("EXP_GAP_HI", &ehi));
    s
}

fn kind_name(kind: ZigKind) -> &'static str {
    match kind {
        ZigKind::Normal => "normal",
        ZigKind::Exponential => "exponential",
    }
}

/// Text dump of every table, with a trailing checksum line.
pub fn render_text_dump() -> String {
    let mut body = String::new();
    body.push_str("# Ziggurat tables: index, k, bits of w, bits of f, band below, band above.\n");
    body.push_str(&format!("format {TEXT_FORMAT}\n"));
    for t in [&super::NORMAL, &super::EXPONENTIAL] {
        body.push_str(&format!(
            "table {} strips 256 magnitude_bits {} r {:#018x}\n",
            kind_name(t.kind),
            t.magnitude_bits,
            t.r.to_bits()
        ));
        for i in 0..256 {
            body.push_str(&format!(
                "{} {:#x} {:#018x} {:#018x} {:#x} {:#x}\n",
                i,
                t.k[i],
                t.w[i].to_bits(),
                t.f[i].to_bits(),
                t.gap_lo[i],
                t.gap_hi[i]
            ));
        }
    }
    let crc = crc32fast::hash(body.as_bytes());
    body.push_str(&format!("crc32 {crc:#010x}\n"));
    body
}

/// The committed text dump.
pub fn committed_text_dump() -> &'static str {
    include_str!("../../data/ziggurat_tables.txt")
}

/// The committed gap table source.
pub fn committed_gap_source() -> &'static str {
    include_str!("gap_tables.rs")
}

/// `k`, `w`, `f` rebuilt from the defining constants.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseTables {
    pub k: Vec<u64>,
    pub w: Vec<f64>,
    pub f: Vec<f64>,
    /// Common strip area.
    pub v: f64,
}

fn dd_pdf(kind: ZigKind, x: DD) -> DD {
    match kind {
        ZigKind::Normal => (-(x * x).mul_f64(0.5)).exp(),
        ZigKind::Exponential => (-x).exp(),
    }
}

fn dd_pdf_inv(kind: ZigKind, y: DD) -> DD {
    match kind {
        ZigKind::Normal => (-y.ln()).mul_f64(2.0).sqrt(),
        ZigKind::Exponential => -y.ln(),
    }
}

fn floor_u64(d: DD) -> u64 {
    let fl = d.hi.floor();
    if fl == d.hi && d.lo < 0.0 {
        fl as u64 - 1
    } else {
        fl as u64
    }
}

/// Tail start r in double-double.
fn dd_r(kind: ZigKind) -> DD {
    match kind {
        ZigKind::Normal => DD::new(3.6541528853610088, 6.6854242435662e-19),
        ZigKind::Exponential => DD::new(7.69711747013105, -3.6240659001040e-16),
    }
}

/// Integral of exp(-t^2/2) over [r, inf), by the continued fraction for Mills' ratio.
fn normal_tail(r: DD) -> DD {
    let mut t = r;
    for n in (1..=400).rev() {
        t = r + DD::from_f64(n as f64) / t;
    }
    dd_pdf(ZigKind::Normal, r) / t
}

/// Rebuilds `k`, `w` and `f` by the equal-area recursion.
pub fn regenerate_base_tables(kind: ZigKind) -> BaseTables {
    let bits = match kind {
        ZigKind::Normal => 52,
        ZigKind::Exponential => 53,
    };
    let scale = (1u64 << bits) as f64;
    let r = dd_r(kind);
    let fr = dd_pdf(kind, r);
    let v = match kind {
        ZigKind::Normal => r * fr + normal_tail(r),
        ZigKind::Exponential => (r + DD::ONE) * fr,
    };
    let mut x = vec![DD::ZERO; 256];
    x[255] = r;
    for i in (2..=255).rev() {
        x[i - 1] = dd_pdf_inv(kind, dd_pdf(kind, x[i]) + v / x[i]);
    }
    let mut k = vec![0u64; 256];
    let mut w = vec![0f64; 256];
    let mut f = vec![0f64; 256];
    k[0] = floor_u64((r * fr / v).mul_f64(scale));
    w[0] = (v / fr).mul_f64(1.0 / scale).to_f64();
    f[0] = 1.0;
    for i in 1..256 {
        w[i] = x[i].mul_f64(1.0 / scale).to_f64();
        f[i] = dd_pdf(kind, x[i]).to_f64();
        if i >= 2 {
            k[i] = floor_u64((x[i - 1] / x[i]).mul_f64(scale));
        }
    }
    BaseTables { k, w, f, v: v.to_f64() }
}

/// Largest differences between rebuilt and shipped constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub k: u64,
    pub w_ulps: u64,
    pub f_ulps: u64,
    pub k_mismatches: usize,
    pub w_mismatches: usize,
    pub f_mismatches: usize,
}

pub fn compare_with_shipped(kind: ZigKind) -> Deviation {
    let t = kind.tables();
    let b = regenerate_base_tables(kind);
    let mut d = Deviation { k: 0, w_ulps: 0, f_ulps: 0, k_mismatches: 0, w_mismatches: 0, f_mismatches: 0 };
    for i in 0..256 {
        let dk = b.k[i].abs_diff(t.k[i]);
        let dw = ulp_distance(b.w[i], t.w[i]);
        let df = ulp_distance(b.f[i], t.f[i]);
        d.k = d.k.max(dk);
        d.w_ulps = d.w_ulps.max(dw);
        d.f_ulps = d.f_ulps.max(df);
        d.k_mismatches += (dk != 0) as usize;
        d.w_mismatches += (dw != 0) as usize;
        d.f_mismatches += (df != 0) as usize;
    }
    d
}

/// Area of every strip under the shipped constants: x_i (f_{i-1} - f_i) for
/// i >= 1 and r f(r) plus the tail for the base strip.
pub fn strip_areas(kind: ZigKind) -> Vec<f64> {
    let t = kind.tables();
    let scale = (1u64 << t.magnitude_bits) as f64;
    let r = DD::from_f64(t.r);
    let fr = dd_pdf(kind, r);
    let tail = match kind {
        ZigKind::Normal => normal_tail(r),
        ZigKind::Exponential => fr,
    };
    let mut out = vec![(r * fr + tail).to_f64()];
    for i in 1..256 {
        let x = DD::from_f64(t.w[i]).mul_f64(scale);
        out.push((x * (DD::from_f64(t.f[i - 1]) - DD::from_f64(t.f[i]))).to_f64());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambert_branches_invert() {
        for &z in &[-0.36, -0.3, -0.1, -1e-3, -1e-8] {
            let a = lambert_w0(z);
            let b = lambert_wm1(z);
            assert!((a * a.exp() - z).abs() < 1e-15, "{z}");
            assert!((b * b.exp() - z).abs() < 1e-15, "{z}");
            assert!(a >= -1.0 && b <= -1.0);
        }
        assert!((lambert_w0(1.0) - 0.567_143_290_409_783_8).abs() < 1e-15);
    }

    #[test]
    fn inflection_strip_has_two_tangents() {
        let bands = strip_bands(&super::super::NORMAL);
        let t = &super::super::NORMAL;
        let scale = (1u64 << 52) as f64;
        let idx = (1..256).find(|&i| t.k[i] as f64 * t.w[i] < 1.0 && scale * t.w[i] > 1.0).unwrap();
        assert_eq!(bands[idx].tangent_points, 2);
        assert!(bands[idx].below > 0.0 && bands[idx].above > 0.0);
    }

    #[test]
    fn committed_gap_source_is_current() {
        assert_eq!(render_gap_source(), committed_gap_source());
    }

    #[test]
    fn committed_text_dump_is_current() {
        assert_eq!(render_text_dump(), committed_text_dump());
    }
}
