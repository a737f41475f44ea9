//! Direct scan of `|n| * ||n alpha - gamma||` over dyadic bands of `|n|`.

use rayon::prelude::*;

use crate::digits::is_lattice_equivalent;
use crate::error::{Error, Result};
use crate::field::QuadNum;

use super::MResult;

/// Largest band count accepted by [`m_estimate`] (`|n| < 2^22`).
pub const DEFAULT_MAX_BANDS: usize = 22;

/// Hard limit from the 128-bit fixed-point representation.
const ABSOLUTE_MAX_BANDS: usize = 27;

/// Minimum of `|n| * ||n alpha - gamma||` over `2^k <= |n| < 2^(k+1)`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct BandValue {
    pub k: usize,
    pub min: f64,
    /// A signed `n` attaining the minimum.
    pub n: i64,
}

/// Distance to the nearest integer of a fixed-point fraction in `[0, 1)`.
fn dist(frac: u128, one: u128) -> u128 {
    frac.min(one - frac)
}

fn scan_band(k: usize, alpha: u128, gamma: u128, bits: u32) -> BandValue {
    let one = 1u128 << bits;
    let mask = one - 1;
    let start = 1u128 << k;
    let end = 1u128 << (k + 1);
    let mut x = start.wrapping_mul(alpha) & mask;
    let mut best = (u128::MAX, 0u128, 1i64);
    for n in start..end {
        let plus = dist(x.wrapping_sub(gamma) & mask, one);
        let minus = dist(x.wrapping_add(gamma) & mask, one);
        for (d, sign) in [(plus, 1i64), (minus, -1i64)] {
            let score = scaled(n, d, bits);
            if score < best.0 {
                best = (score, n, sign);
            }
        }
        x = (x + alpha) & mask;
    }
    let (score, n, sign) = best;
    BandValue {
        k,
        min: score as f64 / 2f64.powi(SCORE_BITS as i32),
        n: sign * n as i64,
    }
}

const SCORE_BITS: u32 = 64;

/// `floor(n * d / 2^bits * 2^SCORE_BITS)` without overflow.
fn scaled(n: u128, d: u128, bits: u32) -> u128 {
    // d < 2^bits, n < 2^27; reduce d to 96 significant bits first
    let shift = bits.saturating_sub(96);
    let d = d >> shift;
    let prod = n * d;
    let rem = bits - shift;
    if rem >= SCORE_BITS {
        prod >> (rem - SCORE_BITS)
    } else {
        prod << (SCORE_BITS - rem)
    }
}

/// Numeric liminf estimate with the default band limit.
pub fn m_estimate(alpha: &QuadNum, gamma: &QuadNum, bands: usize) -> Result<MResult> {
    m_estimate_with_max(alpha, gamma, bands, DEFAULT_MAX_BANDS)
}

/// Minimum of the last `ceil(bands/2)` band minima, with the profile of all
/// bands `k = 0 .. bands-1` attached.
pub fn m_estimate_with_max(
    alpha: &QuadNum,
    gamma: &QuadNum,
    bands: usize,
    max_bands: usize,
) -> Result<MResult> {
    let max = max_bands.min(ABSOLUTE_MAX_BANDS);
    if bands == 0 || bands > max {
        return Err(Error::PrecisionExhausted {
            requested: bands,
            max,
        });
    }
    if alpha.is_rational() || !alpha.in_unit_interval() {
        return Err(Error::OutOfRange(alpha.to_string()));
    }
    if !gamma.in_unit_interval() {
        return Err(Error::OutOfRange(gamma.to_string()));
    }
    if gamma.same_field(alpha) {
        if let Some((m, l)) = is_lattice_equivalent(gamma, alpha)? {
            return Err(Error::LatticeGamma {
                m: m.to_string(),
                l: l.to_string(),
            });
        }
    }
    // n * alpha needs bands + bits < 128 with n^2 * 2^-bits below 1e-12
    let bits = (2 * bands + 44).min(127 - bands) as u32;
    let a = alpha.floor_times_pow2(bits as i64);
    let g = gamma.floor_times_pow2(bits as i64);
    let a: u128 = a.try_into().expect("fraction fits in 128 bits");
    let g: u128 = g.try_into().expect("fraction fits in 128 bits");
    let profile: Vec<BandValue> = (0..bands)
        .into_par_iter()
        .map(|k| scan_band(k, a, g, bits))
        .collect();
    let from = bands - bands.div_ceil(2);
    let value = profile[from..]
        .iter()
        .map(|b| b.min)
        .fold(f64::INFINITY, f64::min);
    Ok(MResult::Estimate {
        value,
        bands: profile,
        window: (from, bands - 1),
    })
}
