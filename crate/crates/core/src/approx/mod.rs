//! Two-sided inhomogeneous approximation constants `M(alpha, gamma)`.
//!
//! Exact values come from the four `s_j(k)` quotients built from the
//! backward and forward offsets of the alpha-expansion; when every `s_j(k)`
//! converges along residue classes the liminf is the least class limit.

mod estimate;
mod search;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::digits::{gamma_star, is_lattice_equivalent, DCouple, DigitSeq};
use crate::error::{Error, Result};
use crate::field::QuadNum;
use crate::ncf::NcfExpansion;

pub use estimate::{m_estimate, m_estimate_with_max, BandValue, DEFAULT_MAX_BANDS};
pub use search::{
    rho_search, rho_search_with_budget, search_space_size, NODE_BUDGET, SEARCH_LIMIT,
};

/// Evaluate `s_j` at a concrete index or at the limit along a residue class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SMode {
    Finite,
    Limit,
}

/// The four limit quotients at one index (or residue class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SQuadruple {
    pub k: usize,
    pub alpha_bar: QuadNum,
    pub alpha_fwd: QuadNum,
    pub d: DCouple,
    pub s1: QuadNum,
    pub s2: QuadNum,
    pub s3: QuadNum,
    pub s4: QuadNum,
}

impl SQuadruple {
    pub fn values(&self) -> [&QuadNum; 4] {
        [&self.s1, &self.s2, &self.s3, &self.s4]
    }

    /// `(j, s_j)` with the least value, `j` counted from 1.
    pub fn min(&self) -> (usize, &QuadNum) {
        let mut best = (1, &self.s1);
        for (j, s) in self.values().into_iter().enumerate().skip(1) {
            if s < best.1 {
                best = (j + 1, s);
            }
        }
        best
    }
}

/// Where the minimum of an exact result is attained.
///
/// The subsequence is `n_k = Q_k + u q_k + v q_{k-1}` for `k` in the residue
/// class; `s_1 .. s_4` are `(u, v) = (0, 0), (0, 1), (-1, 1), (-1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Witness {
    /// Residue of `k` modulo the digit period.
    pub residue: usize,
    /// First index of the residue class beyond the preperiods.
    pub k: usize,
    pub u: i64,
    pub v: i64,
}

const S_OFFSETS: [(i64, i64); 4] = [(0, 0), (0, 1), (-1, 1), (-1, 0)];

impl Witness {
    /// Which `s_j` the witness is, when it is one of them.
    pub fn j(&self) -> Option<usize> {
        S_OFFSETS
            .iter()
            .position(|&o| o == (self.u, self.v))
            .map(|i| i + 1)
    }
}

/// Outcome of an `M(alpha, gamma)` computation.
#[derive(Clone, Debug, PartialEq)]
pub enum MResult {
    Exact {
        value: QuadNum,
        witness: Witness,
    },
    /// `t_k = a_k` recurs, so only an upper bound is available.
    UpperBoundOnly {
        value: QuadNum,
        residues: Vec<usize>,
    },
    Estimate {
        value: f64,
        bands: Vec<BandValue>,
        /// Bands `window.0 ..= window.1` entered the minimum.
        window: (usize, usize),
    },
}

impl MResult {
    pub fn kind(&self) -> &'static str {
        match self {
            MResult::Exact { .. } => "exact",
            MResult::UpperBoundOnly { .. } => "upper_bound_only",
            MResult::Estimate { .. } => "estimate",
        }
    }

    /// The field value for exact and upper-bound results.
    pub fn exact_value(&self) -> Option<&QuadNum> {
        match self {
            MResult::Exact { value, .. } | MResult::UpperBoundOnly { value, .. } => Some(value),
            MResult::Estimate { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            MResult::Exact { value, .. } | MResult::UpperBoundOnly { value, .. } => value.to_f64(),
            MResult::Estimate { value, .. } => *value,
        }
    }
}

/// `[s1, s2, s3, s4]` from `alpha_bar`, `alpha`, `d^-`, `d^+`.
pub fn s_formulas(ab: &QuadNum, a: &QuadNum, dm: &QuadNum, dp: &QuadNum) -> [QuadNum; 4] {
    let one = QuadNum::one();
    let den = (&one - &(ab * a)) * 4;
    let s1 = (&(&one - ab) + dm) * (&(&one - a) + dp) / &den;
    let s2 = (&(&one + ab) + dm) * (&(&one + a) - dp) / &den;
    let s3 = (&(&one - ab) - dm) * (&(&one - a) - dp) / &den;
    let s4 = (&(&one + ab) - dm) * (&(&one + a) + dp) / &den;
    [s1, s2, s3, s4]
}

fn check_base(base: &NcfExpansion, d: &DigitSeq) -> Result<()> {
    if base != d.base() {
        return Err(Error::InvalidExpansion(format!(
            "digit sequence is over {} but the base is {base}",
            d.base()
        )));
    }
    if d.is_truncated() {
        return Err(Error::NotPeriodic);
    }
    Ok(())
}

/// The quadruple `s_1(k) .. s_4(k)`; in limit mode `k` is a residue modulo
/// the digit period and the limits along that class are returned.
pub fn s_values(base: &NcfExpansion, d: &DigitSeq, k: usize, mode: SMode) -> Result<SQuadruple> {
    check_base(base, d)?;
    let (idx, alpha_bar, dc) = match mode {
        SMode::Finite => (k, base.rev_alpha_bar(k)?, d.d_values(k)?),
        SMode::Limit => (d.residue_index(k)?, d.limit_alpha_bar(k)?, d.d_limits(k)?),
    };
    let alpha_fwd = base.tail_alpha(idx)?;
    let [s1, s2, s3, s4] = s_formulas(&alpha_bar, &alpha_fwd, &dc.d_minus, &dc.d_plus);
    Ok(SQuadruple {
        k: idx,
        alpha_bar,
        alpha_fwd,
        d: dc,
        s1,
        s2,
        s3,
        s4,
    })
}

fn check_not_lattice(d: &DigitSeq) -> Result<()> {
    let gamma = d.gamma()?;
    let alpha = d.base().value()?;
    if let Some((m, l)) = is_lattice_equivalent(&gamma, &alpha)? {
        return Err(Error::LatticeGamma {
            m: m.to_string(),
            l: l.to_string(),
        });
    }
    Ok(())
}

/// Exact `M(alpha, gamma)` for an eventually periodic expansion.
///
/// When `t_k = a_k` recurs the result is the upper bound
/// `liminf alpha_bar_k / (4 (1 - alpha_bar_k alpha_k))` over those `k`.
pub fn m_exact(base: &NcfExpansion, d: &DigitSeq) -> Result<MResult> {
    check_base(base, d)?;
    check_not_lattice(d)?;
    let l = d.period_len();
    if d.t_equals_a_in_period() {
        let mut alpha_cache: HashMap<usize, QuadNum> = HashMap::new();
        let mut best: Option<QuadNum> = None;
        let mut residues = Vec::new();
        for r in 0..l {
            let k = d.residue_index(r)?;
            if d.t(k) != Some(d.term(k) as i64) {
                continue;
            }
            residues.push(k % l);
            let ph = base.phase(k);
            let a = match alpha_cache.get(&ph) {
                Some(a) => a.clone(),
                None => {
                    let a = base.tail_alpha(k)?;
                    alpha_cache.insert(ph, a.clone());
                    a
                }
            };
            let w = d.limit_alpha_bar(r)?;
            let v = &w / &((QuadNum::one() - &w * &a) * 4);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        residues.sort_unstable();
        return Ok(MResult::UpperBoundOnly {
            value: best.expect("period contains t = a"),
            residues,
        });
    }
    let quads = (0..l)
        .into_par_iter()
        .map(|r| s_values(base, d, r, SMode::Limit))
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<(QuadNum, Witness)> = None;
    for q in &quads {
        let (j, value) = q.min();
        if best.as_ref().is_none_or(|(b, _)| value < b) {
            let (u, v) = S_OFFSETS[j - 1];
            let witness = Witness {
                residue: q.k % l,
                k: q.k,
                u,
                v,
            };
            best = Some((value.clone(), witness));
        }
    }
    let (value, witness) = best.expect("nonempty period");
    Ok(MResult::Exact { value, witness })
}

/// Least limit of `|n_k| * |n_k alpha - m_k - gamma|` over one residue class,
/// where `(n_k, m_k) = (Q_k, P_k) + u (q_k, p_k) + v (q_{k-1}, p_{k-1})`.
///
/// With `e = Q_k/q_k -> (1 - abar + d^-)/2` and the remainder
/// `gamma_k -> (1 - alpha + d^+)/2` the limit is
/// `|e + u + v abar| |v + u alpha - gamma_k| / (1 - abar alpha)`.
/// Offsets with `e + u + v abar = 0` keep `n_k` bounded and are skipped.
fn lattice_class_min(ab: &QuadNum, a: &QuadNum, dc: &DCouple) -> Option<(QuadNum, i64, i64)> {
    let one = QuadNum::one();
    let e = (&(&one - ab) + &dc.d_minus) / 2;
    let g = (&(&one - a) + &dc.d_plus) / 2;
    let den = &one - &(ab * a);
    let (abf, af, ef, gf, denf) = (
        ab.to_f64(),
        a.to_f64(),
        e.to_f64(),
        g.to_f64(),
        den.to_f64(),
    );
    // any n with |n| ||n alpha - gamma|| <= 1/4 and q_{k-1} <= |n| < q_k has
    // |e + u + v abar| < 1 and |v + u alpha - gamma_k| <= (1 - abar alpha)/(4 abar)
    let bmax = denf / (4.0 * abf);
    let vmax = ((bmax + 1.0 + 2.0 * af) / denf).floor() as i64 + 1;
    let umax = (2.0 + vmax as f64 * abf).floor() as i64 + 1;
    let mut cands: Vec<(f64, i64, i64)> = Vec::new();
    for v in -vmax..=vmax {
        for u in -umax..=umax {
            let af_ = ef + u as f64 + v as f64 * abf;
            let bf_ = v as f64 + u as f64 * af - gf;
            cands.push(((af_ * bf_).abs() / denf, u, v));
        }
    }
    let top = cands
        .iter()
        .filter(|c| (ef + c.1 as f64 + c.2 as f64 * abf).abs() > 1e-9)
        .map(|c| c.0)
        .fold(f64::INFINITY, f64::min);
    let slack = 1e-9 * top.abs().max(1e-3);
    let mut best: Option<(QuadNum, i64, i64)> = None;
    for &(f, u, v) in &cands {
        if f > top + slack {
            continue;
        }
        let big_a = &(&e + u) + &(ab * v);
        if big_a.is_zero() {
            continue;
        }
        let big_b = &(a * u) + &(QuadNum::from_int(v) - &g);
        let val = (big_a * big_b).abs() / &den;
        if best.as_ref().is_none_or(|(b, _, _)| val < *b) {
            best = Some((val, u, v));
        }
    }
    best
}

/// Exact `M(alpha, gamma)` for any eventually periodic, non-lattice target,
/// including expansions where `t_k = a_k` recurs.
///
/// Every pair `(n, m)` is `(Q_k, P_k) + u (q_k, p_k) + v (q_{k-1}, p_{k-1})`
/// for each `k`; choosing `k` with `q_{k-1} <= |n| < q_k` bounds `(u, v)` for
/// the approximations that can reach the liminf, so the liminf is the least
/// limit over residue classes and a finite box of offsets. Where `t_k = a_k`
/// occurs only finitely often this agrees with [`m_exact`].
pub fn m_exact_full(base: &NcfExpansion, d: &DigitSeq) -> Result<MResult> {
    check_base(base, d)?;
    check_not_lattice(d)?;
    let l = d.period_len();
    let per_class = (0..l)
        .into_par_iter()
        .map(|r| {
            let k = d.residue_index(r)?;
            let ab = d.limit_alpha_bar(r)?;
            let a = base.tail_alpha(k)?;
            let dc = d.d_limits(r)?;
            Ok((k, lattice_class_min(&ab, &a, &dc)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<(QuadNum, Witness)> = None;
    for (k, found) in per_class {
        let Some((value, u, v)) = found else { continue };
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            let witness = Witness {
                residue: k % l,
                k,
                u,
                v,
            };
            best = Some((value, witness));
        }
    }
    let (value, witness) = best.expect("some offset has unbounded n");
    Ok(MResult::Exact { value, witness })
}

/// `M(alpha, gamma*)` together with the data it was computed from.
#[derive(Clone, Debug)]
pub struct GammaStarBound {
    pub digits: DigitSeq,
    pub result: MResult,
    /// `R`, the least recurring partial quotient.
    pub r: u64,
    /// `false` when `R < 3`, where the lower bound `C(R)` is not claimed.
    pub bound_applies: bool,
}

/// `rho(alpha) >= M(alpha, gamma*)`, evaluated exactly.
pub fn rho_lower_via_gamma_star(base: &NcfExpansion) -> Result<GammaStarBound> {
    let digits = gamma_star(base)?;
    let result = m_exact(base, &digits)?;
    let r = base.liminf_term().ok_or(Error::FiniteExpansion)?;
    Ok(GammaStarBound {
        digits,
        result,
        r,
        bound_applies: r >= 3,
    })
}
