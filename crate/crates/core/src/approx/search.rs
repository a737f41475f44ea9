//! Bounded search over purely periodic t-patterns for a large `M(alpha, gamma)`.
//!
//! Patterns are scored in floating point from the periodic closures of
//! `d^-` and `d^+`; the near-best ones are then re-evaluated exactly.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::digits::{is_lattice_equivalent, DigitSeq};
use crate::error::{Error, Result};
use crate::field::QuadNum;
use crate::ncf::NcfExpansion;

use super::{m_exact_full, MResult};

/// Largest number of patterns of one length enumerated exhaustively.
pub const SEARCH_LIMIT: u128 = 100_000;

/// Default node budget for the pruned search of longer periods.
pub const NODE_BUDGET: u64 = 200_000_000;

/// Candidates within this much of the best float score are checked exactly.
const FLOAT_SLACK: f64 = 1e-9;

/// At most this many near-best candidates are re-evaluated exactly.
const MAX_EXACT: usize = 256;

/// Allowed `t` at a position with partial quotient `a`: same parity as `a`,
/// `-(a-2) <= t <= a`, `|t| <= cap`.
fn choices(a: u64, cap: u64) -> Vec<i64> {
    let a = a as i64;
    let cap = cap.min(i64::MAX as u64) as i64;
    (-(a - 2)..=a)
        .step_by(2)
        .filter(|t| t.abs() <= cap)
        .collect()
}

struct Layout {
    /// `alpha_k` and the limit of `alpha_bar_k` for each phase of one base period.
    alpha: Vec<f64>,
    alpha_bar: Vec<f64>,
    terms: Vec<i64>,
    /// Choices for each position of one base period.
    options: Vec<Vec<i64>>,
}

/// Number of patterns [`rho_search`] would enumerate.
pub fn search_space_size(base: &NcfExpansion, period_multiple_bound: usize, cap: u64) -> u128 {
    let p = base.preperiod().len();
    let m = base.period().len();
    let per_period: u128 = (0..m)
        .map(|i| choices(base.term(p + 1 + i).unwrap(), cap).len() as u128)
        .try_fold(1u128, |acc, c| acc.checked_mul(c))
        .unwrap_or(u128::MAX);
    (1..=period_multiple_bound as u32)
        .map(|j| per_period.checked_pow(j).unwrap_or(u128::MAX))
        .fold(0u128, |acc, c| acc.saturating_add(c))
}

impl Layout {
    fn new(base: &NcfExpansion, cap: u64) -> Result<Self> {
        let p = base.preperiod().len();
        let m = base.period().len();
        let mut alpha = Vec::with_capacity(m);
        let mut alpha_bar = Vec::with_capacity(m);
        let mut options = Vec::with_capacity(m);
        let mut terms = Vec::with_capacity(m);
        for i in 0..m {
            let k = p + 1 + i;
            alpha.push(base.tail_alpha(k)?.to_f64());
            alpha_bar.push(base.limit_alpha_bar(k % m)?.to_f64());
            options.push(choices(base.term(k).unwrap(), cap));
            terms.push(base.term(k).unwrap() as i64);
        }
        Ok(Layout {
            alpha,
            alpha_bar,
            terms,
            options,
        })
    }

    fn decode(&self, mut index: u128, len: usize, out: &mut Vec<i64>) {
        let m = self.options.len();
        out.clear();
        for i in 0..len {
            let opts = &self.options[i % m];
            let r = opts.len() as u128;
            out.push(opts[(index % r) as usize]);
            index /= r;
        }
    }

    /// A digit `a - 1` followed, cyclically, by `a - 2` digits and then
    /// another `a - 1` (possibly itself) is forbidden.
    fn admissible(&self, t: &[i64]) -> bool {
        let l = t.len();
        let m = self.terms.len();
        (0..l).filter(|&s| t[s] == self.terms[s % m]).all(|s| {
            let mut j = (s + 1) % l;
            while t[j] == self.terms[j % m] - 2 && j != s {
                j = (j + 1) % l;
            }
            t[j] != self.terms[j % m]
        })
    }

    /// Least limiting value over all positions of the periodic pattern;
    /// `-inf` for inadmissible patterns.
    fn score(&self, t: &[i64], scratch: &mut (Vec<f64>, Vec<f64>)) -> f64 {
        let l = t.len();
        let m = self.alpha.len();
        let recurs = (0..l).any(|i| t[i] == self.terms[i % m]);
        if recurs && !self.admissible(t) {
            return f64::NEG_INFINITY;
        }
        let (dm, dp) = scratch;
        dm.clear();
        dm.resize(l, 0.0);
        dp.clear();
        dp.resize(l, 0.0);
        // d^-_i = abar_i (t_i + d^-_{i-1}), cyclic
        let (mut mul, mut add) = (1.0, 0.0);
        for (i, &ti) in t.iter().enumerate().take(l) {
            let w = self.alpha_bar[i % m];
            mul *= w;
            add = w * (add + ti as f64);
        }
        let mut y = add / (1.0 - mul);
        for i in 0..l {
            y = self.alpha_bar[i % m] * (t[i] as f64 + y);
            dm[i] = y;
        }
        // d^+_i = alpha_i (t_{i+1} + d^+_{i+1}), cyclic
        let (mut mul, mut add) = (1.0, 0.0);
        for i in (0..l).rev() {
            let w = self.alpha[i % m];
            mul *= w;
            add = w * (add + t[(i + 1) % l] as f64);
        }
        let mut x = add / (1.0 - mul);
        dp[0] = x;
        for i in (1..l).rev() {
            x = self.alpha[i % m] * (t[(i + 1) % l] as f64 + x);
            dp[i] = x;
        }
        let mut best = f64::INFINITY;
        for i in 0..l {
            let (ab, a) = (self.alpha_bar[i % m], self.alpha[i % m]);
            let (dmi, dpi) = (dm[i], dp[i]);
            if recurs {
                best = best.min(lattice_min_f64(ab, a, dmi, dpi));
                continue;
            }
            let den = 4.0 * (1.0 - ab * a);
            let s = [
                (1.0 - ab + dmi) * (1.0 - a + dpi),
                (1.0 + ab + dmi) * (1.0 + a - dpi),
                (1.0 - ab - dmi) * (1.0 - a - dpi),
                (1.0 + ab - dmi) * (1.0 + a + dpi),
            ];
            for v in s {
                best = best.min(v / den);
            }
        }
        best
    }
}

/// Float counterpart of the exact offset-box minimum used by `m_exact_full`.
fn lattice_min_f64(ab: f64, a: f64, dm: f64, dp: f64) -> f64 {
    let e = (1.0 - ab + dm) / 2.0;
    let g = (1.0 - a + dp) / 2.0;
    let den = 1.0 - ab * a;
    let vmax = ((den / (4.0 * ab) + 1.0 + 2.0 * a) / den).floor() as i64 + 1;
    let umax = (2.0 + vmax as f64 * ab).floor() as i64 + 1;
    let mut best = f64::INFINITY;
    for v in -vmax..=vmax {
        for u in -umax..=umax {
            let big_a = e + u as f64 + v as f64 * ab;
            if big_a.abs() <= 1e-9 {
                continue;
            }
            let big_b = v as f64 + u as f64 * a - g;
            best = best.min((big_a * big_b).abs() / den);
        }
    }
    best
}

/// Search purely periodic t-patterns (digit periods `m, 2m, ..., bound*m`
/// with `|t_i| <= cap`) for the largest exact `M(alpha, gamma)`, evaluated
/// with [`m_exact_full`]. Preperiod digits are `b_i = 0`.
///
/// Digit periods with at most [`SEARCH_LIMIT`] patterns are enumerated
/// exhaustively; longer ones by branch and bound within [`NODE_BUDGET`]
/// search nodes. The result is a lower envelope for `rho(alpha)`, not its
/// supremum.
pub fn rho_search(
    base: &NcfExpansion,
    period_multiple_bound: usize,
    t_magnitude_cap: u64,
) -> Result<(DigitSeq, MResult)> {
    rho_search_with_budget(base, period_multiple_bound, t_magnitude_cap, NODE_BUDGET)
}

/// [`rho_search`] with an explicit node budget for the pruned search.
pub fn rho_search_with_budget(
    base: &NcfExpansion,
    period_multiple_bound: usize,
    t_magnitude_cap: u64,
    node_budget: u64,
) -> Result<(DigitSeq, MResult)> {
    if base.is_finite() {
        return Err(Error::FiniteExpansion);
    }
    if period_multiple_bound == 0 {
        return Err(Error::BadFamilyParams(
            "period multiple bound must be positive".into(),
        ));
    }
    let layout = Layout::new(base, t_magnitude_cap)?;
    if layout.options.iter().any(Vec::is_empty) {
        return Err(Error::BadFamilyParams(format!(
            "no t value satisfies |t| <= {t_magnitude_cap} at some position"
        )));
    }
    let m = base.period().len();
    let p = base.preperiod().len();
    let alpha = base.value()?;
    let pre_t: Vec<i64> = (1..=p).map(|i| 2 - base.term(i).unwrap() as i64).collect();

    let mut shortlist: Vec<Candidate> = Vec::new();
    for j in 1..=period_multiple_bound {
        let len = j * m;
        let count = (0..len)
            .map(|i| layout.options[i % m].len() as u128)
            .try_fold(1u128, |acc, c| acc.checked_mul(c))
            .unwrap_or(u128::MAX);
        let scored = if count <= SEARCH_LIMIT {
            layout.exhaustive(len, count)
        } else {
            let floor = shortlist
                .iter()
                .map(|c| c.0)
                .fold(f64::NEG_INFINITY, f64::max);
            Bnb::new(&layout, len)
                .run(floor, node_budget)
                .ok_or(Error::SearchSpaceTooLarge(count, node_budget as u128))?
        };
        shortlist.extend(scored);
        prune(&mut shortlist);
    }

    let mut best: Option<(QuadNum, DigitSeq, MResult)> = None;
    let mut t = Vec::new();
    for &(_, len, idx) in &shortlist {
        layout.decode(idx, len, &mut t);
        let d = match DigitSeq::from_t(base.clone(), &pre_t, &t) {
            Ok(d) => d,
            Err(Error::Inadmissible(_)) => continue,
            Err(e) => return Err(e),
        };
        if is_lattice_equivalent(&d.gamma()?, &alpha)?.is_some() {
            continue;
        }
        let res = m_exact_full(base, &d)?;
        let v = res.exact_value().expect("exact result").clone();
        if best.as_ref().is_none_or(|(b, _, _)| v > *b) {
            best = Some((v, d, res));
        }
    }
    best.map(|(_, d, r)| (d, r))
        .ok_or_else(|| Error::BadFamilyParams("no admissible non-lattice pattern in range".into()))
}

/// `(float score, digit period length, pattern index)`.
type Candidate = (f64, usize, u128);

impl Layout {
    fn exhaustive(&self, len: usize, count: u128) -> Vec<Candidate> {
        (0..count as u64)
            .into_par_iter()
            .map_init(
                || (Vec::new(), (Vec::new(), Vec::new())),
                |(t, scratch), idx| {
                    self.decode(idx as u128, len, t);
                    (self.score(t, scratch), len, idx as u128)
                },
            )
            .filter(|c| c.0.is_finite())
            .collect()
    }
}

/// Depth-first search over patterns of one length, pruned by an upper bound
/// on `min_j s_j(k)` from interval enclosures of `d_k^-` and `d_k^+` when only
/// a prefix of the pattern is fixed.
struct Bnb<'a> {
    layout: &'a Layout,
    len: usize,
    ab: Vec<f64>,
    a: Vec<f64>,
    den: Vec<f64>,
    tmin: Vec<f64>,
    tmax: Vec<f64>,
    /// `back[k][j]`: weight of `t_{k-j}` in `d_k^-`, periodic closure included.
    back: Vec<Vec<f64>>,
    /// `fwd[k][j-1]`: weight of `t_{k+j}` in `d_k^+`.
    fwd: Vec<Vec<f64>>,
    radix: Vec<u128>,
}

struct Shared {
    best: AtomicU64,
    nodes: AtomicU64,
    aborted: AtomicBool,
    found: Mutex<Vec<Candidate>>,
}

impl Shared {
    fn best(&self) -> f64 {
        f64::from_bits(self.best.load(Ordering::Relaxed))
    }

    fn raise(&self, v: f64) {
        let _ = self
            .best
            .fetch_update(Ordering::Relaxed, Ordering::Relaxed, |cur| {
                (v > f64::from_bits(cur)).then_some(v.to_bits())
            });
    }
}

fn slack(v: f64) -> f64 {
    FLOAT_SLACK * v.abs().max(1.0)
}

impl<'a> Bnb<'a> {
    fn new(layout: &'a Layout, len: usize) -> Self {
        let m = layout.alpha.len();
        let ab: Vec<f64> = (0..len).map(|i| layout.alpha_bar[i % m]).collect();
        let a: Vec<f64> = (0..len).map(|i| layout.alpha[i % m]).collect();
        let den = (0..len).map(|i| 4.0 * (1.0 - ab[i] * a[i])).collect();
        let opts = |i: usize| &layout.options[i % m];
        let tmin = (0..len).map(|i| *opts(i).first().unwrap() as f64).collect();
        let tmax = (0..len).map(|i| *opts(i).last().unwrap() as f64).collect();
        let pb: f64 = ab.iter().product();
        let pf: f64 = a.iter().product();
        let back = (0..len)
            .map(|k| {
                let mut w = 1.0;
                (0..len)
                    .map(|j| {
                        w *= ab[(k + len - j) % len];
                        w / (1.0 - pb)
                    })
                    .collect()
            })
            .collect();
        let fwd = (0..len)
            .map(|k| {
                let mut w = 1.0;
                (1..=len)
                    .map(|j| {
                        w *= a[(k + j - 1) % len];
                        w / (1.0 - pf)
                    })
                    .collect()
            })
            .collect();
        let mut radix = Vec::with_capacity(len);
        let mut r = 1u128;
        for i in 0..len {
            radix.push(r);
            r = r.saturating_mul(opts(i).len() as u128);
        }
        Bnb {
            layout,
            len,
            ab,
            a,
            den,
            tmin,
            tmax,
            back,
            fwd,
            radix,
        }
    }

    /// Upper bound on `min_j s_j(k)` over completions of `t[..fixed]`.
    fn position_bound(&self, k: usize, t: &[i64], fixed: usize) -> f64 {
        let len = self.len;
        let (mut xl, mut xh) = (0.0, 0.0);
        for (j, w) in self.back[k].iter().enumerate() {
            let pos = (k + len - j) % len;
            if pos < fixed {
                xl += w * t[pos] as f64;
                xh += w * t[pos] as f64;
            } else {
                xl += w * self.tmin[pos];
                xh += w * self.tmax[pos];
            }
        }
        let (mut yl, mut yh) = (0.0, 0.0);
        for (j, w) in self.fwd[k].iter().enumerate() {
            let pos = (k + j + 1) % len;
            if pos < fixed {
                yl += w * t[pos] as f64;
                yh += w * t[pos] as f64;
            } else {
                yl += w * self.tmin[pos];
                yh += w * self.tmax[pos];
            }
        }
        let (ab, a) = (self.ab[k], self.a[k]);
        // s-values are |A| * |B|; one whose A can vanish belongs to an
        // excluded offset and bounds nothing
        let tol = 1e-9;
        let corner_max = |c: f64, sx: f64, g: &dyn Fn(f64) -> f64| {
            let (lo, hi) = if sx > 0.0 {
                (c + xl, c + xh)
            } else {
                (c - xh, c - xl)
            };
            if lo <= tol && hi >= -tol {
                return f64::INFINITY;
            }
            lo.abs().max(hi.abs()) * g(yl).abs().max(g(yh).abs())
        };
        let s1 = corner_max(1.0 - ab, 1.0, &|y| 1.0 - a + y);
        let s2 = corner_max(1.0 + ab, 1.0, &|y| 1.0 + a - y);
        let s3 = corner_max(1.0 - ab, -1.0, &|y| 1.0 - a - y);
        let s4 = corner_max(1.0 + ab, -1.0, &|y| 1.0 + a + y);
        s1.min(s2).min(s3).min(s4) / self.den[k]
    }

    fn viable(&self, t: &[i64], fixed: usize, shared: &Shared) -> bool {
        let best = shared.best();
        let threshold = best - slack(best);
        (0..fixed).all(|k| self.position_bound(k, t, fixed) >= threshold)
    }

    fn dfs(
        &self,
        t: &mut Vec<i64>,
        index: u128,
        shared: &Shared,
        budget: u64,
        scratch: &mut (Vec<f64>, Vec<f64>),
    ) {
        let i = t.len();
        if shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        if i == self.len {
            let s = self.layout.score(t, scratch);
            if s.is_finite() {
                let best = shared.best();
                if s >= best - slack(best) {
                    shared.raise(s);
                    let mut found = shared.found.lock().expect("no poisoning");
                    found.push((s, self.len, index));
                    if found.len() > 4 * MAX_EXACT {
                        prune(&mut found);
                    }
                }
            }
            return;
        }
        let m = self.layout.options.len();
        for (o, &tv) in self.layout.options[i % m].iter().enumerate() {
            if shared.nodes.fetch_add(1, Ordering::Relaxed) >= budget {
                shared.aborted.store(true, Ordering::Relaxed);
                return;
            }
            t.push(tv);
            if self.viable(t, i + 1, shared) {
                self.dfs(
                    t,
                    index + o as u128 * self.radix[i],
                    shared,
                    budget,
                    scratch,
                );
            }
            t.pop();
        }
    }

    /// Near-best candidates, or `None` when the node budget runs out.
    fn run(&self, floor: f64, budget: u64) -> Option<Vec<Candidate>> {
        let shared = Shared {
            best: AtomicU64::new(floor.to_bits()),
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
            found: Mutex::new(Vec::new()),
        };
        // split the first few positions into independent subtrees
        let m = self.layout.options.len();
        let mut prefixes: Vec<(Vec<i64>, u128)> = vec![(Vec::new(), 0)];
        while prefixes.len() < 512 && prefixes[0].0.len() < self.len {
            let i = prefixes[0].0.len();
            prefixes = prefixes
                .into_iter()
                .flat_map(|(t, idx)| {
                    self.layout.options[i % m]
                        .iter()
                        .enumerate()
                        .map(move |(o, &tv)| {
                            let mut t = t.clone();
                            t.push(tv);
                            (t, idx + o as u128 * self.radix[i])
                        })
                })
                .collect();
        }
        prefixes.into_par_iter().for_each_init(
            || (Vec::new(), Vec::new()),
            |scratch, (mut t, idx)| {
                if self.viable(&t, t.len(), &shared) {
                    self.dfs(&mut t, idx, &shared, budget, scratch);
                }
            },
        );
        if shared.aborted.into_inner() {
            return None;
        }
        let mut found = shared.found.into_inner().expect("no poisoning");
        prune(&mut found);
        Some(found)
    }
}

/// Keep the candidates near the best float score, in enumeration order.
fn prune(list: &mut Vec<Candidate>) {
    let top = list.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    list.retain(|c| c.0 >= top - slack(top));
    list.sort_by_key(|a| (a.1, a.2));
    if list.len() > MAX_EXACT {
        list.sort_by(|a, b| b.0.total_cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        list.truncate(MAX_EXACT);
        list.sort_by_key(|a| (a.1, a.2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::s_values;
    use crate::approx::SMode;

    fn ncf(period: Vec<u64>) -> NcfExpansion {
        NcfExpansion::periodic(period).unwrap()
    }

    #[test]
    fn choices_respect_parity_and_cap() {
        assert_eq!(choices(3, u64::MAX), vec![-1, 1, 3]);
        assert_eq!(choices(6, 3), vec![-2, 0, 2]);
        assert_eq!(choices(7, 3), vec![-3, -1, 1, 3]);
    }

    #[test]
    fn float_score_matches_exact_limits() {
        let base = NcfExpansion::new(vec![2], vec![5, 4, 4]).unwrap();
        let layout = Layout::new(&base, u64::MAX).unwrap();
        let t = vec![1, 2, 0, -1, -2, 0];
        let d = DigitSeq::from_t(base.clone(), &[0], &t).unwrap();
        let mut exact = f64::INFINITY;
        for r in 0..d.period_len() {
            let q = s_values(&base, &d, r, SMode::Limit).unwrap();
            exact = exact.min(q.min().1.to_f64());
        }
        let mut scratch = (Vec::new(), Vec::new());
        let f = layout.score(&t, &mut scratch);
        assert!((f - exact).abs() < 1e-12, "{f} vs {exact}");
    }

    #[test]
    fn period_two_three_five() {
        let base = ncf(vec![3, 5]);
        let (_, res) = rho_search(&base, 2, u64::MAX).unwrap();
        let v = res.exact_value().unwrap();
        let expected = QuadNum::from_int(13) / (QuadNum::sqrt_of(165).unwrap() * 11);
        assert_eq!(v, &expected);
    }

    #[test]
    fn pruned_search_matches_exhaustive() {
        for (period, cap) in [
            (vec![5, 6, 6], 3),
            (vec![4, 5, 4], 2),
            (vec![3, 5], u64::MAX),
        ] {
            let base = ncf(period);
            let layout = Layout::new(&base, cap).unwrap();
            let len = 2 * base.period().len();
            let count: u128 = (0..len)
                .map(|i| layout.options[i % base.period().len()].len() as u128)
                .product();
            let mut full = layout.exhaustive(len, count);
            prune(&mut full);
            let pruned = Bnb::new(&layout, len)
                .run(f64::NEG_INFINITY, u64::MAX)
                .unwrap();
            let top = |v: &[Candidate]| v.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
            assert_eq!(top(&full), top(&pruned));
            let best_full = full.iter().find(|c| c.0 == top(&full)).unwrap();
            assert!(pruned.contains(best_full));
        }
    }

    #[test]
    fn budget_exhausted() {
        let base = ncf(vec![9, 9, 9, 9, 9, 9, 9, 9, 10]);
        assert!(matches!(
            rho_search_with_budget(&base, 1, u64::MAX, 1000),
            Err(Error::SearchSpaceTooLarge(..))
        ));
    }
}
