//! Alpha-expansions `gamma = sum b_i D_{i-1}` of a target relative to a
//! negative continued fraction, with the recentered view `t_i = 2 b_i - a_i + 2`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::QuadNum;
use crate::ncf::{primitive_len_multiple, NcfExpansion};

/// Digits `b_i` of an alpha-expansion.
///
/// Either eventually periodic (`period` nonempty, its length a multiple of
/// the base period) or a truncated prefix (`truncated`, `period` empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitSeq {
    base: NcfExpansion,
    pre: Vec<u64>,
    period: Vec<u64>,
    truncated: bool,
}

/// Backward and forward offsets `d_k^-`, `d_k^+` (or their limits along a
/// residue class).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCouple {
    pub k: usize,
    pub d_minus: QuadNum,
    pub d_plus: QuadNum,
}

/// The four candidate indices for best two-sided approximation at level `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestApprox {
    pub k: usize,
    pub candidates: [BigInt; 4],
    /// Set when `t_i = a_i` recurs, where the candidate set is not guaranteed.
    pub hypothesis_warning: bool,
}

fn t_of(a: u64, b: u64) -> i64 {
    2 * b as i64 - a as i64 + 2
}

fn b_of(a: u64, t: i64) -> Result<u64> {
    let twice = a as i64 - 2 + t;
    if twice.rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch(format!(
            "t = {t} must have the parity of a = {a}"
        )));
    }
    if twice < 0 || twice / 2 > a as i64 - 1 {
        return Err(Error::Inadmissible(format!(
            "t = {t} outside [-(a-2), a] for a = {a}"
        )));
    }
    Ok((twice / 2) as u64)
}

fn canonical_digits(mut pre: Vec<u64>, mut period: Vec<u64>, unit: usize) -> (Vec<u64>, Vec<u64>) {
    let k = primitive_len_multiple(&period, unit);
    period.truncate(k);
    while !pre.is_empty() && pre.last() == period.last() {
        pre.pop();
        period.rotate_right(1);
    }
    (pre, period)
}

impl DigitSeq {
    /// Eventually periodic digits `b` over `base`; validates digit bounds and
    /// admissibility and returns the canonical form.
    pub fn from_digits(base: NcfExpansion, pre: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if base.is_finite() {
            return Err(Error::FiniteExpansion);
        }
        let m = base.period().len();
        if period.is_empty() || !period.len().is_multiple_of(m) {
            return Err(Error::Inadmissible(format!(
                "digit period length {} is not a positive multiple of the base period {m}",
                period.len()
            )));
        }
        let (pre, period) = canonical_digits(pre, period, m);
        let seq = DigitSeq {
            base,
            pre,
            period,
            truncated: false,
        };
        seq.check_bounds()?;
        seq.check_admissible()?;
        Ok(seq)
    }

    /// Same as [`DigitSeq::from_digits`] from the t-view.
    pub fn from_t(base: NcfExpansion, pre_t: &[i64], period_t: &[i64]) -> Result<Self> {
        if base.is_finite() {
            return Err(Error::FiniteExpansion);
        }
        let pre = pre_t
            .iter()
            .enumerate()
            .map(|(i, &t)| b_of(base.term(i + 1).expect("infinite"), t))
            .collect::<Result<Vec<_>>>()?;
        let off = pre_t.len();
        let period = period_t
            .iter()
            .enumerate()
            .map(|(i, &t)| b_of(base.term(off + i + 1).expect("infinite"), t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_digits(base, pre, period)
    }

    /// A finite prefix of an expansion that was not (or cannot be) closed.
    pub fn truncated_prefix(base: NcfExpansion, digits: Vec<u64>) -> Result<Self> {
        if base.is_finite() {
            return Err(Error::FiniteExpansion);
        }
        let seq = DigitSeq {
            base,
            pre: digits,
            period: Vec::new(),
            truncated: true,
        };
        seq.check_bounds()?;
        seq.check_admissible()?;
        Ok(seq)
    }

    pub fn base(&self) -> &NcfExpansion {
        &self.base
    }

    pub fn pre_digits(&self) -> &[u64] {
        &self.pre
    }

    pub fn period_digits(&self) -> &[u64] {
        &self.period
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Index `N` after which both the partial quotients and the digits repeat
    /// with period [`DigitSeq::period_len`].
    pub fn periodic_start(&self) -> usize {
        self.pre.len().max(self.base.preperiod().len())
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Digit `b_i` (1-based); `None` beyond a truncated prefix.
    pub fn digit(&self, i: usize) -> Option<u64> {
        assert!(i >= 1, "digits are indexed from 1");
        if i <= self.pre.len() {
            Some(self.pre[i - 1])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.pre.len() - 1) % self.period.len()])
        }
    }

    pub fn term(&self, i: usize) -> u64 {
        self.base.term(i).expect("base expansion is infinite")
    }

    /// `t_i = 2 b_i - a_i + 2`.
    pub fn t(&self, i: usize) -> Option<i64> {
        self.digit(i).map(|b| t_of(self.term(i), b))
    }

    /// Digits of the periodic extension to indices at or before the periodic start.
    fn t_ext(&self, i: isize) -> i64 {
        let n = self.periodic_start() as isize;
        let l = self.period.len() as isize;
        let mut idx = i;
        if idx <= n {
            idx += l * ((n - idx) / l + 1);
        }
        self.t(idx as usize).expect("periodic")
    }

    fn a_ext(&self, i: isize) -> u64 {
        let n = self.periodic_start() as isize;
        let l = self.period.len() as isize;
        let mut idx = i;
        if idx <= n {
            idx += l * ((n - idx) / l + 1);
        }
        self.term(idx as usize)
    }

    /// Number of indices covering the preperiod and one full period (or the
    /// whole prefix for truncated data).
    fn span(&self) -> usize {
        if self.truncated {
            self.pre.len()
        } else {
            self.periodic_start() + self.period.len()
        }
    }

    pub fn t_pre(&self) -> Vec<i64> {
        (1..=self.pre.len()).map(|i| self.t(i).unwrap()).collect()
    }

    pub fn t_period(&self) -> Vec<i64> {
        let off = self.pre.len();
        (1..=self.period.len())
            .map(|i| self.t(off + i).unwrap())
            .collect()
    }

    fn check_bounds(&self) -> Result<()> {
        for i in 1..=self.span() {
            let (a, b) = (self.term(i), self.digit(i).unwrap());
            if b + 1 > a {
                return Err(Error::Inadmissible(format!(
                    "digit b_{i} = {b} exceeds a_{i} - 1 = {}",
                    a - 1
                )));
            }
        }
        Ok(())
    }

    /// Rejects a digit `a_s - 1` followed by a run of `a_j - 2` that either
    /// never ends or ends in another `a_k - 1`.
    fn check_admissible(&self) -> Result<()> {
        let span = self.span();
        let horizon = span + self.period.len();
        for s in 1..=span {
            if self.t(s) != Some(self.term(s) as i64) {
                continue;
            }
            let mut j = s + 1;
            while let Some(tj) = self.t(j) {
                let aj = self.term(j) as i64;
                if tj == aj {
                    return Err(Error::Inadmissible(format!(
                        "b_{s} = a_{s} - 1 is followed by b_{j} = a_{j} - 1 with only a - 2 digits between"
                    )));
                }
                if tj != aj - 2 {
                    break;
                }
                if j > horizon {
                    return Err(Error::Inadmissible(format!(
                        "b_{s} = a_{s} - 1 is followed by a - 2 digits forever"
                    )));
                }
                j += 1;
            }
        }
        Ok(())
    }

    /// `true` when some digit `b_i = a_i - 1` (i.e. `t_i = a_i`) lies in the period.
    pub fn t_equals_a_in_period(&self) -> bool {
        let n = self.periodic_start();
        !self.truncated
            && (n + 1..=n + self.period.len()).any(|i| self.t(i) == Some(self.term(i) as i64))
    }

    /// `true` when every periodic digit is 0 (a lattice point in disguise).
    pub fn is_eventually_zero(&self) -> bool {
        !self.truncated && self.period.iter().all(|&b| b == 0)
    }

    /// `alpha_i` for `i` in `0..count`, evaluated once per phase of the base.
    fn tail_alphas(&self, count: usize) -> Result<Vec<QuadNum>> {
        let mut cache: HashMap<usize, QuadNum> = HashMap::new();
        (0..count)
            .map(|i| {
                let ph = self.base.phase(i);
                if let Some(v) = cache.get(&ph) {
                    return Ok(v.clone());
                }
                let v = self.base.tail_alpha(ph)?;
                cache.insert(ph, v.clone());
                Ok(v)
            })
            .collect()
    }

    /// Values `x_i = sum_{j > i} c_j alpha_i alpha_{i+1} ... alpha_{j-1}` for
    /// `i` in `0..N+L`, closing the periodic tail as a fixed point of one
    /// period of affine maps `x_i = alpha_i (c_{i+1} + x_{i+1})`.
    fn forward_series(&self, coeff: impl Fn(usize) -> i64) -> Result<Vec<QuadNum>> {
        if self.truncated {
            return Err(Error::NotPeriodic);
        }
        let n = self.periodic_start();
        let l = self.period.len();
        let alphas = self.tail_alphas(n + l)?;
        let mut mul = QuadNum::one();
        let mut add = QuadNum::zero();
        for i in (n..n + l).rev() {
            mul = &alphas[i] * &mul;
            add = &alphas[i] * &(add + coeff(i + 1));
        }
        let mut xs = vec![QuadNum::zero(); n + l];
        xs[n] = add / (QuadNum::one() - mul);
        for i in (n + 1..n + l).rev() {
            let next = if i + 1 == n + l {
                xs[n].clone()
            } else {
                xs[i + 1].clone()
            };
            xs[i] = &alphas[i] * &(next + coeff(i + 1));
        }
        for i in (0..n).rev() {
            xs[i] = &alphas[i] * &(xs[i + 1].clone() + coeff(i + 1));
        }
        Ok(xs)
    }

    fn forward_at(xs: &[QuadNum], n: usize, l: usize, k: usize) -> QuadNum {
        if k < n + l {
            xs[k].clone()
        } else {
            xs[n + (k - n) % l].clone()
        }
    }

    /// Exact `gamma = sum b_i D_{i-1}`.
    pub fn gamma(&self) -> Result<QuadNum> {
        let xs = self.forward_series(|i| self.digit(i).unwrap() as i64)?;
        Ok(xs[0].clone())
    }

    /// Bracket `[S_n, S_n + D_{n-1}]` containing gamma, from the digits
    /// available (for truncated data `n` is the prefix length).
    pub fn gamma_bounds(&self) -> Result<(QuadNum, QuadNum)> {
        let n = if self.truncated {
            self.pre.len()
        } else {
            self.span()
        };
        let mut sum = QuadNum::zero();
        let mut conv = self.base.convergents()?;
        let mut d_last = QuadNum::one();
        for i in 1..=n {
            let st = conv.next().expect("infinite");
            // st.d_cur = D_{i-1}
            sum = sum + &st.d_cur * self.digit(i).unwrap() as i64;
            d_last = st.d_cur;
        }
        let upper = &sum + &d_last;
        Ok((sum, upper))
    }

    /// Exact `d_k^-` (finite sum) and `d_k^+` (closed periodic series).
    pub fn d_values(&self, k: usize) -> Result<DCouple> {
        if self.truncated {
            return Err(Error::NotPeriodic);
        }
        let mut bar = QuadNum::zero();
        let mut d_minus = QuadNum::zero();
        for i in 1..=k {
            bar = (QuadNum::from_int(self.term(i)) - bar).recip()?;
            d_minus = &bar * &(d_minus + self.t(i).unwrap());
        }
        let xs = self.forward_series(|i| self.t(i).unwrap())?;
        let d_plus = Self::forward_at(&xs, self.periodic_start(), self.period.len(), k);
        Ok(DCouple { k, d_minus, d_plus })
    }

    /// Smallest index `k > N` with `k = residue (mod L)`.
    pub fn residue_index(&self, residue: usize) -> Result<usize> {
        if self.truncated {
            return Err(Error::NotPeriodic);
        }
        let l = self.period.len();
        let mut k = self.periodic_start() + 1;
        while k % l != residue % l {
            k += 1;
        }
        Ok(k)
    }

    /// Limits of `alpha_bar_k` along `k = residue (mod L)`.
    pub fn limit_alpha_bar(&self, residue: usize) -> Result<QuadNum> {
        let k = self.residue_index(residue)?;
        self.base.limit_alpha_bar(k % self.base.period().len())
    }

    /// Limits of `d_k^-`, `d_k^+` as `k -> infinity` along `k = residue (mod L)`.
    pub fn d_limits(&self, residue: usize) -> Result<DCouple> {
        let k = self.residue_index(residue)?;
        let l = self.period.len();
        let m = self.base.period().len();
        let mut mul = QuadNum::one();
        let mut add = QuadNum::zero();
        let mut cache: HashMap<usize, QuadNum> = HashMap::new();
        for idx in (k as isize + 1 - l as isize)..=k as isize {
            let key = idx.rem_euclid(m as isize) as usize;
            let w = match cache.get(&key) {
                Some(w) => w.clone(),
                None => {
                    let w = self.base.limit_alpha_bar(key)?;
                    cache.insert(key, w.clone());
                    w
                }
            };
            mul = &w * &mul;
            add = &w * &(add + self.t_ext(idx));
        }
        let d_minus = add / (QuadNum::one() - mul);
        let xs = self.forward_series(|i| self.t(i).unwrap())?;
        let d_plus = Self::forward_at(&xs, self.periodic_start(), l, k);
        Ok(DCouple { k, d_minus, d_plus })
    }

    /// Partial quotient at a (possibly periodically extended) index.
    pub fn term_ext(&self, i: isize) -> u64 {
        self.a_ext(i)
    }

    /// `Q_k = sum_{i<=k} b_i q_{i-1}` and the other three candidates
    /// `Q_k + q_{k-1}`, `-(q_k - Q_k)`, `-(q_k - q_{k-1} - Q_k)`.
    pub fn best_approx_candidates(&self, k: usize) -> Result<BestApprox> {
        if k == 0 {
            return Err(Error::IndexBeyondFiniteExpansion { index: 0, len: 0 });
        }
        if self.truncated && k > self.pre.len() {
            return Err(Error::IndexBeyondFiniteExpansion {
                index: k,
                len: self.pre.len(),
            });
        }
        let mut q_big = BigInt::zero();
        let mut q_prev = BigInt::zero();
        let mut q_cur = BigInt::zero();
        for st in self.base.convergents()?.take(k + 1) {
            if st.n >= 1 {
                // st.q_prev = q_{n-1}
                q_big += &st.q_prev * BigInt::from(self.digit(st.n).unwrap());
            }
            q_prev = st.q_prev.clone();
            q_cur = st.q_cur.clone();
        }
        let candidates = [
            q_big.clone(),
            &q_big + &q_prev,
            -(&q_cur - &q_big),
            -(&q_cur - &q_prev - &q_big),
        ];
        Ok(BestApprox {
            k,
            candidates,
            hypothesis_warning: self.t_equals_a_in_period(),
        })
    }

    /// Text form of the t-view, `t: [t1, ..., (u1, ..., um)*]`.
    pub fn t_string(&self) -> String {
        bracket(
            &self.t_pre().iter().map(i64::to_string).collect::<Vec<_>>(),
            &self
                .t_period()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>(),
            self.truncated,
            "t",
        )
    }
}

fn bracket(pre: &[String], period: &[String], truncated: bool, label: &str) -> String {
    let mut parts: Vec<String> = pre.to_vec();
    if !period.is_empty() {
        parts.push(format!("({})*", period.join(", ")));
    }
    if truncated {
        parts.push("...".into());
    }
    format!("{label}: [{}]", parts.join(", "))
}

impl fmt::Display for DigitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre: Vec<String> = self.pre.iter().map(u64::to_string).collect();
        let period: Vec<String> = self.period.iter().map(u64::to_string).collect();
        write!(
            f,
            "{} over {}",
            bracket(&pre, &period, self.truncated, "b"),
            self.base
        )
    }
}

fn check_target(gamma: &QuadNum, alpha: &QuadNum) -> Result<()> {
    if !gamma.in_unit_interval() {
        return Err(Error::OutOfRange(gamma.to_string()));
    }
    if !gamma.same_field(alpha) {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Alpha-expansion of `gamma` in (0, 1) relative to `base`, with exact
/// remainders `gamma_{i+1} = {gamma_i / alpha_i}`. Periodicity is detected on
/// the pair (remainder, phase of the base); without a repeat inside
/// `max_terms` the generated prefix is returned flagged as truncated.
pub fn alpha_expand(gamma: &QuadNum, base: &NcfExpansion, max_terms: usize) -> Result<DigitSeq> {
    if base.is_finite() {
        return Err(Error::FiniteExpansion);
    }
    let alpha = base.value()?;
    check_target(gamma, &alpha)?;
    let p = base.preperiod().len();
    let m = base.period().len();
    let alphas: Vec<QuadNum> = (0..p + m)
        .map(|ph| base.tail_alpha(ph))
        .collect::<Result<_>>()?;
    let mut seen: HashMap<(QuadNum, usize), usize> = HashMap::new();
    let mut digits: Vec<u64> = Vec::new();
    let mut state = gamma.clone();
    for i in 0..=max_terms {
        let phase = base.phase(i);
        if let Some(&j) = seen.get(&(state.clone(), phase)) {
            let period = digits.split_off(j);
            return DigitSeq::from_digits(base.clone(), digits, period);
        }
        if i == max_terms {
            break;
        }
        seen.insert((state.clone(), phase), i);
        let quotient = state.checked_div(&alphas[phase])?;
        let b = quotient.floor();
        digits.push(b.to_u64().expect("digit below a partial quotient"));
        state = quotient - QuadNum::from_int(b);
    }
    DigitSeq::truncated_prefix(base.clone(), digits)
}

/// First `terms` digits of the alpha-expansion of any `gamma` in (0, 1),
/// including targets from a different quadratic field than alpha. Each
/// digit is the largest `n` with `S_i + n D_i <= gamma`, decided by exact
/// comparison across fields.
pub fn alpha_expand_truncated(
    gamma: &QuadNum,
    base: &NcfExpansion,
    terms: usize,
) -> Result<DigitSeq> {
    if base.is_finite() {
        return Err(Error::FiniteExpansion);
    }
    if !gamma.in_unit_interval() {
        return Err(Error::OutOfRange(gamma.to_string()));
    }
    let mut sum = QuadNum::zero();
    let mut digits = Vec::with_capacity(terms);
    for st in base.convergents()?.take(terms) {
        let d_i = st.d_cur;
        let a = base.term(st.n + 1).expect("infinite");
        // largest n in [0, a-1] with sum + n * d_i <= gamma
        let (mut lo, mut hi) = (0u64, a - 1);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if &sum + &d_i * mid as i64 <= *gamma {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        sum = sum + &d_i * lo as i64;
        digits.push(lo);
    }
    DigitSeq::truncated_prefix(base.clone(), digits)
}

/// The target built from `t_i = 0` on even `a_i` and alternating `+1, -1`
/// over the odd `a_i` in order of appearance.
pub fn gamma_star(base: &NcfExpansion) -> Result<DigitSeq> {
    if base.is_finite() {
        return Err(Error::FiniteExpansion);
    }
    let p = base.preperiod().len();
    let m = base.period().len();
    let odd_in_period = base.period().iter().filter(|a| *a % 2 == 1).count();
    let l = if odd_in_period % 2 == 1 { 2 * m } else { m };
    let mut sign = 1i64;
    let mut ts = Vec::with_capacity(p + l);
    for i in 1..=p + l {
        let a = base.term(i).unwrap();
        if a.is_multiple_of(2) {
            ts.push(0);
        } else {
            ts.push(sign);
            sign = -sign;
        }
    }
    let period = ts.split_off(p);
    DigitSeq::from_t(base.clone(), &ts, &period)
}

/// Writes `gamma = u + v*alpha` with rational `u, v` and returns `(u, v)`
/// when both are integers.
pub fn is_lattice_equivalent(gamma: &QuadNum, alpha: &QuadNum) -> Result<Option<(BigInt, BigInt)>> {
    if alpha.is_rational() {
        return Err(Error::InvalidExpansion("alpha must be irrational".into()));
    }
    if !gamma.same_field(alpha) {
        return Err(Error::FieldMismatch);
    }
    // v = (gamma_b / gamma_c) / (alpha_b / alpha_c)
    let v = QuadNum::ratio(gamma.b() * alpha.c(), gamma.c() * alpha.b())?;
    let u = gamma - &(&v * alpha);
    debug_assert!(u.is_rational());
    if u.is_integer() && v.is_integer() {
        Ok(Some((u.a().clone(), v.a().clone())))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadNum {
        QuadNum::new(a, b, c, d).unwrap()
    }

    fn golden3() -> NcfExpansion {
        NcfExpansion::periodic(vec![3]).unwrap()
    }

    #[test]
    fn expand_half_over_golden3() {
        let d = alpha_expand(&QuadNum::ratio(1, 2).unwrap(), &golden3(), 100).unwrap();
        assert_eq!(d.pre_digits(), &[1]);
        assert_eq!(d.period_digits(), &[0, 2, 0]);
        assert_eq!(d.t_period(), vec![-1, 3, -1]);
        assert_eq!(d.gamma().unwrap(), QuadNum::ratio(1, 2).unwrap());
        assert!(d.t_equals_a_in_period());
        assert_eq!(d.to_string(), "b: [1, (0, 2, 0)*] over [0; (3)*]-");
        assert_eq!(d.t_string(), "t: [1, (-1, 3, -1)*]");
    }

    #[test]
    fn expand_alpha_itself() {
        let alpha = q(3, -1, 2, 5);
        let d = alpha_expand(&alpha, &golden3(), 100).unwrap();
        assert_eq!(d.pre_digits(), &[1]);
        assert_eq!(d.period_digits(), &[0]);
        assert!(d.is_eventually_zero());
        assert_eq!(
            is_lattice_equivalent(&alpha, &alpha).unwrap(),
            Some((BigInt::from(0), BigInt::from(1)))
        );
    }

    #[test]
    fn gamma_star_examples() {
        let g = gamma_star(&golden3()).unwrap();
        assert_eq!(g.period_digits(), &[1, 0]);
        assert_eq!(g.gamma().unwrap(), q(0, 1, 5, 5));
        let back = alpha_expand(&q(0, 1, 5, 5), &golden3(), 100).unwrap();
        assert_eq!(back, g);

        let four = gamma_star(&NcfExpansion::periodic(vec![4]).unwrap()).unwrap();
        assert_eq!(four.period_digits(), &[1]);
        assert_eq!(four.t_period(), vec![0]);

        let fam = gamma_star(&NcfExpansion::periodic(vec![5, 4, 4]).unwrap()).unwrap();
        assert_eq!(fam.period_len(), 6);
        assert_eq!(fam.t_period(), vec![1, 0, 0, -1, 0, 0]);
    }

    #[test]
    fn d_limits_gamma_star_golden() {
        let g = gamma_star(&golden3()).unwrap();
        let alpha = q(3, -1, 2, 5);
        let expected = &alpha / &(QuadNum::one() + &alpha);
        // residue 1 carries t = +1
        let k = g.residue_index(1).unwrap();
        assert_eq!(g.t(k), Some(1));
        let dc = g.d_limits(1).unwrap();
        assert_eq!(dc.d_minus, expected);
        assert_eq!(dc.d_plus, -expected);
    }

    #[test]
    fn d_values_zero_pattern() {
        let four = gamma_star(&NcfExpansion::periodic(vec![4]).unwrap()).unwrap();
        for k in 0..6 {
            let dc = four.d_values(k).unwrap();
            assert!(dc.d_minus.is_zero() && dc.d_plus.is_zero());
        }
    }

    #[test]
    fn d_values_approach_limits() {
        let base = NcfExpansion::new(vec![6], vec![3, 5]).unwrap();
        let d = DigitSeq::from_t(base, &[2], &[1, -3, -1, 1]).unwrap();
        let lim = d.d_limits(3).unwrap();
        let far = d.d_values(lim.k + 40).unwrap();
        assert!((far.d_minus.to_f64() - lim.d_minus.to_f64()).abs() < 1e-12);
        assert_eq!(far.d_plus, lim.d_plus);
    }

    #[test]
    fn lattice_checks() {
        let alpha = q(3, -1, 2, 5);
        let g = &alpha * 3 - 1;
        assert_eq!(
            is_lattice_equivalent(&g, &alpha).unwrap(),
            Some((BigInt::from(-1), BigInt::from(3)))
        );
        assert_eq!(
            is_lattice_equivalent(&QuadNum::ratio(1, 2).unwrap(), &alpha).unwrap(),
            None
        );
        assert_eq!(is_lattice_equivalent(&q(0, 1, 5, 5), &alpha).unwrap(), None);
        assert_eq!(
            is_lattice_equivalent(&q(0, 1, 2, 2), &alpha),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn best_approx_examples() {
        let d = alpha_expand(&QuadNum::ratio(1, 2).unwrap(), &golden3(), 100).unwrap();
        let ba = d.best_approx_candidates(2).unwrap();
        let want: Vec<BigInt> = [1, 4, -7, -4].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(ba.candidates.to_vec(), want);
        assert!(ba.hypothesis_warning);

        let zero = DigitSeq::from_digits(golden3(), vec![], vec![0]).unwrap();
        let ba = zero.best_approx_candidates(3).unwrap();
        // q_2 = 8, q_3 = 21
        let want: Vec<BigInt> = [0, 8, -21, -13].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(ba.candidates.to_vec(), want);
    }

    #[test]
    fn admissibility() {
        // a - 1 followed by a - 2 forever
        assert!(matches!(
            DigitSeq::from_digits(golden3(), vec![2], vec![1]),
            Err(Error::Inadmissible(_))
        ));
        // two consecutive a - 1
        assert!(matches!(
            DigitSeq::from_digits(golden3(), vec![], vec![2, 2, 0]),
            Err(Error::Inadmissible(_))
        ));
        assert!(DigitSeq::from_digits(golden3(), vec![], vec![1, 2, 0]).is_ok());
        // a - 1, a - 2, a - 1 across the period boundary
        assert!(matches!(
            DigitSeq::from_digits(golden3(), vec![], vec![2, 1]),
            Err(Error::Inadmissible(_))
        ));
        assert!(matches!(
            DigitSeq::from_digits(golden3(), vec![], vec![3]),
            Err(Error::Inadmissible(_))
        ));
    }

    #[test]
    fn field_mismatch_and_truncated_mode() {
        let g = q(0, 1, 2, 2); // sqrt(2)/2
        assert_eq!(alpha_expand(&g, &golden3(), 50), Err(Error::FieldMismatch));
        let tr = alpha_expand_truncated(&g, &golden3(), 30).unwrap();
        assert!(tr.is_truncated());
        assert_eq!(tr.gamma(), Err(Error::NotPeriodic));
        let (lo, hi) = tr.gamma_bounds().unwrap();
        assert!(lo <= g && g <= hi);
        assert!(hi.to_f64() - lo.to_f64() < 1e-10);
        // in-field targets agree with the exact algorithm
        let half = QuadNum::ratio(1, 2).unwrap();
        let tr = alpha_expand_truncated(&half, &golden3(), 7).unwrap();
        assert_eq!(tr.pre_digits(), &[1, 0, 2, 0, 0, 2, 0]);
    }
}
