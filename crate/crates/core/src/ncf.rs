//! Negative ("round-up") continued fractions.
//!
//! `[0; a1, a2, ...]- = 1/(a1 - 1/(a2 - ...))` with every `ai >= 2`, produced
//! by `a_{n+1} = ceil(1/alpha_n)`, `alpha_{n+1} = a_{n+1} - 1/alpha_n`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::QuadNum;

/// Default bound on the number of terms `expand` will generate.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// An eventually periodic negative continued fraction `[0; pre, (period)*]-`.
///
/// The stored form is canonical: the period is primitive and the preperiod
/// is as short as possible (which fixes the rotation of the period). An empty
/// period denotes a finite expansion of a rational.
#[derive(Clone)]
pub struct NcfExpansion {
    pre: Vec<u64>,
    period: Vec<u64>,
    /// `alpha_0 .. alpha_{p+m-1}` for infinite expansions, filled on first use.
    tails: OnceLock<Vec<QuadNum>>,
}

impl PartialEq for NcfExpansion {
    fn eq(&self, other: &Self) -> bool {
        self.pre == other.pre && self.period == other.period
    }
}

impl Eq for NcfExpansion {}

impl Hash for NcfExpansion {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.pre.hash(state);
        self.period.hash(state);
    }
}

impl fmt::Debug for NcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NcfExpansion")
            .field("pre", &self.pre)
            .field("period", &self.period)
            .finish()
    }
}

/// Convergent data at index `n`: `p_n/q_n`, the previous pair, and
/// `D_n = q_n*alpha - p_n` with its predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentState {
    pub n: usize,
    pub p_prev: BigInt,
    pub p_cur: BigInt,
    pub q_prev: BigInt,
    pub q_cur: BigInt,
    pub d_prev: QuadNum,
    pub d_cur: QuadNum,
}

/// Smallest `k` dividing `word.len()` such that `word` is a repetition of
/// its first `k` symbols.
pub(crate) fn primitive_len<T: PartialEq>(word: &[T]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&k| n.is_multiple_of(k) && (k..n).all(|i| word[i] == word[i - k]))
        .unwrap_or(n)
}

/// Smallest `k` that is a multiple of `unit` and divides `word.len()` such
/// that `word` is `k`-periodic.
pub(crate) fn primitive_len_multiple<T: PartialEq>(word: &[T], unit: usize) -> usize {
    let n = word.len();
    (1..=n)
        .filter(|k| k % unit == 0 && n.is_multiple_of(*k))
        .find(|&k| (k..n).all(|i| word[i] == word[i - k]))
        .unwrap_or(n)
}

/// Möbius matrix `[[p, q], [r, s]]` of a composition of `x -> 1/(a - x)`.
fn negative_word_matrix(word: &[u64]) -> [BigInt; 4] {
    let mut m = [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
    for &a in word {
        // m * [[0, 1], [-1, a]]
        let a = BigInt::from(a);
        m = [-&m[1], &m[0] + &m[1] * &a, -&m[3], &m[2] + &m[3] * &a];
    }
    m
}

/// Möbius matrix of a composition of `x -> 1/(c + x)` (regular CF steps).
fn regular_word_matrix(word: &[u64]) -> [BigInt; 4] {
    let mut m = [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
    for &c in word {
        // m * [[0, 1], [1, c]]
        let c = BigInt::from(c);
        m = [
            m[1].clone(),
            &m[0] + &m[1] * &c,
            m[3].clone(),
            &m[2] + &m[3] * &c,
        ];
    }
    m
}

/// Real roots of the fixed-point equation `x = (p x + q)/(r x + s)`.
fn fixed_points(m: &[BigInt; 4]) -> Result<Vec<QuadNum>> {
    let [p, q, r, s] = m;
    if r.is_zero() {
        let lin = s - p;
        if lin.is_zero() {
            return Ok(vec![]);
        }
        return Ok(vec![QuadNum::ratio(q.clone(), lin)?]);
    }
    // r x^2 + (s - p) x - q = 0
    let disc = (s - p) * (s - p) + BigInt::from(4) * q * r;
    if disc < BigInt::zero() {
        return Ok(vec![]);
    }
    let num = p - s;
    let den = BigInt::from(2) * r;
    Ok(vec![
        QuadNum::new(num.clone(), 1, den.clone(), disc.clone())?,
        QuadNum::new(num, -1, den, disc)?,
    ])
}

impl NcfExpansion {
    pub fn new(pre: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if let Some(bad) = pre.iter().chain(period.iter()).find(|&&a| a < 2) {
            return Err(Error::InvalidExpansion(format!(
                "partial quotient {bad} is below 2"
            )));
        }
        if pre.is_empty() && period.is_empty() {
            return Err(Error::InvalidExpansion("empty expansion".into()));
        }
        if !period.is_empty() && period.iter().all(|&a| a == 2) {
            return Err(Error::InvalidExpansion(
                "a period of 2s has no fixed point in (0, 1)".into(),
            ));
        }
        let mut pre = pre;
        let mut period = period;
        if !period.is_empty() {
            let k = primitive_len(&period);
            period.truncate(k);
            while !pre.is_empty() && pre.last() == period.last() {
                pre.pop();
                period.rotate_right(1);
            }
        }
        Ok(NcfExpansion {
            pre,
            period,
            tails: OnceLock::new(),
        })
    }

    pub fn periodic(period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Self::new(Vec::new(), period)
    }

    pub fn finite(terms: Vec<u64>) -> Result<Self> {
        Self::new(terms, Vec::new())
    }

    /// Runs the round-up algorithm on `x` in (0, 1), detecting the period by
    /// repetition of the exact remainder `alpha_n`.
    pub fn expand(x: &QuadNum, max_terms: usize) -> Result<Self> {
        if !x.in_unit_interval() {
            return Err(Error::OutOfRange(x.to_string()));
        }
        let mut seen: HashMap<QuadNum, usize> = HashMap::new();
        let mut terms: Vec<u64> = Vec::new();
        let mut state = x.clone();
        loop {
            if state.is_zero() {
                return Self::finite(terms);
            }
            if let Some(&i) = seen.get(&state) {
                let period = terms.split_off(i);
                return Self::new(terms, period);
            }
            if terms.len() >= max_terms {
                return Err(Error::PeriodNotFound(max_terms));
            }
            seen.insert(state.clone(), terms.len());
            let inv = state.recip()?;
            let a = inv.ceil();
            let a_u = a.to_u64().ok_or_else(|| {
                Error::InvalidExpansion(format!("partial quotient {a} does not fit in u64"))
            })?;
            terms.push(a_u);
            state = QuadNum::from_int(a) - inv;
        }
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.pre
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Length of a finite expansion, `None` for infinite ones.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.pre.len())
    }

    /// Partial quotient `a_i` (1-based); `None` past the end of a finite expansion.
    pub fn term(&self, i: usize) -> Option<u64> {
        assert!(i >= 1, "partial quotients are indexed from 1");
        if i <= self.pre.len() {
            Some(self.pre[i - 1])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.pre.len() - 1) % self.period.len()])
        }
    }

    /// `R`, the least partial quotient that recurs (minimum over the period).
    pub fn liminf_term(&self) -> Option<u64> {
        self.period.iter().copied().min()
    }

    /// Index of the remainder `alpha_i` in the eventually periodic state cycle.
    pub fn phase(&self, i: usize) -> usize {
        let p = self.pre.len();
        if i < p || self.period.is_empty() {
            i
        } else {
            p + (i - p) % self.period.len()
        }
    }

    fn check_index(&self, n: usize) -> Result<()> {
        match self.finite_len() {
            Some(len) if n > len => Err(Error::IndexBeyondFiniteExpansion { index: n, len }),
            _ => Ok(()),
        }
    }

    /// The expansion with the first `n` partial quotients removed
    /// (`None` when nothing is left of a finite expansion).
    pub fn shift(&self, n: usize) -> Result<Option<NcfExpansion>> {
        self.check_index(n)?;
        if n <= self.pre.len() {
            let pre = self.pre[n..].to_vec();
            if pre.is_empty() && self.period.is_empty() {
                return Ok(None);
            }
            return Self::new(pre, self.period.clone()).map(Some);
        }
        let mut period = self.period.clone();
        let k = (n - self.pre.len()) % period.len();
        period.rotate_left(k);
        Self::new(Vec::new(), period).map(Some)
    }

    /// Exact value in (0, 1).
    pub fn value(&self) -> Result<QuadNum> {
        let mut x = if self.period.is_empty() {
            QuadNum::zero()
        } else {
            let m = negative_word_matrix(&self.period);
            let roots: Vec<QuadNum> = fixed_points(&m)?
                .into_iter()
                .filter(|r| r.in_unit_interval())
                .collect();
            match roots.as_slice() {
                [r] => r.clone(),
                [r, s] if r == s => r.clone(),
                _ => return Err(Error::NoRootInRange),
            }
        };
        for &a in self.pre.iter().rev() {
            x = (QuadNum::from_int(a) - x).recip()?;
        }
        Ok(x)
    }

    /// Iterator over convergent states `n = 0, 1, 2, ...`.
    pub fn convergents(&self) -> Result<Convergents<'_>> {
        let alpha = self.value()?;
        Ok(Convergents {
            e: self,
            next: Some(ConvergentState {
                n: 0,
                p_prev: BigInt::from(-1),
                p_cur: BigInt::zero(),
                q_prev: BigInt::zero(),
                q_cur: BigInt::one(),
                d_prev: QuadNum::one(),
                d_cur: alpha,
            }),
        })
    }

    /// Convergent state at index `n`.
    pub fn convergent(&self, n: usize) -> Result<ConvergentState> {
        self.check_index(n)?;
        let mut it = self.convergents()?;
        let state = it.nth(n).expect("index checked above");
        Ok(state)
    }

    /// `alpha_n = [0; a_{n+1}, a_{n+2}, ...]-` (0 at the end of a finite expansion).
    pub fn tail_alpha(&self, n: usize) -> Result<QuadNum> {
        if self.is_finite() {
            return match self.shift(n)? {
                Some(t) => t.value(),
                None => Ok(QuadNum::zero()),
            };
        }
        Ok(self.tails()?[self.phase(n)].clone())
    }

    /// `alpha_n` for every phase, from `alpha_{n+1} = a_{n+1} - 1/alpha_n`.
    fn tails(&self) -> Result<&[QuadNum]> {
        if let Some(t) = self.tails.get() {
            return Ok(t);
        }
        let count = self.pre.len() + self.period.len();
        let mut out = Vec::with_capacity(count);
        out.push(self.value()?);
        for n in 1..count {
            let a = QuadNum::from_int(self.term(n).expect("infinite expansion"));
            let next = a - out[n - 1].recip()?;
            out.push(next);
        }
        let _ = self.tails.set(out);
        Ok(self.tails.get().expect("just set"))
    }

    /// `alpha_bar_n = [0; a_n, a_{n-1}, ..., a_1]-`, a rational (0 for `n = 0`).
    pub fn rev_alpha_bar(&self, n: usize) -> Result<QuadNum> {
        self.check_index(n)?;
        let mut x = QuadNum::zero();
        for i in 1..=n {
            let a = self.term(i).expect("index checked above");
            x = (QuadNum::from_int(a) - x).recip()?;
        }
        Ok(x)
    }

    /// Smallest index `k` beyond the preperiod with `k = residue (mod period)`.
    pub fn residue_index(&self, residue: usize) -> Result<usize> {
        let m = self.period.len();
        if m == 0 {
            return Err(Error::FiniteExpansion);
        }
        let p = self.pre.len();
        let mut k = p + 1;
        while k % m != residue % m {
            k += 1;
        }
        Ok(k)
    }

    /// Limit of `alpha_bar_k` as `k -> infinity` along `k = residue (mod period)`.
    ///
    /// The limit is the purely periodic expansion of the period read
    /// backwards from `a_k`, which equals `1 / conj(alpha_k)`.
    pub fn limit_alpha_bar(&self, residue: usize) -> Result<QuadNum> {
        let k = self.residue_index(residue)?;
        self.tail_alpha(k)?.conjugate().recip()
    }

    /// The same limit built from the reversed word, kept as a cross-check.
    #[cfg(test)]
    fn limit_alpha_bar_by_word(&self, residue: usize) -> Result<QuadNum> {
        let k = self.residue_index(residue)?;
        let m = self.period.len();
        let p = self.pre.len() as isize;
        let word: Vec<u64> = (0..m)
            .map(|j| {
                let mut idx = k as isize - j as isize;
                while idx <= p {
                    idx += m as isize;
                }
                self.term(idx as usize).expect("infinite expansion")
            })
            .collect();
        NcfExpansion::periodic(word)?.value()
    }
}

impl fmt::Display for NcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.pre.iter().map(u64::to_string).collect();
        if !self.period.is_empty() {
            let inner: Vec<String> = self.period.iter().map(u64::to_string).collect();
            parts.push(format!("({})*", inner.join(", ")));
        }
        write!(f, "[0; {}]-", parts.join(", "))
    }
}

pub struct Convergents<'a> {
    e: &'a NcfExpansion,
    next: Option<ConvergentState>,
}

impl Iterator for Convergents<'_> {
    type Item = ConvergentState;

    fn next(&mut self) -> Option<ConvergentState> {
        let cur = self.next.take()?;
        let n = cur.n + 1;
        self.next = self.e.term_checked(n).map(|a| {
            let a_big = BigInt::from(a);
            let d_next = &cur.d_cur * a as i64 - &cur.d_prev;
            ConvergentState {
                n,
                p_prev: cur.p_cur.clone(),
                p_cur: &a_big * &cur.p_cur - &cur.p_prev,
                q_prev: cur.q_cur.clone(),
                q_cur: &a_big * &cur.q_cur - &cur.q_prev,
                d_prev: cur.d_cur.clone(),
                d_cur: d_next,
            }
        });
        Some(cur)
    }
}

impl NcfExpansion {
    fn term_checked(&self, i: usize) -> Option<u64> {
        if i == 0 {
            None
        } else {
            self.term(i)
        }
    }
}

/// Exact value of the regular continued fraction `[0; pre, (period)*]`.
pub fn regular_value(pre: &[u64], period: &[u64]) -> Result<QuadNum> {
    if pre.iter().chain(period).any(|&c| c == 0) {
        return Err(Error::InvalidExpansion(
            "regular partial quotients must be positive".into(),
        ));
    }
    let mut x = if period.is_empty() {
        QuadNum::zero()
    } else {
        let m = regular_word_matrix(period);
        fixed_points(&m)?
            .into_iter()
            .find(|r| r.is_positive())
            .ok_or(Error::NoRootInRange)?
    };
    for &c in pre.iter().rev() {
        x = (QuadNum::from_int(c) + x).recip()?;
    }
    Ok(x)
}

/// Negative expansion of the number with regular expansion `[0; pre, (period)*]`.
pub fn regular_to_negative(pre: &[u64], period: &[u64]) -> Result<NcfExpansion> {
    let x = regular_value(pre, period)?;
    NcfExpansion::expand(&x, DEFAULT_MAX_TERMS)
}

/// `M(alpha, 0)` for a purely periodic regular expansion:
/// `1 / max_i (c_i + [0; c_{i+1}, ...] + [0; c_{i-1}, ...])`.
pub fn homogeneous_constant(regular_period: &[u64]) -> Result<QuadNum> {
    let m = regular_period.len();
    if m == 0 {
        return Err(Error::EmptyPeriod);
    }
    let mut best: Option<QuadNum> = None;
    for i in 0..m {
        let mut fwd = regular_period.to_vec();
        fwd.rotate_left((i + 1) % m);
        let bwd: Vec<u64> = (1..=m)
            .map(|j| regular_period[(i + m * m - j) % m])
            .collect();
        let total = QuadNum::from_int(regular_period[i])
            + regular_value(&[], &fwd)?
            + regular_value(&[], &bwd)?;
        if best.as_ref().is_none_or(|b| total > *b) {
            best = Some(total);
        }
    }
    best.expect("nonempty period").recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadNum {
        QuadNum::new(a, b, c, d).unwrap()
    }

    fn ncf(pre: &[u64], period: &[u64]) -> NcfExpansion {
        NcfExpansion::new(pre.to_vec(), period.to_vec()).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            NcfExpansion::expand(&q(3, -1, 2, 5), 10).unwrap(),
            ncf(&[], &[3])
        );
        assert_eq!(
            NcfExpansion::expand(&q(-1, 1, 2, 5), 10).unwrap(),
            ncf(&[2], &[3])
        );
        let r = NcfExpansion::expand(&QuadNum::ratio(5, 7).unwrap(), 10).unwrap();
        assert_eq!(r.preperiod(), &[2, 2, 3]);
        assert!(r.is_finite());
    }

    #[test]
    fn expand_errors() {
        assert!(matches!(
            NcfExpansion::expand(&QuadNum::ratio(3, 2).unwrap(), 10),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            NcfExpansion::expand(&QuadNum::zero(), 10),
            Err(Error::OutOfRange(_))
        ));
        // [0; 2, 2, 2, 2, 3]- needs more than 3 terms
        let x = ncf(&[2, 2, 2, 2, 3], &[]).value().unwrap();
        assert_eq!(NcfExpansion::expand(&x, 3), Err(Error::PeriodNotFound(3)));
    }

    #[test]
    fn value_examples() {
        assert_eq!(ncf(&[], &[3, 5]).value().unwrap(), q(15, -1, 6, 165));
        assert_eq!(ncf(&[], &[4]).value().unwrap(), q(2, -1, 1, 3));
        assert_eq!(
            ncf(&[2, 2, 3], &[]).value().unwrap(),
            QuadNum::ratio(5, 7).unwrap()
        );
    }

    #[test]
    fn canonicalization() {
        // [0; 3, (5, 3)*] = [0; (3, 5)*]
        assert_eq!(ncf(&[3], &[5, 3]), ncf(&[], &[3, 5]));
        assert_eq!(ncf(&[], &[3, 3, 3]), ncf(&[], &[3]));
        assert_eq!(ncf(&[4, 3, 5], &[3, 5]), ncf(&[4], &[3, 5]));
        assert!(NcfExpansion::new(vec![3], vec![2, 2]).is_err());
        assert!(NcfExpansion::new(vec![1], vec![3]).is_err());
    }

    #[test]
    fn convergent_examples() {
        let e = ncf(&[], &[3]);
        let s = e.convergent(2).unwrap();
        assert_eq!(
            (s.p_cur.clone(), s.q_cur.clone()),
            (BigInt::from(3), BigInt::from(8))
        );
        let s0 = e.convergent(0).unwrap();
        assert_eq!(s0.p_cur, BigInt::zero());
        assert_eq!(s0.q_cur, BigInt::one());
        let alpha = q(3, -1, 2, 5);
        assert_eq!(s0.d_cur, alpha);
        assert_eq!(e.convergent(1).unwrap().d_cur, alpha.pow(2));
        let fin = ncf(&[2, 2, 3], &[]);
        assert!(fin.convergent(3).is_ok());
        assert_eq!(
            fin.convergent(4),
            Err(Error::IndexBeyondFiniteExpansion { index: 4, len: 3 })
        );
    }

    #[test]
    fn tails_and_reversals() {
        let e = ncf(&[], &[3, 5]);
        assert_eq!(e.tail_alpha(1).unwrap(), ncf(&[], &[5, 3]).value().unwrap());
        let g = ncf(&[], &[3]);
        assert_eq!(g.rev_alpha_bar(2).unwrap(), QuadNum::ratio(3, 8).unwrap());
        assert_eq!(e.rev_alpha_bar(1).unwrap(), QuadNum::ratio(1, 3).unwrap());
        assert_eq!(g.limit_alpha_bar(0).unwrap(), q(3, -1, 2, 5));
        assert_eq!(
            e.limit_alpha_bar(0).unwrap(),
            ncf(&[], &[5, 3]).value().unwrap()
        );
        assert_eq!(
            e.limit_alpha_bar(1).unwrap(),
            ncf(&[], &[3, 5]).value().unwrap()
        );
        assert_eq!(
            ncf(&[2, 3], &[]).limit_alpha_bar(0),
            Err(Error::FiniteExpansion)
        );
    }

    #[test]
    fn limit_alpha_bar_every_residue() {
        for e in [
            ncf(&[], &[5, 4, 4, 4, 4, 4]),
            ncf(&[2], &[3, 7, 4, 4]),
            ncf(&[7, 4], &[3, 5, 6]),
            ncf(&[], &[3, 3, 4, 3, 4, 4, 3, 4, 4, 3, 4]),
            ncf(&[5], &[2, 3]),
        ] {
            let m = e.period().len();
            let alpha = e.value().unwrap();
            for r in 0..m {
                let lim = e.limit_alpha_bar(r).unwrap();
                assert!(lim.same_field(&alpha));
                assert_eq!(lim, e.limit_alpha_bar_by_word(r).unwrap());
                let k = e.residue_index(r).unwrap() + 12 * m;
                let finite = e.rev_alpha_bar(k).unwrap();
                assert!(
                    (finite.to_f64() - lim.to_f64()).abs() < 1e-12,
                    "residue {r}"
                );
            }
        }
    }

    #[test]
    fn limit_alpha_bar_with_preperiod() {
        // a = 7, 4, (3, 5, 6)*: k = 3 is the first index = 0 (mod 3) past the
        // preperiod, and the reversed word read backwards from a_3 is 3, 6, 5.
        let e = ncf(&[7, 4], &[3, 5, 6]);
        let k = e.residue_index(0).unwrap();
        assert_eq!((k, e.term(k)), (3, Some(3)));
        assert_eq!(
            e.limit_alpha_bar(0).unwrap(),
            ncf(&[], &[3, 6, 5]).value().unwrap()
        );
        // rev_alpha_bar far out approaches the limit
        let far = e.rev_alpha_bar(k + 30).unwrap();
        let lim = e.limit_alpha_bar(0).unwrap();
        assert!((far.to_f64() - lim.to_f64()).abs() < 1e-12);
    }

    #[test]
    fn regular_conversion() {
        assert_eq!(regular_to_negative(&[], &[1]).unwrap(), ncf(&[2], &[3]));
        let sqrt2m1 = regular_to_negative(&[], &[2]).unwrap();
        assert_eq!(sqrt2m1.value().unwrap(), q(-1, 1, 1, 2));
        let x = regular_to_negative(&[], &[3]).unwrap();
        assert_eq!(x.value().unwrap(), q(-3, 1, 2, 13));
    }

    #[test]
    fn homogeneous_examples() {
        let two = homogeneous_constant(&[2]).unwrap();
        assert_eq!(two, (q(0, 2, 1, 2)).recip().unwrap());
        assert_eq!(homogeneous_constant(&[1]).unwrap(), q(0, 1, 5, 5));
        for r in 1..8u64 {
            let expected = QuadNum::sqrt_of(r * r + 4).unwrap().recip().unwrap();
            assert_eq!(homogeneous_constant(&[r]).unwrap(), expected);
        }
        assert_eq!(homogeneous_constant(&[]), Err(Error::EmptyPeriod));
    }

    #[test]
    fn display_form() {
        assert_eq!(ncf(&[2], &[3]).to_string(), "[0; 2, (3)*]-");
        assert_eq!(ncf(&[], &[3, 5]).to_string(), "[0; (3, 5)*]-");
        assert_eq!(ncf(&[2, 2, 3], &[]).to_string(), "[0; 2, 2, 3]-");
    }
}
