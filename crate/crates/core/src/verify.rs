//! Self-checking suites that reproduce the published constants, identities
//! and examples with exact comparisons wherever the quantity is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::approx::{m_estimate, m_exact, m_exact_full, rho_search, MResult};
use crate::bounds::{
    bound_report, c1_bound, c_bound, cstar_reference_text, e_terms, family, family_reference,
    upper_bound, FamilyKind,
};
use crate::digits::{alpha_expand, gamma_star, is_lattice_equivalent, DigitSeq};
use crate::error::{Error, Result};
use crate::field::QuadNum;
use crate::ncf::NcfExpansion;
use crate::parse::parse_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Identities,
    Thm1,
    Thm2,
    Thm3,
    Table,
    Examples,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Identities,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Table,
        Suite::Examples,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Table => "table",
            Suite::Examples => "examples",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn add(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        let n = self.checks.iter().filter(|c| c.passed).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} suite {}: {n}/{} checks passed",
            self.suite,
            self.checks.len()
        )
    }
}

/// Runs one suite; `seed` drives the randomized suites.
pub fn run(suite: Suite, seed: u64) -> Result<Report> {
    let mut rep = Report {
        suite,
        checks: Vec::new(),
    };
    match suite {
        Suite::Identities => identities(&mut rep, seed)?,
        Suite::Thm1 => thm1(&mut rep, seed)?,
        Suite::Thm2 => thm2(&mut rep)?,
        Suite::Thm3 => thm3(&mut rep)?,
        Suite::Table => table(&mut rep)?,
        Suite::Examples => examples(&mut rep)?,
        Suite::Oracle => oracle(&mut rep)?,
    }
    Ok(rep)
}

/// Random eventually periodic expansion with terms in `2..=9`.
pub fn random_expansion(rng: &mut impl Rng) -> NcfExpansion {
    loop {
        let pre: Vec<u64> = (0..rng.gen_range(0..=3))
            .map(|_| rng.gen_range(2..=9))
            .collect();
        let period: Vec<u64> = (0..rng.gen_range(1..=4))
            .map(|_| rng.gen_range(2..=9))
            .collect();
        if let Ok(e) = NcfExpansion::new(pre, period) {
            return e;
        }
    }
}

/// Random purely periodic expansion whose least partial quotient is `r`.
pub fn random_periodic_with_min(rng: &mut impl Rng, r: u64, max_len: usize) -> NcfExpansion {
    let len = rng.gen_range(1..=max_len);
    let mut period: Vec<u64> = (0..len).map(|_| rng.gen_range(r..=r + 3)).collect();
    let at = rng.gen_range(0..len);
    period[at] = r;
    NcfExpansion::periodic(period).expect("terms are at least 3")
}

/// Failures of the convergent identities for one expansion up to index `n_max`.
pub fn identity_failures(e: &NcfExpansion, n_max: usize) -> Result<Vec<String>> {
    let alpha = e.value()?;
    let mut fails = Vec::new();
    let mut d_prod = QuadNum::one();
    let mut abar_prod = QuadNum::one();
    let mut partial = QuadNum::zero();
    for state in e.convergents()?.take(n_max + 1) {
        let n = state.n;
        if &state.p_cur * &state.q_prev - &state.p_prev * &state.q_cur != BigInt::one() {
            fails.push(format!("{e}: p_n q_(n-1) - p_(n-1) q_n != 1 at n={n}"));
        }
        d_prod = d_prod * &e.tail_alpha(n)?;
        let d_direct =
            &alpha * &QuadNum::from(state.q_cur.clone()) - &QuadNum::from(state.p_cur.clone());
        if d_prod != state.d_cur || d_direct != state.d_cur {
            fails.push(format!("{e}: D_n != product of alpha_i at n={n}"));
        }
        if n >= 1 {
            abar_prod = abar_prod * &e.rev_alpha_bar(n)?;
            if &QuadNum::from(state.q_cur.clone()) * &abar_prod != QuadNum::one() {
                fails.push(format!("{e}: q_n * product of alpha_bar_i != 1 at n={n}"));
            }
            let a = e.term(n).expect("infinite expansion") as i64;
            let weight = if n == 1 { a - 1 } else { a - 2 };
            partial = partial + &(&state.d_prev * weight);
            let residual = QuadNum::one() - &partial;
            if residual.is_negative() || residual > &state.d_cur + &state.d_prev {
                fails.push(format!("{e}: partial-sum residual out of range at n={n}"));
            }
        }
    }
    Ok(fails)
}

fn identities(rep: &mut Report, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails = Vec::new();
    for _ in 0..100 {
        let e = random_expansion(&mut rng);
        fails.extend(identity_failures(&e, 50)?);
    }
    rep.add(
        "convergent identities",
        fails.is_empty(),
        match fails.first() {
            None => "100 random expansions, n <= 50: determinant, D_n product, q_n product, partial sums".into(),
            Some(f) => format!("{} failures, first: {f}", fails.len()),
        },
    );
    Ok(())
}

/// `M <= 1/4` and `M <= (1/4)(1 - 1/R)`.
fn upper_ok(m: &QuadNum, r: u64) -> Result<bool> {
    let quarter = QuadNum::ratio(1, 4)?;
    Ok(m <= &quarter && (r < 3 || m <= &upper_bound(r)?))
}

fn thm1(rep: &mut Report, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut below = Vec::new();
    let mut above_upper = Vec::new();
    let mut worst = f64::INFINITY;
    for _ in 0..200 {
        let r = rng.gen_range(3..=8);
        let base = random_periodic_with_min(&mut rng, r, 6);
        let d = gamma_star(&base)?;
        let res = m_exact(&base, &d)?;
        let m = res.exact_value().expect("gamma* never has t = a");
        let c = c_bound(r)?;
        worst = worst.min(m.to_f64() / c.to_f64());
        if m < &c {
            below.push(base.to_string());
        }
        if !upper_ok(m, r)? {
            above_upper.push(base.to_string());
        }
    }
    rep.add(
        "M(alpha, gamma*) >= C(R)",
        below.is_empty(),
        format!(
            "200 seeded bases (seed {seed}), {} below, least ratio M/C = {worst:.6}",
            below.len()
        ),
    );
    rep.add(
        "M <= (1/4)(1 - 1/R)",
        above_upper.is_empty(),
        format!("{} violations", above_upper.len()),
    );
    Ok(())
}

/// `M(alpha_l, gamma*)` and the searched maximum (period multiple 2, no t
/// cap) for the even family with period `R+1, R^l`.
pub fn even_family_profile(r: u64, l: usize) -> Result<(QuadNum, QuadNum)> {
    let base = family(FamilyKind::Thm2, r, l)?.expansion()?;
    let m = m_exact(&base, &gamma_star(&base)?)?
        .exact_value()
        .expect("exact")
        .clone();
    let (_, found) = rho_search(&base, 2, u64::MAX)?;
    Ok((m, found.exact_value().expect("exact").clone()))
}

/// Certified sign of `sum c_i x_i`.
pub fn sign(terms: &[(i64, &QuadNum)]) -> Result<std::cmp::Ordering> {
    QuadNum::combination_sign(terms, 1 << 14).ok_or(Error::PrecisionExhausted {
        requested: 1 << 15,
        max: 1 << 14,
    })
}

/// Convergence checks on `g(l) = |M(alpha_l, gamma*) - C(R)|`, all decided
/// exactly: `(g decreasing, g(10) < g(2)/10, search excess <= g(l))`.
pub fn even_family_checks(r: u64, profile: &[(QuadNum, QuadNum)]) -> Result<(bool, bool, bool)> {
    use std::cmp::Ordering::*;
    let c = c_bound(r)?;
    // M(gamma*) >= C(R) makes g(l) = M_l - C
    let mut above = true;
    for (m, _) in profile {
        above &= sign(&[(1, m), (-1, &c)])? != Less;
    }
    if !above {
        return Ok((false, false, false));
    }
    let decreasing = profile
        .windows(2)
        .map(|w| sign(&[(1, &w[1].0), (-1, &w[0].0)]).map(|o| o == Less))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    // 10 (M_10 - C) < M_2 - C
    let tenfold =
        profile.len() >= 10 && sign(&[(10, &profile[9].0), (-1, &profile[1].0), (-9, &c)])? == Less;
    let mut excess = true;
    for (m, s) in profile {
        // s - M <= M - C
        excess &= sign(&[(1, s), (-2, m), (1, &c)])? != Greater;
    }
    Ok((decreasing, tenfold, excess))
}

fn thm2(rep: &mut Report) -> Result<()> {
    let mut profile = Vec::new();
    let mut upper = true;
    for l in 1..=10 {
        let (m, s) = even_family_profile(4, l)?;
        upper &= upper_ok(&m, 4)? && upper_ok(&s, 4)?;
        profile.push((m, s));
    }
    let (decreasing, tenfold, excess) = even_family_checks(4, &profile)?;
    let c = c_bound(4)?.to_f64();
    let text: Vec<String> = profile
        .iter()
        .map(|(m, _)| format!("{:.3e}", m.to_f64() - c))
        .collect();
    rep.add(
        "g(l) decreasing",
        decreasing,
        format!("g(1..10) = {}", text.join(", ")),
    );
    rep.add("g(10) < g(2)/10", tenfold, "decided exactly");
    rep.add(
        "search excess <= g(l)",
        excess,
        "period multiple 2, no t cap",
    );
    rep.add("upper bounds", upper, "M <= (1/4)(1 - 1/4) checked exactly");
    Ok(())
}

/// `r(R) = R^2 (4 rho - 1 + 3/R)` for the odd eleven-term family.
pub fn odd_family_ratio(r: u64) -> Result<(QuadNum, QuadNum)> {
    let base = family(FamilyKind::Thm3, r, 0)?.expansion()?;
    let (_, res) = rho_search(&base, 1, 3)?;
    let rho = res.exact_value().expect("exact").clone();
    let rq = QuadNum::from_int(r);
    let ratio = (&rho * 4 - 1 + &(QuadNum::from_int(3) / &rq)) * &(&rq * &rq);
    Ok((rho, ratio))
}

fn thm3(rep: &mut Report) -> Result<()> {
    let mut rs = Vec::new();
    let mut upper = true;
    for r in [5, 7, 9, 11] {
        let (rho, ratio) = odd_family_ratio(r)?;
        upper &= upper_ok(&rho, r)?;
        rs.push(ratio);
    }
    let (three, five, four) = (
        QuadNum::from_int(3),
        QuadNum::from_int(5),
        QuadNum::from_int(4),
    );
    let in_range = rs.iter().all(|x| x > &three && x < &five);
    let dev: Vec<QuadNum> = rs.iter().map(|x| (x - &four).abs()).collect();
    let monotone = dev.windows(2).all(|w| w[1] <= w[0]);
    let text: Vec<String> = rs.iter().map(|x| format!("{:.5}", x.to_f64())).collect();
    rep.add(
        "r(R) in (3, 5)",
        in_range,
        format!("r(5, 7, 9, 11) = {}", text.join(", ")),
    );
    rep.add(
        "|r(R) - 4| non-increasing",
        monotone,
        "period multiple 1, |t| <= 3",
    );
    rep.add(
        "upper bounds",
        upper,
        "searched values below (1/4)(1 - 1/R)",
    );
    let c1_above = (5..=99)
        .step_by(2)
        .all(|r| c1_bound(r).unwrap() > c_bound(r).unwrap());
    rep.add("C1(R) > C(R)", c1_above, "odd R in 5..=99");
    Ok(())
}

/// `1/C(R)` truncated to four places.
pub fn inverse_c_text(r: u64) -> Result<String> {
    Ok(c_bound(r)?.recip()?.to_decimal_truncated(4))
}

fn table(rep: &mut Report) -> Result<()> {
    let sqrt3 = QuadNum::sqrt_of(3)?;
    rep.add(
        "C(3) = 1/(6 sqrt 3 + 8)",
        c_bound(3)? == (&sqrt3 * 6 + 8).recip()?,
        format!("1/{}", inverse_c_text(3)?),
    );
    rep.add(
        "C(4) = 1/(4 sqrt 3 + 2)",
        c_bound(4)? == (&sqrt3 * 4 + 2).recip()?,
        format!("1/{}", inverse_c_text(4)?),
    );
    let expected = ["18.3923", "8.9282", "7.9497", "6.6568", "6.3431", "5.8306"];
    for (r, want) in (3..=8).zip(expected) {
        let got = inverse_c_text(r)?;
        let cstar = cstar_reference_text(r)?;
        let improves = c_bound(r)?.recip()?.to_f64() < cstar.parse::<f64>().expect("decimal");
        rep.add(
            format!("table row R={r}"),
            got == want && improves,
            format!("1/C = {got} (table {want}), 1/C* = {cstar}"),
        );
    }
    rep.add(
        "E1(4) = (524 - 256 sqrt 3)/11",
        e_terms(4)?.value() == &((QuadNum::from_int(524) - &(&sqrt3 * 256)) / 11),
        e_terms(4)?.value().to_decimal(6),
    );
    rep.add(
        "E2(3) = (348 - 162 sqrt 3)/11",
        e_terms(3)?.value() == &((QuadNum::from_int(348) - &(&sqrt3 * 162)) / 11),
        e_terms(3)?.value().to_decimal(6),
    );
    let (ok1, ok2) = e_term_monotone(10_000)?;
    rep.add("E1 increasing in (7.3268, 11)", ok1, "even R in 4..=10000");
    rep.add("E2 increasing in (6.1279, 10)", ok2, "odd R in 3..=10000");
    Ok(())
}

/// Monotonicity and range of `E1` (even `R`) and `E2` (odd `R`) up to `r_max`.
pub fn e_term_monotone(r_max: u64) -> Result<(bool, bool)> {
    let check = |start: u64, lo: QuadNum, hi: QuadNum| -> Result<bool> {
        let mut prev: Option<QuadNum> = None;
        for r in (start..=r_max).step_by(2) {
            let e = e_terms(r)?.value().clone();
            if e <= lo || e >= hi || prev.as_ref().is_some_and(|p| &e <= p) {
                return Ok(false);
            }
            prev = Some(e);
        }
        Ok(true)
    };
    Ok((
        check(4, QuadNum::ratio(73268, 10000)?, QuadNum::from_int(11))?,
        check(3, QuadNum::ratio(61279, 10000)?, QuadNum::from_int(10))?,
    ))
}

fn examples(rep: &mut Report) -> Result<()> {
    for r in [3, 5, 7] {
        let base = family(FamilyKind::Period2, r, 0)?.expansion()?;
        let (d, res) = rho_search(&base, 2, u64::MAX)?;
        let want = family_reference(FamilyKind::Period2, r)?;
        let got = res.exact_value().expect("exact");
        rep.add(
            format!("rho search on {base}"),
            got == &want && upper_ok(got, r)?,
            format!(
                "{} = 1/{} with {}",
                got,
                got.recip()?.to_decimal_truncated(4),
                d.t_string()
            ),
        );
    }
    let gamma = parse_value("(15-1*sqrt(165))/6")?;
    let e = NcfExpansion::expand(&gamma, 100)?;
    rep.add(
        "expansion of (15 - sqrt 165)/6",
        e.period() == [3, 5],
        e.to_string(),
    );

    let three = NcfExpansion::periodic(vec![3])?;
    let alpha = three.value()?;
    let half = alpha_expand(&QuadNum::ratio(1, 2)?, &three, 100)?;
    let res = m_exact(&three, &half)?;
    let want = (QuadNum::sqrt_of(5)? * 4).recip()?;
    let shape = half.pre_digits() == [1] && half.period_digits() == [0, 2, 0];
    rep.add(
        "gamma = 1/2 over [0; (3)*]-",
        shape && matches!(&res, MResult::UpperBoundOnly { value, .. } if value == &want),
        format!(
            "{half}, {} value {}",
            res.kind(),
            res.exact_value().expect("exact")
        ),
    );
    let lattice = &alpha * 3 - 1;
    let witness = is_lattice_equivalent(&lattice, &alpha)?;
    rep.add(
        "3 alpha - 1 is lattice-equivalent",
        witness == Some((BigInt::from(-1), BigInt::from(3))),
        format!("{witness:?}"),
    );

    let even_family_base = family(FamilyKind::Thm2, 4, 3)?.expansion()?;
    let m = m_exact(&even_family_base, &gamma_star(&even_family_base)?)?;
    let m = m.exact_value().expect("exact");
    rep.add(
        "M(gamma*) on [0; (5, 4, 4, 4)*]- >= C(4)",
        m >= &c_bound(4)? && upper_ok(m, 4)?,
        m.to_decimal(10),
    );

    let c1 = c1_bound(5)?;
    let mut values = Vec::new();
    for l in [2, 4, 6, 8] {
        values.push(odd_tail_value(l)?);
    }
    let (decreasing, small) = odd_tail_checks(&values, &c1)?;
    let text: Vec<String> = values
        .iter()
        .map(|v| format!("{:.2e}", (v.to_f64() - c1.to_f64()).abs()))
        .collect();
    rep.add(
        "period 5, 6^l approaches C1(5)",
        decreasing && small,
        format!("|rho - C1(5)| for l = 2, 4, 6, 8: {}", text.join(", ")),
    );
    let report = bound_report(5)?;
    rep.add(
        "C(5) < C1(5) < (1/4)(1 - 1/5)",
        report.c < c1 && c1 < report.upper,
        c1.to_decimal(10),
    );
    Ok(())
}

/// Searched value on period `5, 6^l` with period multiple 2 and `|t| <= 3`.
pub fn odd_tail_value(l: usize) -> Result<QuadNum> {
    let base = family(FamilyKind::Sec6, 5, l)?.expansion()?;
    let (_, res) = rho_search(&base, 2, 3)?;
    Ok(res.exact_value().expect("exact").clone())
}

/// `(|v_i - C1| strictly decreasing, last gap below 1e-3)`, decided exactly.
pub fn odd_tail_checks(values: &[QuadNum], c1: &QuadNum) -> Result<(bool, bool)> {
    use std::cmp::Ordering::*;
    let side = |v: &QuadNum| -> Result<i64> {
        Ok(match sign(&[(1, v), (-1, c1)])? {
            Less => -1,
            _ => 1,
        })
    };
    let mut decreasing = true;
    for w in values.windows(2) {
        let (s0, s1) = (side(&w[0])?, side(&w[1])?);
        // s1 (v1 - C1) < s0 (v0 - C1)
        decreasing &= sign(&[(s1, &w[1]), (-s0, &w[0]), (s0 - s1, c1)])? == Less;
    }
    let last = values.last().expect("nonempty");
    let s = side(last)?;
    let thousandth = QuadNum::ratio(1, 1000)?;
    // s (v - C1) < 1/1000
    let small = sign(&[(s, last), (-s, c1), (-1, &thousandth)])? == Less;
    Ok((decreasing, small))
}

/// Relative gap between the banded estimate and the exact value.
pub fn oracle_gap(base: &NcfExpansion, d: &DigitSeq, bands: usize) -> Result<(f64, f64)> {
    let exact = m_exact_full(base, d)?.to_f64();
    let est = m_estimate(&base.value()?, &d.gamma()?, bands)?.to_f64();
    Ok((exact, (est - exact).abs() / exact))
}

fn oracle(rep: &mut Report) -> Result<()> {
    let three = NcfExpansion::periodic(vec![3])?;
    let gamma = QuadNum::sqrt_of(5)?.recip()?;
    let d = alpha_expand(&gamma, &three, 100)?;
    let exact = m_exact(&three, &d)?;
    let want = (QuadNum::sqrt_of(5)? * 5).recip()?;
    rep.add(
        "M([0; (3)*]-, 1/sqrt 5) = 1/(5 sqrt 5)",
        exact.exact_value() == Some(&want),
        want.to_decimal(12),
    );
    let (_, gap) = oracle_gap(&three, &d, 20)?;
    rep.add(
        "estimate within 2% (1/sqrt 5)",
        gap < 0.02,
        format!("relative gap {gap:.2e}"),
    );
    for r in [3, 5, 7] {
        let base = family(FamilyKind::Period2, r, 0)?.expansion()?;
        let (d, _) = rho_search(&base, 2, u64::MAX)?;
        let (_, gap) = oracle_gap(&base, &d, 20)?;
        rep.add(
            format!("estimate within 2% on {base}"),
            gap < 0.02,
            format!("relative gap {gap:.2e}"),
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn identities_hold_on_a_fixed_expansion() {
        let e = NcfExpansion::new(vec![2, 7], vec![3, 4]).unwrap();
        assert_eq!(identity_failures(&e, 30).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn table_suite_passes() {
        let rep = run(Suite::Table, 0).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
