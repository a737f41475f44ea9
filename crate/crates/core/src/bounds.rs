//! Closed-form lower bounds, their asymptotic correction terms and the
//! example families of periodic expansions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::QuadNum;
use crate::ncf::NcfExpansion;

/// Reference column of the earlier lower bound, stored as `1/C*(R)` for
/// `R = 2..=8`.
const CSTAR_INVERSE: [(u64, &str); 7] = [
    (2, "25.1592"),
    (3, "20.4874"),
    (4, "9.3372"),
    (5, "8.2500"),
    (6, "6.8120"),
    (7, "6.4643"),
    (8, "5.9109"),
];

/// Correction term in `4 C(R) = 1 - 3/R + c/R^2 - E/R^3`, with `c = 5` for
/// even `R` and `c = 4` for odd `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ETerm {
    E1(QuadNum),
    E2(QuadNum),
}

impl ETerm {
    pub fn value(&self) -> &QuadNum {
        match self {
            ETerm::E1(v) | ETerm::E2(v) => v,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ETerm::E1(_) => "E1",
            ETerm::E2(_) => "E2",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub r: u64,
    pub r_star: u64,
    pub r_star_star: u64,
    pub beta: QuadNum,
    pub delta: QuadNum,
    pub c: QuadNum,
    /// Present for odd `R >= 5`.
    pub c1: Option<QuadNum>,
    /// `(1/4)(1 - 1/R)`.
    pub upper: QuadNum,
    pub e_term: ETerm,
    pub cstar_inverse: Option<f64>,
}

/// `(R_*, R_**)`: `(R, R+1)` for even `R`, `(R+1, R)` for odd `R`.
pub fn r_stars(r: u64) -> (u64, u64) {
    if r.is_multiple_of(2) {
        (r, r + 1)
    } else {
        (r + 1, r)
    }
}

fn check_r(r: u64) -> Result<()> {
    if r < 3 {
        Err(Error::RBelow3(r))
    } else {
        Ok(())
    }
}

/// `beta = [0; (R_*)*]` and `delta = [0; R_**, (R_*)*]`.
pub fn beta_delta(r: u64) -> Result<(QuadNum, QuadNum)> {
    check_r(r)?;
    let (rs, rss) = r_stars(r);
    let rs_i = rs as i64;
    let beta = (QuadNum::sqrt_of(rs_i * rs_i - 4)? * -1 + rs_i) / 2;
    let delta = (QuadNum::from_int(rss) - &beta).recip()?;
    Ok((beta, delta))
}

/// `C(R) = (1 - 2 delta)(1 - beta) / (4 (1 - delta beta))`.
pub fn c_bound(r: u64) -> Result<QuadNum> {
    let (beta, delta) = beta_delta(r)?;
    Ok(c_from(&beta, &delta))
}

fn c_from(beta: &QuadNum, delta: &QuadNum) -> QuadNum {
    let num = (QuadNum::one() - &(delta * 2)) * (QuadNum::one() - beta);
    num / (QuadNum::one() - &(delta * beta)) / 4
}

/// `C1(R) = (1 - 2 delta + 2 delta beta/(1 + beta))(1 - beta) / (4 (1 - delta beta))`
/// for odd `R >= 5`.
pub fn c1_bound(r: u64) -> Result<QuadNum> {
    if r.is_multiple_of(2) || r < 5 {
        return Err(Error::BadFamilyParams(format!(
            "C1 needs odd R >= 5, got {r}"
        )));
    }
    let (beta, delta) = beta_delta(r)?;
    Ok(c1_from(&beta, &delta))
}

fn c1_from(beta: &QuadNum, delta: &QuadNum) -> QuadNum {
    let lead = QuadNum::one() - &(delta * 2) + &(delta * beta * 2 / (beta + 1));
    lead * (QuadNum::one() - beta) / (QuadNum::one() - &(delta * beta)) / 4
}

/// `(1/4)(1 - 1/R)`.
pub fn upper_bound(r: u64) -> Result<QuadNum> {
    if r == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok((QuadNum::one() - &QuadNum::ratio(1, r)?) / 4)
}

/// `E1(R)` for even `R >= 4`, `E2(R)` for odd `R >= 3`.
pub fn e_terms(r: u64) -> Result<ETerm> {
    check_r(r)?;
    let (beta, _) = beta_delta(r)?;
    let rq = QuadNum::from_int(r);
    if r.is_multiple_of(2) {
        if r < 4 {
            return Err(Error::ParityMismatch(format!(
                "E1 needs even R >= 4, got {r}"
            )));
        }
        let inner = QuadNum::from_int(6) - &(&beta * 3) + &(&beta * &beta);
        let num = QuadNum::from_int(11) - &(&beta * 2 * &inner);
        let den = QuadNum::one() + &((QuadNum::one() - &(&beta * 2)) / &rq);
        Ok(ETerm::E1(num / den))
    } else {
        let inner = QuadNum::from_int(11) - &(&beta * 7) + &(&beta * &beta * 2);
        let num = QuadNum::from_int(10) - &(&beta * 2 * &inner);
        let den = QuadNum::one() - &(&beta * 2 / &rq);
        Ok(ETerm::E2(num / den))
    }
}

/// E-term of the requested parity, rejecting the other one.
pub fn e_term_checked(r: u64, even: bool) -> Result<QuadNum> {
    if r.is_multiple_of(2) != even {
        let (name, want) = if even { ("E1", "even") } else { ("E2", "odd") };
        return Err(Error::ParityMismatch(format!(
            "{name} needs {want} R, got {r}"
        )));
    }
    e_terms(r).map(|e| e.value().clone())
}

pub fn cstar_reference(r: u64) -> Result<f64> {
    CSTAR_INVERSE
        .iter()
        .find(|(k, _)| *k == r)
        .map(|(_, s)| s.parse().expect("table entries are decimals"))
        .ok_or(Error::OutOfTable(r))
}

/// The stored decimal text of `1/C*(R)`.
pub fn cstar_reference_text(r: u64) -> Result<&'static str> {
    CSTAR_INVERSE
        .iter()
        .find(|(k, _)| *k == r)
        .map(|(_, s)| *s)
        .ok_or(Error::OutOfTable(r))
}

pub fn bound_report(r: u64) -> Result<BoundReport> {
    check_r(r)?;
    let (r_star, r_star_star) = r_stars(r);
    let (beta, delta) = beta_delta(r)?;
    let c = c_from(&beta, &delta);
    let c1 = (r % 2 == 1 && r >= 5).then(|| c1_from(&beta, &delta));
    Ok(BoundReport {
        r,
        r_star,
        r_star_star,
        c,
        c1,
        upper: upper_bound(r)?,
        e_term: e_terms(r)?,
        cstar_inverse: cstar_reference(r).ok(),
        beta,
        delta,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Period `R+1, R^l` for even `R >= 4`.
    Thm2,
    /// The eleven-term period `R,R,R+1,R,R+1,R+1,R,R+1,R+1,R,R+1`, odd `R`.
    Thm3,
    /// Period `R, (R+1)^l` for odd `R`.
    Sec6,
    /// The quadratic number `(sqrt(3122285) - 1097)/1094`.
    Pitman,
    /// Period `(3,5)`, `(5,6)` or `(7,8)` selected by `R`.
    Period2,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Thm2,
        FamilyKind::Thm3,
        FamilyKind::Sec6,
        FamilyKind::Pitman,
        FamilyKind::Period2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Thm2 => "thm2",
            FamilyKind::Thm3 => "thm3",
            FamilyKind::Sec6 => "sec6",
            FamilyKind::Pitman => "pitman",
            FamilyKind::Period2 => "period2",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::BadFamilyParams(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyMember {
    Expansion(NcfExpansion),
    Value(QuadNum),
}

impl FamilyMember {
    pub fn expansion(self) -> Result<NcfExpansion> {
        match self {
            FamilyMember::Expansion(e) => Ok(e),
            FamilyMember::Value(v) => NcfExpansion::expand(&v, 10_000),
        }
    }
}

pub fn family(kind: FamilyKind, r: u64, l: usize) -> Result<FamilyMember> {
    let bad = |msg: String| Err(Error::BadFamilyParams(msg));
    let period = match kind {
        FamilyKind::Thm2 => {
            if r < 4 || r % 2 == 1 || l == 0 {
                return bad(format!(
                    "thm2 needs even R >= 4 and l >= 1, got R={r}, l={l}"
                ));
            }
            let mut p = vec![r + 1];
            p.extend(std::iter::repeat_n(r, l));
            p
        }
        FamilyKind::Thm3 => {
            if r < 3 || r.is_multiple_of(2) {
                return bad(format!("thm3 needs odd R >= 3, got R={r}"));
            }
            let s = r + 1;
            vec![r, r, s, r, s, s, r, s, s, r, s]
        }
        FamilyKind::Sec6 => {
            if r < 3 || r.is_multiple_of(2) || l == 0 {
                return bad(format!(
                    "sec6 needs odd R >= 3 and l >= 1, got R={r}, l={l}"
                ));
            }
            let mut p = vec![r];
            p.extend(std::iter::repeat_n(r + 1, l));
            p
        }
        FamilyKind::Pitman => {
            let v = (QuadNum::sqrt_of(3_122_285)? - 1097) / 1094;
            return Ok(FamilyMember::Value(v));
        }
        FamilyKind::Period2 => match r {
            3 => vec![3, 5],
            5 => vec![5, 6],
            7 => vec![7, 8],
            _ => return bad(format!("period2 is listed for R in {{3, 5, 7}}, got {r}")),
        },
    };
    NcfExpansion::periodic(period).map(FamilyMember::Expansion)
}

/// Known exact `rho` for the period-two examples and the Pitman number.
pub fn family_reference(kind: FamilyKind, r: u64) -> Result<QuadNum> {
    let (num, den, radicand) = match (kind, r) {
        (FamilyKind::Period2, 3) => (13, 11, 165),
        (FamilyKind::Period2, 5) => (589, 312, 195),
        (FamilyKind::Period2, 7) => (3649, 1664, 182),
        (FamilyKind::Pitman, _) => (547, 4, 3_122_285),
        _ => {
            return Err(Error::BadFamilyParams(format!(
                "no reference value for {kind} with R={r}"
            )))
        }
    };
    Ok((QuadNum::sqrt_of(radicand)? * den).recip()? * num)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QuadNum {
        QuadNum::from_int(n)
    }

    fn sqrt(n: i64) -> QuadNum {
        QuadNum::sqrt_of(n).unwrap()
    }

    #[test]
    fn closed_form_constants() {
        assert_eq!(c_bound(3).unwrap(), (sqrt(3) * 6 + 8).recip().unwrap());
        assert_eq!(c_bound(4).unwrap(), (sqrt(3) * 4 + 2).recip().unwrap());
        let inv: Vec<String> = (3..=8)
            .map(|r| c_bound(r).unwrap().recip().unwrap().to_decimal_truncated(4))
            .collect();
        assert_eq!(
            inv,
            ["18.3923", "8.9282", "7.9497", "6.6568", "6.3431", "5.8306"]
        );
    }

    #[test]
    fn parity_closed_forms() {
        for r in 3..40i64 {
            let c = c_bound(r as u64).unwrap();
            let alt = if r % 2 == 0 {
                q(r - 2) / (sqrt(r * r - 4) + 1) / 4
            } else {
                let s = sqrt((r + 1) * (r + 1) - 4);
                (q(2 * r - 2) - &s) / (s - 1) / 4
            };
            assert_eq!(c, alt, "R={r}");
        }
    }

    #[test]
    fn beta_delta_identities() {
        for r in 3..60u64 {
            let (b, d) = beta_delta(r).unwrap();
            if r % 2 == 0 {
                assert_eq!(b, &d + &(&d * &b));
                assert!(b > d);
                let lhs = (QuadNum::one() - &(&d * 2)) * (QuadNum::one() - &b);
                assert_eq!(lhs, QuadNum::one() - &(&b * 3) + &(&d * &b * 4));
            } else {
                assert_eq!(d, &b + &(&d * &b));
                assert!(d > b);
            }
        }
    }

    #[test]
    fn e_terms_closed_forms_and_round_trip() {
        assert_eq!(
            e_terms(4).unwrap(),
            ETerm::E1((q(524) - &(sqrt(3) * 256)) / 11)
        );
        assert_eq!(
            e_terms(3).unwrap(),
            ETerm::E2((q(348) - &(sqrt(3) * 162)) / 11)
        );
        for r in 3..80u64 {
            let rq = q(r as i64);
            let e = e_terms(r).unwrap();
            let c2 = if r % 2 == 0 { 5 } else { 4 };
            let rhs = QuadNum::one() - &(q(3) / &rq) + &(q(c2) / &(&rq * &rq))
                - &(e.value() / &rq.pow(3));
            assert_eq!(c_bound(r).unwrap() * 4, rhs, "R={r}");
        }
        assert!(matches!(
            e_term_checked(5, true),
            Err(Error::ParityMismatch(_))
        ));
        assert!(matches!(
            e_term_checked(4, false),
            Err(Error::ParityMismatch(_))
        ));
    }

    #[test]
    fn report_fields() {
        assert!(matches!(bound_report(2), Err(Error::RBelow3(2))));
        let rep = bound_report(3).unwrap();
        assert_eq!((rep.r_star, rep.r_star_star), (4, 3));
        assert!(rep.c1.is_none());
        assert_eq!(rep.cstar_inverse, Some(20.4874));
        let rep = bound_report(5).unwrap();
        assert!(rep.c1.as_ref().unwrap() > &rep.c);
        assert!(rep.c < rep.upper && rep.upper < QuadNum::ratio(1, 4).unwrap());
        assert!(bound_report(9).unwrap().cstar_inverse.is_none());
        assert!(matches!(cstar_reference(9), Err(Error::OutOfTable(9))));
    }

    #[test]
    fn families() {
        let FamilyMember::Expansion(e) = family(FamilyKind::Thm2, 4, 2).unwrap() else {
            panic!()
        };
        assert_eq!(e.period(), [5, 4, 4]);
        let FamilyMember::Expansion(e) = family(FamilyKind::Thm3, 5, 0).unwrap() else {
            panic!()
        };
        assert_eq!(e.period(), [5, 5, 6, 5, 6, 6, 5, 6, 6, 5, 6]);
        assert!(family(FamilyKind::Thm2, 5, 1).is_err());
        assert!(family(FamilyKind::Period2, 4, 0).is_err());
        let FamilyMember::Value(p) = family(FamilyKind::Pitman, 0, 0).unwrap() else {
            panic!()
        };
        assert!(p.in_unit_interval());
        assert!(
            (1.0 / family_reference(FamilyKind::Pitman, 0).unwrap().to_f64() - 12.9213).abs()
                < 1e-4
        );
        let r = family_reference(FamilyKind::Period2, 3).unwrap();
        assert!((1.0 / r.to_f64() - 10.8690).abs() < 1e-4);
        assert_eq!("sec6".parse::<FamilyKind>().unwrap(), FamilyKind::Sec6);
    }
}
