//! Text forms of exact values, expansions and digit sequences.
//!
//! ```text
//! value     := surd | rational | decimal
//! surd      := "(" int ("+"|"-") [uint "*"] "sqrt(" uint ")" ")" ["/" uint]
//! rational  := int ["/" uint]
//! decimal   := ["-"|"+"] digits "." digits
//! ncf       := "[0;" [terms] "]-"
//! terms     := term ("," term)*      term := uint | "(" uint ("," uint)* ")*"
//! digitseq  := ("b:"|"t:") "[" [dterms] ["," "..."] "]" "over" ncf
//! ```
//!
//! Whitespace is allowed between tokens. Error positions are byte offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::digits::DigitSeq;
use crate::error::{Error, Result};
use crate::field::QuadNum;
use crate::ncf::NcfExpansion;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Value(QuadNum),
    Expansion(NcfExpansion),
}

impl Expr {
    /// The numeric value; expansions are evaluated exactly.
    pub fn value(&self) -> Result<QuadNum> {
        match self {
            Expr::Value(v) => Ok(v.clone()),
            Expr::Expansion(e) => e.value(),
        }
    }

    /// The expansion; values are expanded with the round-up algorithm.
    pub fn expansion(&self, max_terms: usize) -> Result<NcfExpansion> {
        match self {
            Expr::Value(v) => NcfExpansion::expand(v, max_terms),
            Expr::Expansion(e) => Ok(e.clone()),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Ok(s)
    }

    fn uint(&mut self) -> Result<BigInt> {
        Ok(self.digits()?.parse().expect("ascii digits"))
    }

    fn small_uint(&mut self) -> Result<u64> {
        let start = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn sign(&mut self) -> i8 {
        if self.eat("-") {
            -1
        } else {
            self.eat("+");
            1
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        let s = self.sign();
        let v = self.uint()?;
        Ok(if s < 0 { -v } else { v })
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn nonzero_denominator(&mut self) -> Result<BigInt> {
        let start = self.pos;
        let c = self.uint()?;
        if c.is_zero() {
            return Err(Error::parse(start, "zero denominator"));
        }
        Ok(c)
    }

    fn value(&mut self) -> Result<QuadNum> {
        if self.peek() == Some('(') {
            return self.surd();
        }
        let start = self.pos;
        let sign = self.sign();
        let int_part = self.uint()?;
        let mut num = int_part;
        let mut den = BigInt::one();
        if self.rest().starts_with('.') {
            self.pos += 1;
            let frac_start = self.pos;
            let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
            if len == 0 {
                return Err(Error::parse(frac_start, "expected digits after '.'"));
            }
            let frac: BigInt = self.rest()[..len].parse().expect("ascii digits");
            self.pos += len;
            den = num_traits::pow(BigInt::from(10), len);
            num = num * &den + frac;
        } else if self.eat("/") {
            den = self.nonzero_denominator()?;
        }
        if sign < 0 {
            num = -num;
        }
        QuadNum::ratio(num, den).map_err(|e| Error::parse(start, e.to_string()))
    }

    fn surd(&mut self) -> Result<QuadNum> {
        let start = self.pos;
        self.expect("(")?;
        let a = self.int()?;
        let sign = if self.eat("+") {
            1
        } else if self.eat("-") {
            -1
        } else {
            return Err(self.error("expected '+' or '-'"));
        };
        self.skip_ws();
        let b = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let b = self.uint()?;
            self.expect("*")?;
            b
        } else {
            BigInt::one()
        };
        self.expect("sqrt")?;
        self.expect("(")?;
        let d = self.uint()?;
        self.expect(")")?;
        self.expect(")")?;
        let c = if self.eat("/") {
            self.nonzero_denominator()?
        } else {
            BigInt::one()
        };
        let b = if sign < 0 { -b } else { b };
        QuadNum::new(a, b, c, d).map_err(|e| Error::parse(start, e.to_string()))
    }

    fn list<T>(
        &mut self,
        item: impl Fn(&mut Self) -> Result<T>,
        allow_ellipsis: bool,
    ) -> Result<(Vec<T>, Vec<T>, bool)> {
        let mut pre = Vec::new();
        let mut period = Vec::new();
        let mut truncated = false;
        if self.peek() == Some(']') {
            return Ok((pre, period, truncated));
        }
        loop {
            if !period.is_empty() || truncated {
                return Err(self.error("nothing may follow the period or '...'"));
            }
            if allow_ellipsis && self.eat("...") {
                truncated = true;
            } else if self.eat("(") {
                period.push(item(self)?);
                while self.eat(",") {
                    period.push(item(self)?);
                }
                self.expect(")")?;
                self.expect("*")?;
            } else {
                pre.push(item(self)?);
            }
            if !self.eat(",") {
                break;
            }
        }
        Ok((pre, period, truncated))
    }

    fn ncf(&mut self) -> Result<NcfExpansion> {
        let start = self.pos;
        self.expect("[")?;
        self.expect("0")?;
        self.expect(";")?;
        let (pre, period, _) = self.list(Self::small_uint, false)?;
        self.expect("]")?;
        self.expect("-")?;
        NcfExpansion::new(pre, period).map_err(|e| Error::parse(start, e.to_string()))
    }

    fn digit_seq(&mut self) -> Result<DigitSeq> {
        let start = self.pos;
        let is_t = if self.eat("b:") {
            false
        } else if self.eat("t:") {
            true
        } else {
            return Err(self.error("expected 'b:' or 't:'"));
        };
        self.expect("[")?;
        let (pre, period, truncated) = if is_t {
            let (pre, period, tr) = self.list(Cursor::small_int, false)?;
            (pre, period, tr)
        } else {
            let (pre, period, tr) = self.list(Self::small_uint, true)?;
            (
                pre.into_iter().map(|b| b as i64).collect(),
                period.into_iter().map(|b| b as i64).collect(),
                tr,
            )
        };
        self.expect("]")?;
        self.expect("over")?;
        let base = self.ncf()?;
        let wrap = |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::parse(start, other.to_string()),
        };
        if is_t {
            return DigitSeq::from_t(base, &pre, &period).map_err(wrap);
        }
        let pre: Vec<u64> = pre.into_iter().map(|b| b as u64).collect();
        let period: Vec<u64> = period.into_iter().map(|b| b as u64).collect();
        if truncated {
            DigitSeq::truncated_prefix(base, pre).map_err(wrap)
        } else {
            DigitSeq::from_digits(base, pre, period).map_err(wrap)
        }
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = self.sign() < 0;
        let v = self.small_uint()? as i64;
        Ok(if neg { -v } else { v })
    }
}

pub fn parse_value(text: &str) -> Result<QuadNum> {
    let mut c = Cursor::new(text);
    let v = c.value()?;
    c.finish()?;
    Ok(v)
}

pub fn parse_ncf(text: &str) -> Result<NcfExpansion> {
    let mut c = Cursor::new(text);
    let v = c.ncf()?;
    c.finish()?;
    Ok(v)
}

pub fn parse_digit_seq(text: &str) -> Result<DigitSeq> {
    let mut c = Cursor::new(text);
    let v = c.digit_seq()?;
    c.finish()?;
    Ok(v)
}

/// A value or an expansion, told apart by the leading `[`.
pub fn parse_expr(text: &str) -> Result<Expr> {
    if text.trim_start().starts_with('[') {
        parse_ncf(text).map(Expr::Expansion)
    } else {
        parse_value(text).map(Expr::Value)
    }
}

/// A value in the open unit interval.
pub fn parse_unit(text: &str) -> Result<QuadNum> {
    let v = parse_expr(text)?.value()?;
    if v.in_unit_interval() {
        Ok(v)
    } else {
        Err(Error::OutOfRange(v.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(parse_value("0.5").unwrap(), QuadNum::ratio(1, 2).unwrap());
        assert_eq!(
            parse_value(" -3/6 ").unwrap(),
            QuadNum::ratio(-1, 2).unwrap()
        );
        assert_eq!(parse_value("7").unwrap(), QuadNum::from_int(7));
        assert_eq!(
            parse_value("-0.125").unwrap(),
            QuadNum::ratio(-1, 8).unwrap()
        );
        let s = parse_value("(15 - 1*sqrt(165))/6").unwrap();
        assert_eq!(s, parse_ncf("[0; (3,5)*]-").unwrap().value().unwrap());
        assert_eq!(
            parse_value("(0+1*sqrt(5))").unwrap(),
            QuadNum::sqrt_of(5).unwrap()
        );
        assert_eq!(
            parse_value("(0 + sqrt(5))").unwrap(),
            QuadNum::sqrt_of(5).unwrap()
        );
        assert_eq!(
            parse_value("(-2+2*sqrt(12))/4").unwrap().to_string(),
            "(-1+2*sqrt(3))/2"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let pos = |s: &str| match parse_expr(s) {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("1/0"), 2);
        assert_eq!(pos("(1+2*sqrt(5)"), 12);
        assert_eq!(pos("0.5x"), 3);
        assert_eq!(pos("[0; 3, (4)*, 5]-"), 12);
        assert_eq!(pos("[0; 3]"), 6);
        assert_eq!(pos("[0; 1]-"), 0);
        assert_eq!(pos("1."), 2);
    }

    #[test]
    fn expansion_forms() {
        let e = parse_ncf("[0; (3,5)*]-").unwrap();
        assert!(e.preperiod().is_empty());
        assert_eq!(e.period(), [3, 5]);
        let e = parse_ncf("[0;2,3,4]-").unwrap();
        assert_eq!(e.preperiod(), [2, 3, 4]);
        assert!(parse_unit("1.5").is_err());
        assert!(parse_unit("[0; (3)*]-").is_ok());
    }

    #[test]
    fn digit_sequences() {
        let d = parse_digit_seq("b: [1, (0, 2, 0)*] over [0; (3)*]-").unwrap();
        assert_eq!(d.to_string(), "b: [1, (0, 2, 0)*] over [0; (3)*]-");
        let t = parse_digit_seq("t: [(1, -1)*] over [0; (3)*]-").unwrap();
        assert_eq!(t.t_period(), vec![1, -1]);
        let tr = parse_digit_seq("b: [1, 0, ...] over [0; (3)*]-").unwrap();
        assert!(tr.is_truncated());
        assert_eq!(parse_digit_seq(&tr.to_string()).unwrap(), tr);
        assert!(matches!(
            parse_digit_seq("b: [(2)*] over [0; (3)*]-"),
            Err(Error::Parse { pos: 0, .. })
        ));
    }
}
