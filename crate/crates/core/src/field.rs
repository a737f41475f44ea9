//! Exact arithmetic in real quadratic fields.
//!
//! A [`QuadNum`] is `(a + b*sqrt(D))/c` with `c > 0`, `gcd(a, b, c) = 1` and
//! `D` squarefree. Rationals are stored with `b = 0, D = 1`, so rational and
//! irrational quantities share one type and one set of operations. Every
//! predicate (sign, comparison, floor) is decided in integer arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest trial divisor used when reducing a radicand to its squarefree part.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 20;

/// Maximum number of digits accepted by the decimal renderer in the CLI.
pub const MAX_DECIMAL_DIGITS: usize = 50;

#[derive(Clone, Debug)]
pub struct QuadNum {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Splits `d >= 0` as `f^2 * core` with `core` squarefree.
///
/// Trial division stops once `p^3` exceeds the cofactor (or at
/// [`TRIAL_DIVISION_LIMIT`]). A cofactor with no prime factor up to its cube
/// root has at most two prime factors, so it is squarefree unless it is a
/// perfect square, which is checked with an integer square root.
fn squarefree_split(d: &BigInt) -> (BigInt, BigInt) {
    if d.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut rest = d.clone();
    let mut factor = BigInt::one();
    let mut core = BigInt::one();
    let mut p: u64 = 2;
    while p < TRIAL_DIVISION_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb * &pb > rest {
            break;
        }
        let p2 = &pb * &pb;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            factor *= &pb;
        }
        if (&rest % &pb).is_zero() {
            rest /= &pb;
            core *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let s = rest.sqrt();
        if &s * &s == rest {
            factor *= s;
        } else {
            core *= rest;
        }
    }
    (factor, core)
}

/// `floor((a + b*sqrt(d))/c)` for `c > 0`, `d` squarefree or 1.
fn floor_parts(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    let surd_floor = if b.is_zero() {
        BigInt::zero()
    } else {
        let sq = b * b * d;
        let r = sq.sqrt();
        let exact = &r * &r == sq;
        if b.is_positive() {
            r
        } else if exact {
            -r
        } else {
            -r - 1
        }
    };
    // a + b*sqrt(d) lies in [n0, n0 + 1), hence floor(num / c) = floor(n0 / c).
    let n0 = a + surd_floor;
    n0.div_floor(c)
}

/// Sign of `a + b*sqrt(d)` with `d >= 1`.
fn sign_parts(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let sa = a.sign_cmp();
    let sb = b.sign_cmp();
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    match (a * a).cmp(&(b * b * d)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl QuadNum {
    /// Builds `(a + b*sqrt(d))/c`, reducing `d` to its squarefree part.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::InvalidExpansion(format!(
                "negative radicand {d} (only real quadratic fields are supported)"
            )));
        }
        let (f, core) = squarefree_split(&d);
        let (a, b, d) = if core.is_zero() || b.is_zero() {
            (a, BigInt::zero(), BigInt::one())
        } else if core.is_one() {
            (a + b * f, BigInt::zero(), BigInt::one())
        } else {
            (a, b * f, core)
        };
        Ok(Self::reduced(a, b, c, d))
    }

    /// Normalizes signs and common factors; `d` must already be squarefree.
    fn reduced(mut a: BigInt, mut b: BigInt, mut c: BigInt, mut d: BigInt) -> Self {
        debug_assert!(!c.is_zero());
        if b.is_zero() {
            d = BigInt::one();
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        QuadNum { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        QuadNum {
            a: n.into(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::one(),
        }
    }

    pub fn ratio(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        Self::new(p, 0, q, 1)
    }

    /// `sqrt(n)` for a non-negative integer `n`.
    pub fn sqrt_of(n: impl Into<BigInt>) -> Result<Self> {
        Self::new(0, 1, 1, n)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The squarefree radicand (1 for rationals).
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.c.is_one()
    }

    pub fn signum(&self) -> Ordering {
        sign_parts(&self.a, &self.b, &self.d)
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `(a - b*sqrt(D))/c`.
    pub fn conjugate(&self) -> Self {
        QuadNum {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// `true` when `self` lies strictly between 0 and 1.
    pub fn in_unit_interval(&self) -> bool {
        self.is_positive() && *self < QuadNum::one()
    }

    /// Common radicand of two operands, or `MixedFields`.
    pub fn common_radicand(&self, other: &QuadNum) -> Result<BigInt> {
        if self.is_rational() {
            Ok(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::MixedFields(self.d.to_string(), other.d.to_string()))
        }
    }

    pub fn same_field(&self, other: &QuadNum) -> bool {
        self.common_radicand(other).is_ok()
    }

    pub fn checked_add(&self, y: &QuadNum) -> Result<Self> {
        let d = self.common_radicand(y)?;
        let a = &self.a * &y.c + &y.a * &self.c;
        let b = &self.b * &y.c + &y.b * &self.c;
        let c = &self.c * &y.c;
        Ok(Self::reduced(a, b, c, d))
    }

    pub fn checked_sub(&self, y: &QuadNum) -> Result<Self> {
        self.checked_add(&-y)
    }

    pub fn checked_mul(&self, y: &QuadNum) -> Result<Self> {
        let d = self.common_radicand(y)?;
        let a = &self.a * &y.a + &self.b * &y.b * &d;
        let b = &self.a * &y.b + &self.b * &y.a;
        let c = &self.c * &y.c;
        Ok(Self::reduced(a, b, c, d))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        let a = &self.c * &self.a;
        let b = -(&self.c * &self.b);
        Ok(Self::reduced(a, b, norm, self.d.clone()))
    }

    pub fn checked_div(&self, y: &QuadNum) -> Result<Self> {
        self.common_radicand(y)?;
        self.checked_mul(&y.recip()?)
    }

    /// Applies `op` to `x` and `y` (`y` is ignored for `Neg`).
    pub fn arith(op: ArithOp, x: &QuadNum, y: &QuadNum) -> Result<Self> {
        match op {
            ArithOp::Add => x.checked_add(y),
            ArithOp::Sub => x.checked_sub(y),
            ArithOp::Mul => x.checked_mul(y),
            ArithOp::Div => x.checked_div(y),
            ArithOp::Neg => Ok(-x),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QuadNum::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn floor(&self) -> BigInt {
        floor_parts(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn ceil(&self) -> BigInt {
        let f = self.floor();
        if self.is_integer() {
            f
        } else {
            f + 1
        }
    }

    /// `(floor(x), ceil(x))`.
    pub fn floor_ceil(&self) -> (BigInt, BigInt) {
        (self.floor(), self.ceil())
    }

    /// Fractional part `x - floor(x)`.
    pub fn fract(&self) -> Self {
        self - &QuadNum::from_int(self.floor())
    }

    /// `floor(x * 2^e)`; `e` may be negative.
    pub fn floor_times_pow2(&self, e: i64) -> BigInt {
        if e >= 0 {
            let s = e as usize;
            floor_parts(&(&self.a << s), &(&self.b << s), &self.c, &self.d)
        } else {
            let c = &self.c << ((-e) as usize);
            floor_parts(&self.a, &self.b, &c, &self.d)
        }
    }

    fn magnitude_hint(&self) -> i64 {
        let num_bits = self.a.bits().max(self.b.bits() + self.d.bits() / 2 + 1);
        num_bits as i64 - self.c.bits() as i64
    }

    /// Nearest double, obtained from an exact scaled floor.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let negative = self.is_negative();
        let x = self.abs();
        let mut e = 64 - x.magnitude_hint();
        loop {
            let f = x.floor_times_pow2(e);
            let bits = f.bits() as i64;
            if bits >= 60 {
                let mant = f.to_f64().unwrap_or(f64::INFINITY);
                let v = mant * 2f64.powi(-(e.clamp(-2000, 2000) as i32));
                return if negative { -v } else { v };
            }
            e += 64 - bits;
            if e > 1 << 20 {
                return 0.0;
            }
        }
    }

    /// Correctly rounded decimal with `digits` fractional digits
    /// (ties round away from zero).
    pub fn to_decimal(&self, digits: usize) -> String {
        self.render_decimal(digits, true)
    }

    /// Decimal with `digits` fractional digits, truncated toward zero.
    pub fn to_decimal_truncated(&self, digits: usize) -> String {
        self.render_decimal(digits, false)
    }

    fn render_decimal(&self, digits: usize, round: bool) -> String {
        let negative = self.is_negative();
        let x = self.abs();
        let scale = num_traits::pow(BigInt::from(10), digits);
        // floor(2 * |x| * 10^k + 1) / 2 rounds half up.
        let half = if round { x.c.clone() } else { BigInt::zero() };
        let scaled = QuadNum::reduced(
            &x.a * &scale * 2 + half,
            &x.b * &scale * 2,
            &x.c * 2,
            x.d.clone(),
        );
        let r = scaled.floor();
        let s = r.to_string();
        let (int_part, frac_part) = if digits == 0 {
            (s, String::new())
        } else if s.len() > digits {
            let (i, f) = s.split_at(s.len() - digits);
            (i.to_string(), f.to_string())
        } else {
            ("0".to_string(), format!("{:0>width$}", s, width = digits))
        };
        let sign = if negative && !r.is_zero() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    /// Exact sign of `x - y` for operands from any two real quadratic fields.
    fn cmp_values(&self, y: &QuadNum) -> Ordering {
        if self.same_field(y) {
            let diff = self - y;
            return diff.signum();
        }
        // Both irrational with different radicands. Multiply through by c1*c2 > 0:
        // p + q sqrt(d1) + r sqrt(d2).
        let p = &self.a * &y.c - &y.a * &self.c;
        let q = &self.b * &y.c;
        let r = -(&y.b * &self.c);
        let sa = sign_parts(&p, &q, &self.d);
        let sb = r.sign_cmp();
        if sa == Ordering::Equal {
            return sb;
        }
        if sb == Ordering::Equal || sa == sb {
            return sa;
        }
        // |p + q sqrt d1| vs |r| sqrt d2: compare squares, the difference
        // (p^2 + q^2 d1 - r^2 d2) + 2pq sqrt(d1) is never zero.
        let sq_a = &p * &p + &q * &q * &self.d - &r * &r * &y.d;
        let sq_b = BigInt::from(2) * &p * &q;
        match sign_parts(&sq_a, &sq_b, &self.d) {
            Ordering::Greater => sa,
            _ => sb,
        }
    }

    /// Exact three-way comparison.
    pub fn compare(&self, y: &QuadNum) -> Ordering {
        self.cmp_values(y)
    }

    /// Sign of `sum c_i x_i` for values from any number of fields. Terms of
    /// one field are summed exactly; with at most two fields left the sign is
    /// exact, otherwise it is decided from nested dyadic enclosures. `None`
    /// means the enclosures at `max_bits` still straddle zero.
    pub fn combination_sign(terms: &[(i64, &QuadNum)], max_bits: i64) -> Option<Ordering> {
        let mut groups: Vec<QuadNum> = Vec::new();
        for (c, x) in terms {
            let t = *x * *c;
            match groups.iter_mut().find(|g| g.same_field(&t)) {
                Some(g) => *g = &*g + &t,
                None => groups.push(t),
            }
        }
        groups.retain(|g| !g.is_zero());
        match groups.as_slice() {
            [] => return Some(Ordering::Equal),
            [x] => return Some(x.signum()),
            [x, y] => return Some(x.cmp_values(&-y.clone())),
            _ => {}
        }
        let mut bits = 64;
        while bits <= max_bits {
            // the scaled sum lies in [lo, lo + groups)
            let lo: BigInt = groups.iter().map(|g| g.floor_times_pow2(bits)).sum();
            let hi = &lo + groups.len();
            if lo.is_positive() {
                return Some(Ordering::Greater);
            }
            if hi <= BigInt::zero() {
                return Some(Ordering::Less);
            }
            bits *= 2;
        }
        None
    }
}

impl PartialEq for QuadNum {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c && self.d == other.d
    }
}

impl Eq for QuadNum {}

impl Hash for QuadNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
        self.d.hash(state);
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_values(other)
    }
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::from_int(n)
    }
}

impl From<BigInt> for QuadNum {
    fn from(n: BigInt) -> Self {
        QuadNum::from_int(n)
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

// Operator impls panic on operands from different fields, like integer
// overflow; use the `checked_*` methods where mixing is possible.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                (&self).$method(rhs)
            }
        }
        impl $tr<QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                self.$method(&rhs)
            }
        }
        impl $tr<i64> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: i64) -> QuadNum {
                self.$method(&QuadNum::from_int(rhs))
            }
        }
        impl $tr<i64> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: i64) -> QuadNum {
                (&self).$method(&QuadNum::from_int(rhs))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.c.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            }
        } else {
            let sign = if self.b.is_negative() { '-' } else { '+' };
            write!(
                f,
                "({}{}{}*sqrt({}))/{}",
                self.a,
                sign,
                self.b.abs(),
                self.d,
                self.c
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> QuadNum {
        QuadNum::new(a, b, c, d).unwrap()
    }

    #[test]
    fn conjugate_sum_and_norm() {
        assert_eq!(q(1, 1, 2, 5) + q(1, -1, 2, 5), QuadNum::one());
        assert_eq!(q(3, -1, 2, 5) * q(3, 1, 2, 5), QuadNum::one());
    }

    #[test]
    fn division_rationalizes() {
        let x = QuadNum::one() / q(3, -1, 2, 5);
        assert_eq!(x, q(3, 1, 2, 5));
        assert_eq!(&x * &q(3, -1, 2, 5), QuadNum::one());
    }

    #[test]
    fn canonical_form() {
        // sqrt(12) = 2 sqrt(3)
        assert_eq!(q(0, 1, 1, 12), q(0, 2, 1, 3));
        // sqrt(9) = 3
        assert_eq!(q(1, 1, 2, 9), QuadNum::from_int(2));
        assert_eq!(q(2, 4, -6, 5), q(-1, -2, 3, 5));
        assert_eq!(q(4, 0, 2, 7).radicand(), &BigInt::one());
        assert_eq!(q(5, 3, 1, 0), QuadNum::from_int(5));
    }

    #[test]
    fn mixed_fields_rejected() {
        let err = q(0, 1, 1, 2).checked_add(&q(0, 1, 1, 3)).unwrap_err();
        assert!(matches!(err, Error::MixedFields(_, _)));
        assert_eq!(
            QuadNum::one().checked_div(&QuadNum::zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn comparisons() {
        assert_eq!(
            q(3, -1, 2, 5).compare(&QuadNum::ratio(1, 2).unwrap()),
            Ordering::Less
        );
        assert_eq!(
            q(0, 1, 1, 2).compare(&QuadNum::ratio(3, 2).unwrap()),
            Ordering::Less
        );
        let x = q(7, -3, 4, 11);
        assert_eq!(x.compare(&x), Ordering::Equal);
        // cross-field: sqrt(2) < sqrt(3), 1 + sqrt(2) > sqrt(5)
        assert_eq!(q(0, 1, 1, 2).compare(&q(0, 1, 1, 3)), Ordering::Less);
        assert_eq!(q(1, 1, 1, 2).compare(&q(0, 1, 1, 5)), Ordering::Greater);
        assert_eq!(q(-1, 1, 1, 2).compare(&q(-2, 1, 1, 5)), Ordering::Greater);
    }

    #[test]
    fn floors() {
        assert_eq!(
            q(3, 1, 2, 5).floor_ceil(),
            (BigInt::from(2), BigInt::from(3))
        );
        assert_eq!(
            QuadNum::ratio(7, 3).unwrap().floor_ceil(),
            (BigInt::from(2), BigInt::from(3))
        );
        assert_eq!(
            QuadNum::ratio(4, 2).unwrap().floor_ceil(),
            (BigInt::from(2), BigInt::from(2))
        );
        assert_eq!(q(-3, 1, 2, 5).floor(), BigInt::from(-1));
        assert_eq!(q(0, -1, 1, 2).floor(), BigInt::from(-2));
    }

    #[test]
    fn decimals() {
        assert_eq!(q(-8, 6, 44, 3).to_decimal(6), "0.054371");
        assert_eq!(QuadNum::ratio(1, 2).unwrap().to_decimal(4), "0.5000");
        assert_eq!(q(0, 1, 5, 5).to_decimal(8), "0.44721360");
        assert_eq!(q(0, 1, 5, 5).to_decimal(7), "0.4472136");
        assert_eq!(q(0, -1, 1, 2).to_decimal(3), "-1.414");
        assert_eq!(QuadNum::ratio(-1, 8).unwrap().to_decimal(2), "-0.13");
        assert_eq!(QuadNum::from_int(3).to_decimal(0), "3");
    }

    #[test]
    fn c3_reciprocal_form() {
        let c3 = QuadNum::one() / (q(0, 6, 1, 3) + QuadNum::from_int(8));
        assert_eq!(c3, q(-8, 6, 44, 3));
    }

    #[test]
    fn floats() {
        assert!((q(1, 1, 2, 5).to_f64() - 1.618_033_988_749_895).abs() < 1e-15);
        let tiny = q(3, -1, 2, 5).pow(60);
        let expected = 0.381_966_011_250_105_1f64.powi(60);
        assert!((tiny.to_f64() / expected - 1.0).abs() < 1e-12);
        assert_eq!(QuadNum::ratio(-3, 4).unwrap().to_f64(), -0.75);
    }

    #[test]
    fn display() {
        assert_eq!(q(15, -1, 6, 165).to_string(), "(15-1*sqrt(165))/6");
        assert_eq!(QuadNum::ratio(5, 7).unwrap().to_string(), "5/7");
        assert_eq!(QuadNum::from_int(-2).to_string(), "-2");
    }

    #[test]
    fn combination_sign_across_fields() {
        let (r2, r3, r5) = (q(0, 1, 1, 2), q(0, 1, 1, 3), q(0, 1, 1, 5));
        // sqrt2 + sqrt3 - sqrt5 > 0 and 3 sqrt2 + 2 sqrt3 - 4 sqrt5 < 0
        assert_eq!(
            QuadNum::combination_sign(&[(1, &r2), (1, &r3), (-1, &r5)], 1 << 12),
            Some(Ordering::Greater)
        );
        assert_eq!(
            QuadNum::combination_sign(&[(3, &r2), (2, &r3), (-4, &r5)], 1 << 12),
            Some(Ordering::Less)
        );
        assert_eq!(
            QuadNum::combination_sign(&[(2, &r2), (-1, &(&r2 * 2))], 64),
            Some(Ordering::Equal)
        );
        let one = QuadNum::one();
        assert_eq!(
            QuadNum::combination_sign(&[(1, &r2), (-1, &r3), (1, &one)], 1 << 12),
            Some((2f64.sqrt() - 3f64.sqrt() + 1.0).partial_cmp(&0.0).unwrap())
        );
    }
}
