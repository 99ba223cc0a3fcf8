//! Exact arithmetic in the golden field `Q(τ)`, `τ² = τ + 1`.
//!
//! Every value is stored as `a + bτ` with `a`, `b` arbitrary-precision
//! rationals, so equality is componentwise and every sign decision is exact.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Golden ratio as a float, for rendering and filtering only.
pub const TAU_F64: f64 = 1.618_033_988_749_895;

/// An element `a + bτ` of `Q(τ)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    a: BigRational,
    b: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GoldenNumber {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        GoldenNumber { a, b }
    }

    /// `a + bτ` with integer coefficients.
    pub fn from_integers(a: i64, b: i64) -> Self {
        GoldenNumber {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    /// `(a + bτ) / d`.
    pub fn from_ratio(a: i64, b: i64, d: i64) -> Self {
        GoldenNumber {
            a: ratio(a, d),
            b: ratio(b, d),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        GoldenNumber {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn tau() -> Self {
        GoldenNumber::from_integers(0, 1)
    }

    /// `τ' = 1 - τ`, the Galois conjugate of `τ`.
    pub fn tau_conj() -> Self {
        GoldenNumber::from_integers(1, -1)
    }

    /// `√5 = 2τ - 1`.
    pub fn sqrt5() -> Self {
        GoldenNumber::from_integers(-1, 2)
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `τ`.
    pub fn tau_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when both coefficients are integers, i.e. the value lies in `Z[τ]`.
    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// The Galois map `τ ↦ τ'`: `a + bτ ↦ (a + b) - bτ`.
    pub fn conjugate(&self) -> Self {
        GoldenNumber {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// Field norm `x · conjugate(x) = a² + ab - b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Exact sign of the real value, as -1, 0 or +1.
    ///
    /// Writes the value as `(p + q√5) / 2` with `p = 2a + b`, `q = b` and
    /// settles mixed-sign cases by comparing `p²` against `5q²`.
    pub fn signum(&self) -> i32 {
        let p = &self.a + &self.a + &self.b;
        let sp = sign_of(&p);
        let sq = sign_of(&self.b);
        if sp == sq || sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        let lhs = &p * &p;
        let rhs = &self.b * &self.b * BigRational::from_integer(5.into());
        // p² = 5q² only when both vanish, since √5 is irrational.
        if lhs > rhs {
            sp
        } else {
            sq
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(GoldenNumber {
            a: c.a / &n,
            b: c.b / &n,
        })
    }

    /// Double-precision approximation. Never feed this into a decision.
    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * TAU_F64
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(k.into());
        GoldenNumber {
            a: &self.a * &k,
            b: &self.b * &k,
        }
    }

    /// Integer coefficients `(a, b)` when the value lies in `Z[τ]` and fits in `i64`.
    pub fn to_integers(&self) -> Option<(i64, i64)> {
        if !self.is_integral() {
            return None;
        }
        Some((self.a.to_integer().to_i64()?, self.b.to_integer().to_i64()?))
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Zero for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber::default()
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for GoldenNumber {
    fn one() -> Self {
        GoldenNumber::from_integers(1, 0)
    }
}

impl From<i64> for GoldenNumber {
    fn from(v: i64) -> Self {
        GoldenNumber::from_integers(v, 0)
    }
}

impl From<BigRational> for GoldenNumber {
    fn from(v: BigRational) -> Self {
        GoldenNumber::from_rational(v)
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $imp<&'b GoldenNumber> for &'a GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &'b GoldenNumber) -> GoldenNumber {
                let f: fn(&GoldenNumber, &GoldenNumber) -> GoldenNumber = $body;
                f(self, rhs)
            }
        }
        impl<'a> $imp<GoldenNumber> for &'a GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                $imp::$method(self, &rhs)
            }
        }
        impl<'b> $imp<&'b GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &'b GoldenNumber) -> GoldenNumber {
                $imp::$method(&self, rhs)
            }
        }
        impl $imp<GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                $imp::$method(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| GoldenNumber {
    a: &x.a + &y.a,
    b: &x.b + &y.b,
});

forward_binop!(Sub, sub, |x, y| GoldenNumber {
    a: &x.a - &y.a,
    b: &x.b - &y.b,
});

// (a + bτ)(c + dτ) = (ac + bd) + (ad + bc + bd)τ
forward_binop!(Mul, mul, |x, y| {
    let bd = &x.b * &y.b;
    GoldenNumber {
        a: &x.a * &y.a + &bd,
        b: &x.a * &y.b + &x.b * &y.a + bd,
    }
});

forward_binop!(Div, div, |x, y| {
    let inv = y.inv().expect("division of a golden number by zero");
    x * inv
});

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl AddAssign<&GoldenNumber> for GoldenNumber {
    fn add_assign(&mut self, rhs: &GoldenNumber) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl AddAssign for GoldenNumber {
    fn add_assign(&mut self, rhs: GoldenNumber) {
        *self += &rhs;
    }
}

impl SubAssign<&GoldenNumber> for GoldenNumber {
    fn sub_assign(&mut self, rhs: &GoldenNumber) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&GoldenNumber> for GoldenNumber {
    fn mul_assign(&mut self, rhs: &GoldenNumber) {
        *self = &*self * rhs;
    }
}

impl Sum for GoldenNumber {
    fn sum<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a GoldenNumber> for GoldenNumber {
    fn sum<I: Iterator<Item = &'a GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GoldenNumber {
    fn product<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::one(), |acc, x| acc * x)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Textual form `a/b+c/dt`, where `t` stands for `τ`.
///
/// Unit `τ` coefficients are written bare (`t`, `1-t`), zero parts are
/// dropped and the zero value prints as `0`.
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write_rational(f, &self.a);
        }
        if !self.a.is_zero() {
            write_rational(f, &self.a)?;
            if self.b.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.b.is_negative() {
            f.write_str("-")?;
        }
        let mag = self.b.abs();
        if !mag.is_one() {
            write_rational(f, &mag)?;
        }
        f.write_str("t")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseGoldenError {
    input: String,
}

impl fmt::Display for ParseGoldenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid golden number {:?} (expected a form like 1/4+3/5t)",
            self.input
        )
    }
}

impl core::error::Error for ParseGoldenError {}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if n.is_empty() || d.is_empty() || !is_digits(n) || !is_digits(d) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

fn is_digits(s: &str) -> bool {
    s.bytes().all(|c| c.is_ascii_digit())
}

impl FromStr for GoldenNumber {
    type Err = ParseGoldenError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = || ParseGoldenError {
            input: input.into(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        // Split into signed terms at every sign that does not lead the string.
        let mut terms = alloc::vec::Vec::new();
        let mut start = 0;
        for (i, c) in s.char_indices() {
            if (c == '+' || c == '-') && i > start {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        if terms.len() > 2 {
            return Err(err());
        }

        let mut value = GoldenNumber::zero();
        let (mut seen_rational, mut seen_tau) = (false, false);
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, is_tau) = match body.strip_suffix('t') {
                Some("") => (BigRational::one(), true),
                Some(c) => (parse_rational(c).ok_or_else(err)?, true),
                None => (parse_rational(body).ok_or_else(err)?, false),
            };
            let coef = if neg { -coef } else { coef };
            if is_tau {
                if seen_tau {
                    return Err(err());
                }
                seen_tau = true;
                value.b = coef;
            } else {
                if seen_rational || seen_tau {
                    return Err(err());
                }
                seen_rational = true;
                value.a = coef;
            }
        }
        Ok(value)
    }
}
