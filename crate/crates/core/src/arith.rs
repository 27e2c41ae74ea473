//! Exact rational scalars and the factorial-type primitives built on them.
//!
//! [`Rational`] wraps a reduced big rational. Every constructor and operation
//! normalizes eagerly (gcd 1, positive denominator, zero as `0/1`), so two
//! values are equal exactly when their numerators and denominators agree.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("double factorial undefined for {0}")]
    DoubleFactorialDomain(i64),
    #[error("cannot parse {0:?} as an exact rational")]
    Parse(String),
}

/// Arbitrary-precision reduced fraction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, ArithError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Panics on a zero denominator; intended for literals.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator in literal")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ArithError> {
        Rational::one().checked_div(self)
    }

    /// Nonnegative integer power; `0^0 = 1`.
    pub fn pow(&self, exp: u32) -> Rational {
        Rational(Pow::pow(&self.0, exp))
    }

    /// Signed integer power; negative exponents of zero are an error.
    pub fn powi(&self, exp: i64) -> Result<Rational, ArithError> {
        let magnitude = u32::try_from(exp.unsigned_abs()).expect("exponent out of range");
        let p = self.pow(magnitude);
        if exp < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    /// `(-1)^n`.
    pub fn sign_power(n: i64) -> Rational {
        if n.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    /// Sanity check used by tests: reduced with a positive denominator.
    pub fn is_normalized(&self) -> bool {
        use num_integer::Integer;
        self.denom().is_positive() && self.numer().gcd(self.denom()).is_one()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ArithError::Parse(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let valid_int = |x: &str, signed: bool| {
            let digits = if signed { x.strip_prefix(['-', '+']).unwrap_or(x) } else { x };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_int(n, true) || !valid_int(d, false) {
            return Err(err());
        }
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        Rational::new(n, d).map_err(|_| err())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::integer(n)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.is_integer() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rational::from(*other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Single entry point for the four field operations.
pub fn rat_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational, ArithError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

// Grow-only tables. Readers take the shared lock; extension takes the
// exclusive lock and re-checks the length.
static FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());
static DOUBLE_FACTORIALS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

fn memo_lookup(table: &RwLock<Vec<BigInt>>, n: usize, step: usize) -> BigInt {
    if let Some(v) = table.read().unwrap().get(n) {
        return v.clone();
    }
    let mut t = table.write().unwrap();
    if t.is_empty() {
        t.push(BigInt::one());
    }
    while t.len() <= n {
        let i = t.len();
        let prev = if i >= step { t[i - step].clone() } else { BigInt::one() };
        t.push(prev * BigInt::from(i));
    }
    t[n].clone()
}

pub fn factorial_int(n: usize) -> BigInt {
    memo_lookup(&FACTORIALS, n, 1)
}

pub fn factorial(n: usize) -> Rational {
    Rational::integer(factorial_int(n))
}

/// `n!!` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<Rational, ArithError> {
    match n {
        n if n < -1 => Err(ArithError::DoubleFactorialDomain(n)),
        -1 => Ok(Rational::one()),
        n => Ok(Rational::integer(memo_lookup(&DOUBLE_FACTORIALS, n as usize, 2))),
    }
}

/// Pochhammer symbol `z(z+1)...(z+l-1)`.
pub fn rising_factorial(z: &Rational, l: usize) -> Rational {
    (0..l).map(|i| z + Rational::from(i)).product()
}

/// `z(z-1)...(z-n+1)`.
pub fn falling_factorial(z: &Rational, n: usize) -> Rational {
    (0..n).map(|i| z - Rational::from(i)).product()
}

/// Binomial coefficient with arbitrary rational top: `(-1)^k (-z)_k / k!`
/// for `k >= 0`, zero for negative `k`.
pub fn binomial_general(z: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let k = k as usize;
    let num = Rational::sign_power(k as i64) * rising_factorial(&-z, k);
    num.checked_div(&factorial(k)).expect("k! is nonzero")
}

/// Integer binomial `C(n, k)` for `0 <= k <= n`, zero otherwise.
pub fn binomial_int(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let (n, k) = (n as usize, k as usize);
    Rational::integer(factorial_int(n) / (factorial_int(k) * factorial_int(n - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn arith_examples() {
        assert_eq!(rat_arith(&r("1/6"), &r("1/3"), ArithOp::Add).unwrap(), r("1/2"));
        let z = rat_arith(&r("-7/3"), &Rational::zero(), ArithOp::Mul).unwrap();
        assert_eq!(z, Rational::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(rat_arith(&r("1/1152"), &r("1/2880"), ArithOp::Sub).unwrap(), r("1/1920"));
        assert_eq!(rat_arith(&r("1/2"), &Rational::zero(), ArithOp::Div), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
        let iterative: i64 = (1..=10).product();
        assert_eq!(factorial(10), iterative);
        assert_eq!(double_factorial(-1).unwrap(), 1);
        assert_eq!(double_factorial(0).unwrap(), 1);
        assert_eq!(double_factorial(4).unwrap(), 8);
        assert_eq!(double_factorial(5).unwrap(), 15);
        assert!(double_factorial(-2).is_err());
    }

    #[test]
    fn double_factorial_pairs_multiply_to_factorial() {
        for n in 0..=15i64 {
            let lhs = double_factorial(2 * n).unwrap() * double_factorial(2 * n - 1).unwrap();
            assert_eq!(lhs, factorial(2 * n as usize));
        }
    }

    #[test]
    fn rising_and_falling() {
        assert_eq!(rising_factorial(&r("7/3"), 0), 1);
        assert_eq!(rising_factorial(&r("2"), 3), 24);
        assert_eq!(rising_factorial(&r("-1"), 2), 0);
        assert_eq!(falling_factorial(&r("5/2"), 0), 1);
        assert_eq!(falling_factorial(&r("1/2"), 2), r("-1/4"));
        assert_eq!(falling_factorial(&r("3"), 4), 0);
    }

    #[test]
    fn general_binomial() {
        assert_eq!(binomial_general(&r("3/7"), -1), 0);
        assert_eq!(binomial_general(&r("3/7"), 0), 1);
        assert_eq!(binomial_general(&r("1/2"), 2), r("-1/8"));
        for n in 0..=20i64 {
            for k in 0..=n {
                assert_eq!(binomial_general(&Rational::from(n), k), binomial_int(n, k));
            }
            assert_eq!(binomial_general(&Rational::from(n), n + 1), 0);
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Rational::frac(6, -4).to_string(), "-3/2");
        assert_eq!(r("-6/4").to_string(), "-3/2");
        assert_eq!(r("8/4").to_string(), "2");
        assert_eq!(r(" 0/9 ").to_string(), "0");
        for bad in ["", "bogus", "1/0", "1.5", "1/-2", "/3", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} parsed");
        }
        let json = serde_json::to_string(&r("-5/12")).unwrap();
        assert_eq!(json, "\"-5/12\"");
        assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r("-5/12"));
    }

    #[test]
    fn powers() {
        assert_eq!(Rational::zero().pow(0), 1);
        assert_eq!(r("-2/3").pow(3), r("-8/27"));
        assert_eq!(r("2").powi(-3).unwrap(), r("1/8"));
        assert!(Rational::zero().powi(-1).is_err());
    }
}
