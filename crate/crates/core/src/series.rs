//! Truncated formal power series over [`Rational`].
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0..=c_N`; everything above
//! degree `N` is unknown, not zero. Binary operations therefore return a
//! series whose order is the smaller of the two operand orders.
//!
//! The transcendental operations use the usual coefficient recurrences:
//! `exp` solves `f' = a' f`, `log` integrates `a'/a`, and `pow` is
//! `exp(q log a)`. All of them are quadratic in the order, which is plenty
//! for the degrees this crate works with.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial_general, factorial, ArithError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("exp requires a zero constant term, found {0}")]
    NonZeroConstantTerm(Rational),
    #[error("operation requires constant term 1, found {0}")]
    ConstantTermNotOne(Rational),
    #[error("inner series of a composition must have zero constant term, found {0}")]
    InnerConstantTerm(Rational),
    #[error("coefficient of odd degree {0} is nonzero")]
    OddCoefficient(usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// How [`TruncatedSeries::scale_reindex`] rewrites the variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reindex {
    /// `x -> c x`, i.e. `c_k -> c_k c^k`.
    SubstituteCz,
    /// Treat an even series in `x` as a series in `z = x^2`. The scale
    /// factor is applied first, as in `SubstituteCz`.
    EvenPartAsZ,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Panics on an empty coefficient list; a series always has order >= 0.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(Rational::one(), order)
    }

    /// The series `z` (or `0` at order 0).
    pub fn identity(order: usize) -> Self {
        TruncatedSeries::from_fn(order, |k| if k == 1 { Rational::one() } else { Rational::zero() })
    }

    /// Polynomial padded or truncated to the given order.
    pub fn polynomial(coeffs: &[Rational], order: usize) -> Self {
        TruncatedSeries::from_fn(order, |k| coeffs.get(k).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^k`; panics above the truncation order.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// `k! c_k`, the k-th term of the sequence this series generates exponentially.
    pub fn egf_term(&self, k: usize) -> Rational {
        factorial(k) * &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        TruncatedSeries::new(self.coeffs[..=order].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries::from_fn(n, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries::from_fn(n, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries::from_fn(n, |k| {
            (0..=k)
                .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                .map(|i| &self.coeffs[i] * &other.coeffs[k - i])
                .sum()
        })
    }

    /// Quotient by forward substitution: `q_n = (a_n - sum_{i<n} q_i b_{n-i}) / b_0`.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order().min(divisor.order());
        let inv_b0 = b0.recip()?;
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (i, qi) in q.iter().enumerate() {
                let b = &divisor.coeffs[k - i];
                if !b.is_zero() {
                    acc -= &(qi * b);
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(TruncatedSeries::new(q))
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        TruncatedSeries::one(self.order()).div(self)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return TruncatedSeries::zero(0);
        }
        TruncatedSeries::from_fn(self.order() - 1, |k| Rational::from(k + 1) * &self.coeffs[k + 1])
    }

    /// Antiderivative with zero constant term; order grows by one.
    pub fn integral(&self) -> Self {
        TruncatedSeries::from_fn(self.order() + 1, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                &self.coeffs[k - 1] * Rational::frac(1, k as i64)
            }
        })
    }

    /// `exp(a)` for `a_0 = 0`, via `n f_n = sum_{k=1}^n k a_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstantTerm(self.coeffs[0].clone()));
        }
        let n = self.order();
        let mut f: Vec<Rational> = Vec::with_capacity(n + 1);
        f.push(Rational::one());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += Rational::from(k) * a * &f[m - k];
                }
            }
            f.push(acc * Rational::frac(1, m as i64));
        }
        Ok(TruncatedSeries::new(f))
    }

    /// `log(a)` for `a_0 = 1`, via `n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne(self.coeffs[0].clone()));
        }
        let n = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(n + 1);
        g.push(Rational::zero());
        for m in 1..=n {
            let mut acc = Rational::from(m) * &self.coeffs[m];
            for (k, gk) in g.iter().enumerate().skip(1) {
                let a = &self.coeffs[m - k];
                if !a.is_zero() && !gk.is_zero() {
                    acc -= &(Rational::from(k) * gk * a);
                }
            }
            g.push(acc * Rational::frac(1, m as i64));
        }
        Ok(TruncatedSeries::new(g))
    }

    /// `a^q = exp(q log a)` for `a_0 = 1` and any rational `q`.
    pub fn pow(&self, q: &Rational) -> Result<Self, SeriesError> {
        self.log()?.scale(q).exp()
    }

    /// `outer(inner)` by Horner's rule. Needs `inner_0 = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantTerm(inner.coeffs[0].clone()));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = TruncatedSeries::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Variable rescaling and the even-series reindexing that stands in for
    /// substitutions like `x = sqrt(z)/2`.
    pub fn scale_reindex(&self, c: &Rational, mode: Reindex) -> Result<Self, SeriesError> {
        let mut power = Rational::one();
        let scaled: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|x| {
                let v = x * &power;
                power *= c;
                v
            })
            .collect();
        match mode {
            Reindex::SubstituteCz => Ok(TruncatedSeries::new(scaled)),
            Reindex::EvenPartAsZ => {
                if let Some(odd) = (1..scaled.len()).step_by(2).find(|&k| !scaled[k].is_zero()) {
                    return Err(SeriesError::OddCoefficient(odd));
                }
                Ok(TruncatedSeries::new(scaled.into_iter().step_by(2).collect()))
            }
        }
    }

    /// Inverse of the even reindexing: `sum c_k z^k -> sum c_k x^{2k}`.
    pub fn spread_even(&self) -> Self {
        TruncatedSeries::from_fn(2 * self.order(), |k| {
            if k % 2 == 0 {
                self.coeffs[k / 2].clone()
            } else {
                Rational::zero()
            }
        })
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()?;
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// Seed series built straight from their coefficient formulas.
pub mod seeds {
    use super::*;

    fn alternating_over_factorial(order: usize, parity: usize, shift: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| {
            if k % 2 != parity {
                return Rational::zero();
            }
            let sign = Rational::sign_power((k / 2) as i64);
            sign.checked_div(&factorial(k + shift)).unwrap()
        })
    }

    fn over_factorial(order: usize, parity: usize, shift: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| {
            if k % 2 != parity {
                return Rational::zero();
            }
            factorial(k + shift).recip().unwrap()
        })
    }

    /// `e^z`.
    pub fn exp(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| factorial(k).recip().unwrap())
    }

    /// `e^z - 1`, without the constant.
    pub fn exp_minus_one(order: usize) -> TruncatedSeries {
        let mut s = exp(order);
        s.coeffs[0] = Rational::zero();
        s
    }

    /// `(e^z - 1)/z = sum z^k/(k+1)!`.
    pub fn exp_minus_one_over_z(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| factorial(k + 1).recip().unwrap())
    }

    pub fn sin(order: usize) -> TruncatedSeries {
        alternating_over_factorial(order, 1, 0)
    }

    pub fn cos(order: usize) -> TruncatedSeries {
        alternating_over_factorial(order, 0, 0)
    }

    pub fn sinh(order: usize) -> TruncatedSeries {
        over_factorial(order, 1, 0)
    }

    pub fn cosh(order: usize) -> TruncatedSeries {
        over_factorial(order, 0, 0)
    }

    /// `sin x / x = sum (-1)^k x^{2k}/(2k+1)!`.
    pub fn sinc(order: usize) -> TruncatedSeries {
        alternating_over_factorial(order, 0, 1)
    }

    /// `sinh x / x = sum x^{2k}/(2k+1)!`.
    pub fn sinhc(order: usize) -> TruncatedSeries {
        over_factorial(order, 0, 1)
    }

    /// `1 + c x`.
    pub fn linear(c: &Rational, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| match k {
            0 => Rational::one(),
            1 => c.clone(),
            _ => Rational::zero(),
        })
    }

    /// `1/(1 - z)`.
    pub fn geometric(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |_| Rational::one())
    }

    /// `log(1 + z)`.
    pub fn log_one_plus(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                Rational::sign_power(k as i64 + 1) * Rational::frac(1, k as i64)
            }
        })
    }

    /// `(1 + x)^q` from the binomial coefficients.
    pub fn binomial(q: &Rational, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| binomial_general(q, k as i64))
    }
}
