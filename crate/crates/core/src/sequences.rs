//! Bernoulli, Euler and Catalan numbers, central factorial numbers, and
//! values of the generalized (Nörlund) Bernoulli and Euler polynomials.
//!
//! Bernoulli and Euler numbers come out of their generating functions through
//! the series engine. The three classical families are cached in grow-only
//! tables; the generalized polynomials are evaluated fresh each call since
//! they depend on two rational parameters.

use std::sync::RwLock;

use serde::Serialize;

use crate::arith::{binomial_int, factorial, Rational};
use crate::series::{seeds, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Bernoulli,
    Euler,
    Catalan,
}

impl SequenceKind {
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Bernoulli => "bernoulli",
            SequenceKind::Euler => "euler",
            SequenceKind::Catalan => "catalan",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "bernoulli" => Some(SequenceKind::Bernoulli),
            "euler" => Some(SequenceKind::Euler),
            "catalan" => Some(SequenceKind::Catalan),
            _ => None,
        }
    }
}

/// Cached values `0..=computed_through` of one number family.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    kind: SequenceKind,
    values: Vec<Rational>,
}

impl SequenceTable {
    pub const fn new(kind: SequenceKind) -> Self {
        SequenceTable { kind, values: Vec::new() }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn computed_through(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    /// Makes sure index `n` is present. Series-based kinds are recomputed at
    /// (at least) double the previous length so repeated growth stays cheap.
    pub fn extend_to(&mut self, n: usize) {
        if n < self.values.len() {
            return;
        }
        let target = n.max(2 * self.values.len());
        self.values = match self.kind {
            SequenceKind::Bernoulli => bernoulli_series(target),
            SequenceKind::Euler => euler_series(target),
            SequenceKind::Catalan => (0..=target).map(catalan_closed).collect(),
        };
    }
}

fn bernoulli_series(order: usize) -> Vec<Rational> {
    // z/(e^z - 1) = 1 / ((e^z - 1)/z)
    let gf = seeds::exp_minus_one_over_z(order).recip().expect("constant term is 1");
    (0..=order).map(|k| gf.egf_term(k)).collect()
}

fn euler_series(order: usize) -> Vec<Rational> {
    let e = seeds::exp(order);
    let e_neg = e.scale_reindex(&Rational::from(-1), crate::series::Reindex::SubstituteCz).unwrap();
    let gf = TruncatedSeries::constant(Rational::from(2), order).div(&e.add(&e_neg)).expect("constant term is 2");
    (0..=order).map(|k| gf.egf_term(k)).collect()
}

fn catalan_closed(k: usize) -> Rational {
    binomial_int(2 * k as i64, k as i64) * Rational::frac(1, k as i64 + 1)
}

static BERNOULLI: RwLock<SequenceTable> = RwLock::new(SequenceTable::new(SequenceKind::Bernoulli));
static EULER: RwLock<SequenceTable> = RwLock::new(SequenceTable::new(SequenceKind::Euler));
static CATALAN: RwLock<SequenceTable> = RwLock::new(SequenceTable::new(SequenceKind::Catalan));

fn table(kind: SequenceKind) -> &'static RwLock<SequenceTable> {
    match kind {
        SequenceKind::Bernoulli => &BERNOULLI,
        SequenceKind::Euler => &EULER,
        SequenceKind::Catalan => &CATALAN,
    }
}

/// Extends the shared table for `kind` through index `n`. Call before
/// fanning out parallel work to avoid contention on the write lock.
pub fn prepare(kind: SequenceKind, n: usize) {
    if table(kind).read().unwrap().values.len() > n {
        return;
    }
    table(kind).write().unwrap().extend_to(n);
}

pub fn sequence_value(kind: SequenceKind, n: usize) -> Rational {
    if let Some(v) = table(kind).read().unwrap().values.get(n) {
        return v.clone();
    }
    let mut t = table(kind).write().unwrap();
    t.extend_to(n);
    t.values[n].clone()
}

/// `[a_0, ..., a_max]` for the given family.
pub fn sequence_values(kind: SequenceKind, max: usize) -> Vec<Rational> {
    prepare(kind, max);
    table(kind).read().unwrap().values[..=max].to_vec()
}

/// `B_n` from `z/(e^z - 1)`, so `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    sequence_value(SequenceKind::Bernoulli, n)
}

/// `E_n` from `sech z`.
pub fn euler(n: usize) -> Rational {
    sequence_value(SequenceKind::Euler, n)
}

/// `C_k = binom(2k, k) / (k + 1)`.
pub fn catalan(k: usize) -> Rational {
    sequence_value(SequenceKind::Catalan, k)
}

/// Central factorial number of the second kind,
/// `T(p, q) = (1/q!) sum_k (-1)^k binom(q, k) (q/2 - k)^p`.
pub fn central_factorial_t(p: usize, q: usize) -> Rational {
    let half_q = Rational::frac(q as i64, 2);
    let sum: Rational = (0..=q)
        .map(|k| {
            Rational::sign_power(k as i64)
                * binomial_int(q as i64, k as i64)
                * (&half_q - Rational::from(k)).pow(p as u32)
        })
        .sum();
    sum.checked_div(&factorial(q)).unwrap()
}

fn polynomial_value(base: TruncatedSeries, k: usize, sigma: &Rational, x: &Rational) -> Rational {
    let powered = base.pow(sigma).expect("generating function has constant term 1");
    let shift = seeds::exp(k).scale_reindex(x, crate::series::Reindex::SubstituteCz).unwrap();
    powered.mul(&shift).egf_term(k)
}

/// `B_k^{(sigma)}(x)`: `k!` times `[z^k] (z/(e^z - 1))^sigma e^{xz}`.
pub fn gen_bernoulli_poly(k: usize, sigma: &Rational, x: &Rational) -> Rational {
    let base = seeds::exp_minus_one_over_z(k).recip().unwrap();
    polynomial_value(base, k, sigma, x)
}

/// `E_k^{(sigma)}(x)`: `k!` times `[z^k] (2/(e^z + 1))^sigma e^{xz}`.
pub fn gen_euler_poly(k: usize, sigma: &Rational, x: &Rational) -> Rational {
    let e = seeds::exp(k);
    let base = TruncatedSeries::constant(Rational::from(2), k).div(&e.add(&TruncatedSeries::one(k))).unwrap();
    polynomial_value(base, k, sigma, x)
}

/// Default exponent sample set: integer, half-integer, negative and generic
/// rational values.
pub fn epsilon_samples() -> Vec<Rational> {
    ["1", "-1", "1/2", "-1/2", "2", "-3/2", "5/3"].iter().map(|s| s.parse().unwrap()).collect()
}
