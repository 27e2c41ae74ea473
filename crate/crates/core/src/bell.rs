//! Partial and complete Bell polynomials evaluated at rational arguments.
//!
//! Three independent routes are provided so they can check one another:
//!
//! * the multinomial sum over multi-indices ([`partial_bell_direct`],
//!   [`complete_bell_sum`], [`complete_bell_multi_index`]),
//! * the first-block recurrence ([`partial_bell_recurrence`]),
//! * the exponential generating function `exp(sum a_k z^k / k!)`
//!   ([`complete_bell_egf`]).
//!
//! Argument lists are rules ([`ArgSequence`]) rather than vectors, so a
//! single definition serves every degree.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{binomial_int, factorial, factorial_int, Rational};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BellError {
    #[error("argument a_{index} requested but only {available} supplied")]
    MissingArgument { index: usize, available: usize },
    #[error("block count {j} exceeds degree {k}")]
    BlockCountTooLarge { k: usize, j: usize },
    #[error("need {needed} derivatives of {which}, got {got}")]
    InsufficientDerivatives { which: &'static str, needed: usize, got: usize },
}

/// Multi-index `(l_1, ..., l_k)`: `l_i` counts the blocks of size `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionVector {
    parts: Vec<usize>,
}

impl PartitionVector {
    pub fn new(parts: Vec<usize>) -> Self {
        PartitionVector { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `sum i * l_i`.
    pub fn weight(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &l)| (i + 1) * l).sum()
    }

    /// `sum l_i`.
    pub fn block_count(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Iterator over `(i, l_i)` with `l_i > 0`, `i` one-based.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().filter(|(_, &l)| l > 0).map(|(i, &l)| (i + 1, l))
    }
}

impl fmt::Display for PartitionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, l) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

type Rule = dyn Fn(usize) -> Rational + Send + Sync;

/// Rule `i -> a_i` (one-based) with an optional upper bound on `i`.
#[derive(Clone)]
pub struct ArgSequence {
    rule: Arc<Rule>,
    available: Option<usize>,
}

impl ArgSequence {
    /// Unbounded rule.
    pub fn from_fn(rule: impl Fn(usize) -> Rational + Send + Sync + 'static) -> Self {
        ArgSequence { rule: Arc::new(rule), available: None }
    }

    /// Finite list `a_1, ..., a_n`.
    pub fn from_values(values: Vec<Rational>) -> Self {
        let n = values.len();
        ArgSequence { rule: Arc::new(move |i| values[i - 1].clone()), available: Some(n) }
    }

    pub fn available(&self) -> Option<usize> {
        self.available
    }

    /// `a_i`, one-based.
    pub fn get(&self, i: usize) -> Result<Rational, BellError> {
        match self.available {
            Some(n) if i == 0 || i > n => Err(BellError::MissingArgument { index: i, available: n }),
            _ if i == 0 => Err(BellError::MissingArgument { index: 0, available: 0 }),
            _ => Ok((self.rule)(i)),
        }
    }

    /// `[a_1, ..., a_n]`.
    pub fn materialize(&self, n: usize) -> Result<Vec<Rational>, BellError> {
        (1..=n).map(|i| self.get(i)).collect()
    }

    /// `i -> c * a_i`.
    pub fn scaled(&self, c: Rational) -> Self {
        let inner = self.clone();
        ArgSequence { rule: Arc::new(move |i| &c * (inner.rule)(i)), available: self.available }
    }
}

impl fmt::Debug for ArgSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = self.available.unwrap_or(4).min(4);
        let head: Vec<String> = (1..=shown).map(|i| (self.rule)(i).to_string()).collect();
        match self.available {
            Some(n) if n <= 4 => write!(f, "ArgSequence[{}]", head.join(", ")),
            _ => write!(f, "ArgSequence[{}, ...]", head.join(", ")),
        }
    }
}

/// Every multi-index with `sum i l_i = k` (and `sum l_i = j` when given),
/// in descending lexicographic order of `(l_1, ..., l_k)`.
pub fn enumerate_partitions(k: usize, j: Option<usize>) -> Vec<PartitionVector> {
    let mut out = Vec::new();
    if j.is_some_and(|j| j > k) {
        return out;
    }
    let mut parts = vec![0usize; k];
    descend(1, k, j, &mut parts, &mut out);
    out
}

// Chooses l_i for part size i given the weight and (optional) block count
// still to be placed.
fn descend(i: usize, weight: usize, blocks: Option<usize>, parts: &mut [usize], out: &mut Vec<PartitionVector>) {
    if weight == 0 {
        if blocks.unwrap_or(0) == 0 {
            out.push(PartitionVector::new(parts.to_vec()));
        }
        return;
    }
    if i > parts.len() {
        return;
    }
    if let Some(b) = blocks {
        // b blocks of size >= i need weight >= b*i; at least one block is needed.
        if b == 0 || b * i > weight {
            return;
        }
    }
    let max_l = match blocks {
        Some(b) => (weight / i).min(b),
        None => weight / i,
    };
    for l in (0..=max_l).rev() {
        parts[i - 1] = l;
        descend(i + 1, weight - l * i, blocks.map(|b| b - l), parts, out);
    }
    parts[i - 1] = 0;
}

/// `prod_i (a_i / i!)^{l_i} / l_i!`.
fn partition_term(p: &PartitionVector, args: &[Rational]) -> Rational {
    let mut num = Rational::one();
    let mut den = num_bigint::BigInt::from(1);
    for (i, l) in p.nonzero() {
        num *= &args[i - 1].pow(l as u32);
        den *= factorial_int(i).pow(l as u32) * factorial_int(l);
    }
    num.checked_div(&Rational::integer(den)).unwrap()
}

fn check_degree(k: usize, j: usize) -> Result<(), BellError> {
    if j > k {
        Err(BellError::BlockCountTooLarge { k, j })
    } else {
        Ok(())
    }
}

/// `B_{k,j}(a_1, ..., a_{k-j+1})` as the multinomial sum over multi-indices.
pub fn partial_bell_direct(k: usize, j: usize, args: &ArgSequence) -> Result<Rational, BellError> {
    check_degree(k, j)?;
    if j == 0 {
        return Ok(if k == 0 { Rational::one() } else { Rational::zero() });
    }
    let a = args.materialize(k - j + 1)?;
    let sum: Rational = enumerate_partitions(k, Some(j)).iter().map(|p| partition_term(p, &a)).sum();
    Ok(factorial(k) * sum)
}

/// Same value through `B_{k,j} = sum_i C(k-1, i-1) a_i B_{k-i,j-1}`.
pub fn partial_bell_recurrence(k: usize, j: usize, args: &ArgSequence) -> Result<Rational, BellError> {
    check_degree(k, j)?;
    if j == 0 {
        return Ok(if k == 0 { Rational::one() } else { Rational::zero() });
    }
    let a = args.materialize(k - j + 1)?;
    // table[n][b] = B_{n,b} for n <= k, b <= j
    let mut table = vec![vec![Rational::zero(); j + 1]; k + 1];
    table[0][0] = Rational::one();
    for b in 1..=j {
        for n in b..=k - (j - b) {
            let top = n - b + 1;
            let mut acc = Rational::zero();
            for i in 1..=top.min(a.len()) {
                let prev = &table[n - i][b - 1];
                if !prev.is_zero() && !a[i - 1].is_zero() {
                    acc += binomial_int(n as i64 - 1, i as i64 - 1) * &a[i - 1] * prev;
                }
            }
            table[n][b] = acc;
        }
    }
    Ok(table[k][j].clone())
}

/// `B_k = sum_{j=1}^k B_{k,j}`, with `B_0 = 1`.
pub fn complete_bell_sum(k: usize, args: &ArgSequence) -> Result<Rational, BellError> {
    if k == 0 {
        return Ok(Rational::one());
    }
    args.materialize(k)?;
    (1..=k).map(|j| partial_bell_direct(k, j, args)).sum()
}

/// `k!` times the unrestricted multi-index sum `sum prod (a_i/i!)^{l_i}/l_i!`.
pub fn complete_bell_multi_index(k: usize, args: &ArgSequence) -> Result<Rational, BellError> {
    let a = args.materialize(k)?;
    let sum: Rational = enumerate_partitions(k, None).iter().map(|p| partition_term(p, &a)).sum();
    Ok(factorial(k) * sum)
}

/// `[B_0, ..., B_K]` read off `exp(sum_{k>=1} a_k z^k / k!)`.
pub fn complete_bell_egf(args: &ArgSequence, max_k: usize) -> Result<Vec<Rational>, BellError> {
    let a = args.materialize(max_k)?;
    let inner = TruncatedSeries::from_fn(max_k, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            a[k - 1].checked_div(&factorial(k)).unwrap()
        }
    });
    let gf = inner.exp().expect("constant term is zero");
    Ok((0..=max_k).map(|k| gf.egf_term(k)).collect())
}

/// k-th derivative of `f o h` at a point, given `f^{(0..=k)}` at `h(z0)`
/// and `h^{(1..=k)}` at `z0`.
pub fn faa_di_bruno(f_derivs: &[Rational], h_derivs: &[Rational], k: usize) -> Result<Rational, BellError> {
    if f_derivs.len() < k + 1 {
        return Err(BellError::InsufficientDerivatives { which: "f", needed: k + 1, got: f_derivs.len() });
    }
    if h_derivs.len() < k {
        return Err(BellError::InsufficientDerivatives { which: "h", needed: k, got: h_derivs.len() });
    }
    let h = ArgSequence::from_values(h_derivs[..k].to_vec());
    (0..=k).filter(|&j| !f_derivs[j].is_zero()).map(|j| Ok(&f_derivs[j] * partial_bell_direct(k, j, &h)?)).sum()
}
