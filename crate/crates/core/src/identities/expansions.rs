//! Series expansions checked coefficient by coefficient, and the partial
//! Bell values at the zero-padded arguments `0, 1/3, 0, 1/5, ...`.

use super::{build_theorem_args, run_cases, CaseResult, IdentityCase, IdentityId, VerificationReport};
use crate::arith::{binomial_general, binomial_int, factorial, Rational};
use crate::bell::partial_bell_direct;
use crate::sequences::{self, bernoulli, catalan, central_factorial_t, euler, SequenceKind};
use crate::series::{seeds, Reindex, TruncatedSeries};

/// `(-1)^k (2^{2m}/k!) sum_l (-1)^l C(k,l) T(2m+l,l)/C(2m+l,l)`.
fn filomat_even_rhs(m: usize, k: usize) -> Rational {
    let sum: Rational = (0..=k)
        .map(|l| {
            let t = central_factorial_t(2 * m + l, l);
            Rational::sign_power(l as i64)
                * binomial_int(k as i64, l as i64)
                * t.checked_div(&binomial_int((2 * m + l) as i64, l as i64)).unwrap()
        })
        .sum();
    Rational::sign_power(k as i64) * Rational::from(4).pow(m as u32).checked_div(&factorial(k)).unwrap() * sum
}

/// Both sides of
/// `sum_m (-1)^m/2^m C(j,m) sum_q C(m,q)(2q-m)^k = (-1)^j/2^j sum_l (-1)^l C(2j,l)(j-l)^k`.
fn binomial_power_sides(j: usize, k: usize) -> (Rational, Rational) {
    let half_pow = |n: usize| Rational::frac(1, 2).pow(n as u32);
    let lhs: Rational = (0..=j)
        .map(|m| {
            let inner: Rational = (0..=m)
                .map(|q| binomial_int(m as i64, q as i64) * Rational::from(2 * q as i64 - m as i64).pow(k as u32))
                .sum();
            Rational::sign_power(m as i64) * half_pow(m) * binomial_int(j as i64, m as i64) * inner
        })
        .sum();
    let rhs_sum: Rational = (0..=2 * j)
        .map(|l| {
            Rational::sign_power(l as i64)
                * binomial_int(2 * j as i64, l as i64)
                * Rational::from(j as i64 - l as i64).pow(k as u32)
        })
        .sum();
    (lhs, Rational::sign_power(j as i64) * half_pow(j) * rhs_sum)
}

/// `B_{2m,k}` and `B_{2m+1,k}` at the zero-padded arguments for `k <= m <= m_max`,
/// and the binomial-power sum for `j <= m_max`, `k <= 2 m_max`.
pub fn verify_filomat(m_max: usize) -> VerificationReport {
    use IdentityId::*;
    let mut cases = Vec::new();
    for m in 0..=m_max {
        for k in 0..=m {
            cases.push(IdentityCase::new(FilomatEven, k).with_extra(m));
            cases.push(IdentityCase::new(FilomatOdd, k).with_extra(m));
        }
        for k in 0..=2 * m_max {
            cases.push(IdentityCase::new(FilomatBinomSum, k).with_extra(m));
        }
    }
    let args = build_theorem_args(FilomatEven, &Rational::zero()).expect("Bell-form arguments");
    run_cases("filomat", cases, |case| {
        let k = case.k;
        let m = case.extra.as_ref().and_then(Rational::to_i64).expect("m is recorded") as usize;
        let bell = |n: usize| partial_bell_direct(n, k, &args).map_err(|e| e.to_string());
        let (lhs, rhs) = match case.id {
            FilomatEven => (bell(2 * m), filomat_even_rhs(m, k)),
            FilomatOdd => (bell(2 * m + 1), Rational::zero()),
            FilomatBinomSum => {
                let (l, r) = binomial_power_sides(m, k);
                (Ok(l), r)
            }
            _ => unreachable!(),
        };
        match lhs {
            Ok(l) => CaseResult::compare(case.clone(), l, rhs),
            Err(e) => CaseResult::failure(case.clone(), e),
        }
    })
}

/// Coefficient of `x^n` in the closed form of each classical expansion.
fn classical_coefficient(id: IdentityId, n: usize, q: Option<&Rational>) -> Rational {
    use IdentityId::*;
    let even_only =
        !matches!(id, ClassicalBinomial | ClassicalCatalanGf | ClassicalSinhcHalfRoot | ClassicalCoshHalfRoot);
    if even_only && n % 2 == 1 {
        return Rational::zero();
    }
    let k = n / 2;
    let ki = k as i64;
    let four_k = Rational::from(4).pow(k as u32);
    let b_abs = bernoulli(2 * k).abs();
    let over_fact = |x: Rational| x.checked_div(&factorial(2 * k)).unwrap();
    let over_k = |x: Rational| x.checked_div(&Rational::from(k)).unwrap();
    match id {
        ClassicalLnSinc if k == 0 => Rational::zero(),
        ClassicalLnSinc => -over_fact(over_k(b_abs * &four_k)) * Rational::frac(1, 2),
        ClassicalLnSinhc if k == 0 => Rational::zero(),
        ClassicalLnSinhc => Rational::sign_power(ki + 1) * over_fact(over_k(b_abs * &four_k)) * Rational::frac(1, 2),
        ClassicalCsc if k == 0 => Rational::one(),
        ClassicalCsc => over_fact((four_k - Rational::from(2)) * b_abs),
        ClassicalCsch => over_fact((Rational::from(2) - four_k) * bernoulli(2 * k)),
        ClassicalLnCos if k == 0 => Rational::zero(),
        ClassicalLnCos => {
            let two_pow = Rational::from(2).pow(2 * k as u32 - 1);
            -over_fact(over_k(two_pow * (four_k - Rational::one()) * b_abs))
        }
        ClassicalSec => over_fact(euler(2 * k).abs()),
        ClassicalLnOnePlusSqrt if k == 0 => Rational::zero(),
        ClassicalLnOnePlusSqrt => {
            let denom = four_k * factorial(k).pow(2);
            -Rational::sign_power(ki) * factorial(2 * k - 1).checked_div(&denom).unwrap()
        }
        ClassicalBinomial => binomial_general(q.expect("exponent"), n as i64),
        ClassicalCatalanGf => catalan(n),
        // Powers of z: the square of x in the even expansions.
        ClassicalSinhcHalfRoot => {
            let x_coeff = factorial(2 * n + 1).recip().unwrap();
            x_coeff.checked_div(&Rational::from(4).pow(n as u32)).unwrap()
        }
        ClassicalCoshHalfRoot => {
            let x_coeff = factorial(2 * n).recip().unwrap();
            x_coeff.checked_div(&Rational::from(4).pow(n as u32)).unwrap()
        }
        _ => unreachable!(),
    }
}

/// `exp(sum_{k>=1} w(k) z^k)` to the given order.
fn exp_of(order: usize, w: impl Fn(usize) -> Rational) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |k| if k == 0 { Rational::zero() } else { w(k) }).exp().expect("zero constant term")
}

/// The series-engine side of each classical expansion.
fn classical_series(id: IdentityId, order: usize, q: Option<&Rational>) -> TruncatedSeries {
    use IdentityId::*;
    let log = |s: TruncatedSeries| s.log().expect("unit constant term");
    let recip = |s: TruncatedSeries| s.recip().expect("unit constant term");
    let ratio = |k: usize| bernoulli(2 * k).checked_div(&factorial(2 * k)).unwrap();
    match id {
        ClassicalLnSinc => log(seeds::sinc(order)),
        ClassicalLnSinhc => log(seeds::sinhc(order)),
        ClassicalCsc => recip(seeds::sinc(order)),
        ClassicalCsch => recip(seeds::sinhc(order)),
        ClassicalLnCos => log(seeds::cos(order)),
        ClassicalSec => recip(seeds::cos(order)),
        ClassicalLnOnePlusSqrt => {
            let root = seeds::binomial(&Rational::frac(1, 2), order / 2).spread_even();
            log(root.add(&TruncatedSeries::one(order)).scale(&Rational::frac(1, 2)))
        }
        ClassicalBinomial => seeds::linear(&Rational::one(), order).pow(q.expect("exponent")).unwrap(),
        ClassicalCatalanGf => {
            let root = seeds::linear(&Rational::from(-4), order).pow(&Rational::frac(1, 2)).unwrap();
            TruncatedSeries::constant(Rational::from(2), order).div(&root.add(&TruncatedSeries::one(order))).unwrap()
        }
        ClassicalSinhcHalfRoot => exp_of(order, |k| ratio(k).checked_div(&Rational::from(2 * k)).unwrap()),
        ClassicalCoshHalfRoot => exp_of(order, |k| {
            let c = Rational::from(4).pow(k as u32) - Rational::one();
            c * ratio(k).checked_div(&Rational::from(2 * k)).unwrap()
        }),
        _ => unreachable!(),
    }
}

/// The half-root expansions read back through the even reindexing of
/// `sinh x / x` and `cosh x` at `x = sqrt(z)/2`.
fn half_root_reference(id: IdentityId, order: usize) -> TruncatedSeries {
    let base = match id {
        IdentityId::ClassicalSinhcHalfRoot => seeds::sinhc(2 * order),
        _ => seeds::cosh(2 * order),
    };
    base.scale_reindex(&Rational::frac(1, 2), Reindex::EvenPartAsZ).expect("even series")
}

/// Logarithms and reciprocals of the trigonometric and hyperbolic seeds,
/// binomial series, the Catalan generating function and the two half-root
/// exponentials, each to `order`. Binomial exponents are the default
/// exponent samples.
pub fn verify_classical(order: usize) -> VerificationReport {
    use IdentityId::*;
    assert!(order >= 4 && order.is_multiple_of(2), "order must be even and at least 4");
    sequences::prepare(SequenceKind::Bernoulli, 2 * order + 2);
    sequences::prepare(SequenceKind::Euler, order + 2);
    sequences::prepare(SequenceKind::Catalan, order + 1);

    let plain = [
        ClassicalLnSinc,
        ClassicalLnSinhc,
        ClassicalCsc,
        ClassicalCsch,
        ClassicalLnCos,
        ClassicalSec,
        ClassicalLnOnePlusSqrt,
        ClassicalCatalanGf,
        ClassicalSinhcHalfRoot,
        ClassicalCoshHalfRoot,
    ];
    let mut jobs: Vec<(IdentityId, Option<Rational>)> = plain.iter().map(|&id| (id, None)).collect();
    jobs.extend(sequences::epsilon_samples().into_iter().map(|q| (ClassicalBinomial, Some(q))));

    use rayon::prelude::*;
    let sides: Vec<(IdentityId, Option<Rational>, TruncatedSeries, Option<TruncatedSeries>)> = jobs
        .into_par_iter()
        .map(|(id, q)| {
            let series = classical_series(id, order, q.as_ref());
            let reference =
                matches!(id, ClassicalSinhcHalfRoot | ClassicalCoshHalfRoot).then(|| half_root_reference(id, order));
            (id, q, series, reference)
        })
        .collect();

    let mut cases = Vec::new();
    for (i, (id, q, _, _)) in sides.iter().enumerate() {
        for n in 0..=order {
            let mut c = IdentityCase::new(*id, n);
            c.extra = q.clone();
            cases.push((i, c));
        }
    }
    run_cases("classical", cases, |(i, case)| {
        let (id, q, series, reference) = &sides[*i];
        let n = case.k;
        let formula = classical_coefficient(*id, n, q.as_ref());
        let result = CaseResult::compare(case.clone(), series.coeff(n).clone(), formula);
        match reference {
            Some(r) if r.coeff(n) != series.coeff(n) => {
                result.with_diagnostic(format!("reindexed seed gives {}", r.coeff(n)))
            }
            _ => result,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn filomat_examples() {
        assert_eq!(filomat_even_rhs(1, 1), r("1/3"));
        assert_eq!(binomial_power_sides(0, 0), (r("1"), r("1")));
        assert_eq!(binomial_power_sides(0, 3), (r("0"), r("0")));
        let rep = verify_filomat(4);
        assert!(rep.all_passed(), "{}", rep.to_plain(false));
    }

    #[test]
    fn classical_examples() {
        sequences::prepare(SequenceKind::Bernoulli, 10);
        sequences::prepare(SequenceKind::Euler, 10);
        assert_eq!(classical_coefficient(IdentityId::ClassicalLnSinc, 2, None), r("-1/6"));
        assert_eq!(classical_coefficient(IdentityId::ClassicalSec, 2, None), r("1/2"));
        assert_eq!(classical_coefficient(IdentityId::ClassicalCsch, 0, None), r("1"));
        assert_eq!(classical_coefficient(IdentityId::ClassicalCsch, 2, None), r("-1/6"));
        assert_eq!(classical_coefficient(IdentityId::ClassicalLnOnePlusSqrt, 2, None), r("1/4"));
    }

    #[test]
    fn classical_battery_passes() {
        let rep = verify_classical(12);
        assert!(rep.all_passed(), "{}", rep.to_plain(false));
        assert_eq!(rep.cases_for(IdentityId::ClassicalCatalanGf).count(), 13);
    }
}
