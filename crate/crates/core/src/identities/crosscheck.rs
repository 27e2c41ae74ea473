//! Remarks, cross-identity consistency checks, the three sums that connect
//! the closed forms to special values of generalized polynomials, and
//! randomized oracles for the Bell machinery itself.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{closed_form_rhs, half, run_cases, CaseResult, IdentityCase, IdentityId, VerificationReport};
use crate::arith::{binomial_general, binomial_int, double_factorial, factorial, rising_factorial, Rational};
use crate::bell::{
    complete_bell_egf, complete_bell_multi_index, complete_bell_sum, faa_di_bruno, partial_bell_direct,
    partial_bell_recurrence, ArgSequence,
};
use crate::sequences::{self, bernoulli, central_factorial_t, euler, gen_bernoulli_poly, gen_euler_poly, SequenceKind};
use crate::series::{seeds, TruncatedSeries};

/// `sum_{l=1}^{2k} (s)_l/l! sum_{j=1}^l (-1)^j C(l,j) T(2k+j,j)/C(2k+j,j)`,
/// which equals `B_{2k}^{(s)}(s/2)` for `k >= 1`.
pub fn bridge_central_factorial_sum(k: usize, s: &Rational) -> Rational {
    let two_k = 2 * k;
    let inner: Vec<Rational> = (0..=two_k)
        .map(|j| {
            let t = central_factorial_t(two_k + j, j);
            t.checked_div(&binomial_int((two_k + j) as i64, j as i64)).unwrap()
        })
        .collect();
    (1..=two_k)
        .map(|l| {
            let weight = rising_factorial(s, l).checked_div(&factorial(l)).unwrap();
            let sum: Rational =
                (1..=l).map(|j| Rational::sign_power(j as i64) * binomial_int(l as i64, j as i64) * &inner[j]).sum();
            weight * sum
        })
        .sum()
}

/// `sum_{l=0}^{2k} (s)_l/l! sum_{m=0}^l (-1)^m/2^m C(l,m) sum_q C(m,q)(2q-m)^{2k}`,
/// which equals `4^k E_{2k}^{(s)}(s/2)`.
pub fn bridge_power_sum(k: usize, s: &Rational) -> Rational {
    let two_k = 2 * k;
    let by_m: Vec<Rational> = (0..=two_k)
        .map(|m| {
            let powers: Rational = (0..=m)
                .map(|q| binomial_int(m as i64, q as i64) * Rational::from(2 * q as i64 - m as i64).pow(two_k as u32))
                .sum();
            Rational::sign_power(m as i64) * Rational::frac(1, 2).pow(m as u32) * powers
        })
        .collect();
    (0..=two_k)
        .map(|l| {
            let weight = rising_factorial(s, l).checked_div(&factorial(l)).unwrap();
            let sum: Rational = (0..=l).map(|m| binomial_int(l as i64, m as i64) * &by_m[m]).sum();
            weight * sum
        })
        .sum()
}

/// `sum_{l=0}^k (s)_{k-l} C(k+l-1, 2l) 2^l (2l-1)!!`, which equals
/// `s (k-1)! C(2k-1+s, k-1)` for `k >= 1`.
pub fn bridge_binomial_sum(k: usize, s: &Rational) -> Rational {
    (0..=k)
        .map(|l| {
            let top = Rational::from(k as i64 + l as i64 - 1);
            rising_factorial(s, k - l)
                * binomial_general(&top, 2 * l as i64)
                * Rational::from(2).pow(l as u32)
                * double_factorial(2 * l as i64 - 1).unwrap()
        })
        .sum()
}

fn compare_or_fail(case: IdentityCase, lhs: Result<Rational, String>, rhs: Result<Rational, String>) -> CaseResult {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => CaseResult::compare(case, l, r),
        (Err(e), _) | (_, Err(e)) => CaseResult::failure(case, e),
    }
}

/// Odd-index vanishing of `B^{(2eps)}(eps)` and `E^{(2eps)}(eps)`, the power
/// expansions of `sinc` and `cos` (exponents taken from `epsilons`), and the
/// special values at `+-1/2`.
pub fn verify_remarks(k_max: usize, epsilons: &[Rational]) -> VerificationReport {
    use IdentityId::*;
    sequences::prepare(SequenceKind::Bernoulli, 2 * k_max + 2);
    sequences::prepare(SequenceKind::Euler, 2 * k_max + 2);

    let order = 2 * k_max;
    let powers: Vec<(Rational, TruncatedSeries, TruncatedSeries)> = epsilons
        .iter()
        .map(|r| {
            let sinc = seeds::sinc(order).pow(r).expect("unit constant term");
            let cos = seeds::cos(order).pow(r).expect("unit constant term");
            (r.clone(), sinc, cos)
        })
        .collect();

    let mut cases = Vec::new();
    for k in 0..=k_max {
        for r in epsilons {
            for id in [RemarkBernoulliOdd, RemarkEulerOdd, RemarkSincPower, RemarkCosPower, RemarkCosPowerT] {
                cases.push(IdentityCase::new(id, k).with_epsilon(r.clone()));
            }
            if k >= 1 {
                cases.push(IdentityCase::new(RemarkSincPowerT, k).with_epsilon(r.clone()));
            }
        }
        for id in [RemarkBernoulliMinusOne, RemarkBernoulliOne, RemarkEulerMinusOne, RemarkEulerOne] {
            cases.push(IdentityCase::new(id, k));
        }
    }

    run_cases("remarks", cases, |case| {
        let k = case.k;
        let four_k = Rational::from(4).pow(k as u32);
        let sign = Rational::sign_power(k as i64);
        let eps = case.epsilon.clone().unwrap_or_default();
        let neg = -&eps;
        let neg_half = half(&neg);
        let series = || powers.iter().find(|(r, _, _)| *r == eps).expect("precomputed");
        let scaled_coeff = |s: &TruncatedSeries| s.egf_term(2 * k).checked_div(&four_k).unwrap();
        let (lhs, rhs) = match case.id {
            RemarkBernoulliOdd => (gen_bernoulli_poly(2 * k + 1, &(&eps * Rational::from(2)), &eps), Rational::zero()),
            RemarkEulerOdd => (gen_euler_poly(2 * k + 1, &(&eps * Rational::from(2)), &eps), Rational::zero()),
            RemarkSincPower => (scaled_coeff(&series().1), sign * gen_bernoulli_poly(2 * k, &neg, &neg_half)),
            RemarkSincPowerT => (scaled_coeff(&series().1), sign * bridge_central_factorial_sum(k, &neg)),
            RemarkCosPower => (scaled_coeff(&series().2), sign * gen_euler_poly(2 * k, &neg, &neg_half)),
            RemarkCosPowerT => (series().2.egf_term(2 * k), sign * bridge_power_sum(k, &neg)),
            RemarkBernoulliMinusOne => (
                gen_bernoulli_poly(2 * k, &Rational::from(-1), &Rational::frac(-1, 2)),
                (four_k * Rational::from(2 * k + 1)).recip().unwrap(),
            ),
            RemarkBernoulliOne => (
                gen_bernoulli_poly(2 * k, &Rational::one(), &Rational::frac(1, 2)),
                ((Rational::from(2) - &four_k) * bernoulli(2 * k)).checked_div(&four_k).unwrap(),
            ),
            RemarkEulerMinusOne => {
                (gen_euler_poly(2 * k, &Rational::from(-1), &Rational::frac(-1, 2)), four_k.recip().unwrap())
            }
            RemarkEulerOne => (
                gen_euler_poly(2 * k, &Rational::one(), &Rational::frac(1, 2)),
                euler(2 * k).checked_div(&four_k).unwrap(),
            ),
            _ => unreachable!(),
        };
        CaseResult::compare(case.clone(), lhs, rhs)
    })
}

fn rhs_of(id: IdentityId, k: usize, eps: &Rational) -> Result<Rational, String> {
    closed_form_rhs(&IdentityCase::new(id, k).with_epsilon(eps.clone())).map_err(|e| e.to_string())
}

/// Agreement between overlapping theorems: the same left side with two
/// closed forms, and the Bernoulli/Euler/Catalan families at `eps/2`
/// against the same family at `eps`.
pub fn verify_consistency(k_max: usize, epsilons: &[Rational]) -> VerificationReport {
    use IdentityId::*;
    sequences::prepare(SequenceKind::Bernoulli, 2 * k_max + 2);
    sequences::prepare(SequenceKind::Euler, 2 * k_max + 2);
    sequences::prepare(SequenceKind::Catalan, k_max + 1);

    const PAIRS: [(IdentityId, IdentityId, IdentityId); 3] =
        [(ConsistencyT7T10, HeqiT7, XuT10), (ConsistencyT8T11, HeqiT8, XuT11), (ConsistencyT9T12, HeqiT9, XuT12)];
    const HALVED: [(IdentityId, IdentityId, IdentityId, IdentityId); 3] = [
        (ConsistencyT4T7Args, ConsistencyT4T7, HeqiT4, HeqiT7),
        (ConsistencyT5T8Args, ConsistencyT5T8, HeqiT5, HeqiT8),
        (ConsistencyT6T9Args, ConsistencyT6T9, HeqiT6, HeqiT9),
    ];
    let target = |id: IdentityId| -> (IdentityId, IdentityId, bool) {
        if let Some(&(_, a, b)) = PAIRS.iter().find(|p| p.0 == id) {
            return (a, b, false);
        }
        let &(_, _, a, b) = HALVED.iter().find(|p| p.0 == id || p.1 == id).expect("known check");
        (a, b, true)
    };

    let mut cases = Vec::new();
    for k in 0..=k_max {
        for eps in epsilons {
            for &(check, a, b) in &PAIRS {
                if k >= a.min_k().max(b.min_k()) {
                    cases.push(IdentityCase::new(check, k).with_epsilon(eps.clone()));
                }
            }
            for &(args_check, rhs_check, a, b) in &HALVED {
                if k >= 1 {
                    cases.push(IdentityCase::new(args_check, k).with_epsilon(eps.clone()));
                }
                if (*eps == 1 || *eps == -1) && k >= a.min_k().max(b.min_k()) {
                    cases.push(IdentityCase::new(rhs_check, k).with_epsilon(eps.clone()));
                }
            }
        }
    }

    run_cases("consistency", cases, |case| {
        let eps = case.epsilon.clone().expect("all consistency cases carry eps");
        let (a, b, halved) = target(case.id);
        let eps_b = if halved { half(&eps) } else { eps.clone() };
        let is_args = matches!(case.id, ConsistencyT4T7Args | ConsistencyT5T8Args | ConsistencyT6T9Args);
        if is_args {
            let arg = |id: IdentityId, e: &Rational| {
                super::build_theorem_args(id, e)
                    .map_err(|e| e.to_string())
                    .and_then(|s| s.get(case.k).map_err(|e| e.to_string()))
            };
            compare_or_fail(case.clone(), arg(a, &eps), arg(b, &eps_b))
        } else {
            compare_or_fail(case.clone(), rhs_of(a, case.k, &eps), rhs_of(b, case.k, &eps_b))
        }
    })
}

/// The three bridge sums against generalized Bernoulli and Euler values and
/// the binomial closed form, for each `s` in `samples`.
pub fn verify_bridges(k_max: usize, samples: &[Rational]) -> VerificationReport {
    use IdentityId::*;
    let mut cases = Vec::new();
    for k in 0..=k_max {
        for s in samples {
            if k >= 1 {
                cases.push(IdentityCase::new(BridgeBernoulli, k).with_epsilon(s.clone()));
                cases.push(IdentityCase::new(BridgeBinomial, k).with_epsilon(s.clone()));
            }
            cases.push(IdentityCase::new(BridgeEuler, k).with_epsilon(s.clone()));
        }
    }
    run_cases("bridges", cases, |case| {
        let k = case.k;
        let s = case.epsilon.clone().expect("bridge cases carry s");
        let (lhs, rhs) = match case.id {
            BridgeBernoulli => (gen_bernoulli_poly(2 * k, &s, &half(&s)), bridge_central_factorial_sum(k, &s)),
            BridgeEuler => (
                gen_euler_poly(2 * k, &s, &half(&s)),
                bridge_power_sum(k, &s).checked_div(&Rational::from(4).pow(k as u32)).unwrap(),
            ),
            BridgeBinomial => {
                let top = Rational::from(2 * k as i64 - 1) + &s;
                (&s * factorial(k - 1) * binomial_general(&top, k as i64 - 1), bridge_binomial_sum(k, &s))
            }
            _ => unreachable!(),
        };
        CaseResult::compare(case.clone(), lhs, rhs)
    })
}

/// A rational with numerator in `-20..=20` and denominator in `1..=12`.
pub(crate) fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::frac(rng.gen_range(-20..=20), rng.gen_range(1..=12))
}

const ORACLE_BELL_MAX_K: usize = 9;
const ORACLE_FAA_MAX_K: usize = 8;
const ORACLE_OUTER_DEGREE: usize = 5;

/// Randomized agreement checks for the Bell routines, reproducible from
/// `seed`. `samples` argument sets are drawn for the partial and complete
/// Bell checks and half as many function pairs for Faà di Bruno. Each case
/// records its sample index in `extra`.
pub fn verify_oracles(seed: u64, samples: usize) -> VerificationReport {
    use IdentityId::*;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arg_sets: Vec<Vec<Rational>> =
        (0..samples).map(|_| (0..ORACLE_BELL_MAX_K).map(|_| random_rational(&mut rng)).collect()).collect();
    let faa_sets: Vec<(Vec<Rational>, Vec<Rational>)> = (0..samples.div_ceil(2))
        .map(|_| {
            let outer = (0..=ORACLE_OUTER_DEGREE).map(|_| random_rational(&mut rng)).collect();
            let mut inner: Vec<Rational> = (0..=ORACLE_FAA_MAX_K).map(|_| random_rational(&mut rng)).collect();
            inner[0] = Rational::zero();
            (outer, inner)
        })
        .collect();

    let mut inputs = Vec::new();
    for n in 0..samples {
        for k in 0..=ORACLE_BELL_MAX_K {
            inputs.push(IdentityCase::new(OraclePartialBell, k).with_extra(n));
            inputs.push(IdentityCase::new(OracleCompleteBell, k).with_extra(n));
        }
    }
    for n in 0..faa_sets.len() {
        for k in 1..=ORACLE_FAA_MAX_K {
            inputs.push(IdentityCase::new(OracleFaaDiBruno, k).with_extra(n));
        }
    }

    run_cases("oracles", inputs, |case| {
        let n = case.extra.as_ref().and_then(Rational::to_i64).expect("sample index") as usize;
        let k = case.k;
        match case.id {
            OraclePartialBell => {
                let args = ArgSequence::from_values(arg_sets[n].clone());
                let mut lhs = Rational::zero();
                let mut rhs = Rational::zero();
                for j in 0..=k {
                    let d = partial_bell_direct(k, j, &args).expect("enough arguments");
                    let r = partial_bell_recurrence(k, j, &args).expect("enough arguments");
                    if d != r {
                        return CaseResult::compare(case.clone(), d, r).with_diagnostic(format!("mismatch at j = {j}"));
                    }
                    lhs += d;
                    rhs += r;
                }
                CaseResult::compare(case.clone(), lhs, rhs)
            }
            OracleCompleteBell => {
                let args = ArgSequence::from_values(arg_sets[n].clone());
                let sum = complete_bell_sum(k, &args).expect("enough arguments");
                let egf = complete_bell_egf(&args, k).expect("enough arguments").pop().unwrap();
                let multi = complete_bell_multi_index(k, &args).expect("enough arguments");
                let result = CaseResult::compare(case.clone(), sum, egf);
                if result.lhs.as_ref() == Some(&multi) {
                    result
                } else {
                    result.with_diagnostic(format!("multi-index route gives {multi}"))
                }
            }
            OracleFaaDiBruno => {
                let (outer, inner) = &faa_sets[n];
                let g = TruncatedSeries::polynomial(outer, k);
                let h = TruncatedSeries::new(inner[..=k].to_vec());
                let composed = g.compose(&h).expect("inner constant term is zero").egf_term(k);
                let f_derivs: Vec<Rational> =
                    (0..=k).map(|j| outer.get(j).map(|c| factorial(j) * c).unwrap_or_default()).collect();
                let h_derivs: Vec<Rational> = (1..=k).map(|i| factorial(i) * &inner[i]).collect();
                match faa_di_bruno(&f_derivs, &h_derivs, k) {
                    Ok(v) => CaseResult::compare(case.clone(), composed, v),
                    Err(e) => CaseResult::failure(case.clone(), e.to_string()),
                }
            }
            _ => unreachable!(),
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
    fn bridge_sums_small_values() {
        // B_2^{(1)}(1/2) = -1/12, E_0 = 1, and 1 * 0! * C(2, 0) = 1.
        assert_eq!(bridge_central_factorial_sum(1, &r("1")), r("-1/12"));
        assert_eq!(bridge_power_sum(0, &r("5/3")), r("1"));
        assert_eq!(bridge_binomial_sum(1, &r("1")), r("1"));
        assert_eq!(bridge_binomial_sum(2, &r("2")), r("10"));
    }

    #[test]
    fn bridges_hold() {
        let rep = verify_bridges(5, &sequences::epsilon_samples());
        assert!(rep.all_passed(), "{}", rep.to_plain(false));
    }

    #[test]
    fn remarks_hold() {
        let rep = verify_remarks(5, &sequences::epsilon_samples());
        assert!(rep.all_passed(), "{}", rep.to_plain(false));
    }

    #[test]
    fn consistency_holds() {
        let rep = verify_consistency(5, &sequences::epsilon_samples());
        assert!(rep.all_passed(), "{}", rep.to_plain(false));
    }

    #[test]
    fn oracles_are_reproducible() {
        let a = verify_oracles(7, 4);
        let b = verify_oracles(7, 4);
        assert!(a.all_passed(), "{}", a.to_plain(false));
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.cases_for(IdentityId::OracleFaaDiBruno).count(), 2 * ORACLE_FAA_MAX_K);
    }
}
