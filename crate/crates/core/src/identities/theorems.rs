//! Closed forms for complete Bell polynomials at Bernoulli-, Euler- and
//! Catalan-type arguments.

use super::crosscheck::{bridge_binomial_sum, bridge_central_factorial_sum, bridge_power_sum};
use super::{double, half, run_cases, CaseResult, IdentityCase, IdentityId, SuiteError, VerificationReport};
use crate::arith::{binomial_general, binomial_int, double_factorial, factorial, Rational};
use crate::bell::{complete_bell_egf, complete_bell_multi_index, complete_bell_sum, enumerate_partitions, ArgSequence};
use crate::sequences::{self, bernoulli, catalan, euler, gen_bernoulli_poly, gen_euler_poly, SequenceKind};

/// `(i-1)! B_{2i} / (2i)!`
fn bernoulli_ratio(i: usize) -> Rational {
    (factorial(i - 1) * bernoulli(2 * i)).checked_div(&factorial(2 * i)).unwrap()
}

/// `4^i - 1`
fn four_pow_minus_one(i: usize) -> Rational {
    Rational::from(4).pow(i as u32) - Rational::one()
}

/// `(i-1)! C(2i, i)`
fn central_binomial_ratio(i: usize) -> Rational {
    factorial(i - 1) * binomial_int(2 * i as i64, i as i64)
}

/// The argument rule `i -> a_i` of a Bell-form identity. Hoffman's and
/// Gençev's multi-index sums map to their Bell reformulations.
pub fn build_theorem_args(id: IdentityId, eps: &Rational) -> Result<ArgSequence, SuiteError> {
    use IdentityId::*;
    let eps = eps.clone();
    let args = match id {
        HoffmanT1 => ArgSequence::from_fn(|i| half(&Rational::one()) * bernoulli_ratio(i)),
        GencevT2 | HeqiT4 => ArgSequence::from_fn(move |i| half(&eps) * bernoulli_ratio(i)),
        GencevT3 | HeqiT5 => ArgSequence::from_fn(move |i| half(&eps) * four_pow_minus_one(i) * bernoulli_ratio(i)),
        GencevT4 | HeqiT6 => ArgSequence::from_fn(move |i| half(&eps) * central_binomial_ratio(i)),
        HeqiT7 | XuT10 => ArgSequence::from_fn(move |i| &eps * bernoulli_ratio(i)),
        HeqiT8 | XuT11 => ArgSequence::from_fn(move |i| &eps * four_pow_minus_one(i) * bernoulli_ratio(i)),
        HeqiT9 | XuT12 => ArgSequence::from_fn(move |i| &eps * central_binomial_ratio(i)),
        FilomatEven | FilomatOdd => {
            ArgSequence::from_fn(|i| if i % 2 == 1 { Rational::zero() } else { Rational::frac(1, i as i64 + 1) })
        }
        other => return Err(SuiteError::NotBellForm(other)),
    };
    Ok(args)
}

/// Weight `w_i` of the raw multi-index sums `sum prod w_i^{l_i} / l_i!`.
fn multi_index_weight(id: IdentityId, eps: &Rational, i: usize) -> Rational {
    let two_i = Rational::from(2 * i);
    let ratio = bernoulli(2 * i).checked_div(&(&two_i * factorial(2 * i))).unwrap();
    match id {
        IdentityId::HoffmanT1 => ratio,
        IdentityId::GencevT2 => eps * ratio,
        IdentityId::GencevT3 => four_pow_minus_one(i) * eps * ratio,
        IdentityId::GencevT4 => eps.checked_div(&two_i).unwrap() * binomial_int(2 * i as i64, i as i64),
        _ => unreachable!("no raw multi-index form for {id}"),
    }
}

/// `sum_{sum i l_i = k} prod_i w_i^{l_i} / l_i!`, evaluated directly.
pub fn multi_index_sum(k: usize, weight: impl Fn(usize) -> Rational) -> Rational {
    let w: Vec<Rational> = (1..=k).map(weight).collect();
    enumerate_partitions(k, None)
        .iter()
        .map(|p| {
            p.nonzero().map(|(i, l)| w[i - 1].pow(l as u32).checked_div(&factorial(l)).unwrap()).product::<Rational>()
        })
        .sum()
}

fn require_epsilon(case: &IdentityCase) -> Result<Rational, SuiteError> {
    match (&case.epsilon, case.id) {
        (_, IdentityId::HoffmanT1) => Ok(Rational::one()),
        (Some(e), _) => Ok(e.clone()),
        (None, id) => Err(SuiteError::MissingEpsilon { id }),
    }
}

enum UnitSign {
    Plus,
    Minus,
}

fn unit_sign(id: IdentityId, eps: &Rational) -> Result<UnitSign, SuiteError> {
    if *eps == 1 {
        Ok(UnitSign::Plus)
    } else if *eps == -1 {
        Ok(UnitSign::Minus)
    } else {
        Err(SuiteError::UnsupportedEpsilon { id, eps: Box::new(eps.clone()) })
    }
}

fn check_case(case: &IdentityCase) -> Result<Rational, SuiteError> {
    if !case.id.is_theorem() {
        return Err(SuiteError::NotBellForm(case.id));
    }
    if case.k < case.id.min_k() {
        return Err(SuiteError::DegreeOutOfRange { id: case.id, k: case.k });
    }
    require_epsilon(case)
}

/// The right-hand side of a theorem case, evaluated exactly (`0^0 = 1`).
pub fn closed_form_rhs(case: &IdentityCase) -> Result<Rational, SuiteError> {
    use IdentityId::*;
    let eps = check_case(case)?;
    let k = case.k;
    let ki = k as i64;
    let kf = factorial(k);
    let four_k_df = double_factorial(4 * ki).unwrap();
    let two_k_f = factorial(2 * k);
    let div = |a: Rational, b: &Rational| a.checked_div(b).unwrap();
    // 2 - 2^{2k}
    let two_minus = Rational::from(2) - Rational::from(4).pow(k as u32);

    let value = match case.id {
        HoffmanT1 => div(Rational::one(), &(Rational::from(4).pow(k as u32) * factorial(2 * k + 1))),
        GencevT2 | HeqiT4 => {
            let base = match unit_sign(case.id, &eps)? {
                UnitSign::Plus => div(Rational::one(), &(Rational::from(2 * k + 1) * &four_k_df)),
                UnitSign::Minus => div(two_minus * bernoulli(2 * k), &four_k_df),
            };
            if case.id == HeqiT4 {
                kf * base
            } else {
                base
            }
        }
        GencevT3 | HeqiT5 => {
            let base = match unit_sign(case.id, &eps)? {
                UnitSign::Plus => div(Rational::one(), &four_k_df),
                UnitSign::Minus => div(euler(2 * k), &four_k_df),
            };
            if case.id == HeqiT5 {
                kf * base
            } else {
                base
            }
        }
        GencevT4 | HeqiT6 => {
            let base = match unit_sign(case.id, &eps)? {
                UnitSign::Plus => catalan(k),
                UnitSign::Minus => -catalan(k - 1),
            };
            if case.id == HeqiT6 {
                kf * base
            } else {
                base
            }
        }
        HeqiT7 => div(kf, &two_k_f) * bridge_central_factorial_sum(k, &-double(&eps)),
        HeqiT8 => div(kf, &(Rational::from(4).pow(k as u32) * &two_k_f)) * bridge_power_sum(k, &-double(&eps)),
        HeqiT9 => bridge_binomial_sum(k, &double(&eps)),
        XuT10 => div(kf, &two_k_f) * gen_bernoulli_poly(2 * k, &-double(&eps), &-&eps),
        XuT11 => div(kf, &two_k_f) * gen_euler_poly(2 * k, &-double(&eps), &-&eps),
        XuT12 => {
            let top = Rational::from(2 * k) - Rational::one() + double(&eps);
            double(&eps) * factorial(k - 1) * binomial_general(&top, ki - 1)
        }
        _ => unreachable!(),
    };
    Ok(value)
}

/// `B_k(args)` for a Bell-form theorem, after requiring the partial-sum,
/// multi-index and generating-function routes to agree.
pub fn lhs_bell(case: &IdentityCase) -> Result<Rational, SuiteError> {
    let eps = check_case(case)?;
    let args = build_theorem_args(case.id, &eps)?;
    let k = case.k;
    let partial = complete_bell_sum(k, &args)?;
    let multi_index = complete_bell_multi_index(k, &args)?;
    let egf = complete_bell_egf(&args, k)?.pop().expect("k + 1 terms");
    if partial != egf || partial != multi_index {
        return Err(SuiteError::RouteDisagreement(Box::new([partial, egf, multi_index])));
    }
    Ok(partial)
}

/// Bell-form identity whose raw multi-index sum `id` reformulates.
fn bell_form_of(id: IdentityId) -> Option<IdentityId> {
    match id {
        IdentityId::HoffmanT1 | IdentityId::GencevT2 => Some(IdentityId::HeqiT4),
        IdentityId::GencevT3 => Some(IdentityId::HeqiT5),
        IdentityId::GencevT4 => Some(IdentityId::HeqiT6),
        _ => None,
    }
}

fn evaluate(case: &IdentityCase) -> CaseResult {
    let rhs = match closed_form_rhs(case) {
        Ok(v) => v,
        Err(e) => return CaseResult::failure(case.clone(), e.to_string()),
    };
    let Some(bell_id) = bell_form_of(case.id) else {
        return match lhs_bell(case) {
            Ok(lhs) => CaseResult::compare(case.clone(), lhs, rhs),
            Err(e) => CaseResult::failure(case.clone(), e.to_string()),
        };
    };
    // Raw multi-index side, then the Bell reformulation divided by k! as a
    // redundant second route.
    let eps = require_epsilon(case).expect("checked above");
    let lhs = multi_index_sum(case.k, |i| multi_index_weight(case.id, &eps, i));
    let bell_case = IdentityCase::new(bell_id, case.k).with_epsilon(eps);
    let result = CaseResult::compare(case.clone(), lhs.clone(), rhs);
    match lhs_bell(&bell_case) {
        Ok(b) => {
            let scaled = b.checked_div(&factorial(case.k)).unwrap();
            if scaled == lhs {
                result
            } else {
                result.with_diagnostic(format!("Bell reformulation gives {scaled}"))
            }
        }
        Err(e) => result.with_diagnostic(e.to_string()),
    }
}

/// Checks one theorem for `k` up to `k_max` and every applicable `eps`.
/// Identities stated only for `eps = 1, -1` use the matching subset of
/// `epsilons`; Hoffman's formula has no parameter.
pub fn verify_identity(id: IdentityId, k_max: usize, epsilons: &[Rational]) -> Result<VerificationReport, SuiteError> {
    if !id.is_theorem() {
        return Err(SuiteError::NotBellForm(id));
    }
    sequences::prepare(SequenceKind::Bernoulli, 2 * k_max + 2);
    sequences::prepare(SequenceKind::Euler, 2 * k_max + 2);
    sequences::prepare(SequenceKind::Catalan, k_max + 1);

    let mut eps_list: Vec<Option<Rational>> = if id.takes_epsilon() {
        epsilons.iter().filter(|e| !id.unit_epsilon_only() || **e == 1 || **e == -1).cloned().map(Some).collect()
    } else {
        vec![None]
    };
    eps_list.sort();
    eps_list.dedup();

    let mut cases = Vec::new();
    for k in id.min_k()..=k_max {
        for eps in &eps_list {
            let mut c = IdentityCase::new(id, k);
            c.epsilon = eps.clone();
            cases.push(c);
        }
    }
    Ok(run_cases(id.as_str(), cases, evaluate))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn case(id: IdentityId, k: usize, eps: &str) -> IdentityCase {
        IdentityCase::new(id, k).with_epsilon(r(eps))
    }

    #[test]
    fn argument_rules() {
        let a = build_theorem_args(IdentityId::HeqiT6, &r("1")).unwrap();
        assert_eq!(a.materialize(3).unwrap(), vec![r("1"), r("3"), r("20")]);
        let a = build_theorem_args(IdentityId::XuT12, &r("1")).unwrap();
        assert_eq!(a.materialize(3).unwrap(), vec![r("2"), r("6"), r("40")]);
        let a = build_theorem_args(IdentityId::FilomatEven, &r("0")).unwrap();
        assert_eq!(a.materialize(4).unwrap(), vec![r("0"), r("1/3"), r("0"), r("1/5")]);
        let a = build_theorem_args(IdentityId::HeqiT5, &r("-1")).unwrap();
        assert_eq!(a.get(1).unwrap(), r("-1/8"));
        assert_eq!(
            build_theorem_args(IdentityId::AppendixGould, &r("1")).unwrap_err(),
            SuiteError::NotBellForm(IdentityId::AppendixGould)
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_rhs(&case(IdentityId::HeqiT4, 1, "1")).unwrap(), r("1/24"));
        assert_eq!(closed_form_rhs(&case(IdentityId::XuT12, 2, "1")).unwrap(), r("10"));
        assert_eq!(closed_form_rhs(&case(IdentityId::HeqiT7, 1, "1/2")).unwrap(), r("1/24"));
        assert_eq!(closed_form_rhs(&IdentityCase::new(IdentityId::HoffmanT1, 2)).unwrap(), r("1/1920"));
        assert_eq!(closed_form_rhs(&case(IdentityId::HeqiT5, 1, "-1")).unwrap(), r("-1/8"));
        assert_eq!(closed_form_rhs(&case(IdentityId::HeqiT9, 0, "5/3")).unwrap(), r("1"));
    }

    #[test]
    fn closed_form_rejections() {
        assert!(matches!(
            closed_form_rhs(&case(IdentityId::HeqiT4, 2, "1/2")),
            Err(SuiteError::UnsupportedEpsilon { .. })
        ));
        assert!(matches!(closed_form_rhs(&case(IdentityId::XuT12, 0, "1")), Err(SuiteError::DegreeOutOfRange { .. })));
        assert!(matches!(
            closed_form_rhs(&IdentityCase::new(IdentityId::XuT10, 2)),
            Err(SuiteError::MissingEpsilon { .. })
        ));
        assert!(matches!(
            closed_form_rhs(&IdentityCase::new(IdentityId::FilomatOdd, 2)),
            Err(SuiteError::NotBellForm(_))
        ));
    }

    #[test]
    fn left_side_examples() {
        assert_eq!(lhs_bell(&case(IdentityId::HeqiT6, 3, "1")).unwrap(), r("30"));
        assert_eq!(lhs_bell(&case(IdentityId::HeqiT6, 2, "-1")).unwrap(), r("-2"));
        assert_eq!(lhs_bell(&case(IdentityId::HeqiT4, 2, "1")).unwrap(), r("1/1920") * r("2"));
        // Hoffman weights: w_1 = B_2/(2 * 2!)
        let w = |i: usize| multi_index_weight(IdentityId::HoffmanT1, &r("1"), i);
        assert_eq!(w(1), r("1/24"));
        assert_eq!(multi_index_sum(2, w), r("1/1920"));
    }

    #[test]
    fn verify_examples() {
        let rep = verify_identity(IdentityId::HoffmanT1, 2, &[]).unwrap();
        let k2 = rep.cases.iter().find(|c| c.case.k == 2).unwrap();
        assert!(k2.pass);
        assert_eq!(k2.lhs.as_ref().unwrap(), &r("1/1920"));

        let rep = verify_identity(IdentityId::XuT10, 1, &[r("1/2")]).unwrap();
        let c = &rep.cases[1];
        assert_eq!((c.case.k, c.lhs.clone().unwrap(), c.pass), (1, r("1/24"), true));

        let rep = verify_identity(IdentityId::HeqiT5, 1, &[r("-1"), r("1/2")]).unwrap();
        assert_eq!(rep.cases.len(), 2);
        assert!(rep.all_passed());
        assert_eq!(rep.cases[1].lhs.clone().unwrap(), r("-1/8"));

        assert!(verify_identity(IdentityId::FilomatEven, 2, &[]).is_err());
    }
}
