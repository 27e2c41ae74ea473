//! The expansion of `((1 + sqrt(1 + x))/2)^q` and the finite identities
//! behind it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::crosscheck::random_rational;
use super::{run_cases, CaseResult, IdentityCase, IdentityId, VerificationReport};
use crate::arith::{binomial_general, double_factorial, factorial, falling_factorial, Rational};
use crate::bell::{faa_di_bruno, partial_bell_direct, ArgSequence};
use crate::series::{seeds, TruncatedSeries};

/// Number of random instances of the scaling rule
/// `B_{k,j}(a b^i z_i) = a^j b^k B_{k,j}(z)`.
pub const APPENDIX_SCALING_SAMPLES: usize = 100;

const SCALING_SEED: u64 = 0x5ca1e;
const SCALING_MAX_K: usize = 8;

/// Coefficient of `x^n` in `((1 + sqrt(1 + x))/2)^q`:
/// 1 for `n = 0`, else `q C(q-n-1, n-1) / (n 4^n)`.
pub fn appendix_expansion_coefficient(q: &Rational, n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let top = q - Rational::from(n as i64 + 1);
    let denom = Rational::from(n) * Rational::from(4).pow(n as u32);
    (q * binomial_general(&top, n as i64 - 1)).checked_div(&denom).unwrap()
}

fn half_root_power(q: &Rational, order: usize) -> TruncatedSeries {
    let root = seeds::linear(&Rational::one(), order).pow(&Rational::frac(1, 2)).expect("unit constant term");
    root.add(&TruncatedSeries::one(order)).scale(&Rational::frac(1, 2)).pow(q).expect("unit constant term")
}

/// `sum_{j=1}^n (-1)^{n+j} <q>_j / 2^{n+j} (2n-2j-1)!! C(2n-j-1, 2n-2j)`.
fn falling_bell_sum(q: &Rational, n: usize) -> Rational {
    (1..=n)
        .map(|j| {
            let sign = Rational::sign_power((n + j) as i64);
            let scale = Rational::frac(1, 2).pow((n + j) as u32);
            let df = double_factorial(2 * (n as i64 - j as i64) - 1).unwrap();
            let c = binomial_general(&Rational::from(2 * n as i64 - j as i64 - 1), 2 * (n - j) as i64);
            sign * falling_factorial(q, j) * scale * df * c
        })
        .sum()
}

/// `(-1)^{k+j} (2k-2j-1)!!/2^k C(2k-j-1, 2k-2j)`.
fn half_falling_closed_form(k: usize, j: usize) -> Rational {
    let df = double_factorial(2 * (k as i64 - j as i64) - 1).unwrap();
    let c = binomial_general(&Rational::from(2 * k as i64 - j as i64 - 1), 2 * (k - j) as i64);
    Rational::sign_power((k + j) as i64) * df * c * Rational::frac(1, 2).pow(k as u32)
}

struct ScalingInstance {
    k: usize,
    j: usize,
    a: Rational,
    b: Rational,
    z: Vec<Rational>,
}

fn scaling_instances() -> Vec<ScalingInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(SCALING_SEED);
    (0..APPENDIX_SCALING_SAMPLES)
        .map(|_| {
            let k = rng.gen_range(0..=SCALING_MAX_K);
            let j = rng.gen_range(0..=k);
            ScalingInstance {
                k,
                j,
                a: random_rational(&mut rng),
                b: random_rational(&mut rng),
                z: (0..SCALING_MAX_K).map(|_| random_rational(&mut rng)).collect(),
            }
        })
        .collect()
}

/// For each `q`: the expansion coefficients through `x^{k_max}` (also via
/// Faà di Bruno and the falling-factorial Bell values), the alternating
/// binomial identity and the reflection rule for `k <= k_max`. Also checks
/// the `<1/2>_i` partial Bell closed form for `j <= k <= k_max` and a fixed
/// set of random scaling instances.
pub fn verify_appendix(q_samples: &[Rational], k_max: usize) -> VerificationReport {
    use IdentityId::*;
    let series: Vec<TruncatedSeries> = {
        use rayon::prelude::*;
        q_samples.par_iter().map(|q| half_root_power(q, k_max)).collect()
    };
    let half_falling: Vec<Rational> = (1..=k_max).map(|i| falling_factorial(&Rational::frac(1, 2), i)).collect();
    let inner_derivs: Vec<Rational> = half_falling.iter().map(|v| v * Rational::frac(1, 2)).collect();
    let scaling = scaling_instances();

    let mut cases: Vec<(usize, IdentityCase)> = Vec::new();
    for (qi, q) in q_samples.iter().enumerate() {
        for k in 0..=k_max {
            cases.push((qi, IdentityCase::new(Appendix1114, k).with_extra(q.clone())));
            if k >= 1 {
                cases.push((qi, IdentityCase::new(Appendix1114Bell, k).with_extra(q.clone())));
            }
            cases.push((qi, IdentityCase::new(AppendixGould, k).with_extra(q.clone())));
            cases.push((qi, IdentityCase::new(AppendixReflection, k).with_extra(q.clone())));
        }
    }
    for k in 0..=k_max {
        for j in 0..=k {
            cases.push((0, IdentityCase::new(AppendixHalfFalling, k).with_extra(j)));
        }
    }
    for (n, inst) in scaling.iter().enumerate() {
        cases.push((n, IdentityCase::new(AppendixScaling, inst.k).with_extra(n)));
    }

    run_cases("appendix", cases, |(idx, case)| {
        let k = case.k;
        let extra = case.extra.clone().unwrap_or_default();
        match case.id {
            Appendix1114 => CaseResult::compare(
                case.clone(),
                series[*idx].coeff(k).clone(),
                appendix_expansion_coefficient(&extra, k),
            ),
            Appendix1114Bell => {
                let q = &extra;
                let f_derivs: Vec<Rational> = (0..=k).map(|j| falling_factorial(q, j)).collect();
                let via_faa = match faa_di_bruno(&f_derivs, &inner_derivs[..k], k) {
                    Ok(v) => v,
                    Err(e) => return CaseResult::failure(case.clone(), e.to_string()),
                };
                let result = CaseResult::compare(case.clone(), via_faa, falling_bell_sum(q, k));
                let closed = appendix_expansion_coefficient(q, k) * factorial(k);
                if result.pass && closed != *result.lhs.as_ref().unwrap() {
                    result.with_diagnostic(format!("expansion coefficient gives {closed}"))
                } else {
                    result
                }
            }
            AppendixGould => {
                let q = &extra;
                let ki = k as i64;
                let lhs: Rational = (0..=ki)
                    .map(|j| {
                        Rational::sign_power(j)
                            * binomial_general(q, j)
                            * binomial_general(&Rational::from(2 * ki - j), ki)
                    })
                    .sum();
                let rhs = Rational::sign_power(ki) * binomial_general(&(q - Rational::from(ki + 1)), ki);
                CaseResult::compare(case.clone(), lhs, rhs)
            }
            AppendixReflection => {
                let ki = k as i64;
                let top = Rational::from(ki - 1) - &extra;
                CaseResult::compare(
                    case.clone(),
                    binomial_general(&extra, ki),
                    Rational::sign_power(ki) * binomial_general(&top, ki),
                )
            }
            AppendixHalfFalling => {
                let j = extra.to_i64().expect("block count") as usize;
                let args = ArgSequence::from_values(half_falling.clone());
                match partial_bell_direct(k, j, &args) {
                    Ok(v) => CaseResult::compare(case.clone(), v, half_falling_closed_form(k, j)),
                    Err(e) => CaseResult::failure(case.clone(), e.to_string()),
                }
            }
            AppendixScaling => {
                let inst = &scaling[*idx];
                let scaled: Vec<Rational> =
                    (1..=inst.z.len()).map(|i| &inst.a * inst.b.pow(i as u32) * &inst.z[i - 1]).collect();
                let lhs = partial_bell_direct(inst.k, inst.j, &ArgSequence::from_values(scaled));
                let base = partial_bell_direct(inst.k, inst.j, &ArgSequence::from_values(inst.z.clone()));
                match (lhs, base) {
                    (Ok(l), Ok(b)) => {
                        CaseResult::compare(case.clone(), l, inst.a.pow(inst.j as u32) * inst.b.pow(inst.k as u32) * b)
                    }
                    (Err(e), _) | (_, Err(e)) => CaseResult::failure(case.clone(), e.to_string()),
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
    fn expansion_coefficients() {
        assert_eq!(appendix_expansion_coefficient(&r("2"), 0), r("1"));
        assert_eq!(appendix_expansion_coefficient(&r("2"), 1), r("1/2"));
        // q(q-3)/2! / 16 at q = 1
        assert_eq!(appendix_expansion_coefficient(&r("1"), 2), r("-1/16"));
    }

    #[test]
    fn half_falling_values() {
        assert_eq!(half_falling_closed_form(0, 0), r("1"));
        assert_eq!(half_falling_closed_form(3, 0), r("0"));
        assert_eq!(half_falling_closed_form(1, 1), r("1/2"));
        assert_eq!(half_falling_closed_form(2, 1), r("-1/4"));
    }

    #[test]
    fn gould_example_q_two() {
        let rep = verify_appendix(&[r("2")], 1);
        let c = rep.cases_for(IdentityId::AppendixGould).find(|c| c.case.k == 1).unwrap();
        assert_eq!((c.lhs.clone().unwrap(), c.rhs.clone().unwrap(), c.pass), (r("0"), r("0"), true));
    }

    #[test]
    fn appendix_passes() {
        let rep = verify_appendix(&crate::sequences::epsilon_samples(), 10);
        assert!(rep.all_passed(), "{}", rep.to_plain(false));
        assert_eq!(rep.cases_for(IdentityId::AppendixScaling).count(), APPENDIX_SCALING_SAMPLES);
    }
}
