//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use bellcheck::bell::complete_bell_sum;
use bellcheck::identities::{
    verify_appendix, verify_classical, verify_consistency, verify_filomat, verify_identity, verify_oracles,
    verify_remarks, IdentityId, VerificationReport,
};
use bellcheck::sequences::{catalan, central_factorial_t, epsilon_samples};
use bellcheck::{ArgSequence, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(report: &VerificationReport) -> Outcome {
    match report.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!(
            "{} failed case(s), first: {} k={} eps={:?} extra={:?} lhs={:?} rhs={:?} {:?}",
            report.failed(),
            c.case.id,
            c.case.k,
            c.case.epsilon,
            c.case.extra,
            c.lhs,
            c.rhs,
            c.diagnostic
        )),
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn case_value(report: &VerificationReport, id: IdentityId, k: usize, eps: Option<&str>) -> Option<Rational> {
    report.cases_for(id).find(|c| c.case.k == k && c.case.epsilon == eps.map(r)).and_then(|c| c.lhs.clone())
}

fn count(report: &VerificationReport, id: IdentityId) -> usize {
    report.cases_for(id).count()
}

fn theorem(id: IdentityId, k_max: usize, eps: &[Rational]) -> Result<VerificationReport, String> {
    verify_identity(id, k_max, eps).map_err(|e| e.to_string())
}

fn unit_eps() -> Vec<Rational> {
    vec![r("1"), r("-1")]
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rep = theorem(IdentityId::HoffmanT1, 12, &[])?;
    all_pass(&rep)?;
    ensure(rep.cases.len() == 12, format!("expected 12 cases, got {}", rep.cases.len()))?;
    ensure(case_value(&rep, IdentityId::HoffmanT1, 1, None) == Some(r("1/24")), "k=1 is not 1/24")?;
    ensure(case_value(&rep, IdentityId::HoffmanT1, 2, None) == Some(r("1/1920")), "k=2 is not 1/1920")?;
    within(start, Duration::from_secs(5))
}

fn criterion_2() -> Outcome {
    use IdentityId::*;
    let start = Instant::now();
    for id in [HeqiT4, HeqiT5, HeqiT6, GencevT2, GencevT3, GencevT4] {
        let rep = theorem(id, 12, &unit_eps())?;
        all_pass(&rep)?;
        let expected = 2 * (13 - id.min_k());
        ensure(rep.cases.len() == expected, format!("{id}: {} cases, expected {expected}", rep.cases.len()))?;
    }
    let b = |vals: &[&str]| {
        let args = ArgSequence::from_values(vals.iter().map(|s| r(s)).collect());
        complete_bell_sum(vals.len(), &args).map_err(|e| e.to_string())
    };
    ensure(b(&["1", "3", "20"])? == r("30"), "B_3(1,3,20) != 30")?;
    ensure(b(&["-1", "-3"])? == r("-2"), "B_2(-1,-3) != -2")?;
    within(start, Duration::from_secs(10))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for q in 0..=24 {
        ensure(central_factorial_t(q, q) == Rational::one(), format!("T({q},{q}) != 1"))?;
        if q >= 1 {
            ensure(central_factorial_t(q, 0).is_zero(), format!("T({q},0) != 0"))?;
        }
    }
    let eps = epsilon_samples();
    for id in [IdentityId::HeqiT7, IdentityId::HeqiT8, IdentityId::HeqiT9] {
        let rep = theorem(id, 10, &eps)?;
        all_pass(&rep)?;
        let expected = eps.len() * (11 - id.min_k());
        ensure(rep.cases.len() == expected, format!("{id}: {} cases, expected {expected}", rep.cases.len()))?;
    }
    within(start, Duration::from_secs(30))
}

fn criterion_4() -> Outcome {
    use IdentityId::*;
    let start = Instant::now();
    let eps = epsilon_samples();
    for id in [XuT10, XuT11, XuT12] {
        let rep = theorem(id, 10, &eps)?;
        all_pass(&rep)?;
        let expected = eps.len() * (11 - id.min_k());
        ensure(rep.cases.len() == expected, format!("{id}: {} cases, expected {expected}", rep.cases.len()))?;
    }
    let remarks = verify_remarks(8, &eps);
    for id in [RemarkBernoulliMinusOne, RemarkBernoulliOne, RemarkEulerMinusOne, RemarkEulerOne] {
        let cases: Vec<_> = remarks.cases_for(id).collect();
        ensure(cases.len() == 9, format!("{id}: {} cases", cases.len()))?;
        ensure(cases.iter().all(|c| c.pass), format!("{id} has a failing case"))?;
    }
    within(start, Duration::from_secs(30))
}

fn criterion_5() -> Outcome {
    use IdentityId::*;
    let rep = verify_consistency(8, &epsilon_samples());
    all_pass(&rep)?;
    for id in [
        ConsistencyT7T10,
        ConsistencyT8T11,
        ConsistencyT9T12,
        ConsistencyT4T7Args,
        ConsistencyT5T8Args,
        ConsistencyT6T9Args,
        ConsistencyT4T7,
        ConsistencyT5T8,
        ConsistencyT6T9,
    ] {
        ensure(count(&rep, id) > 0, format!("no cases for {id}"))?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    use IdentityId::*;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let random_q: BTreeSet<Rational> = std::iter::repeat_with(|| {
        let n: i64 = rng.gen_range(-40..=40);
        let d: i64 = rng.gen_range(1..=15);
        Rational::frac(n, d)
    })
    .filter(|q| !q.is_integer())
    .take(200)
    .collect::<BTreeSet<_>>()
    .into_iter()
    .take(50)
    .collect();
    ensure(random_q.len() == 50, "fewer than 50 distinct random q")?;

    let gould = verify_appendix(&random_q.iter().cloned().collect::<Vec<_>>(), 20);
    all_pass(&gould)?;
    ensure(count(&gould, AppendixGould) == 50 * 21, "Gould case count")?;

    let eps = epsilon_samples();
    let expansion = verify_appendix(&eps, 16);
    all_pass(&expansion)?;
    ensure(count(&expansion, Appendix1114) == eps.len() * 17, "expansion case count")?;
    ensure(count(&expansion, Appendix1114Bell) == eps.len() * 16, "Faà di Bruno expansion case count")?;

    let half = verify_appendix(&[], 12);
    all_pass(&half)?;
    ensure(count(&half, AppendixHalfFalling) == 13 * 14 / 2, "half-falling case count")?;
    ensure(count(&half, AppendixScaling) == 100, "scaling case count")
}

fn criterion_7() -> Outcome {
    use IdentityId::*;
    let rep = verify_filomat(6);
    all_pass(&rep)?;
    let pairs = (0..=6).map(|m| m + 1).sum::<usize>();
    ensure(count(&rep, FilomatEven) == pairs, "even case count")?;
    ensure(count(&rep, FilomatOdd) == pairs, "odd case count")?;
    ensure(count(&rep, FilomatBinomSum) == 7 * 13, "binomial-power case count")
}

fn criterion_8() -> Outcome {
    use IdentityId::*;
    let rep = verify_classical(24);
    all_pass(&rep)?;
    for id in [
        ClassicalLnSinc,
        ClassicalLnSinhc,
        ClassicalCsc,
        ClassicalCsch,
        ClassicalLnCos,
        ClassicalSec,
        ClassicalLnOnePlusSqrt,
    ] {
        ensure(count(&rep, id) == 25, format!("{id} not checked through order 24"))?;
    }
    let cat: Vec<Rational> = rep.cases_for(ClassicalCatalanGf).filter_map(|c| c.lhs.clone()).collect();
    let expected: Vec<Rational> = (0..=24).map(catalan).collect();
    ensure(cat == expected, "Catalan generating function coefficients differ")?;
    ensure(cat[..4] == [r("1"), r("1"), r("2"), r("5")], "Catalan prefix is not 1,1,2,5")?;
    ensure(cat[12] == r("208012"), "C_12 != 208012")
}

fn criterion_9() -> Outcome {
    use IdentityId::*;
    let rep = verify_oracles(9, 100);
    all_pass(&rep)?;
    ensure(count(&rep, OraclePartialBell) == 100 * 10, "partial Bell case count")?;
    ensure(count(&rep, OracleCompleteBell) == 100 * 10, "complete Bell case count")?;
    ensure(count(&rep, OracleFaaDiBruno) == 50 * 8, "Faà di Bruno case count")
}

fn criterion_10() -> Outcome {
    let run = || -> Result<(Vec<u8>, Duration), String> {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_bellcheck"))
            .args(["verify", "--suite", "all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), format!("exit status {:?}", out.status.code()))?;
        Ok((out.stdout, start.elapsed()))
    };
    let (first, t1) = run()?;
    let (second, t2) = run()?;
    ensure(first == second, "two runs produced different bytes")?;
    let doc: serde_json::Value = serde_json::from_slice(&first).map_err(|e| e.to_string())?;
    ensure(doc["failed"] == 0, "report lists failures")?;
    ensure(doc["wall_ms"].is_null(), "wall time leaked into the default report")?;
    let limit = Duration::from_secs(120);
    ensure(t1 < limit && t2 < limit, format!("full runs took {t1:?} and {t2:?}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Hoffman sums", criterion_1),
        ("Bernoulli, Euler and Catalan forms at eps = +-1", criterion_2),
        ("general eps forms with central factorial numbers", criterion_3),
        ("generalized polynomial forms and special values", criterion_4),
        ("cross-theorem consistency", criterion_5),
        ("appendix expansion and binomial identities", criterion_6),
        ("zero-padded partial Bell values", criterion_7),
        ("classical expansion battery", criterion_8),
        ("Bell routine oracles", criterion_9),
        ("determinism of full runs", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS ({name})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL ({name}): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
