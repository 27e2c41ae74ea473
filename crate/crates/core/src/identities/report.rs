use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use super::IdentityId;
use crate::arith::Rational;

/// One concrete instance of an identity.
///
/// `k` is the main degree. `extra` carries a second parameter when the
/// identity has one: the block count for partial Bell cases, `m` for the
/// even/odd zero-padded argument cases, `j` for the binomial-power sum, the
/// exponent `q` for the appendix expansions, or a sample index for the
/// randomized oracle checks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub k: usize,
    pub epsilon: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extra: Option<Rational>,
}

impl IdentityCase {
    pub fn new(id: IdentityId, k: usize) -> Self {
        IdentityCase { id, k, epsilon: None, extra: None }
    }

    pub fn with_epsilon(mut self, eps: Rational) -> Self {
        self.epsilon = Some(eps);
        self
    }

    pub fn with_extra(mut self, extra: impl Into<Rational>) -> Self {
        self.extra = Some(extra.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    #[serde(flatten)]
    pub case: IdentityCase,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl CaseResult {
    /// Passes iff the two reduced values are identical.
    pub fn compare(case: IdentityCase, lhs: Rational, rhs: Rational) -> Self {
        let pass = lhs == rhs;
        CaseResult { case, lhs: Some(lhs), rhs: Some(rhs), pass, diagnostic: None }
    }

    pub fn failure(case: IdentityCase, diagnostic: String) -> Self {
        CaseResult { case, lhs: None, rhs: None, pass: false, diagnostic: Some(diagnostic) }
    }

    pub fn with_diagnostic(mut self, diagnostic: String) -> Self {
        self.pass = false;
        self.diagnostic = Some(diagnostic);
        self
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    suite: &'a str,
    cases: &'a [CaseResult],
    passed: usize,
    failed: usize,
    wall_ms: Option<u128>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, mut cases: Vec<CaseResult>, wall_time: Duration) -> Self {
        cases.sort_by(|a, b| a.case.cmp(&b.case));
        VerificationReport { suite: suite.into(), cases, wall_time }
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn cases_for(&self, id: IdentityId) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(move |c| c.case.id == id)
    }

    /// Concatenates reports under a new suite name, keeping case order.
    pub fn merge(suite: impl Into<String>, reports: Vec<VerificationReport>) -> Self {
        let wall_time = reports.iter().map(|r| r.wall_time).sum();
        let mut cases: Vec<CaseResult> = reports.into_iter().flat_map(|r| r.cases).collect();
        cases.sort_by(|a, b| a.case.cmp(&b.case));
        VerificationReport { suite: suite.into(), cases, wall_time }
    }

    /// JSON form. Wall time is only written when `timing` is set so that
    /// repeated runs produce identical bytes.
    pub fn to_json(&self, timing: bool) -> String {
        let doc = ReportJson {
            suite: &self.suite,
            cases: &self.cases,
            passed: self.passed(),
            failed: self.failed(),
            wall_ms: timing.then_some(self.wall_time.as_millis()),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,k,epsilon,extra,lhs,rhs,pass\n");
        for c in &self.cases {
            let opt = |v: &Option<Rational>| v.as_ref().map(|x| x.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                c.case.id,
                c.case.k,
                opt(&c.case.epsilon),
                opt(&c.case.extra),
                opt(&c.lhs),
                opt(&c.rhs),
                c.pass
            );
        }
        out
    }

    pub fn to_plain(&self, timing: bool) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{mark} {} k={}", c.case.id, c.case.k);
            if let Some(e) = &c.case.epsilon {
                let _ = write!(out, " eps={e}");
            }
            if let Some(x) = &c.case.extra {
                let _ = write!(out, " extra={x}");
            }
            if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                let _ = write!(out, " lhs={l} rhs={r}");
            }
            if let Some(d) = &c.diagnostic {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
        }
        let _ = write!(out, "suite {}: {} passed, {} failed", self.suite, self.passed(), self.failed());
        if timing {
            let _ = write!(out, " in {} ms", self.wall_time.as_millis());
        }
        out.push('\n');
        out
    }
}
