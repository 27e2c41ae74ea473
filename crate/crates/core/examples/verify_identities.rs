//! Runs a few theorem suites and prints the reports.
//!
//! `cargo run --release --example verify_identities -- 8`

use bellcheck::identities::{verify_consistency, verify_identity, IdentityId, VerificationReport};
use bellcheck::sequences::epsilon_samples;

fn main() {
    let k_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let eps = epsilon_samples();

    let mut reports: Vec<VerificationReport> =
        IdentityId::THEOREMS.iter().map(|&id| verify_identity(id, k_max, &eps).unwrap()).collect();
    reports.push(verify_consistency(k_max, &eps));

    for rep in &reports {
        println!("{:<12} {:>4} passed {:>2} failed", rep.suite, rep.passed(), rep.failed());
    }
    let all = VerificationReport::merge("theorems", reports);
    for failure in all.failures() {
        println!("FAIL {:?}", failure);
    }
    let sample = all.cases_for(IdentityId::HeqiT6).take(4).cloned().collect::<Vec<_>>();
    let small = VerificationReport::new("sample", sample, Default::default());
    println!("{}", small.to_json(false));
}
