//! Coefficients of ((1 + sqrt(1 + x))/2)^q three ways.

use bellcheck::identities::{appendix_expansion_coefficient, verify_appendix};
use bellcheck::series::seeds;
use bellcheck::{Rational, TruncatedSeries};

fn main() {
    let order = 8;
    for q in ["2", "1/2", "-3/2"] {
        let q: Rational = q.parse().unwrap();
        let root = seeds::linear(&Rational::one(), order).pow(&Rational::frac(1, 2)).unwrap();
        let series = root.add(&TruncatedSeries::one(order)).scale(&Rational::frac(1, 2)).pow(&q).unwrap();
        println!("q = {q}");
        for n in 0..=order {
            println!(
                "  x^{n}: {:<16} closed form {}",
                series.coeff(n).to_string(),
                appendix_expansion_coefficient(&q, n)
            );
        }
    }

    let report = verify_appendix(&[Rational::frac(7, 3), Rational::from(-5)], 12);
    println!("{} appendix cases, {} failed", report.cases.len(), report.failed());
}
