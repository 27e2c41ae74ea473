//! Truncated power series: exp, log, powers, composition, reindexing.

use bellcheck::series::{seeds, Reindex};
use bellcheck::{Rational, TruncatedSeries};

fn show(name: &str, s: &TruncatedSeries) {
    let terms: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    println!("{name:<24} [{}]", terms.join(", "));
}

fn main() {
    let order = 8;
    show("log(sin x / x)", &seeds::sinc(order).log().unwrap());
    show("x / sinh x", &seeds::sinhc(order).recip().unwrap());
    show("sec x", &seeds::cos(order).recip().unwrap());
    show("sqrt(1 + x)", &seeds::linear(&Rational::one(), order).pow(&Rational::frac(1, 2)).unwrap());

    // e^{e^x - 1}: exponential generating function of the Bell numbers
    let bell = seeds::exp_minus_one(order).exp().unwrap();
    let numbers: Vec<String> = (0..=order).map(|k| bell.egf_term(k).to_string()).collect();
    println!("{:<24} [{}]", "Bell numbers", numbers.join(", "));

    let outer = seeds::exp(order);
    let inner = seeds::sin(order);
    show("exp(sin x)", &outer.compose(&inner).unwrap());

    // cosh(sqrt(z)/2) as a series in z
    let cosh = seeds::cosh(2 * order).scale_reindex(&Rational::frac(1, 2), Reindex::EvenPartAsZ).unwrap();
    show("cosh(sqrt(z)/2)", &cosh);
}
