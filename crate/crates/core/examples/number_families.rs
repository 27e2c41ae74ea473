//! Bernoulli, Euler, Catalan and central factorial numbers, plus the
//! generalized Bernoulli and Euler polynomials.

use bellcheck::sequences::{
    bernoulli, catalan, central_factorial_t, euler, gen_bernoulli_poly, gen_euler_poly, sequence_values, SequenceKind,
};
use bellcheck::Rational;

fn main() {
    for kind in [SequenceKind::Bernoulli, SequenceKind::Euler, SequenceKind::Catalan] {
        let values: Vec<String> = sequence_values(kind, 12).iter().map(|v| v.to_string()).collect();
        println!("{:<10} {}", kind.name(), values.join(", "));
    }
    println!("B_30 = {}", bernoulli(30));
    println!("E_20 = {}", euler(20));
    println!("C_30 = {}", catalan(30));

    println!("\nT(p, q) for p, q <= 6");
    for p in 0..=6 {
        let row: Vec<String> = (0..=p).map(|q| central_factorial_t(p, q).to_string()).collect();
        println!("  {}", row.join("\t"));
    }

    let half = Rational::frac(1, 2);
    let neg_half = Rational::frac(-1, 2);
    for k in 0..=4 {
        println!(
            "k={k}: B_2k^(-1)(-1/2) = {:<10} E_2k^(1)(1/2) = {}",
            gen_bernoulli_poly(2 * k, &Rational::from(-1), &neg_half).to_string(),
            gen_euler_poly(2 * k, &Rational::one(), &half)
        );
    }
}
