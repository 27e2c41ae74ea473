//! Catalan numbers from 2/(1 + sqrt(1 - 4x)), and the Bell-polynomial
//! closed forms they feed.

use bellcheck::identities::{closed_form_rhs, lhs_bell, IdentityCase, IdentityId};
use bellcheck::series::seeds;
use bellcheck::{Rational, TruncatedSeries};

fn main() {
    let order = 15;
    let root = seeds::linear(&Rational::from(-4), order).pow(&Rational::frac(1, 2)).unwrap();
    let gf = TruncatedSeries::constant(Rational::from(2), order).div(&root.add(&TruncatedSeries::one(order))).unwrap();
    let values: Vec<String> = gf.coeffs().iter().map(|c| c.to_string()).collect();
    println!("C_0..C_{order}: {}", values.join(", "));

    for eps in ["1", "-1", "1/2", "5/3"] {
        let eps: Rational = eps.parse().unwrap();
        for k in 1..=4 {
            let case = IdentityCase::new(IdentityId::XuT12, k).with_epsilon(eps.clone());
            println!(
                "eps={eps:<4} k={k}: B_k(2eps, 6eps, 40eps, ...) = {:<12} closed form {}",
                lhs_bell(&case).unwrap().to_string(),
                closed_form_rhs(&case).unwrap()
            );
        }
    }
}
