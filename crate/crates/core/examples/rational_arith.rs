//! Exact rationals: parsing, reduction, factorial-type helpers.

use bellcheck::arith::{binomial_general, double_factorial, falling_factorial, rising_factorial};
use bellcheck::Rational;

fn main() {
    let a: Rational = "1/1152".parse().unwrap();
    let b: Rational = "1/2880".parse().unwrap();
    println!("{a} - {b} = {}", &a - &b);

    let half = Rational::frac(1, 2);
    println!("(1/2)_4 = {}", rising_factorial(&half, 4));
    println!("<1/2>_4 = {}", falling_factorial(&half, 4));
    println!("C(1/2, 3) = {}", binomial_general(&half, 3));
    println!("C(-1, 5) = {}", binomial_general(&Rational::from(-1), 5));
    println!("9!! = {}, (-1)!! = {}", double_factorial(9).unwrap(), double_factorial(-1).unwrap());

    for bad in ["1/0", "1.5", "2/-3"] {
        println!("{bad:>5} -> {:?}", bad.parse::<Rational>().err());
    }
}
