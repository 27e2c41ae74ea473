//! Higher derivatives of a composition via Faà di Bruno, checked against
//! series composition.

use bellcheck::arith::factorial;
use bellcheck::bell::faa_di_bruno;
use bellcheck::series::seeds;
use bellcheck::Rational;

fn main() {
    // d^k/dx^k exp(sin x) at 0
    let order = 10;
    let f_derivs = vec![Rational::one(); order + 1];
    let sin = seeds::sin(order);
    let h_derivs: Vec<Rational> = (1..=order).map(|i| sin.egf_term(i)).collect();
    let composed = seeds::exp(order).compose(&sin).unwrap();
    for k in 0..=order {
        let via_bell = faa_di_bruno(&f_derivs, &h_derivs, k).unwrap();
        println!("k={k:>2}: {via_bell:>6}  (series: {})", composed.egf_term(k));
    }

    // 1/(1 - h) with h = x + x^2: f^{(j)}(0) = j!
    let f: Vec<Rational> = (0..=6).map(factorial).collect();
    let h = vec![
        Rational::one(),
        Rational::from(2),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
    ];
    let fib: Vec<String> =
        (0..=6).map(|k| (faa_di_bruno(&f, &h, k).unwrap().checked_div(&factorial(k)).unwrap()).to_string()).collect();
    println!("coefficients of 1/(1 - x - x^2): {}", fib.join(", "));
}
