//! Partial and complete Bell polynomials by each route.

use bellcheck::bell::{
    complete_bell_egf, complete_bell_multi_index, complete_bell_sum, enumerate_partitions, partial_bell_direct,
    partial_bell_recurrence,
};
use bellcheck::{ArgSequence, Rational};

fn main() {
    for p in enumerate_partitions(5, Some(2)) {
        println!("weight 5, two blocks: {p}");
    }

    // all arguments 1: Stirling numbers of the second kind
    let ones = ArgSequence::from_fn(|_| Rational::one());
    for k in 0..=6 {
        let row: Vec<String> = (0..=k).map(|j| partial_bell_recurrence(k, j, &ones).unwrap().to_string()).collect();
        println!("S({k}, j) = {}", row.join(" "));
    }

    let args = ArgSequence::from_values(["1", "3", "20"].iter().map(|s| s.parse().unwrap()).collect());
    println!("B_3(1, 3, 20) = {}", complete_bell_sum(3, &args).unwrap());
    println!("  multi-index:  {}", complete_bell_multi_index(3, &args).unwrap());
    println!("  egf:          {}", complete_bell_egf(&args, 3).unwrap()[3]);
    println!("B_{{3,2}}(1, 3) = {}", partial_bell_direct(3, 2, &args).unwrap());

    let short = ArgSequence::from_values(vec![Rational::one()]);
    println!("too few arguments: {}", complete_bell_sum(3, &short).unwrap_err());
}
