use bellcheck::arith::{binomial_general, factorial, falling_factorial, rising_factorial};
use bellcheck::bell::{complete_bell_egf, complete_bell_sum, partial_bell_direct, partial_bell_recurrence};
use bellcheck::sequences::{bernoulli, gen_bernoulli_poly, gen_euler_poly};
use bellcheck::{ArgSequence, Rational, TruncatedSeries};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// A series of the given order with zero constant term.
fn series_no_constant(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order).prop_map(|mut c| {
        c.insert(0, Rational::zero());
        TruncatedSeries::new(c)
    })
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    series_no_constant(order).prop_map(move |s| s.add(&TruncatedSeries::one(order)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_laws(a in rational(), b in rational(), c in nonzero_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) * &c, &a * &c + &b * &c);
        prop_assert_eq!((&a * &c).checked_div(&c).unwrap(), a.clone());
        prop_assert!((&a - &b + &b).is_normalized());
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn binomial_reflection(x in rational(), k in 0i64..12) {
        let rhs = Rational::sign_power(k) * binomial_general(&(Rational::from(k - 1) - &x), k);
        prop_assert_eq!(binomial_general(&x, k), rhs);
    }

    #[test]
    fn rising_is_reflected_falling(z in rational(), n in 0usize..12) {
        let reflected = Rational::sign_power(n as i64) * falling_factorial(&-&z, n);
        prop_assert_eq!(rising_factorial(&z, n), reflected);
        prop_assert_eq!(falling_factorial(&z, n), binomial_general(&z, n as i64) * factorial(n));
    }

    #[test]
    fn exp_log_round_trip(s in series_no_constant(8), u in unit_series(8)) {
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
    }

    #[test]
    fn pow_is_additive(u in unit_series(7), p in rational(), q in rational()) {
        let lhs = u.pow(&(&p + &q)).unwrap();
        let rhs = u.pow(&p).unwrap().mul(&u.pow(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn div_inverts_mul(a in unit_series(9), b in unit_series(9)) {
        prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn compose_with_identity(a in unit_series(6)) {
        prop_assert_eq!(a.compose(&TruncatedSeries::identity(6)).unwrap(), a.clone());
    }

    #[test]
    fn partial_bell_scaling(
        z in prop::collection::vec(rational(), 8),
        a in rational(),
        b in rational(),
        k in 0usize..=8,
        j_frac in 0.0f64..=1.0,
    ) {
        let j = (k as f64 * j_frac).round() as usize;
        let scaled: Vec<Rational> = (1..=8).map(|i| &a * b.pow(i as u32) * &z[i - 1]).collect();
        let lhs = partial_bell_direct(k, j, &ArgSequence::from_values(scaled)).unwrap();
        let base = partial_bell_direct(k, j, &ArgSequence::from_values(z.clone())).unwrap();
        prop_assert_eq!(lhs, a.pow(j as u32) * b.pow(k as u32) * base);
    }

    #[test]
    fn bell_routes_agree(z in prop::collection::vec(rational(), 7), k in 0usize..=7) {
        let args = ArgSequence::from_values(z);
        let sum = complete_bell_sum(k, &args).unwrap();
        prop_assert_eq!(&sum, &complete_bell_egf(&args, k).unwrap()[k]);
        let partial: Rational = (0..=k).map(|j| partial_bell_recurrence(k, j, &args).unwrap()).sum();
        prop_assert_eq!(sum, partial);
    }

    #[test]
    fn generalized_polynomials_reduce(x in rational(), k in 0usize..8) {
        let one = Rational::one();
        let zero = Rational::zero();
        prop_assert_eq!(gen_bernoulli_poly(k, &one, &zero), bernoulli(k));
        prop_assert_eq!(gen_bernoulli_poly(k, &zero, &x), x.pow(k as u32));
        prop_assert_eq!(gen_euler_poly(k, &zero, &x), x.pow(k as u32));
    }

    #[test]
    fn odd_generalized_values_vanish(eps in rational(), k in 0usize..5) {
        let two_eps = &eps * Rational::from(2);
        prop_assert!(gen_bernoulli_poly(2 * k + 1, &two_eps, &eps).is_zero());
        prop_assert!(gen_euler_poly(2 * k + 1, &two_eps, &eps).is_zero());
    }
}
