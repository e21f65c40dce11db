//! Property tests for the exact-arithmetic invariants.

use proptest::prelude::*;

use stirling_lab::bell::{bell_partitions, bell_series, BellArgs};
use stirling_lab::exact::{binom_extended, binom_standard, Integer, Rational};
use stirling_lab::series::RationalSeries;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=50)
        .prop_map(|(n, d)| Rational::new(Integer::from(n), Integer::from(d)))
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-50i64..=-1, 1i64..=50], 1i64..=50)
        .prop_map(|(n, d)| Rational::new(Integer::from(n), Integer::from(d)))
}

proptest! {
    #[test]
    fn rational_arithmetic_is_exact(a in arb_rational(), b in arb_nonzero_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn pascal_identity(n in 1i64..=60, k in -2i64..=62) {
        prop_assert_eq!(
            binom_standard(n, k),
            binom_standard(n - 1, k - 1) + binom_standard(n - 1, k)
        );
    }

    #[test]
    fn extended_agrees_with_standard_on_nonnegative(a in 0i64..=40, b in -5i64..=45) {
        prop_assert_eq!(binom_extended(a, b), binom_standard(a, b));
    }

    #[test]
    fn extended_symmetry_closure(a in -20i64..=-1, b in -25i64..=25) {
        // both evaluation paths must agree
        prop_assert_eq!(binom_extended(a, b), binom_extended(a, a - b));
    }

    #[test]
    fn series_power_law(
        coeffs in prop::collection::vec((-9i64..=9, 1i64..=9), 1..=7),
        j in 0usize..=3,
        k in 0usize..=3,
    ) {
        let series = RationalSeries::from_coeffs(
            coeffs
                .into_iter()
                .map(|(n, d)| Rational::new(Integer::from(n), Integer::from(d)))
                .collect(),
        );
        prop_assert_eq!(series.pow(j + k), series.pow(j).mul(&series.pow(k)));
    }

    #[test]
    fn bell_routes_agree(
        values in prop::collection::vec((-9i64..=9, 1i64..=9), 8),
        n in 0usize..=8,
    ) {
        let args = BellArgs::new(
            values
                .into_iter()
                .map(|(p, q)| Rational::new(Integer::from(p), Integer::from(q)))
                .collect(),
        );
        for k in 0..=n {
            prop_assert_eq!(bell_partitions(n, k, &args), bell_series(n, k, &args));
        }
    }

    #[test]
    fn bell_scaling(
        a in arb_nonzero_rational(),
        b in arb_nonzero_rational(),
        values in prop::collection::vec((-9i64..=9, 1i64..=9), 8),
        n in 1usize..=8,
    ) {
        let xs = BellArgs::new(
            values
                .into_iter()
                .map(|(p, q)| Rational::new(Integer::from(p), Integer::from(q)))
                .collect(),
        );
        for k in 1..=n {
            let scaled = BellArgs::from_fn(n - k + 1, |i| {
                let mut v = &a * xs.get(i);
                for _ in 0..i {
                    v *= &b;
                }
                v
            });
            let mut factor = Rational::from_integer(Integer::from(1));
            for _ in 0..k {
                factor *= &a;
            }
            for _ in 0..n {
                factor *= &b;
            }
            prop_assert_eq!(
                bell_partitions(n, k, &scaled),
                factor * bell_partitions(n, k, &xs)
            );
        }
    }
}

#[test]
fn bell_first_and_last_columns() {
    let args = BellArgs::from_fn(20, |i| {
        Rational::new(Integer::from(2 * i as i64 - 7), Integer::from(i as i64 + 2))
    });
    for n in 1..=20usize {
        // B(n,1) = x_n
        assert_eq!(&bell_partitions(n, 1, &args), args.get(n));
        // B(n,n) = x_1^n
        let mut x1_pow = Rational::from_integer(Integer::from(1));
        for _ in 0..n {
            x1_pow *= args.get(1);
        }
        assert_eq!(bell_partitions(n, n, &args), x1_pow);
    }
}
