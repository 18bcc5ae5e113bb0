use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use dioph_core::parser::{is_point, parse_equation, search_integer_points, Equation};
use dioph_core::rational::Rational;

const VARS: [&str; 3] = ["x", "y", "z"];

/// A polynomial as raw `(numerator, denominator, exponents)` terms, possibly
/// with repeated monomials.
type Terms = Vec<(i64, i64, [u32; 3])>;

fn terms(nvars: usize) -> impl Strategy<Value = Terms> {
    let exps = prop::array::uniform3(0u32..=4).prop_filter("degree at most 4", |e| e.iter().sum::<u32>() <= 4);
    prop::collection::vec((-30i64..=30, 1i64..=6, exps), 1..6).prop_map(move |mut ts| {
        for t in &mut ts {
            for e in &mut t.2[nvars..] {
                *e = 0;
            }
        }
        ts
    })
}

/// Written out term by term with explicit products, unsimplified.
fn render(ts: &Terms) -> String {
    let mut parts = Vec::new();
    for (n, d, e) in ts {
        let mut factors = vec![format!("({n}/{d})")];
        for (v, &k) in VARS.iter().zip(e) {
            if k > 0 {
                factors.push(format!("{v}^{k}"));
            }
        }
        parts.push(factors.join("*"));
    }
    parts.join(" + ")
}

/// Direct evaluation of the raw terms.
fn direct(ts: &Terms, point: &[Rational; 3]) -> Rational {
    let mut sum = Rational::zero();
    for (n, d, e) in ts {
        let mut t = Rational::new(BigInt::from(*n), BigInt::from(*d));
        for (x, &k) in point.iter().zip(e) {
            t *= x.pow(k as i32);
        }
        sum += t;
    }
    sum
}

fn assignment(point: &[Rational; 3]) -> BTreeMap<String, Rational> {
    VARS.iter().map(|v| v.to_string()).zip(point.iter().cloned()).collect()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 128,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        ..ProptestConfig::default()
    })]

    #[test]
    fn canonical_printing_round_trips(ts in (1usize..=3).prop_flat_map(terms), rhs in -5i64..5) {
        let eq = parse_equation(&format!("{} = {rhs}", render(&ts))).unwrap();
        let printed = eq.to_string();
        let again: Equation = printed.parse().unwrap();
        prop_assert_eq!(&again, &eq);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn evaluation_matches_direct_substitution(
        ts in terms(3),
        point in prop::array::uniform3(rational()),
        on in any::<bool>(),
    ) {
        let value = direct(&ts, &point);
        let rhs = if on { value.clone() } else { &value + Rational::from_integer(1.into()) };
        let eq = parse_equation(&format!("{} = {rhs}", render(&ts))).unwrap();
        let mut full = assignment(&point);
        full.retain(|v, _| eq.variables.contains(v));
        prop_assert_eq!(is_point(&eq, &full).unwrap(), on);
    }
}

#[test]
fn search_is_symmetric_under_swapping_equal_exponents() {
    for text in ["x^3 + y^3 = 1729", "x^2 + y^2 = 25", "x^2*y + x*y^2 = 30"] {
        let eq = parse_equation(text).unwrap();
        let points = search_integer_points(&eq, 12).unwrap();
        assert!(!points.is_empty(), "{text}");
        for p in &points {
            let swapped = vec![p[1].clone(), p[0].clone()];
            assert!(points.contains(&swapped), "{text}: {p:?}");
        }
        let mut sorted = points.clone();
        sorted.sort();
        assert_eq!(sorted, points, "{text}: output not lexicographic");
    }
}

#[test]
fn search_matches_brute_force_evaluation() {
    let eq = parse_equation("x^2 - 2*y^2 = 1").unwrap();
    let found = search_integer_points(&eq, 20).unwrap();
    let mut expected = Vec::new();
    for x in -20i64..=20 {
        for y in -20i64..=20 {
            if x * x - 2 * y * y == 1 {
                expected.push(vec![BigInt::from(x), BigInt::from(y)]);
            }
        }
    }
    assert_eq!(found, expected);
}
