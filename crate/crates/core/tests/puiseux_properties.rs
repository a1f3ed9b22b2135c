use std::cmp::Ordering;

use num_traits::Zero;
use proptest::prelude::*;
use vanhom_core::puiseux::{parse_series, ExtRational, PuiseuxSeries, Rational, Velocity};

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn exact_series() -> impl Strategy<Value = PuiseuxSeries> {
    prop::collection::vec(((-6i64..12, 1i64..4), (-9i64..10, 1i64..5)), 0..5).prop_map(|terms| {
        PuiseuxSeries::new(
            terms
                .into_iter()
                .map(|((en, ed), (cn, cd))| (rational(en, ed), rational(cn, cd))),
            ExtRational::Infinity,
        )
    })
}

fn truncated_series() -> impl Strategy<Value = PuiseuxSeries> {
    (exact_series(), prop::option::of(-2i64..14)).prop_map(|(s, p)| match p {
        Some(p) => s.truncate(&ExtRational::integer(p)),
        None => s,
    })
}

fn cmp(a: &PuiseuxSeries, b: &PuiseuxSeries) -> Ordering {
    a.compare(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in exact_series(), b in exact_series(), c in exact_series()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &PuiseuxSeries::zero(), a.clone());
        prop_assert_eq!(&a * &PuiseuxSeries::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn total_order(a in exact_series(), b in exact_series(), c in exact_series()) {
        prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
        prop_assert_eq!(cmp(&a, &b) == Ordering::Equal, a == b);
        if cmp(&a, &b) != Ordering::Greater && cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(cmp(&a, &c), Ordering::Greater);
        }
        // translation and positive scaling preserve the order
        prop_assert_eq!(cmp(&(&a + &c), &(&b + &c)), cmp(&a, &b));
        let sq = &(&c * &c) + &PuiseuxSeries::t_pow(rational(50, 1));
        prop_assert_eq!(sq.signum().unwrap(), Ordering::Greater);
        prop_assert_eq!(cmp(&(&a * &sq), &(&b * &sq)), cmp(&a, &b));
    }

    #[test]
    fn valuation_laws(a in exact_series(), b in exact_series()) {
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        prop_assert_eq!((&a * &b).valuation().unwrap(), &va + &vb);
        let vs = (&a + &b).valuation().unwrap();
        let lower = va.clone().min(vb.clone());
        prop_assert!(vs >= lower);
        if va != vb {
            prop_assert_eq!(vs, lower);
        }
    }

    #[test]
    fn truncated_arithmetic_is_conservative(a in truncated_series(), b in exact_series(), p in 0i64..10) {
        // any truncation of an exact computation agrees with computing on truncations
        let exact_sum = &a + &b;
        let cut = ExtRational::integer(p);
        prop_assert_eq!((&a.truncate(&cut) + &b).truncate(&cut), exact_sum.truncate(&cut));
        let prod = &a * &b;
        for (e, _) in prod.terms() {
            prop_assert!(ExtRational::Finite(e.clone()) < *prod.precision());
        }
        if let (Ok(va), Ok(vb)) = (a.valuation(), b.valuation()) {
            if !prod.terms().is_empty() || prod.is_exact() {
                prop_assert_eq!(prod.valuation().unwrap(), &va + &vb);
            }
        }
    }

    #[test]
    fn text_round_trip(a in truncated_series()) {
        prop_assert_eq!(parse_series(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn velocities_are_convex_subgroups(
        x in exact_series(),
        y in exact_series(),
        q in (-4i64..10, 1i64..3),
        strict in any::<bool>(),
    ) {
        let v = Velocity { threshold: rational(q.0, q.1), strict };
        let (in_x, in_y) = (v.contains(&x).unwrap(), v.contains(&y).unwrap());
        prop_assert!(v.contains(&PuiseuxSeries::zero()).unwrap());
        if in_x && in_y {
            prop_assert!(v.contains(&(&x + &y)).unwrap());
        }
        prop_assert_eq!(v.contains(&-&x).unwrap(), in_x);
        if in_x && cmp(&y.abs().unwrap(), &x.abs().unwrap()) != Ordering::Greater {
            prop_assert!(in_y);
        }
    }
}

#[test]
fn t_is_positive_and_infinitesimal() {
    let t = PuiseuxSeries::t_pow(rational(1, 1));
    assert_eq!(t.signum().unwrap(), Ordering::Greater);
    for n in (1..=1_000_000i64).step_by(997).chain([1_000_000]) {
        let inv = PuiseuxSeries::constant(rational(1, n));
        assert_eq!(t.compare(&inv).unwrap(), Ordering::Less, "n = {n}");
    }
    assert!(!PuiseuxSeries::t_pow(Rational::zero()).is_zero());
}
