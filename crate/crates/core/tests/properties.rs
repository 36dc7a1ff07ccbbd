//! Randomized cross-checks: the dynamic programs against brute-force
//! enumeration, the distance function against the metric axioms, and the
//! density laws against their definitions.

mod common;

use lendens::engine::{
    catenary_degree_of_set, distance, factorizations, length_set, DEFAULT_BUDGET,
};
use lendens::invariants::length_density;
use lendens::monoid::{direct_sum, make_affine, make_numerical, Element, MonoidPresentation};
use lendens::{ratio, Rational};
use num_integer::Integer;
use num_traits::One;
use proptest::collection::vec;
use proptest::prelude::*;

fn numerical_gens() -> impl Strategy<Value = Vec<u64>> {
    vec(2u64..40, 1..4).prop_filter("coprime generating set", |gens| {
        gens.iter().fold(0u64, |acc, &g| acc.gcd(&g)) == 1
    })
}

fn minimal_gens(m: &MonoidPresentation) -> Vec<u64> {
    match m {
        MonoidPresentation::Numerical(n) => n.generators().to_vec(),
        _ => unreachable!(),
    }
}

/// A guaranteed member: a random nonnegative combination of the
/// generators, cycling the count list as needed.
fn combine(gens: &[u64], counts: &[u64]) -> u64 {
    gens.iter()
        .zip(counts.iter().cycle())
        .map(|(&g, &c)| g * c)
        .sum()
}

fn affine_instance() -> impl Strategy<Value = (Vec<Vec<u64>>, Vec<u64>)> {
    (1usize..=2).prop_flat_map(|dim| {
        (
            vec(
                vec(0u64..6, dim..=dim)
                    .prop_filter("nonzero atom", |g| g.iter().any(|&c| c > 0)),
                1..=3,
            ),
            vec(0u64..4, 3),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn line_dp_matches_enumeration(
        raw in numerical_gens(),
        counts in vec(0u64..6, 1..4),
        probe in 1u64..200,
    ) {
        let m = make_numerical(&raw).unwrap();
        let gens = minimal_gens(&m);
        let member = combine(&gens, &counts);
        for v in [member, probe] {
            let oracle = common::numerical_factorizations(&gens, v);
            let engine = factorizations(&m, &Element::Natural(v), DEFAULT_BUDGET).unwrap();
            prop_assert!(engine.complete);
            prop_assert_eq!(&engine.factorizations, &oracle);
            let oracle_lengths = common::lengths_of(&oracle);
            match length_set(&m, &Element::Natural(v)) {
                Ok(ls) => prop_assert_eq!(ls.values(), oracle_lengths.as_slice()),
                Err(_) => prop_assert!(oracle.is_empty()),
            }
        }
    }

    #[test]
    fn box_dp_matches_enumeration((raw, counts) in affine_instance()) {
        let m = make_affine(&raw).unwrap();
        let gens = match &m {
            MonoidPresentation::Affine(a) => a.generators().to_vec(),
            _ => unreachable!(),
        };
        let dim = gens[0].len();
        let mut member = vec![0u64; dim];
        for (g, &c) in gens.iter().zip(counts.iter().cycle()) {
            for (m_c, &g_c) in member.iter_mut().zip(g.iter()) {
                *m_c += g_c * c;
            }
        }
        let oracle = common::vector_factorizations(&gens, &member);
        let engine = factorizations(&m, &Element::Vector(member.clone()), DEFAULT_BUDGET).unwrap();
        prop_assert!(engine.complete);
        prop_assert_eq!(&engine.factorizations, &oracle);
        let ls = length_set(&m, &Element::Vector(member)).unwrap();
        let oracle_lengths = common::lengths_of(&oracle);
        prop_assert_eq!(ls.values(), oracle_lengths.as_slice());
    }

    #[test]
    fn distance_satisfies_metric_axioms(
        (a, b, c) in (1usize..6).prop_flat_map(|len| {
            (vec(0u64..10, len..=len), vec(0u64..10, len..=len), vec(0u64..10, len..=len))
        }),
    ) {
        prop_assert_eq!(distance(&a, &a), 0);
        prop_assert_eq!(distance(&a, &b), distance(&b, &a));
        prop_assert_eq!(distance(&a, &b), common::oracle_distance(&a, &b));
        if a != b {
            prop_assert!(distance(&a, &b) > 0);
        }
        prop_assert!(distance(&a, &c) <= distance(&a, &b) + distance(&b, &c));
        prop_assert!(distance(&a, &b) <= distance(&a, &c) + distance(&c, &b));
        prop_assert!(distance(&b, &c) <= distance(&b, &a) + distance(&a, &c));
    }

    #[test]
    fn density_respects_delta_bounds(
        raw in numerical_gens(),
        counts in vec(0u64..8, 1..5),
    ) {
        let m = make_numerical(&raw).unwrap();
        let gens = minimal_gens(&m);
        let member = combine(&gens, &counts);
        let ls = length_set(&m, &Element::Natural(member)).unwrap();
        match length_density(&ls) {
            None => prop_assert_eq!(ls.len(), 1),
            Some(ld) => {
                let deltas = ls.delta();
                let lower = ratio(1, *deltas.last().unwrap() as i64);
                let upper = ratio(1, deltas[0] as i64);
                prop_assert!(lower <= ld && ld <= upper);
                prop_assert_eq!(ld == lower, deltas.len() == 1);
                prop_assert_eq!(ld == upper, deltas.len() == 1);
                prop_assert_eq!(ld == Rational::one(), ls.is_interval());
            }
        }
    }

    #[test]
    fn mediant_law_on_coproducts(
        raw1 in numerical_gens(),
        counts1 in vec(0u64..8, 1..5),
        raw2 in numerical_gens(),
        counts2 in vec(0u64..8, 1..5),
    ) {
        let m1 = make_numerical(&raw1).unwrap();
        let m2 = make_numerical(&raw2).unwrap();
        let u = combine(&minimal_gens(&m1), &counts1);
        let v = combine(&minimal_gens(&m2), &counts2);
        let ls_u = length_set(&m1, &Element::Natural(u)).unwrap();
        let ls_v = length_set(&m2, &Element::Natural(v)).unwrap();
        let (Some(ld_u), Some(ld_v)) = (length_density(&ls_u), length_density(&ls_v)) else {
            return Ok(());
        };
        let sum = direct_sum(vec![m1, m2]).unwrap();
        let pair = Element::Tuple(vec![Element::Natural(u), Element::Natural(v)]);
        let ls_pair = length_set(&sum, &pair).unwrap();
        let ld_pair = length_density(&ls_pair).unwrap();
        let med = common::mediant(
            ls_u.len() as u64 - 1,
            ls_u.max() - ls_u.min(),
            ls_v.len() as u64 - 1,
            ls_v.max() - ls_v.min(),
        );
        prop_assert!(ld_pair >= med);
        let floor = ld_u.clone().min(ld_v.clone());
        prop_assert!(med >= floor);
        if ld_u != ld_v {
            prop_assert!(med > floor);
            prop_assert!(ld_pair > floor);
        }
    }

    #[test]
    fn catenary_agrees_with_threshold_oracle(
        raw in numerical_gens(),
        counts in vec(0u64..6, 1..4),
    ) {
        let m = make_numerical(&raw).unwrap();
        let member = combine(&minimal_gens(&m), &counts);
        let set = factorizations(&m, &Element::Natural(member), DEFAULT_BUDGET).unwrap();
        prop_assert!(set.complete);
        if !(2..=12).contains(&set.factorizations.len()) {
            return Ok(());
        }
        let engine = catenary_degree_of_set(&set).unwrap();
        prop_assert_eq!(engine, common::oracle_catenary(&set.factorizations));
    }
}
