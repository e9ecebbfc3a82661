mod common;

use common::*;
use proptest::prelude::*;
use sigdom::bounds::{evaluate_all, parity_tighten};
use sigdom::construct::{augment_packing, greedy_limited_packing, sdf_from_limited_packing, shrink_tuple_dominating};
use sigdom::{
    enumerate_labeled_trees, BoundKind, BoundName, Mode, Rational, SetRole, Solver,
    StructuralProfile, VertexSet,
};

fn check_graph(n: usize, edges: &[(usize, usize)]) -> Result<(), TestCaseError> {
    let g = graph(n, edges);
    let r = Ref::new(n, edges);
    let (gamma_s, _) = r.signed_domination();
    let rho = r.packing().len();
    let gamma = r.domination().len();
    let profile = StructuralProfile::of(&g);
    let bounds = evaluate_all(&profile, rho, gamma);
    for ((name, expected), bound) in reference_bounds(&r, rho, gamma).into_iter().zip(&bounds) {
        prop_assert_eq!(bound.name, name);
        prop_assert_eq!(bound.applicable, expected.is_some(), "{}", name);
        let Some(x) = expected else { continue };
        prop_assert_eq!(bound.raw, Some(x.to_rational()), "{}", name);
        let tight = match name.kind() {
            BoundKind::Lower => tighten_lower(x, n),
            BoundKind::Upper => tighten_upper(x, n),
        };
        prop_assert_eq!(bound.tightened, Some(tight));
        // the bracket itself
        match name.kind() {
            BoundKind::Lower => prop_assert!(tight <= gamma_s, "{} {} > {}", name, tight, gamma_s),
            BoundKind::Upper => prop_assert!(gamma_s <= tight, "{} {} < {}", name, tight, gamma_s),
        }
    }
    Ok(())
}

#[test]
fn fixture_values() {
    let raw = |n, edges: &[(usize, usize)], name| {
        let g = graph(n, edges);
        let solver = Solver::default();
        let p = StructuralProfile::of(&g);
        let b = evaluate_all(&p, solver.packing_number(&g).unwrap().0, solver.domination_number(&g).unwrap().0);
        let b = b.into_iter().find(|b| b.name == name).unwrap();
        (b.raw, b.tightened)
    };
    let r = |a, b| Some(Rational::new(a, b));
    assert_eq!(raw(6, &complete(6), BoundName::PackingUpper), (r(2, 1), Some(2)));
    assert_eq!(raw(6, &cycle(6), BoundName::PackingUpper), (r(2, 1), Some(2)));
    assert_eq!(raw(7, &path(7), BoundName::PackingUpper), (None, None));
    assert_eq!(raw(5, &complete(5), BoundName::DegreeLeavesLower), (r(1, 1), Some(1)));
    assert_eq!(raw(7, &path(7), BoundName::DegreeLeavesLower), (r(11, 3), Some(5)));
    assert_eq!(raw(5, &star(5), BoundName::DegreeLeavesLower), (None, None));
    assert_eq!(raw(5, &complete(5), BoundName::DegreeParityLower), (r(1, 1), Some(1)));
    assert_eq!(raw(6, &complete(6), BoundName::DegreeParityLower), (r(2, 1), Some(2)));
    assert_eq!(raw(6, &cycle(6), BoundName::DegreeParityLower), (r(2, 1), Some(2)));
    assert_eq!(raw(6, &complete(6), BoundName::DominationLower), (r(2, 1), Some(2)));
    assert_eq!(raw(6, &cycle(6), BoundName::DominationLower), (r(0, 1), Some(0)));
    assert_eq!(raw(5, &complete(5), BoundName::DominationLower), (r(1, 1), Some(1)));
    for name in [BoundName::TreeCoreLower, BoundName::TreeSupportLower, BoundName::TreeOrderLower] {
        assert_eq!(raw(7, &path(7), name), (r(11, 3), Some(5)));
    }
    assert_eq!(raw(4, &path(4), BoundName::TreeCoreLower), (r(4, 1), Some(4)));
    assert_eq!(raw(4, &path(4), BoundName::TreeSupportLower), (r(8, 3), Some(4)));
    let spider = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)];
    assert_eq!(raw(7, &spider, BoundName::TreeSupportLower).0, r(11, 3));
}

#[test]
fn tightening_examples() {
    assert_eq!(parity_tighten(Rational::new(11, 3), 7, BoundKind::Lower), 5);
    assert_eq!(parity_tighten(Rational::from_integer(2), 6, BoundKind::Upper), 2);
    assert_eq!(parity_tighten(Rational::from_integer(0), 6, BoundKind::Lower), 0);
}

#[test]
fn complete_graphs_are_sharp_for_the_general_bounds() {
    for n in 3..=9 {
        let edges = complete(n);
        let r = Ref::new(n, &edges);
        let gamma_s = r.signed_domination().0;
        assert_eq!(gamma_s, if n % 2 == 1 { 1 } else { 2 });
        for (name, value) in reference_bounds(&r, 1, 1).into_iter().take(4) {
            assert_eq!(value.unwrap().to_rational(), Rational::from_integer(gamma_s), "K{n} {name}");
        }
    }
}

#[test]
fn tree_bounds_are_ordered_on_all_small_trees() {
    for n in 2..=7 {
        for t in enumerate_labeled_trees(n).unwrap() {
            let p = StructuralProfile::of(&t);
            let b = evaluate_all(&p, 1, 1);
            let get = |name: BoundName| b.iter().find(|x| x.name == name).unwrap().raw.unwrap();
            let (core, support, order) =
                (get(BoundName::TreeCoreLower), get(BoundName::TreeSupportLower), get(BoundName::TreeOrderLower));
            if p.core_min_degree.is_some() {
                assert!(core >= support, "{t:?}");
            }
            assert!(support >= order, "{t:?}");
        }
    }
}

#[test]
fn constructions_on_fixtures() {
    let c6 = graph(6, &cycle(6));
    let b = greedy_limited_packing(&c6, 1).unwrap();
    let f = sdf_from_limited_packing(&c6, &b).unwrap();
    assert_eq!((f.weight(), f.to_string()), (2, "-++-++".to_string()));
    let b2 = augment_packing(&c6, &b.with_role(SetRole::Packing), 1).unwrap();
    assert_eq!((b2.members(), b2.role()), (&[0, 1, 3][..], SetRole::LimitedPacking(2)));
    let d = shrink_tuple_dominating(&c6, &VertexSet::new(SetRole::TupleDominating(2), [0, 1, 3, 4]), 2).unwrap();
    assert_eq!(d.members(), &[1, 3, 4]);
    assert!(d.is_valid(&c6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bounds_match_reference_and_bracket((n, edges) in arb_graph(9)) {
        check_graph(n, &edges)?;
    }

    #[test]
    fn bounds_bracket_on_connected_graphs((n, edges) in arb_connected(2, 11)) {
        check_graph(n, &edges)?;
    }

    #[test]
    fn packing_upper_identity(rho in 1i64..50, delta in 2i64..60) {
        prop_assert_eq!((2 * rho + delta - 2).div_euclid(2), rho + delta / 2 - 1);
    }

    #[test]
    fn tightened_values_have_the_parity_of_n(num in -200i64..200, den in 1i64..12, n in 1usize..40) {
        let raw = Rational::new(num, den);
        let low = parity_tighten(raw, n, BoundKind::Lower);
        let high = parity_tighten(raw, n, BoundKind::Upper);
        prop_assert_eq!((low - n as i64).rem_euclid(2), 0);
        prop_assert_eq!((high - n as i64).rem_euclid(2), 0);
        prop_assert!(Rational::from_integer(low) >= raw && Rational::from_integer(low - 2) < raw);
        prop_assert!(Rational::from_integer(high) <= raw && Rational::from_integer(high + 2) > raw);
    }

    #[test]
    fn constructive_chain((n, edges) in arb_connected(3, 11)) {
        let g = graph(n, &edges);
        let delta = g.min_degree();
        prop_assume!(delta >= 2);
        let solver = Solver::new(Mode::Oracle);
        let half = delta / 2;
        let (l, packing) = solver.limited_packing_number(&g, half).unwrap();
        let f = sdf_from_limited_packing(&g, &packing).unwrap();
        prop_assert!(f.is_valid(&g));
        prop_assert_eq!(f.weight(), n as i64 - 2 * l as i64);
        let (rho, max_packing) = solver.packing_number(&g).unwrap();
        let closed_form = n as i64 - 2 * ((2 * rho as i64 + delta as i64 - 2) / 2);
        prop_assert!(f.weight() <= closed_form);
        prop_assert!(Ref::of(&g).signed_domination().0 <= f.weight());
        let mut b = max_packing.with_role(SetRole::LimitedPacking(1));
        for k in 1..half {
            b = augment_packing(&g, &b, k).unwrap();
            prop_assert!(b.is_valid(&g));
        }
        prop_assert_eq!(b.len(), rho + half - 1);
        prop_assert!(l >= b.len());
    }

    #[test]
    fn shrinking_tuple_dominating_sets((n, edges) in arb_connected(2, 9)) {
        let g = graph(n, &edges);
        let solver = Solver::new(Mode::Oracle);
        for k in 2..=g.min_degree() + 1 {
            let (_, d) = solver.tuple_domination_number(&g, k).unwrap();
            let smaller = shrink_tuple_dominating(&g, &d, k).unwrap();
            prop_assert!(smaller.is_valid(&g));
            prop_assert_eq!(smaller.len() + 1, d.len());
        }
    }

    #[test]
    fn greedy_packings_are_maximal((n, edges) in arb_graph(12), k in 1usize..4) {
        let g = graph(n, &edges);
        let b = greedy_limited_packing(&g, k).unwrap();
        prop_assert!(b.is_valid(&g));
        for v in (0..n).filter(|&v| !b.contains(v)) {
            let grown = VertexSet::new(SetRole::LimitedPacking(k), b.members().iter().copied().chain([v]));
            prop_assert!(!grown.is_valid(&g));
        }
    }
}
