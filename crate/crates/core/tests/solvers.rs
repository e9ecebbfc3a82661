mod common;

use common::*;
use proptest::prelude::*;
use sigdom::solver::is_packing;
use sigdom::{
    domination_number, limited_packing_number, packing_number, signed_domination,
    tuple_domination_number, Error, Mode, SetRole, Solver, SolverCaps,
};

const MODES: [Mode; 2] = [Mode::Oracle, Mode::BranchAndBound];

#[test]
fn small_fixtures() {
    type Case = (&'static str, Vec<(usize, usize)>, usize, i64, &'static str);
    let cases: [Case; 8] = [
        ("P7", path(7), 7, 5, "++-++++"),
        ("C6", cycle(6), 6, 2, "-++-++"),
        ("K1,4", star(5), 5, 5, "+++++"),
        ("K5", complete(5), 5, 1, "--+++"),
        ("K6", complete(6), 6, 2, "--++++"),
        ("P4", path(4), 4, 4, "++++"),
        ("K1", vec![], 1, 1, "+"),
        ("K3", complete(3), 3, 1, "-++"),
    ];
    for (name, edges, n, weight, witness) in cases {
        let g = graph(n, &edges);
        for mode in MODES {
            let (w, f) = signed_domination(&g, mode).unwrap();
            assert_eq!((w, f.to_string().as_str()), (weight, witness), "{name} {mode}");
        }
    }
}

#[test]
fn subset_fixtures() {
    let p7 = graph(7, &path(7));
    let c6 = graph(6, &cycle(6));
    for mode in MODES {
        let (gamma, d) = domination_number(&p7, mode).unwrap();
        assert_eq!((gamma, d.members()), (3, &[0, 2, 5][..]), "{mode}");
        assert!(d.is_valid(&p7));

        let (rho, b) = packing_number(&c6, mode).unwrap();
        assert_eq!((rho, b.members()), (2, &[0, 3][..]));
        assert_eq!(packing_number(&p7, mode).unwrap().1.members(), &[0, 3, 6]);

        let (l2, b) = limited_packing_number(&c6, 2, mode).unwrap();
        assert_eq!((l2, b.members(), b.role()), (4, &[0, 1, 3, 4][..], SetRole::LimitedPacking(2)));
        assert_eq!(limited_packing_number(&c6, 1, mode).unwrap().0, 2);

        let (t2, d) = tuple_domination_number(&c6, 2, mode).unwrap();
        assert_eq!((t2, d.members()), (4, &[0, 1, 3, 4][..]));
        assert_eq!(limited_packing_number(&p7, 2, mode).unwrap().0, 5);
        assert_eq!(tuple_domination_number(&p7, 2, mode).unwrap().0, 6);
    }
}

#[test]
fn reference_agrees_on_fixtures() {
    let p7 = Ref::new(7, &path(7));
    assert_eq!(p7.signed_domination().0, 5);
    assert_eq!(p7.domination(), vec![0, 2, 5]);
    let c6 = Ref::new(6, &cycle(6));
    assert_eq!(c6.packing(), vec![0, 3]);
    assert_eq!(c6.limited_packing(2).len(), 4);
    assert_eq!(c6.tuple_domination(2).len(), 4);
}

#[test]
fn parameter_errors() {
    let c6 = graph(6, &cycle(6));
    for mode in MODES {
        assert!(matches!(tuple_domination_number(&c6, 0, mode), Err(Error::InvalidParameter(_))));
        assert!(matches!(tuple_domination_number(&c6, 4, mode), Err(Error::InvalidParameter(_))));
        assert!(matches!(limited_packing_number(&c6, 0, mode), Err(Error::InvalidParameter(_))));
    }
    assert_eq!(tuple_domination_number(&c6, 3, Mode::BranchAndBound).unwrap().0, 6);
}

#[test]
fn caps_are_enforced() {
    let big = graph(21, &path(21));
    assert!(matches!(
        signed_domination(&big, Mode::Oracle),
        Err(Error::CapExceeded { n: 21, cap: 20, .. })
    ));
    assert_eq!(signed_domination(&big, Mode::BranchAndBound).unwrap().0, 21 - 2 * 6);
    let tight = Solver::new(Mode::BranchAndBound).with_caps(SolverCaps {
        signed_bnb: 10,
        subset_bnb: 10,
        ..SolverCaps::default()
    });
    assert!(matches!(tight.signed_domination(&big), Err(Error::CapExceeded { cap: 10, .. })));
    assert!(matches!(tight.domination_number(&big), Err(Error::CapExceeded { .. })));
}

#[test]
fn moderate_graphs_agree_across_modes() {
    // larger than the property tests reach, still within the oracle caps
    let mut edges = cycle(16);
    edges.extend([(0, 5), (3, 11), (7, 14), (2, 9), (4, 12), (6, 13)]);
    let g = graph(16, &edges);
    let (a, b) = (Solver::new(Mode::Oracle), Solver::default());
    assert_eq!(a.signed_domination(&g).unwrap(), b.signed_domination(&g).unwrap());
    assert_eq!(a.domination_number(&g).unwrap(), b.domination_number(&g).unwrap());
    assert_eq!(a.limited_packing_number(&g, 2).unwrap(), b.limited_packing_number(&g, 2).unwrap());
    assert_eq!(a.tuple_domination_number(&g, 2).unwrap(), b.tuple_domination_number(&g, 2).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn signed_domination_matches_reference((n, edges) in arb_graph(10)) {
        let g = graph(n, &edges);
        let (weight, labels) = Ref::new(n, &edges).signed_domination();
        for mode in MODES {
            let (w, f) = signed_domination(&g, mode).unwrap();
            prop_assert_eq!(w, weight);
            prop_assert_eq!(f.values(), &labels[..]);
            prop_assert!(f.is_valid(&g));
            prop_assert_eq!((w - n as i64).rem_euclid(2), 0);
        }
    }

    #[test]
    fn subset_parameters_match_reference((n, edges) in arb_graph(9)) {
        let g = graph(n, &edges);
        let r = Ref::new(n, &edges);
        let delta = g.min_degree();
        for mode in MODES {
            let (gamma, d) = domination_number(&g, mode).unwrap();
            prop_assert_eq!((gamma, d.members()), (r.domination().len(), &r.domination()[..]));
            let (rho, p) = packing_number(&g, mode).unwrap();
            prop_assert_eq!(p.members(), &r.packing()[..]);
            prop_assert_eq!(rho, p.len());
            prop_assert!(is_packing(&g, p.members()));
            for k in 1..=delta + 1 {
                let (t, d) = tuple_domination_number(&g, k, mode).unwrap();
                prop_assert_eq!(d.members(), &r.tuple_domination(k)[..]);
                prop_assert_eq!(t, d.len());
            }
            for k in 1..=3 {
                let (l, b) = limited_packing_number(&g, k, mode).unwrap();
                prop_assert_eq!(b.members(), &r.limited_packing(k)[..]);
                prop_assert_eq!(l, b.len());
            }
        }
    }

    #[test]
    fn packing_equals_one_limited_packing((n, edges) in arb_graph(10)) {
        let g = graph(n, &edges);
        prop_assert_eq!(
            packing_number(&g, Mode::BranchAndBound).unwrap().0,
            limited_packing_number(&g, 1, Mode::BranchAndBound).unwrap().0
        );
    }

    #[test]
    fn branch_and_bound_agrees_with_oracle_on_larger_graphs((n, edges) in arb_connected(12, 16)) {
        let g = graph(n, &edges);
        let (a, b) = (Solver::new(Mode::Oracle), Solver::default());
        prop_assert_eq!(a.signed_domination(&g).unwrap(), b.signed_domination(&g).unwrap());
        prop_assert_eq!(a.domination_number(&g).unwrap(), b.domination_number(&g).unwrap());
        let k = g.min_degree() / 2 + 1;
        prop_assert_eq!(a.limited_packing_number(&g, k).unwrap(), b.limited_packing_number(&g, k).unwrap());
        prop_assert_eq!(a.tuple_domination_number(&g, k).unwrap(), b.tuple_domination_number(&g, k).unwrap());
    }

    #[test]
    fn leaves_supports_and_isolated_are_positive((n, edges) in arb_graph(12)) {
        let g = graph(n, &edges);
        let r = Ref::new(n, &edges);
        let (w, f) = signed_domination(&g, Mode::BranchAndBound).unwrap();
        for v in (0..n).filter(|&v| r.degree(v) <= 1).chain(r.supports()) {
            prop_assert_eq!(f.value(v), 1);
        }
        if r.core().is_empty() {
            prop_assert_eq!(w, n as i64);
        }
    }
}
