//! Randomized properties over generated graphs, formulas, and matroids.

mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use geoconvex::convexity::{hull, is_convex, is_halfspace};
use geoconvex::enumeration::{enumerate_bruteforce, enumerate_flashlight};
use geoconvex::graph::Graph;
use geoconvex::matroid::{graphic_matroid, Matroid};
use geoconvex::separation::{shadow, shadow_closure};
use geoconvex::twosat::{Lit, TwoSatFormula};
use geoconvex::vertex_set::VertexSet;

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<u32>(), n - 1),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let mut edges = HashSet::new();
                for v in 1..n {
                    edges.insert((parents[v - 1] as usize % v, v));
                }
                let mut e = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if extra[e] {
                            edges.insert((i, j));
                        }
                        e += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
    })
}

fn graph_and_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (
            Just(g),
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(|(g, bits_s, bits_t)| {
                let pick = |bits: &[bool]| {
                    VertexSet::from_members(
                        bits.len(),
                        bits.iter().enumerate().filter_map(|(i, &b)| b.then_some(i)),
                    )
                };
                let (s, t) = (pick(&bits_s), pick(&bits_t));
                (g, s, t)
            })
    })
}

fn formula() -> impl Strategy<Value = TwoSatFormula> {
    (1usize..=7).prop_flat_map(|vars| {
        proptest::collection::vec(
            (0..vars, 0..vars, any::<bool>(), any::<bool>()),
            0..=20,
        )
        .prop_map(move |clauses| {
            let lit = |v, pos| if pos { Lit::pos(v) } else { Lit::neg(v) };
            let mut f = TwoSatFormula::new(vars);
            for (a, b, pa, pb) in clauses {
                f.add_clause(lit(a, pa), lit(b, pb));
            }
            f
        })
    })
}

proptest! {
    #[test]
    fn hull_is_extensive_monotone_idempotent((g, s, t) in graph_and_sets(7)) {
        let d = common::dist(&g);
        let hs = hull(&d, &s);
        prop_assert!(s.is_subset(&hs));
        prop_assert_eq!(hull(&d, &hs).clone(), hs.clone());
        prop_assert!(is_convex(&d, &hs));
        let su = s.union(&t);
        prop_assert!(hs.is_subset(&hull(&d, &su)));
    }

    #[test]
    fn halfspace_status_matches_complement((g, s, _t) in graph_and_sets(7)) {
        let d = common::dist(&g);
        prop_assert_eq!(is_halfspace(&d, &s), is_halfspace(&d, &s.complement()));
    }

    #[test]
    fn shadow_contains_and_grows_with_target((g, s, t) in graph_and_sets(7)) {
        prop_assume!(!s.is_empty() && !t.is_empty());
        let d = common::dist(&g);
        let sh = shadow(&d, &s, &t).unwrap();
        prop_assert!(s.is_subset(&sh));
        let bigger = s.union(&t);
        let sh_bigger = shadow(&d, &bigger, &t).unwrap();
        prop_assert!(sh.is_subset(&sh_bigger));
    }

    #[test]
    fn solver_output_satisfies_and_counts_agree(f in formula()) {
        let models = f.count_models_bruteforce().unwrap();
        match f.solve() {
            Some(assignment) => {
                prop_assert!(f.evaluate(&assignment));
                prop_assert!(models > 0);
            }
            None => prop_assert_eq!(models, 0),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_outputs_are_convex_fixpoints((g, s, t) in graph_and_sets(6)) {
        prop_assume!(!s.is_empty() && !t.is_empty());
        let d = common::dist(&g);
        let out = shadow_closure(&d, &s, &t).unwrap();
        prop_assert!(is_convex(&d, &out.a));
        prop_assert!(is_convex(&d, &out.b));
        prop_assert_eq!(shadow(&d, &out.a, &out.b).unwrap(), out.a.clone());
        prop_assert_eq!(shadow(&d, &out.b, &out.a).unwrap(), out.b.clone());
        let again = shadow_closure(&d, &out.a, &out.b).unwrap();
        prop_assert_eq!(again.a, out.a);
        prop_assert_eq!(again.b, out.b);
        prop_assert_eq!(again.trace.len(), 1);
    }

    #[test]
    fn flashlight_matches_subset_scan(g in connected_graph(6)) {
        let d = common::dist(&g);
        let run = enumerate_flashlight(&g, &d);
        let brute = enumerate_bruteforce(&g, &d).unwrap();
        if run.complete {
            prop_assert_eq!(run.halfspaces, brute);
        } else {
            // A pruned run can only under-report.
            for h in &run.halfspaces {
                prop_assert!(brute.contains(h));
            }
        }
    }

    #[test]
    fn exchange_validation_survives_relabeling(g in connected_graph(5), keys in proptest::collection::vec(any::<u32>(), 10)) {
        prop_assume!(g.edge_count() <= 10);
        let m = graphic_matroid(&g).unwrap();
        let ground = m.ground_size();
        let mut perm: Vec<usize> = (0..ground).collect();
        perm.sort_by_key(|&i| keys[i]);
        let relabeled: Vec<Vec<usize>> = m
            .bases()
            .iter()
            .map(|basis| basis.iter().map(|&e| perm[e]).collect())
            .collect();
        let rebuilt = Matroid::from_bases(ground, relabeled);
        prop_assert!(rebuilt.is_ok());
        prop_assert_eq!(rebuilt.unwrap().basis_count(), m.basis_count());
    }
}
