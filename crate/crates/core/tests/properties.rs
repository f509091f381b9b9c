mod common;

use proptest::prelude::*;

use tdcrit::canon::{canonical_form, canonical_labeling, is_isomorphic};
use tdcrit::criticality::{is_gamma_t_critical, lemma2_noncritical_witness};
use tdcrit::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use tdcrit::solver::{
    is_total_dominating_set, total_domination_number, total_domination_number_without, GammaValue,
};
use tdcrit::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, prop::sample::select(vec![0.2, 0.5, 0.8]))
        .prop_flat_map(|(n, p)| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                prop::collection::vec(prop::bool::weighted(p), pairs),
            )
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in graph(9).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(to_graph6(&g.permute(&canonical_labeling(&g))).into_bytes(), canonical_form(&g));
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in graph(30)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g.clone());
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn solver_matches_exhaustive_oracle(g in graph(10)) {
        let r = total_domination_number(&g);
        match common::gamma_t(&g) {
            Some(k) => {
                prop_assert_eq!(r.value, GammaValue::Finite(k));
                let w = r.witness.unwrap();
                prop_assert_eq!(w.len(), k);
                prop_assert!(is_total_dominating_set(&g, &w));
            }
            None => {
                prop_assert_eq!(r.value, GammaValue::Infeasible);
                prop_assert!(r.witness.is_none());
            }
        }
    }

    #[test]
    fn deletion_matches_induced_subgraph((g, v) in graph(10).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..n)
    })) {
        let keep: VertexSet = (0..g.order()).filter(|&u| u != v).collect();
        prop_assert_eq!(g.delete_vertex(v).unwrap(), g.induced_subgraph(&keep).unwrap());
        let r = total_domination_number_without(&g, v);
        prop_assert_eq!(r.value.finite(), common::gamma_t_without(&g, v));
        if let Some(w) = r.witness {
            prop_assert!(!w.contains(v));
        }
    }

    #[test]
    fn adding_an_edge_never_raises_gamma_t((g, i, j) in graph(10).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..n, 0..n)
    })) {
        prop_assume!(i != j);
        let before = total_domination_number(&g).value;
        let mut h = g.clone();
        h.add_edge(i, j).unwrap();
        prop_assert!(total_domination_number(&h).value <= before);
    }

    #[test]
    fn criticality_matches_definition(g in graph(8)) {
        match is_gamma_t_critical(&g) {
            Ok(r) => prop_assert_eq!(r.is_critical(), common::is_critical(&g)),
            Err(_) => prop_assert!(g.order() == 0 || g.has_isolated_vertex()),
        }
    }

    #[test]
    fn lemma2_witness_rules_out_criticality(g in graph(8)) {
        prop_assume!(!g.has_isolated_vertex());
        if let Some((u, v)) = lemma2_noncritical_witness(&g) {
            prop_assert!(!g.has_edge(u, v));
            prop_assert!(g.neighbors(u).is_subset(g.neighbors(v)));
            prop_assert!(!common::is_critical(&g));
        }
    }

    #[test]
    fn amalgamation_order_and_degree((a, b, v1, v2) in (graph(8), graph(8)).prop_flat_map(|(a, b)| {
        let (n1, n2) = (a.order(), b.order());
        (Just(a), Just(b), 0..n1, 0..n2)
    })) {
        let g = Graph::vertex_amalgamation(&a, v1, &b, v2).unwrap();
        prop_assert_eq!(g.order(), a.order() + b.order() - 1);
        prop_assert_eq!(g.degree(0), a.degree(v1) + b.degree(v2));
        prop_assert_eq!(g.edge_count(), a.edge_count() + b.edge_count());
    }
}
