mod common;

use common::Adj;
use proptest::prelude::*;
use propalg::{Graph, LabelledGraph, PropertyDef, PropertyView, Universe};

fn graph_strategy(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut word = 0u64;
            for (k, b) in bits.iter().enumerate() {
                word |= (*b as u64) << k;
            }
            Adj::from_upper_bits(n, word).to_graph()
        })
    })
}

#[test]
fn orders_one_to_six_match_labelled_dedup() {
    for n in 1..=6 {
        let u = Universe::enumerate(n).unwrap();
        for k in 1..=n {
            assert_eq!(u.count_of_order(k), common::labelled_dedup(k).len(), "order {k}");
        }
    }
}

#[test]
fn universe_is_sorted_and_closed_under_relations() {
    let u = Universe::enumerate(5).unwrap();
    assert!(u.graphs().windows(2).all(|w| w[0] < w[1]));
    let rel = u.relations();
    for (i, g) in u.graphs().iter().enumerate() {
        for &d in &rel.vertex_deletions[i] {
            assert_eq!(u.graph(d).order() + 1, g.order());
            assert!(g.contains_induced(u.graph(d)));
        }
        for &d in &rel.edge_deletions[i] {
            assert_eq!(u.graph(d).edge_count() + 1, g.edge_count());
        }
    }
}

#[test]
fn checksum_and_export_are_stable() {
    let a = Universe::enumerate(5).unwrap();
    let b = Universe::enumerate(5).unwrap();
    assert_eq!(a.checksum(), b.checksum());
    assert_eq!(Universe::from_graph6_lines(&a.to_graph6_lines()).unwrap().checksum(), a.checksum());
    assert!(Universe::enumerate(9).is_err());
}

proptest! {
    #[test]
    fn canonical_form_matches_oracle(g in graph_strategy(7), seed in any::<u64>()) {
        let adj = Adj::from_graph(&g);
        // relabel by a seeded rotation-and-reversal permutation
        let n = adj.n;
        let shift = (seed as usize) % n;
        let perm: Vec<usize> = (0..n).map(|i| if seed & 1 == 0 { (i + shift) % n } else { (n - 1 - i + shift) % n }).collect();
        let mut edges = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if adj.adj(i, j) {
                    edges.push((perm[i], perm[j]));
                }
            }
        }
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(h, g);
        prop_assert_eq!(common::canonical_key(&Adj::from_graph(&h)), common::canonical_key(&adj));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(8)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(8)) {
        prop_assert_eq!(g.complement().complement(), g);
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn union_and_join_commute_and_are_dual(a in graph_strategy(4), b in graph_strategy(4)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(u, b.disjoint_union(&a).unwrap());
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j, b.join(&a).unwrap());
        prop_assert_eq!(j.complement(), a.complement().disjoint_union(&b.complement()).unwrap());
        prop_assert!(u.contains_induced(&a) && j.contains_induced(&b));
        prop_assert!(u.contains_disjoint_induced(&a, &b));
    }

    #[test]
    fn labelled_canonical_form_agrees(g in graph_strategy(6)) {
        let l: LabelledGraph = *g.labelled();
        prop_assert_eq!(l.canonical_form(), g);
    }

    #[test]
    fn closures_are_extensive_monotone_idempotent(bits in prop::collection::vec(any::<bool>(), 18), extra in 0usize..18) {
        let u = Universe::enumerate(4).unwrap();
        let chosen: Vec<Graph> = u.graphs().iter().zip(&bits).filter(|(_, b)| **b).map(|(g, _)| *g).collect();
        let p = PropertyView::from_graphs(&u, &chosen).unwrap();
        let mut q = p.clone();
        q.set(extra, true);
        for close in [PropertyView::induced_hereditary_closure, PropertyView::geq_closure, PropertyView::hereditary_closure_down] {
            let c = close(&p);
            prop_assert!(p.is_subset(&c).unwrap());
            prop_assert!(c.is_subset(&close(&q)).unwrap());
            prop_assert_eq!(close(&c), c);
        }
    }

    #[test]
    fn view_hex_round_trip(bits in prop::collection::vec(any::<bool>(), 34)) {
        let u = Universe::enumerate(5).unwrap();
        let chosen: Vec<Graph> = u.graphs().iter().zip(&bits).filter(|(_, b)| **b).map(|(g, _)| *g).collect();
        let p = PropertyView::from_graphs(&u, &chosen).unwrap();
        prop_assert_eq!(PropertyView::from_hex(&u, &p.to_hex()).unwrap(), p);
    }
}

#[test]
fn materialized_views_match_predicates() {
    let u = Universe::enumerate(6).unwrap();
    let o = PropertyDef::O.materialize(&u);
    for (i, g) in u.graphs().iter().enumerate() {
        assert_eq!(o.contains_index(i), g.edge_count() == 0);
    }
}
