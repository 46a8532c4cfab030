mod common;

use common::Adj;
use propalg::properties::classes::{self, Relation};
use propalg::properties::generating::{build_uniform, gen_filter_2star, is_generating_set_up_to, CrossConfig};
use propalg::properties::{parse_definitions, Builtin, Definitions};
use propalg::{Graph, PropertyDef, Universe};

#[test]
fn bipartite_and_forests_match_oracles() {
    let u = Universe::enumerate(7).unwrap();
    let bip = PropertyDef::Builtin(Builtin::Bipartite).materialize(&u);
    let forests = PropertyDef::Builtin(Builtin::Forests).materialize(&u);
    let oo = PropertyDef::Product(vec![PropertyDef::O, PropertyDef::O]).materialize(&u);
    for (i, g) in u.graphs().iter().enumerate() {
        let a = Adj::from_graph(g);
        assert_eq!(bip.contains_index(i), common::bipartite_bfs(&a), "{g}");
        assert_eq!(forests.contains_index(i), common::is_forest(&a), "{g}");
        assert_eq!(oo.contains_index(i), bip.contains_index(i), "{g}");
    }
}

#[test]
fn split_is_the_product_of_edgeless_and_complete() {
    let u = Universe::enumerate(6).unwrap();
    let split = PropertyDef::Builtin(Builtin::Split).materialize(&u);
    let ok = PropertyDef::Product(vec![PropertyDef::O, PropertyDef::K]).materialize(&u);
    assert_eq!(split, ok);
    assert!(!split.contains(&Graph::cycle(4)));
    assert!(split.contains(&Graph::complete(4).remove_edge(0, 1)));
}

#[test]
fn class_verdicts() {
    let u = Universe::enumerate(6).unwrap();
    let forests = PropertyDef::Builtin(Builtin::Forests).materialize(&u);
    assert!(classes::is_hereditary_up_to(&forests).holds);
    assert!(classes::is_additive_up_to(&forests).holds);
    assert!(classes::is_hereditary_compositive_up_to(&forests).holds);
    let certs = PropertyDef::Builtin(Builtin::Forests).certificates();
    assert!(certs.hereditary && certs.induced_hereditary);
    let cwp = PropertyDef::Builtin(Builtin::CliqueWithPendants).materialize(&u);
    assert!(classes::is_induced_hereditary_up_to(&cwp).holds);
    assert_eq!(Relation::Induced, Relation::Induced);
}

#[test]
fn analytic_certificates_agree_with_exhaustive_checks() {
    let u = Universe::enumerate(5).unwrap();
    let defs = [
        PropertyDef::O,
        PropertyDef::K,
        PropertyDef::edgeless_upto(3),
        PropertyDef::complete_upto(2),
        PropertyDef::Builtin(Builtin::Bipartite),
        PropertyDef::Builtin(Builtin::Split),
        PropertyDef::Builtin(Builtin::BoundedOrder(3)),
        PropertyDef::PlusG(Graph::path(3)),
        PropertyDef::MinusG(Graph::complete(3)),
        PropertyDef::MinusG(Graph::path(3)),
    ];
    for d in defs {
        let c = d.certificates();
        let v = d.materialize(&u);
        // a certificate may be missing but never wrong
        if c.induced_hereditary {
            assert!(classes::is_induced_hereditary_up_to(&v).holds, "{d}");
        }
        if c.hereditary {
            assert!(classes::is_hereditary_up_to(&v).holds, "{d}");
        }
        if c.additive {
            assert!(classes::is_additive_up_to(&v).holds, "{d}");
        }
        if c.geq_hereditary {
            assert!(classes::is_geq_hereditary_up_to(&v).holds, "{d}");
        }
    }
}

#[test]
fn definitions_round_trip() {
    let text = "edges = O\nsmall = bounded_order(3)\nboth = product(edges, small)\nno_c4 = forbidden_induced(Cr)\n";
    let defs = parse_definitions(text).unwrap();
    let again = parse_definitions(&defs.to_string()).unwrap();
    assert_eq!(defs, again);
    assert!(parse_definitions("O = K\n").is_err());
    assert!(Definitions::new().resolve("no_such_thing").is_err());
}

#[test]
fn generating_helpers() {
    let u = Universe::enumerate(6).unwrap();
    let k = PropertyDef::K.materialize(&u);
    assert!(is_generating_set_up_to(&[Graph::complete(6)], &k).holds);
    let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap();
    let found = gen_filter_2star(&[Graph::cycle(4), Graph::path(3)], &Graph::complete(2)).unwrap();
    assert_eq!(found, vec![Graph::cycle(4)]);
    assert!(gen_filter_2star(&[two_k2], &Graph::complete(2)).unwrap().contains(&two_k2));
    assert_eq!(build_uniform(&Graph::complete(2), &CrossConfig::none(2), 3).unwrap().edge_count(), 3);
}
