//! Properties closed under induced supergraphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{product_view, Equality, ViewFactor};
use crate::properties::{classes, PropertyDef};
use crate::universe::PropertyView;

/// Members with no non-null proper induced subgraph in `p`.
pub fn min_graphs(p: &PropertyView) -> Vec<Graph> {
    let u = p.universe();
    let down = u.induced_down_sets();
    p.member_indices()
        .filter(|&i| !p.member_indices().any(|k| k != i && down[i][k]))
        .map(|i| *u.graph(i))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeqFactorisation {
    pub n: usize,
    pub min: Vec<Graph>,
    /// `plus(G)` for each `G` in `min`.
    pub factors: Vec<String>,
    pub product_equality: Equality,
    /// `|min(+G)| = 1` for each factor, checked on the universe.
    pub primitive: Vec<bool>,
    /// For each factor, the first graph on which the product without it differs from `p`.
    pub drop_counterexamples: Vec<Option<Graph>>,
    pub minimal: bool,
    pub holds: bool,
}

fn require_geq(p: &PropertyView, what: &str) -> Result<()> {
    if classes::is_geq_hereditary_up_to(p).holds {
        Ok(())
    } else {
        Err(Error::Uncertified { property: what.into(), class: "closed under induced supergraphs" })
    }
}

/// `p` as the product of `+G` over its minimal members, with primitivity
/// of every factor and minimality of the product checked on the universe.
pub fn primitive_factorisation_geq(p: &PropertyView) -> Result<GeqFactorisation> {
    require_geq(p, "view")?;
    let u = p.universe();
    let min = min_graphs(p);
    let defs: Vec<PropertyDef> = min.iter().map(|g| PropertyDef::PlusG(*g)).collect();
    let product_equality = Equality::of(&product_view(&defs, u), p)?;
    let primitive: Vec<bool> = defs.iter().map(|d| min_graphs(&d.materialize(u)).len() == 1).collect();
    let mut drop_counterexamples = Vec::with_capacity(defs.len());
    for i in 0..defs.len() {
        let rest: Vec<PropertyDef> = defs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, d)| d.clone()).collect();
        drop_counterexamples.push(product_view(&rest, u).first_difference(p)?);
    }
    let minimal = drop_counterexamples.iter().all(Option::is_some);
    let holds = product_equality.equal && minimal && primitive.iter().all(|&b| b);
    Ok(GeqFactorisation {
        n: u.n(),
        min,
        factors: defs.iter().map(ToString::to_string).collect(),
        product_equality,
        primitive,
        drop_counterexamples,
        minimal,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnionReport {
    pub parts: usize,
    pub product_equality: Equality,
    pub holds: bool,
}

/// A covering of `p` by properties closed under induced supergraphs is
/// also a factorisation of `p`.
pub fn union_is_product_geq(p: &PropertyView, cover: &[PropertyView]) -> Result<UnionReport> {
    require_geq(p, "view")?;
    let u = p.universe();
    let mut union = PropertyView::empty(u);
    for (i, c) in cover.iter().enumerate() {
        require_geq(c, &format!("cover part {i}"))?;
        union = union.union(c)?;
    }
    if let Some(g) = union.first_difference(p)? {
        return Err(Error::Precondition(format!("cover differs from the property on {g}")));
    }
    let factors: Vec<ViewFactor> =
        cover.iter().enumerate().map(|(i, c)| ViewFactor::new(format!("cover{i}"), c.clone())).collect();
    let product_equality = Equality::of(&product_view(&factors, u), p)?;
    Ok(UnionReport { parts: cover.len(), holds: product_equality.equal, product_equality })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    #[test]
    fn minimal_graphs() {
        let u = Universe::enumerate(5).unwrap();
        let plus_k2 = PropertyDef::PlusG(Graph::complete(2)).materialize(&u);
        assert_eq!(min_graphs(&plus_k2), vec![Graph::complete(2)]);
        let both = PropertyView::from_graphs(&u, &[Graph::path(3), Graph::complete(3)]).unwrap().geq_closure();
        let mut m = min_graphs(&both);
        m.sort();
        let mut expected = vec![Graph::path(3), Graph::complete(3)];
        expected.sort();
        assert_eq!(m, expected);
        assert_eq!(min_graphs(&PropertyView::full(&u)), vec![Graph::complete(1)]);
    }

    #[test]
    fn primitive_factorisations() {
        let u = Universe::enumerate(5).unwrap();
        let both = PropertyView::from_graphs(&u, &[Graph::path(3), Graph::complete(3)]).unwrap().geq_closure();
        let r = primitive_factorisation_geq(&both).unwrap();
        assert!(r.holds);
        assert_eq!(r.factors.len(), 2);
        let full = primitive_factorisation_geq(&PropertyView::full(&u)).unwrap();
        assert!(full.holds && full.min == vec![Graph::complete(1)]);
        assert!(primitive_factorisation_geq(&PropertyDef::O.materialize(&u)).is_err());
    }

    #[test]
    fn unions() {
        let u = Universe::enumerate(5).unwrap();
        let p3 = PropertyDef::PlusG(Graph::path(3)).materialize(&u);
        let k3 = PropertyDef::PlusG(Graph::complete(3)).materialize(&u);
        let p = p3.union(&k3).unwrap();
        assert!(union_is_product_geq(&p, &[p3.clone(), k3.clone()]).unwrap().holds);
        assert!(union_is_product_geq(&p, &[p.clone(), p.clone()]).unwrap().holds);
        assert!(union_is_product_geq(&p, &[p.clone(), PropertyView::empty(&u)]).unwrap().holds);
        assert!(union_is_product_geq(&p, &[p3]).is_err());
    }
}
