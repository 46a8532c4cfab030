//! Generating sets: filters, the two-copy construction, ordered chains and
//! uniform graphs.

use std::collections::BTreeSet;

use serde::Serialize;

use super::classes;
use crate::error::{Error, Result};
use crate::graph::{Graph, LabelledGraph, MAX_ORDER};
use crate::universe::PropertyView;

/// `{G in gens | L <= G}`.
pub fn gen_filter_l(gens: &[Graph], l: &Graph) -> Vec<Graph> {
    gens.iter().filter(|g| g.contains_induced(l)).copied().collect()
}

/// `{G in gens | L u L <= G}`.
pub fn gen_filter_2l(gens: &[Graph], l: &Graph) -> Result<Vec<Graph>> {
    let two = l.disjoint_union(l)?;
    Ok(gens.iter().filter(|g| g.contains_induced(&two)).copied().collect())
}

/// All graphs made of two disjoint copies of `l` with arbitrary cross edges.
pub fn two_star(l: &Graph) -> Result<Vec<Graph>> {
    let k = l.order();
    if 2 * k > MAX_ORDER {
        return Err(Error::CapExceeded(2 * k));
    }
    if k > 4 {
        return Err(Error::Precondition(format!("two_star needs order <= 4, got {k}")));
    }
    let base = l.labelled().disjoint_union(l.labelled())?;
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << (k * k) {
        let mut g = base;
        for x in 0..k {
            for y in 0..k {
                if mask >> (x * k + y) & 1 == 1 {
                    g.set_edge(x, k + y, true);
                }
            }
        }
        out.insert(g.canonical_form());
    }
    Ok(out.into_iter().collect())
}

/// Generators containing some member of `two_star(l)` as an induced subgraph.
pub fn gen_filter_2star(gens: &[Graph], l: &Graph) -> Result<Vec<Graph>> {
    let stars = two_star(l)?;
    Ok(gens.iter().filter(|g| stars.iter().any(|s| g.contains_induced(s))).copied().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratingReport {
    pub holds: bool,
    /// Members of the property not induced in any generator.
    pub uncovered: Vec<Graph>,
    /// Generators that are not members of the property themselves.
    pub foreign_generators: Vec<Graph>,
}

/// Whether every member of `p` is an induced subgraph of some generator.
pub fn is_generating_set_up_to(gens: &[Graph], p: &PropertyView) -> GeneratingReport {
    let uncovered: Vec<Graph> =
        p.members().filter(|g| !gens.iter().any(|h| h.contains_induced(g))).copied().collect();
    let foreign_generators: Vec<Graph> = gens
        .iter()
        .filter(|g| g.order() <= p.universe().n() && !p.contains(g))
        .copied()
        .collect();
    GeneratingReport { holds: uncovered.is_empty() && foreign_generators.is_empty(), uncovered, foreign_generators }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// `H_1 <= H_2 <= ...`, each containing the previous one.
    pub chain: Vec<Graph>,
    /// True when the chain generates every member of the view.
    pub complete: bool,
    /// Largest `k` such that every member of order `<= k` is below the last term.
    pub covered_order: usize,
    /// First member that no witness inside the universe could absorb.
    pub stopped_at: Option<Graph>,
}

/// Builds an ordered generating chain greedily: walk the members in universe
/// order and, whenever one is not below the current top, extend the chain by
/// the first member containing both.
pub fn ordered_generating_chain(p: &PropertyView) -> Result<ChainReport> {
    let comp = classes::is_compositive_up_to(p);
    if let Some((g, h)) = comp.missing {
        return Err(Error::NotCompositive(g.to_graph6(), h.to_graph6()));
    }
    let u = p.universe();
    let down = u.induced_down_sets();
    let members: Vec<usize> = p.member_indices().collect();
    let mut chain: Vec<usize> = Vec::new();
    let mut stopped_at = None;
    for &g in &members {
        match chain.last() {
            None => chain.push(g),
            Some(&top) if down[top][g] => {}
            Some(&top) => match members.iter().find(|&&k| down[k][top] && down[k][g]) {
                Some(&k) => chain.push(k),
                None => {
                    stopped_at = Some(*u.graph(g));
                    break;
                }
            },
        }
    }
    let top = chain.last().copied();
    let covered_order = (1..=u.n())
        .take_while(|&k| members.iter().filter(|&&m| u.graph(m).order() == k).all(|&m| top.is_some_and(|t| down[t][m])))
        .last()
        .unwrap_or(0);
    Ok(ChainReport {
        chain: chain.iter().map(|&i| *u.graph(i)).collect(),
        complete: stopped_at.is_none(),
        covered_order,
        stopped_at,
    })
}

/// Cross edges between two labelled copies: `rows[x]` bit `y` joins `v_x` of
/// the earlier copy to `v_y` of the later one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossConfig {
    pub rows: Vec<u16>,
}

impl CrossConfig {
    pub fn none(k: usize) -> Self {
        CrossConfig { rows: vec![0; k] }
    }

    pub fn all(k: usize) -> Self {
        CrossConfig { rows: vec![((1u32 << k) - 1) as u16; k] }
    }

    /// `v_x` to `v_x` only.
    pub fn matching(k: usize) -> Self {
        CrossConfig { rows: (0..k).map(|x| 1 << x).collect() }
    }
}

/// `m` labelled copies of `g` with the same cross configuration between every
/// ordered pair of copies. Both uniformity conditions are checked on the result.
pub fn build_uniform_labelled(g: &Graph, cross: &CrossConfig, m: usize) -> Result<LabelledGraph> {
    let k = g.order();
    if m * k > MAX_ORDER {
        return Err(Error::CapExceeded(m * k));
    }
    if cross.rows.len() != k || cross.rows.iter().any(|&r| k < 16 && r >> k != 0) {
        return Err(Error::Precondition("cross configuration does not match the graph order".into()));
    }
    let base = g.labelled();
    let mut x = LabelledGraph::new(m * k)?;
    for p in 0..m {
        for (a, b) in base.edges() {
            x.set_edge(p * k + a, p * k + b, true);
        }
        for q in p + 1..m {
            for (a, &row) in cross.rows.iter().enumerate() {
                for b in 0..k {
                    if row >> b & 1 == 1 {
                        x.set_edge(p * k + a, q * k + b, true);
                    }
                }
            }
        }
    }
    let copy = |p: usize| crate::graph::VertexSet::from_vertices((0..k).map(|a| p * k + a));
    for p in 0..m {
        if x.induced(copy(p))? != *base {
            return Err(Error::Invariant(format!("copy {p} is not labelled like the base graph")));
        }
    }
    if m >= 2 {
        let first = x.induced(copy(0).union(copy(1)))?;
        for p in 0..m {
            for q in p + 1..m {
                if x.induced(copy(p).union(copy(q)))? != first {
                    return Err(Error::Invariant(format!("copies {p} and {q} differ from copies 0 and 1")));
                }
            }
        }
    }
    Ok(x)
}

pub fn build_uniform(g: &Graph, cross: &CrossConfig, m: usize) -> Result<Graph> {
    Ok(build_uniform_labelled(g, cross, m)?.canonical_form())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::{Builtin, PropertyDef};
    use crate::universe::Universe;

    fn two_k2() -> Graph {
        Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap()
    }

    #[test]
    fn filters() {
        let gens = [Graph::path(4), Graph::cycle(4), Graph::complete(4)];
        assert_eq!(gen_filter_l(&gens, &Graph::complete(2)).len(), 3);
        assert_eq!(gen_filter_l(&gens, &Graph::complete(3)), vec![Graph::complete(4)]);
        assert_eq!(gen_filter_l(&gens, &Graph::complete(1)).len(), 3);
        let gens = [two_k2(), Graph::cycle(4), Graph::complete(4)];
        assert_eq!(gen_filter_2l(&gens, &Graph::complete(2)).unwrap(), vec![two_k2()]);
        assert_eq!(gen_filter_2l(&[Graph::cycle(6)], &Graph::complete(2)).unwrap(), vec![Graph::cycle(6)]);
    }

    #[test]
    fn two_star_examples() {
        assert_eq!(two_star(&Graph::complete(1)).unwrap(), vec![Graph::edgeless(2), Graph::complete(2)]);
        let s = two_star(&Graph::complete(2)).unwrap();
        assert!(s.contains(&Graph::cycle(4)) && s.contains(&Graph::complete(4)));
        assert!(two_star(&Graph::path(5)).is_err());
    }

    #[test]
    fn generating_sets() {
        let u = Universe::enumerate(6).unwrap();
        let forests = PropertyDef::Builtin(Builtin::Forests).materialize(&u);
        let r = is_generating_set_up_to(&[Graph::cycle(6)], &forests);
        assert!(!r.holds);
        assert!(r.uncovered.contains(&Graph::star(3)));
        let members: Vec<Graph> = forests.members().copied().collect();
        assert!(is_generating_set_up_to(&members, &forests).holds);
        let o = PropertyDef::O.materialize(&u);
        assert!(is_generating_set_up_to(&[Graph::edgeless(6)], &o).holds);
    }

    #[test]
    fn chains() {
        let u = Universe::enumerate(6).unwrap();
        let r = ordered_generating_chain(&PropertyDef::O.materialize(&u)).unwrap();
        assert_eq!(r.chain, (1..=6).map(Graph::edgeless).collect::<Vec<_>>());
        assert!(r.complete);
        let u3 = Universe::enumerate(3).unwrap();
        let b3 = PropertyDef::Builtin(Builtin::BoundedOrder(3)).materialize(&u3);
        let r = ordered_generating_chain(&b3).unwrap();
        assert_eq!(r.chain.last().unwrap().order(), 3);
        assert!(!r.complete);
        assert!(matches!(
            ordered_generating_chain(&PropertyDef::Builtin(Builtin::BoundedOrder(3)).materialize(&u)),
            Err(Error::NotCompositive(..))
        ));
    }

    #[test]
    fn uniform_graphs() {
        let k1 = Graph::complete(1);
        assert_eq!(build_uniform(&k1, &CrossConfig::all(1), 4).unwrap(), Graph::complete(4));
        assert_eq!(build_uniform(&k1, &CrossConfig::none(1), 4).unwrap(), Graph::edgeless(4));
        let prism = build_uniform(&Graph::complete(2), &CrossConfig::matching(2), 3).unwrap();
        let expected = Graph::complete(3).disjoint_union(&Graph::complete(3)).unwrap();
        let mut l = *expected.labelled();
        for i in 0..3 {
            l.add_edge(i, i + 3).unwrap();
        }
        assert_eq!(prism, l.canonical_form());
        let x = build_uniform_labelled(&Graph::complete(2), &CrossConfig::matching(2), 3).unwrap();
        let pair = x.induced(crate::graph::VertexSet::from_vertices([0, 1, 4, 5])).unwrap();
        assert_eq!(pair.canonical_form(), Graph::cycle(4));
    }
}
