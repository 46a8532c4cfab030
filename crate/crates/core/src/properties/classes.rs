//! Closure-class checks on a materialized view, exact within its universe.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::universe::PropertyView;

/// Outcome of a closure check; the counterexample is `(g, h)` with `g` a
/// member and `h` the offending related graph (or the second member of a pair).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub holds: bool,
    pub counterexample: Option<(Graph, Graph)>,
}

impl ClassVerdict {
    fn from(counterexample: Option<(Graph, Graph)>) -> Self {
        ClassVerdict { holds: counterexample.is_none(), counterexample }
    }
}

fn first_bad_step(view: &PropertyView, with_edges: bool) -> ClassVerdict {
    let u = view.universe();
    let rel = u.relations();
    let members: Vec<usize> = view.member_indices().collect();
    let bad = members.par_iter().find_map_first(|&i| {
        let edges: &[usize] = if with_edges { &rel.edge_deletions[i] } else { &[] };
        rel.vertex_deletions[i]
            .iter()
            .chain(edges)
            .find(|&&d| !view.contains_index(d))
            .map(|&d| (*u.graph(i), *u.graph(d)))
    });
    ClassVerdict::from(bad)
}

/// Closed under deleting vertices; one-step closure implies full closure.
pub fn is_induced_hereditary_up_to(view: &PropertyView) -> ClassVerdict {
    first_bad_step(view, false)
}

/// Closed under deleting vertices and edges.
pub fn is_hereditary_up_to(view: &PropertyView) -> ClassVerdict {
    first_bad_step(view, true)
}

/// Closed under adding a vertex (induced supergraphs inside the universe).
pub fn is_geq_hereditary_up_to(view: &PropertyView) -> ClassVerdict {
    let u = view.universe();
    let rel = u.relations();
    let members: Vec<usize> = view.member_indices().collect();
    let bad = members.par_iter().find_map_first(|&i| {
        rel.vertex_extensions[i]
            .iter()
            .find(|&&e| !view.contains_index(e))
            .map(|&e| (*u.graph(i), *u.graph(e)))
    });
    ClassVerdict::from(bad)
}

fn pair_closure(view: &PropertyView, op: impl Fn(&Graph, &Graph) -> Graph + Sync) -> ClassVerdict {
    let u = view.universe();
    let n = u.n();
    let members: Vec<usize> = view.member_indices().collect();
    let bad = members.par_iter().enumerate().find_map_first(|(a, &i)| {
        let g = u.graph(i);
        members[a..]
            .iter()
            .map(|&j| u.graph(j))
            .filter(|h| g.order() + h.order() <= n)
            .find(|h| !view.contains(&op(g, h)))
            .map(|h| (*g, *h))
    });
    ClassVerdict::from(bad)
}

/// Closed under disjoint union, over all member pairs with order sum <= n.
pub fn is_additive_up_to(view: &PropertyView) -> ClassVerdict {
    pair_closure(view, |g, h| g.disjoint_union(h).expect("within universe order"))
}

/// Closed under join, over all member pairs with order sum <= n.
pub fn is_coadditive_up_to(view: &PropertyView) -> ClassVerdict {
    pair_closure(view, |g, h| g.join(h).expect("within universe order"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositiveReport {
    pub holds: bool,
    /// First pair without a common witness, among verifiable pairs.
    pub missing: Option<(Graph, Graph)>,
    pub verified_pairs: usize,
    /// Pairs with no witness inside the universe whose witnesses would need
    /// more than `n` vertices.
    pub unverifiable: usize,
}

/// Searches, for each pair of members, a member containing both (disjointly
/// when `disjoint`). A pair with `|g| + |h| <= n` and no witness in the
/// universe has none at all when the property is induced-hereditary, since a
/// witness restricted to the two images is again a witness.
fn compositive(view: &PropertyView, relation: Relation, disjoint: bool) -> CompositiveReport {
    let u = view.universe();
    let n = u.n();
    let down = match relation {
        Relation::Induced => u.induced_down_sets(),
        Relation::Subgraph => u.subgraph_down_sets(),
    };
    let members: Vec<usize> = view.member_indices().collect();
    // (verifiable, has witness) per pair
    let outcomes: Vec<Vec<(bool, bool)>> = members
        .par_iter()
        .enumerate()
        .map(|(a, &i)| {
            members[a..]
                .iter()
                .map(|&j| {
                    let (g, h) = (u.graph(i), u.graph(j));
                    let witness = members.iter().any(|&k| {
                        let cand = u.graph(k);
                        down[k][i]
                            && down[k][j]
                            && (!disjoint || (cand.order() >= g.order() + h.order() && cand.contains_disjoint_induced(g, h)))
                    });
                    (g.order() + h.order() <= n, witness)
                })
                .collect()
        })
        .collect();
    let mut report = CompositiveReport { holds: true, missing: None, verified_pairs: 0, unverifiable: 0 };
    for (a, row) in outcomes.iter().enumerate() {
        for (b, &(verifiable, witness)) in row.iter().enumerate() {
            if witness {
                report.verified_pairs += 1;
            } else if verifiable {
                report.verified_pairs += 1;
                if report.missing.is_none() {
                    report.missing = Some((*u.graph(members[a]), *u.graph(members[a + b])));
                }
            } else {
                report.unverifiable += 1;
            }
        }
    }
    report.holds = report.missing.is_none();
    report
}

/// Containment relation used by compositivity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Induced,
    Subgraph,
}

/// Any two members lie in a common member as induced subgraphs.
pub fn is_compositive_up_to(view: &PropertyView) -> CompositiveReport {
    compositive(view, Relation::Induced, false)
}

/// Any two members lie in a common member as subgraphs.
pub fn is_hereditary_compositive_up_to(view: &PropertyView) -> CompositiveReport {
    compositive(view, Relation::Subgraph, false)
}

/// Any two members lie in a common member as disjoint induced subgraphs.
pub fn is_indiscompositive_up_to(view: &PropertyView) -> CompositiveReport {
    compositive(view, Relation::Induced, true)
}
