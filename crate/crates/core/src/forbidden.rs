//! Minimal forbidden subgraphs and induced subgraphs, and the conversions
//! between the two descriptions of a hereditary property.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::properties::classes::{self, Relation};
use crate::properties::PropertyDef;
use crate::universe::PropertyView;

/// Largest number of edge supersets generated per graph.
const SUPERSET_GUARD: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenSet {
    pub relation: Relation,
    /// Sorted canonically, without duplicates.
    pub graphs: Vec<Graph>,
}

fn contains(host: &Graph, pattern: &Graph, relation: Relation) -> bool {
    match relation {
        Relation::Induced => host.contains_induced(pattern),
        Relation::Subgraph => host.contains_subgraph(pattern),
    }
}

/// The graphs of `set` with no other graph of `set` properly inside them.
fn minimal_under(set: &[Graph], relation: Relation) -> Vec<Graph> {
    set.iter()
        .filter(|g| !set.iter().any(|h| h != *g && contains(g, h, relation)))
        .copied()
        .collect()
}

impl ForbiddenSet {
    pub fn new(relation: Relation, graphs: impl IntoIterator<Item = Graph>) -> Self {
        let set: BTreeSet<Graph> = graphs.into_iter().collect();
        ForbiddenSet { relation, graphs: set.into_iter().collect() }
    }

    /// The slice of graphs on exactly `k` vertices.
    pub fn of_order(&self, k: usize) -> Vec<Graph> {
        self.graphs.iter().filter(|g| g.order() == k).copied().collect()
    }

    pub fn orders(&self) -> BTreeSet<usize> {
        self.graphs.iter().map(Graph::order).collect()
    }

    pub fn is_antichain(&self) -> AntichainVerdict {
        is_antichain(&self.graphs, self.relation)
    }

    /// The property of graphs avoiding every member of the set.
    pub fn property(&self) -> PropertyDef {
        match self.relation {
            Relation::Induced => PropertyDef::ForbiddenInduced(minimal_under(&self.graphs, Relation::Induced)),
            Relation::Subgraph => PropertyDef::ForbiddenSubgraph(minimal_under(&self.graphs, Relation::Subgraph)),
        }
    }

    /// Header line `relation=induced|subgraph`, then one graph6 string per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("relation={}\n", relation_name(self.relation));
        for g in &self.graphs {
            s.push_str(&g.to_graph6());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<ForbiddenSet> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty forbidden-set file".into()))?;
        let relation = match header.strip_prefix("relation=") {
            Some("induced") => Relation::Induced,
            Some("subgraph") => Relation::Subgraph,
            _ => return Err(Error::Parse(format!("expected relation=induced|subgraph, found {header:?}"))),
        };
        let graphs = lines.map(Graph::from_graph6).collect::<Result<Vec<_>>>()?;
        Ok(ForbiddenSet::new(relation, graphs))
    }
}

impl fmt::Display for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn relation_name(r: Relation) -> &'static str {
    match r {
        Relation::Induced => "induced",
        Relation::Subgraph => "subgraph",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntichainVerdict {
    pub holds: bool,
    /// `(smaller, larger)` with the first contained in the second.
    pub violation: Option<(Graph, Graph)>,
}

pub fn is_antichain(set: &[Graph], relation: Relation) -> AntichainVerdict {
    for a in set {
        for b in set {
            if a != b && contains(b, a, relation) {
                return AntichainVerdict { holds: false, violation: Some((*a, *b)) };
            }
        }
    }
    AntichainVerdict { holds: true, violation: None }
}

/// Non-members all of whose one-vertex deletions are members.
pub fn minimal_forbidden_induced(p: &PropertyView) -> Result<ForbiddenSet> {
    if !classes::is_induced_hereditary_up_to(p).holds {
        return Err(Error::Uncertified { property: "view".into(), class: "induced-hereditary" });
    }
    let u = p.universe();
    let rel = u.relations();
    let graphs = (0..u.len())
        .filter(|&i| !p.contains_index(i) && rel.vertex_deletions[i].iter().all(|&d| p.contains_index(d)))
        .map(|i| *u.graph(i));
    Ok(ForbiddenSet::new(Relation::Induced, graphs))
}

/// Non-members all of whose one-vertex and one-edge deletions are members.
pub fn minimal_forbidden_subgraph(p: &PropertyView) -> Result<ForbiddenSet> {
    if !classes::is_hereditary_up_to(p).holds {
        return Err(Error::Uncertified { property: "view".into(), class: "hereditary" });
    }
    let u = p.universe();
    let rel = u.relations();
    let graphs = (0..u.len())
        .filter(|&i| {
            !p.contains_index(i)
                && rel.vertex_deletions[i].iter().chain(&rel.edge_deletions[i]).all(|&d| p.contains_index(d))
        })
        .map(|i| *u.graph(i));
    Ok(ForbiddenSet::new(Relation::Subgraph, graphs))
}

/// Subgraph-minimal elements of a set of minimal forbidden induced
/// subgraphs, computed globally and order by order; the two must agree.
pub fn induced_to_subgraph(fle: &ForbiddenSet) -> Result<ForbiddenSet> {
    if fle.relation != Relation::Induced {
        return Err(Error::Precondition("expected a set of forbidden induced subgraphs".into()));
    }
    if let Some((a, b)) = fle.is_antichain().violation {
        return Err(Error::NotAntichain(a.to_graph6(), b.to_graph6()));
    }
    let global = ForbiddenSet::new(Relation::Subgraph, minimal_under(&fle.graphs, Relation::Subgraph));
    let per_order = ForbiddenSet::new(
        Relation::Subgraph,
        fle.orders().into_iter().flat_map(|k| minimal_under(&fle.of_order(k), Relation::Subgraph)),
    );
    if global != per_order {
        return Err(Error::Invariant("global and per-order subgraph minimisation differ".into()));
    }
    Ok(global)
}

/// All graphs `H + e_1 + ... + e_r` for `H` in the set, reduced to their
/// induced-minimal elements; graphs above order `n` are dropped.
pub fn subgraph_to_induced(fsub: &ForbiddenSet, n: usize) -> Result<ForbiddenSet> {
    if fsub.relation != Relation::Subgraph {
        return Err(Error::Precondition("expected a set of forbidden subgraphs".into()));
    }
    let mut all = BTreeSet::new();
    for h in fsub.graphs.iter().filter(|h| h.order() <= n) {
        if h.order() > MAX_ORDER {
            return Err(Error::CapExceeded(h.order()));
        }
        let non_edges: Vec<(usize, usize)> = h.labelled().non_edges().collect();
        if non_edges.len() >= 64 || 1usize << non_edges.len() > SUPERSET_GUARD {
            return Err(Error::Precondition(format!("{h} has too many non-edges to expand")));
        }
        for mask in 0u64..1 << non_edges.len() {
            let mut g = *h.labelled();
            for (k, &(a, b)) in non_edges.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(a, b)?;
                }
            }
            all.insert(g.canonical_form());
        }
    }
    let all: Vec<Graph> = all.into_iter().collect();
    Ok(ForbiddenSet::new(Relation::Induced, minimal_under(&all, Relation::Induced)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    /// Verdict of the edge-addition criterion.
    pub criterion: bool,
    /// First `(H, H + e)` with no set member induced in `H + e`.
    pub witness: Option<(Graph, Graph)>,
    /// The same question answered directly.
    pub direct: bool,
    pub holds: bool,
}

/// Every `H + e` (`H` in the set, `e` a non-edge) has a set member as an
/// induced subgraph.
fn edge_criterion(set: &[Graph]) -> Result<Option<(Graph, Graph)>> {
    for h in set {
        for (a, b) in h.labelled().non_edges() {
            let he = h.add_edge(a, b)?;
            if !set.iter().any(|g| he.contains_induced(g)) {
                return Ok(Some((*h, he)));
            }
        }
    }
    Ok(None)
}

/// Minimal forbidden subgraphs equal minimal forbidden induced subgraphs
/// exactly when the edge criterion holds on the forbidden subgraphs.
pub fn check_subgraph_criterion(fsub: &ForbiddenSet, u: &std::sync::Arc<crate::universe::Universe>) -> Result<CriterionReport> {
    if fsub.relation != Relation::Subgraph {
        return Err(Error::Precondition("expected a set of forbidden subgraphs".into()));
    }
    let inside: Vec<Graph> = fsub.graphs.iter().filter(|g| g.order() <= u.n()).copied().collect();
    let witness = edge_criterion(&inside)?;
    let view = fsub.property().materialize(u);
    let fle = minimal_forbidden_induced(&view)?;
    let fsub_direct = minimal_forbidden_subgraph(&view)?;
    let direct = fle.graphs == fsub_direct.graphs;
    let criterion = witness.is_none();
    Ok(CriterionReport { criterion, witness, direct, holds: criterion == direct })
}

/// An induced-hereditary property is hereditary exactly when the edge
/// criterion holds on its minimal forbidden induced subgraphs.
pub fn check_heredity_criterion(fle: &ForbiddenSet, u: &std::sync::Arc<crate::universe::Universe>) -> Result<CriterionReport> {
    if fle.relation != Relation::Induced {
        return Err(Error::Precondition("expected a set of forbidden induced subgraphs".into()));
    }
    let inside: Vec<Graph> = fle.graphs.iter().filter(|g| g.order() <= u.n()).copied().collect();
    let witness = edge_criterion(&inside)?;
    let direct = classes::is_hereditary_up_to(&fle.property().materialize(u)).holds;
    let criterion = witness.is_none();
    Ok(CriterionReport { criterion, witness, direct, holds: criterion == direct })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSetsReport {
    pub subgraph_count: usize,
    pub induced_count: usize,
    pub equal: bool,
    /// Whether the minimal forbidden induced subgraphs form a subgraph antichain.
    pub induced_is_subgraph_antichain: bool,
    /// The same, order by order.
    pub per_order_antichain: Vec<(usize, bool)>,
    /// Equality, the antichain condition and the per-order condition agree.
    pub consistent: bool,
    pub finiteness: &'static str,
}

pub fn check_finite_forbidden_sets(p: &PropertyView) -> Result<FiniteSetsReport> {
    let fsub = minimal_forbidden_subgraph(p)?;
    let fle = minimal_forbidden_induced(p)?;
    let equal = fsub.graphs == fle.graphs;
    let anti = is_antichain(&fle.graphs, Relation::Subgraph).holds;
    let per_order: Vec<(usize, bool)> =
        fle.orders().into_iter().map(|k| (k, is_antichain(&fle.of_order(k), Relation::Subgraph).holds)).collect();
    let per_all = per_order.iter().all(|&(_, b)| b);
    Ok(FiniteSetsReport {
        subgraph_count: fsub.graphs.len(),
        induced_count: fle.graphs.len(),
        equal,
        induced_is_subgraph_antichain: anti,
        per_order_antichain: per_order,
        consistent: equal == anti && anti == per_all,
        finiteness: "not decidable at truncation",
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectednessReport {
    pub forbidden_connected: bool,
    pub disconnected_example: Option<Graph>,
    pub additive: bool,
    pub additive_counterexample: Option<(Graph, Graph)>,
    /// The two verdicts agree (a mismatch would be an artifact of truncation).
    pub holds: bool,
}

/// Additivity against connectedness of the minimal forbidden (induced) subgraphs.
pub fn check_additivity_connectedness(p: &PropertyView, relation: Relation) -> Result<ConnectednessReport> {
    let f = match relation {
        Relation::Induced => minimal_forbidden_induced(p)?,
        Relation::Subgraph => minimal_forbidden_subgraph(p)?,
    };
    let disconnected_example = f.graphs.iter().find(|g| !g.is_connected()).copied();
    let add = classes::is_additive_up_to(p);
    let forbidden_connected = disconnected_example.is_none();
    Ok(ConnectednessReport {
        forbidden_connected,
        disconnected_example,
        additive: add.holds,
        additive_counterexample: add.counterexample,
        holds: forbidden_connected == add.holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::properties::Builtin;
    use crate::universe::Universe;

    fn cycles(upto: usize) -> Vec<Graph> {
        (3..=upto).map(Graph::cycle).collect()
    }

    #[test]
    fn forests() {
        let u = Universe::enumerate(6).unwrap();
        let f = PropertyDef::Builtin(Builtin::Forests).materialize(&u);
        let fle = minimal_forbidden_induced(&f).unwrap();
        assert_eq!(fle.graphs, ForbiddenSet::new(Relation::Induced, cycles(6)).graphs);
        assert_eq!(minimal_forbidden_subgraph(&f).unwrap().graphs, fle.graphs);
        assert_eq!(induced_to_subgraph(&fle).unwrap().graphs, fle.graphs);
    }

    #[test]
    fn bounded_order() {
        let u = Universe::enumerate(4).unwrap();
        let b = PropertyDef::Builtin(Builtin::BoundedOrder(3)).materialize(&u);
        let fle = minimal_forbidden_induced(&b).unwrap();
        assert_eq!(fle.graphs.len(), 11);
        let fsub = minimal_forbidden_subgraph(&b).unwrap();
        assert_eq!(fsub.graphs, vec![Graph::edgeless(4)]);
        assert_eq!(induced_to_subgraph(&fle).unwrap(), fsub);
        assert_eq!(subgraph_to_induced(&fsub, 4).unwrap(), fle);
        let r = check_subgraph_criterion(&fsub, &u).unwrap();
        assert!(!r.criterion && !r.direct && r.holds);
        assert_eq!(r.witness.unwrap().0, Graph::edgeless(4));
    }

    #[test]
    fn simple_sets() {
        let k2 = ForbiddenSet::new(Relation::Induced, [Graph::complete(2)]);
        let k2s = induced_to_subgraph(&k2).unwrap();
        assert_eq!(k2s.graphs, vec![Graph::complete(2)]);
        assert_eq!(subgraph_to_induced(&k2s, 6).unwrap().graphs, vec![Graph::complete(2)]);
        let order4: Vec<Graph> = Universe::enumerate(4).unwrap().graphs()[7..].to_vec();
        assert!(!is_antichain(&order4, Relation::Subgraph).holds);
        assert!(is_antichain(&cycles(6), Relation::Subgraph).holds);
        assert!(is_antichain(&[Graph::path(4)], Relation::Induced).holds);
    }

    #[test]
    fn split_is_not_hereditary() {
        let u = Universe::enumerate(5).unwrap();
        let s = PropertyDef::Builtin(Builtin::Split).materialize(&u);
        let fle = minimal_forbidden_induced(&s).unwrap();
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap();
        assert_eq!(fle.graphs, ForbiddenSet::new(Relation::Induced, [two_k2, Graph::cycle(4), Graph::cycle(5)]).graphs);
        let r = check_heredity_criterion(&fle, &u).unwrap();
        assert!(!r.criterion && !r.direct && r.holds);
        let c = check_additivity_connectedness(&s, Relation::Induced).unwrap();
        assert!(!c.forbidden_connected && !c.additive && c.holds);
    }

    #[test]
    fn text_round_trip() {
        let f = ForbiddenSet::new(Relation::Subgraph, cycles(5));
        assert_eq!(ForbiddenSet::from_text(&f.to_text()).unwrap(), f);
        assert!(ForbiddenSet::from_text("relation=both\n").is_err());
    }
}
