//! Intensional property definitions, membership, materialization and
//! finite-scale class checks.

mod builtin;
pub mod classes;
pub mod generating;
mod syntax;

use std::fmt;
use std::sync::Arc;

use bitvec::prelude::*;
use rayon::prelude::*;

pub use builtin::Builtin;
pub use syntax::{parse_definitions, parse_property, Definitions};

use crate::graph::Graph;
use crate::partition;
use crate::universe::{PropertyView, Universe};

/// Closure classes a definition is guaranteed to have by construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Certificates {
    pub induced_hereditary: bool,
    pub hereditary: bool,
    pub additive: bool,
    pub coadditive: bool,
    pub geq_hereditary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PropertyDef {
    Builtin(Builtin),
    ForbiddenInduced(Vec<Graph>),
    ForbiddenSubgraph(Vec<Graph>),
    GeneratedInduced(Vec<Graph>),
    GeneratedSubgraph(Vec<Graph>),
    PlusG(Graph),
    MinusG(Graph),
    /// A finite explicit set of graphs.
    Listed(Vec<Graph>),
    /// `p` with the listed graphs removed.
    Without(Box<PropertyDef>, Vec<Graph>),
    Product(Vec<PropertyDef>),
    UnionOf(Vec<PropertyDef>),
    IntersectionOf(Vec<PropertyDef>),
}

/// Membership verdict with the truncation flag of generator-defined properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// The graph is larger than every generator, so "false" is by convention.
    pub truncated: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Order {
    Induced,
    Subgraph,
}

fn contained(a: &Graph, b: &Graph, rel: Order) -> bool {
    match rel {
        Order::Induced => b.contains_induced(a),
        Order::Subgraph => b.contains_subgraph(a),
    }
}

/// Keeps the minimal (or maximal) elements of `graphs` under `rel`; returns
/// the kept set (sorted) and the dropped elements.
fn normalize(graphs: Vec<Graph>, rel: Order, keep_minimal: bool) -> (Vec<Graph>, Vec<Graph>) {
    let mut gs = graphs;
    gs.sort();
    gs.dedup();
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for (i, g) in gs.iter().enumerate() {
        let dominated = gs.iter().enumerate().any(|(j, h)| {
            i != j && if keep_minimal { contained(h, g, rel) } else { contained(g, h, rel) }
        });
        if dominated {
            dropped.push(*g);
        } else {
            kept.push(*g);
        }
    }
    (kept, dropped)
}

impl PropertyDef {
    pub const O: PropertyDef = PropertyDef::Builtin(Builtin::Edgeless(None));
    pub const K: PropertyDef = PropertyDef::Builtin(Builtin::Complete(None));

    pub fn edgeless_upto(s: usize) -> PropertyDef {
        PropertyDef::Builtin(Builtin::Edgeless(Some(s)))
    }

    pub fn complete_upto(s: usize) -> PropertyDef {
        PropertyDef::Builtin(Builtin::Complete(Some(s)))
    }

    /// Forbidden induced subgraphs, reduced to a `<=`-antichain. Returns the
    /// definition and the dropped (non-minimal) graphs.
    pub fn forbidden_induced(graphs: Vec<Graph>) -> (PropertyDef, Vec<Graph>) {
        let (kept, dropped) = normalize(graphs, Order::Induced, true);
        (PropertyDef::ForbiddenInduced(kept), dropped)
    }

    pub fn forbidden_subgraph(graphs: Vec<Graph>) -> (PropertyDef, Vec<Graph>) {
        let (kept, dropped) = normalize(graphs, Order::Subgraph, true);
        (PropertyDef::ForbiddenSubgraph(kept), dropped)
    }

    /// Generators, reduced to their `<=`-maximal elements.
    pub fn generated_induced(graphs: Vec<Graph>) -> (PropertyDef, Vec<Graph>) {
        let (kept, dropped) = normalize(graphs, Order::Induced, false);
        (PropertyDef::GeneratedInduced(kept), dropped)
    }

    pub fn generated_subgraph(graphs: Vec<Graph>) -> (PropertyDef, Vec<Graph>) {
        let (kept, dropped) = normalize(graphs, Order::Subgraph, false);
        (PropertyDef::GeneratedSubgraph(kept), dropped)
    }

    pub fn listed(graphs: Vec<Graph>) -> PropertyDef {
        let mut gs = graphs;
        gs.sort();
        gs.dedup();
        PropertyDef::Listed(gs)
    }

    pub fn without(p: PropertyDef, graphs: Vec<Graph>) -> PropertyDef {
        let mut gs = graphs;
        gs.sort();
        gs.dedup();
        PropertyDef::Without(Box::new(p), gs)
    }

    pub fn member(&self, g: &Graph) -> bool {
        self.member_detail(g).member
    }

    pub fn member_detail(&self, g: &Graph) -> Membership {
        let plain = |member| Membership { member, truncated: false };
        if g.order() == 0 {
            return plain(true);
        }
        match self {
            PropertyDef::Builtin(b) => plain(b.member(g.labelled())),
            PropertyDef::ForbiddenInduced(fs) => plain(!fs.iter().any(|f| g.contains_induced(f))),
            PropertyDef::ForbiddenSubgraph(fs) => plain(!fs.iter().any(|f| g.contains_subgraph(f))),
            PropertyDef::GeneratedInduced(gens) => {
                let member = gens.iter().any(|h| h.contains_induced(g));
                let truncated = !member && gens.iter().all(|h| h.order() < g.order());
                Membership { member, truncated }
            }
            PropertyDef::GeneratedSubgraph(gens) => {
                let member = gens.iter().any(|h| h.contains_subgraph(g));
                let truncated = !member && gens.iter().all(|h| h.order() < g.order());
                Membership { member, truncated }
            }
            PropertyDef::PlusG(h) => plain(g.contains_induced(h)),
            PropertyDef::MinusG(h) => plain(!g.contains_induced(h)),
            PropertyDef::Listed(gs) => plain(gs.binary_search(g).is_ok()),
            PropertyDef::Without(p, gs) => {
                if gs.binary_search(g).is_ok() {
                    plain(false)
                } else {
                    p.member_detail(g)
                }
            }
            PropertyDef::Product(fs) => plain(partition::product_membership(g, fs)),
            PropertyDef::UnionOf(ps) => {
                let ds: Vec<_> = ps.iter().map(|p| p.member_detail(g)).collect();
                let member = ds.iter().any(|d| d.member);
                Membership { member, truncated: !member && ds.iter().any(|d| d.truncated) }
            }
            PropertyDef::IntersectionOf(ps) => {
                let ds: Vec<_> = ps.iter().map(|p| p.member_detail(g)).collect();
                let member = ds.iter().all(|d| d.member);
                Membership { member, truncated: ds.iter().any(|d| d.truncated) }
            }
        }
    }

    /// Classes guaranteed analytically by the shape of the definition.
    pub fn certificates(&self) -> Certificates {
        let none = Certificates::default();
        let ih = Certificates { induced_hereditary: true, ..none };
        let h = Certificates { induced_hereditary: true, hereditary: true, ..none };
        match self {
            PropertyDef::Builtin(b) => match b {
                Builtin::Edgeless(None) => Certificates { additive: true, ..h },
                Builtin::Edgeless(Some(_)) | Builtin::BoundedOrder(_) => h,
                Builtin::Complete(None) => Certificates { coadditive: true, ..ih },
                Builtin::Complete(Some(_)) | Builtin::Split | Builtin::CliqueWithPendants => ih,
                Builtin::Forests | Builtin::Bipartite | Builtin::PathComponents => Certificates { additive: true, ..h },
            },
            PropertyDef::ForbiddenInduced(fs) => Certificates {
                additive: fs.iter().all(|f| f.is_connected()),
                coadditive: fs.iter().all(|f| f.complement().is_connected()),
                hereditary: fs.iter().all(Graph::is_complete),
                ..ih
            },
            PropertyDef::ForbiddenSubgraph(fs) => {
                Certificates { additive: fs.iter().all(|f| f.is_connected()), ..h }
            }
            PropertyDef::GeneratedInduced(_) => ih,
            PropertyDef::GeneratedSubgraph(_) => h,
            PropertyDef::PlusG(_) => Certificates { geq_hereditary: true, ..none },
            PropertyDef::MinusG(g) => Certificates {
                additive: g.is_connected(),
                coadditive: g.complement().is_connected(),
                hereditary: g.is_complete(),
                ..ih
            },
            PropertyDef::Listed(gs) => {
                let closed = gs.iter().all(|g| {
                    g.order() < 2 || (0..g.order()).all(|v| gs.binary_search(&g.remove_vertex(v)).is_ok())
                });
                let sub_closed = closed
                    && gs.iter().all(|g| g.labelled().edges().all(|(u, v)| gs.binary_search(&g.remove_edge(u, v)).is_ok()));
                Certificates { induced_hereditary: closed, hereditary: sub_closed, ..none }
            }
            PropertyDef::Without(..) => none,
            PropertyDef::Product(fs) => {
                let cs: Vec<_> = fs.iter().map(PropertyDef::certificates).collect();
                Certificates {
                    induced_hereditary: cs.iter().all(|c| c.induced_hereditary),
                    hereditary: cs.iter().all(|c| c.hereditary),
                    additive: cs.iter().all(|c| c.additive),
                    geq_hereditary: cs.iter().all(|c| c.geq_hereditary),
                    coadditive: false,
                }
            }
            PropertyDef::UnionOf(ps) => {
                let cs: Vec<_> = ps.iter().map(PropertyDef::certificates).collect();
                Certificates {
                    induced_hereditary: cs.iter().all(|c| c.induced_hereditary),
                    hereditary: cs.iter().all(|c| c.hereditary),
                    geq_hereditary: cs.iter().all(|c| c.geq_hereditary),
                    ..none
                }
            }
            PropertyDef::IntersectionOf(ps) => {
                let cs: Vec<_> = ps.iter().map(PropertyDef::certificates).collect();
                Certificates {
                    induced_hereditary: cs.iter().all(|c| c.induced_hereditary),
                    hereditary: cs.iter().all(|c| c.hereditary),
                    additive: cs.iter().all(|c| c.additive),
                    coadditive: cs.iter().all(|c| c.coadditive),
                    geq_hereditary: cs.iter().all(|c| c.geq_hereditary),
                }
            }
        }
    }

    /// Membership bit per universe graph, cached per universe by definition text.
    pub fn materialize(&self, u: &Arc<Universe>) -> PropertyView {
        let key = self.to_string();
        if let Some(bits) = u.cache.read().expect("cache lock").get(&key) {
            return PropertyView::from_bits(u, (**bits).clone());
        }
        let flags: Vec<bool> = u.graphs().par_iter().map(|g| self.member(g)).collect();
        let bits: BitVec = flags.into_iter().collect();
        u.cache.write().expect("cache lock").insert(key, Arc::new(bits.clone()));
        PropertyView::from_bits(u, bits)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, name: &str, items: &[T]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

impl fmt::Display for PropertyDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyDef::Builtin(b) => write!(f, "{b}"),
            PropertyDef::ForbiddenInduced(gs) => write_list(f, "forbidden_induced", gs),
            PropertyDef::ForbiddenSubgraph(gs) => write_list(f, "forbidden_subgraph", gs),
            PropertyDef::GeneratedInduced(gs) => write_list(f, "generated_induced", gs),
            PropertyDef::GeneratedSubgraph(gs) => write_list(f, "generated_subgraph", gs),
            PropertyDef::PlusG(g) => write!(f, "plus({g})"),
            PropertyDef::MinusG(g) => write!(f, "minus({g})"),
            PropertyDef::Listed(gs) => write_list(f, "listed", gs),
            PropertyDef::Without(p, gs) => {
                write!(f, "without({p}")?;
                for g in gs {
                    write!(f, ",{g}")?;
                }
                f.write_str(")")
            }
            PropertyDef::Product(ps) => write_list(f, "product", ps),
            PropertyDef::UnionOf(ps) => write_list(f, "union", ps),
            PropertyDef::IntersectionOf(ps) => write_list(f, "intersection", ps),
        }
    }
}
