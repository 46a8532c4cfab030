//! Deciding and enumerating `(P_1, ..., P_k)`-partitions.
//!
//! A vertex set splits into (possibly empty) parts, part `i` inducing a
//! member of `P_i`. The backtracking solver checks a part while it grows only
//! when its factor is certified induced-hereditary; other factors are checked
//! at the leaves, since a non-member part may still grow into a member.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, LabelledGraph, VertexSet};
use crate::properties::{classes, PropertyDef};
use crate::universe::{PropertyView, Universe};

/// Largest number of labelled assignments `enumerate_partitions` will scan.
pub const ENUMERATION_GUARD: u128 = 1 << 24;

/// A factor of a product: anything with a membership test.
pub trait Factor: Sync {
    fn contains(&self, g: &Graph) -> bool;
    /// Only a verified or analytically guaranteed certificate may return true.
    fn induced_hereditary(&self) -> bool;
    /// Identity used to recognise repeated factors.
    fn key(&self) -> String;
}

impl Factor for PropertyDef {
    fn contains(&self, g: &Graph) -> bool {
        self.member(g)
    }

    fn induced_hereditary(&self) -> bool {
        self.certificates().induced_hereditary
    }

    fn key(&self) -> String {
        self.to_string()
    }
}

/// A materialized view used as a factor; its heredity flag comes from an
/// exhaustive check on the universe.
#[derive(Clone, Debug)]
pub struct ViewFactor {
    pub name: String,
    pub view: PropertyView,
    induced_hereditary: bool,
}

impl ViewFactor {
    pub fn new(name: impl Into<String>, view: PropertyView) -> Self {
        let induced_hereditary = classes::is_induced_hereditary_up_to(&view).holds;
        ViewFactor { name: name.into(), view, induced_hereditary }
    }
}

impl Factor for ViewFactor {
    fn contains(&self, g: &Graph) -> bool {
        g.order() == 0 || self.view.contains(g)
    }

    fn induced_hereditary(&self) -> bool {
        self.induced_hereditary
    }

    fn key(&self) -> String {
        format!("{}:{}", self.name, self.view.to_hex())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    /// Check growing parts of certified induced-hereditary factors.
    Certified,
    /// Check parts only at the leaves.
    Off,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Labelled,
    /// One representative per multiset of (factor, induced part), where
    /// identical factors count as the same factor.
    Essential,
}

/// A partition of the vertices of `graph` (in its canonical labelling).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCertificate {
    pub graph: Graph,
    pub parts: Vec<Vec<usize>>,
    pub induced: Vec<Graph>,
}

impl PartitionCertificate {
    fn new(g: &Graph, masks: &[u16]) -> Self {
        PartitionCertificate {
            graph: *g,
            parts: masks.iter().map(|&m| VertexSet::from_bits(m).iter().collect()).collect(),
            induced: masks.iter().map(|&m| g.labelled().induced_unchecked(VertexSet::from_bits(m)).canonical_form()).collect(),
        }
    }

    /// Re-checks that the parts partition the vertices and each part is a member.
    pub fn validate<F: Factor>(&self, factors: &[F]) -> bool {
        let mut seen = 0u16;
        for part in &self.parts {
            for &v in part {
                if v >= self.graph.order() || seen >> v & 1 == 1 {
                    return false;
                }
                seen |= 1 << v;
            }
        }
        seen == self.graph.vertices().bits()
            && self.parts.len() == factors.len()
            && self.parts.iter().zip(factors).all(|(part, f)| {
                let s = VertexSet::from_vertices(part.iter().copied());
                f.contains(&self.graph.labelled().induced_unchecked(s).canonical_form())
            })
    }
}

struct Solver<'a, F> {
    g: &'a LabelledGraph,
    factors: &'a [F],
    prune: Vec<bool>,
    order: Vec<usize>,
    memo: HashMap<(usize, u16), bool>,
    masks: Vec<u16>,
}

impl<F: Factor> Solver<'_, F> {
    fn member(&mut self, i: usize, mask: u16) -> bool {
        if mask == 0 {
            return true;
        }
        if let Some(&b) = self.memo.get(&(i, mask)) {
            return b;
        }
        let part = self.g.induced_unchecked(VertexSet::from_bits(mask)).canonical_form();
        let b = self.factors[i].contains(&part);
        self.memo.insert((i, mask), b);
        b
    }

    /// Visits complete valid assignments in lexicographic order; `visit` returns true to stop.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[u16]) -> bool) -> bool {
        if depth == self.order.len() {
            for i in 0..self.factors.len() {
                if !self.prune[i] && !self.member(i, self.masks[i]) {
                    return false;
                }
            }
            return visit(&self.masks);
        }
        let v = self.order[depth];
        for i in 0..self.factors.len() {
            let grown = self.masks[i] | 1 << v;
            if self.prune[i] && !self.member(i, grown) {
                continue;
            }
            self.masks[i] = grown;
            let stop = self.run(depth + 1, visit);
            self.masks[i] &= !(1 << v);
            if stop {
                return true;
            }
        }
        false
    }
}

fn solve<F: Factor>(g: &Graph, factors: &[F], pruning: Pruning, visit: &mut dyn FnMut(&[u16]) -> bool) {
    let lg = g.labelled();
    let mut order: Vec<usize> = (0..lg.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(lg.degree(v)), v));
    let prune = factors.iter().map(|f| pruning == Pruning::Certified && f.induced_hereditary()).collect();
    let mut s = Solver { g: lg, factors, prune, order, memo: HashMap::new(), masks: vec![0; factors.len()] };
    s.run(0, visit);
}

/// The first valid partition in the solver's assignment order, if any.
pub fn find_partition<F: Factor>(g: &Graph, factors: &[F]) -> Option<PartitionCertificate> {
    find_partition_with(g, factors, Pruning::Certified)
}

pub fn find_partition_with<F: Factor>(g: &Graph, factors: &[F], pruning: Pruning) -> Option<PartitionCertificate> {
    if factors.is_empty() {
        return (g.order() == 0).then(|| PartitionCertificate::new(g, &[]));
    }
    let mut found = None;
    solve(g, factors, pruning, &mut |masks| {
        found = Some(PartitionCertificate::new(g, masks));
        true
    });
    found
}

pub fn product_membership<F: Factor>(g: &Graph, factors: &[F]) -> bool {
    find_partition(g, factors).is_some()
}

pub fn enumerate_partitions<F: Factor>(g: &Graph, factors: &[F], mode: Mode) -> Result<Vec<PartitionCertificate>> {
    let total = (factors.len() as u128).pow(g.order() as u32);
    if total > ENUMERATION_GUARD {
        return Err(Error::PartitionGuard(total));
    }
    let mut all = Vec::new();
    if factors.is_empty() {
        if g.order() == 0 {
            all.push(PartitionCertificate::new(g, &[]));
        }
        return Ok(all);
    }
    solve(g, factors, Pruning::Certified, &mut |masks| {
        all.push(PartitionCertificate::new(g, masks));
        false
    });
    if mode == Mode::Labelled {
        return Ok(all);
    }
    let keys: Vec<String> = factors.iter().map(Factor::key).collect();
    let class: Vec<usize> = keys.iter().map(|k| keys.iter().position(|x| x == k).expect("own key")).collect();
    let mut seen = std::collections::HashSet::new();
    Ok(all
        .into_iter()
        .filter(|c| {
            let mut sig: Vec<(usize, Graph)> = c.induced.iter().enumerate().map(|(i, h)| (class[i], *h)).collect();
            sig.sort();
            seen.insert(sig)
        })
        .collect())
}

pub fn product_view<F: Factor>(factors: &[F], u: &Arc<Universe>) -> PropertyView {
    PropertyView::from_fn(u, |g| product_membership(g, factors))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equality {
    pub equal: bool,
    /// First graph in universe order on which the two sides differ.
    pub counterexample: Option<Graph>,
}

impl Equality {
    pub fn of(a: &PropertyView, b: &PropertyView) -> Result<Equality> {
        let counterexample = a.first_difference(b)?;
        Ok(Equality { equal: counterexample.is_none(), counterexample })
    }
}

pub fn equal_products_up_to<F: Factor, G: Factor>(lhs: &[F], rhs: &[G], u: &Arc<Universe>) -> Equality {
    let graphs = u.graphs();
    let counterexample = graphs
        .par_iter()
        .find_first(|g| product_membership(g, lhs) != product_membership(g, rhs))
        .copied();
    Equality { equal: counterexample.is_none(), counterexample }
}
