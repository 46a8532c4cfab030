//! Small simple graphs on at most 16 vertices.
//!
//! [`LabelledGraph`] is a plain adjacency structure with one `u16` row per
//! vertex. [`Graph`] is an unlabelled graph: it always holds the canonical
//! labelling of its isomorphism class, so `==` is isomorphism.

mod canon;
mod embed;
mod graph6;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use graph6::{decode_graph6, encode_graph6};

/// Hard vertex cap: one adjacency row fits a `u16`.
pub const MAX_ORDER: usize = 16;

/// Bit mask over the vertices of a host graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u16::MAX)
        } else {
            VertexSet((1u16 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u16, |m, v| m | (1 << v)))
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a `u16`, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(u16);

impl Iterator for Bits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A graph with a fixed vertex labelling `0..order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelledGraph {
    order: u8,
    rows: [u16; MAX_ORDER],
}

impl LabelledGraph {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::CapExceeded(order));
        }
        Ok(LabelledGraph { order: order as u8, rows: [0; MAX_ORDER] })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(order)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows; asymmetric or looped input is rejected.
    pub fn from_rows(order: usize, rows: &[u16]) -> Result<Self> {
        let mut g = Self::new(order)?;
        let mask = VertexSet::full(order).bits();
        for (v, &row) in rows.iter().enumerate().take(order) {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange { vertex: 15 - row.leading_zeros() as usize, order });
            }
            if row >> v & 1 == 1 {
                return Err(Error::Loop(v));
            }
            g.rows[v] = row;
        }
        for u in 0..order {
            for v in 0..order {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::Invariant(format!("asymmetric adjacency at {u}-{v}")));
                }
            }
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        } else {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub(crate) fn rows(&self) -> &[u16] {
        &self.rows[..self.order()]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet(self.rows[u] & !((2u32 << u) - 1) as u16).iter().map(move |v| (u, v))
        })
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Adds `u-v`; fails on loops, out-of-range vertices, or an existing edge.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u.min(v), u.max(v)));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, false);
    }

    /// Subgraph induced by `s`, relabelled in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Result<LabelledGraph> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).iter().next().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, order: self.order() });
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> LabelledGraph {
        let verts: Vec<usize> = s.iter().collect();
        let mut g = LabelledGraph { order: verts.len() as u8, rows: [0; MAX_ORDER] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        g
    }

    pub fn complement(&self) -> LabelledGraph {
        let full = self.vertices().bits();
        let mut g = *self;
        for v in 0..self.order() {
            g.rows[v] = !self.rows[v] & full & !(1 << v);
        }
        g
    }

    fn combine(&self, other: &LabelledGraph, cross: bool) -> Result<LabelledGraph> {
        let (a, b) = (self.order(), other.order());
        let mut g = LabelledGraph::new(a + b)?;
        let low = VertexSet::full(a).bits();
        let high = VertexSet::full(a + b).bits() & !low;
        for v in 0..a {
            g.rows[v] = self.rows[v] | if cross { high } else { 0 };
        }
        for v in 0..b {
            g.rows[a + v] = (other.rows[v] << a) | if cross { low } else { 0 };
        }
        Ok(g)
    }

    /// Vertex-disjoint union; `self` keeps labels `0..a`, `other` is shifted by `a`.
    pub fn disjoint_union(&self, other: &LabelledGraph) -> Result<LabelledGraph> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &LabelledGraph) -> Result<LabelledGraph> {
        self.combine(other, true)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u16) -> u16 {
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices().bits();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(VertexSet(c));
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.connected_components().len() == 1
    }

    pub fn canonical_form(&self) -> Graph {
        let (perm, code) = canon::canonical_labelling(self);
        let mut inner = LabelledGraph { order: self.order, rows: [0; MAX_ORDER] };
        for (i, &pi) in perm.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                if self.has_edge(pi as usize, pj as usize) {
                    inner.rows[i] |= 1 << j;
                }
            }
        }
        Graph { inner, code }
    }

    /// Upper-triangle bit string in graph6 order, first bit most significant.
    #[cfg(test)]
    pub(crate) fn code(&self) -> u128 {
        let mut code = 0u128;
        for j in 1..self.order() {
            for i in 0..j {
                code = code << 1 | self.has_edge(i, j) as u128;
            }
        }
        code
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    pub fn contains_induced(&self, pattern: &LabelledGraph) -> bool {
        embed::contains_induced(self, pattern, 0)
    }

    pub fn contains_subgraph(&self, pattern: &LabelledGraph) -> bool {
        embed::contains_subgraph(self, pattern)
    }
}

impl fmt::Debug for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        write!(f, "LabelledGraph(n={}, {:?})", self.order(), edges)
    }
}

/// An unlabelled graph, stored in canonical labelling.
#[derive(Clone, Copy)]
pub struct Graph {
    inner: LabelledGraph,
    code: u128,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.inner.order == other.inner.order && self.code == other.code
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.order.hash(state);
        self.code.hash(state);
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.inner.order, self.code).cmp(&(other.inner.order, other.code))
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Graph::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

fn lift(r: Result<LabelledGraph>) -> Result<Graph> {
    r.map(|g| g.canonical_form())
}

impl Graph {
    /// The graph with no vertices; only used as an empty partition part.
    pub fn null() -> Graph {
        Graph { inner: LabelledGraph { order: 0, rows: [0; MAX_ORDER] }, code: 0 }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        lift(LabelledGraph::from_edges(order, edges))
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        lift(decode_graph6(s))
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Graph {
        let g = LabelledGraph::new(n).expect("order within cap");
        g.complement().canonical_form()
    }

    /// `\bar K_n`.
    pub fn edgeless(n: usize) -> Graph {
        LabelledGraph::new(n).expect("order within cap").canonical_form()
    }

    /// `P_n`: the path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("order within cap")
    }

    /// `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("order within cap")
    }

    /// `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::edgeless(a).join(&Graph::edgeless(b)).expect("order within cap")
    }

    /// `K_{1,k}`.
    pub fn star(k: usize) -> Graph {
        Graph::complete_bipartite(1, k)
    }

    pub fn labelled(&self) -> &LabelledGraph {
        &self.inner
    }

    pub fn order(&self) -> usize {
        self.inner.order()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.inner.degree(v)
    }

    pub fn vertices(&self) -> VertexSet {
        self.inner.vertices()
    }

    /// Canonical code; together with the order it identifies the class.
    pub fn code(&self) -> u128 {
        self.code
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(&self.inner)
    }

    /// Already canonical, so this is the identity.
    pub fn canonical_form(&self) -> Graph {
        *self
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self == other
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        lift(self.inner.disjoint_union(&other.inner))
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        lift(self.inner.join(&other.inner))
    }

    pub fn complement(&self) -> Graph {
        self.inner.complement().canonical_form()
    }

    /// Vertex indices refer to the canonical labelling.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        lift(self.inner.induced(s))
    }

    /// `pattern <= self`.
    pub fn contains_induced(&self, pattern: &Graph) -> bool {
        self.inner.contains_induced(&pattern.inner)
    }

    /// `pattern ⊆ self`: vertices and edges may be deleted.
    pub fn contains_subgraph(&self, pattern: &Graph) -> bool {
        self.inner.contains_subgraph(&pattern.inner)
    }

    /// Whether `self` has `a` and `b` as vertex-disjoint induced subgraphs.
    pub fn contains_disjoint_induced(&self, a: &Graph, b: &Graph) -> bool {
        embed::contains_disjoint_induced(&self.inner, &a.inner, &b.inner)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.inner;
        g.add_edge(u, v)?;
        Ok(g.canonical_form())
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.inner;
        g.remove_edge(u, v);
        g.canonical_form()
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let mut s = self.vertices();
        s.remove(v);
        self.inner.induced_unchecked(s).canonical_form()
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.inner.connected_components()
    }

    pub fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.order() * self.order().saturating_sub(1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count() == 0
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl From<LabelledGraph> for Graph {
    fn from(g: LabelledGraph) -> Graph {
        g.canonical_form()
    }
}
