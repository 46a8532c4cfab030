//! The finite universe of all graphs on `1..=n` vertices and extensional
//! property views over it.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use bitvec::prelude::*;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Graph, LabelledGraph};

pub const MAX_UNIVERSE_ORDER: usize = 8;

/// One-step neighbourhoods of each universe graph, by index.
#[derive(Debug)]
pub struct Relations {
    /// `G - v` for each vertex (deduplicated, order >= 1 only).
    pub vertex_deletions: Vec<Vec<usize>>,
    /// `G - e` for each edge.
    pub edge_deletions: Vec<Vec<usize>>,
    /// `G + e` for each non-edge.
    pub edge_additions: Vec<Vec<usize>>,
    /// Graphs one vertex larger having this one as a vertex deletion.
    pub vertex_extensions: Vec<Vec<usize>>,
}

pub struct Universe {
    n: usize,
    graphs: Vec<Graph>,
    index: HashMap<Graph, usize>,
    starts: Vec<usize>,
    checksum: String,
    relations: OnceLock<Relations>,
    down_sets: OnceLock<Vec<BitVec>>,
    sub_down_sets: OnceLock<Vec<BitVec>>,
    pub(crate) cache: RwLock<HashMap<String, Arc<BitVec>>>,
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe(n={}, size={}, checksum={})", self.n, self.graphs.len(), self.checksum)
    }
}

fn extend_by_one(level: &[Graph]) -> Vec<Graph> {
    let mut next: Vec<Graph> = level
        .par_iter()
        .flat_map_iter(|g| {
            let k = g.order();
            let base = *g.labelled();
            (0u32..1 << k).map(move |mask| {
                let mut rows = vec![0u16; k + 1];
                for (v, row) in rows.iter_mut().enumerate().take(k) {
                    *row = base.neighbours(v).bits() | (((mask >> v) & 1) as u16) << k;
                }
                rows[k] = mask as u16;
                LabelledGraph::from_rows(k + 1, &rows).expect("valid extension").canonical_form()
            })
        })
        .collect();
    next.par_sort_unstable();
    next.dedup();
    next
}

impl Universe {
    /// All non-isomorphic graphs of order `1..=n`, sorted by (order, code).
    pub fn enumerate(n: usize) -> Result<Arc<Universe>> {
        if !(1..=MAX_UNIVERSE_ORDER).contains(&n) {
            return Err(Error::UniverseRange(n));
        }
        let mut graphs = vec![Graph::edgeless(1)];
        let mut level = graphs.clone();
        for _ in 1..n {
            level = extend_by_one(&level);
            graphs.extend_from_slice(&level);
        }
        Ok(Arc::new(Self::from_sorted(n, graphs)))
    }

    fn from_sorted(n: usize, graphs: Vec<Graph>) -> Universe {
        let index = graphs.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let mut starts = vec![0; n + 2];
        for k in 1..=n + 1 {
            starts[k] = graphs.partition_point(|g| g.order() < k);
        }
        let mut hasher = Sha256::new();
        hasher.update(format!("{n}\n"));
        for g in &graphs {
            hasher.update(g.to_graph6());
            hasher.update("\n");
        }
        let checksum = hex::encode(&hasher.finalize()[..8]);
        Universe { n, graphs, index, starts, checksum, relations: OnceLock::new(), down_sets: OnceLock::new(), sub_down_sets: OnceLock::new(), cache: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn graph(&self, i: usize) -> &Graph {
        &self.graphs[i]
    }

    pub fn index_of(&self, g: &Graph) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index range of the graphs of order exactly `k`.
    pub fn order_range(&self, k: usize) -> std::ops::Range<usize> {
        if k == 0 || k > self.n {
            return 0..0;
        }
        self.starts[k]..self.starts[k + 1]
    }

    pub fn count_of_order(&self, k: usize) -> usize {
        self.order_range(k).len()
    }

    pub fn checksum(&self) -> &str {
        &self.checksum
    }

    pub fn relations(&self) -> &Relations {
        self.relations.get_or_init(|| self.compute_relations())
    }

    /// For each graph, the set of universe graphs that are induced subgraphs of it.
    pub fn induced_down_sets(&self) -> &[BitVec] {
        self.down_sets.get_or_init(|| {
            let rel = self.relations();
            let mut sets: Vec<BitVec> = Vec::with_capacity(self.len());
            for i in 0..self.len() {
                let mut b = bitvec![0; self.len()];
                b.set(i, true);
                for &d in &rel.vertex_deletions[i] {
                    b |= &sets[d];
                }
                sets.push(b);
            }
            sets
        })
    }

    /// For each graph, the set of universe graphs that are subgraphs of it.
    pub fn subgraph_down_sets(&self) -> &[BitVec] {
        self.sub_down_sets.get_or_init(|| {
            let rel = self.relations();
            let mut idx: Vec<usize> = (0..self.len()).collect();
            idx.sort_by_key(|&i| (self.graphs[i].order(), self.graphs[i].edge_count()));
            let mut sets: Vec<BitVec> = vec![BitVec::new(); self.len()];
            for i in idx {
                let mut b = bitvec![0; self.len()];
                b.set(i, true);
                for &d in rel.vertex_deletions[i].iter().chain(&rel.edge_deletions[i]) {
                    b |= &sets[d];
                }
                sets[i] = b;
            }
            sets
        })
    }

    fn compute_relations(&self) -> Relations {
        let lookup = |g: Graph| self.index_of(&g).expect("closed under deletion and same-order edits");
        let per_graph: Vec<_> = self
            .graphs
            .par_iter()
            .map(|g| {
                let mut dels: Vec<usize> = if g.order() > 1 {
                    (0..g.order()).map(|v| lookup(g.remove_vertex(v))).collect()
                } else {
                    Vec::new()
                };
                dels.sort_unstable();
                dels.dedup();
                let mut edel: Vec<usize> = g.labelled().edges().map(|(u, v)| lookup(g.remove_edge(u, v))).collect();
                edel.sort_unstable();
                edel.dedup();
                let mut eadd: Vec<usize> = g
                    .labelled()
                    .non_edges()
                    .map(|(u, v)| lookup(g.add_edge(u, v).expect("non-edge")))
                    .collect();
                eadd.sort_unstable();
                eadd.dedup();
                (dels, edel, eadd)
            })
            .collect();
        let mut ext = vec![Vec::new(); self.graphs.len()];
        for (i, (dels, _, _)) in per_graph.iter().enumerate() {
            for &d in dels {
                ext[d].push(i);
            }
        }
        let (vertex_deletions, rest): (Vec<_>, Vec<_>) = per_graph.into_iter().map(|(a, b, c)| (a, (b, c))).unzip();
        let (edge_deletions, edge_additions) = rest.into_iter().unzip();
        Relations { vertex_deletions, edge_deletions, edge_additions, vertex_extensions: ext }
    }

    /// One graph6 line per graph, in universe order.
    pub fn to_graph6_lines(&self) -> String {
        let mut s = String::new();
        for g in &self.graphs {
            s.push_str(&g.to_graph6());
            s.push('\n');
        }
        s
    }

    /// Reads a graph6 line list and checks it is exactly `enumerate(n)`.
    pub fn from_graph6_lines(text: &str) -> Result<Arc<Universe>> {
        let mut graphs = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            graphs.push(Graph::from_graph6(line)?);
        }
        let n = graphs.iter().map(Graph::order).max().unwrap_or(0);
        let fresh = Universe::enumerate(n)?;
        if fresh.graphs != graphs {
            return Err(Error::Parse("graph list is not a complete canonically ordered universe".into()));
        }
        Ok(fresh)
    }
}

/// Extensional view of a property: one membership bit per universe graph.
#[derive(Clone)]
pub struct PropertyView {
    universe: Arc<Universe>,
    bits: BitVec,
}

impl PartialEq for PropertyView {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) && self.bits == other.bits
    }
}

impl fmt::Debug for PropertyView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members().map(|g| g.to_graph6())).finish()
    }
}

impl PropertyView {
    pub fn empty(universe: &Arc<Universe>) -> Self {
        PropertyView { universe: universe.clone(), bits: bitvec![0; universe.len()] }
    }

    pub fn full(universe: &Arc<Universe>) -> Self {
        PropertyView { universe: universe.clone(), bits: bitvec![1; universe.len()] }
    }

    pub fn from_fn(universe: &Arc<Universe>, f: impl Fn(&Graph) -> bool + Sync + Send) -> Self {
        let flags: Vec<bool> = universe.graphs().par_iter().map(f).collect();
        PropertyView { universe: universe.clone(), bits: flags.into_iter().collect() }
    }

    pub(crate) fn from_bits(universe: &Arc<Universe>, bits: BitVec) -> Self {
        debug_assert_eq!(bits.len(), universe.len());
        PropertyView { universe: universe.clone(), bits }
    }

    /// View of an explicit graph set; graphs above the universe order are an error.
    pub fn from_graphs<'a>(universe: &Arc<Universe>, graphs: impl IntoIterator<Item = &'a Graph>) -> Result<Self> {
        let mut v = Self::empty(universe);
        for g in graphs {
            let i = universe.index_of(g).ok_or_else(|| Error::NotInUniverse(g.to_graph6()))?;
            v.bits.set(i, true);
        }
        Ok(v)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn bits(&self) -> &BitSlice {
        &self.bits
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Membership of `g`; graphs outside the universe are reported as non-members.
    pub fn contains(&self, g: &Graph) -> bool {
        self.universe.index_of(g).is_some_and(|i| self.bits[i])
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits.set(i, value);
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    pub fn member_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn members(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.bits.iter_ones().map(|i| self.universe.graph(i))
    }

    fn same_universe(&self, other: &PropertyView) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn union(&self, other: &PropertyView) -> Result<PropertyView> {
        self.same_universe(other)?;
        Ok(PropertyView { universe: self.universe.clone(), bits: self.bits.clone() | other.bits.clone() })
    }

    pub fn intersection(&self, other: &PropertyView) -> Result<PropertyView> {
        self.same_universe(other)?;
        Ok(PropertyView { universe: self.universe.clone(), bits: self.bits.clone() & other.bits.clone() })
    }

    pub fn difference(&self, other: &PropertyView) -> Result<PropertyView> {
        self.same_universe(other)?;
        Ok(PropertyView { universe: self.universe.clone(), bits: self.bits.clone() & !other.bits.clone() })
    }

    pub fn is_subset(&self, other: &PropertyView) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn same_as(&self, other: &PropertyView) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.bits == other.bits)
    }

    /// First graph (in universe order) on which the two views disagree.
    pub fn first_difference(&self, other: &PropertyView) -> Result<Option<Graph>> {
        self.same_universe(other)?;
        let diff = self.bits.clone() ^ other.bits.clone();
        Ok(diff.first_one().map(|i| *self.universe.graph(i)))
    }

    /// Smallest superset closed under induced subgraphs.
    pub fn induced_hereditary_closure(&self) -> PropertyView {
        let rel = self.universe.relations();
        let mut bits = self.bits.clone();
        for i in (0..bits.len()).rev() {
            if bits[i] {
                for &d in &rel.vertex_deletions[i] {
                    bits.set(d, true);
                }
            }
        }
        PropertyView { universe: self.universe.clone(), bits }
    }

    /// Smallest superset closed under induced supergraphs (inside the universe).
    pub fn geq_closure(&self) -> PropertyView {
        let rel = self.universe.relations();
        let mut bits = self.bits.clone();
        for i in 0..bits.len() {
            if !bits[i] && rel.vertex_deletions[i].iter().any(|&d| bits[d]) {
                bits.set(i, true);
            }
        }
        PropertyView { universe: self.universe.clone(), bits }
    }

    /// Smallest superset closed under subgraphs (deleting vertices and edges).
    pub fn hereditary_closure_down(&self) -> PropertyView {
        let rel = self.universe.relations();
        let u = &self.universe;
        let mut idx: Vec<usize> = (0..u.len()).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse((u.graph(i).order(), u.graph(i).edge_count())));
        let mut bits = self.bits.clone();
        for i in idx {
            if bits[i] {
                for &d in rel.vertex_deletions[i].iter().chain(&rel.edge_deletions[i]) {
                    bits.set(d, true);
                }
            }
        }
        PropertyView { universe: self.universe.clone(), bits }
    }

    /// `checksum:hexbits`, bit `i` of the universe stored MSB-first per nibble.
    pub fn to_hex(&self) -> String {
        let mut nibbles = String::with_capacity(self.bits.len().div_ceil(4));
        for chunk in self.bits.chunks(4) {
            let mut v = 0u8;
            for (k, b) in chunk.iter().enumerate() {
                v |= (*b as u8) << (3 - k);
            }
            nibbles.push(char::from_digit(v as u32, 16).expect("nibble"));
        }
        format!("{}:{}", self.universe.checksum(), nibbles)
    }

    pub fn from_hex(universe: &Arc<Universe>, text: &str) -> Result<PropertyView> {
        let (sum, body) = text.trim().split_once(':').ok_or_else(|| Error::Parse("expected checksum:bits".into()))?;
        if sum != universe.checksum() {
            return Err(Error::Checksum { expected: universe.checksum().to_string(), found: sum.to_string() });
        }
        if body.len() != universe.len().div_ceil(4) {
            return Err(Error::Parse("bit string length does not match the universe".into()));
        }
        let mut bits = BitVec::with_capacity(universe.len());
        for c in body.chars() {
            let v = c.to_digit(16).ok_or_else(|| Error::Parse(format!("bad hex digit {c:?}")))?;
            for k in 0..4 {
                if bits.len() < universe.len() {
                    bits.push(v >> (3 - k) & 1 == 1);
                } else if v >> (3 - k) & 1 == 1 {
                    return Err(Error::Parse("non-zero padding bits".into()));
                }
            }
        }
        Ok(PropertyView { universe: universe.clone(), bits })
    }
}
