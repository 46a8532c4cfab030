//! Backtracking embeddings of a pattern into a host graph.

use std::collections::HashSet;

use super::{LabelledGraph, MAX_ORDER};

/// Pattern vertices ordered so each one has many already-placed neighbours.
fn pattern_order(p: &LabelledGraph) -> Vec<usize> {
    let n = p.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u16;
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((p.rows[v] & placed).count_ones(), p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct Embedder<'a> {
    host: &'a LabelledGraph,
    pattern: &'a LabelledGraph,
    order: Vec<usize>,
    induced: bool,
    map: [u8; MAX_ORDER],
}

impl Embedder<'_> {
    /// Calls `f` with the host vertex set of each embedding; `f` returns `true` to stop.
    fn run(&mut self, depth: usize, used: u16, f: &mut dyn FnMut(u16) -> bool) -> bool {
        if depth == self.order.len() {
            return f(used);
        }
        let pv = self.order[depth];
        let mut cand = self.host.vertices().bits() & !used;
        for (k, &prev) in self.order[..depth].iter().enumerate() {
            let hrow = self.host.rows[self.map[k] as usize];
            if self.pattern.has_edge(pv, prev) {
                cand &= hrow;
            } else if self.induced {
                cand &= !hrow;
            }
        }
        let need = self.pattern.degree(pv);
        while cand != 0 {
            let hv = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if self.host.degree(hv) < need {
                continue;
            }
            self.map[depth] = hv as u8;
            if self.run(depth + 1, used | 1 << hv, f) {
                return true;
            }
        }
        false
    }
}

fn embeddings(host: &LabelledGraph, pattern: &LabelledGraph, induced: bool, avoid: u16, f: &mut dyn FnMut(u16) -> bool) -> bool {
    if pattern.order() > host.order() - (avoid & host.vertices().bits()).count_ones() as usize {
        return false;
    }
    if pattern.edge_count() > host.edge_count() {
        return false;
    }
    let mut e = Embedder { host, pattern, order: pattern_order(pattern), induced, map: [0; MAX_ORDER] };
    e.run(0, avoid, &mut |used| f(used & !avoid))
}

pub(super) fn contains_induced(host: &LabelledGraph, pattern: &LabelledGraph, avoid: u16) -> bool {
    embeddings(host, pattern, true, avoid, &mut |_| true)
}

pub(super) fn contains_subgraph(host: &LabelledGraph, pattern: &LabelledGraph) -> bool {
    embeddings(host, pattern, false, 0, &mut |_| true)
}

pub(super) fn contains_disjoint_induced(host: &LabelledGraph, a: &LabelledGraph, b: &LabelledGraph) -> bool {
    if a.order() + b.order() > host.order() {
        return false;
    }
    let mut seen = HashSet::new();
    embeddings(host, a, true, 0, &mut |image| seen.insert(image) && contains_induced(host, b, image))
}
