//! Membership rules for the named builtin properties.

use std::fmt;

use crate::graph::LabelledGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Edgeless graphs, optionally with at most `s` vertices.
    Edgeless(Option<usize>),
    /// Complete graphs, optionally with at most `s` vertices.
    Complete(Option<usize>),
    Forests,
    Bipartite,
    Split,
    BoundedOrder(usize),
    PathComponents,
    CliqueWithPendants,
}

impl Builtin {
    pub fn member(self, g: &LabelledGraph) -> bool {
        let n = g.order();
        match self {
            Builtin::Edgeless(s) => g.edge_count() == 0 && s.map_or(true, |s| n <= s),
            Builtin::Complete(s) => g.edge_count() == n * n.saturating_sub(1) / 2 && s.map_or(true, |s| n <= s),
            Builtin::Forests => is_forest(g),
            Builtin::Bipartite => is_bipartite(g),
            Builtin::Split => is_split(g),
            Builtin::BoundedOrder(k) => n <= k,
            Builtin::PathComponents => (0..n).all(|v| g.degree(v) <= 2) && is_forest(g),
            Builtin::CliqueWithPendants => is_clique_with_pendants(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Edgeless(_) => "O",
            Builtin::Complete(_) => "K",
            Builtin::Forests => "forests",
            Builtin::Bipartite => "bipartite",
            Builtin::Split => "split",
            Builtin::BoundedOrder(_) => "bounded_order",
            Builtin::PathComponents => "path_components",
            Builtin::CliqueWithPendants => "clique_with_pendants",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Builtin::Edgeless(Some(s)) | Builtin::Complete(Some(s)) | Builtin::BoundedOrder(s) => {
                write!(f, "{}({s})", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

fn is_forest(g: &LabelledGraph) -> bool {
    g.edge_count() + g.connected_components().len() == g.order()
}

fn is_bipartite(g: &LabelledGraph) -> bool {
    let n = g.order();
    let mut colour = [u8::MAX; 16];
    for start in 0..n {
        if colour[start] != u8::MAX {
            continue;
        }
        colour[start] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Degree-sequence criterion: with degrees sorted descending and `m` the
/// largest index where `d_m >= m - 1`, the graph is split iff the top `m`
/// degrees sum to `m(m-1)` plus the remaining degrees.
fn is_split(g: &LabelledGraph) -> bool {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let m = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let rest: usize = d[m..].iter().sum();
    top == m * m.saturating_sub(1) + rest
}

/// All maximal cliques as bit masks (Bron-Kerbosch with pivoting).
pub(crate) fn maximal_cliques(g: &LabelledGraph) -> Vec<u16> {
    fn bk(g: &LabelledGraph, r: u16, p: u16, x: u16, out: &mut Vec<u16>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !g.neighbours(pivot).bits();
        let (mut p, mut x) = (p, x);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let nv = g.neighbours(v).bits();
            bk(g, r | 1 << v, p & nv, x & nv, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        bk(g, 0, g.vertices().bits(), 0, &mut out);
    }
    out.sort_unstable();
    out
}

/// A clique plus isolated vertices plus end-vertices attached to distinct
/// clique vertices. Some maximal clique works whenever any clique does: an
/// end-vertex adjacent to a clique vertex `c` can only extend the clique when
/// the clique is `{c}`, and then `{c, v}` serves equally well.
fn is_clique_with_pendants(g: &LabelledGraph) -> bool {
    if g.order() == 0 {
        return true;
    }
    maximal_cliques(g).into_iter().any(|clique| {
        let mut used = 0u16;
        g.vertices().iter().filter(|&v| clique >> v & 1 == 0).all(|v| {
            let nb = g.neighbours(v).bits();
            match nb.count_ones() {
                0 => true,
                1 if nb & clique != 0 && used & nb == 0 => {
                    used |= nb;
                    true
                }
                _ => false,
            }
        })
    })
}
