//! Brute-force oracles that share no code with the library beyond reading
//! adjacency out of a `Graph`.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use propalg::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adj {
    pub n: usize,
    pub rows: Vec<u16>,
}

impl Adj {
    pub fn new(n: usize) -> Adj {
        Adj { n, rows: vec![0; n] }
    }

    pub fn from_graph(g: &Graph) -> Adj {
        let n = g.order();
        let mut a = Adj::new(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && g.has_edge(i, j) {
                    a.rows[i] |= 1 << j;
                }
            }
        }
        a
    }

    pub fn from_upper_bits(n: usize, bits: u64) -> Adj {
        let mut a = Adj::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits >> k & 1 == 1 {
                    a.rows[i] |= 1 << j;
                    a.rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        a
    }

    pub fn adj(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.adj(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, &edges).unwrap()
    }
}

fn code_under(a: &Adj, perm: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..a.n {
        for i in 0..j {
            code = code << 1 | a.adj(perm[i], perm[j]) as u128;
        }
    }
    code
}

/// Largest upper-triangle code over all orderings that list vertices by
/// non-increasing degree; an isomorphism invariant.
pub fn canonical_key(a: &Adj) -> (usize, u128) {
    fn go(a: &Adj, perm: &mut Vec<usize>, used: u16, best: &mut u128) {
        if perm.len() == a.n {
            *best = (*best).max(code_under(a, perm));
            return;
        }
        let want = (0..a.n).filter(|&v| used >> v & 1 == 0).map(|v| a.degree(v)).max().unwrap();
        for v in 0..a.n {
            if used >> v & 1 == 0 && a.degree(v) == want {
                perm.push(v);
                go(a, perm, used | 1 << v, best);
                perm.pop();
            }
        }
    }
    let mut best = 0;
    go(a, &mut Vec::new(), 0, &mut best);
    (a.n, best)
}

/// Canonical keys of every labelled graph on `n` vertices.
pub fn labelled_dedup(n: usize) -> BTreeSet<(usize, u128)> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(|bits| canonical_key(&Adj::from_upper_bits(n, bits))).collect()
}

/// Canonical keys of all one-vertex extensions of the given graphs.
pub fn extensions(reps: &[Adj]) -> BTreeSet<(usize, u128)> {
    let mut out = BTreeSet::new();
    for a in reps {
        for nb in 0u16..1 << a.n {
            let mut b = Adj::new(a.n + 1);
            for i in 0..a.n {
                b.rows[i] = a.rows[i] | ((nb >> i & 1) << a.n);
            }
            b.rows[a.n] = nb;
            out.insert(canonical_key(&b));
        }
    }
    out
}

/// One labelled representative per isomorphism class of order `n`.
pub fn representatives(n: usize) -> Vec<Adj> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for bits in 0..1u64 << pairs {
        let a = Adj::from_upper_bits(n, bits);
        if seen.insert(canonical_key(&a)) {
            reps.push(a);
        }
    }
    reps
}

#[derive(Clone, Copy, Debug)]
pub enum Part {
    Edgeless(Option<usize>),
    Complete(Option<usize>),
}

fn part_ok(a: &Adj, mask: u16, part: Part) -> bool {
    let size = mask.count_ones() as usize;
    let vs: Vec<usize> = (0..a.n).filter(|&v| mask >> v & 1 == 1).collect();
    let pairs = || vs.iter().enumerate().flat_map(|(k, &x)| vs[k + 1..].iter().map(move |&y| (x, y)));
    match part {
        Part::Edgeless(bound) => bound.is_none_or(|b| size <= b) && pairs().all(|(x, y)| !a.adj(x, y)),
        Part::Complete(bound) => bound.is_none_or(|b| size <= b) && pairs().all(|(x, y)| a.adj(x, y)),
    }
}

/// Tries all `k^n` assignments of vertices to parts.
pub fn partition_oracle(a: &Adj, parts: &[Part]) -> bool {
    let k = parts.len();
    let total = k.pow(a.n as u32);
    (0..total).any(|mut code| {
        let mut masks = vec![0u16; k];
        for v in 0..a.n {
            masks[code % k] |= 1 << v;
            code /= k;
        }
        masks.iter().zip(parts).all(|(&m, &p)| part_ok(a, m, p))
    })
}

/// Two-colouring by breadth-first search.
pub fn bipartite_bfs(a: &Adj) -> bool {
    let mut colour = vec![None; a.n];
    for s in 0..a.n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in 0..a.n {
                if a.adj(v, w) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!colour[v].unwrap());
                            queue.push_back(w);
                        }
                        Some(c) if c == colour[v].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    true
}

/// Acyclic: every component has one edge fewer than vertices.
pub fn is_forest(a: &Adj) -> bool {
    let edges: usize = (0..a.n).map(|v| a.degree(v)).sum::<usize>() / 2;
    let mut seen = 0u16;
    let mut components = 0;
    for s in 0..a.n {
        if seen >> s & 1 == 1 {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen |= 1 << s;
        while let Some(v) = stack.pop() {
            for w in 0..a.n {
                if a.adj(v, w) && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
    }
    edges + components == a.n
}

/// Orders `1..=k` of graph counts expected from the literature.
pub const COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];
