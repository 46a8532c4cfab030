//! Canonical labelling by partition refinement plus individualization.
//!
//! Cells are ordered isomorphism-invariantly (split by neighbour counts into
//! earlier cells, smallest count first). Every discrete leaf of the search
//! tree yields a labelling; the one with the largest upper-triangle code is
//! canonical. Twin vertices (equal neighbourhoods up to each other) are
//! exchanged by an automorphism that fixes the current partition, so only one
//! twin per cell is individualized.

use super::{LabelledGraph, MAX_ORDER};

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    best: Option<(u128, [u8; MAX_ORDER])>,
}

fn refine(rows: &[u16], cells: &mut Vec<u16>) {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell.count_ones() == 1 {
                    continue;
                }
                let mut groups = [0u16; MAX_ORDER + 1];
                let mut c = cell;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    groups[(rows[v] & splitter).count_ones() as usize] |= 1 << v;
                }
                let pieces: Vec<u16> = groups.iter().copied().filter(|&g| g != 0).collect();
                if pieces.len() > 1 {
                    cells.splice(ci..=ci, pieces);
                    continue 'outer;
                }
            }
        }
        break;
    }
}

fn is_twin(rows: &[u16], u: usize, v: usize) -> bool {
    rows[u] & !(1 << v) == rows[v] & !(1 << u)
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u16]) {
        let mut perm = [0u8; MAX_ORDER];
        for (i, c) in cells.iter().enumerate() {
            perm[i] = c.trailing_zeros() as u8;
        }
        let mut code = 0u128;
        for j in 1..self.n {
            let row = self.rows[perm[j] as usize];
            for &pi in &perm[..j] {
                code = code << 1 | (row >> pi & 1) as u128;
            }
        }
        if self.best.map_or(true, |(b, _)| code > b) {
            self.best = Some((code, perm));
        }
    }

    fn descend(&mut self, mut cells: Vec<u16>) {
        refine(self.rows, &mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let ci = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let cell = cells[ci];
        let mut tried = 0u16;
        let mut c = cell;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let mut t = tried;
            let mut redundant = false;
            while t != 0 {
                let u = t.trailing_zeros() as usize;
                t &= t - 1;
                if is_twin(self.rows, u, v) {
                    redundant = true;
                    break;
                }
            }
            if redundant {
                continue;
            }
            tried |= 1 << v;
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..ci]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[ci + 1..]);
            self.descend(next);
        }
    }
}

/// Returns `perm` (canonical position -> original vertex) and the canonical code.
pub(super) fn canonical_labelling(g: &LabelledGraph) -> (Vec<u8>, u128) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), 0);
    }
    let mut search = Search { rows: g.rows(), n, best: None };
    search.descend(vec![g.vertices().bits()]);
    let (code, perm) = search.best.expect("search reaches a leaf");
    (perm[..n].to_vec(), code)
}
