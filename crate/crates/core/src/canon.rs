//! Canonical forms for small graphs.
//!
//! Individualization-refinement: refine an ordered partition to an equitable
//! one, then branch on the vertices of the first smallest non-trivial cell.
//! Every discrete partition gives a relabeling; the canonical form is the
//! lexicographically largest graph6 string among them. Branching skips a
//! vertex that is a twin (same neighborhood apart from each other) of one
//! already tried in the same cell, since the transposition of twins is an
//! automorphism. There is no other automorphism pruning, so this is meant
//! for graphs of a few dozen vertices at most.

use crate::bitset::{Mask, WideMask};
use crate::graph::Graph;
use crate::io::to_graph6;

/// Relabeling-invariant byte string: the graph6 encoding of a canonical
/// relabeling of `g`.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_graph(g).1.into_bytes()
}

/// The canonical relabeling `perm` (vertex `i` becomes `perm[i]`).
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical_graph(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

fn canonical_graph(g: &Graph) -> (Vec<usize>, String) {
    if g.order() <= 64 {
        Canon::new(g, g.packed::<u64>()).run()
    } else {
        Canon::new(g, g.packed::<WideMask>()).run()
    }
}

struct Canon<'a, M> {
    graph: &'a Graph,
    rows: Vec<M>,
    best: Option<(String, Vec<usize>)>,
}

impl<'a, M: Mask> Canon<'a, M> {
    fn new(graph: &'a Graph, rows: Vec<M>) -> Self {
        Self {
            graph,
            rows,
            best: None,
        }
    }

    fn run(mut self) -> (Vec<usize>, String) {
        let n = self.graph.order();
        if n == 0 {
            return (Vec::new(), to_graph6(self.graph));
        }
        self.explore(vec![(0..n).collect()]);
        let (form, perm) = self.best.expect("at least one leaf");
        (perm, form)
    }

    fn cell_mask(&self, cell: &[usize]) -> M {
        let mut m = M::zeros(self.rows.len());
        for &v in cell {
            m.set(v);
        }
        m
    }

    /// Splits cells by neighbor counts into other cells until stable.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        'again: loop {
            for w in 0..cells.len() {
                let splitter = self.cell_mask(&cells[w]);
                for c in 0..cells.len() {
                    if cells[c].len() == 1 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cells[c]
                        .iter()
                        .map(|&v| (self.rows[v].and_count(&splitter), v))
                        .collect();
                    if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    let mut parts: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for (k, v) in keyed {
                        if last != Some(k) {
                            parts.push(Vec::new());
                            last = Some(k);
                        }
                        parts.last_mut().expect("pushed").push(v);
                    }
                    cells.splice(c..=c, parts);
                    continue 'again;
                }
            }
            return;
        }
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let mut ra = self.rows[a].clone();
        let mut rb = self.rows[b].clone();
        ra.clear(b);
        rb.clear(a);
        ra == rb
    }

    fn explore(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if tried.iter().any(|&a| self.twins(a, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cells[t].iter().copied().filter(|&x| x != v).collect();
            next.splice(t..=t, [vec![v], rest]);
            self.explore(next);
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut perm = vec![0; cells.len()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let form = to_graph6(&self.graph.permute(&perm));
        if self.best.as_ref().is_none_or(|(b, _)| form > *b) {
            self.best = Some((form, perm));
        }
    }
}
