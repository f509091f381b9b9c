//! Labeled simple graphs on vertices `0..n`.

use std::fmt;

use thiserror::Error;

use crate::bitset::{Mask, VertexSet, WideMask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("{what} needs k >= {min}, got {k}")]
    TooSmall {
        what: &'static str,
        k: usize,
        min: usize,
    },
}

/// A simple undirected graph stored as one neighbor set per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Builds a graph from packed adjacency words. Only used for n <= 64.
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        Self {
            adj: rows.iter().map(|&r| VertexSet::from_word(r)).collect(),
        }
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Adds the edge `{i, j}`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(GraphError::Loop(i));
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check(i)?;
        self.check(j)?;
        self.adj[i].remove(j);
        self.adj[j].remove(i);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.order() && self.adj[i].contains(j)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Δ(G); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    /// Checks symmetry, irreflexivity and that no neighbor id is out of range.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.order();
        for (i, row) in self.adj.iter().enumerate() {
            if row.contains(i) {
                return Err(format!("loop at {i}"));
            }
            if row.bound() > n {
                return Err(format!("row {i} references a vertex >= {n}"));
            }
            for j in row.iter() {
                if !self.adj[j].contains(i) {
                    return Err(format!("edge {i}-{j} is not symmetric"));
                }
            }
        }
        Ok(())
    }

    pub fn cycle(k: usize) -> Result<Self, GraphError> {
        if k < 3 {
            return Err(GraphError::TooSmall {
                what: "cycle",
                k,
                min: 3,
            });
        }
        Self::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    pub fn path(k: usize) -> Result<Self, GraphError> {
        if k < 1 {
            return Err(GraphError::TooSmall {
                what: "path",
                k,
                min: 1,
            });
        }
        Self::from_edges(k, (1..k).map(|i| (i - 1, i)))
    }

    pub fn complete(k: usize) -> Result<Self, GraphError> {
        if k < 1 {
            return Err(GraphError::TooSmall {
                what: "complete graph",
                k,
                min: 1,
            });
        }
        Self::from_edges(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
    }

    /// Star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Self {
        Self::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("valid star")
    }

    /// `K_{a,a}` minus the perfect matching `x_i y_i`, with `x_i = i` and
    /// `y_i = a + i`.
    pub fn complete_bipartite_minus_matching(a: usize) -> Self {
        let edges = (0..a).flat_map(|i| (0..a).filter(move |&j| j != i).map(move |j| (i, a + j)));
        Self::from_edges(2 * a, edges).expect("valid bipartite graph")
    }

    /// The corona: vertex `n + i` is a new leaf attached to `i`.
    pub fn corona(&self) -> Self {
        let n = self.order();
        let mut g = Self::empty(2 * n);
        for (i, j) in self.edges() {
            g.add_edge(i, j).expect("in range");
        }
        for i in 0..n {
            g.add_edge(i, n + i).expect("in range");
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.order();
        let mut g = Self::empty(off + other.order());
        for (i, j) in self.edges() {
            g.add_edge(i, j).expect("in range");
        }
        for (i, j) in other.edges() {
            g.add_edge(off + i, off + j).expect("in range");
        }
        g
    }

    /// Identifies `v1` in `g1` with `v2` in `g2`.
    ///
    /// The merged vertex is labeled 0, followed by the other vertices of `g1`
    /// in increasing order and then the other vertices of `g2`.
    pub fn vertex_amalgamation(
        g1: &Self,
        v1: usize,
        g2: &Self,
        v2: usize,
    ) -> Result<Self, GraphError> {
        g1.check(v1)?;
        g2.check(v2)?;
        let (n1, n2) = (g1.order(), g2.order());
        let map1 = |x: usize| match x.cmp(&v1) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => x + 1,
            std::cmp::Ordering::Greater => x,
        };
        let map2 = |x: usize| match x.cmp(&v2) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Less => n1 + x,
            std::cmp::Ordering::Greater => n1 + x - 1,
        };
        let mut g = Self::empty(n1 + n2 - 1);
        for (i, j) in g1.edges() {
            g.add_edge(map1(i), map1(j))?;
        }
        for (i, j) in g2.edges() {
            g.add_edge(map2(i), map2(j))?;
        }
        Ok(g)
    }

    /// S(G): vertices adjacent to at least one leaf.
    pub fn support_vertices(&self) -> VertexSet {
        let mut s = VertexSet::new();
        for row in &self.adj {
            if row.len() == 1 {
                s.insert(row.iter().next().expect("one neighbor"));
            }
        }
        s
    }

    /// G[s], relabeled by increasing original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Self, GraphError> {
        if s.bound() > self.order() {
            return Err(GraphError::OutOfRange {
                vertex: s.bound() - 1,
                order: self.order(),
            });
        }
        let keep: Vec<usize> = s.iter().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut g = Self::empty(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            for j in self.adj[old].intersection(s).iter() {
                g.adj[new].insert(index[j]);
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Components in order of their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                for w in self.adj[u].iter() {
                    if comp.insert(w) {
                        frontier.push(w);
                    }
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// True when the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Relabels vertex `i` as `perm[i]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut g = Self::empty(self.order());
        for (i, j) in self.edges() {
            g.add_edge(perm[i], perm[j]).expect("permutation in range");
        }
        g
    }

    pub(crate) fn packed<M: Mask>(&self) -> Vec<M> {
        self.adj.iter().map(|r| r.to_mask(self.order())).collect()
    }

    pub(crate) fn packed_any(&self) -> Rows {
        if self.order() <= 64 {
            Rows::Narrow(self.packed())
        } else {
            Rows::Wide(self.packed())
        }
    }

    /// Adjacency words; `None` when the graph has more than 64 vertices.
    pub fn rows_u64(&self) -> Option<Vec<u64>> {
        (self.order() <= 64).then(|| self.packed::<u64>())
    }
}

/// Packed adjacency rows, one word per row when the graph fits in 64 bits.
pub(crate) enum Rows {
    Narrow(Vec<u64>),
    Wide(Vec<WideMask>),
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("])")
    }
}
