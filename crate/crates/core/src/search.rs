//! Exhaustive searches for m-γt-critical graphs of order Δ + m with δ ≥ 2.
//!
//! [`structured_search`] fixes a maximum-degree vertex `v = 0` with
//! `N(v) = 1..=Δ`, wires the vertices outside `N[v]` as a single P3
//! (`m = 4`) or as `(m − 1)/2` disjoint P2s (odd `m`), splits `N(v)` into
//! the blocks each outside vertex sees, and enumerates every edge set inside
//! `N(v)`. [`exhaustive_search_all_graphs`] assumes nothing beyond
//! `N(0) = 1..=Δ` and serves as a cross-check on small orders.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::canon::canonical_labeling;
use crate::criticality::{is_critical_with_value, packed_lemma2};
use crate::graph::Graph;
use crate::io::to_graph6;

pub const DEFAULT_CAP: usize = 13;
pub const EXHAUSTIVE_MAX_ORDER: usize = 8;

/// Shards per composition are `2^SHARD_BITS` (fewer when there are fewer
/// free edges).
const SHARD_BITS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("unsupported m={0}: structured search needs m = 4 or odd m >= 3")]
    UnsupportedM(usize),
    #[error("delta must be at least 2, got {0}")]
    DeltaTooSmall(usize),
    #[error("order {order} exceeds the search cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("{0} free edge slots do not fit a 64-bit counter")]
    TooManyFreeEdges(usize),
    #[error("exhaustive search supports n <= {max}, got {n}")]
    OrderTooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Skeleton {
    SingleP3,
    AllP2 { pairs: usize },
}

impl Skeleton {
    pub fn for_m(m: usize) -> Result<Self, SearchError> {
        match m {
            4 => Ok(Skeleton::SingleP3),
            _ if m >= 3 && m % 2 == 1 => Ok(Skeleton::AllP2 { pairs: (m - 1) / 2 }),
            _ => Err(SearchError::UnsupportedM(m)),
        }
    }

    pub fn blocks(self) -> usize {
        match self {
            Skeleton::SingleP3 => 2,
            Skeleton::AllP2 { pairs } => 2 * pairs,
        }
    }
}

/// One composition of `N(v)` into outside-neighborhood blocks.
///
/// Block `b` is the set of `N(v)` vertices whose unique outside neighbor is
/// the `b`-th outside vertex: `u1`, `u3` for [`Skeleton::SingleP3`];
/// `u1, w1, u2, w2, ..` for [`Skeleton::AllP2`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub m: usize,
    pub delta: usize,
    pub skeleton: Skeleton,
    pub partition: Vec<usize>,
}

impl SearchSpec {
    pub fn order(&self) -> usize {
        self.delta + self.m
    }

    /// The forced edges. Labels: `v = 0`, `N(v) = 1..=Δ` in block order,
    /// then `u1 u2 u3` or `u1 w1 u2 w2 ..`.
    pub fn skeleton_graph(&self) -> Graph {
        let d = self.delta;
        let mut g = Graph::empty(self.order());
        let mut add = |i, j| g.add_edge(i, j).expect("skeleton edge in range");
        for x in 1..=d {
            add(0, x);
        }
        let owners: Vec<usize> = match self.skeleton {
            Skeleton::SingleP3 => {
                add(d + 1, d + 2);
                add(d + 2, d + 3);
                vec![d + 1, d + 3]
            }
            Skeleton::AllP2 { pairs } => {
                for i in 0..pairs {
                    add(d + 1 + 2 * i, d + 2 + 2 * i);
                }
                (0..2 * pairs).map(|b| d + 1 + b).collect()
            }
        };
        let mut x = 1;
        for (&size, &owner) in self.partition.iter().zip(&owners) {
            for _ in 0..size {
                add(x, owner);
                x += 1;
            }
        }
        g
    }
}

impl fmt::Display for SearchSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partition.iter().map(|p| p.to_string()).collect();
        write!(
            f,
            "m={} delta={} blocks={}",
            self.m,
            self.delta,
            parts.join("+")
        )
    }
}

/// Block compositions up to swapping `u1 ↔ u3` (P3) or the two ends of a
/// pair and the order of pairs (P2s), in lexicographic order.
pub fn compositions(m: usize, delta: usize) -> Result<Vec<SearchSpec>, SearchError> {
    let skeleton = Skeleton::for_m(m)?;
    let spec = |partition| SearchSpec {
        m,
        delta,
        skeleton,
        partition,
    };
    Ok(match skeleton {
        Skeleton::SingleP3 => (1..=delta / 2).map(|a| spec(vec![a, delta - a])).collect(),
        Skeleton::AllP2 { pairs } => {
            let mut out = Vec::new();
            pair_multisets(delta, pairs, (1, 1), &mut Vec::new(), &mut out);
            out.into_iter().map(spec).collect()
        }
    })
}

fn pair_multisets(
    rest: usize,
    pairs: usize,
    min: (usize, usize),
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pairs == 0 {
        if rest == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if rest < 2 * pairs {
        return;
    }
    for p in min.0..=rest / 2 {
        let q_min = if p == min.0 { min.1.max(p) } else { p };
        for q in q_min..=rest - p {
            if rest - p - q < 2 * (pairs - 1) {
                break;
            }
            cur.extend([p, q]);
            pair_multisets(rest - p - q, pairs - 1, (p, q), cur, out);
            cur.truncate(cur.len() - 2);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub cap: usize,
    /// Skip disconnected candidates and those with a lemma-2 witness before
    /// running the solver.
    pub prune: bool,
    /// Stop after this many candidates. A budgeted run is sequential so that
    /// the explored prefix is deterministic.
    pub budget: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            prune: true,
            budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Critical graphs up to isomorphism, each canonically labeled, sorted
    /// by canonical form.
    pub found: Vec<Graph>,
    /// Candidates generated.
    pub nodes_explored: u64,
    pub exhausted: bool,
}

impl SearchOutcome {
    pub fn graph6_lines(&self) -> Vec<String> {
        self.found.iter().map(to_graph6).collect()
    }
}

/// A candidate family: fixed base rows plus a set of free vertex pairs,
/// each present or absent according to one bit of a counter.
struct Space {
    base: Vec<u64>,
    slots: Vec<(usize, usize)>,
    m: usize,
    max_degree: usize,
}

impl Space {
    fn rows(&self, bits: u64) -> Vec<u64> {
        let mut rows = self.base.clone();
        let mut b = bits;
        while b != 0 {
            let k = b.trailing_zeros() as usize;
            b &= b - 1;
            let (i, j) = self.slots[k];
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        rows
    }

    fn accepts(&self, rows: &[u64], prune: bool, order: &[usize]) -> bool {
        if rows
            .iter()
            .any(|r| r.count_ones() as usize > self.max_degree || r.count_ones() < 2)
        {
            return false;
        }
        if prune && (!connected(rows) || packed_lemma2(rows).is_some()) {
            return false;
        }
        is_critical_with_value(rows, self.m, order)
    }

    fn shards(&self) -> (usize, u64) {
        let hi = self.slots.len().min(SHARD_BITS);
        (self.slots.len() - hi, 1u64 << hi)
    }
}

fn connected(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return true;
    }
    let all = u64::MAX >> (64 - n);
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Explores every candidate of every space and merges results by canonical
/// form.
fn explore(spaces: &[Space], opts: &SearchOptions) -> SearchOutcome {
    let mut found: BTreeMap<String, Graph> = BTreeMap::new();
    let mut keep = |rows: &[u64]| {
        let g = Graph::from_rows(rows);
        let c = g.permute(&canonical_labeling(&g));
        found.entry(to_graph6(&c)).or_insert(c);
    };
    let mut nodes = 0u64;
    let mut exhausted = true;
    if let Some(budget) = opts.budget {
        'all: for s in spaces {
            let order: Vec<usize> = (0..s.base.len()).collect();
            for bits in 0..1u64 << s.slots.len() {
                if nodes >= budget {
                    exhausted = false;
                    break 'all;
                }
                nodes += 1;
                let rows = s.rows(bits);
                if s.accepts(&rows, opts.prune, &order) {
                    keep(&rows);
                }
            }
        }
    } else {
        let counter = AtomicU64::new(0);
        let jobs: Vec<(usize, u64)> = spaces
            .iter()
            .enumerate()
            .flat_map(|(i, s)| (0..s.shards().1).map(move |h| (i, h)))
            .collect();
        let hits: Vec<Vec<Vec<u64>>> = jobs
            .par_iter()
            .map(|&(i, h)| {
                let s = &spaces[i];
                let order: Vec<usize> = (0..s.base.len()).collect();
                let (lo, _) = s.shards();
                let mut out = Vec::new();
                for low in 0..1u64 << lo {
                    let rows = s.rows(h << lo | low);
                    if s.accepts(&rows, opts.prune, &order) {
                        out.push(rows);
                    }
                }
                counter.fetch_add(1 << lo, Ordering::Relaxed);
                out
            })
            .collect();
        for rows in hits.iter().flatten() {
            keep(rows);
        }
        nodes = counter.into_inner();
    }
    SearchOutcome {
        found: found.into_values().collect(),
        nodes_explored: nodes,
        exhausted,
    }
}

fn free_slots(vertices: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let vs: Vec<usize> = vertices.collect();
    let mut slots = Vec::new();
    for (a, &i) in vs.iter().enumerate() {
        for &j in &vs[a + 1..] {
            slots.push((i, j));
        }
    }
    slots
}

/// All m-γt-critical graphs of order Δ + m with maximum degree Δ and
/// δ ≥ 2, up to isomorphism, for `m = 4` or odd `m ≥ 3`.
pub fn structured_search(
    m: usize,
    delta: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    Skeleton::for_m(m)?;
    if delta < 2 {
        return Err(SearchError::DeltaTooSmall(delta));
    }
    if delta + m > opts.cap {
        return Err(SearchError::CapExceeded {
            order: delta + m,
            cap: opts.cap,
        });
    }
    let slots = free_slots(1..=delta);
    if slots.len() >= 64 {
        return Err(SearchError::TooManyFreeEdges(slots.len()));
    }
    let spaces: Vec<Space> = compositions(m, delta)?
        .iter()
        .map(|spec| Space {
            base: spec.skeleton_graph().rows_u64().expect("order within cap"),
            slots: slots.clone(),
            m,
            max_degree: delta,
        })
        .collect();
    Ok(explore(&spaces, opts))
}

/// All m-γt-critical graphs on `n` vertices with maximum degree `n − m` and
/// δ ≥ 2, up to isomorphism, without structural assumptions.
///
/// Vertex 0 is taken to be a maximum-degree vertex with `N(0) = 1..=n − m`;
/// every pair among `1..n` is free.
pub fn exhaustive_search_all_graphs(n: usize, m: usize) -> Result<SearchOutcome, SearchError> {
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(SearchError::OrderTooLarge {
            n,
            max: EXHAUSTIVE_MAX_ORDER,
        });
    }
    if m < 2 || m + 2 > n {
        return Ok(SearchOutcome {
            found: Vec::new(),
            nodes_explored: 0,
            exhausted: true,
        });
    }
    let delta = n - m;
    let mut base = vec![0u64; n];
    for x in 1..=delta {
        base[0] |= 1 << x;
        base[x] |= 1;
    }
    let space = Space {
        base,
        slots: free_slots(1..=n - 1),
        m,
        max_degree: delta,
    };
    Ok(explore(
        &[space],
        &SearchOptions {
            cap: n,
            prune: false,
            budget: None,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn composition_counts() {
        let parts = |m, d| -> Vec<Vec<usize>> {
            compositions(m, d)
                .unwrap()
                .into_iter()
                .map(|s| s.partition)
                .collect()
        };
        assert_eq!(parts(4, 5), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(parts(3, 4), vec![vec![1, 3], vec![2, 2]]);
        assert_eq!(parts(5, 5), vec![vec![1, 1, 1, 2]]);
        assert_eq!(
            parts(5, 6),
            vec![vec![1, 1, 1, 3], vec![1, 1, 2, 2], vec![1, 2, 1, 2]]
        );
        assert!(parts(5, 3).is_empty());
        assert!(matches!(
            compositions(6, 4),
            Err(SearchError::UnsupportedM(6))
        ));
    }

    #[test]
    fn skeleton_layouts() {
        let s = &compositions(4, 3).unwrap()[0];
        let g = s.skeleton_graph();
        assert_eq!(g.order(), 7);
        assert!(g.has_edge(1, 4) && g.has_edge(2, 6) && g.has_edge(3, 6));
        assert!(g.has_edge(4, 5) && g.has_edge(5, 6));
        assert_eq!(g.degree(5), 2);
    }

    #[test]
    fn rediscovers_small_cycles() {
        let out = structured_search(4, 2, &SearchOptions::default()).unwrap();
        assert!(out.exhausted);
        assert_eq!(out.found.len(), 1);
        assert!(is_isomorphic(&out.found[0], &Graph::cycle(6).unwrap()));
        let out = structured_search(3, 2, &SearchOptions::default()).unwrap();
        assert_eq!(out.found.len(), 1);
        assert!(is_isomorphic(&out.found[0], &Graph::cycle(5).unwrap()));
    }

    #[test]
    fn exhaustive_small_orders() {
        let c5 = exhaustive_search_all_graphs(5, 3).unwrap();
        assert_eq!(c5.found.len(), 1);
        assert!(is_isomorphic(&c5.found[0], &Graph::cycle(5).unwrap()));
        assert!(exhaustive_search_all_graphs(6, 3).unwrap().found.is_empty());
        assert!(matches!(
            exhaustive_search_all_graphs(9, 4),
            Err(SearchError::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn parameter_errors() {
        let o = SearchOptions::default();
        assert!(matches!(
            structured_search(4, 1, &o),
            Err(SearchError::DeltaTooSmall(1))
        ));
        assert!(matches!(
            structured_search(4, 10, &o),
            Err(SearchError::CapExceeded { .. })
        ));
        assert!(matches!(
            structured_search(8, 2, &o),
            Err(SearchError::UnsupportedM(8))
        ));
    }

    #[test]
    fn budget_stops_early() {
        let o = SearchOptions {
            budget: Some(10),
            ..SearchOptions::default()
        };
        let out = structured_search(4, 4, &o).unwrap();
        assert!(!out.exhausted);
        assert_eq!(out.nodes_explored, 10);
    }

    #[test]
    fn connectivity_helper() {
        assert!(connected(&Graph::cycle(5).unwrap().rows_u64().unwrap()));
        let two = Graph::cycle(3)
            .unwrap()
            .disjoint_union(&Graph::cycle(3).unwrap());
        assert!(!connected(&two.rows_u64().unwrap()));
    }
}
