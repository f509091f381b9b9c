//! Exact total domination.
//!
//! A set `S` totally dominates `G` when every vertex, members of `S`
//! included, has a neighbor in `S`. The solver is a branch-and-bound over
//! "which neighbor dominates this vertex": at each node it takes the
//! undominated vertex with the fewest remaining candidate dominators (lowest
//! id on ties) and branches over those candidates in increasing order,
//! forbidding each tried candidate in the later siblings. A greedy cover
//! seeds the incumbent.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bitset::{Mask, VertexSet, WideMask};
use crate::graph::Graph;

/// Largest order accepted by [`brute_force_gamma_t`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 20;

/// γt(G), or `Infeasible` when some vertex has no neighbor.
///
/// `Infeasible` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaValue {
    Finite(usize),
    Infeasible,
}

impl GammaValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            GammaValue::Finite(k) => Some(k),
            GammaValue::Infeasible => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, GammaValue::Finite(_))
    }
}

impl fmt::Display for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaValue::Finite(k) => write!(f, "{k}"),
            GammaValue::Infeasible => f.write_str("infeasible"),
        }
    }
}

impl Serialize for GammaValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GammaValue::Finite(k) => s.serialize_u64(*k as u64),
            GammaValue::Infeasible => s.serialize_str("infeasible"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub value: GammaValue,
    pub witness: Option<VertexSet>,
}

impl DominationResult {
    fn infeasible() -> Self {
        Self {
            value: GammaValue::Infeasible,
            witness: None,
        }
    }

    fn from_witness(w: VertexSet) -> Self {
        Self {
            value: GammaValue::Finite(w.len()),
            witness: Some(w),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("brute force is limited to {max} vertices, graph has {order}")]
    TooLarge { order: usize, max: usize },
}

/// Every vertex of `g`, members of `s` included, has a neighbor in `s`.
pub fn is_total_dominating_set(g: &Graph, s: &VertexSet) -> bool {
    s.bound() <= g.order() && (0..g.order()).all(|u| !g.neighbors(u).is_disjoint(s))
}

/// Exact γt(G) with a minimum witness.
pub fn total_domination_number(g: &Graph) -> DominationResult {
    if g.order() <= 64 {
        solve_packed(&g.packed::<u64>(), g.order())
    } else {
        solve_packed(&g.packed::<WideMask>(), g.order())
    }
}

/// γt(G − v) without relabeling: the witness uses the ids of `g`.
pub fn total_domination_number_without(g: &Graph, v: usize) -> DominationResult {
    fn go<M: Mask>(g: &Graph, v: usize) -> DominationResult {
        let rows = g.packed::<M>();
        let mut alive = M::full(g.order());
        alive.clear(v);
        match min_tds(&rows, &alive, None) {
            Outcome::Infeasible => DominationResult::infeasible(),
            Outcome::Found(s) => DominationResult::from_witness(s.to_set()),
            Outcome::NoneBelow => unreachable!("no bound given"),
        }
    }
    assert!(v < g.order(), "vertex out of range");
    if g.order() <= 64 {
        go::<u64>(g, v)
    } else {
        go::<WideMask>(g, v)
    }
}

pub(crate) fn solve_packed<M: Mask>(rows: &[M], n: usize) -> DominationResult {
    match min_tds(rows, &M::full(n), None) {
        Outcome::Infeasible => DominationResult::infeasible(),
        Outcome::Found(s) => DominationResult::from_witness(s.to_set()),
        Outcome::NoneBelow => unreachable!("no bound given"),
    }
}

/// Reference implementation: tries every subset in order of increasing size.
pub fn brute_force_gamma_t(g: &Graph) -> Result<DominationResult, SolverError> {
    let n = g.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(SolverError::TooLarge {
            order: n,
            max: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, j| a | 1 << j))
        .collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for k in 1..=n {
        // subsets of size k in colexicographic order (Gosper's hack)
        let mut s: u32 = (1u32 << k) - 1;
        while s <= full {
            let mut covered = 0u32;
            let mut rest = s;
            while rest != 0 {
                covered |= rows[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            if covered == full {
                let w = (0..n).filter(|&i| s >> i & 1 == 1).collect();
                return Ok(DominationResult::from_witness(w));
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            if r == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Ok(DominationResult::infeasible())
}

pub(crate) enum Outcome<M> {
    Found(M),
    /// No total dominating set smaller than the bound exists.
    NoneBelow,
    Infeasible,
}

/// Minimum total dominating set of the subgraph induced by `alive`.
///
/// With `below = Some(k)` the search only looks for sets of size `< k` and
/// answers `NoneBelow` when there are none; the returned set is then minimum.
pub(crate) fn min_tds<M: Mask>(rows: &[M], alive: &M, below: Option<usize>) -> Outcome<M> {
    run(rows, alive, below, false)
}

/// Is there a total dominating set of the `alive` subgraph with at most
/// `k` vertices? Stops at the first one found.
pub(crate) fn has_tds_within<M: Mask>(rows: &[M], alive: &M, k: usize) -> bool {
    matches!(run(rows, alive, Some(k + 1), true), Outcome::Found(_))
}

fn run<M: Mask>(rows: &[M], alive: &M, below: Option<usize>, first_only: bool) -> Outcome<M> {
    if alive.is_zero() {
        return Outcome::Infeasible;
    }
    let live: Vec<M> = rows.iter().map(|r| r.and(alive)).collect();
    if alive.ones().any(|v| live[v].is_zero()) {
        return Outcome::Infeasible;
    }
    let mut bb = BranchAndBound {
        rows: &live,
        best: None,
        best_size: below.unwrap_or(usize::MAX),
        first_only,
    };
    let seed = greedy(&live, alive);
    if (seed.count() as usize) < bb.best_size {
        bb.best_size = seed.count() as usize;
        bb.best = Some(seed);
    }
    if !(first_only && bb.best.is_some()) {
        let n = rows.len();
        bb.descend(&M::zeros(n), 0, alive, &M::zeros(n));
    }
    match bb.best {
        Some(s) => Outcome::Found(s),
        None => Outcome::NoneBelow,
    }
}

/// Repeatedly takes the vertex covering the most undominated vertices,
/// lowest id on ties. Rows must already be restricted to `alive`, and every
/// alive vertex must have an alive neighbor.
fn greedy<M: Mask>(rows: &[M], alive: &M) -> M {
    let mut chosen = M::zeros(rows.len());
    let mut undominated = alive.clone();
    while !undominated.is_zero() {
        let mut best = None;
        let mut best_cover = 0;
        for c in alive.ones() {
            let cover = rows[c].and_count(&undominated);
            if cover > best_cover {
                best_cover = cover;
                best = Some(c);
            }
        }
        let c = best.expect("every alive vertex has an alive neighbor");
        chosen.set(c);
        undominated = undominated.and_not(&rows[c]);
    }
    chosen
}

struct BranchAndBound<'a, M> {
    rows: &'a [M],
    best: Option<M>,
    best_size: usize,
    first_only: bool,
}

impl<M: Mask> BranchAndBound<'_, M> {
    fn descend(&mut self, chosen: &M, size: usize, undominated: &M, excluded: &M) {
        if undominated.is_zero() {
            if size < self.best_size {
                self.best_size = size;
                self.best = Some(chosen.clone());
            }
            return;
        }
        if size + 1 >= self.best_size || (self.first_only && self.best.is_some()) {
            return;
        }

        // Lower bound: ceil(undominated / max cover of an allowed vertex).
        // Also picks the branching vertex: fewest allowed dominators.
        let mut max_cover = 0;
        let mut pivot = None;
        let mut pivot_choices = u32::MAX;
        for u in undominated.ones() {
            let choices = self.rows[u].and_not(excluded);
            let k = choices.count();
            if k == 0 {
                return;
            }
            if k < pivot_choices {
                pivot_choices = k;
                pivot = Some((u, choices));
            }
        }
        let (_, choices) = pivot.expect("undominated is nonempty");
        for c in self.allowed(undominated, excluded).ones() {
            max_cover = max_cover.max(self.rows[c].and_count(undominated));
        }
        let remaining = undominated.count() as usize;
        let bound = remaining.div_ceil(max_cover as usize);
        if size + bound >= self.best_size {
            return;
        }

        let mut excluded = excluded.clone();
        for c in choices.ones() {
            let mut next = chosen.clone();
            next.set(c);
            self.descend(
                &next,
                size + 1,
                &undominated.and_not(&self.rows[c]),
                &excluded,
            );
            excluded.set(c);
            if size + 1 >= self.best_size || (self.first_only && self.best.is_some()) {
                return;
            }
        }
    }

    /// Candidates that can still enter the set and would dominate something.
    fn allowed(&self, undominated: &M, excluded: &M) -> M {
        let mut out = M::zeros(self.rows.len());
        for u in undominated.ones() {
            out = out.or(&self.rows[u]);
        }
        out.and_not(excluded)
    }
}
