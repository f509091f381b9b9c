//! Total domination vertex criticality and the structure of extremal
//! critical graphs.
//!
//! A graph without isolated vertices is γt-critical when deleting any vertex
//! that is not a support vertex (a neighbor of a leaf) lowers γt.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::{Mask, VertexSet};
use crate::graph::{Graph, Rows};
use crate::solver::{self, GammaValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Critical,
    /// The lowest non-support vertex whose deletion does not lower γt.
    NotCritical(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub gamma_t: GammaValue,
    pub supports: VertexSet,
    /// γt(G − v) for every non-support vertex v.
    pub residual_values: BTreeMap<usize, GammaValue>,
    pub verdict: Verdict,
    /// No vertex was tested because every vertex is a support vertex.
    pub vacuous: bool,
}

impl CriticalityReport {
    pub fn is_critical(&self) -> bool {
        self.verdict == Verdict::Critical
    }

    pub fn gamma(&self) -> usize {
        self.gamma_t
            .finite()
            .expect("report is only built for feasible graphs")
    }
}

/// Full criticality report. Per-vertex solves run on the rayon pool.
pub fn is_gamma_t_critical(g: &Graph) -> Result<CriticalityReport, CriticalityError> {
    if g.order() == 0 {
        return Err(CriticalityError::EmptyGraph);
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(CriticalityError::IsolatedVertex(v));
    }
    let gamma_t = solver::total_domination_number(g).value;
    let supports = g.support_vertices();
    let tested: Vec<usize> = (0..g.order()).filter(|&v| !supports.contains(v)).collect();
    let values: Vec<GammaValue> = tested
        .par_iter()
        .map(|&v| solver::total_domination_number_without(g, v).value)
        .collect();
    let residual_values: BTreeMap<usize, GammaValue> = tested.iter().copied().zip(values).collect();
    let verdict = residual_values
        .iter()
        .find(|(_, &r)| r >= gamma_t)
        .map_or(Verdict::Critical, |(&v, _)| Verdict::NotCritical(v));
    Ok(CriticalityReport {
        gamma_t,
        supports,
        vacuous: tested.is_empty(),
        residual_values,
        verdict,
    })
}

/// Packed check used by the search: γt = m and every non-support deletion
/// leaves a total dominating set of size m − 1. Stops at the first failure.
pub(crate) fn is_critical_with_value<M: Mask>(rows: &[M], m: usize, order: &[usize]) -> bool {
    let n = rows.len();
    let all = M::full(n);
    if m < 2 || solver::has_tds_within(rows, &all, m - 1) {
        return false;
    }
    if !solver::has_tds_within(rows, &all, m) {
        return false;
    }
    let supports = packed_supports(rows);
    order.iter().filter(|&&v| !supports.get(v)).all(|&v| {
        let mut alive = all.clone();
        alive.clear(v);
        solver::has_tds_within(rows, &alive, m - 1)
    })
}

fn packed_supports<M: Mask>(rows: &[M]) -> M {
    let mut s = M::zeros(rows.len());
    for r in rows {
        if r.count() == 1 {
            s.set(r.first().expect("one neighbor"));
        }
    }
    s
}

/// A pair `(u, v)` of nonadjacent vertices with `v` not a support vertex and
/// `N(u) ⊆ N(v)`. Any such pair certifies that `g` is not γt-critical: a
/// γt(G − v)-set would also totally dominate `v` through `N(u)`.
pub fn lemma2_noncritical_witness(g: &Graph) -> Option<(usize, usize)> {
    let rows = g.packed_any();
    match rows {
        Rows::Narrow(r) => packed_lemma2(&r),
        Rows::Wide(r) => packed_lemma2(&r),
    }
}

pub(crate) fn packed_lemma2<M: Mask>(rows: &[M]) -> Option<(usize, usize)> {
    let supports = packed_supports(rows);
    let n = rows.len();
    for u in 0..n {
        for v in 0..n {
            if u == v || rows[u].get(v) || supports.get(v) {
                continue;
            }
            if rows[u].is_subset(&rows[v]) {
                return Some((u, v));
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualClass {
    /// Every component is a single edge.
    AllP2,
    /// Exactly one component, a path on three vertices.
    SingleP3,
    Other,
}

/// The subgraph left after removing the closed neighborhood of a
/// maximum-degree vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualStructure {
    pub center: usize,
    pub outside: VertexSet,
    /// Components of G[outside] as ascending vertex lists, ordered by their
    /// smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub classification: ResidualClass,
}

/// Uses the lowest-id vertex of maximum degree as the center. `None` for
/// the empty graph.
pub fn residual_structure(g: &Graph) -> Option<ResidualStructure> {
    if g.order() == 0 {
        return None;
    }
    let delta = g.max_degree();
    let center = (0..g.order()).find(|&v| g.degree(v) == delta)?;
    let mut closed = g.neighbors(center).clone();
    closed.insert(center);
    let outside = g.vertices().difference(&closed);
    let sub = g.induced_subgraph(&outside).expect("subset of V");
    let ids: Vec<usize> = outside.iter().collect();
    let components: Vec<Vec<usize>> = sub
        .connected_components()
        .into_iter()
        .map(|c| c.iter().map(|i| ids[i]).collect())
        .collect();
    let is_p2 = |c: &Vec<usize>| c.len() == 2;
    let is_p3 = |c: &Vec<usize>| {
        c.len() == 3
            && c.iter()
                .filter(|&&x| g.neighbors(x).intersection(&outside).len() == 2)
                .count()
                == 1
    };
    let classification = if !components.is_empty() && components.iter().all(is_p2) {
        ResidualClass::AllP2
    } else if components.len() == 1 && is_p3(&components[0]) {
        ResidualClass::SingleP3
    } else {
        ResidualClass::Other
    };
    Some(ResidualStructure {
        center,
        outside,
        components,
        classification,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Checks the shape forced on a γt-critical graph with γt = n − Δ and
/// δ ≥ 2: the residual is one P3 or a union of P2s, and N(center) splits
/// into the nonempty, pairwise disjoint outside neighborhoods described
/// below.
///
/// * P3 `u1 u2 u3`: `N(u2) ∩ N(center) = ∅` and N(center) is the disjoint
///   union of `N(u1) − u2` and `N(u3) − u2`.
/// * P2s `u_i w_i`: N(center) is the disjoint union of the sets
///   `N(u_i) − w_i`, `N(w_i) − u_i`, and every neighbor of the center has
///   exactly one neighbor outside N[center].
///
/// `Err` means the input does not satisfy the hypothesis; `Ok(false)` on a
/// valid input means the structure does not hold.
pub fn check_structure_lemma(g: &Graph) -> Result<bool, StructureError> {
    let pre = |m: String| Err(StructureError::Precondition(m));
    if g.order() == 0 {
        return pre("empty graph".into());
    }
    if g.min_degree() < 2 {
        return pre(format!("minimum degree {} < 2", g.min_degree()));
    }
    let report = is_gamma_t_critical(g).map_err(|e| StructureError::Precondition(e.to_string()))?;
    if !report.is_critical() {
        return pre("graph is not γt-critical".into());
    }
    let gamma = report.gamma();
    if gamma + g.max_degree() != g.order() {
        return pre(format!(
            "γt = {gamma} but n − Δ = {}",
            g.order() - g.max_degree()
        ));
    }
    Ok(structure_holds(g))
}

/// The structural conclusion alone, with no precondition checks.
pub fn structure_holds(g: &Graph) -> bool {
    let Some(rs) = residual_structure(g) else {
        return false;
    };
    let nv = g.neighbors(rs.center);
    let without = |x: usize, y: usize| {
        let mut s = g.neighbors(x).clone();
        s.remove(y);
        s
    };
    let parts: Vec<VertexSet> = match rs.classification {
        ResidualClass::Other => return false,
        ResidualClass::SingleP3 => {
            let comp = &rs.components[0];
            let inside = |x: usize| g.neighbors(x).intersection(&rs.outside).len();
            let mid = *comp
                .iter()
                .find(|&&x| inside(x) == 2)
                .expect("P3 has a middle");
            if !g.neighbors(mid).is_disjoint(nv) {
                return false;
            }
            comp.iter()
                .filter(|&&x| x != mid)
                .map(|&x| without(x, mid))
                .collect()
        }
        ResidualClass::AllP2 => {
            let each_once = nv
                .iter()
                .all(|x| g.neighbors(x).intersection(&rs.outside).len() == 1);
            if !each_once {
                return false;
            }
            rs.components
                .iter()
                .flat_map(|c| [without(c[0], c[1]), without(c[1], c[0])])
                .collect()
        }
    };
    let mut union = VertexSet::new();
    for p in &parts {
        if p.is_empty() || !p.is_disjoint(&union) {
            return false;
        }
        union = union.union(p);
    }
    union == *nv
}
