//! Generators for the extremal γt-critical families (order Δ + γt, δ ≥ 2)
//! and the existence table for such graphs.
//!
//! Every generator uses one fixed labeling, documented on the function, so
//! the graph6 output is byte-stable.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{kind}: {constraint}")]
    Infeasible {
        kind: FamilyKind,
        constraint: String,
    },
    #[error("unknown family {0:?}; expected one of four-even, three-block, m-even, four-odd, nine-odd, m-odd")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    /// γt = 4, even Δ ≥ 2.
    #[serde(rename = "four-even")]
    FourCriticalEvenDelta,
    /// The 3-critical block that seeds the odd-m, even-Δ family.
    #[serde(rename = "three-block")]
    ThreeCriticalBlock,
    /// Odd m ≥ 3, even Δ ≥ m − 1: the block amalgamated with C5s.
    #[serde(rename = "m-even")]
    MCriticalEvenDelta,
    /// γt = 4, odd Δ ≥ 9.
    #[serde(rename = "four-odd")]
    FourCriticalOddDelta,
    /// γt = 9, odd Δ ≥ 9.
    #[serde(rename = "nine-odd")]
    NineCriticalOddDelta,
    /// Odd m ≥ 9, odd Δ ≥ m: the 9-critical graph amalgamated with C5s.
    #[serde(rename = "m-odd")]
    MCriticalOddM,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::FourCriticalEvenDelta,
        FamilyKind::ThreeCriticalBlock,
        FamilyKind::MCriticalEvenDelta,
        FamilyKind::FourCriticalOddDelta,
        FamilyKind::NineCriticalOddDelta,
        FamilyKind::MCriticalOddM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::FourCriticalEvenDelta => "four-even",
            FamilyKind::ThreeCriticalBlock => "three-block",
            FamilyKind::MCriticalEvenDelta => "m-even",
            FamilyKind::FourCriticalOddDelta => "four-odd",
            FamilyKind::NineCriticalOddDelta => "nine-odd",
            FamilyKind::MCriticalOddM => "m-odd",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FamilyError::UnknownKind(s.to_string()))
    }
}

/// Part sizes derived from (kind, m, Δ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PartSizes {
    /// Side length `a` of the `K_{a,a}` minus a 1-factor block, when present
    /// (|U| = |W|, |U1| = |W1| or |U4| = |W4|).
    pub block: Option<usize>,
    /// Group sizes s1, s2, s3 of the four-odd construction.
    pub groups: Option<[usize; 3]>,
    /// Number of C5 copies amalgamated at the center.
    pub cycles: usize,
    pub order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub m: usize,
    pub delta: usize,
    pub derived: PartSizes,
}

impl FamilySpec {
    /// Validates the parameters and computes the part sizes.
    pub fn new(kind: FamilyKind, m: usize, delta: usize) -> Result<Self, FamilyError> {
        let fail = |c: &str| {
            Err(FamilyError::Infeasible {
                kind,
                constraint: c.to_string(),
            })
        };
        let odd = |x: usize| x % 2 == 1;
        let derived = match kind {
            FamilyKind::FourCriticalEvenDelta => {
                if m != 4 {
                    return fail("m must be 4");
                }
                if delta < 2 || odd(delta) {
                    return fail("delta must be even ≥ 2");
                }
                PartSizes {
                    block: Some(delta / 2),
                    groups: None,
                    cycles: 0,
                    order: delta + 4,
                }
            }
            FamilyKind::ThreeCriticalBlock | FamilyKind::MCriticalEvenDelta => {
                if m < 3 || !odd(m) {
                    return fail("m must be odd ≥ 3");
                }
                if delta + 1 < m || odd(delta) {
                    return fail("delta must be even ≥ m − 1");
                }
                let a = (delta + 3 - m) / 2;
                if kind == FamilyKind::ThreeCriticalBlock {
                    PartSizes {
                        block: Some(a),
                        groups: None,
                        cycles: 0,
                        order: 2 * a + 3,
                    }
                } else {
                    PartSizes {
                        block: Some(a),
                        groups: None,
                        cycles: (m - 3) / 2,
                        order: delta + m,
                    }
                }
            }
            FamilyKind::FourCriticalOddDelta => {
                if m != 4 {
                    return fail("m must be 4");
                }
                if delta < 9 || !odd(delta) {
                    return fail("delta must be odd ≥ 9");
                }
                let s = (delta - 5) / 2;
                PartSizes {
                    block: None,
                    groups: Some([2, s, s]),
                    cycles: 0,
                    order: delta + 4,
                }
            }
            FamilyKind::NineCriticalOddDelta => {
                if m != 9 {
                    return fail("m must be 9");
                }
                if delta < 9 || !odd(delta) {
                    return fail("delta must be odd ≥ 9");
                }
                PartSizes {
                    block: Some((delta - 7) / 2),
                    groups: None,
                    cycles: 0,
                    order: delta + 9,
                }
            }
            FamilyKind::MCriticalOddM => {
                if m < 9 || !odd(m) {
                    return fail("m must be odd ≥ 9");
                }
                if delta < m || !odd(delta) {
                    return fail("delta must be odd ≥ m");
                }
                let inner = delta - (m - 9);
                PartSizes {
                    block: Some((inner - 7) / 2),
                    groups: None,
                    cycles: (m - 9) / 2,
                    order: delta + m,
                }
            }
        };
        Ok(Self {
            kind,
            m,
            delta,
            derived,
        })
    }

    pub fn build(&self) -> Graph {
        match self.kind {
            FamilyKind::FourCriticalEvenDelta => four_even(self.delta),
            FamilyKind::ThreeCriticalBlock => three_block(self.m, self.delta),
            FamilyKind::MCriticalEvenDelta => {
                with_cycles(three_block(self.m, self.delta), self.derived.cycles)
            }
            FamilyKind::FourCriticalOddDelta => four_odd(self.delta),
            FamilyKind::NineCriticalOddDelta => nine_odd(self.delta),
            FamilyKind::MCriticalOddM => {
                with_cycles(nine_odd(self.delta - (self.m - 9)), self.derived.cycles)
            }
        }
    }

    /// (order, Δ, γt) the built graph must have.
    pub fn expected(&self) -> (usize, usize, usize) {
        match self.kind {
            FamilyKind::ThreeCriticalBlock => {
                let d = self.delta + 3 - self.m;
                (d + 3, d, 3)
            }
            _ => (self.delta + self.m, self.delta, self.m),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} delta={}", self.kind, self.m, self.delta)
    }
}

fn add(g: &mut Graph, i: usize, j: usize) {
    g.add_edge(i, j).expect("generator edges are in range");
}

/// `K_{a,a}` minus the matching `xs[i] ys[i]`.
fn bipartite_minus_matching(g: &mut Graph, xs: &[usize], ys: &[usize]) {
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            if i != j {
                add(g, x, y);
            }
        }
    }
}

fn with_cycles(mut g: Graph, copies: usize) -> Graph {
    let c5 = Graph::cycle(5).expect("C5");
    for _ in 0..copies {
        g = Graph::vertex_amalgamation(&g, 0, &c5, 0).expect("vertex 0 exists");
    }
    g
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

/// 4-critical graph of order Δ + 4 for even Δ ≥ 2.
///
/// Labels: `v = 0`, `U = 1..=a`, `W = a+1..=2a` (`a = Δ/2`), then `u1, u2,
/// u3`. Edges: v to U ∪ W, u1 to U, u3 to W, the path `u1 u2 u3`, and U × W
/// minus the matching `U[i] W[i]`.
pub fn build_four_critical_even_delta(delta: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(FamilyKind::FourCriticalEvenDelta, 4, delta)?.build())
}

fn four_even(delta: usize) -> Graph {
    let a = delta / 2;
    let us = range(1, a);
    let ws = range(a + 1, a);
    let (u1, u2, u3) = (2 * a + 1, 2 * a + 2, 2 * a + 3);
    let mut g = Graph::empty(delta + 4);
    for (&x, &y) in us.iter().zip(&ws) {
        add(&mut g, 0, x);
        add(&mut g, 0, y);
        add(&mut g, u1, x);
        add(&mut g, u3, y);
    }
    add(&mut g, u1, u2);
    add(&mut g, u2, u3);
    bipartite_minus_matching(&mut g, &us, &ws);
    g
}

/// 3-critical block of order Δ − m + 6 and maximum degree Δ − m + 3.
///
/// Labels: `v1 = 0`, `U1 = 1..=a`, `W1 = a+1..=2a` with `a = (Δ − m + 3)/2`,
/// then `u1, w1`. Edges: v1 to U1 ∪ W1, u1 to U1, w1 to W1, `u1 w1`, and
/// U1 × W1 minus the index-aligned matching.
pub fn build_three_critical_block(m: usize, delta: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(FamilyKind::ThreeCriticalBlock, m, delta)?.build())
}

fn three_block(m: usize, delta: usize) -> Graph {
    let a = (delta + 3 - m) / 2;
    let us = range(1, a);
    let ws = range(a + 1, a);
    let (u1, w1) = (2 * a + 1, 2 * a + 2);
    let mut g = Graph::empty(2 * a + 3);
    for (&x, &y) in us.iter().zip(&ws) {
        add(&mut g, 0, x);
        add(&mut g, 0, y);
        add(&mut g, u1, x);
        add(&mut g, w1, y);
    }
    add(&mut g, u1, w1);
    bipartite_minus_matching(&mut g, &us, &ws);
    g
}

/// m-critical graph of order Δ + m for odd m ≥ 3 and even Δ ≥ m − 1: the
/// 3-critical block with (m − 3)/2 copies of C5 identified at its center.
/// The center stays vertex 0; each C5 adds its vertices 1..4 at the end.
pub fn build_m_critical_even_delta(m: usize, delta: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(FamilyKind::MCriticalEvenDelta, m, delta)?.build())
}

/// Vertex ids of the four-odd construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourOddLayout {
    pub v: usize,
    /// `x1, x2, x3`, pairwise nonadjacent.
    pub x: [usize; 3],
    /// `groups[i]` lists `y_{i+1,1} ..`.
    pub groups: [Vec<usize>; 3],
    pub u: usize,
    pub z: usize,
    pub w: usize,
}

impl FourOddLayout {
    pub fn new(delta: usize) -> Self {
        let s = (delta - 5) / 2;
        Self {
            v: 0,
            x: [1, 2, 3],
            groups: [range(4, 2), range(6, s), range(6 + s, s)],
            u: 4 + 2 + 2 * s,
            z: 5 + 2 + 2 * s,
            w: 6 + 2 + 2 * s,
        }
    }
}

/// 4-critical graph of order Δ + 4 for odd Δ ≥ 9.
///
/// Vertices: v, the independent triple `x1 x2 x3`, groups `H1` (two
/// vertices) and `H2`, `H3` (`(Δ − 5)/2` each) forming F, then `u, z, w`
/// (see [`FourOddLayout`]). Edges:
///
/// * v to every x and every F vertex; u to every x; w to every F vertex;
///   the path `u z w`;
/// * `x_i` to every vertex of `H_j` for `j ≠ i`;
/// * inside F, no edges within a group; `y_{2k} y_{3l}` iff `k ≠ l`; and
///   `y_{1j} y_{bk}` (b = 2, 3) iff `j` and `k` have different parity.
///
/// The parity rule for `H1` keeps every F vertex non-adjacent to at least
/// one vertex of each other group, which is what rules out a total
/// dominating set `{x_i, y, u}` of size 3. At Δ = 9 it coincides with
/// joining `y_{aj} y_{bk}` exactly when `j ≠ k`.
pub fn build_four_critical_odd_delta(delta: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(FamilyKind::FourCriticalOddDelta, 4, delta)?.build())
}

fn four_odd(delta: usize) -> Graph {
    let l = FourOddLayout::new(delta);
    let mut g = Graph::empty(delta + 4);
    for &x in &l.x {
        add(&mut g, l.v, x);
        add(&mut g, l.u, x);
    }
    for y in l.groups.iter().flatten() {
        add(&mut g, l.v, *y);
        add(&mut g, l.w, *y);
    }
    add(&mut g, l.u, l.z);
    add(&mut g, l.z, l.w);
    for (i, &x) in l.x.iter().enumerate() {
        for (j, group) in l.groups.iter().enumerate() {
            if i != j {
                for &y in group {
                    add(&mut g, x, y);
                }
            }
        }
    }
    for (j, &a) in l.groups[0].iter().enumerate() {
        for group in &l.groups[1..] {
            for (k, &b) in group.iter().enumerate() {
                if j % 2 != k % 2 {
                    add(&mut g, a, b);
                }
            }
        }
    }
    for (k, &a) in l.groups[1].iter().enumerate() {
        for (k2, &b) in l.groups[2].iter().enumerate() {
            if k != k2 {
                add(&mut g, a, b);
            }
        }
    }
    g
}

/// Vertex ids of the nine-odd construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NineOddLayout {
    pub v: usize,
    /// `U_1 .. U_4`: `{x1}`, `{x2}`, `{x31, x32}`, `{x41 ..}`.
    pub us: [Vec<usize>; 4],
    /// `W_1 .. W_4`: `{y1}`, `{y2}`, `{y3}`, `{y41 ..}`.
    pub ws: [Vec<usize>; 4],
    /// `u_1 .. u_4`.
    pub u: [usize; 4],
    /// `w_1 .. w_4`.
    pub w: [usize; 4],
}

impl NineOddLayout {
    pub fn new(delta: usize) -> Self {
        let k = (delta - 7) / 2;
        let w0 = 5 + k;
        let p0 = w0 + 3 + k;
        Self {
            v: 0,
            us: [vec![1], vec![2], vec![3, 4], range(5, k)],
            ws: [vec![w0], vec![w0 + 1], vec![w0 + 2], range(w0 + 3, k)],
            u: [p0, p0 + 2, p0 + 4, p0 + 6],
            w: [p0 + 1, p0 + 3, p0 + 5, p0 + 7],
        }
    }
}

/// 9-critical graph of order Δ + 9 for odd Δ ≥ 9.
///
/// Labels follow [`NineOddLayout`]: v, U1..U4, W1..W4, then the pairs
/// `u1 w1 .. u4 w4`. Edges: v to every U and W vertex; `U_i` to `u_i`;
/// `W_i` to `w_i`; `u_i w_i`; `x_i x_{3i}` and `y_i x_{3i}` for i = 1, 2;
/// `y3` to every vertex of `U4 ∪ W4`; and `U4 × W4` minus the
/// index-aligned matching.
pub fn build_nine_critical_odd_delta(delta: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(FamilyKind::NineCriticalOddDelta, 9, delta)?.build())
}

fn nine_odd(delta: usize) -> Graph {
    let l = NineOddLayout::new(delta);
    let mut g = Graph::empty(delta + 9);
    for i in 0..4 {
        for &x in &l.us[i] {
            add(&mut g, l.v, x);
            add(&mut g, x, l.u[i]);
        }
        for &y in &l.ws[i] {
            add(&mut g, l.v, y);
            add(&mut g, y, l.w[i]);
        }
        add(&mut g, l.u[i], l.w[i]);
    }
    for i in 0..2 {
        let x3 = l.us[2][i];
        add(&mut g, l.us[i][0], x3);
        add(&mut g, l.ws[i][0], x3);
    }
    let y3 = l.ws[2][0];
    for &x in l.us[3].iter().chain(&l.ws[3]) {
        add(&mut g, y3, x);
    }
    bipartite_minus_matching(&mut g, &l.us[3], &l.ws[3]);
    g
}

/// m-critical graph of order Δ + m for odd m ≥ 9 and odd Δ ≥ m: the
/// 9-critical graph at Δ − (m − 9) with (m − 9)/2 copies of C5 identified at
/// its center.
pub fn build_m_critical_odd_m(m: usize, delta: usize) -> Result<Graph, FamilyError> {
    Ok(FamilySpec::new(FamilyKind::MCriticalOddM, m, delta)?.build())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExistenceStatus {
    Exists,
    NotExists,
    Open,
}

/// Marker for a construction that exists but is not generated here: the
/// odd-Δ 3-critical family (order 12, Δ = 9) and its amalgams.
pub const EXTERNAL_MARKER: &str = "external [CS]";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Construction {
    Family(FamilySpec),
    External,
}

/// Whether an m-γt-critical graph of order Δ + m with δ ≥ 2 exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub status: ExistenceStatus,
    /// Tag of the result that settles the case.
    pub authority: &'static str,
    pub construction: Option<Construction>,
}

impl fmt::Display for ExistenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.status, &self.construction) {
            (ExistenceStatus::Exists, Some(Construction::Family(spec))) => {
                write!(f, "Exists {} {}", spec.kind, self.authority)
            }
            (ExistenceStatus::Exists, _) => {
                write!(f, "Exists {EXTERNAL_MARKER} {}", self.authority)
            }
            (ExistenceStatus::NotExists, _) => write!(f, "NotExists {}", self.authority),
            (ExistenceStatus::Open, _) => write!(f, "Open {}", self.authority),
        }
    }
}

/// The complete decision table over (m, Δ).
///
/// * even m ≠ 4: never (`mainthm0`);
/// * Δ < 2⌊(m − 1)/2⌋: never (`mainthm0`);
/// * m = 3: even Δ built here; Δ = 3, 5 excluded (`lem4`), Δ = 7 excluded
///   (`CS`); odd Δ ≥ 9 exists by an external construction;
/// * m = 4: even Δ (`mainthm0`) and odd Δ ≥ 9 (`mainthm4`) built here;
///   Δ = 3, 5, 7 excluded (`mainthm3`);
/// * m = 5, 7: even Δ ≥ m − 1 built here; odd Δ ≥ m + 6 external; odd
///   Δ ∈ {m, m + 2, m + 4} open (`remark`);
/// * odd m ≥ 9: exists iff Δ ≥ m − 1, all built here (`mainthm5` for odd Δ).
///
/// Parameters outside m ≥ 3, Δ ≥ 2 report `NotExists` with authority
/// `definition`: δ ≥ 2 forces Δ ≥ 2, and no vertex deletion can bring γt
/// below 2.
pub fn existence(m: usize, delta: usize) -> ExistenceVerdict {
    use ExistenceStatus::*;
    let not = |authority| ExistenceVerdict {
        status: NotExists,
        authority,
        construction: None,
    };
    let open = ExistenceVerdict {
        status: Open,
        authority: "remark",
        construction: None,
    };
    let build = |kind, authority| ExistenceVerdict {
        status: Exists,
        authority,
        construction: Some(Construction::Family(
            FamilySpec::new(kind, m, delta).expect("table only names feasible specs"),
        )),
    };
    let external = ExistenceVerdict {
        status: Exists,
        authority: "mainthm0",
        construction: Some(Construction::External),
    };
    if m < 3 || delta < 2 {
        return not("definition");
    }
    if m != 4 && m.is_multiple_of(2) {
        return not("mainthm0");
    }
    if delta < 2 * ((m - 1) / 2) {
        return not("mainthm0");
    }
    let even = delta.is_multiple_of(2);
    match m {
        4 if even => build(FamilyKind::FourCriticalEvenDelta, "mainthm0"),
        4 if delta >= 9 => build(FamilyKind::FourCriticalOddDelta, "mainthm4"),
        4 => not("mainthm3"),
        _ if even => build(FamilyKind::MCriticalEvenDelta, "mainthm0"),
        3 if delta == 3 || delta == 5 => not("lem4"),
        3 if delta == 7 => not("CS"),
        3 => external,
        5 | 7 if delta >= m + 6 => external,
        5 | 7 => open,
        9 => build(FamilyKind::NineCriticalOddDelta, "mainthm5"),
        _ if delta >= m => build(FamilyKind::MCriticalOddM, "mainthm5"),
        // odd m ≥ 11 with odd Δ < m means Δ < m − 1
        _ => not("mainthm0"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::solver::{total_domination_number, GammaValue};

    #[test]
    fn kind_names_round_trip() {
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("five-odd".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn four_even_small_cases() {
        let g = build_four_critical_even_delta(2).unwrap();
        assert!(is_isomorphic(&g, &Graph::cycle(6).unwrap()));
        let g = build_four_critical_even_delta(4).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.max_degree(), 4);
        let err = build_four_critical_even_delta(3).unwrap_err();
        assert!(err.to_string().contains("even"));
    }

    #[test]
    fn three_block_small_cases() {
        let g = build_three_critical_block(3, 2).unwrap();
        assert!(is_isomorphic(&g, &Graph::cycle(5).unwrap()));
        let g = build_three_critical_block(5, 4).unwrap();
        assert!(is_isomorphic(&g, &Graph::cycle(5).unwrap()));
        let g = build_three_critical_block(3, 6).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(total_domination_number(&g).value, GammaValue::Finite(3));
        assert!(build_three_critical_block(4, 6).is_err());
        assert!(build_three_critical_block(7, 4).is_err());
    }

    #[test]
    fn amalgamated_families_keep_center_at_zero() {
        let g = build_m_critical_even_delta(5, 4).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.degree(0), 4);
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_isomorphic(
            &g,
            &Graph::vertex_amalgamation(&c5, 0, &c5, 0).unwrap()
        ));
        assert_eq!(
            build_m_critical_odd_m(9, 9).unwrap(),
            build_nine_critical_odd_delta(9).unwrap()
        );
        assert_eq!(build_m_critical_odd_m(11, 13).unwrap().order(), 24);
    }

    #[test]
    fn odd_constructions_have_the_right_shape() {
        for delta in [9, 11, 13] {
            let g = build_four_critical_odd_delta(delta).unwrap();
            assert_eq!(g.order(), delta + 4);
            assert_eq!(g.max_degree(), delta);
            assert_eq!(g.degree(0), delta);
            assert!(g.min_degree() >= 2);
            let g = build_nine_critical_odd_delta(delta).unwrap();
            assert_eq!(g.order(), delta + 9);
            assert_eq!(g.max_degree(), delta);
            assert!(g.min_degree() >= 2);
            g.validate().unwrap();
        }
        assert_eq!(
            build_four_critical_odd_delta(7).unwrap_err().to_string(),
            "four-odd: delta must be odd ≥ 9"
        );
        assert!(build_nine_critical_odd_delta(7).is_err());
    }

    #[test]
    fn nine_odd_layout_covers_every_vertex() {
        for delta in [9, 11, 15] {
            let l = NineOddLayout::new(delta);
            let mut ids: Vec<usize> = std::iter::once(l.v)
                .chain(l.us.iter().flatten().copied())
                .chain(l.ws.iter().flatten().copied())
                .chain(l.u)
                .chain(l.w)
                .collect();
            ids.sort_unstable();
            assert_eq!(ids, (0..delta + 9).collect::<Vec<_>>());
        }
        let l = FourOddLayout::new(11);
        assert_eq!(l.w, 14);
    }

    #[test]
    fn existence_examples() {
        assert_eq!(existence(6, 10).to_string(), "NotExists mainthm0");
        assert_eq!(existence(4, 7).to_string(), "NotExists mainthm3");
        assert_eq!(existence(5, 7).to_string(), "Open remark");
        let v = existence(9, 8);
        assert_eq!(v.status, ExistenceStatus::Exists);
        assert!(matches!(
            v.construction,
            Some(Construction::Family(FamilySpec {
                kind: FamilyKind::MCriticalEvenDelta,
                ..
            }))
        ));
        assert_eq!(existence(3, 9).to_string(), "Exists external [CS] mainthm0");
        assert_eq!(existence(11, 9).to_string(), "NotExists mainthm0");
        assert_eq!(existence(2, 5).to_string(), "NotExists definition");
    }
}
