#![allow(dead_code)]

use tdcrit::Graph;

/// γt by trying vertex subsets in order of size. `None` when no total
/// dominating set exists.
pub fn gamma_t(g: &Graph) -> Option<usize> {
    let n = g.order();
    assert!(n <= 20, "oracle is exponential");
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let dominated = |s: u32| rows.iter().all(|&r| r & s != 0);
    (1..=n).find(|&k| subsets(n, k).any(dominated))
}

/// γt(G − v) by the same exhaustive method on the induced subgraph.
pub fn gamma_t_without(g: &Graph, v: usize) -> Option<usize> {
    gamma_t(&g.delete_vertex(v).unwrap())
}

/// Critical per the definition: no isolated vertex, and every vertex that is
/// not adjacent to a leaf lowers γt when deleted.
pub fn is_critical(g: &Graph) -> bool {
    let Some(k) = gamma_t(g) else {
        return false;
    };
    let support = |v: usize| g.neighbors(v).iter().any(|u| g.degree(u) == 1);
    (0..g.order())
        .filter(|&v| !support(v))
        .all(|v| gamma_t_without(g, v).is_some_and(|r| r < k))
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |s| s.count_ones() as usize == k)
}
