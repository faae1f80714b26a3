//! Exhaustive reference implementations over all `2^n` vertex subsets.
//!
//! These work directly from neighbor lists and the definitions, sharing no
//! code with the enumerators they are used to check.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

/// Largest order the subset oracles accept.
pub const ORACLE_LIMIT: usize = 20;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n <= ORACLE_LIMIT, "oracle limited to {ORACLE_LIMIT} vertices");
    (0u32..1 << n).map(move |bits| (0..n).filter(|&v| bits >> v & 1 == 1).collect())
}

fn shares_neighbor(g: &Graph, u: usize, v: usize) -> bool {
    g.adj(u).iter().any(|w| g.adj(v).contains(w))
}

fn packs(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !shares_neighbor(g, u, v)))
}

fn independent(g: &Graph, set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.adj(u).contains(&v)))
}

fn maximal_by(g: &Graph, ok: impl Fn(&Graph, &[usize]) -> bool) -> BTreeSet<VertexSet> {
    let n = g.order();
    subsets(n)
        .filter(|s| ok(g, s))
        .filter(|s| {
            (0..n).filter(|v| !s.contains(v)).all(|v| {
                let mut bigger = s.clone();
                bigger.push(v);
                !ok(g, &bigger)
            })
        })
        .map(VertexSet::from)
        .collect()
}

pub fn maximal_open_packings(g: &Graph) -> BTreeSet<VertexSet> {
    maximal_by(g, packs)
}

pub fn maximal_independent_sets(g: &Graph) -> BTreeSet<VertexSet> {
    maximal_by(g, independent)
}

/// Sorted sizes of maximal open packings.
pub fn packing_spectrum(g: &Graph) -> Vec<usize> {
    let sizes: BTreeSet<usize> = maximal_open_packings(g).iter().map(VertexSet::len).collect();
    sizes.into_iter().collect()
}

/// Smallest total dominating set size, or `None` when a vertex is isolated.
pub fn total_domination_number(g: &Graph) -> Option<usize> {
    let n = g.order();
    subsets(n).filter(|s| (0..n).all(|v| g.adj(v).iter().any(|w| s.contains(w)))).map(|s| s.len()).min()
}
