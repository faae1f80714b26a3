//! The open neighborhood graph and maximal independent set machinery.
//!
//! A set is a (maximal) open packing of `G` exactly when it is a (maximal)
//! independent set of `ONG(G)`, so every packing enumeration in this crate
//! goes through [`MaximalIndependentSets`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default and hard upper bound on the order of graphs handed to the enumerators.
pub const DEFAULT_CAP: usize = 64;

pub(crate) fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(DEFAULT_CAP);
    if g.order() > cap {
        Err(Error::CapExceeded { n: g.order(), cap })
    } else {
        Ok(())
    }
}

/// ONG(G): same vertices, `u ~ v` iff `u != v` and they share a neighbor in `G`.
pub fn build_ong(g: &Graph) -> Graph {
    let pairs = (0..g.order()).flat_map(|w| {
        let nbrs = g.adj(w);
        nbrs.iter().enumerate().flat_map(move |(i, &u)| nbrs[i + 1..].iter().map(move |&v| (u, v)))
    });
    Graph::from_edges(g.order(), pairs).expect("neighbor pairs are in range and distinct")
}

/// Mask rows of ONG(G) computed directly from the adjacency masks of `G`.
pub(crate) fn ong_masks(adjacency: &[u64]) -> Vec<u64> {
    let mut rows = vec![0u64; adjacency.len()];
    for &nbrs in adjacency {
        let mut rest = nbrs;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            rows[u] |= nbrs;
        }
    }
    for (u, row) in rows.iter_mut().enumerate() {
        *row &= !(1 << u);
    }
    rows
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.validate(g.order())?;
    let members = s.as_slice();
    Ok(members.iter().enumerate().all(|(i, &u)| members[i + 1..].iter().all(|&v| !g.has_edge(u, v))))
}

struct Frame {
    chosen: u64,
    candidates: u64,
    excluded: u64,
    todo: u64,
}

/// Bron–Kerbosch with Tomita pivoting over the complement, yielding every
/// maximal independent set exactly once.
///
/// Order is deterministic: branches are explored in ascending vertex order.
pub struct MaximalIndependentSets {
    // non-neighbors of each vertex, excluding the vertex itself
    others: Vec<u64>,
    stack: Vec<Frame>,
    pending_empty: bool,
}

impl MaximalIndependentSets {
    pub fn new(g: &Graph) -> Result<Self> {
        check_cap(g, DEFAULT_CAP)?;
        Ok(Self::from_masks(&g.masks().expect("order checked against cap")))
    }

    /// Enumerates over a graph given by its adjacency masks.
    pub fn from_masks(adjacency: &[u64]) -> Self {
        let n = adjacency.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let others: Vec<u64> = adjacency.iter().enumerate().map(|(v, &row)| all & !row & !(1 << v)).collect();
        let mut iter = Self { others, stack: Vec::new(), pending_empty: n == 0 };
        if n > 0 {
            iter.push(0, all, 0);
        }
        iter
    }

    fn push(&mut self, chosen: u64, candidates: u64, excluded: u64) {
        // pivot maximizing |candidates ∩ others(u)| over candidates ∪ excluded
        let mut pool = candidates | excluded;
        let mut best = (0u32, 0usize);
        let mut found = false;
        while pool != 0 {
            let u = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let score = (candidates & self.others[u]).count_ones();
            if !found || score > best.0 {
                best = (score, u);
                found = true;
            }
        }
        let todo = candidates & !self.others[best.1];
        self.stack.push(Frame { chosen, candidates, excluded, todo });
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.pending_empty {
            self.pending_empty = false;
            return Some(0);
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.todo == 0 {
                self.stack.pop();
                continue;
            }
            let v = frame.todo.trailing_zeros() as usize;
            let bit = 1u64 << v;
            frame.todo &= !bit;
            let chosen = frame.chosen | bit;
            let candidates = frame.candidates & self.others[v];
            let excluded = frame.excluded & self.others[v];
            frame.candidates &= !bit;
            frame.excluded |= bit;
            if candidates == 0 {
                if excluded == 0 {
                    return Some(chosen);
                }
                continue;
            }
            self.push(chosen, candidates, excluded);
        }
    }
}

/// Every maximal independent set of `g`, as vertex sets.
pub fn enumerate_maximal_independent_sets(g: &Graph) -> Result<impl Iterator<Item = VertexSet>> {
    Ok(MaximalIndependentSets::new(g)?.map(VertexSet::from_mask))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub alpha: usize,
    pub i_dom: usize,
    pub well_covered: bool,
    pub mis_spectrum: Vec<usize>,
}

impl IndependenceReport {
    fn from_spectrum(spectrum: BTreeSet<usize>) -> Self {
        let mis_spectrum: Vec<usize> = spectrum.into_iter().collect();
        Self {
            alpha: *mis_spectrum.last().unwrap_or(&0),
            i_dom: *mis_spectrum.first().unwrap_or(&0),
            well_covered: mis_spectrum.len() == 1,
            mis_spectrum,
        }
    }
}

pub fn independence_report(g: &Graph) -> Result<IndependenceReport> {
    let spectrum = MaximalIndependentSets::new(g)?.map(|s| s.count_ones() as usize).collect();
    Ok(IndependenceReport::from_spectrum(spectrum))
}

/// Size shared by all maximal independent sets, or `None` as soon as two differ.
pub(crate) fn common_mis_size(adjacency: &[u64]) -> Option<usize> {
    let mut sets = MaximalIndependentSets::from_masks(adjacency);
    let first = sets.next()?.count_ones();
    sets.all(|s| s.count_ones() == first).then_some(first as usize)
}

/// Membership in the class of graphs with equicardinal maximal open packings,
/// decided as well-coveredness of the open neighborhood graph.
pub fn in_u_via_ong(g: &Graph) -> Result<bool> {
    Ok(independence_report(&build_ong(g))?.well_covered)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Path,
    Cycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentShape {
    pub shape: Shape,
    pub order: usize,
    pub vertices: VertexSet,
}

/// Per-component path/cycle classification of an arbitrary graph.
pub fn component_shapes(h: &Graph) -> Vec<ComponentShape> {
    h.components()
        .into_iter()
        .map(|vertices| {
            let order = vertices.len();
            let edges: usize = vertices.iter().map(|v| h.degree(v)).sum::<usize>() / 2;
            let max_deg = vertices.iter().map(|v| h.degree(v)).max().unwrap_or(0);
            let shape = if edges + 1 == order && max_deg <= 2 {
                Shape::Path
            } else if order >= 3 && vertices.iter().all(|v| h.degree(v) == 2) {
                Shape::Cycle
            } else {
                Shape::Other
            };
            ComponentShape { shape, order, vertices }
        })
        .collect()
}

/// Builds ONG(G) and classifies each of its components.
pub fn ong_structure_check(g: &Graph) -> Vec<ComponentShape> {
    component_shapes(&build_ong(g))
}

/// Multiset of `(shape, order)` pairs, sorted, for comparing against closed forms.
pub fn shape_signature(shapes: &[ComponentShape]) -> Vec<(Shape, usize)> {
    let mut sig: Vec<(Shape, usize)> = shapes.iter().map(|c| (c.shape, c.order)).collect();
    sig.sort_unstable();
    sig
}

/// α(G) by branch and bound over adjacency masks.
pub fn independence_number(adjacency: &[u64]) -> usize {
    fn go(adj: &[u64], candidates: u64, size: usize, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        // branch on a candidate of maximum remaining degree
        let mut rest = candidates;
        let mut pick = (0u32, candidates.trailing_zeros() as usize);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & candidates).count_ones();
            if d > pick.0 {
                pick = (d, v);
            }
        }
        let v = pick.1;
        if pick.0 == 0 {
            *best = (*best).max(size + candidates.count_ones() as usize);
            return;
        }
        go(adj, candidates & !adj[v] & !(1 << v), size + 1, best);
        go(adj, candidates & !(1 << v), size, best);
    }
    let n = adjacency.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    go(adjacency, all, 0, &mut best);
    best
}

/// i(G), the minimum size of a maximal independent set, by branch and bound.
///
/// Some vertex of `N[v]` must join the set for every vertex `v` not yet
/// dominated; the search branches on the undominated vertex with the fewest
/// available choices.
pub fn independent_domination_number(adjacency: &[u64]) -> usize {
    fn go(closed: &[u64], free: u64, size: usize, best: &mut usize) {
        if free == 0 {
            *best = (*best).min(size);
            return;
        }
        if size + 1 >= *best {
            return;
        }
        let mut rest = free;
        let (mut fewest, mut branch, mut reach) = (u32::MAX, 0u64, 1u32);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let choices = closed[v] & free;
            let k = choices.count_ones();
            if k < fewest {
                fewest = k;
                branch = choices;
            }
            reach = reach.max(k);
        }
        // each chosen vertex removes at most `reach` free vertices
        if size + (free.count_ones() as usize).div_ceil(reach as usize) >= *best {
            return;
        }
        let mut choices = branch;
        while choices != 0 {
            let u = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            go(closed, free & !closed[u], size + 1, best);
        }
    }
    let n = adjacency.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let closed: Vec<u64> = adjacency.iter().enumerate().map(|(v, &row)| row | 1 << v).collect();
    let mut best = n + 1;
    go(&closed, all, 0, &mut best);
    best.min(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn sets(g: &Graph) -> BTreeSet<VertexSet> {
        enumerate_maximal_independent_sets(g).unwrap().collect()
    }

    #[test]
    fn ong_examples() {
        let expected = Graph::new(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1)]).unwrap();
        assert_eq!(build_ong(&cycle(6)), expected);
        assert_eq!(build_ong(&cycle(4)), Graph::new(4, &[(0, 2), (1, 3)]).unwrap());
        assert_eq!(build_ong(&path(1)), Graph::empty(1));
    }

    #[test]
    fn ong_masks_match_graph() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        assert_eq!(ong_masks(&g.masks().unwrap()), build_ong(&g).masks().unwrap());
    }

    #[test]
    fn independence() {
        let c4 = cycle(4);
        assert!(is_independent(&c4, &VertexSet::from([0, 2])).unwrap());
        assert!(!is_independent(&c4, &VertexSet::from([0, 1])).unwrap());
        assert!(is_independent(&c4, &VertexSet::new()).unwrap());
        assert!(is_independent(&c4, &VertexSet::from([7])).is_err());
    }

    #[test]
    fn mis_examples() {
        let expected: BTreeSet<VertexSet> =
            [vec![0, 2], vec![0, 3], vec![1, 3]].into_iter().map(VertexSet::from).collect();
        assert_eq!(sets(&path(4)), expected);

        let expected: BTreeSet<VertexSet> = (0..3).map(|v| VertexSet::from([v])).collect();
        assert_eq!(sets(&complete(3)), expected);

        let expected: BTreeSet<VertexSet> = [VertexSet::from([0, 1, 2])].into_iter().collect();
        assert_eq!(sets(&Graph::empty(3)), expected);

        let expected: BTreeSet<VertexSet> = [VertexSet::new()].into_iter().collect();
        assert_eq!(sets(&Graph::empty(0)), expected);
    }

    #[test]
    fn mis_cap() {
        assert!(matches!(enumerate_maximal_independent_sets(&path(65)), Err(Error::CapExceeded { n: 65, cap: 64 })));
        // order exactly 64 is accepted
        assert!(enumerate_maximal_independent_sets(&Graph::empty(64)).unwrap().count() == 1);
    }

    #[test]
    fn reports() {
        let r = independence_report(&path(4)).unwrap();
        assert_eq!((r.alpha, r.i_dom, r.well_covered), (2, 2, true));
        let r = independence_report(&path(3)).unwrap();
        assert_eq!((r.alpha, r.i_dom, r.well_covered), (2, 1, false));
        for n in 1..6 {
            let r = independence_report(&complete(n)).unwrap();
            assert_eq!((r.alpha, r.i_dom, r.well_covered), (1, 1, true));
        }
    }

    #[test]
    fn u_via_ong() {
        assert!(in_u_via_ong(&cycle(10)).unwrap());
        assert!(!in_u_via_ong(&path(12)).unwrap());
    }

    #[test]
    fn branch_and_bound_extremes_match_enumeration() {
        for g in [path(7), cycle(9), complete(5), Graph::empty(4), build_ong(&path(11))] {
            let r = independence_report(&g).unwrap();
            let masks = g.masks().unwrap();
            assert_eq!(independence_number(&masks), r.alpha);
            assert_eq!(independent_domination_number(&masks), r.i_dom);
        }
    }

    #[test]
    fn structure_examples() {
        assert_eq!(shape_signature(&ong_structure_check(&cycle(8))), vec![(Shape::Cycle, 4), (Shape::Cycle, 4)]);
        assert_eq!(shape_signature(&ong_structure_check(&path(9))), vec![(Shape::Path, 4), (Shape::Path, 5)]);
        assert_eq!(shape_signature(&ong_structure_check(&cycle(7))), vec![(Shape::Cycle, 7)]);
        assert_eq!(shape_signature(&component_shapes(&Graph::empty(1))), vec![(Shape::Path, 1)]);
        assert_eq!(shape_signature(&component_shapes(&complete(4))), vec![(Shape::Other, 4)]);
    }
}
