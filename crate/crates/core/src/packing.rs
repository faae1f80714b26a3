//! Exact open packing computations.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::ong::{self, check_cap, MaximalIndependentSets, DEFAULT_CAP};

/// Default number of maximal open packings enumerated before a report
/// falls back to computing only the extremes.
pub const DEFAULT_COUNT_CUTOFF: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by the exact routines (at most 64).
    pub cap: usize,
    /// Enumeration budget for [`packing_report_with`].
    pub count_cutoff: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, count_cutoff: DEFAULT_COUNT_CUTOFF }
    }
}

/// True iff no vertex of `g` has two neighbors in `p`.
pub fn is_open_packing(g: &Graph, p: &VertexSet) -> Result<bool> {
    p.validate(g.order())?;
    let mut hit = vec![false; g.order()];
    for v in p {
        for &w in g.adj(v) {
            if std::mem::replace(&mut hit[w], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_maximal_open_packing(g: &Graph, p: &VertexSet) -> Result<bool> {
    if !is_open_packing(g, p)? {
        return Ok(false);
    }
    let covered = g.open_neighborhood_of_set(p)?;
    Ok((0..g.order()).filter(|&v| !p.contains(v)).all(|v| g.adj(v).iter().any(|&w| covered.contains(w))))
}

/// Greedily extends the open packing `p` to a maximal one.
///
/// Vertices are examined in `order` (ascending index when `None`); vertices
/// the ordering omits are examined afterwards in ascending order.
pub fn extend_to_maximal(g: &Graph, p: &VertexSet, order: Option<&[Vertex]>) -> Result<VertexSet> {
    if !is_open_packing(g, p)? {
        return Err(Error::NotAPacking);
    }
    let n = g.order();
    if let Some(order) = order {
        if let Some(&v) = order.iter().find(|&&v| v >= n) {
            return Err(Error::Range { vertex: v, n });
        }
    }
    let mut covered = vec![false; n];
    for v in p {
        for &w in g.adj(v) {
            covered[w] = true;
        }
    }
    let mut result = p.clone();
    let explicit = order.unwrap_or(&[]);
    for v in explicit.iter().copied().chain(0..n) {
        if result.contains(v) || g.adj(v).iter().any(|&w| covered[w]) {
            continue;
        }
        result.insert(v);
        for &w in g.adj(v) {
            covered[w] = true;
        }
    }
    Ok(result)
}

/// Every maximal open packing of `g`, each exactly once, as bit masks.
pub struct MaximalOpenPackings {
    inner: MaximalIndependentSets,
}

impl Iterator for MaximalOpenPackings {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.inner.next().map(VertexSet::from_mask)
    }
}

impl MaximalOpenPackings {
    /// The same enumeration as raw 64-bit masks.
    pub fn masks(self) -> MaximalIndependentSets {
        self.inner
    }
}

pub fn enumerate_maximal_open_packings(g: &Graph) -> Result<MaximalOpenPackings> {
    enumerate_maximal_open_packings_capped(g, DEFAULT_CAP)
}

pub fn enumerate_maximal_open_packings_capped(g: &Graph, cap: usize) -> Result<MaximalOpenPackings> {
    check_cap(g, cap)?;
    let ong = ong::ong_masks(&g.masks().expect("order checked against cap"));
    Ok(MaximalOpenPackings { inner: MaximalIndependentSets::from_masks(&ong) })
}

/// ρ°, ρ°ₗ and the sizes attained by maximal open packings.
///
/// `spectrum` and `count` are `None` when enumeration stopped at the count
/// cutoff; the extremes are then computed by branch and bound and remain exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingReport {
    pub rho_open: usize,
    pub rho_open_lower: usize,
    pub spectrum: Option<Vec<usize>>,
    pub count: Option<u64>,
}

impl PackingReport {
    /// True iff every maximal open packing has the same size.
    pub fn uniform(&self) -> bool {
        self.rho_open == self.rho_open_lower
    }
}

pub fn packing_report(g: &Graph) -> Result<PackingReport> {
    packing_report_with(g, Limits::default())
}

pub fn packing_report_with(g: &Graph, limits: Limits) -> Result<PackingReport> {
    check_cap(g, limits.cap)?;
    let ong = ong::ong_masks(&g.masks().expect("order checked against cap"));
    let mut sizes = BTreeSet::new();
    let mut count = 0u64;
    for set in MaximalIndependentSets::from_masks(&ong) {
        if count == limits.count_cutoff {
            return packing_extremes(g);
        }
        count += 1;
        sizes.insert(set.count_ones() as usize);
    }
    let spectrum: Vec<usize> = sizes.into_iter().collect();
    Ok(PackingReport {
        rho_open: *spectrum.last().expect("at least one maximal open packing"),
        rho_open_lower: spectrum[0],
        spectrum: Some(spectrum),
        count: Some(count),
    })
}

/// ρ°ₗ and ρ° by branch and bound, without enumerating every maximal open packing.
pub fn packing_extremes(g: &Graph) -> Result<PackingReport> {
    check_cap(g, DEFAULT_CAP)?;
    let ong = ong::ong_masks(&g.masks().expect("order checked against cap"));
    Ok(PackingReport {
        rho_open: ong::independence_number(&ong),
        rho_open_lower: ong::independent_domination_number(&ong),
        spectrum: None,
        count: None,
    })
}

/// Common size of all maximal open packings, or `None` once two sizes differ.
pub fn uniform_packing_size(g: &Graph) -> Result<Option<usize>> {
    check_cap(g, DEFAULT_CAP)?;
    Ok(ong::common_mis_size(&ong::ong_masks(&g.masks().expect("order checked against cap"))))
}

pub fn in_u_bruteforce(g: &Graph) -> Result<bool> {
    Ok(uniform_packing_size(g)?.is_some())
}

/// Minimum size of a set `S` with every vertex adjacent to a member of `S`.
pub fn total_domination_number(g: &Graph) -> Result<usize> {
    check_cap(g, DEFAULT_CAP)?;
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let adj = g.masks().expect("order checked against cap");
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let max_deg = g.max_degree().max(1);

    fn go(adj: &[u64], open: u64, size: usize, max_deg: usize, best: &mut usize) {
        if open == 0 {
            *best = (*best).min(size);
            return;
        }
        if size + (open.count_ones() as usize).div_ceil(max_deg) >= *best {
            return;
        }
        // the open vertex with the fewest neighbors limits the branching
        let mut rest = open;
        let mut pick = (u32::MAX, 0usize);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = adj[v].count_ones();
            if d < pick.0 {
                pick = (d, v);
            }
        }
        let mut choices = adj[pick.1];
        while choices != 0 {
            let u = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            go(adj, open & !adj[u], size + 1, max_deg, best);
        }
    }

    let mut best = n;
    go(&adj, all, 0, max_deg, &mut best);
    Ok(best)
}

/// Checks `n/(Δ(Δ−1)+1) ≤ ρ°ₗ ≤ ρ° ≤ n/δ` in exact integer arithmetic.
pub fn check_bound_chain(g: &Graph) -> Result<bool> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let report = packing_report(g)?;
    bound_chain_holds(g, &report)
}

/// The bound chain against an already computed report.
pub fn bound_chain_holds(g: &Graph, report: &PackingReport) -> Result<bool> {
    let delta = g.min_degree();
    if delta == 0 {
        let v = (0..g.order()).find(|&v| g.degree(v) == 0).unwrap_or(0);
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let n = g.order() as u128;
    let big = g.max_degree() as u128;
    let lower = report.rho_open_lower as u128;
    let upper = report.rho_open as u128;
    Ok(n <= lower * (big * (big - 1) + 1) && lower <= upper && upper * delta as u128 <= n)
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

    fn all_packings(g: &Graph) -> BTreeSet<VertexSet> {
        enumerate_maximal_open_packings(g).unwrap().collect()
    }

    fn family(sets: &[&[Vertex]]) -> BTreeSet<VertexSet> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn packing_examples() {
        let c4 = cycle(4);
        assert!(is_open_packing(&c4, &VertexSet::from([0, 1])).unwrap());
        assert!(!is_open_packing(&c4, &VertexSet::from([0, 2])).unwrap());
        assert!(is_open_packing(&c4, &VertexSet::new()).unwrap());
        assert!(is_open_packing(&c4, &VertexSet::from([9])).is_err());
    }

    #[test]
    fn maximality_examples() {
        let p3 = path(3);
        assert!(is_maximal_open_packing(&p3, &VertexSet::from([0, 1])).unwrap());
        assert!(!is_maximal_open_packing(&p3, &VertexSet::from([0])).unwrap());
        assert!(is_maximal_open_packing(&Graph::empty(1), &VertexSet::from([0])).unwrap());
        assert!(!is_maximal_open_packing(&p3, &VertexSet::from([0, 2])).unwrap());
    }

    #[test]
    fn greedy_extension() {
        let p = extend_to_maximal(&path(8), &VertexSet::new(), None).unwrap();
        assert_eq!(p.len(), 4);
        assert!(is_maximal_open_packing(&path(8), &p).unwrap());

        let c4 = cycle(4);
        assert_eq!(extend_to_maximal(&c4, &VertexSet::from([0]), None).unwrap(), VertexSet::from([0, 1]));

        let fixed = VertexSet::from([1, 2]);
        assert_eq!(extend_to_maximal(&c4, &fixed, Some(&[3, 0])).unwrap(), fixed);

        // an explicit ordering changes which packing is found
        assert_eq!(extend_to_maximal(&c4, &VertexSet::new(), Some(&[3, 2, 1, 0])).unwrap(), VertexSet::from([2, 3]));
        assert_eq!(extend_to_maximal(&c4, &VertexSet::from([0, 2]), None), Err(Error::NotAPacking));
        assert!(matches!(extend_to_maximal(&c4, &VertexSet::new(), Some(&[4])), Err(Error::Range { vertex: 4, .. })));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(all_packings(&path(3)), family(&[&[0, 1], &[1, 2]]));
        assert_eq!(all_packings(&path(2)), family(&[&[0, 1]]));
        assert_eq!(all_packings(&cycle(4)), family(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]));
        assert_eq!(all_packings(&Graph::empty(0)), family(&[&[]]));
        // isolated vertices sit in every maximal open packing
        let g = path(3).disjoint_union(&Graph::empty(1));
        assert!(all_packings(&g).iter().all(|p| p.contains(3)));
    }

    #[test]
    fn reports() {
        let r = packing_report(&path(8)).unwrap();
        assert_eq!(r.spectrum, Some(vec![4]));
        let r = packing_report(&path(5)).unwrap();
        assert!(r.spectrum.unwrap().len() >= 2);

        let k1 = packing_report(&Graph::empty(1)).unwrap();
        assert_eq!((k1.rho_open, k1.rho_open_lower), (1, 1));
        let empty = packing_report(&Graph::empty(0)).unwrap();
        assert_eq!(empty.spectrum, Some(vec![0]));
    }

    #[test]
    fn report_cutoff_keeps_extremes() {
        let g = path(20);
        let full = packing_report(&g).unwrap();
        let cut = packing_report_with(&g, Limits { cap: 64, count_cutoff: 3 }).unwrap();
        assert_eq!(cut.spectrum, None);
        assert_eq!(cut.count, None);
        assert_eq!((cut.rho_open, cut.rho_open_lower), (full.rho_open, full.rho_open_lower));
    }

    #[test]
    fn cap_is_enforced() {
        let g = path(12);
        assert_eq!(
            packing_report_with(&g, Limits { cap: 10, count_cutoff: 10 }),
            Err(Error::CapExceeded { n: 12, cap: 10 })
        );
        assert!(matches!(in_u_bruteforce(&path(70)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn membership() {
        assert!(in_u_bruteforce(&cycle(14)).unwrap());
        assert!(!in_u_bruteforce(&cycle(9)).unwrap());
        assert!(in_u_bruteforce(&Graph::empty(1)).unwrap());
    }

    #[test]
    fn total_domination() {
        assert_eq!(total_domination_number(&path(4)).unwrap(), 2);
        assert_eq!(total_domination_number(&cycle(4)).unwrap(), 2);
        assert_eq!(total_domination_number(&path(2)).unwrap(), 2);
        assert_eq!(
            total_domination_number(&path(2).disjoint_union(&Graph::empty(1))),
            Err(Error::IsolatedVertex { vertex: 2 })
        );
    }

    #[test]
    fn bound_chain_examples() {
        assert!(check_bound_chain(&path(8)).unwrap());
        assert!(check_bound_chain(&path(2)).unwrap());
        assert!(check_bound_chain(&cycle(6)).unwrap());
        assert_eq!(check_bound_chain(&path(2).disjoint_union(&path(2))), Err(Error::Disconnected));
        assert_eq!(check_bound_chain(&Graph::empty(1)), Err(Error::IsolatedVertex { vertex: 0 }));
    }
}
