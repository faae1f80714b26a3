//! Graph families: paths, cycles, the gap trees `T_n`, pendant-path
//! embeddings, the girth-14 family `G_k`, double-star trees, and random and
//! exhaustive tree corpora.
//!
//! Vertex numbering is fixed per generator and documented on each function.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classifier::FPartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The single RNG type behind every seeded generator.
pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn at_least(what: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::ParameterRange { what, value, min })
    } else {
        Ok(())
    }
}

/// `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Result<Graph> {
    at_least("path order", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `0 - 1 - ... - (n-1) - 0`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    at_least("cycle order", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn gen_complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid edges")
}

/// `K_{1,k}` with center 0.
pub fn gen_star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).expect("valid edges")
}

/// Center 0 with `legs` pendant paths of `length` edges each; leg `i`
/// occupies `1 + i*length ..= (i+1)*length`, nearest the center first.
pub fn gen_spider(legs: usize, length: usize) -> Graph {
    let n = 1 + legs * length;
    let edges = (0..legs).flat_map(|i| {
        let first = 1 + i * length;
        std::iter::once((0, first)).chain((1..length).map(move |j| (first + j - 1, first + j)))
    });
    Graph::from_edges(n, edges).expect("valid edges")
}

/// The tree of order `4n+2` whose lower and upper open packing numbers are 2 and `2n+2`.
///
/// Centers are 0 and 1; the `i`-th leg of center `c` is `c - m - l` with
/// `m = 2 + 2(c*n + i)` and `l = m + 1`.
pub fn gen_t(n: usize) -> Result<Graph> {
    at_least("T parameter", n, 1)?;
    let edges = std::iter::once((0, 1)).chain((0..2).flat_map(move |c| {
        (0..n).flat_map(move |i| {
            let m = 2 + 2 * (c * n + i);
            [(c, m), (m, m + 1)]
        })
    }));
    Graph::from_edges(4 * n + 2, edges)
}

/// Attaches a pendant path `h_i - a_i - b_i - c_i` to every vertex of `h`.
///
/// The vertices of `h` keep their indices; `a_i, b_i, c_i` are
/// `n + 3i, n + 3i + 1, n + 3i + 2`. Every maximal open packing of the
/// result has size `2n`.
pub fn embed_in_u(h: &Graph) -> Result<(Graph, Vec<Vertex>)> {
    let n = h.order();
    at_least("embedded graph order", n, 1)?;
    let pendant = (0..n).flat_map(|i| {
        let a = n + 3 * i;
        [(i, a), (a, a + 1), (a + 1, a + 2)]
    });
    let g = h.with_new_vertices(3 * n).with_edges(pendant)?;
    Ok((g, (0..n).collect()))
}

/// `k` internally disjoint `x - a - b - c - d - e - f - y` paths.
///
/// `x = 0`, `y = 1`, and the `j`-th path uses `2 + 6j ..= 7 + 6j` in order `a..f`.
pub fn gen_gk(k: usize) -> Result<Graph> {
    at_least("G_k parameter", k, 1)?;
    let edges = (0..k).flat_map(|j| {
        let a = 2 + 6 * j;
        [(0, a), (a, a + 1), (a + 1, a + 2), (a + 2, a + 3), (a + 3, a + 4), (a + 4, a + 5), (a + 5, 1)]
    });
    Graph::from_edges(6 * k + 2, edges)
}

/// Adds a new leaf (index `n`) at the support vertex `s`.
pub fn add_leaf(g: &Graph, s: Vertex) -> Result<Graph> {
    if s >= g.order() {
        return Err(Error::Range { vertex: s, n: g.order() });
    }
    if !g.adj(s).iter().any(|&w| g.degree(w) == 1) {
        return Err(Error::NotASupport { vertex: s });
    }
    let n = g.order();
    g.with_new_vertices(1).with_edges([(s, n)])
}

/// Removes the highest-indexed leaf of the strong support `s`; later indices shift down by one.
pub fn remove_extra_leaf(g: &Graph, s: Vertex) -> Result<Graph> {
    if s >= g.order() {
        return Err(Error::Range { vertex: s, n: g.order() });
    }
    let leaf = g.adj(s).iter().copied().filter(|&w| g.degree(w) == 1).collect::<Vec<_>>();
    if leaf.len() < 2 {
        return Err(Error::NotAStrongSupport { vertex: s });
    }
    let gone = *leaf.last().expect("two leaves");
    let keep: VertexSet = (0..g.order()).filter(|&v| v != gone).collect();
    Ok(g.induced_subgraph(&keep)?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StarRule {
    /// Some (possibly all) leaves of `u` are special; none of `v`.
    One,
    /// Some but not all leaves on each side are special.
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    U,
    V,
}

/// One double star with supports `u`, `v` and their leaf counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleStar {
    pub leaves_u: usize,
    pub leaves_v: usize,
    pub rule: StarRule,
    /// Indices into the leaves of `u`.
    pub special_u: Vec<usize>,
    /// Indices into the leaves of `v`.
    pub special_v: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeafRef {
    pub star: usize,
    pub side: Side,
    pub leaf: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleStarSpec {
    pub stars: Vec<DoubleStar>,
    pub links: Vec<(LeafRef, LeafRef)>,
}

struct Layout {
    base: Vec<usize>,
    n: usize,
}

impl Layout {
    // star k: u = base, v = base + 1, then the u-leaves, then the v-leaves
    fn new(stars: &[DoubleStar]) -> Self {
        let mut base = Vec::with_capacity(stars.len());
        let mut n = 0;
        for star in stars {
            base.push(n);
            n += 2 + star.leaves_u + star.leaves_v;
        }
        Self { base, n }
    }

    fn u(&self, k: usize) -> Vertex {
        self.base[k]
    }

    fn v(&self, k: usize) -> Vertex {
        self.base[k] + 1
    }

    fn leaf(&self, stars: &[DoubleStar], r: LeafRef) -> Vertex {
        match r.side {
            Side::U => self.base[r.star] + 2 + r.leaf,
            Side::V => self.base[r.star] + 2 + stars[r.star].leaves_u + r.leaf,
        }
    }
}

fn spec_error(msg: impl Into<String>) -> Error {
    Error::Spec(msg.into())
}

fn check_specials(k: usize, side: &str, special: &[usize], count: usize) -> Result<()> {
    let distinct: BTreeSet<usize> = special.iter().copied().collect();
    if distinct.len() != special.len() {
        return Err(spec_error(format!("star {k}: repeated special {side}-leaf")));
    }
    if let Some(&i) = special.iter().find(|&&i| i >= count) {
        return Err(spec_error(format!("star {k}: special {side}-leaf {i} out of range")));
    }
    Ok(())
}

impl DoubleStarSpec {
    /// Checks every invariant that can be stated without building the tree.
    pub fn validate(&self) -> Result<()> {
        if self.stars.is_empty() {
            return Err(spec_error("no double stars"));
        }
        for (k, star) in self.stars.iter().enumerate() {
            if star.leaves_u == 0 || star.leaves_v == 0 {
                return Err(spec_error(format!("star {k}: both supports need a leaf")));
            }
            check_specials(k, "u", &star.special_u, star.leaves_u)?;
            check_specials(k, "v", &star.special_v, star.leaves_v)?;
            match star.rule {
                StarRule::One => {
                    if star.special_u.is_empty() {
                        return Err(spec_error(format!("star {k}: rule one needs a special u-leaf")));
                    }
                    if !star.special_v.is_empty() {
                        return Err(spec_error(format!("star {k}: rule one allows no special v-leaf")));
                    }
                }
                StarRule::Two => {
                    let proper = |s: &[usize], c: usize| !s.is_empty() && s.len() < c;
                    if !proper(&star.special_u, star.leaves_u) || !proper(&star.special_v, star.leaves_v) {
                        return Err(spec_error(format!(
                            "star {k}: rule two needs at least one, but not all, special leaves on each side"
                        )));
                    }
                }
            }
        }
        let is_special = |r: &LeafRef| {
            self.stars.get(r.star).is_some_and(|s| match r.side {
                Side::U => s.special_u.contains(&r.leaf),
                Side::V => s.special_v.contains(&r.leaf),
            })
        };
        let mut linked = BTreeSet::new();
        for (a, b) in &self.links {
            if !is_special(a) || !is_special(b) {
                return Err(spec_error(format!("link {a:?}-{b:?} must join special leaves")));
            }
            if a == b {
                return Err(spec_error(format!("link {a:?} joins a leaf to itself")));
            }
            linked.insert(*a);
            linked.insert(*b);
        }
        for (k, star) in self.stars.iter().enumerate() {
            let refs = star
                .special_u
                .iter()
                .map(|&leaf| LeafRef { star: k, side: Side::U, leaf })
                .chain(star.special_v.iter().map(|&leaf| LeafRef { star: k, side: Side::V, leaf }));
            for r in refs {
                if !linked.contains(&r) {
                    return Err(spec_error(format!("special leaf {r:?} has no link")));
                }
            }
        }
        Ok(())
    }
}

/// Builds the linked double-star tree and the partition read off the construction.
pub fn gen_f_tree(spec: &DoubleStarSpec) -> Result<(Graph, FPartition)> {
    spec.validate()?;
    let stars = &spec.stars;
    let layout = Layout::new(stars);
    let mut edges = Vec::new();
    for (k, star) in stars.iter().enumerate() {
        edges.push((layout.u(k), layout.v(k)));
        for leaf in 0..star.leaves_u {
            edges.push((layout.u(k), layout.leaf(stars, LeafRef { star: k, side: Side::U, leaf })));
        }
        for leaf in 0..star.leaves_v {
            edges.push((layout.v(k), layout.leaf(stars, LeafRef { star: k, side: Side::V, leaf })));
        }
    }
    let mut seen = BTreeSet::new();
    for (a, b) in &spec.links {
        let (x, y) = (layout.leaf(stars, *a), layout.leaf(stars, *b));
        if !seen.insert((x.min(y), x.max(y))) {
            return Err(spec_error(format!("link {a:?}-{b:?} repeated")));
        }
        edges.push((x, y));
    }
    let g = Graph::new(layout.n, &edges)?;
    if !g.is_tree() {
        return Err(spec_error("links must leave the graph connected and acyclic"));
    }

    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    let mut d2 = Vec::new();
    for (k, star) in stars.iter().enumerate() {
        if star.rule == StarRule::One && star.special_u.len() == star.leaves_u {
            s1.push(layout.v(k));
            d2.extend((0..star.leaves_u).map(|leaf| layout.leaf(stars, LeafRef { star: k, side: Side::U, leaf })));
        } else {
            s2.extend([layout.u(k), layout.v(k)]);
        }
    }
    let s1 = VertexSet::from(s1);
    let s2 = VertexSet::from(s2);
    let supports = s1.union(&s2);
    let non_leaf_neighbors = |part: &VertexSet| -> VertexSet {
        part.iter()
            .flat_map(|s| g.adj(s).iter().copied())
            .filter(|&w| g.degree(w) > 1 && !supports.contains(w))
            .collect()
    };
    let partition = FPartition {
        leaves: g.leaves(),
        d11: non_leaf_neighbors(&s1),
        d12: non_leaf_neighbors(&s2),
        s1,
        s2,
        d2: VertexSet::from(d2),
    };
    Ok((g, partition))
}

/// A random valid double-star specification with `2..=max_stars` stars.
///
/// The stars are joined along a random tree; each star's special leaves
/// share that star's tree edges, every special leaf taking at least one.
pub fn random_double_star_spec(rng: &mut SeededRng, max_stars: usize) -> DoubleStarSpec {
    let k = rng.gen_range(2..=max_stars.max(2));
    let tree: Vec<(usize, usize)> = (1..k).map(|i| (rng.gen_range(0..i), i)).collect();
    let mut incident = vec![Vec::new(); k];
    for (e, &(a, b)) in tree.iter().enumerate() {
        incident[a].push(e);
        incident[b].push(e);
    }
    let mut stars = Vec::with_capacity(k);
    // endpoint[e] holds the special leaf at each end of tree edge e
    let mut endpoint: Vec<Vec<(usize, LeafRef)>> = vec![Vec::new(); tree.len()];
    for (star_index, inc) in incident.iter().enumerate() {
        let d = inc.len();
        let rule = if d >= 2 && rng.gen_bool(0.5) { StarRule::Two } else { StarRule::One };
        let (leaves_u, leaves_v, su, sv) = match rule {
            StarRule::One => {
                let su = rng.gen_range(1..=d);
                let extra = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=2) };
                (su + extra, rng.gen_range(1..=3), su, 0)
            }
            StarRule::Two => {
                let su = rng.gen_range(1..d);
                let sv = rng.gen_range(1..=d - su);
                (su + rng.gen_range(1..=2), sv + rng.gen_range(1..=2), su, sv)
            }
        };
        let pick = |count: usize, take: usize, rng: &mut SeededRng| {
            let mut idx: Vec<usize> = (0..count).collect();
            idx.shuffle(rng);
            idx.truncate(take);
            idx.sort_unstable();
            idx
        };
        let special_u = pick(leaves_u, su, rng);
        let special_v = pick(leaves_v, sv, rng);
        let mut specials: Vec<LeafRef> = special_u
            .iter()
            .map(|&leaf| LeafRef { star: star_index, side: Side::U, leaf })
            .chain(special_v.iter().map(|&leaf| LeafRef { star: star_index, side: Side::V, leaf }))
            .collect();
        specials.shuffle(rng);
        let mut edges = inc.clone();
        edges.shuffle(rng);
        for (i, &e) in edges.iter().enumerate() {
            let r = if i < specials.len() { specials[i] } else { specials[rng.gen_range(0..specials.len())] };
            endpoint[e].push((star_index, r));
        }
        stars.push(DoubleStar { leaves_u, leaves_v, rule, special_u, special_v });
    }
    let links = tree
        .iter()
        .enumerate()
        .map(|(e, &(a, _))| {
            let ends = &endpoint[e];
            let at = |s: usize| ends.iter().find(|(owner, _)| *owner == s).expect("both ends assigned").1;
            let other = ends.iter().find(|(owner, _)| *owner != a).expect("both ends assigned").0;
            (at(a), at(other))
        })
        .collect();
    DoubleStarSpec { stars, links }
}

/// Decodes a Prüfer sequence over `0..n` (`seq.len() == n - 2`).
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    match n {
        0 => return Ok(Graph::empty(0)),
        1 => return Ok(Graph::empty(1)),
        2 => return Graph::new(2, &[(0, 1)]),
        _ => {}
    }
    if seq.len() != n - 2 {
        return Err(Error::InvalidArgument(format!("Prüfer sequence for {n} vertices needs {} entries", n - 2)));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::Range { vertex: v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges)
}

/// Uniform random labeled tree of order `n`.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree(n, &mut rng_from_seed(seed))
}

pub fn random_tree(n: usize, rng: &mut SeededRng) -> Result<Graph> {
    at_least("tree order", n, 1)?;
    let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq, n)
}

/// Largest order accepted by [`enumerate_labeled_trees`].
pub const TREE_ENUMERATION_LIMIT: usize = 9;

/// Every labeled tree on `n` vertices, in Prüfer-sequence order.
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = prufer_decode(&self.seq, self.n).expect("valid sequence");
        // odometer increment
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
        }
        Some(tree)
    }
}

pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    at_least("tree order", n, 1)?;
    if n > TREE_ENUMERATION_LIMIT {
        return Err(Error::CapExceeded { n, cap: TREE_ENUMERATION_LIMIT });
    }
    Ok(LabeledTrees { n, seq: vec![0; n.saturating_sub(2)], done: false })
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut SeededRng) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, &edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::recognize_f;
    use crate::graph::Distance;

    #[test]
    fn paths_and_cycles() {
        assert_eq!(gen_path(1).unwrap(), Graph::empty(1));
        assert_eq!(gen_cycle(3).unwrap().girth(), Distance::Finite(3));
        assert!(matches!(gen_path(0), Err(Error::ParameterRange { .. })));
        assert!(matches!(gen_cycle(2), Err(Error::ParameterRange { .. })));
    }

    #[test]
    fn t_family() {
        assert_eq!(gen_t(1).unwrap().degrees(), vec![2, 2, 2, 1, 2, 1]);
        assert!(gen_t(1).unwrap().is_tree());
        let t2 = gen_t(2).unwrap();
        assert_eq!((t2.order(), t2.leaves().len()), (10, 4));
        for n in 1..6 {
            let t = gen_t(n).unwrap();
            assert_eq!(t.order(), 4 * n + 2);
            assert_eq!(t.leaves().len(), 2 * n);
            assert_eq!(t.supports().len(), 2 * n);
            assert_eq!(t.girth(), Distance::Infinite);
        }
    }

    #[test]
    fn embedding() {
        let (g, map) = embed_in_u(&Graph::empty(1)).unwrap();
        assert_eq!(g, gen_path(4).unwrap());
        assert_eq!(map, vec![0]);
        let (g, _) = embed_in_u(&gen_complete(3)).unwrap();
        assert_eq!(g.order(), 12);
        assert!(embed_in_u(&Graph::empty(0)).is_err());
    }

    #[test]
    fn gk_family() {
        // one block only: x and y are the ends of a path on 8 vertices
        let g1 = gen_gk(1).unwrap();
        assert_eq!(g1.degrees(), vec![1, 1, 2, 2, 2, 2, 2, 2]);
        assert!(g1.is_tree());
        let g2 = gen_gk(2).unwrap();
        assert_eq!(g2.degrees(), vec![2; 14]);
        assert_eq!(g2.girth(), Distance::Finite(14));
        for k in 2..6 {
            let g = gen_gk(k).unwrap();
            assert_eq!(g.order(), 6 * k + 2);
            assert_eq!(g.girth(), Distance::Finite(14));
            assert!(g.bipartition().is_some());
        }
    }

    #[test]
    fn leaves_added_and_removed() {
        let p3 = gen_path(3).unwrap();
        let star = add_leaf(&p3, 1).unwrap();
        assert_eq!(star.degrees(), vec![1, 3, 1, 1]);
        assert_eq!(add_leaf(&p3, 0), Err(Error::NotASupport { vertex: 0 }));
        let back = remove_extra_leaf(&gen_star(3), 0).unwrap();
        assert_eq!(back, gen_star(2));
        assert_eq!(remove_extra_leaf(&p3, 1).unwrap(), gen_path(2).unwrap());
        let p4 = gen_path(4).unwrap();
        assert_eq!(remove_extra_leaf(&p4, 1), Err(Error::NotAStrongSupport { vertex: 1 }));
    }

    fn two_rule_one_stars() -> DoubleStarSpec {
        let star = DoubleStar { leaves_u: 1, leaves_v: 1, rule: StarRule::One, special_u: vec![0], special_v: vec![] };
        DoubleStarSpec {
            stars: vec![star.clone(), star],
            links: vec![(LeafRef { star: 0, side: Side::U, leaf: 0 }, LeafRef { star: 1, side: Side::U, leaf: 0 })],
        }
    }

    #[test]
    fn double_star_tree() {
        let (g, partition) = gen_f_tree(&two_rule_one_stars()).unwrap();
        assert!(g.is_tree());
        assert_eq!(recognize_f(&g).unwrap(), partition);
    }

    #[test]
    fn double_star_spec_errors() {
        let mut spec = two_rule_one_stars();
        spec.stars[0] =
            DoubleStar { leaves_u: 2, leaves_v: 2, rule: StarRule::Two, special_u: vec![0, 1], special_v: vec![0] };
        assert!(matches!(gen_f_tree(&spec), Err(Error::Spec(msg)) if msg.contains("not all")));

        let mut spec = two_rule_one_stars();
        spec.links.clear();
        assert!(matches!(gen_f_tree(&spec), Err(Error::Spec(msg)) if msg.contains("no link")));

        // a link inside one star closes a cycle
        let mut spec = two_rule_one_stars();
        spec.stars[0].leaves_u = 2;
        spec.stars[0].special_u = vec![0, 1];
        spec.links.push((LeafRef { star: 0, side: Side::U, leaf: 0 }, LeafRef { star: 0, side: Side::U, leaf: 1 }));
        assert!(matches!(gen_f_tree(&spec), Err(Error::Spec(msg)) if msg.contains("acyclic")));
    }

    #[test]
    fn random_specs_build_recognized_trees() {
        let mut rng = rng_from_seed(7);
        for _ in 0..200 {
            let spec = random_double_star_spec(&mut rng, 5);
            let (g, partition) = gen_f_tree(&spec).unwrap();
            assert!(partition.is_valid_for(&g));
            assert_eq!(recognize_f(&g).unwrap(), partition);
        }
    }

    #[test]
    fn tree_enumeration() {
        let trees: Vec<Graph> = enumerate_labeled_trees(3).unwrap().collect();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.max_degree() == 2));
        assert_eq!(enumerate_labeled_trees(5).unwrap().count(), 125);
        assert_eq!(enumerate_labeled_trees(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_trees(2).unwrap().count(), 1);
        assert!(matches!(enumerate_labeled_trees(10), Err(Error::CapExceeded { .. })));
        // distinct labeled trees
        let all: BTreeSet<Vec<(usize, usize)>> =
            enumerate_labeled_trees(6).unwrap().map(|t| t.edges().collect()).collect();
        assert_eq!(all.len(), 6usize.pow(4));
    }

    #[test]
    fn random_trees_are_reproducible() {
        let a = gen_random_tree(12, 99).unwrap();
        let b = gen_random_tree(12, 99).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        assert!(a.is_tree());
    }
}
