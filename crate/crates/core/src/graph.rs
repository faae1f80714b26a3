//! Immutable simple undirected graphs on the dense vertex range `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Graphs up to this order also carry an adjacency bit matrix.
pub const MATRIX_LIMIT: usize = 512;

/// A sorted, duplicate-free set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Members of a 64-bit mask, ascending.
    pub fn from_mask(mut mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            members.push(mask.trailing_zeros() as Vertex);
            mask &= mask - 1;
        }
        Self(members)
    }

    /// The set as a 64-bit mask, or `None` if some member is 64 or larger.
    pub fn to_mask(&self) -> Option<u64> {
        self.0.iter().try_fold(0u64, |acc, &v| (v < 64).then(|| acc | (1u64 << v)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Inserts `v`, returning `false` if it was already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.iter().any(|v| other.contains(v))
    }

    /// Fails with [`Error::Range`] if a member is not a vertex of a graph of order `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::Range { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(members: Vec<Vertex>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(members: [Vertex; N]) -> Self {
        members.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = std::vec::IntoIter<Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A path length, girth or distance. `Infinite` orders after every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Distance::Infinite
    }

    /// True for `Infinite` and for finite values at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        self >= Distance::Finite(bound)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => serializer.serialize_u64(*d as u64),
            Distance::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(d) => Ok(Distance::Finite(d as usize)),
            Repr::Text(s) if s == "inf" => Ok(Distance::Infinite),
            Repr::Text(s) => Err(serde::de::Error::custom(format!("bad distance {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self { words, bits: vec![0; words * n] }
    }

    fn set(&mut self, u: Vertex, v: Vertex) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Simple undirected graph. Immutable after construction.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
    matrix: Option<BitMatrix>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either orientation) collapse.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::Range { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let matrix = (n <= MATRIX_LIMIT).then(|| {
            let mut matrix = BitMatrix::new(n);
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    matrix.set(u, v);
                }
            }
            matrix
        });
        Self { adj, m, matrix }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::Range { vertex: v, n: self.order() })
        }
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn adj(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet(self.adj[v].clone()))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// δ(G); 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Δ(G); 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match &self.matrix {
            Some(matrix) => matrix.get(u, v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Adjacency rows as 64-bit masks, available for graphs of order at most 64.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.order() <= 64)
            .then(|| self.adj.iter().map(|list| list.iter().fold(0u64, |acc, &v| acc | 1 << v)).collect())
    }

    /// N(A), the union of the open neighborhoods of the members of `a`.
    pub fn open_neighborhood_of_set(&self, a: &VertexSet) -> Result<VertexSet> {
        a.validate(self.order())?;
        Ok(a.iter().flat_map(|v| self.adj[v].iter().copied()).collect())
    }

    /// BFS distances from a set of sources.
    pub fn distances_from<I>(&self, sources: I) -> Vec<Distance>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut dist = vec![Distance::Infinite; self.order()];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s] == Distance::Infinite {
                dist[s] = Distance::Finite(0);
                queue.push_back((s, 0));
            }
        }
        while let Some((u, d)) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.distances_from([u])[v])
    }

    /// d(u, A) = min over members of A.
    pub fn distance_to_set(&self, u: Vertex, a: &VertexSet) -> Result<Distance> {
        self.check(u)?;
        a.validate(self.order())?;
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self
            .distances_from([u])
            .into_iter()
            .enumerate()
            .filter(|&(v, _)| a.contains(v))
            .map(|(_, d)| d)
            .min()
            .unwrap_or(Distance::Infinite))
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Distance {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == usize::MAX {
            Distance::Infinite
        } else {
            Distance::Finite(best)
        }
    }

    /// Vertices of degree 1.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    fn leaf_count(&self, v: Vertex) -> usize {
        self.adj[v].iter().filter(|&&w| self.degree(w) == 1).count()
    }

    /// Vertices adjacent to at least one leaf.
    pub fn supports(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.leaf_count(v) >= 1).collect()
    }

    /// Vertices adjacent to at least two leaves.
    pub fn strong_supports(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.leaf_count(v) >= 2).collect()
    }

    /// G[A] together with the old-to-new index map (`None` for vertices outside `a`).
    pub fn induced_subgraph(&self, a: &VertexSet) -> Result<(Graph, Vec<Option<Vertex>>)> {
        a.validate(self.order())?;
        let mut relabel = vec![None; self.order()];
        for (new, old) in a.iter().enumerate() {
            relabel[old] = Some(new);
        }
        let adj = a.iter().map(|old| self.adj[old].iter().filter_map(|&w| relabel[w]).collect()).collect();
        Ok((Graph::from_sorted_adjacency(adj), relabel))
    }

    /// Connected components ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut members = Vec::new();
            while let Some(u) = stack.pop() {
                members.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::from(members));
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.m + 1 == self.order() && self.is_connected()
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// `other` appended with its indices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let adj = self
            .adj
            .iter()
            .cloned()
            .chain(other.adj.iter().map(|list| list.iter().map(|&v| v + shift).collect()))
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Copy of the graph with extra edges; used by the generators.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(self.order(), self.edges().chain(extra))
    }

    /// Copy of the graph with `count` new isolated vertices appended.
    pub fn with_new_vertices(&self, count: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(count));
        Graph::from_sorted_adjacency(adj)
    }
}
