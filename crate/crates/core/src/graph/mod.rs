//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices, stored as
//! one neighbor bitmask per vertex.

mod build;
mod edge_list;
mod graph6;

pub use build::*;
pub use edge_list::{parse_edge_list, write_edge_list};
pub use graph6::{graph6_decode, graph6_encode};

use std::fmt;

use thiserror::Error;

/// Hard vertex cap. Keeps every graph in the single-byte graph6 size form.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would have {0} vertices, more than the cap of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("{family} needs {requirement}, got {got}")]
    InvalidSize {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid pendant path attachment: {0}")]
    InvalidAttachment(String),
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
    #[error("malformed edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

/// A subset of the vertices of some graph, as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl DoubleEndedIterator for VertexIter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << v);
        Some(v)
    }
}

impl ExactSizeIterator for VertexIter {}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Checks disjointness only; membership in a host graph is checked by
    /// [`Matching::validate`].
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = VertexSet::EMPTY;
        for &(u, v) in &edges {
            if u == v {
                return Err(GraphError::InvalidMatching(format!(
                    "pair ({u},{v}) is a loop"
                )));
            }
            for w in [u, v] {
                if w >= MAX_VERTICES {
                    return Err(GraphError::InvalidMatching(format!(
                        "vertex {w} out of range"
                    )));
                }
                if seen.contains(w) {
                    return Err(GraphError::InvalidMatching(format!(
                        "vertex {w} is covered twice"
                    )));
                }
                seen.insert(w);
            }
        }
        Ok(Matching { edges })
    }

    /// The lexicographically first matching of the given size, `{(0,1), (2,3), ...}`.
    pub fn first_of_size(size: usize) -> Result<Self, GraphError> {
        Matching::new((0..size).map(|i| (2 * i, 2 * i + 1)).collect())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.covered() == g.vertices()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(GraphError::InvalidMatching(format!(
                    "pair ({u},{v}) is not an edge of the host graph"
                )));
            }
        }
        Ok(())
    }

    /// Every matching of `g`, including the empty one. Exponential; meant for
    /// small graphs.
    pub fn all_in(g: &Graph) -> Vec<Matching> {
        fn go(g: &Graph, free: VertexSet, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
            out.push(Matching { edges: cur.clone() });
            // extend only with edges whose low endpoint exceeds the last one, so
            // each matching is produced once
            let floor = cur.last().map_or(0, |&(u, _)| u + 1);
            for u in free.iter().filter(|&u| u >= floor) {
                for v in g.neighbors(u).intersection(free).iter().filter(|&v| v > u) {
                    cur.push((u, v));
                    go(g, free.without(u).without(v), cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(g, g.vertices(), &mut Vec::new(), &mut out);
        out
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Equality is labeled equality: same `n`, same adjacency bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds from raw adjacency rows, checking symmetry, loops and range.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let full = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !full).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet(row).iter() {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1u64 << v)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// δ(G); 0 for the empty vertex set.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G); 0 for the empty vertex set.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Whether the subgraph induced by `within` is connected. Sets with at
    /// most one vertex count as connected.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(start) => self.component_within(start, within) == within,
        }
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier.iter() {
                next |= self.adj[v];
            }
            let next = VertexSet(next).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Applies `perm`, sending old vertex `v` to new label `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                adj[perm[u]] |= 1u64 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `keep`, relabeled to `0..|keep|` in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .intersection(keep)
                    .iter()
                    .fold(0u64, |acc, u| acc | 1u64 << index[u])
            })
            .collect();
        Graph {
            n: verts.len(),
            adj,
        }
    }

    /// Appends a vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        if !neighbors.is_subset(self.vertices()) {
            return Err(GraphError::VertexOutOfRange {
                vertex: neighbors.difference(self.vertices()).first().unwrap_or(0),
                n: self.n,
            });
        }
        let mut adj = self.adj.clone();
        for v in neighbors.iter() {
            adj[v] |= 1u64 << self.n;
        }
        adj.push(neighbors.bits());
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Mutable accumulator for [`Graph`].
pub struct GraphBuilder {
    n: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(GraphBuilder { n, adj: vec![0; n] })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}
