//! Vertex connectivity κ(G) with a minimum vertex cut.
//!
//! κ is the minimum, over non-adjacent pairs `(s, t)`, of the number of
//! internally vertex-disjoint `s`–`t` paths. Each pair is a unit-capacity max
//! flow on the vertex-split digraph: `v_in -> v_out` carries capacity 1 for
//! inner vertices, every edge becomes two uncapacitated arcs
//! `u_out -> v_in`, `v_out -> u_in`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by [`brute_force_connectivity`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    pub kappa: usize,
    /// Empty for complete graphs and for disconnected input.
    pub cut: VertexSet,
    /// Two vertices the cut separates; `None` for complete graphs.
    pub separated: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force connectivity is limited to {BRUTE_FORCE_LIMIT} vertices, got {0}")]
pub struct TooLargeForBruteForce(pub usize);

pub fn vertex_connectivity(g: &Graph) -> CutResult {
    let n = g.n();
    if n == 0 {
        return CutResult {
            kappa: 0,
            cut: VertexSet::EMPTY,
            separated: None,
        };
    }
    let comp = g.component_within(0, g.vertices());
    if comp != g.vertices() {
        let other = g.vertices().difference(comp).first().expect("disconnected");
        return CutResult {
            kappa: 0,
            cut: VertexSet::EMPTY,
            separated: Some((0, other)),
        };
    }

    let mut net = SplitNetwork::new(g);
    let mut best: Option<CutResult> = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            // cannot beat the current best: stop augmenting at that value
            let limit = best.as_ref().map_or(n, |b| b.kappa);
            if let Some(cut) = net.min_cut_below(s, t, limit) {
                best = Some(CutResult {
                    kappa: cut.len(),
                    cut,
                    separated: Some((s, t)),
                });
                if cut.is_empty() {
                    return best.unwrap();
                }
            }
        }
    }
    best.unwrap_or(CutResult {
        kappa: n - 1,
        cut: VertexSet::EMPTY,
        separated: None,
    })
}

/// κ(G) as the smallest `|U|` whose removal disconnects `G`, or `n - 1` when
/// no such set exists. Tries every subset; independent of the flow code.
pub fn brute_force_connectivity(g: &Graph) -> Result<usize, TooLargeForBruteForce> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(TooLargeForBruteForce(n));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0u64..1 << n {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for (size, masks) in by_size.iter().enumerate().take(n.saturating_sub(1)) {
        for &mask in masks {
            let rest = g.vertices().difference(VertexSet::from_bits(mask));
            if !g.is_connected_within(rest) {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

/// Adjacency-matrix flow network over `2n` nodes, reused across pairs.
struct SplitNetwork<'a> {
    g: &'a Graph,
    nodes: usize,
    cap: Vec<u32>,
    pred: Vec<usize>,
}

const INF: u32 = u32::MAX / 4;

fn node_in(v: usize) -> usize {
    2 * v
}

fn node_out(v: usize) -> usize {
    2 * v + 1
}

impl<'a> SplitNetwork<'a> {
    fn new(g: &'a Graph) -> Self {
        let nodes = 2 * g.n();
        SplitNetwork {
            g,
            nodes,
            cap: vec![0; nodes * nodes],
            pred: vec![usize::MAX; nodes],
        }
    }

    fn reset(&mut self, s: usize, t: usize) {
        self.cap.iter_mut().for_each(|c| *c = 0);
        let nodes = self.nodes;
        for v in 0..self.g.n() {
            let inner = if v == s || v == t { INF } else { 1 };
            self.cap[node_in(v) * nodes + node_out(v)] = inner;
            for u in self.g.neighbors(v).iter() {
                self.cap[node_out(v) * nodes + node_in(u)] = INF;
            }
        }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let nodes = self.nodes;
        self.pred.iter_mut().for_each(|p| *p = usize::MAX);
        self.pred[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            for b in 0..nodes {
                if self.pred[b] == usize::MAX && self.cap[a * nodes + b] > 0 {
                    self.pred[b] = a;
                    if b == sink {
                        let mut cur = sink;
                        while cur != source {
                            let p = self.pred[cur];
                            self.cap[p * nodes + cur] -= 1;
                            self.cap[cur * nodes + p] += 1;
                            cur = p;
                        }
                        return true;
                    }
                    queue.push_back(b);
                }
            }
        }
        false
    }

    /// Minimum `s`–`t` vertex cut if its size is strictly below `limit`.
    fn min_cut_below(&mut self, s: usize, t: usize, limit: usize) -> Option<VertexSet> {
        self.reset(s, t);
        let (source, sink) = (node_out(s), node_in(t));
        let mut flow = 0;
        while flow < limit {
            if !self.augment(source, sink) {
                break;
            }
            flow += 1;
        }
        if flow >= limit {
            return None;
        }
        // residual reachability from the source marks the source side
        let nodes = self.nodes;
        let mut seen = vec![false; nodes];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            for b in 0..nodes {
                if !seen[b] && self.cap[a * nodes + b] > 0 {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        let cut: VertexSet = (0..self.g.n())
            .filter(|&v| seen[node_in(v)] && !seen[node_out(v)])
            .collect();
        debug_assert_eq!(cut.len(), flow);
        Some(cut)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn standard_families() {
        assert_eq!(vertex_connectivity(&path(4).unwrap()).kappa, 1);
        assert_eq!(vertex_connectivity(&path(5).unwrap()).kappa, 1);
        assert_eq!(vertex_connectivity(&cycle(4).unwrap()).kappa, 2);
        assert_eq!(vertex_connectivity(&star(3).unwrap()).kappa, 1);
        assert_eq!(vertex_connectivity(&friendship(2).unwrap()).kappa, 1);
        assert_eq!(vertex_connectivity(&complete(4).unwrap()).kappa, 3);

        let k5 = vertex_connectivity(&complete(5).unwrap());
        assert_eq!(
            (k5.kappa, k5.cut, k5.separated),
            (4, VertexSet::EMPTY, None)
        );

        let k23 = vertex_connectivity(&complete_bipartite(2, 3).unwrap());
        assert_eq!(k23.kappa, 2);
        // (0,1) needs all of {2,3,4}; (2,3) is the first pair cut by two
        assert_eq!(k23.cut.to_vec(), vec![0, 1]);
        assert_eq!(k23.separated, Some((2, 3)));
    }

    #[test]
    fn trivial_and_disconnected() {
        assert_eq!(vertex_connectivity(&Graph::empty(1).unwrap()).kappa, 0);
        let two = disjoint_union(&complete(3).unwrap(), &complete(2).unwrap()).unwrap();
        let r = vertex_connectivity(&two);
        assert_eq!(
            (r.kappa, r.cut, r.separated),
            (0, VertexSet::EMPTY, Some((0, 3)))
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_connectivity(&cycle(6).unwrap()), Ok(2));
        assert_eq!(brute_force_connectivity(&complete(4).unwrap()), Ok(3));
        assert_eq!(
            brute_force_connectivity(&complete_bipartite(2, 3).unwrap()),
            Ok(2)
        );
        assert_eq!(brute_force_connectivity(&Graph::empty(1).unwrap()), Ok(0));
        assert_eq!(
            brute_force_connectivity(&path(13).unwrap()),
            Err(TooLargeForBruteForce(13))
        );
    }

    #[test]
    fn cut_disconnects() {
        let g = wheel(7).unwrap();
        let r = vertex_connectivity(&g);
        assert_eq!(r.kappa, 3);
        let rest = g.vertices().difference(r.cut);
        assert!(!g.is_connected_within(rest));
    }
}
