//! Exact k-domination and k-tuple domination.
//!
//! Two semantics are supported and always chosen explicitly:
//!
//! * [`Variant::KDomination`]: every vertex outside `S` has at least `k`
//!   neighbors in `S`. With `k = 3` this is γ₃, with `k = 1` it is the
//!   classical domination number γ.
//! * [`Variant::KTuple`]: every vertex `v` has `|N[v] ∩ S| >= k` over its
//!   closed neighborhood. With `k = 2` this is double domination.
//!
//! The solver tries sizes in increasing order. For a fixed size it decides
//! vertices from the highest index down, excluding before including, so the
//! first feasible set found is the minimum-size set with the smallest bitmask.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Open-neighborhood count, required only outside the set.
    KDomination,
    /// Closed-neighborhood count, required at every vertex.
    KTuple,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("no {k}-tuple dominating set exists: |N[{vertex}]| = {closed_degree} < {k}")]
    Infeasible {
        vertex: usize,
        closed_degree: usize,
        k: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub number: usize,
    /// Smallest bitmask among the minimum-size sets.
    pub witness: VertexSet,
    pub variant: Variant,
    pub k: usize,
}

pub fn is_k_dominating(g: &Graph, s: VertexSet, k: usize) -> bool {
    g.vertices()
        .difference(s)
        .iter()
        .all(|v| g.neighbors(v).intersection(s).len() >= k)
}

pub fn is_k_tuple_dominating(g: &Graph, s: VertexSet, k: usize) -> bool {
    g.vertices()
        .iter()
        .all(|v| g.closed_neighbors(v).intersection(s).len() >= k)
}

pub fn is_dominating_for(g: &Graph, s: VertexSet, k: usize, variant: Variant) -> bool {
    match variant {
        Variant::KDomination => is_k_dominating(g, s, k),
        Variant::KTuple => is_k_tuple_dominating(g, s, k),
    }
}

pub fn gamma_k(g: &Graph, k: usize, variant: Variant) -> Result<DominationResult, DominationError> {
    if k == 0 {
        return Err(DominationError::ZeroK);
    }
    let mut forced = VertexSet::EMPTY;
    for v in 0..g.n() {
        match variant {
            // fewer than k neighbors: v can never be dominated from outside
            Variant::KDomination => {
                if g.degree(v) < k {
                    forced.insert(v);
                }
            }
            Variant::KTuple => {
                let closed = g.closed_neighbors(v);
                if closed.len() < k {
                    return Err(DominationError::Infeasible {
                        vertex: v,
                        closed_degree: closed.len(),
                        k,
                    });
                }
                if closed.len() == k {
                    forced = forced.union(closed);
                }
            }
        }
    }

    let free: Vec<usize> = g.vertices().difference(forced).iter().rev().collect();
    let search = Search {
        g,
        k,
        variant,
        order: &free,
    };
    for size in forced.len()..=g.n() {
        let undecided = VertexSet::from_iter(free.iter().copied());
        if let Some(witness) = search.run(0, forced, undecided, size - forced.len()) {
            return Ok(DominationResult {
                number: size,
                witness,
                variant,
                k,
            });
        }
    }
    unreachable!("the full vertex set satisfies every feasible instance")
}

/// γ₃(G): k-domination with k = 3. Graphs with fewer than three vertices get
/// γ₃ = n, since only the whole vertex set qualifies.
pub fn gamma3(g: &Graph) -> DominationResult {
    gamma_k(g, 3, Variant::KDomination).expect("k-domination is always feasible")
}

/// Classical domination number γ.
pub fn gamma(g: &Graph) -> DominationResult {
    gamma_k(g, 1, Variant::KDomination).expect("k-domination is always feasible")
}

/// Double domination number, when it exists (no isolated vertices).
pub fn double_domination(g: &Graph) -> Result<DominationResult, DominationError> {
    gamma_k(g, 2, Variant::KTuple)
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    variant: Variant,
    /// Non-forced vertices in decision order (descending index).
    order: &'a [usize],
}

impl Search<'_> {
    fn run(
        &self,
        depth: usize,
        chosen: VertexSet,
        undecided: VertexSet,
        picks: usize,
    ) -> Option<VertexSet> {
        if picks > undecided.len() || !self.still_feasible(chosen, undecided, picks) {
            return None;
        }
        if picks == 0 {
            return is_dominating_for(self.g, chosen, self.k, self.variant).then_some(chosen);
        }
        let v = self.order[depth];
        let rest = undecided.without(v);
        self.run(depth + 1, chosen, rest, picks)
            .or_else(|| self.run(depth + 1, chosen.with(v), rest, picks - 1))
    }

    /// Upper-bound test: can every constraint still reach `k` if all
    /// remaining picks land in the vertex's neighborhood?
    fn still_feasible(&self, chosen: VertexSet, undecided: VertexSet, picks: usize) -> bool {
        let g = self.g;
        match self.variant {
            Variant::KDomination => {
                let excluded = g.vertices().difference(chosen).difference(undecided);
                excluded.iter().all(|v| {
                    let nb = g.neighbors(v);
                    nb.intersection(chosen).len() + picks.min(nb.intersection(undecided).len())
                        >= self.k
                })
            }
            Variant::KTuple => g.vertices().iter().all(|v| {
                let nb = g.closed_neighbors(v);
                nb.intersection(chosen).len() + picks.min(nb.intersection(undecided).len())
                    >= self.k
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// C6 on v1..v6 plus the three long diagonals (K_{3,3}).
    fn g1() -> Graph {
        let mut e: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        e.extend([(0, 3), (1, 4), (2, 5)]);
        Graph::from_edges(6, e).unwrap()
    }

    #[test]
    fn checker_examples() {
        assert!(is_k_dominating(&g1(), set(&[0, 2, 4]), 3));
        let c5 = cycle(5).unwrap();
        for out in 0..5 {
            assert!(!is_k_dominating(&c5, c5.vertices().without(out), 3));
        }
        for k in 1..5 {
            assert!(is_k_dominating(&c5, c5.vertices(), k));
            assert!(is_k_tuple_dominating(&c5, c5.vertices(), 1));
        }
        let k3 = complete(3).unwrap();
        assert!(is_k_tuple_dominating(&k3, set(&[0, 2]), 2));
        let p3 = path(3).unwrap();
        assert!(!is_k_tuple_dominating(&p3, set(&[0, 2]), 2));
    }

    #[test]
    fn complete_paths_cycles() {
        for n in 3..=8 {
            assert_eq!(gamma3(&complete(n).unwrap()).number, 3);
            assert_eq!(gamma3(&path(n).unwrap()).number, n);
            assert_eq!(gamma3(&cycle(n).unwrap()).number, n);
        }
    }

    #[test]
    fn small_graphs_below_three_vertices() {
        assert_eq!(gamma3(&path(1).unwrap()).number, 1);
        assert_eq!(gamma3(&path(2).unwrap()).number, 2);
        assert_eq!(gamma3(&Graph::empty(0).unwrap()).number, 0);
    }

    #[test]
    fn witness_is_smallest_bitmask() {
        // K_{2,3}: parts {0,1} and {2,3,4}; only {2,3,4} works at size 3
        let k23 = complete_bipartite(2, 3).unwrap();
        let r = gamma3(&k23);
        assert_eq!((r.number, r.witness), (3, set(&[2, 3, 4])));
        // K_n: any triple works, so the smallest is {0,1,2}
        assert_eq!(gamma3(&complete(6).unwrap()).witness, set(&[0, 1, 2]));
    }

    #[test]
    fn matching_removed_from_complete() {
        let oct =
            remove_matching(&complete(6).unwrap(), &Matching::first_of_size(3).unwrap()).unwrap();
        assert_eq!(gamma3(&oct).number, 4);
        let g =
            remove_matching(&complete(5).unwrap(), &Matching::first_of_size(2).unwrap()).unwrap();
        assert_eq!(gamma3(&g).number, 3);
    }

    #[test]
    fn forced_low_degree_vertices() {
        // C3 with a pendant on vertex 0: the three low-degree vertices already
        // see the center three times
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let r = gamma3(&g);
        assert_eq!((r.number, r.witness), (3, set(&[1, 2, 3])));
    }

    #[test]
    fn tuple_infeasible_and_errors() {
        let p3 = path(3).unwrap();
        assert!(matches!(
            gamma_k(&p3, 3, Variant::KTuple),
            Err(DominationError::Infeasible {
                vertex: 0,
                closed_degree: 2,
                k: 3
            })
        ));
        assert_eq!(
            gamma_k(&p3, 0, Variant::KDomination),
            Err(DominationError::ZeroK)
        );
        assert!(double_domination(&Graph::empty(2).unwrap()).is_err());
        assert_eq!(double_domination(&p3).unwrap().number, 3);
        assert_eq!(gamma(&p3).number, 1);
    }
}
