//! Canonical forms by lexicographic minimisation of the graph6 string.
//!
//! Canonical positions are filled in order of increasing degree, so the
//! minimum is taken over the permutations that list vertices by
//! non-decreasing degree. Degree classes are isomorphism invariant, which is
//! all a canonical form needs. Inside a class the search backtracks, pruning
//! a branch as soon as its partial column sequence exceeds the best one.
//! Twin vertices (same neighborhood apart from each other) are interchangeable
//! by an automorphism, so only one of each twin group is tried per position.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::{graph6_encode, Graph};

/// Largest graph [`canonical_form`] accepts.
pub const CANON_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical form is limited to {CANON_LIMIT} vertices, got {0}")]
pub struct TooLargeForCanon(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub canon_graph6: String,
    /// `relabeling[v]` is the canonical label of input vertex `v`.
    pub relabeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn graph(&self, input: &Graph) -> Graph {
        input.relabel(&self.relabeling)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, TooLargeForCanon> {
    let n = g.n();
    if n > CANON_LIMIT {
        return Err(TooLargeForCanon(n));
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    // slot_degree[p] is the degree canonical position p must hold
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    let rows = g.rows();
    let twins: Vec<u64> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && rows[u] & !(1 << v) == rows[v] & !(1 << u))
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect();

    let mut search = CanonSearch {
        g,
        slot_degree: &slot_degree,
        twins: &twins,
        perm: Vec::with_capacity(n),
        cur: vec![0; n],
        best: None,
        used: 0,
    };
    search.descend(0, Ordering::Less);
    let (_, best_perm) = search.best.expect("at least one leaf is reached");

    let mut relabeling = vec![0; n];
    for (pos, &v) in best_perm.iter().enumerate() {
        relabeling[v] = pos;
    }
    let canon = g.relabel(&relabeling);
    Ok(CanonicalForm {
        canon_graph6: graph6_encode(&canon),
        relabeling,
    })
}

/// Canonical graph6 string, the dedup and report key for a graph.
pub fn canonical_key(g: &Graph) -> Result<String, TooLargeForCanon> {
    canonical_form(g).map(|c| c.canon_graph6)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, TooLargeForCanon> {
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    slot_degree: &'a [usize],
    twins: &'a [u64],
    perm: Vec<usize>,
    /// `cur[j]`: the bits of column `j` (pairs `(i, j)`, `i < j`), with
    /// `i = 0` as the most significant bit so numeric order is graph6 order.
    cur: Vec<u16>,
    best: Option<(Vec<u16>, Vec<usize>)>,
    used: u64,
}

impl CanonSearch<'_> {
    /// `state` compares the placed prefix against the best leaf's prefix.
    /// Returns true if the best leaf was replaced inside this subtree.
    fn descend(&mut self, pos: usize, mut state: Ordering) -> bool {
        let n = self.g.n();
        if pos == n {
            if state == Ordering::Less {
                self.best = Some((self.cur.clone(), self.perm.clone()));
                return true;
            }
            return false;
        }
        let mut improved = false;
        let mut tried = 0u64;
        for v in 0..n {
            if self.used >> v & 1 == 1
                || self.g.degree(v) != self.slot_degree[pos]
                || self.twins[v] & tried != 0
            {
                continue;
            }
            tried |= 1 << v;
            let row = self.g.rows()[v];
            let col = self
                .perm
                .iter()
                .fold(0u16, |acc, &u| acc << 1 | (row >> u & 1) as u16);
            let child_state = match (state, &self.best) {
                (Ordering::Less, _) | (_, None) => Ordering::Less,
                (_, Some((best, _))) => col.cmp(&best[pos]),
            };
            if child_state == Ordering::Greater {
                continue;
            }
            self.cur[pos] = col;
            self.perm.push(v);
            self.used |= 1 << v;
            if self.descend(pos + 1, child_state) {
                improved = true;
                // the new best shares this prefix
                state = Ordering::Equal;
            }
            self.used &= !(1 << v);
            self.perm.pop();
        }
        improved
    }
}
