//! Connected graphs on `n` vertices, one per isomorphism class.
//!
//! Level `n` comes from level `n - 1` by adding a vertex adjacent to every
//! nonempty subset of the old vertices. Results are canonicalised and the
//! whole level is deduplicated on canonical graph6 strings, then sorted.
//! Every connected graph has a non-cut vertex, so every class is reached.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{graph6_decode, Graph, VertexSet};
use crate::iso::canonical_key;

/// Levels above this need [`Guard::allow_large`].
pub const DEFAULT_MAX_N: usize = 8;
/// Absolute ceiling, even with the override.
pub const HARD_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n must be at least 1")]
    Zero,
    #[error(
        "n = {n} exceeds the default limit of {DEFAULT_MAX_N}; pass the override to go higher"
    )]
    GuardExceeded { n: usize },
    #[error("n = {n} exceeds the hard limit of {HARD_MAX_N}")]
    HardLimit { n: usize },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Guard {
    pub allow_large: bool,
}

impl Guard {
    pub fn check(self, n: usize) -> Result<(), EnumerationError> {
        if n == 0 {
            Err(EnumerationError::Zero)
        } else if n > HARD_MAX_N {
            Err(EnumerationError::HardLimit { n })
        } else if n > DEFAULT_MAX_N && !self.allow_large {
            Err(EnumerationError::GuardExceeded { n })
        } else {
            Ok(())
        }
    }
}

/// A level of the enumeration: canonical representatives in ascending
/// graph6 order.
#[derive(Debug, Clone)]
pub struct GraphStream {
    pub n: usize,
    graphs: Vec<(String, Graph)>,
}

impl GraphStream {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// `(canonical graph6, canonical graph)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Graph)> {
        self.graphs.iter().map(|(k, g)| (k.as_str(), g))
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.graphs.iter().map(|(k, _)| k.as_str())
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.graphs.iter().map(|(_, g)| g)
    }
}

pub fn connected_graphs(n: usize) -> Result<GraphStream, EnumerationError> {
    connected_graphs_with(n, Guard::default())
}

pub fn connected_graphs_with(n: usize, guard: Guard) -> Result<GraphStream, EnumerationError> {
    Ok(connected_levels_with(n, guard)?
        .pop()
        .expect("at least one level"))
}

/// Levels `1..=n_max`, index `i` holding `n = i + 1`.
pub fn connected_levels(n_max: usize) -> Result<Vec<GraphStream>, EnumerationError> {
    connected_levels_with(n_max, Guard::default())
}

pub fn connected_levels_with(
    n_max: usize,
    guard: Guard,
) -> Result<Vec<GraphStream>, EnumerationError> {
    guard.check(n_max)?;
    let trivial = Graph::empty(1).expect("one vertex");
    let key = canonical_key(&trivial).expect("one vertex");
    let mut levels = vec![GraphStream {
        n: 1,
        graphs: vec![(key, trivial)],
    }];
    for n in 2..=n_max {
        let next = extend(levels.last().expect("nonempty"));
        debug_assert_eq!(next.n, n);
        levels.push(next);
    }
    Ok(levels)
}

fn extend(level: &GraphStream) -> GraphStream {
    let old_n = level.n;
    let mut keys: Vec<String> = level
        .graphs
        .par_iter()
        .flat_map_iter(|(_, g)| {
            (1u64..1 << old_n).map(move |mask| {
                let h = g
                    .with_vertex(VertexSet::from_bits(mask))
                    .expect("within cap");
                canonical_key(&h).expect("within canon limit")
            })
        })
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    let graphs = keys
        .into_iter()
        .map(|k| {
            let g = graph6_decode(&k).expect("own encoding");
            (k, g)
        })
        .collect();
    GraphStream {
        n: old_n + 1,
        graphs,
    }
}
