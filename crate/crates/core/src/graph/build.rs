use super::{Graph, GraphBuilder, GraphError, Matching, VertexSet, MAX_VERTICES};

fn check_cap(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// P_n: vertices `0..n`, edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize {
            family: "path",
            requirement: "n >= 1",
            got: n,
        });
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// C_n: the path plus `{n-1, 0}`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize {
            family: "cycle",
            requirement: "n >= 3",
            got: n,
        });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    check_cap(n)?;
    let full = VertexSet::full(n).bits();
    Graph::from_adjacency((0..n).map(|v| full & !(1u64 << v)).collect())
}

/// K_{m,n} with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    check_cap(m + n)?;
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// K_{1,n}, center 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, n)
}

/// W_n on `n` vertices in total: hub 0 joined to a cycle on `1..n`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidSize {
            family: "wheel",
            requirement: "n >= 4",
            got: n,
        });
    }
    join(&complete(1)?, &cycle(n - 1)?)
}

/// F_n: `n` triangles sharing hub 0; triangle `i` is `{0, 2i+1, 2i+2}`.
pub fn friendship(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize {
            family: "friendship",
            requirement: "n >= 1",
            got: n,
        });
    }
    check_cap(2 * n + 1)?;
    let mut b = GraphBuilder::new(2 * n + 1)?;
    for i in 0..n {
        let (a, c) = (2 * i + 1, 2 * i + 2);
        b.add_edge(0, a)?;
        b.add_edge(0, c)?;
        b.add_edge(a, c)?;
    }
    Ok(b.build())
}

pub fn complement(g: &Graph) -> Graph {
    let full = g.vertices().bits();
    let rows = (0..g.n())
        .map(|v| !g.rows()[v] & full & !(1u64 << v))
        .collect();
    Graph::from_adjacency(rows).expect("complement of a valid graph is valid")
}

/// Vertices of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n() + h.n();
    check_cap(n)?;
    let shift = g.n();
    let mut rows = g.rows().to_vec();
    rows.extend(h.rows().iter().map(|&r| r << shift));
    Graph::from_adjacency(rows)
}

/// `g + h`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let n = g.n() + h.n();
    check_cap(n)?;
    let shift = g.n();
    let left = VertexSet::full(g.n()).bits();
    let right = VertexSet::full(h.n()).bits() << shift;
    let mut rows: Vec<u64> = g.rows().iter().map(|&r| r | right).collect();
    rows.extend(h.rows().iter().map(|&r| r << shift | left));
    Graph::from_adjacency(rows)
}

pub fn remove_matching(g: &Graph, m: &Matching) -> Result<Graph, GraphError> {
    m.validate(g)?;
    let mut rows = g.rows().to_vec();
    for &(u, v) in m.edges() {
        rows[u] &= !(1u64 << v);
        rows[v] &= !(1u64 << u);
    }
    Graph::from_adjacency(rows)
}

/// `multiplicity` copies of P_`path_length` hung from `vertex` by one endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantPaths {
    pub vertex: usize,
    pub multiplicity: usize,
    pub path_length: usize,
}

/// Each attached P_l shares one endpoint with its host and contributes `l - 1`
/// new vertices, appended in attachment order and walking outward from the host.
pub fn attach_pendant_paths(g: &Graph, attachments: &[PendantPaths]) -> Result<Graph, GraphError> {
    let mut added = 0usize;
    for a in attachments {
        if a.vertex >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: a.vertex,
                n: g.n(),
            });
        }
        if a.multiplicity > 0 && a.path_length < 2 {
            return Err(GraphError::InvalidAttachment(format!(
                "path length must be at least 2, got P{}",
                a.path_length
            )));
        }
        added += a.multiplicity * a.path_length.saturating_sub(1);
    }
    let n = g.n() + added;
    check_cap(n)?;
    let mut b = GraphBuilder::new(n)?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    let mut next = g.n();
    for a in attachments {
        for _ in 0..a.multiplicity {
            let mut prev = a.vertex;
            for _ in 1..a.path_length {
                b.add_edge(prev, next)?;
                prev = next;
                next += 1;
            }
        }
    }
    Ok(b.build())
}
