//! The named extremal graphs for γ₃(G) + κ(G) = 2n − k, k = 1..5, with their
//! provenance, and a self-check that recomputes every invariant.
//!
//! Figure graphs are stored as the drawing itself: dot coordinates and the
//! segments between them. A segment whose interior passes through another
//! dot is read as a path through that dot, and the entry gets an
//! `ambiguous-figure` note saying so.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::connectivity::vertex_connectivity;
use crate::domination::{gamma3, is_k_dominating};
use crate::family::{build_family, FamilyError};
use crate::graph::{Graph, GraphBuilder, GraphError, VertexSet};
use crate::iso::{canonical_key, TooLargeForCanon};

/// One of the five characterizations, identified by `k` in `2n − k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Theorem {
    pub offset: usize,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem { offset: 1 },
        Theorem { offset: 2 },
        Theorem { offset: 3 },
        Theorem { offset: 4 },
        Theorem { offset: 5 },
    ];

    pub fn new(offset: usize) -> Option<Theorem> {
        (1..=5).contains(&offset).then_some(Theorem { offset })
    }

    /// Parses the identifiers `3.1` … `3.5`.
    pub fn parse(id: &str) -> Option<Theorem> {
        id.strip_prefix("3.")
            .and_then(|k| k.parse().ok())
            .and_then(Theorem::new)
    }

    pub fn id(self) -> String {
        format!("3.{}", self.offset)
    }

    /// `2n − k`, or `None` when it would be negative.
    pub fn target(self, n: usize) -> Option<usize> {
        (2 * n).checked_sub(self.offset)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Named in the theorem statement.
    Statement,
    /// Appears only in the proof.
    Proof,
    /// Drawn in the named figure; the statement refers to it.
    Figure(&'static str),
}

impl Source {
    pub fn in_statement(self) -> bool {
        !matches!(self, Source::Proof)
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Statement => f.write_str("statement"),
            Source::Proof => f.write_str("proof"),
            Source::Figure(id) => write!(f, "figure:{id}"),
        }
    }
}

impl Serialize for Source {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

type Point = (f64, f64);

/// A figure: dots and straight segments between them.
#[derive(Debug, Clone, Copy)]
pub struct Drawing {
    pub points: &'static [Point],
    pub segments: &'static [(Point, Point)],
}

#[derive(Debug, Clone, Copy)]
pub enum Recipe {
    Family(&'static str),
    Edges(usize, &'static [(usize, usize)]),
    Drawing(Drawing),
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Family(e) => f.write_str(e),
            Recipe::Edges(n, e) => write!(f, "edges(n={n}, {e:?})"),
            Recipe::Drawing(d) => write!(
                f,
                "drawing({} dots, {} segments)",
                d.points.len(),
                d.segments.len()
            ),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoteKind {
    FailsTarget,
    LabelMismatch,
    MissingFromStatement,
    AmbiguousFigure,
}

impl fmt::Display for NoteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoteKind::FailsTarget => "fails-target",
            NoteKind::LabelMismatch => "label-mismatch",
            NoteKind::MissingFromStatement => "missing-from-statement",
            NoteKind::AmbiguousFigure => "ambiguous-figure",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyNote {
    pub entry: String,
    pub theorem: Theorem,
    pub kind: NoteKind,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Measured {
    pub n: usize,
    pub gamma3: usize,
    pub kappa: usize,
    pub sum: usize,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub theorem: Theorem,
    pub recipe: Recipe,
    pub source: Source,
    /// The printed label of a figure graph, as a family expression.
    pub label: Option<&'static str>,
    /// How a name in the text was read, when the literal reading differs.
    pub reading: Option<&'static str>,
    pub graph: Graph,
    pub canonical: String,
    /// Dots a segment passed through while transcribing the drawing.
    pub split_points: Vec<usize>,
    /// Filled by [`self_check`].
    pub measured: Option<Measured>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{entry}: {source}")]
    Family {
        entry: &'static str,
        source: FamilyError,
    },
    #[error("{entry}: {source}")]
    Graph {
        entry: &'static str,
        source: GraphError,
    },
    #[error("{entry}: segment endpoint {point:?} is not a drawn vertex")]
    LooseSegment {
        entry: &'static str,
        point: (f64, f64),
    },
    #[error("{entry}: recipe builds a disconnected graph")]
    Disconnected { entry: &'static str },
    #[error("{entry}: {source}")]
    Canon {
        entry: &'static str,
        source: TooLargeForCanon,
    },
}

const EPS: f64 = 1e-9;

fn same(a: Point, b: Point) -> bool {
    (a.0 - b.0).abs() < EPS && (a.1 - b.1).abs() < EPS
}

/// Reads a drawing as a graph on its dots, in the order they are listed.
/// Returns the graph and the dots that some segment passed through.
pub fn graph_from_drawing(
    entry: &'static str,
    d: &Drawing,
) -> Result<(Graph, Vec<usize>), CatalogError> {
    let index = |p: Point| {
        d.points
            .iter()
            .position(|&q| same(p, q))
            .ok_or(CatalogError::LooseSegment { entry, point: p })
    };
    let mut b = GraphBuilder::new(d.points.len())
        .map_err(|source| CatalogError::Graph { entry, source })?;
    let mut splits = Vec::new();
    for &(p, q) in d.segments {
        let (i, j) = (index(p)?, index(q)?);
        // dots strictly inside the segment, ordered by distance from p
        let mut inner: Vec<(f64, usize)> = d
            .points
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .filter_map(|(k, &r)| {
                let (dx, dy) = (q.0 - p.0, q.1 - p.1);
                let cross = dx * (r.1 - p.1) - dy * (r.0 - p.0);
                let t = ((r.0 - p.0) * dx + (r.1 - p.1) * dy) / (dx * dx + dy * dy);
                (cross.abs() < EPS && t > EPS && t < 1.0 - EPS).then_some((t, k))
            })
            .collect();
        inner.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut chain = vec![i];
        chain.extend(inner.iter().map(|&(_, k)| k));
        chain.push(j);
        splits.extend(inner.iter().map(|&(_, k)| k));
        for w in chain.windows(2) {
            b.add_edge(w[0], w[1])
                .map_err(|source| CatalogError::Graph { entry, source })?;
        }
    }
    splits.sort_unstable();
    splits.dedup();
    Ok((b.build(), splits))
}

struct Listing {
    name: &'static str,
    offset: usize,
    recipe: Recipe,
    source: Source,
    label: Option<&'static str>,
    reading: Option<&'static str>,
}

const fn fam(name: &'static str, offset: usize, expr: &'static str, source: Source) -> Listing {
    Listing {
        name,
        offset,
        recipe: Recipe::Family(expr),
        source,
        label: None,
        reading: None,
    }
}

const fn drawn(
    name: &'static str,
    offset: usize,
    fig: &'static str,
    d: Drawing,
    label: Option<&'static str>,
) -> Listing {
    Listing {
        name,
        offset,
        recipe: Recipe::Drawing(d),
        source: Source::Figure(fig),
        label,
        reading: None,
    }
}

const S: Source = Source::Statement;
const PROOF: Source = Source::Proof;

// Figure ft101.
const H1: Drawing = Drawing {
    points: &[(0., 1.), (0.5, 0.), (1., 2.), (1.5, 0.), (2., 1.)],
    segments: &[
        ((0., 1.), (0.5, 0.)),
        ((0., 1.), (1., 2.)),
        ((1.5, 0.), (0.5, 0.)),
        ((0., 1.), (2., 1.)),
        ((2., 1.), (1., 2.)),
        ((0., 1.), (1.5, 0.)),
        ((1.5, 0.), (2., 1.)),
        ((2., 1.), (0.5, 0.)),
    ],
};
const H2: Drawing = Drawing {
    points: &[(3.5, 1.), (4., 0.), (5., 0.), (5.5, 1.), (4.5, 2.)],
    segments: &[
        ((3.5, 1.), (4., 0.)),
        ((4., 0.), (5., 0.)),
        ((5., 0.), (5.5, 1.)),
        ((5.5, 1.), (4.5, 2.)),
        ((4.5, 2.), (3.5, 1.)),
        ((3.5, 1.), (5., 0.)),
        ((5.5, 1.), (4., 0.)),
    ],
};

// Figure ft102.
const T1: Drawing = Drawing {
    points: &[(0., 1.), (0.5, 0.), (1., 2.), (2., 1.), (1.5, 0.), (1., 1.)],
    segments: &[
        ((0., 1.), (0.5, 0.)),
        ((0., 1.), (1., 2.)),
        ((1., 2.), (2., 1.)),
        ((2., 1.), (1.5, 0.)),
        ((1.5, 0.), (0.5, 0.)),
        ((0., 1.), (1., 1.)),
        ((1., 1.), (1., 2.)),
        ((1., 1.), (2., 1.)),
        ((2., 1.), (0.5, 0.)),
        ((0., 1.), (1.5, 0.)),
        ((1.5, 0.), (1., 1.)),
    ],
};
const T2: Drawing = Drawing {
    points: &[
        (3.5, 1.),
        (4.5, 2.),
        (5.5, 1.),
        (4.5, 1.),
        (4., 0.),
        (5., 0.),
    ],
    segments: &[
        ((3.5, 1.), (4.5, 2.)),
        ((4.5, 2.), (5.5, 1.)),
        ((5.5, 1.), (4.5, 1.)),
        ((4.5, 1.), (3.5, 1.)),
        ((3.5, 1.), (4., 0.)),
        ((4., 0.), (5., 0.)),
        ((5., 0.), (4.5, 1.)),
        ((4.5, 1.), (4., 0.)),
        ((3.5, 1.), (5., 0.)),
    ],
};
const T3: Drawing = Drawing {
    points: &[(7., 1.), (8., 2.), (8., 1.), (9., 1.), (7.5, 0.), (8.5, 0.)],
    segments: &[
        ((7., 1.), (8., 2.)),
        ((8., 2.), (8., 1.)),
        ((8., 2.), (9., 1.)),
        ((9., 1.), (7., 1.)),
        ((7., 1.), (7.5, 0.)),
        ((9., 1.), (8.5, 0.)),
        ((8.5, 0.), (7.5, 0.)),
        ((9., 1.), (7.5, 0.)),
        ((7., 1.), (8.5, 0.)),
    ],
};
const T4: Drawing = Drawing {
    points: &[
        (1., -2.),
        (0., -3.),
        (0.5, -4.),
        (1.5, -4.),
        (2., -3.),
        (1., -3.),
    ],
    segments: &[
        ((1., -2.), (0., -3.)),
        ((0., -3.), (0.5, -4.)),
        ((0.5, -4.), (1.5, -4.)),
        ((1.5, -4.), (2., -3.)),
        ((2., -3.), (1., -2.)),
        ((1., -2.), (1., -3.)),
        ((1., -3.), (0., -3.)),
        ((1., -3.), (0.5, -4.)),
        ((0., -3.), (1.5, -4.)),
    ],
};
const T5: Drawing = Drawing {
    points: &[
        (3.5, -3.),
        (4.5, -2.),
        (4.5, -3.),
        (5.5, -3.),
        (5., -4.),
        (4., -4.),
    ],
    segments: &[
        ((3.5, -3.), (4.5, -2.)),
        ((4.5, -2.), (4.5, -3.)),
        ((4.5, -3.), (5.5, -3.)),
        ((5.5, -3.), (4.5, -2.)),
        ((5.5, -3.), (5., -4.)),
        ((5., -4.), (4., -4.)),
        ((4., -4.), (4.5, -3.)),
        ((3.5, -3.), (4., -4.)),
        ((3.5, -3.), (5., -4.)),
    ],
};
const T6: Drawing = Drawing {
    points: &[
        (7., -3.),
        (8., -2.),
        (8., -3.),
        (7.5, -4.),
        (9., -3.),
        (8.5, -4.),
    ],
    segments: &[
        ((7., -3.), (8., -2.)),
        ((8., -2.), (8., -3.)),
        ((8., -3.), (7.5, -4.)),
        ((7.5, -4.), (7., -3.)),
        ((7., -3.), (8., -3.)),
        ((8., -2.), (9., -3.)),
        ((9., -3.), (8., -3.)),
        ((8., -3.), (8.5, -4.)),
        ((8.5, -4.), (9., -3.)),
        ((8.5, -4.), (7.5, -4.)),
    ],
};

// Figure ft104.
const T7: Drawing = Drawing {
    points: &[(0., 0.), (1., 0.), (2., 0.), (3., 0.), (1.5, 2.)],
    segments: &[
        ((0., 0.), (1., 0.)),
        ((1., 0.), (2., 0.)),
        ((3., 0.), (1.5, 2.)),
        ((1.5, 2.), (2., 0.)),
        ((1.5, 2.), (1., 0.)),
        ((1.5, 2.), (0., 0.)),
    ],
};

// Figure ft105.
const T8: Drawing = Drawing {
    points: &[(0., 0.), (1., 0.), (2., 0.), (0.5, 1.), (1., 2.), (1.5, 1.)],
    segments: &[
        ((0., 0.), (1., 0.)),
        ((1., 0.), (2., 0.)),
        ((0.5, 1.), (1., 2.)),
        ((1., 2.), (1.5, 1.)),
        ((1.5, 1.), (2., 0.)),
        ((2., 0.), (0.5, 1.)),
        ((0.5, 1.), (0., 0.)),
    ],
};
const T9: Drawing = Drawing {
    points: &[
        (3.5, 0.),
        (4.5, 0.),
        (5.5, 0.),
        (5., 1.),
        (4.5, 2.),
        (4., 1.),
    ],
    segments: &[
        ((3.5, 0.), (4.5, 0.)),
        ((4.5, 0.), (5.5, 0.)),
        ((5.5, 0.), (5., 1.)),
        ((5., 1.), (4.5, 2.)),
        ((4.5, 2.), (4., 1.)),
        ((4., 1.), (4.5, 0.)),
        ((4., 1.), (3.5, 0.)),
    ],
};

// Figure ft107: three graphs drawn side by side.
const T10: Drawing = Drawing {
    points: &[
        (-0.2, 0.),
        (0.4, 0.),
        (1., 0.),
        (-0.8, 0.),
        (-0.2, 0.8),
        (0.4, 0.8),
    ],
    segments: &[
        ((0.4, 0.), (1., 0.)),
        ((-0.8, 0.), (-0.2, 0.8)),
        ((-0.8, 0.), (-0.2, 0.)),
        ((-0.2, 0.8), (-0.2, 0.)),
        ((-0.2, 0.8), (0.4, 0.)),
        ((0.4, 0.8), (-0.2, 0.)),
        ((0.4, 0.8), (1., 0.)),
    ],
};
const T11: Drawing = Drawing {
    points: &[
        (1.8, 0.),
        (2.4, 0.),
        (3., 0.),
        (3.6, 0.),
        (2.4, 0.8),
        (3., 0.8),
    ],
    segments: &[
        ((1.8, 0.), (2.4, 0.)),
        ((3., 0.), (3.6, 0.)),
        ((3.6, 0.), (2.4, 0.8)),
        ((2.4, 0.8), (3., 0.)),
        ((2.4, 0.8), (1.8, 0.)),
        ((2.4, 0.8), (3., 0.8)),
        ((3., 0.8), (2.4, 0.)),
        ((3., 0.8), (3., 0.)),
    ],
};
const T12: Drawing = Drawing {
    points: &[
        (4.4, 0.),
        (5., 0.),
        (5., 0.8),
        (5.6, 0.8),
        (5.6, 0.),
        (6.2, 0.),
    ],
    segments: &[
        ((4.4, 0.), (5., 0.)),
        ((5., 0.8), (4.4, 0.)),
        ((5., 0.8), (5.6, 0.8)),
        ((5.6, 0.8), (5., 0.)),
        ((5., 0.8), (5.6, 0.)),
        ((5.6, 0.), (6.2, 0.)),
        ((5.6, 0.8), (6.2, 0.)),
    ],
};

fn listings() -> Vec<Listing> {
    let fig102 = "ft102";
    vec![
        fam("K3", 1, "K3", S),
        fam("K4", 2, "K4", S),
        fam("C4", 2, "C4", S),
        fam("K{1,2}", 2, "K{1,2}", S),
        fam("K5", 3, "K5", S),
        fam("C5", 3, "C5", S),
        fam("P4", 3, "P4", S),
        fam("K6", 4, "K6", S),
        fam("K6-M(perfect)", 4, "minus_matching(K6,perfect)", S),
        fam("C6", 4, "C6", S),
        fam("K5-M(1)", 4, "minus_matching(K5,1)", S),
        fam("K5-M(2)", 4, "minus_matching(K5,2)", S),
        fam("P5", 4, "P5", S),
        fam("P4", 4, "P4", S),
        fam("C3(P2,0,0)", 4, "C3(P2,0,0)", S),
        fam("K{1,3}", 4, "K{1,3}", S),
        fam("K1+P4", 4, "join(K1,P4)", S),
        Listing {
            name: "C5+chord",
            offset: 4,
            recipe: Recipe::Edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]),
            source: S,
            label: None,
            reading: None,
        },
        fam("K7", 5, "K7", S),
        fam("K6-M(1)", 5, "minus_matching(K6,1)", S),
        fam("K6-M(2)", 5, "minus_matching(K6,2)", S),
        drawn("T1", 5, fig102, T1, Some("complement(union(P2,P2))")),
        drawn(
            "T2",
            5,
            fig102,
            T2,
            Some("complement(union(C4,union(K1,K1)))"),
        ),
        drawn("T3", 5, fig102, T3, Some("complement(union(C4,P2))")),
        drawn("T4", 5, fig102, T4, Some("complement(P6)")),
        drawn("T5", 5, fig102, T5, Some("complement(C6)")),
        drawn("T6", 5, fig102, T6, Some("W5")),
        fam("C6", 5, "C6", S),
        fam("C7", 5, "C7", PROOF),
        fam("P6", 5, "P6", S),
        fam("K{2,3}", 5, "K{2,3}", S),
        Listing {
            name: "K2+K3",
            offset: 5,
            recipe: Recipe::Family("join(K2,complement(K3))"),
            source: S,
            label: Some("join(K2,K3)"),
            reading: Some(
                "read as K2 joined to the edgeless graph on three vertices, the graph the proof \
                 builds from a 2-vertex cut and an independent triple; the literal K2+K3 is K5",
            ),
        },
        drawn(
            "H1",
            5,
            "ft101",
            H1,
            Some("complement(union(P3,union(K1,K1)))"),
        ),
        drawn("H2", 5, "ft101", H2, Some("complement(union(P3,P2))")),
        fam("F2", 5, "F2", S),
        fam("K{1,4}", 5, "K{1,4}", S),
        fam("C4(P2,0,0,0)", 5, "C4(P2,0,0,0)", S),
        fam("P3(0,P3,0)", 5, "P3(0,P3,0)", S),
        fam("C3(2P2,0,0)", 5, "C3(2P2,0,0)", S),
        fam("C3(P2,P2,0)", 5, "C3(P2,P2,0)", S),
        fam("C3(P3,0,0)", 5, "C3(P3,0,0)", PROOF),
        drawn("T7", 5, "ft104", T7, None),
        drawn("T8", 5, "ft105", T8, None),
        drawn("T9", 5, "ft105", T9, None),
        drawn("T10", 5, "ft107", T10, None),
        drawn("T11", 5, "ft107", T11, None),
        drawn("T12", 5, "ft107", T12, None),
    ]
}

pub fn build_catalog() -> Result<Vec<CatalogEntry>, CatalogError> {
    listings()
        .into_iter()
        .map(|s| {
            let entry = s.name;
            let (graph, split_points) = match s.recipe {
                Recipe::Family(e) => (
                    build_family(e).map_err(|source| CatalogError::Family { entry, source })?,
                    vec![],
                ),
                Recipe::Edges(n, edges) => (
                    Graph::from_edges(n, edges.iter().copied())
                        .map_err(|source| CatalogError::Graph { entry, source })?,
                    vec![],
                ),
                Recipe::Drawing(ref d) => graph_from_drawing(entry, d)?,
            };
            if !graph.is_connected() {
                return Err(CatalogError::Disconnected { entry });
            }
            let canonical =
                canonical_key(&graph).map_err(|source| CatalogError::Canon { entry, source })?;
            Ok(CatalogEntry {
                name: s.name,
                theorem: Theorem { offset: s.offset },
                recipe: s.recipe,
                source: s.source,
                label: s.label,
                reading: s.reading,
                graph,
                canonical,
                split_points,
                measured: None,
            })
        })
        .collect()
}

pub fn measure(g: &Graph) -> Measured {
    let gamma3 = gamma3(g).number;
    let kappa = vertex_connectivity(g).kappa;
    Measured {
        n: g.n(),
        gamma3,
        kappa,
        sum: gamma3 + kappa,
    }
}

/// Fills `measured` on every entry and returns the discrepancy notes, ordered
/// by (theorem, entry name, kind).
pub fn self_check(entries: &mut [CatalogEntry]) -> Vec<DiscrepancyNote> {
    let mut notes = Vec::new();
    for e in entries.iter_mut() {
        let m = measure(&e.graph);
        e.measured = Some(m);
        let note = |kind, detail: String| DiscrepancyNote {
            entry: e.name.to_string(),
            theorem: e.theorem,
            kind,
            detail,
        };

        let target = e.theorem.target(m.n);
        if target != Some(m.sum) {
            notes.push(note(
                NoteKind::FailsTarget,
                format!(
                    "n={}, gamma3={}, kappa={}: sum {} = 2n-{}, target 2n-{} = {}",
                    m.n,
                    m.gamma3,
                    m.kappa,
                    m.sum,
                    2 * m.n as isize - m.sum as isize,
                    e.theorem.offset,
                    target.map_or("undefined".to_string(), |t| t.to_string()),
                ),
            ));
        }
        if let Some(label) = e.label {
            let agrees = match build_family(label) {
                Ok(lg) => {
                    lg.n() <= crate::iso::CANON_LIMIT
                        && canonical_key(&lg).ok().as_deref() == Some(e.canonical.as_str())
                }
                Err(_) => false,
            };
            if !agrees {
                let described = match build_family(label) {
                    Ok(lg) => format!("{} vertices, {} edges", lg.n(), lg.edge_count()),
                    Err(err) => format!("not constructible: {err}"),
                };
                notes.push(note(
                    NoteKind::LabelMismatch,
                    format!(
                        "printed label {label} ({described}) differs from the transcribed graph ({} vertices, {} edges)",
                        e.graph.n(),
                        e.graph.edge_count()
                    ),
                ));
            }
        }
        if let Some(reading) = e.reading {
            notes.push(note(NoteKind::LabelMismatch, reading.to_string()));
        }
        if !e.split_points.is_empty() {
            notes.push(note(
                NoteKind::AmbiguousFigure,
                format!(
                    "a drawn segment passes through dot(s) {:?}; read as edges through them",
                    e.split_points
                ),
            ));
        }
        if !e.source.in_statement() {
            notes.push(note(
                NoteKind::MissingFromStatement,
                "derived in the proof but absent from the theorem's list".to_string(),
            ));
        }
    }

    // same graph listed twice under one theorem
    let mut seen: BTreeMap<(Theorem, &str), &str> = BTreeMap::new();
    for e in entries.iter() {
        if let Some(first) = seen.insert((e.theorem, e.canonical.as_str()), e.name) {
            notes.push(DiscrepancyNote {
                entry: e.name.to_string(),
                theorem: e.theorem,
                kind: NoteKind::LabelMismatch,
                detail: format!("isomorphic to {first}, listed under the same theorem"),
            });
            seen.insert((e.theorem, e.canonical.as_str()), first);
        }
    }

    notes.sort_by(|a, b| (a.theorem, &a.entry, a.kind).cmp(&(b.theorem, &b.entry, b.kind)));
    notes
}

/// Built and self-checked catalog.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub notes: Vec<DiscrepancyNote>,
}

impl Catalog {
    pub fn load() -> Result<Catalog, CatalogError> {
        let mut entries = build_catalog()?;
        let notes = self_check(&mut entries);
        Ok(Catalog { entries, notes })
    }

    pub fn for_theorem(&self, t: Theorem) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.theorem == t)
    }

    pub fn notes_for(&self, t: Theorem) -> impl Iterator<Item = &DiscrepancyNote> {
        self.notes.iter().filter(move |n| n.theorem == t)
    }

    /// A catalog name for a canonical graph6 key, preferring entries under `t`.
    pub fn name_of(&self, key: &str, t: Option<Theorem>) -> Option<&'static str> {
        let mut hits = self.entries.iter().filter(|e| e.canonical == key);
        let all: Vec<&CatalogEntry> = hits.by_ref().collect();
        all.iter()
            .find(|e| Some(e.theorem) == t)
            .or_else(|| all.first())
            .map(|e| e.name)
    }

    pub fn rows(&self) -> Vec<CatalogRow> {
        self.entries
            .iter()
            .map(|e| {
                let m = e.measured.unwrap_or_else(|| measure(&e.graph));
                CatalogRow {
                    name: e.name,
                    theorem: e.theorem,
                    source: e.source,
                    recipe: e.recipe.to_string(),
                    graph6: crate::graph::graph6_encode(&e.graph),
                    canonical: e.canonical.clone(),
                    n: m.n,
                    gamma3: m.gamma3,
                    kappa: m.kappa,
                    sum: m.sum,
                    target: e.theorem.target(m.n),
                    notes: self
                        .notes
                        .iter()
                        .filter(|n| n.theorem == e.theorem && n.entry == e.name)
                        .map(|n| format!("{}: {}", n.kind, n.detail))
                        .collect(),
                }
            })
            .collect()
    }
}

/// Export row for one catalog entry.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub name: &'static str,
    pub theorem: Theorem,
    pub source: Source,
    pub recipe: String,
    pub graph6: String,
    pub canonical: String,
    pub n: usize,
    pub gamma3: usize,
    pub kappa: usize,
    pub sum: usize,
    pub target: Option<usize>,
    pub notes: Vec<String>,
}

/// The two small graphs used to illustrate γ₃, with the sets offered as
/// 3-dominating sets for them.
#[derive(Debug, Clone)]
pub struct ExampleGraph {
    pub name: &'static str,
    pub graph: Graph,
    /// Claimed set under the vertex-name order of the drawing source.
    pub claimed_by_coordinates: VertexSet,
    /// The same vertex names mapped through the label placement in the figure.
    pub claimed_by_labels: VertexSet,
    pub claimed_gamma3: usize,
}

/// Figure ex24. Coordinates are declared a1..a6 / b1..b6 (vertices 0..5), but
/// the printed labels sit next to them rotated by one: v1 at a6, v2 at a1,
/// ..., v6 at a5.
pub fn example_graphs() -> Vec<ExampleGraph> {
    let label_to_vertex = |v: usize| (v + 4) % 6; // v_i (1-based) → index of its dot
    let labels = |vs: &[usize]| {
        vs.iter()
            .map(|&v| label_to_vertex(v))
            .collect::<VertexSet>()
    };
    let coords = |vs: &[usize]| vs.iter().map(|&v| v - 1).collect::<VertexSet>();

    let g1 = Graph::from_edges(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 3),
            (1, 4),
            (5, 2),
        ],
    )
    .expect("static edges");
    let g2 = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (5, 2), (5, 3), (5, 4), (4, 1)])
        .expect("static edges");
    vec![
        ExampleGraph {
            name: "G1",
            graph: g1,
            claimed_by_coordinates: coords(&[1, 3, 5]),
            claimed_by_labels: labels(&[1, 3, 5]),
            claimed_gamma3: 3,
        },
        ExampleGraph {
            name: "G2",
            graph: g2,
            claimed_by_coordinates: coords(&[3, 4, 5, 6]),
            claimed_by_labels: labels(&[3, 4, 5, 6]),
            claimed_gamma3: 4,
        },
    ]
}

/// Annotations for [`example_graphs`]: whether each claimed set is
/// 3-dominating under each reading of the labels.
pub fn example_annotations() -> Vec<String> {
    example_graphs()
        .iter()
        .map(|e| {
            let by_coords = is_k_dominating(&e.graph, e.claimed_by_coordinates, 3);
            let by_labels = is_k_dominating(&e.graph, e.claimed_by_labels, 3);
            let r = gamma3(&e.graph);
            format!(
                "{}: gamma3 = {} (claimed {}), witness {}; claimed set is {} under coordinate order, {} under label placement",
                e.name,
                r.number,
                e.claimed_gamma3,
                r.witness,
                if by_coords { "3-dominating" } else { "not 3-dominating" },
                if by_labels { "3-dominating" } else { "not 3-dominating" },
            )
        })
        .collect()
}
