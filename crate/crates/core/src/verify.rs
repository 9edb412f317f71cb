//! Exhaustive checks over all connected graphs up to a given order.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{Catalog, DiscrepancyNote, Theorem};
use crate::connectivity::vertex_connectivity;
use crate::domination::{gamma, gamma3};
use crate::enumerate::{connected_levels_with, EnumerationError, Guard};
use crate::graph::{complete, Graph, Matching};

/// γ₃ is only meaningful from three vertices on, so levels start here.
pub const MIN_ORDER: usize = 3;

#[derive(Debug, Clone)]
pub struct GraphRecord {
    pub g6: String,
    pub graph: Graph,
    pub n: usize,
    pub gamma3: usize,
    pub kappa: usize,
    pub gamma: usize,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl GraphRecord {
    pub fn new(g6: String, graph: Graph) -> Self {
        GraphRecord {
            n: graph.n(),
            gamma3: gamma3(&graph).number,
            kappa: vertex_connectivity(&graph).kappa,
            gamma: gamma(&graph).number,
            min_degree: graph.min_degree(),
            max_degree: graph.max_degree(),
            g6,
            graph,
        }
    }

    pub fn sum(&self) -> usize {
        self.gamma3 + self.kappa
    }
}

/// Invariants of every connected graph with `MIN_ORDER <= n <= n_max`.
#[derive(Debug, Clone)]
pub struct Census {
    pub n_max: usize,
    levels: Vec<Vec<GraphRecord>>,
}

impl Census {
    pub fn build(n_max: usize, guard: Guard) -> Result<Census, EnumerationError> {
        let streams = connected_levels_with(n_max.max(1), guard)?;
        let levels = streams
            .into_iter()
            .filter(|s| s.n >= MIN_ORDER)
            .map(|s| {
                let pairs: Vec<(String, Graph)> =
                    s.iter().map(|(k, g)| (k.to_string(), g.clone())).collect();
                pairs
                    .into_par_iter()
                    .map(|(k, g)| GraphRecord::new(k, g))
                    .collect()
            })
            .collect();
        Ok(Census { n_max, levels })
    }

    /// `(n, records)` in increasing `n`.
    pub fn levels(&self) -> impl Iterator<Item = (usize, &[GraphRecord])> {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, l)| (i + MIN_ORDER, l.as_slice()))
    }

    pub fn records(&self) -> impl Iterator<Item = &GraphRecord> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalGraph {
    pub g6: String,
    pub gamma3: usize,
    pub kappa: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    pub n: usize,
    pub graphs: usize,
    pub extremal: Vec<ExtremalGraph>,
}

/// Graphs with `γ₃ + κ = 2n − offset`, level by level.
pub fn characterize(offset: usize, census: &Census) -> Vec<Level> {
    census
        .levels()
        .map(|(n, records)| Level {
            n,
            graphs: records.len(),
            extremal: records
                .iter()
                .filter(|r| (2 * n).checked_sub(offset) == Some(r.sum()))
                .map(|r| ExtremalGraph {
                    g6: r.g6.clone(),
                    gamma3: r.gamma3,
                    kappa: r.kappa,
                })
                .collect(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtraEntry {
    pub name: String,
    pub n: usize,
    pub computed_sum: usize,
    pub target: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub g6: String,
    pub n: usize,
    pub sum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub target_offset: usize,
    pub n_max: usize,
    pub levels: Vec<Level>,
    /// Catalog entries whose graph is among the computed extremal graphs, or
    /// (above `n_max`) whose invariants meet the target when checked directly.
    pub confirmed: Vec<String>,
    /// Catalog entries that do not meet the target.
    pub extra: Vec<ExtraEntry>,
    /// Computed extremal graphs no catalog entry names.
    pub missing: Vec<String>,
    pub notes: Vec<DiscrepancyNote>,
    pub bound_violations: Vec<BoundViolation>,
    pub caveats: Vec<String>,
}

impl VerificationReport {
    /// True when the computed set and the catalog list disagree.
    pub fn has_discrepancies(&self) -> bool {
        !self.extra.is_empty() || !self.missing.is_empty() || !self.bound_violations.is_empty()
    }
}

pub fn check_theorem(theorem: Theorem, census: &Census, catalog: &Catalog) -> VerificationReport {
    let levels = characterize(theorem.offset, census);
    let computed: BTreeSet<&str> = levels
        .iter()
        .flat_map(|l| l.extremal.iter().map(|e| e.g6.as_str()))
        .collect();

    let mut confirmed = Vec::new();
    let mut extra = Vec::new();
    let mut matched = BTreeSet::new();
    let mut above = Vec::new();
    for e in catalog.for_theorem(theorem) {
        let m = e
            .measured
            .unwrap_or_else(|| crate::catalog::measure(&e.graph));
        let target = theorem.target(m.n);
        let hit = if m.n >= MIN_ORDER && m.n <= census.n_max {
            computed.contains(e.canonical.as_str())
        } else {
            above.push(e.name);
            target == Some(m.sum)
        };
        if hit {
            matched.insert(e.canonical.as_str());
            confirmed.push(e.name.to_string());
        } else {
            extra.push(ExtraEntry {
                name: e.name.to_string(),
                n: m.n,
                computed_sum: m.sum,
                target,
            });
        }
    }
    let missing = computed
        .iter()
        .filter(|k| !matched.contains(*k))
        .map(|k| k.to_string())
        .collect();

    let mut caveats = vec![format!(
        "exhaustive only for {MIN_ORDER} <= n <= {}; larger graphs were not enumerated",
        census.n_max
    )];
    if !above.is_empty() {
        caveats.push(format!(
            "checked directly, outside the enumerated range: {}",
            above.join(", ")
        ));
    }

    VerificationReport {
        theorem,
        target_offset: theorem.offset,
        n_max: census.n_max,
        levels,
        confirmed,
        extra,
        missing,
        notes: catalog.notes_for(theorem).cloned().collect(),
        bound_violations: Vec::new(),
        caveats,
    }
}

/// Checks `γ₃ + κ <= 2n − 1` on the whole census, then the offset-1
/// characterization of the equality cases.
pub fn verify_bound(census: &Census, catalog: &Catalog) -> VerificationReport {
    let mut report = check_theorem(Theorem { offset: 1 }, census, catalog);
    report.bound_violations = census
        .records()
        .filter(|r| r.sum() > 2 * r.n - 1)
        .map(|r| BoundViolation {
            g6: r.g6.clone(),
            n: r.n,
            sum: r.sum(),
        })
        .collect();
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingAudit {
    pub n: usize,
    pub matchings: usize,
    /// γ₃(K_n − M) must be 4 for a perfect matching and 3 otherwise.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub n_max: usize,
    pub graphs: usize,
    /// `γ₃ = n` exactly when `Δ <= 2`.
    pub full_domination: Vec<String>,
    /// `3 <= γ₃ <= n`.
    pub gamma3_range: Vec<String>,
    /// `κ <= δ`.
    pub kappa_min_degree: Vec<String>,
    /// `γ + κ <= n`.
    pub gamma_kappa: Vec<String>,
    pub complete_minus_matching: Vec<MatchingAudit>,
}

impl AuditReport {
    pub fn failures(&self) -> usize {
        self.full_domination.len()
            + self.gamma3_range.len()
            + self.kappa_min_degree.len()
            + self.gamma_kappa.len()
            + self
                .complete_minus_matching
                .iter()
                .map(|m| m.failures.len())
                .sum::<usize>()
    }
}

pub fn audit_small_theorems(
    census: &Census,
    matching_orders: std::ops::RangeInclusive<usize>,
) -> AuditReport {
    let mut full_domination = Vec::new();
    let mut gamma3_range = Vec::new();
    let mut kappa_min_degree = Vec::new();
    let mut gamma_kappa = Vec::new();
    for r in census.records() {
        if (r.gamma3 == r.n) != (r.max_degree <= 2) {
            full_domination.push(r.g6.clone());
        }
        if !(3 <= r.gamma3 && r.gamma3 <= r.n) {
            gamma3_range.push(r.g6.clone());
        }
        if r.kappa > r.min_degree {
            kappa_min_degree.push(r.g6.clone());
        }
        if r.gamma + r.kappa > r.n {
            gamma_kappa.push(r.g6.clone());
        }
    }

    let complete_minus_matching = matching_orders
        .map(|n| {
            let kn = complete(n).expect("small n");
            let all = Matching::all_in(&kn);
            let mut failures: Vec<String> = all
                .par_iter()
                .filter_map(|m| {
                    let g = crate::graph::remove_matching(&kn, m).expect("valid matching");
                    let got = gamma3(&g).number;
                    let want = if m.is_perfect_in(&kn) { 4 } else { 3 };
                    (got != want).then(|| {
                        format!("K{n} minus {:?}: gamma3 {got}, expected {want}", m.edges())
                    })
                })
                .collect();
            failures.sort();
            MatchingAudit {
                n,
                matchings: all.len(),
                failures,
            }
        })
        .collect();

    AuditReport {
        n_max: census.n_max,
        graphs: census.len(),
        full_domination,
        gamma3_range,
        kappa_min_degree,
        gamma_kappa,
        complete_minus_matching,
    }
}
