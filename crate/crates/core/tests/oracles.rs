//! Slow, obviously-correct reimplementations checked against the library.

use std::collections::BTreeSet;

use kdom::connectivity::brute_force_connectivity;
use kdom::domination::{gamma_k, Variant};
use kdom::enumerate::connected_levels;
use kdom::graph::{self, Graph};
use kdom::{canonical_key, vertex_connectivity};

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Smallest `|S|` by trying all subsets in order of size.
fn naive_gamma(g: &Graph, k: usize, variant: Variant) -> Option<usize> {
    let n = g.n();
    let a = adjacency(g);
    let ok = |mask: u32| {
        (0..n).all(|v| {
            let inside = mask >> v & 1 == 1;
            let hits = (0..n).filter(|&u| a[v][u] && mask >> u & 1 == 1).count();
            match variant {
                Variant::KDomination => inside || hits >= k,
                Variant::KTuple => hits + inside as usize >= k,
            }
        })
    };
    (0..=n).find(|&size| (0u32..1 << n).any(|m| m.count_ones() as usize == size && ok(m)))
}

#[test]
fn branch_and_bound_matches_subset_search() {
    for level in connected_levels(6).unwrap() {
        for g in level.graphs() {
            for k in 1..=3 {
                for variant in [Variant::KDomination, Variant::KTuple] {
                    let naive = naive_gamma(g, k, variant);
                    let fast = gamma_k(g, k, variant);
                    match (naive, fast) {
                        (Some(x), Ok(r)) => {
                            assert_eq!(
                                x,
                                r.number,
                                "{} k={k} {variant:?}",
                                graph::graph6_encode(g)
                            );
                            assert_eq!(r.witness.len(), x);
                            assert!(kdom::domination::is_dominating_for(
                                g, r.witness, k, variant
                            ));
                        }
                        (None, Err(_)) => {}
                        (a, b) => panic!(
                            "{} k={k} {variant:?}: naive {a:?}, solver {b:?}",
                            graph::graph6_encode(g)
                        ),
                    }
                }
            }
        }
    }
}

#[test]
fn flow_connectivity_matches_brute_force() {
    for level in connected_levels(7).unwrap() {
        for g in level.graphs() {
            let r = vertex_connectivity(g);
            assert_eq!(
                Ok(r.kappa),
                brute_force_connectivity(g),
                "{}",
                graph::graph6_encode(g)
            );
            if let Some((s, t)) = r.separated {
                let rest = g.vertices().difference(r.cut);
                assert!(rest.contains(s) && rest.contains(t));
                assert!(!g.component_within(s, rest).contains(t));
            } else {
                assert!(g.is_complete());
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum upper-triangle bit string over every relabeling.
fn brute_canon(edges: &[(usize, usize)], n: usize, perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| {
            let mut m = vec![vec![false; n]; n];
            for &(u, v) in edges {
                m[p[u]][p[v]] = true;
                m[p[v]][p[u]] = true;
            }
            (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .map(|(i, j)| m[i][j])
                .collect::<Vec<bool>>()
        })
        .min()
        .unwrap()
}

#[test]
fn enumeration_matches_labeled_brute_force() {
    let levels = connected_levels(6).unwrap();
    for n in 1..=6 {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let perms = permutations(n);
        let mut classes = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            if g.is_connected() {
                classes.insert(brute_canon(&edges, n, &perms));
            }
        }
        let level = &levels[n - 1];
        let ours: BTreeSet<Vec<bool>> = level
            .graphs()
            .map(|g| brute_canon(&g.edges(), n, &perms))
            .collect();
        assert_eq!(
            ours.len(),
            level.len(),
            "n={n}: two levels entries are isomorphic"
        );
        assert_eq!(ours, classes, "n={n}");
    }
}

#[test]
fn canonical_key_separates_exactly_the_classes() {
    // all labeled graphs on 5 vertices: keys agree iff brute forms agree
    let n = 5;
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        let key = canonical_key(&g).unwrap();
        let brute = brute_canon(&edges, n, &perms);
        if let Some(prev) = seen.insert(key.clone(), brute.clone()) {
            assert_eq!(prev, brute, "key {key} shared by non-isomorphic graphs");
        }
    }
    assert_eq!(seen.len(), 34);
}

#[test]
fn enumeration_counts_to_eight() {
    let counts: Vec<usize> = connected_levels(8)
        .unwrap()
        .iter()
        .map(|l| l.len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn named_values() {
    let w6 = graph::wheel(6).unwrap();
    assert_eq!(
        naive_gamma(&w6, 3, Variant::KDomination),
        Some(kdom::gamma3(&w6).number)
    );
    assert_eq!(kdom::gamma3(&w6).number, 4);
    for t in 1..=3 {
        let f = graph::friendship(t).unwrap();
        assert_eq!(vertex_connectivity(&f).kappa, if t == 1 { 2 } else { 1 });
    }
}
