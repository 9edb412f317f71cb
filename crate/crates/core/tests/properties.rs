use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use kdom::family::{Atom, FamilyExpr, MatchingSize, Slot};
use kdom::graph::{self, graph6_decode, graph6_encode, Graph};
use kdom::{canonical_form, canonical_key, gamma3, parse_family, vertex_connectivity};

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (1usize..6).prop_map(Atom::Complete),
        (1usize..4, 1usize..4).prop_map(|(m, n)| Atom::CompleteBipartite(m, n)),
        (1usize..6).prop_map(Atom::Path),
        (3usize..6).prop_map(Atom::Cycle),
        (4usize..7).prop_map(Atom::Wheel),
        (1usize..3).prop_map(Atom::Friendship),
    ]
}

fn slot() -> impl Strategy<Value = Slot> {
    prop_oneof![
        Just(Slot::Empty),
        (1usize..3, 2usize..4).prop_map(|(count, length)| Slot::Paths { count, length })
    ]
}

fn expr() -> impl Strategy<Value = FamilyExpr> {
    let leaf = prop_oneof![
        atom().prop_map(FamilyExpr::Atom),
        atom().prop_flat_map(|a| {
            proptest::collection::vec(slot(), a.order())
                .prop_map(move |s| FamilyExpr::Attach(a.clone(), s))
        }),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner
                .clone()
                .prop_map(|e| FamilyExpr::Complement(Box::new(e))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| FamilyExpr::Union(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| FamilyExpr::Join(Box::new(a), Box::new(b))),
            (
                inner.clone(),
                prop_oneof![
                    (0usize..3).prop_map(MatchingSize::Edges),
                    Just(MatchingSize::Perfect)
                ]
            )
                .prop_map(|(e, m)| FamilyExpr::MinusMatching(Box::new(e), m)),
        ]
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in any_graph(20)) {
        let s = graph6_encode(&g);
        prop_assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in any_graph(12)) {
        let c = graph::complement(&g);
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(graph::complement(&c), g);
    }

    #[test]
    fn join_edge_count(g in any_graph(7), h in any_graph(7)) {
        let j = graph::join(&g, &h).unwrap();
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
    }

    #[test]
    fn dsl_print_parse_identity(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse_family(&text).unwrap(), e);
    }

    #[test]
    fn canonical_form_ignores_labels(g in any_graph(9), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
        let c = canonical_form(&g).unwrap();
        prop_assert_eq!(graph6_encode(&c.graph(&g)), c.canon_graph6);
    }

    #[test]
    fn invariants_ignore_labels(g in any_graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabel(&perm);
        prop_assert_eq!(gamma3(&g).number, gamma3(&h).number);
        prop_assert_eq!(vertex_connectivity(&g).kappa, vertex_connectivity(&h).kappa);
    }

    #[test]
    fn gamma3_range(g in any_graph(9)) {
        let r = gamma3(&g);
        prop_assert!(kdom::is_k_dominating(&g, r.witness, 3));
        prop_assert!(r.number <= g.n());
        if g.n() >= 3 { prop_assert!(r.number >= 3); }
    }
}
