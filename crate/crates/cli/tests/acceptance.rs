//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure
//! not listed in `KNOWN_UNATTAINABLE`.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kdom::catalog::{example_graphs, Catalog, Theorem};
use kdom::connectivity::brute_force_connectivity;
use kdom::domination::{gamma_k, Variant};
use kdom::enumerate::connected_levels;
use kdom::graph::{complete, cycle, path, remove_matching, Graph, Matching};
use kdom::verify::{audit_small_theorems, characterize, check_theorem, verify_bound, Census};
use kdom::{build_family, canonical_key, gamma3, vertex_connectivity};

const LIMIT_VALUES: Duration = Duration::from_secs(1);
const LIMIT_AUDIT: Duration = Duration::from_secs(30);
const LIMIT_BOUND: Duration = Duration::from_secs(180);

/// Criteria that cannot pass against correct computation. They still print
/// FAIL; they do not set the exit status.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    5,
    "K4 minus an edge has gamma3 = 3 and kappa = 2, so it reaches 2n - 3 at n = 4 \
     and the computed set has four members",
)];

struct Outcome {
    failed: usize,
    unexpected: usize,
}

impl Outcome {
    fn report(&mut self, id: u32, pass: bool, detail: String) {
        if pass {
            println!("criterion {id}: PASS {detail}");
            return;
        }
        self.failed += 1;
        match KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id) {
            Some((_, why)) => println!("criterion {id}: FAIL {detail} (known: {why})"),
            None => {
                self.unexpected += 1;
                println!("criterion {id}: FAIL {detail}");
            }
        }
    }
}

fn key(expr: &str) -> String {
    canonical_key(&build_family(expr).expect("fixture expression")).expect("small")
}

fn keys(exprs: &[&str]) -> BTreeSet<String> {
    exprs.iter().map(|e| key(e)).collect()
}

fn computed_set(offset: usize, census: &Census) -> BTreeSet<String> {
    characterize(offset, census)
        .into_iter()
        .flat_map(|l| l.extremal.into_iter().map(|e| e.g6))
        .collect()
}

fn criterion_1() -> (bool, String) {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut expect = |what: String, got: usize, want: usize| {
        if got != want {
            bad.push(format!("{what}={got}, want {want}"));
        }
    };
    for n in 3..=8 {
        expect(format!("K{n}"), gamma3(&complete(n).unwrap()).number, 3);
    }
    for n in 3..=9 {
        expect(format!("P{n}"), gamma3(&path(n).unwrap()).number, n);
        expect(format!("C{n}"), gamma3(&cycle(n).unwrap()).number, n);
    }
    for e in example_graphs() {
        expect(
            e.name.to_string(),
            gamma3(&e.graph).number,
            e.claimed_gamma3,
        );
    }
    let mut checked = 0;
    for n in 5..=8 {
        let kn = complete(n).unwrap();
        for m in Matching::all_in(&kn) {
            let want = if m.is_perfect_in(&kn) { 4 } else { 3 };
            expect(
                format!("K{n}-{:?}", m.edges()),
                gamma3(&remove_matching(&kn, &m).unwrap()).number,
                want,
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < LIMIT_VALUES;
    (
        pass,
        format!(
            "{checked} matchings, {} mismatches {:?}, {elapsed:.2?} (limit {LIMIT_VALUES:?})",
            bad.len(),
            bad
        ),
    )
}

fn criterion_2() -> (bool, String) {
    let start = Instant::now();
    let census = Census::build(7, Default::default()).unwrap();
    let a = audit_small_theorems(&census, 5..=8);
    let elapsed = start.elapsed();
    let exceptions = a.full_domination.len() + a.gamma3_range.len() + a.kappa_min_degree.len();
    let pass = exceptions == 0 && a.graphs == 994 && elapsed < LIMIT_AUDIT;
    (
        pass,
        format!(
            "{} graphs, {exceptions} exceptions, {elapsed:.2?} (limit {LIMIT_AUDIT:?})",
            a.graphs
        ),
    )
}

fn criterion_3(census: &Census, built: Duration, catalog: &Catalog) -> (bool, String) {
    let start = Instant::now();
    let r = verify_bound(census, catalog);
    let equality = computed_set(1, census);
    let elapsed = built + start.elapsed();
    let pass = r.bound_violations.is_empty() && equality == keys(&["K3"]) && elapsed < LIMIT_BOUND;
    (
        pass,
        format!(
            "{} violations, equality set {:?}, {elapsed:.2?} (limit {LIMIT_BOUND:?})",
            r.bound_violations.len(),
            equality
        ),
    )
}

fn exact(offset: usize, census: &Census, want: &[&str]) -> (bool, String) {
    let got = computed_set(offset, census);
    let want = keys(want);
    let surplus: Vec<&String> = got.difference(&want).collect();
    let absent: Vec<&String> = want.difference(&got).collect();
    (
        surplus.is_empty() && absent.is_empty(),
        format!("computed {got:?}, unexpected {surplus:?}, absent {absent:?}"),
    )
}

fn contains(offset: usize, census: &Census, want: &[&str]) -> (bool, Vec<String>) {
    let got = computed_set(offset, census);
    let absent: Vec<String> = want
        .iter()
        .filter(|e| !got.contains(&key(e)))
        .map(|e| e.to_string())
        .collect();
    (absent.is_empty(), absent)
}

fn criterion_6(census: &Census, catalog: &Catalog) -> (bool, String) {
    let (has_all, absent) = contains(
        4,
        census,
        &[
            "K6",
            "minus_matching(K6,perfect)",
            "C6",
            "minus_matching(K5,1)",
            "minus_matching(K5,2)",
            "P5",
            "C3(P2,0,0)",
            "K{1,3}",
            "join(K1,P4)",
        ],
    );
    let chord = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
    let has_chord = computed_set(4, census).contains(&canonical_key(&chord).unwrap());
    let r = check_theorem(Theorem { offset: 4 }, census, catalog);
    let p4 = r
        .extra
        .iter()
        .any(|e| e.name == "P4" && e.computed_sum == 2 * 4 - 3);
    (
        has_all && has_chord && p4,
        format!("absent {absent:?}, C5+chord {has_chord}, P4 in extra with sum 5: {p4}"),
    )
}

fn criterion_7(census: &Census, catalog: &Catalog) -> (bool, String) {
    let (has_all, absent) = contains(
        5,
        census,
        &[
            "K7",
            "C7",
            "P6",
            "K{2,3}",
            "join(K2,complement(K3))",
            "F2",
            "K{1,4}",
            "C4(P2,0,0,0)",
            "P3(0,P3,0)",
            "C3(2P2,0,0)",
            "C3(P2,P2,0)",
            "complement(union(P3,union(K1,K1)))",
            "complement(union(P3,P2))",
        ],
    );
    let t = Theorem { offset: 5 };
    let r = check_theorem(t, census, catalog);
    let c6 = r.extra.iter().any(|e| e.name == "C6");
    // H1 and H2 as transcribed from their drawing must match the recipes above
    let drawn_h = ["H1", "H2"]
        .iter()
        .all(|h| r.confirmed.iter().any(|c| c == h));
    let mut silent = Vec::new();
    let (mut confirmed, mut noted) = (0, 0);
    for e in catalog.for_theorem(t).filter(|e| e.name.starts_with('T')) {
        let is_confirmed = r.confirmed.iter().any(|c| c == e.name);
        let has_note = r.notes.iter().any(|n| n.entry == e.name);
        if is_confirmed {
            confirmed += 1;
        } else if has_note {
            noted += 1;
        } else {
            silent.push(e.name);
        }
    }
    (
        has_all && c6 && drawn_h && silent.is_empty(),
        format!(
            "absent {absent:?}, C6 in extra {c6}, drawn H1/H2 confirmed {drawn_h}; T-graphs: {confirmed} confirmed, {noted} noted, silent {silent:?}"
        ),
    )
}

fn naive_gamma(g: &Graph, k: usize, variant: Variant) -> Option<usize> {
    let n = g.n();
    let nb: Vec<u32> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| g.has_edge(u, v))
                .fold(0, |a, u| a | 1 << u)
        })
        .collect();
    let ok = |s: u32| {
        (0..n).all(|v| {
            let inside = s >> v & 1 == 1;
            let hits = (nb[v] & s).count_ones() as usize;
            match variant {
                Variant::KDomination => inside || hits >= k,
                Variant::KTuple => hits + inside as usize >= k,
            }
        })
    };
    (0..=n).find(|&size| (0u32..1 << n).any(|s| s.count_ones() as usize == size && ok(s)))
}

fn criterion_8() -> (bool, String) {
    let levels = connected_levels(7).unwrap();
    let mut dom_cases = 0;
    let mut bad = Vec::new();
    for level in levels.iter().take(6) {
        for g in level.graphs() {
            for k in 1..=3 {
                for variant in [Variant::KDomination, Variant::KTuple] {
                    dom_cases += 1;
                    let fast = gamma_k(g, k, variant).ok().map(|r| r.number);
                    if fast != naive_gamma(g, k, variant) {
                        bad.push(format!(
                            "{} k={k} {variant:?}",
                            kdom::graph::graph6_encode(g)
                        ));
                    }
                }
            }
        }
    }
    let mut kappa_cases = 0;
    for level in &levels {
        for g in level.graphs() {
            kappa_cases += 1;
            if Ok(vertex_connectivity(g).kappa) != brute_force_connectivity(g) {
                bad.push(format!("kappa {}", kdom::graph::graph6_encode(g)));
            }
        }
    }
    (
        bad.is_empty(),
        format!(
            "{dom_cases} domination cases, {kappa_cases} connectivity cases, mismatches {bad:?}"
        ),
    )
}

fn labeled_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for m in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, m);
                    q
                })
            })
            .collect();
    }
    let mut classes = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if !Graph::from_edges(n, edges.iter().copied())
            .unwrap()
            .is_connected()
        {
            continue;
        }
        let form = perms
            .iter()
            .map(|p| {
                let mut relabeled: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                relabeled.sort_unstable();
                relabeled
            })
            .min()
            .unwrap();
        classes.insert(form);
    }
    classes.len()
}

fn criterion_9() -> (bool, String) {
    let counts: Vec<usize> = connected_levels(8)
        .unwrap()
        .iter()
        .map(|l| l.len())
        .collect();
    let brute: Vec<usize> = (1..=6).map(labeled_classes).collect();
    let want = [1, 1, 2, 6, 21, 112, 853, 11117];
    (
        counts == want && brute[..] == counts[..6],
        format!("counts {counts:?}, labeled brute force n<=6 {brute:?}"),
    )
}

fn criterion_10() -> (bool, String) {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_kdom"))
            .args(["check-theorem", "3.4", "--max-n", "8", "--json"])
            .env_remove("KDOM_MAX_N")
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok =
        a.status.success() && b.status.success() && !a.stdout.is_empty() && a.stdout == b.stdout;
    (
        ok,
        format!(
            "{} and {} bytes, identical: {}",
            a.stdout.len(),
            b.stdout.len(),
            a.stdout == b.stdout
        ),
    )
}

fn main() -> ExitCode {
    let mut out = Outcome {
        failed: 0,
        unexpected: 0,
    };
    let catalog = Catalog::load().expect("catalog builds");

    let (p, d) = criterion_1();
    out.report(1, p, d);
    let (p, d) = criterion_2();
    out.report(2, p, d);

    let start = Instant::now();
    let census = Census::build(8, Default::default()).unwrap();
    let built = start.elapsed();
    let (p, d) = criterion_3(&census, built, &catalog);
    out.report(3, p, d);
    let (p, d) = exact(2, &census, &["K{1,2}", "C4", "K4"]);
    out.report(4, p, d);
    let (p, d) = exact(3, &census, &["P4", "K5", "C5"]);
    out.report(5, p, d);
    let (p, d) = criterion_6(&census, &catalog);
    out.report(6, p, d);
    let (p, d) = criterion_7(&census, &catalog);
    out.report(7, p, d);
    let (p, d) = criterion_8();
    out.report(8, p, d);
    let (p, d) = criterion_9();
    out.report(9, p, d);
    let (p, d) = criterion_10();
    out.report(10, p, d);

    println!("{} of 10 criteria passed", 10 - out.failed);
    if out.unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
