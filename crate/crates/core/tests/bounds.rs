use proptest::prelude::*;
use spectra_core::bounds::*;
use spectra_core::graph::antipodal_fold;
use spectra_core::hamming::hamming_graph;
use spectra_core::johnson::{johnson_graph, kneser_graph, signed_adjacency_a};
use spectra_core::obstruction::sign_exhaust;
use spectra_core::{Error, Graph};

fn run(id: &str, g: &Graph, o: &QBoundOptions) -> QBoundReport {
    q_bounds(id, g, o, |s| sign_exhaust(s, 4)).unwrap()
}

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn heawood() -> Graph {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    Graph::new(14, lines.iter().enumerate().flat_map(|(l, p)| p.iter().map(move |&x| (x, 7 + l)))).unwrap()
}

#[test]
fn johnson_signing_resolves_at_two() {
    let g = johnson_graph(6, 3, 1).unwrap();
    let mut o = QBoundOptions::new();
    o.matrices.push(("A_{6,3}".into(), signed_adjacency_a(6, 3).unwrap()));
    let r = run("J(6,3)", &g, &o);
    assert_eq!((r.lower, r.upper, r.resolved), (2, 2, true));
    assert_eq!(r.best_upper().unwrap().rule, BoundRule::Matrix);
    assert!(r.distance_regular);
}

#[test]
fn hamming_2_3_resolves_at_three() {
    let r = run("H(2,3)", &hamming_graph(2, 3, 1).unwrap(), &QBoundOptions::new());
    assert_eq!((r.lower, r.upper), (3, 3));
    assert_eq!(r.best_lower().unwrap().rule, BoundRule::Parity);
    assert_eq!(r.best_upper().unwrap().rule, BoundRule::DiameterPlusOne);
}

#[test]
fn heawood_needs_the_sign_search() {
    let r = run("Heawood", &heawood(), &QBoundOptions::new());
    assert_eq!((r.lower, r.upper), (4, 4));
    let best = r.best_lower().unwrap();
    assert_eq!(best.rule, BoundRule::SignExhaust);
    let stats = best.certificate.as_ref().unwrap().stats.as_ref().unwrap();
    assert_eq!(stats.assignments_tried, 1 << 21);
    // with the search capped out only the unique-path bound remains
    let mut o = QBoundOptions::new();
    o.sign_variable_cap = 20;
    let r = run("Heawood", &heawood(), &o);
    assert_eq!((r.lower, r.upper), (3, 4));
    assert!(r.notes.iter().any(|n| n.contains("skipped")));
}

#[test]
fn small_rules() {
    let r = run("C5", &cycle(5), &QBoundOptions::new());
    assert_eq!((r.lower, r.upper), (3, 3));
    assert!(r.lower_evidence.iter().any(|e| e.rule == BoundRule::ParityTrace));
    let r = run("Petersen", &kneser_graph(5, 2).unwrap(), &QBoundOptions::new());
    assert_eq!((r.lower, r.upper), (3, 3));
    let k1 = Graph::new(1, []).unwrap();
    let r = run("K1", &k1, &QBoundOptions::new());
    assert_eq!((r.lower, r.upper), (1, 1));
}

#[test]
fn fold_upper_bound() {
    let c3 = antipodal_fold(&cycle(6)).unwrap().folded;
    let mut o = QBoundOptions::new();
    o.covers.push(("C6".into(), cycle(6)));
    let r = run("C3", &c3, &o);
    assert_eq!((r.lower, r.upper), (2, 2));
    assert!(r.upper_evidence.iter().any(|e| e.rule == BoundRule::Fold && e.value == 2));
    // relabelled quotient still picks up the signing
    let j84 = johnson_graph(8, 4, 1).unwrap();
    let folded = antipodal_fold(&j84).unwrap().folded;
    let mut o = QBoundOptions::new();
    o.covers.push(("J(8,4)".into(), j84));
    let r = run("folded J(8,4)", &folded, &o);
    assert_eq!((r.lower, r.upper), (2, 2));
    assert_eq!(r.best_upper().unwrap().rule, BoundRule::Fold);
    // a relabelled quotient still picks up the signing
    let perm: Vec<usize> = (0..35).map(|i| (i * 2) % 35).collect();
    let moved = Graph::new(35, folded.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
    assert_eq!(run("folded J(8,4)", &moved, &o).upper, 2);
    let mut bad = QBoundOptions::new();
    bad.covers.push(("Petersen".into(), kneser_graph(5, 2).unwrap()));
    let r = run("C3", &c3, &bad);
    assert_eq!(r.upper, 2);
    assert!(r.notes.iter().any(|n| n.contains("not an antipodal")));
}

#[test]
fn rejected_inputs() {
    let g = hamming_graph(2, 3, 1).unwrap();
    let mut o = QBoundOptions::new();
    o.parity_families.push(("bogus".into(), 2, vec![0, 1]));
    o.matrices.push(("wrong pattern".into(), signed_adjacency_a(4, 2).unwrap()));
    let r = run("H(2,3)", &g, &o);
    assert!(r.notes.iter().any(|n| n.contains("bogus")));
    assert!(r.notes.iter().any(|n| n.contains("wrong pattern")));
    assert_eq!((r.lower, r.upper), (3, 3));
    let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert!(matches!(q_bounds("x", &two, &o, |s| sign_exhaust(s, 1)), Err(Error::NotConnected)));
}

#[test]
fn cited_bounds_do_not_move_the_interval() {
    let mut o = QBoundOptions::new();
    o.cited_upper.push(CitedBound { value: 2, source: "literature".into() });
    let r = run("Petersen", &kneser_graph(5, 2).unwrap(), &o);
    assert_eq!(r.upper, 3);
    assert_eq!(r.cited.len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lower_never_exceeds_upper(mask in any::<u32>(), n in 4usize..8) {
        let mut k = 0;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if k >= 32 || mask >> k & 1 == 1 || v == u + 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let r = q_bounds("random", &g, &QBoundOptions::new(), |s| sign_exhaust(s, 2)).unwrap();
        prop_assert!(1 <= r.lower && r.lower <= r.upper);
        if r.distance_regular {
            prop_assert!(r.upper <= r.diameter + 1);
        }
    }
}
