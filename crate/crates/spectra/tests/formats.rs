use proptest::prelude::*;
use spectra::bundle::Bundle;
use spectra::formats::*;
use spectra::graph6::{load_graph6, load_graph6_lines, save_graph6};
use spectra_core::graph::intersection_array;
use spectra_core::hamming::hypercube_signing;
use spectra_core::linalg::ratio;
use spectra_core::scheme::conjugacy_scheme;
use spectra_core::simplicial::SimplicialComplex;
use spectra_core::{ExactMatrix, Graph, Rational};

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

// strings produced by networkx.to_graph6_bytes
#[test]
fn graph6_matches_reference_encodings() {
    let petersen = Graph::new(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (6, 9), (6, 8), (5, 8)],
    )
    .unwrap();
    let path5 = Graph::new(5, (0..4).map(|i| (i, i + 1))).unwrap();
    let cases: Vec<(Graph, &str)> = vec![
        (petersen, "IheA@GUAo"),
        (cycle(5), "Dhc"),
        (Graph::from_fn(4, |_, _| true), "C~"),
        (path5, "DhC"),
        (Graph::new(1, []).unwrap(), "@"),
        (Graph::new(0, []).unwrap(), "?"),
    ];
    for (g, s) in cases {
        assert_eq!(save_graph6(&g), s.as_bytes());
        assert_eq!(load_graph6(s.as_bytes()).unwrap(), g);
    }
    let star = load_graph6(b"D?{").unwrap();
    assert_eq!(star.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
    assert_eq!(save_graph6(&star), b"D?{");
}

#[test]
fn graph6_long_form() {
    let g = cycle(70);
    let s = save_graph6(&g);
    assert!(s.starts_with(b"~?@E"));
    assert!(s.ends_with(b"@_??????????G"));
    assert_eq!(load_graph6(&s).unwrap(), g);
    let with_header = [b">>graph6<<".as_slice(), &s, b"\n"].concat();
    assert_eq!(load_graph6(&with_header).unwrap(), g);
}

#[test]
fn graph6_errors_carry_offsets() {
    let e = load_graph6(b"Dh").unwrap_err();
    assert_eq!(e.offset, 2);
    let e = load_graph6(b"Dh c").unwrap_err();
    assert_eq!(e.offset, 2);
    assert!(load_graph6(b"").is_err());
    assert!(load_graph6(b"Dhcc").is_err());
    // C5 with a padding bit set
    assert!(load_graph6(b"Dhd").is_err());
    let e = load_graph6_lines(b"Dhc\nC~\nDh\n").unwrap_err();
    assert_eq!(e.offset, 9);
    assert_eq!(load_graph6_lines(b"Dhc\nC~\n").unwrap().len(), 2);
}

#[test]
fn bundled_heawood_loads() {
    let b = Bundle::embedded().unwrap();
    let g = b.graph("heawood").unwrap();
    assert_eq!((g.n(), g.edge_count()), (14, 21));
    // degree count from the edge list, not the adjacency lists
    let mut deg = [0; 14];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    assert!(deg.iter().all(|&d| d == 3));
    let ia = intersection_array(&g).unwrap();
    assert_eq!((ia.b.clone(), ia.c.clone()), (vec![3, 2, 2], vec![1, 1, 3]));
}

#[test]
fn matrix_json_and_csv() {
    let m = ExactMatrix::from_rationals(2, 2, vec![ratio(1, 2), ratio(-3, 4), Rational::from_integer(7.into()), ratio(0, 1)])
        .unwrap();
    let text = matrix_to_json(&m);
    assert_eq!(text, r#"{"rows":2,"cols":2,"entries":[[1,2],[-3,4],[7,1],[0,1]]}"#);
    assert_eq!(matrix_from_json(&text).unwrap(), m);
    assert!(matrix_to_csv(&m).is_err());
    let big: Rational = "123456789012345678901234567890/11".parse().unwrap();
    let mb = ExactMatrix::from_rationals(1, 1, vec![big]).unwrap();
    let tb = matrix_to_json(&mb);
    assert!(tb.contains("\"123456789012345678901234567890\""));
    assert_eq!(matrix_from_json(&tb).unwrap(), mb);
    let h = hypercube_signing(3).unwrap();
    let csv = matrix_to_csv(&h).unwrap();
    assert_eq!(matrix_from_csv(&csv).unwrap(), h);
    assert!(matrix_from_csv("1,2\n3\n").is_err());
    assert!(matrix_from_csv("1/2,1\n").is_err());
    assert!(matrix_from_json(r#"{"rows":1,"cols":1,"entries":[[1,0]]}"#).is_err());
    assert!(matrix_from_json(r#"{"rows":1,"cols":2,"entries":[[1,1]]}"#).is_err());
}

#[test]
fn omzd_files_are_verified_on_load() {
    let c2 = r#"{"rows":2,"cols":2,"entries":[[0,1],[1,1],[1,1],[0,1]]}"#;
    assert!(omzd_from_json(c2).is_ok());
    let bad = r#"{"rows":2,"cols":2,"entries":[[1,1],[1,1],[1,1],[0,1]]}"#;
    assert!(omzd_from_json(bad).is_err());
}

#[test]
fn graph_and_complex_json() {
    let g = cycle(6);
    let j = serde_json::to_string(&GraphJson::from_graph(&g)).unwrap();
    assert_eq!(j, r#"{"n":6,"edges":[[0,1],[0,5],[1,2],[2,3],[3,4],[4,5]]}"#);
    let back: GraphJson = serde_json::from_str(&j).unwrap();
    assert_eq!(back.to_graph().unwrap(), g);
    let c = complex_from_json(r#"{"n":4,"facets":[[0,1,2],[2,3]]}"#).unwrap();
    assert_eq!(c, SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap());
    assert_eq!(c.faces(1).len(), 4);
    assert!(complex_from_json(r#"{"n":2,"facets":[[0,5]]}"#).is_err());
}

#[test]
fn bundled_groups_give_conjugacy_schemes() {
    let b = Bundle::embedded().unwrap();
    // (group, order, classes, exact non-linear characters, skipped)
    let expect = [("s3", 6, 3, 1, 0), ("s4", 24, 5, 3, 0), ("d4", 8, 5, 1, 0), ("d5", 10, 4, 0, 2), ("q8", 8, 5, 1, 0)];
    for (name, order, k, witnesses, skipped) in expect {
        let (g, chars) = b.group(name).unwrap();
        assert_eq!(g.order(), order, "{}", name);
        assert_eq!(chars.classes().len(), k, "{}", name);
        let cs = conjugacy_scheme(&g, &chars).unwrap();
        assert_eq!(cs.witnesses.len(), witnesses, "{}", name);
        assert_eq!(cs.skipped_irrational.len(), skipped, "{}", name);
        for (_, w) in &cs.witnesses {
            assert_eq!(w.matrix.mul(&w.matrix).unwrap(), w.matrix);
        }
    }
}

#[test]
fn character_values_parse() {
    let text = r#"{"order":2,"classes":[{"size":1,"name":"e"},{"size":1,"name":"g"}],"table":[[1,1],[1,"-1"]]}"#;
    let t = character_table_from_json(text).unwrap();
    assert_eq!(t.value(1, 1), Rational::from_integer((-1).into()));
    assert_eq!(t.classes()[1].representative, 1);
    let bad = r#"{"order":2,"classes":[{"size":1,"name":"e"},{"size":1,"name":"g"}],"table":[[1,1],[1,1]]}"#;
    assert!(character_table_from_json(bad).is_err());
    assert!(group_table_from_json("[[0,1],[1,1]]").is_err());
    assert!(group_table_from_json("[[0,1],[1,0]]").is_ok());
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..90).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut k = 0;
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip_keeps_edge_ids(g in graph_strategy()) {
        let bytes = save_graph6(&g);
        let h = load_graph6(&bytes).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(h.edge_id(u, v), Some(id));
        }
        prop_assert_eq!(save_graph6(&h), bytes);
    }

    #[test]
    fn truncation_is_an_error(g in graph_strategy(), cut in 1usize..4) {
        let bytes = save_graph6(&g);
        prop_assume!(bytes.len() > cut && g.n() >= 2);
        let short = &bytes[..bytes.len() - cut];
        let e = load_graph6(short);
        prop_assert!(e.is_err());
    }

    #[test]
    fn matrix_json_roundtrip(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec((-1000i64..1000, 1i64..50), 25)) {
        let entries: Vec<Rational> = seed.iter().take(rows * cols).map(|&(p, q)| ratio(p, q)).collect();
        let m = ExactMatrix::from_rationals(rows, cols, entries).unwrap();
        let text = matrix_to_json(&m);
        prop_assert_eq!(matrix_from_json(&text).unwrap(), m.clone());
        prop_assert_eq!(matrix_to_json(&matrix_from_json(&text).unwrap()), text);
    }

    #[test]
    fn csv_roundtrip(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-99i64..99, 36)) {
        let m = ExactMatrix::from_i64(rows, cols, seed[..rows * cols].to_vec()).unwrap();
        let text = matrix_to_csv(&m).unwrap();
        prop_assert_eq!(matrix_from_csv(&text).unwrap(), m);
    }
}
