//! Properties that cut across modules and were not pinned down elsewhere.

use std::path::Path;

use proptest::prelude::*;
use spectra_core::bounds::{QBoundOptions, DEFAULT_SIGN_VARIABLE_CAP};
use spectra_core::codes::{cell_roles, table2_report};
use spectra_core::combinatorics::binom;
use spectra_core::graph::{antipodal_fold, distance_data};
use spectra_core::hamming::hamming_graph;
use spectra_core::johnson::*;
use spectra_core::linalg::{int, rank_mod_p, rank_rational, PrimeFieldMatrix};
use spectra_core::obstruction::{parity_certificate, phi, unique_path_rule, Witness};
use spectra_core::scheme::{hamming_eigenmatrix, idempotent_ei, johnson_eigenmatrix, scheme_from_graph};
use spectra_core::simplicial::SimplicialComplex;
use spectra_core::{ExactMatrix, Graph};

#[test]
fn boundary_rank_is_binomial() {
    for n in 1..=9 {
        for d in 0..n {
            assert_eq!(rank_rational(&boundary_w(n, d).unwrap()), binom(n - 1, d), "n={} d={}", n, d);
        }
    }
}

#[test]
fn boundary_columns_are_eigenvectors() {
    for n in 3..=9 {
        for d in 1..n {
            let a = signed_adjacency_a(n, d).unwrap();
            let w = boundary_w(n, d).unwrap();
            assert_eq!(a.mul(&w).unwrap(), w.scale_int(-(d as i64)), "A W n={} d={}", n, d);
            let wl = boundary_w(n, d - 1).unwrap().transpose();
            assert_eq!(a.mul(&wl).unwrap(), wl.scale_int((n - d) as i64), "A Wᵀ n={} d={}", n, d);
        }
    }
}

#[test]
fn degree_profile_matches_direct_count_up_to_300() {
    let mut pairs = 0;
    for n in 2..=300 {
        for d in 1..n {
            if spectra_core::combinatorics::binomial(n as u64, d as u64).map_or(true, |b| b > 300) {
                continue;
            }
            pairs += 1;
            // signs read off the rows of A_{n,d}
            let a = signed_adjacency_a(n, d).unwrap();
            let size = a.rows();
            let row = a.to_i64_vec().unwrap();
            for (k, p) in degree_profiles(n, d).unwrap().iter().enumerate() {
                let r = &row[k * size..(k + 1) * size];
                let plus = r.iter().filter(|&&x| x == 1).count();
                let minus = r.iter().filter(|&&x| x == -1).count();
                assert_eq!((p.k_plus, p.k_minus), (plus, minus), "n={} d={} vertex {}", n, d, k);
            }
        }
    }
    assert!(pairs > 500);
}

#[test]
fn h_value_counts_shared_ones_strictly_between() {
    let w = |s: &str| BinaryWord::parse(s).unwrap();
    assert_eq!(h_value(&w("110100"), &w("011100")), 1);
    assert_eq!(h_value(&w("101101"), &w("001111")), 2);
    assert_eq!(h_value(&w("1100"), &w("0110")), 1);
    assert_eq!(h_value(&w("1100"), &w("1010")), 0);
}

#[test]
fn family_builders_fail_fast_on_size() {
    assert!(signed_adjacency_a(30, 15).is_err());
    assert!(boundary_w(40, 20).is_err());
    assert!(hamming_graph(2, 1, 1).is_err());
}

#[test]
fn covers_with_larger_fibers_are_rejected() {
    // K_{3,3,3}: antipodal classes of size three
    let k333 = Graph::from_fn(9, |a, b| a / 3 != b / 3);
    assert_eq!(distance_data(&k333).unwrap().diameter(), 2);
    assert!(antipodal_fold(&k333).is_none());
    let c9 = Graph::new(9, (0..9).map(|i| (i, (i + 1) % 9))).unwrap();
    assert!(antipodal_fold(&c9).is_none());
}

#[test]
fn mixed_size_systems_are_filtered() {
    // H(2,3) with a pendant vertex: distance-2 pairs through the pendant have
    // a single path, the rest two
    let h = hamming_graph(2, 3, 1).unwrap();
    let g = Graph::new(10, h.edges().iter().copied().chain([(0, 9)])).unwrap();
    let sys = phi(&g, 2).unwrap();
    let sizes: std::collections::BTreeSet<usize> = sys.polynomials.iter().map(|p| p.monomials.len()).collect();
    assert!(sizes.contains(&1) && sizes.contains(&2));
    let c = parity_certificate(&sys).unwrap().expect("binomial sub-family still certifies");
    let Witness::PolynomialIndices(f) = c.witness else { panic!() };
    assert!(f.iter().all(|&i| sys.polynomials[i].is_coprime_binomial()));
}

#[test]
fn self_orthogonal_rows_have_weight_zero_mod_3() {
    for (n, d) in [(3, 1), (3, 2), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)] {
        let r = table2_report(n, d).unwrap();
        let (special, _, _) = cell_roles(n % 3, d % 3);
        let code = r.code(special);
        assert!(code.is_self_orthogonal().unwrap(), "({},{})", n, d);
        let b = code.basis();
        for i in 0..b.rows() {
            assert_eq!(b.row(i).iter().filter(|&&x| x != 0).count() % 3, 0, "({},{}) row {}", n, d, i);
        }
    }
}

#[test]
fn multiplicities_are_traces() {
    for (n, d) in [(5, 2), (6, 3), (7, 2)] {
        let s = scheme_from_graph(&johnson_graph(n, d, 1).unwrap()).unwrap();
        let e = johnson_eigenmatrix(n, d).unwrap();
        for i in 0..=s.classes() {
            let w = idempotent_ei(&s, &e, &[i]).unwrap();
            assert_eq!(w.matrix.trace(), int(e.multiplicities[i] as i64));
        }
    }
    let s = scheme_from_graph(&hamming_graph(3, 3, 1).unwrap()).unwrap();
    let e = hamming_eigenmatrix(3, 3).unwrap();
    for i in 0..=3 {
        assert_eq!(idempotent_ei(&s, &e, &[i]).unwrap().matrix.trace(), int(e.multiplicities[i] as i64));
    }
}

#[test]
fn lowest_boundary_is_all_ones() {
    for n in 1..=6 {
        let c = SimplicialComplex::power_set(n).unwrap();
        assert_eq!(c.boundary(0).unwrap(), ExactMatrix::ones(1, n).unwrap());
    }
}

#[test]
fn sign_search_default_cap() {
    assert_eq!(DEFAULT_SIGN_VARIABLE_CAP, 24);
    assert_eq!(QBoundOptions::new().sign_variable_cap, 24);
}

// no f32/f64 anywhere in the library sources
#[test]
fn no_floating_point_in_core() {
    fn walk(dir: &Path, out: &mut Vec<(String, String)>) {
        for e in std::fs::read_dir(dir).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                walk(&p, out);
            } else if p.extension().is_some_and(|x| x == "rs") {
                out.push((p.display().to_string(), std::fs::read_to_string(&p).unwrap()));
            }
        }
    }
    let mut files = Vec::new();
    walk(&Path::new(env!("CARGO_MANIFEST_DIR")).join("src"), &mut files);
    assert!(files.len() > 10);
    for (name, text) in files {
        for tok in text.split(|c: char| !c.is_alphanumeric() && c != '_') {
            assert!(tok != "f32" && tok != "f64", "{} uses {}", name, tok);
        }
    }
}

fn random_connected(n: usize, bits: u64) -> Graph {
    let mut k = 0;
    Graph::from_fn(n, |a, b| {
        k += 1;
        b == a + 1 || bits >> (k % 64) & 1 == 1
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unique_path_bound_at_most_diameter_plus_one(n in 2usize..=12, bits in any::<u64>()) {
        let g = random_connected(n, bits);
        let diam = distance_data(&g).unwrap().diameter();
        if let Some(c) = unique_path_rule(&g) {
            prop_assert!(c.bound <= diam + 1);
        }
    }

    // pivots are the greedy first independent columns
    #[test]
    fn pivots_are_leftmost(entries in proptest::collection::vec(0u32..3, 20)) {
        let m = PrimeFieldMatrix::new(3, 4, 5, entries).unwrap();
        let (_, pivots) = m.rref();
        let mut greedy = Vec::new();
        for c in 0..5 {
            let mut cols = greedy.clone();
            cols.push(c);
            let sub = PrimeFieldMatrix::new(3, 4, cols.len(), (0..4).flat_map(|r| cols.iter().map(move |&k| (r, k))).map(|(r, k)| m.get(r, k)).collect()).unwrap();
            if rank_mod_p(&sub) == cols.len() {
                greedy.push(c);
            }
        }
        prop_assert_eq!(pivots, greedy);
    }
}
