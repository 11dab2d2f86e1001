use proptest::prelude::*;
use spectra_core::graph::{intersection_array, tensor_product, Graph, IntersectionArray};
use spectra_core::hamming::*;
use spectra_core::linalg::{int, minimal_polynomial_degree, ExactMatrix};
use spectra_core::Error;

#[test]
fn hamming_graph_examples() {
    let c4 = hamming_graph(2, 2, 1).unwrap();
    assert_eq!(c4.edges(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    let rook = hamming_graph(2, 3, 1).unwrap();
    assert_eq!(intersection_array(&rook), Some(IntersectionArray::new(vec![4, 2], vec![1, 2])));
    let m = hamming_graph(3, 2, 3).unwrap();
    assert_eq!(m.edges(), &[(0, 7), (1, 6), (2, 5), (3, 4)]);
    assert!(hamming_graph(3, 2, 4).is_err());
    assert_eq!(rook.labels().unwrap()[5], "12");
}

#[test]
fn hypercube_signing_squares() {
    for d in 1..=10 {
        let m = hypercube_signing(d).unwrap();
        assert_eq!(m.mul(&m).unwrap(), ExactMatrix::identity(1 << d).unwrap().scale_int(d as i64));
        assert_eq!(m.trace(), int(0));
        assert!(hamming_graph(d, 2, 1).unwrap().matches_support(&m));
    }
}

#[test]
fn b_star_listing() {
    let l = b_star_labels(3);
    let expected = ["00*", "01*", "0*0", "0*1", "10*", "11*", "1*0", "1*1", "*00", "*01", "*10", "*11"];
    assert_eq!(l, expected);
    // lexicographic with 0 < 1 < *
    let key = |s: &String| s.chars().map(|c| match c { '0' => 0, '1' => 1, _ => 2 }).collect::<Vec<u8>>();
    for d in 1..=6 {
        let l = b_star_labels(d);
        assert_eq!(l.len(), d << (d - 1));
        assert!(l.windows(2).all(|w| key(&w[0]) < key(&w[1])));
    }
}

// E_d straight from the labels: the row of edge e has −1/+1 style entries on
// its two endpoints. Only the support is checked this way; signs come from
// the recursion identities below.
#[test]
fn boundary_pair_support_follows_labels() {
    for d in 1..=6 {
        let (e, f) = clique_boundary_pair(d).unwrap();
        let labels = b_star_labels(d);
        for (r, l) in labels.iter().enumerate() {
            let ends: Vec<usize> = ['0', '1']
                .iter()
                .map(|&c| usize::from_str_radix(&l.replace('*', &c.to_string()), 2).unwrap())
                .collect();
            for v in 0..1usize << d {
                let on = ends.contains(&v);
                assert_eq!(e.is_nonzero_at(r, v), on, "E d={} row {}", d, l);
                assert_eq!(f.is_nonzero_at(r, v), on, "F d={} row {}", d, l);
            }
        }
    }
}

#[test]
fn boundary_pair_identities() {
    for d in 1..=8 {
        let (e, f) = clique_boundary_pair(d).unwrap();
        let m = hypercube_signing(d).unwrap();
        let di = d as i64;
        let ete = e.transpose().mul(&e).unwrap().add_identity_int(-di).unwrap();
        let ftf = f.transpose().mul(&f).unwrap().add_identity_int(-di).unwrap();
        assert_eq!(ete, m, "d={}", d);
        assert_eq!(ftf, m.scale_int(-1), "d={}", d);
    }
    for d in 2..=4 {
        let (e, _) = clique_boundary_pair(d).unwrap();
        let line = e.mul(&e.transpose()).unwrap().add_identity_int(-2).unwrap();
        let deg = minimal_polynomial_degree(&line, 8).unwrap().degree().unwrap();
        assert!(deg <= 3, "d={} degree {}", d, deg);
    }
}

#[test]
fn omzd_registry() {
    assert_eq!(omzd(2).unwrap().weight, int(1));
    let six = omzd(6).unwrap();
    assert_eq!(six.weight, int(5));
    assert_eq!(six.provenance, Provenance::Constructed);
    for n in [10, 14, 18, 26, 30, 38, 42, 50] {
        let e = omzd(n).unwrap();
        assert_eq!(e.weight, int(n as i64 - 1), "n={}", n);
        assert_eq!(verify_omzd(&e.matrix).unwrap(), int(n as i64 - 1));
    }
    assert!(matches!(omzd(4), Err(Error::Nonexistent(4))));
    assert!(matches!(omzd(7), Err(Error::Nonexistent(7))));
    assert!(matches!(omzd(8), Err(Error::Unavailable(8))));
    assert!(matches!(omzd(22), Err(Error::Unavailable(22))));
}

fn omzd8() -> ExactMatrix {
    // [[J − I, J − 3I], [J − 3I, I − J]]
    let j = ExactMatrix::ones(4, 4).unwrap();
    let x = j.add_identity_int(-1).unwrap();
    let y = j.add_identity_int(-3).unwrap();
    ExactMatrix::block(&[&[&x, &y], &[&y, &x.scale_int(-1)]]).unwrap()
}

#[test]
fn omzd_ingestion_is_verified() {
    let e = omzd_with_data(8, Some(&omzd8())).unwrap();
    assert_eq!(e.weight, int(10));
    assert_eq!(e.provenance, Provenance::Ingested);
    let bad = ExactMatrix::identity(8).unwrap();
    assert!(matches!(omzd_with_data(8, Some(&bad)), Err(Error::NotOmzd(_))));
    let c = omzd(6).unwrap().matrix;
    assert!(matches!(omzd_with_data(8, Some(&c)), Err(Error::NotOmzd(_))));
    let mut asym = omzd8().to_i64_vec().unwrap();
    asym[1] = 2;
    assert!(verify_omzd(&ExactMatrix::from_i64(8, 8, asym).unwrap()).is_err());
    // ingested data never overrides a constructible order
    assert_eq!(omzd_with_data(6, Some(&omzd8())).unwrap().provenance, Provenance::Constructed);
}

#[test]
fn tensor_with_ingested_factor() {
    let t = tensor_signing_with(&[8, 6], |n| if n == 8 { omzd_with_data(8, Some(&omzd8())) } else { omzd(n) }).unwrap();
    assert!(t.square_verified && t.support_verified);
    assert_eq!(t.weight, int(50));
}

#[test]
fn tensor_signings() {
    let t = tensor_signing(&[6, 6]).unwrap();
    assert!(t.square_verified && t.support_verified);
    assert_eq!(t.weight, int(25));
    assert!(hamming_graph(2, 6, 2).unwrap().matches_support(&t.matrix));
    let t = tensor_signing(&[2, 2]).unwrap();
    assert_eq!(t.weight, int(1));
    assert!(t.square_verified);
    let t = tensor_signing(&[2, 6]).unwrap();
    assert_eq!(t.weight, int(5));
    let k2 = Graph::from_fn(2, |_, _| true);
    let k6 = Graph::from_fn(6, |_, _| true);
    assert!(tensor_product(&k2, &k6).matches_support(&t.matrix));
    assert!(tensor_signing(&[6, 4]).is_err());
}

// ζ by brute force over words: Σ_{|x| ≡ t} Σ_{|y| = j} (−1)^{x·y}.
fn zeta_words(d: u32, j: u32, t: u32) -> i128 {
    let mut total = 0i128;
    for x in 0u32..1 << d {
        if x.count_ones() % 3 != t {
            continue;
        }
        for y in 0u32..1 << d {
            if y.count_ones() == j {
                total += if (x & y).count_ones() % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    total
}

#[test]
fn zeta_examples() {
    assert_eq!(zeta(3, 1, 0).unwrap().value, 0);
    assert_eq!(zeta(4, 0, 1).unwrap().value, 5);
    assert_eq!(zeta(3, 0, 0).unwrap().value, 2);
    assert!(zeta(2, 0, 0).is_err());
}

#[test]
fn zeta_all_cases_against_word_count() {
    let mut count = 0;
    for d in 3..=12 {
        for j in 0..=11 {
            for t in 0..=2 {
                let z = zeta(d, j, t).unwrap();
                assert_eq!(z.value as i128, zeta_words(d, j, t), "d={} j={} t={}", d, j, t);
                count += 1;
            }
        }
    }
    assert_eq!(count, 360);
}

proptest! {
    #[test]
    fn hamming_index_roundtrip(d in 1usize..6, n in 2usize..6, seed in any::<usize>()) {
        let idx = HammingIndex::new(d, n).unwrap();
        let k = seed % idx.len();
        prop_assert_eq!(idx.index_of(&idx.word(k)), k);
    }

    #[test]
    fn zeta_direct_matches_closed(d in 3u32..=40, j in 0u32..=45, t in 0u32..3) {
        prop_assert_eq!(zeta_direct(d, j, t), zeta_closed(d, j, t).1);
    }

    #[test]
    fn paley_entries_are_omzd(k in 0usize..8) {
        let n = [6, 10, 14, 18, 26, 30, 38, 42][k];
        let e = omzd(n).unwrap();
        prop_assert!(e.matrix.is_symmetric());
        prop_assert_eq!(verify_omzd(&e.matrix).unwrap(), int(n as i64 - 1));
    }
}
