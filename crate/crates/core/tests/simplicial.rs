use proptest::prelude::*;
use spectra_core::graph::{complement, find_isomorphism, is_isomorphism, Graph};
use spectra_core::hamming::hamming_graph;
use spectra_core::johnson::{johnson_graph, JohnsonIndex};
use spectra_core::linalg::{annihilator_check_int, charpoly, is_positive_semidefinite, minimal_polynomial_degree, ExactMatrix, Poly};
use spectra_core::simplicial::*;

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn k3x2() -> Graph {
    // octahedron: parts {0,1}, {2,3}, {4,5}
    Graph::from_fn(6, |a, b| a / 2 != b / 2)
}

#[test]
fn clique_complex_examples() {
    let k3 = Graph::from_fn(3, |_, _| true);
    let c = clique_complex(&k3).unwrap();
    assert_eq!(c.dim(), Some(2));
    assert_eq!((c.faces(0).len(), c.faces(1).len(), c.faces(2).len()), (3, 3, 1));
    let c = clique_complex(&k3x2()).unwrap();
    assert_eq!(c.dim(), Some(2));
    assert_eq!(c.faces(2).len(), 8);
    // lexicographic within each dimension
    assert!(c.faces(1).windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn matching_and_independence() {
    let c4 = cycle(4);
    let m = matching_complex(&c4).unwrap();
    assert_eq!(m.faces(0).len(), 4);
    assert_eq!(m.faces(1).len(), 2);
    assert_eq!(m.dim(), Some(1));
    let ind = independence_complex(&c4).unwrap();
    assert_eq!(ind.faces(1), &[vec![0, 2], vec![1, 3]]);
}

#[test]
fn downward_closure_is_enforced() {
    assert!(SimplicialComplex::new(3, vec![vec![0, 1]]).is_err());
    assert!(SimplicialComplex::new(3, vec![vec![0], vec![1], vec![0, 1]]).is_ok());
    assert!(SimplicialComplex::new(2, vec![vec![5]]).is_err());
    let c = SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap();
    assert_eq!(c.face_count(), 7 + 2);
}

#[test]
fn boundary_columns_alternate() {
    let c = SimplicialComplex::power_set(5).unwrap();
    for d in 1..=4 {
        let w = c.boundary(d).unwrap();
        for col in 0..w.cols() {
            let nz: Vec<i64> = (0..w.rows()).filter_map(|r| w.get_i64(r, col).filter(|&v| v != 0)).collect();
            assert_eq!(nz.len(), d + 1);
        }
        // chain identity
        if d < 4 {
            assert!(w.mul(&c.boundary(d + 1).unwrap()).unwrap().is_zero());
        }
    }
    assert!(c.boundary(0).unwrap().mul(&c.boundary(1).unwrap()).unwrap().is_zero());
}

#[test]
fn power_set_laplacians() {
    for n in 2..=6 {
        let c = SimplicialComplex::power_set(n).unwrap();
        let ni = n as i64;
        for d in 0..n {
            let down = c.down_laplacian(d).unwrap();
            assert!(annihilator_check_int(&down, &[0, ni]).unwrap(), "n={} d={}", n, d);
            assert!((0..down.rows()).all(|i| down.get_i64(i, i) == Some(d as i64 + 1)));
            if d + 1 < n {
                let up = c.up_laplacian(d).unwrap();
                assert!(annihilator_check_int(&up, &[0, ni]).unwrap());
                let sum = down.add(&up).unwrap();
                assert_eq!(sum, ExactMatrix::identity(sum.rows()).unwrap().scale_int(ni));
            }
        }
    }
}

#[test]
fn graph_laplacian_of_c4() {
    // the 1-skeleton of C4 as a complex
    let c = clique_complex(&cycle(4)).unwrap();
    let l = c.up_laplacian(0).unwrap();
    let expected = ExactMatrix::from_i64(4, 4, vec![2, -1, 0, -1, -1, 2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2]).unwrap();
    assert_eq!(l, expected);
    // x(x − 2)²(x − 4)
    let target = Poly::from_ints(&[0, -16, 20, -8, 1]);
    assert_eq!(charpoly(&l).unwrap(), target);
}

#[test]
fn derived_graphs_of_power_set_are_johnson() {
    for n in 3..=6 {
        let c = SimplicialComplex::power_set(n).unwrap();
        for d in 0..n - 1 {
            let idx = JohnsonIndex::new(n, d + 1).unwrap();
            // face (0-based vertices) ↦ word with ones at positions v + 1
            let map: Vec<usize> = c.faces(d).iter().map(|f| idx.index_of(&f.iter().map(|v| v + 1).collect::<Vec<_>>())).collect();
            let j = johnson_graph(n, d + 1, 1).unwrap();
            if d + 1 < n {
                assert!(is_isomorphism(&c.derived_graph_down(d).unwrap(), &j, &map), "down n={} d={}", n, d);
                assert!(is_isomorphism(&c.derived_graph_up(d).unwrap(), &j, &map), "up n={} d={}", n, d);
            }
        }
    }
}

#[test]
fn octahedron_top_faces_form_a_cube() {
    let c = clique_complex(&k3x2()).unwrap();
    let g = c.derived_graph_down(2).unwrap();
    let cube = hamming_graph(3, 2, 1).unwrap();
    let f = find_isomorphism(&g, &cube).expect("isomorphic to the 3-cube");
    assert!(is_isomorphism(&g, &cube, &f));
}

#[test]
fn signed_variant_two_eigenvalues() {
    let c = SimplicialComplex::power_set(4).unwrap();
    let s = signed_variant(&c.up_laplacian(0).unwrap()).unwrap();
    assert!((0..4).all(|i| !s.is_nonzero_at(i, i)));
    assert_eq!(minimal_polynomial_degree(&s, 4).unwrap().degree(), Some(2));
}

#[test]
fn isomorphism_rejects() {
    let p = cycle(5);
    let k = complement(&p);
    assert!(find_isomorphism(&p, &k).is_some()); // C5 is self-complementary
    let path = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]).unwrap();
    assert!(find_isomorphism(&p, &path).is_none());
}

fn random_graph(n: usize, bits: u64) -> Graph {
    let mut k = 0;
    Graph::from_fn(n, |_, _| {
        k += 1;
        bits >> (k % 64) & 1 == 1
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laplacians_are_psd_and_chain(n in 3usize..=7, bits in any::<u64>()) {
        let g = random_graph(n, bits);
        let c = clique_complex(&g).unwrap();
        let top = match c.dim() { Some(t) => t, None => return Ok(()) };
        for d in 0..=top {
            let down = c.down_laplacian(d).unwrap();
            prop_assert!(is_positive_semidefinite(&down).unwrap());
            prop_assert!((0..down.rows()).all(|i| down.get_i64(i, i) == Some(d as i64 + 1)));
            if d < top {
                prop_assert!(is_positive_semidefinite(&c.up_laplacian(d).unwrap()).unwrap());
                prop_assert!(c.boundary(d).unwrap().mul(&c.boundary(d + 1).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn independence_is_clique_of_complement(n in 2usize..=7, bits in any::<u64>()) {
        let g = random_graph(n, bits);
        let a = independence_complex(&g).unwrap();
        let b = clique_complex(&complement(&g)).unwrap();
        prop_assert_eq!(a, b);
    }
}
