use proptest::prelude::*;
use spectra_core::combinatorics::binom;
use spectra_core::johnson::*;
use spectra_core::linalg::{annihilator_check_int, rank_rational};
use spectra_core::ExactMatrix;

// Independent oracle: words as bitmasks, listed by decreasing value.
fn words(n: usize, d: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..1u32 << n).filter(|w| w.count_ones() as usize == d).collect();
    v.reverse();
    v
}

fn w_oracle(n: usize, d: usize) -> ExactMatrix {
    let (r, c) = (words(n, d), words(n, d + 1));
    ExactMatrix::from_fn(r.len(), c.len(), |i, j| {
        let (a, b) = (r[i], c[j]);
        if a & b != a {
            return 0;
        }
        let removed = b ^ a;
        let below = (b & (removed - 1)).count_ones();
        if below % 2 == 0 { 1 } else { -1 }
    })
    .unwrap()
}

fn a_oracle(n: usize, d: usize) -> ExactMatrix {
    let ws = words(n, d);
    ExactMatrix::from_fn(ws.len(), ws.len(), |i, j| {
        let (a, b) = (ws[i], ws[j]);
        if (a ^ b).count_ones() != 2 {
            return 0;
        }
        let diff = a ^ b;
        let lo = diff.trailing_zeros();
        let hi = 31 - diff.leading_zeros();
        let between = ((1u32 << hi) - 1) & !((1u32 << (lo + 1)) - 1);
        if (a & b & between).count_ones() % 2 == 0 { 1 } else { -1 }
    })
    .unwrap()
}

#[test]
fn word_display_and_sets() {
    let w = BinaryWord::parse("0110").unwrap();
    assert_eq!(w.x(), &[2, 3]);
    assert_eq!(w.z(), vec![1, 4]);
    assert_eq!(w.gaps(), vec![vec![1], vec![], vec![4]]);
    assert_eq!(w.to_string(), "0110");
    assert!(BinaryWord::parse("01a0").is_err());
}

#[test]
fn index_order_is_decreasing_value() {
    for n in 1..=8 {
        for d in 0..=n {
            let idx = JohnsonIndex::new(n, d).unwrap();
            let oracle = words(n, d);
            assert_eq!(idx.len(), oracle.len());
            for (k, w) in idx.words().iter().enumerate() {
                let mask: u32 = w.x().iter().map(|p| 1u32 << (p - 1)).sum();
                assert_eq!(mask, oracle[k]);
                assert_eq!(idx.index_of(w.x()), k);
            }
        }
    }
}

#[test]
fn boundary_matches_oracle() {
    for n in 1..=8 {
        for d in 0..n {
            assert_eq!(boundary_w(n, d).unwrap(), w_oracle(n, d), "n={} d={}", n, d);
        }
    }
    assert!(boundary_w(4, 4).is_err());
}

#[test]
fn boundary_block_recursion() {
    for n in 3..=8 {
        for d in 1..=n - 2 {
            let w = boundary_w(n, d).unwrap();
            let top = boundary_w(n - 1, d - 1).unwrap();
            let bottom = boundary_w(n - 1, d).unwrap();
            let zero = ExactMatrix::zeros(top.rows(), bottom.cols()).unwrap();
            let sign = if d % 2 == 0 { 1 } else { -1 };
            let id = ExactMatrix::identity(bottom.rows()).unwrap().scale_int(sign);
            let expected = ExactMatrix::block(&[&[&top, &zero], &[&id, &bottom]]).unwrap();
            assert_eq!(w, expected, "n={} d={}", n, d);
        }
    }
}

#[test]
fn boundary_base_cases() {
    for n in 1..=7 {
        assert_eq!(boundary_w(n, 0).unwrap(), ExactMatrix::ones(1, n).unwrap());
    }
    for d in 0..=6 {
        let w = boundary_w(d + 1, d).unwrap();
        let alt = ExactMatrix::from_fn(d + 1, 1, |i, _| if i % 2 == 0 { 1 } else { -1 }).unwrap();
        assert_eq!(w, alt);
    }
}

#[test]
fn signed_adjacency_matches_oracle() {
    for n in 2..=8 {
        for d in 1..n {
            let a = signed_adjacency_a(n, d).unwrap();
            assert_eq!(a, a_oracle(n, d), "n={} d={}", n, d);
            assert!(a.is_symmetric());
        }
    }
}

#[test]
fn laplacian_pair_and_block_forms() {
    for n in 3..=8 {
        for d in 1..n {
            let (q, p) = laplacian_pair(n, d).unwrap();
            let a = signed_adjacency_a(n, d).unwrap();
            assert_eq!(q.sub(&a).unwrap(), ExactMatrix::identity(a.rows()).unwrap().scale_int(d as i64));
            if d >= 2 && n >= d + 2 {
                let w = boundary_w(n - 1, d - 1).unwrap();
                let s = if (d - 1) % 2 == 0 { 1 } else { -1 };
                let ws = w.scale_int(s);
                let expected = ExactMatrix::block(&[
                    &[&signed_adjacency_a(n - 1, d - 1).unwrap(), &ws],
                    &[&ws.transpose(), &signed_adjacency_a(n - 1, d).unwrap()],
                ])
                .unwrap();
                assert_eq!(a, expected, "A block form n={} d={}", n, d);
                let pp = ExactMatrix::block(&[
                    &[&up_laplacian_p(n - 1, d - 1).unwrap(), &ws.scale_int(-1)],
                    &[&ws.transpose().scale_int(-1), &up_laplacian_p(n - 1, d).unwrap().add_identity_int(1).unwrap()],
                ])
                .unwrap();
                assert_eq!(p, pp, "P block form n={} d={}", n, d);
            }
        }
    }
}

#[test]
fn small_cases_of_p_and_a() {
    for n in 2..=7 {
        let p = up_laplacian_p(n, 1).unwrap();
        let j = ExactMatrix::ones(n, n).unwrap();
        assert_eq!(p, ExactMatrix::identity(n).unwrap().scale_int(n as i64).sub(&j).unwrap());
        assert_eq!(signed_adjacency_a(n, 1).unwrap(), j.add_identity_int(-1).unwrap());
    }
    for d in 1..=6 {
        let alt = ExactMatrix::from_fn(d + 1, d + 1, |i, j| if (i + j) % 2 == 0 { 1 } else { -1 }).unwrap();
        assert_eq!(up_laplacian_p(d + 1, d).unwrap(), alt);
        let a = ExactMatrix::identity(d + 1).unwrap().sub(&alt).unwrap();
        assert_eq!(signed_adjacency_a(d + 1, d).unwrap(), a);
    }
}

#[test]
fn two_eigenvalues_and_rank() {
    for n in 3..=9 {
        for d in 1..n {
            let a = signed_adjacency_a(n, d).unwrap();
            let (di, ni) = (d as i64, n as i64);
            assert!(annihilator_check_int(&a, &[-di, ni - di]).unwrap());
            assert_eq!(rank_rational(&a.add_identity_int(di).unwrap()), binom(n - 1, d - 1));
        }
    }
}

#[test]
fn psd_witness_identities() {
    for n in 4..=9 {
        for d in 2..n {
            let r = psd_witness_r(n, d).unwrap();
            let nm = (n * (n - 1)) as i64;
            assert!(annihilator_check_int(&r, &[0, nm]).unwrap(), "n={} d={}", n, d);
            assert_eq!(rank_rational(&r), binom(n - 2, d - 1));
            assert!(johnson_graph(n, d, 1).unwrap().matches_support(&r));
            if d + 1 < n {
                let p = up_laplacian_p(n - 1, d - 1).unwrap();
                let w = boundary_w(n - 1, d - 1).unwrap();
                let k = (n - 1) as i64;
                let lower = up_laplacian_p(n - 1, d).unwrap().scale_int(-1).add_identity_int(k).unwrap();
                let expected = ExactMatrix::block(&[
                    &[&p.scale_int(k), &w.scale_int(k)],
                    &[&w.transpose().scale_int(k), &lower],
                ])
                .unwrap();
                assert_eq!(r, expected);
            }
        }
    }
}

#[test]
fn degree_profile_examples() {
    let w = BinaryWord::parse("0110").unwrap();
    let p = degree_profile(4, 2, &w).unwrap();
    // gaps {1}, {}, {4}: r = 0
    assert_eq!((p.k_plus, p.k_minus, p.r_value, p.s_value), (2, 2, 0, 2));
    let w = BinaryWord::parse("1010").unwrap();
    let p = degree_profile(4, 2, &w).unwrap();
    assert_eq!((p.k_plus, p.k_minus, p.r_value), (3, 1, 1));
    assert!(degree_profile(4, 3, &w).is_err());
}

#[test]
fn weighing_matrices() {
    for d in 1..=5 {
        let c = weighing_check(d).unwrap();
        assert!(c.verified, "d={}", d);
        assert_eq!(c.order, binom(2 * d, d));
        assert_eq!(c.weight, d * d);
    }
}

#[test]
fn frames_are_tight() {
    for n in 4..=9 {
        for d in 2..=n / 2 {
            let f = frame_vectors(n, d).unwrap();
            assert!(f.gram_identity && f.tight && f.johnson_support, "n={} d={}", n, d);
            assert_eq!(f.frame_rank, binom(n - 2, d - 1));
            assert_eq!(f.vectors.cols(), binom(n, d));
        }
    }
    assert!(frame_vectors(5, 3).is_err());
}

#[test]
fn johnson_and_kneser_graphs() {
    let g = johnson_graph(5, 2, 1).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g.regularity(), Some(6));
    let k = kneser_graph(5, 2).unwrap();
    assert_eq!(k.regularity(), Some(3));
    assert_eq!(k.edge_count(), 15);
    let k73 = kneser_graph(7, 3).unwrap();
    assert_eq!((k73.n(), k73.regularity()), (35, Some(4)));
}

#[test]
fn claims_all_hold() {
    for (n, d) in [(4, 2), (5, 2), (6, 3), (7, 3), (7, 5), (8, 1)] {
        for c in johnson_claims(n, d).unwrap() {
            assert!(c.verified, "n={} d={}: {}", n, d, c.name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_profile_closed_form(n in 2usize..=11, seed in any::<u64>()) {
        let d = 1 + (seed as usize) % (n - 1);
        let idx = JohnsonIndex::new(n, d).unwrap();
        let k = (seed >> 16) as usize % idx.len();
        let w = idx.word(k).clone();
        let p = degree_profile(n, d, &w).unwrap();
        prop_assert_eq!(p.k_plus + p.k_minus, d * (n - d));
        prop_assert_eq!(p.r_value + p.s_value, n - d);
    }

    #[test]
    fn word_roundtrip(bits in proptest::collection::vec(any::<bool>(), 1..20)) {
        let s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        let w = BinaryWord::parse(&s).unwrap();
        prop_assert_eq!(w.to_string(), s);
        prop_assert_eq!(w.weight(), bits.iter().filter(|&&b| b).count());
    }

    #[test]
    fn boundary_squares_to_zero(n in 2usize..=8, d0 in 0usize..8) {
        let d = d0 % (n - 1);
        let a = boundary_w(n, d).unwrap();
        let b = boundary_w(n, d + 1).unwrap();
        prop_assert!(a.mul(&b).unwrap().is_zero());
    }
}

#[test]
fn forcing_candidates_force() {
    use spectra_core::graph::{is_forcing_set, zero_forcing_number_exhaustive, ZeroForcing};
    let g = johnson_graph(4, 2, 1).unwrap();
    match zero_forcing_number_exhaustive(&g, 12) {
        ZeroForcing::Number { z, witness } => {
            assert_eq!(z, 4);
            assert!(is_forcing_set(&g, &witness));
        }
        other => panic!("{:?}", other),
    }
    for (n, d) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)] {
        let s = forcing_candidate(n, d).unwrap();
        assert_eq!(s.len(), binom(n, d) - binom(n - 2, d - 1));
        assert!(is_forcing_set(&johnson_graph(n, d, 1).unwrap(), &s));
    }
}
