use proptest::prelude::*;
use spectra_core::codes::*;
use spectra_core::combinatorics::binom;
use spectra_core::{Error, ExactMatrix};

fn words(n: usize, d: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..1u32 << n).filter(|w| w.count_ones() as usize == d).collect();
    v.reverse();
    v
}

// Signed adjacency built from bitmasks, reduced mod 3 with a shift on the diagonal.
fn a_mod3(n: usize, d: usize, shift: i64) -> Vec<Vec<u8>> {
    let ws = words(n, d);
    ws.iter()
        .map(|&a| {
            ws.iter()
                .map(|&b| {
                    let v: i64 = if a == b {
                        shift
                    } else if (a ^ b).count_ones() == 2 {
                        let diff = a ^ b;
                        let lo = diff.trailing_zeros();
                        let hi = 31 - diff.leading_zeros();
                        let between = ((1u32 << hi) - 1) & !((1u32 << (lo + 1)) - 1);
                        if (a & b & between).count_ones() % 2 == 0 { 1 } else { -1 }
                    } else {
                        0
                    };
                    v.rem_euclid(3) as u8
                })
                .collect()
        })
        .collect()
}

fn rank3(mut m: Vec<Vec<u8>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = m[r][c]; // 1 and 2 are self-inverse mod 3
        for x in m[r].iter_mut() {
            *x = *x * inv % 3;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] + 3 * 3 - f * m[r][k] % 3) % 3;
                }
            }
        }
        r += 1;
    }
    r
}

fn orthogonal(a: &[Vec<u8>], b: &[Vec<u8>]) -> bool {
    a.iter().all(|x| b.iter().all(|y| x.iter().zip(y).map(|(&p, &q)| (p * q) as u32).sum::<u32>() % 3 == 0))
}

fn to_exact(rows: &[Vec<u8>]) -> ExactMatrix {
    let n = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    ExactMatrix::from_fn(n, c, |i, j| rows[i][j] as i64).unwrap()
}

fn shift_of(name: CodeName) -> i64 {
    match name {
        CodeName::A => 0,
        CodeName::AMinusI => -1,
        CodeName::APlusI => 1,
    }
}

// n stays below 32 so the bitmask oracle applies
fn all_pairs(cap: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for n in 2..=cap.min(20) {
        for d in 1..n {
            if binom(n, d) <= cap {
                v.push((n, d));
            }
        }
    }
    v
}

#[test]
fn dimensions_match_oracle_rank() {
    for (n, d) in all_pairs(56) {
        let rep = table2_report(n, d).unwrap();
        for (name, code) in &rep.codes {
            assert_eq!(code.dimension(), rank3(a_mod3(n, d, shift_of(*name))), "({n},{d}) {name:?}");
            assert_eq!(code.length(), binom(n, d));
        }
    }
}

#[test]
fn every_residue_cell_holds_up_to_56_vertices() {
    for (n, d) in all_pairs(56) {
        let rep = table2_report(n, d).unwrap();
        for r in &rep.relations {
            assert!(r.verified, "({n},{d}): {}", r.statement);
        }
    }
}

#[test]
fn residue_cells_against_oracle() {
    for (n, d) in all_pairs(56) {
        let (special, partner, full) = cell_roles(n % 3, d % 3);
        let s = a_mod3(n, d, shift_of(special));
        let p = a_mod3(n, d, shift_of(partner));
        let f = a_mod3(n, d, shift_of(full));
        let len = binom(n, d);
        assert_eq!(rank3(f), len, "({n},{d}) {full:?} full");
        if n % 3 == 0 {
            assert!(orthogonal(&s, &s), "({n},{d}) self-orthogonal");
            assert!(rank3(s) <= binom(n - 1, d - 1));
            assert_eq!(rank3(p), len);
        } else {
            let k = rank3(s.clone());
            assert_eq!(k, binom(n - 1, d - 1), "({n},{d})");
            assert!(orthogonal(&s, &p));
            assert_eq!(k + rank3(p), len);
        }
    }
}

#[test]
fn every_cell_has_a_representative() {
    let reps = smallest_cell_representatives(56);
    assert_eq!(reps.len(), 9);
    for ((n3, d3), hit) in reps {
        let (n, d) = hit.unwrap_or_else(|| panic!("no pair in cell n={n3} d={d3}"));
        assert_eq!((n % 3, d % 3), (n3, d3));
        assert!(table2_report(n, d).unwrap().all_verified());
    }
}

#[test]
fn named_examples() {
    // n ≡ 1, d ≡ 0: C_A has dimension C(3,2) = 3 and C_{A−I} is its dual
    let r = table2_report(4, 3).unwrap();
    assert_eq!(r.code(CodeName::A).dimension(), 3);
    assert_eq!(dual_relation(r.code(CodeName::A), r.code(CodeName::AMinusI)).unwrap(), DualRelation::EqualDual);
    assert!(r.code(CodeName::APlusI).is_full());

    let r = table2_report(5, 2).unwrap();
    assert_eq!(r.code(CodeName::AMinusI).dimension(), 4);
    assert_eq!(r.code(CodeName::A).dimension(), 6);
    assert!(r.code(CodeName::APlusI).is_full());

    let r = table2_report(6, 3).unwrap();
    let so = r.code(CodeName::A);
    assert!(so.is_self_orthogonal().unwrap());
    assert!(so.dimension() <= 10);
    assert_eq!(dual_relation(so, so).unwrap(), DualRelation::SelfOrthogonal);
    assert_eq!(r.observations.len(), 1);
    assert_eq!(r.observations[0].observed, so.dimension() as i64);
    assert_eq!(r.observations[0].predicted, 10 - 4);
}

#[test]
fn tetracode_distance() {
    let g = ExactMatrix::from_i64(2, 4, vec![1, 0, 1, 1, 0, 1, 1, -1]).unwrap();
    let c = code_from_matrix(&g).unwrap();
    assert_eq!(c.dimension(), 2);
    assert_eq!(min_distance_bruteforce(&c).unwrap(), 3);
    assert!(c.is_self_orthogonal().unwrap());
}

#[test]
fn distance_edge_cases() {
    let z = code_from_matrix(&ExactMatrix::zeros(2, 5).unwrap()).unwrap();
    assert!(matches!(min_distance_bruteforce(&z), Err(Error::EmptyCode)));
    let big = code_from_matrix(&ExactMatrix::identity(16).unwrap()).unwrap();
    assert!(matches!(min_distance_bruteforce(&big), Err(Error::Uncomputed(16))));
    let half = ExactMatrix::from_bigint(1, 1, vec![1.into()], 2.into()).unwrap();
    assert!(matches!(code_from_matrix(&half), Err(Error::NotIntegral)));
}

proptest! {
    #[test]
    fn distance_matches_exhaustive_scan(entries in prop::collection::vec(0u8..3, 3 * 6)) {
        let rows: Vec<Vec<u8>> = entries.chunks(6).map(<[u8]>::to_vec).collect();
        let code = code_from_matrix(&to_exact(&rows)).unwrap();
        let k = rank3(rows.clone());
        prop_assert_eq!(code.dimension(), k);
        // a vector lies in the code when appending it keeps the rank
        let mut best: Option<usize> = None;
        for v in 1..3usize.pow(6) {
            let word: Vec<u8> = (0..6).map(|i| (v / 3usize.pow(i) % 3) as u8).collect();
            let mut ext = rows.clone();
            ext.push(word.clone());
            if rank3(ext) == k {
                let w = word.iter().filter(|&&x| x != 0).count();
                best = Some(best.map_or(w, |b| b.min(w)));
            }
        }
        match best {
            Some(b) => prop_assert_eq!(min_distance_bruteforce(&code).unwrap(), b),
            None => prop_assert!(matches!(min_distance_bruteforce(&code), Err(Error::EmptyCode))),
        }
    }

    #[test]
    fn dual_relation_is_consistent(entries in prop::collection::vec(0u8..3, 2 * 5)) {
        let rows: Vec<Vec<u8>> = entries.chunks(5).map(<[u8]>::to_vec).collect();
        let c = code_from_matrix(&to_exact(&rows)).unwrap();
        let rel = dual_relation(&c, &c).unwrap();
        prop_assert_eq!(rel == DualRelation::SelfOrthogonal, c.dimension() > 0 && orthogonal(&rows, &rows));
    }
}
