//! Ternary codes spanned by the rows of A_{n,d}, A_{n,d} − I and
//! A_{n,d} + I over F_3, and the residue-class table of their dimensions
//! and duals.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::binom_i;
use crate::error::{Error, Result};
use crate::johnson::signed_adjacency_a;
use crate::linalg::{rank_mod_p, ExactMatrix, PrimeFieldMatrix};

/// Row space over F_3 of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryCode {
    length: usize,
    /// reduced echelon basis, `dimension` rows
    basis: PrimeFieldMatrix,
    /// the matrix the code came from, reduced mod 3
    source: PrimeFieldMatrix,
    dimension: usize,
}

impl TernaryCode {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &PrimeFieldMatrix {
        &self.basis
    }

    pub fn source(&self) -> &PrimeFieldMatrix {
        &self.source
    }

    pub fn is_full(&self) -> bool {
        self.dimension == self.length
    }

    /// Same subspace.
    pub fn same_code(&self, other: &TernaryCode) -> Result<bool> {
        check_lengths(self, other)?;
        if self.dimension != other.dimension {
            return Ok(false);
        }
        Ok(rank_mod_p(&stack(&self.basis, &other.basis)?) == self.dimension)
    }

    /// G Gᵀ = 0.
    pub fn is_self_orthogonal(&self) -> Result<bool> {
        orthogonal(&self.basis, &self.basis)
    }
}

fn stack(a: &PrimeFieldMatrix, b: &PrimeFieldMatrix) -> Result<PrimeFieldMatrix> {
    let mut e = a.entries().to_vec();
    e.extend_from_slice(b.entries());
    PrimeFieldMatrix::new(3, a.rows() + b.rows(), a.cols(), e)
}

fn orthogonal(a: &PrimeFieldMatrix, b: &PrimeFieldMatrix) -> Result<bool> {
    if a.rows() == 0 || b.rows() == 0 {
        return Ok(true);
    }
    Ok(a.mul(&b.transpose())?.is_zero())
}

fn check_lengths(a: &TernaryCode, b: &TernaryCode) -> Result<()> {
    if a.length != b.length {
        return Err(Error::Shape(format!("codes of length {} and {}", a.length, b.length)));
    }
    Ok(())
}

/// Entries taken mod 3, so 2 stands for −1.
pub fn code_from_matrix(m: &ExactMatrix) -> Result<TernaryCode> {
    let source = m.mod_p(3)?;
    let (rref, pivots) = source.rref();
    let dimension = pivots.len();
    let basis = PrimeFieldMatrix::new(3, dimension, m.cols(), rref.entries()[..dimension * m.cols()].to_vec())?;
    Ok(TernaryCode { length: m.cols(), basis, source, dimension })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualRelation {
    /// C₂ = C₁^⊥
    EqualDual,
    /// C₁ = C₂ ⊆ C₁^⊥
    SelfOrthogonal,
    Unrelated,
}

pub fn dual_relation(c1: &TernaryCode, c2: &TernaryCode) -> Result<DualRelation> {
    check_lengths(c1, c2)?;
    let orth = orthogonal(&c1.basis, &c2.basis)?;
    if orth && c1.dimension + c2.dimension == c1.length {
        return Ok(DualRelation::EqualDual);
    }
    if orth && 2 * c1.dimension <= c1.length && c1.same_code(c2)? {
        return Ok(DualRelation::SelfOrthogonal);
    }
    Ok(DualRelation::Unrelated)
}

pub const MIN_DISTANCE_DIM_CAP: usize = 15;

/// Smallest weight of a nonzero codeword, by walking all 3^k − 1 nonzero
/// combinations of the basis with an odometer.
pub fn min_distance_bruteforce(c: &TernaryCode) -> Result<usize> {
    let k = c.dimension;
    if k == 0 {
        return Err(Error::EmptyCode);
    }
    if k > MIN_DISTANCE_DIM_CAP {
        return Err(Error::Uncomputed(k));
    }
    let n = c.length;
    let mut word = vec![0u8; n];
    let mut digits = vec![0u8; k];
    let mut best = n;
    loop {
        // add basis row i to advance digit i; a carry adds it a third time
        let mut i = 0;
        loop {
            if i == k {
                return Ok(best);
            }
            for (w, &b) in word.iter_mut().zip(c.basis.row(i)) {
                *w = (*w + b as u8) % 3;
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let weight = word.iter().filter(|&&x| x != 0).count();
        best = best.min(weight);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CodeName {
    A,
    AMinusI,
    APlusI,
}

impl CodeName {
    pub fn label(self) -> &'static str {
        match self {
            CodeName::A => "A",
            CodeName::AMinusI => "AmI",
            CodeName::APlusI => "ApI",
        }
    }

    fn shift(self) -> i64 {
        match self {
            CodeName::A => 0,
            CodeName::AMinusI => -1,
            CodeName::APlusI => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub statement: String,
    pub verified: bool,
}

/// A measured quantity set beside a predicted one, without asserting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observation {
    pub statement: String,
    pub observed: i64,
    pub predicted: i64,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct CodePairReport {
    pub n: usize,
    pub d: usize,
    pub n_mod3: usize,
    pub d_mod3: usize,
    /// codes of A, A − I, A + I in that order
    pub codes: Vec<(CodeName, TernaryCode)>,
    pub relations: Vec<RelationCheck>,
    pub observations: Vec<Observation>,
}

impl CodePairReport {
    pub fn code(&self, name: CodeName) -> &TernaryCode {
        &self.codes.iter().find(|(n, _)| *n == name).expect("all three codes present").1
    }

    pub fn all_verified(&self) -> bool {
        self.relations.iter().all(|r| r.verified)
    }
}

/// Roles in a residue cell: `special` is the self-orthogonal code when
/// n ≡ 0 and otherwise the code of dimension C(n−1, d−1); `partner` is its
/// dual (n ≢ 0) or another full code (n ≡ 0); `full` is the whole space.
pub fn cell_roles(n_mod3: usize, d_mod3: usize) -> (CodeName, CodeName, CodeName) {
    use CodeName::*;
    match (d_mod3, n_mod3) {
        (0, 0) => (A, AMinusI, APlusI),
        (1, 0) => (APlusI, A, AMinusI),
        (2, 0) => (AMinusI, A, APlusI),
        (0, 1) => (A, AMinusI, APlusI),
        (0, 2) => (A, APlusI, AMinusI),
        (1, 1) => (APlusI, A, AMinusI),
        (1, 2) => (APlusI, AMinusI, A),
        (2, 1) => (AMinusI, APlusI, A),
        _ => (AMinusI, A, APlusI),
    }
}

/// Builds the three codes of A_{n,d} and checks what the residue cell of
/// (n mod 3, d mod 3) asserts.
pub fn table2_report(n: usize, d: usize) -> Result<CodePairReport> {
    let a = signed_adjacency_a(n, d)?;
    let mut codes = Vec::new();
    for name in [CodeName::A, CodeName::AMinusI, CodeName::APlusI] {
        codes.push((name, code_from_matrix(&a.add_identity_int(name.shift())?)?));
    }
    let get = |name: CodeName| &codes.iter().find(|(n, _)| *n == name).expect("present").1;
    let (n3, d3) = (n % 3, d % 3);
    let (special, partner, full) = cell_roles(n3, d3);
    let m_lambda = binom_i(n as i64 - 1, d as i64 - 1) as usize;
    let mut relations = Vec::new();
    let mut observations = Vec::new();
    let s = get(special);
    let dim_s = s.dimension();
    if n3 == 0 {
        let so = s.is_self_orthogonal()?;
        relations.push(RelationCheck { statement: format!("C_{} is self-orthogonal", special.label()), verified: so });
        let weights_ok = (0..s.source().rows())
            .all(|r| s.source().row(r).iter().map(|&x| (x * x) as usize).sum::<usize>() % 3 == 0);
        relations.push(RelationCheck {
            statement: format!("rows of {} have weight divisible by 3", special.label()),
            verified: weights_ok,
        });
        relations.push(RelationCheck {
            statement: format!("dim C_{} <= C(n-1,d-1) = {}", special.label(), m_lambda),
            verified: dim_s <= m_lambda,
        });
        relations.push(RelationCheck { statement: format!("C_{} is the full space", partner.label()), verified: get(partner).is_full() });
        let predicted = binom_i(n as i64 - 1, d as i64 - 1) - binom_i(n as i64 - 2, d as i64 - 2);
        observations.push(Observation {
            statement: format!("dim C_{} against C(n-1,d-1) - C(n-2,d-2)", special.label()),
            observed: dim_s as i64,
            predicted: predicted as i64,
            matches: dim_s as i64 == predicted as i64,
        });
    } else {
        relations.push(RelationCheck {
            statement: format!("dim C_{} = C(n-1,d-1) = {}", special.label(), m_lambda),
            verified: dim_s == m_lambda,
        });
        relations.push(RelationCheck {
            statement: format!("C_{} is the dual of C_{}", partner.label(), special.label()),
            verified: dual_relation(s, get(partner))? == DualRelation::EqualDual,
        });
    }
    relations.push(RelationCheck { statement: format!("C_{} is the full space", full.label()), verified: get(full).is_full() });
    Ok(CodePairReport { n, d, n_mod3: n3, d_mod3: d3, codes, relations, observations })
}

/// For each of the nine residue cells, the first (n, d) with
/// 1 ≤ d ≤ n − 1 and C(n, d) ≤ `cap`, scanning n then d upward.
pub fn smallest_cell_representatives(cap: usize) -> Vec<((usize, usize), Option<(usize, usize)>)> {
    let mut out = Vec::new();
    for d3 in 0..3 {
        for n3 in 0..3 {
            let mut hit = None;
            'search: for n in 2..=cap + 1 {
                for d in 1..n {
                    if n % 3 == n3 && d % 3 == d3 && binom_i(n as i64, d as i64) as usize <= cap {
                        hit = Some((n, d));
                        break 'search;
                    }
                }
            }
            out.push(((n3, d3), hit));
        }
    }
    out
}
