//! Fraction-free elimination: rank, minimal polynomial degree and the small
//! identities built on top of matrix products.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// Rank over the rationals.
///
/// Pivots are taken in row-major order: the first remaining nonzero row, at
/// its first nonzero column. Rows are kept primitive (content divided out)
/// so entries stay small for the signed 0/±1 families used here.
pub fn rank_rational(m: &ExactMatrix) -> usize {
    if let Some(v) = m.small_numerators() {
        if let Some(r) = rank_small(v.to_vec(), m.rows(), m.cols()) {
            return r;
        }
    }
    rank_big(m.numerators(), m.rows(), m.cols())
}

fn lead_from(row: &[i64], start: usize) -> usize {
    row[start..].iter().position(|&x| x != 0).map_or(row.len(), |p| p + start)
}

fn rank_small(mut data: Vec<i64>, rows: usize, cols: usize) -> Option<usize> {
    if cols == 0 {
        return Some(0);
    }
    let mut lead: Vec<usize> = (0..rows).map(|r| lead_from(&data[r * cols..(r + 1) * cols], 0)).collect();
    let mut active: Vec<usize> = (0..rows).filter(|&r| lead[r] < cols).collect();
    let mut rank = 0;
    while let Some(&pr) = active.first() {
        let p = lead[pr];
        let pv = data[pr * cols + p] as i128;
        let pivot: Vec<i64> = data[pr * cols..(pr + 1) * cols].to_vec();
        let mut next = Vec::with_capacity(active.len());
        for &r in &active[1..] {
            let row = &mut data[r * cols..(r + 1) * cols];
            let x = row[p] as i128;
            if x != 0 {
                let g = pv.gcd(&x);
                let (a, b) = (pv / g, x / g);
                let start = lead[r];
                let mut content: i64 = 0;
                for j in start..cols {
                    let y = a.checked_mul(row[j] as i128)?.checked_sub(b.checked_mul(pivot[j] as i128)?)?;
                    row[j] = i64::try_from(y).ok()?;
                    if row[j] != 0 && content != 1 {
                        content = content.gcd(&row[j]);
                    }
                }
                if content > 1 {
                    row[start..].iter_mut().for_each(|y| *y /= content);
                }
                if start == p {
                    lead[r] = lead_from(row, p + 1);
                }
            }
            if lead[r] < cols {
                next.push(r);
            }
        }
        rank += 1;
        active = next;
    }
    Some(rank)
}

fn rank_big(mut data: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    if cols == 0 {
        return 0;
    }
    let lead_of = |row: &[BigInt], start: usize| {
        row[start..].iter().position(|x| !x.is_zero()).map_or(row.len(), |p| p + start)
    };
    let mut lead: Vec<usize> = (0..rows).map(|r| lead_of(&data[r * cols..(r + 1) * cols], 0)).collect();
    let mut active: Vec<usize> = (0..rows).filter(|&r| lead[r] < cols).collect();
    let mut rank = 0;
    while let Some(&pr) = active.first() {
        let p = lead[pr];
        let pivot: Vec<BigInt> = data[pr * cols..(pr + 1) * cols].to_vec();
        let pv = pivot[p].clone();
        let mut next = Vec::with_capacity(active.len());
        for &r in &active[1..] {
            let row = &mut data[r * cols..(r + 1) * cols];
            if !row[p].is_zero() {
                let g = pv.gcd(&row[p]);
                let a = &pv / &g;
                let b = &row[p] / &g;
                let start = lead[r];
                for j in start..cols {
                    row[j] = &a * &row[j] - &b * &pivot[j];
                }
                make_primitive(&mut row[start..]);
                if start == p {
                    lead[r] = lead_of(row, p + 1);
                }
            }
            if lead[r] < cols {
                next.push(r);
            }
        }
        rank += 1;
        active = next;
    }
    rank
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Outcome of the minimal polynomial search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinPolyDegree {
    Degree(usize),
    /// I, M, ..., M^cap are still independent.
    ExceedsCap(usize),
}

impl MinPolyDegree {
    pub fn degree(self) -> Option<usize> {
        match self {
            MinPolyDegree::Degree(k) => Some(k),
            MinPolyDegree::ExceedsCap(_) => None,
        }
    }
}

/// Incrementally maintained echelon basis of integer vectors.
struct Echelon {
    basis: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    /// Reduce `v` against the basis; insert it when it stays nonzero.
    /// Returns false when `v` was dependent.
    fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (p, b) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let g = b[*p].gcd(&v[*p]);
            let a = &b[*p] / &g;
            let c = &v[*p] / &g;
            for (x, y) in v.iter_mut().zip(b) {
                *x = &a * &*x - &c * y;
            }
            make_primitive(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.basis.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Smallest k ≤ cap with I, M, ..., M^k linearly dependent.
///
/// For a symmetric matrix this is its number of distinct eigenvalues.
pub fn minimal_polynomial_degree(m: &ExactMatrix, cap: usize) -> Result<MinPolyDegree> {
    if !m.is_square() {
        return Err(Error::Shape(alloc::format!("{}x{} is not square", m.rows(), m.cols())));
    }
    if cap == 0 {
        return Err(Error::Parameter("cap must be at least 1".into()));
    }
    let mut ech = Echelon { basis: Vec::new() };
    let mut power = ExactMatrix::identity(m.rows())?;
    // Scaling a power does not change dependence, so numerators suffice.
    ech.insert(power.numerators());
    for k in 1..=cap {
        power = power.mul(m)?;
        if !ech.insert(power.numerators()) {
            return Ok(MinPolyDegree::Degree(k));
        }
    }
    Ok(MinPolyDegree::ExceedsCap(cap))
}

/// Whether ∏ (M − rI) over the given roots vanishes.
pub fn annihilator_check(m: &ExactMatrix, roots: &[Rational]) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::Shape(alloc::format!("{}x{} is not square", m.rows(), m.cols())));
    }
    let mut acc: Option<ExactMatrix> = None;
    for r in roots {
        let f = m.add_identity(&-r.clone())?;
        acc = Some(match acc {
            None => f,
            Some(a) => a.mul(&f)?,
        });
    }
    Ok(match acc {
        None => m.rows() == 0,
        Some(a) => a.is_zero(),
    })
}

pub fn annihilator_check_int(m: &ExactMatrix, roots: &[i64]) -> Result<bool> {
    let roots: Vec<Rational> = roots.iter().map(|&r| Rational::from_integer(r.into())).collect();
    annihilator_check(m, &roots)
}

/// Whether M² = cM.
pub fn is_idempotent_scaled(m: &ExactMatrix, c: &Rational) -> Result<bool> {
    Ok(m.mul(m)? == m.scale(c))
}

/// Nonzero pattern of the off-diagonal part, as (i, j) with i < j.
pub fn offdiagonal_support(m: &ExactMatrix) -> Vec<(usize, usize)> {
    let n = m.rows();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if m.is_nonzero_at(i, j) || m.is_nonzero_at(j, i) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Whether every diagonal entry is the same.
pub fn constant_diagonal(m: &ExactMatrix) -> bool {
    let n = m.rows().min(m.cols());
    n == 0 || (1..n).all(|i| m.entry(i, i) == m.entry(0, 0))
}

/// Integer eigenvalue search for an integral matrix: candidates are bounded
/// by the largest absolute row sum. Returns the roots with multiplicity in
/// the characteristic polynomial, in increasing order.
pub fn integer_eigenvalues(m: &ExactMatrix) -> Result<Vec<(i64, usize)>> {
    if !m.is_integral() {
        return Err(Error::NotIntegral);
    }
    let n = m.rows();
    let mut rho = BigInt::zero();
    for i in 0..n {
        let s: BigInt = (0..n).map(|j| m.entry(i, j).numer().abs()).sum();
        if s > rho {
            rho = s;
        }
    }
    let rho: i64 = i64::try_from(&rho).map_err(|_| Error::Parameter("row sums too large".into()))?;
    let p = super::poly::charpoly(m)?;
    let mut out = Vec::new();
    for x in -rho..=rho {
        let mult = p.root_multiplicity(&Rational::from_integer(x.into()));
        if mult > 0 {
            out.push((x, mult));
        }
    }
    Ok(out)
}

/// Distinct eigenvalue count, rank, and integral spectrum when every root
/// is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSummary {
    pub distinct_eigenvalue_count: usize,
    pub known_eigenvalues: Option<Vec<(Rational, usize)>>,
    pub rank: usize,
}

pub fn spectral_summary(m: &ExactMatrix) -> Result<SpectralSummary> {
    let k = minimal_polynomial_degree(m, m.rows().max(1))?
        .degree()
        .expect("minimal polynomial degree never exceeds the order");
    let known = if m.is_integral() {
        let ev = integer_eigenvalues(m)?;
        let total: usize = ev.iter().map(|e| e.1).sum();
        (total == m.rows()).then(|| {
            ev.into_iter().map(|(x, mu)| (Rational::from_integer(x.into()), mu)).collect()
        })
    } else {
        None
    };
    Ok(SpectralSummary { distinct_eigenvalue_count: k, known_eigenvalues: known, rank: rank_rational(m) })
}

/// Whether a symmetric matrix is positive semidefinite. Its characteristic
/// polynomial is real-rooted, so all roots are ≥ 0 exactly when the
/// coefficients alternate in sign.
pub fn is_positive_semidefinite(m: &ExactMatrix) -> Result<bool> {
    if !m.is_symmetric() {
        return Err(Error::Shape(alloc::format!("{}x{} matrix is not symmetric", m.rows(), m.cols())));
    }
    let p = super::charpoly(m)?;
    let deg = p.degree();
    Ok(p.coeffs().iter().enumerate().all(|(k, c)| {
        let flipped = if (deg - k) % 2 == 0 { c.clone() } else { -c.clone() };
        !flipped.is_negative()
    }))
}
