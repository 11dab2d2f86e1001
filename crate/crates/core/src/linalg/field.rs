//! Matrices over small prime fields and the GF(2) odd-kernel search.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    modulus: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl PrimeFieldMatrix {
    pub fn new(modulus: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if !is_prime(modulus) || modulus > 65521 {
            return Err(Error::Parameter(format!("modulus {} is not a supported prime", modulus)));
        }
        super::matrix::check_shape(rows, cols)?;
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        if let Some(e) = entries.iter().find(|&&e| e >= modulus) {
            return Err(Error::Parameter(format!("residue {} not reduced mod {}", e, modulus)));
        }
        Ok(PrimeFieldMatrix { modulus, rows, cols, entries })
    }

    pub fn zeros(modulus: u32, rows: usize, cols: usize) -> Result<Self> {
        Self::new(modulus, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(modulus: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(modulus, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = 1 % modulus;
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v % self.modulus;
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = vec![0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[j * self.rows + i] = self.entries[i * self.cols + j];
            }
        }
        PrimeFieldMatrix { modulus: self.modulus, rows: self.cols, cols: self.rows, entries: t }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus || self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} mod {} by {}x{} mod {}",
                self.rows, self.cols, self.modulus, other.rows, other.cols, other.modulus
            )));
        }
        let p = self.modulus as u64;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for t in 0..self.cols {
                let x = self.entries[i * self.cols + t] as u64;
                if x == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    acc[j] = (acc[j] + x * other.entries[t * other.cols + j] as u64) % p;
                }
            }
            for j in 0..other.cols {
                out[i * other.cols + j] = acc[j] as u32;
            }
        }
        Ok(PrimeFieldMatrix { modulus: self.modulus, rows: self.rows, cols: other.cols, entries: out })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Reduced row echelon form with pivot columns, pivots chosen as the
    /// first nonzero entry in row-major order among unused rows.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.modulus as u64;
        let (r, c) = (self.rows, self.cols);
        let mut m = self.entries.clone();
        let mut pivots = Vec::new();
        let mut used = vec![false; r];
        let mut order = Vec::new();
        loop {
            let mut found = None;
            'scan: for i in 0..r {
                if used[i] {
                    continue;
                }
                for j in 0..c {
                    if m[i * c + j] != 0 {
                        found = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((pi, pj)) = found else { break };
            used[pi] = true;
            let inv = mod_inverse(m[pi * c + pj] as u64, p);
            for j in 0..c {
                m[pi * c + j] = ((m[pi * c + j] as u64 * inv) % p) as u32;
            }
            for i in 0..r {
                if i == pi || m[i * c + pj] == 0 {
                    continue;
                }
                let f = m[i * c + pj] as u64;
                for j in 0..c {
                    let s = (m[i * c + j] as u64 + (p - f) * m[pi * c + j] as u64) % p;
                    m[i * c + j] = s as u32;
                }
            }
            pivots.push(pj);
            order.push(pi);
        }
        // Reorder rows so pivot rows come first in pivot-column order.
        let mut idx: Vec<usize> = (0..order.len()).collect();
        idx.sort_by_key(|&k| pivots[k]);
        let mut out = Vec::with_capacity(r * c);
        let mut piv_sorted = Vec::with_capacity(idx.len());
        for &k in &idx {
            out.extend_from_slice(&m[order[k] * c..(order[k] + 1) * c]);
            piv_sorted.push(pivots[k]);
        }
        out.resize(r * c, 0);
        (PrimeFieldMatrix { modulus: self.modulus, rows: r, cols: c, entries: out }, piv_sorted)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank over F_p with first-nonzero row-major pivots.
pub fn rank_mod_p(m: &PrimeFieldMatrix) -> usize {
    if m.modulus == 2 {
        let bits = BitRows::from_matrix(m);
        return bits.rank();
    }
    m.rref().1.len()
}

/// Dense GF(2) rows packed into u64 words.
#[derive(Clone)]
struct BitRows {
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    fn from_matrix(m: &PrimeFieldMatrix) -> Self {
        let words = m.cols.div_ceil(64).max(1);
        let mut data = vec![0u64; m.rows * words];
        for i in 0..m.rows {
            for j in 0..m.cols {
                if m.get(i, j) & 1 == 1 {
                    data[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        BitRows { words, data }
    }

    fn rows(&self) -> usize {
        self.data.len() / self.words
    }

    fn lead(&self, i: usize) -> Option<usize> {
        let row = &self.data[i * self.words..(i + 1) * self.words];
        row.iter().enumerate().find(|(_, &w)| w != 0).map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn xor_into(&mut self, dst: usize, src: usize) {
        for k in 0..self.words {
            let s = self.data[src * self.words + k];
            self.data[dst * self.words + k] ^= s;
        }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Full reduction; returns (pivot row, pivot column) pairs sorted by column.
    fn reduce(&mut self) -> Vec<(usize, usize)> {
        let r = self.rows();
        let mut used = vec![false; r];
        let mut pivots = Vec::new();
        loop {
            let found = (0..r).filter(|&i| !used[i]).find_map(|i| self.lead(i).map(|j| (i, j)));
            let Some((pi, pj)) = found else { break };
            used[pi] = true;
            for i in 0..r {
                if i != pi && self.get(i, pj) {
                    self.xor_into(i, pi);
                }
            }
            pivots.push((pi, pj));
        }
        pivots.sort_by_key(|p| p.1);
        pivots
    }

    fn rank(mut self) -> usize {
        self.reduce().len()
    }
}

/// A GF(2) vector as a sorted list of set coordinates plus its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVector {
    pub len: usize,
    pub ones: Vec<usize>,
}

impl BitVector {
    pub fn popcount(&self) -> usize {
        self.ones.len()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        let mut v = vec![false; self.len];
        for &i in &self.ones {
            v[i] = true;
        }
        v
    }
}

/// Basis of the GF(2) null space, one vector per free column. The vector
/// for free column f has a one at f and at the pivot columns whose reduced
/// rows touch f.
pub fn gf2_kernel_basis(m: &PrimeFieldMatrix) -> Result<Vec<BitVector>> {
    if m.modulus != 2 {
        return Err(Error::Parameter("GF(2) kernel needs modulus 2".into()));
    }
    let mut bits = BitRows::from_matrix(m);
    let pivots = bits.reduce();
    let mut is_pivot = vec![false; m.cols];
    for &(_, c) in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for f in (0..m.cols).filter(|&f| !is_pivot[f]) {
        let mut ones: Vec<usize> = pivots.iter().filter(|&&(r, _)| bits.get(r, f)).map(|&(_, c)| c).collect();
        ones.push(f);
        ones.sort_unstable();
        out.push(BitVector { len: m.cols, ones });
    }
    Ok(out)
}

/// Lexicographic order on 0/1 sequences: at the first differing
/// coordinate the smaller vector holds 0.
fn lex_less(a: &BitVector, b: &BitVector) -> bool {
    for (x, y) in a.ones.iter().zip(&b.ones) {
        if x != y {
            return x > y;
        }
    }
    a.ones.len() < b.ones.len()
}

/// Some x ≠ 0 with Mx = 0 over GF(2) and an odd number of ones.
///
/// Kernel basis vectors are tried first; the least odd one is returned.
/// Parity of the weight is linear over GF(2), so if every basis vector has
/// even weight then so does every kernel vector, and the search ends. The
/// inhomogeneous system Mx = 0, 1ᵀx = 1 is then solved as a complete
/// confirmation.
pub fn gf2_kernel_with_odd_support(m: &PrimeFieldMatrix) -> Result<Option<BitVector>> {
    let basis = gf2_kernel_basis(m)?;
    let mut best: Option<BitVector> = None;
    for v in basis.into_iter().filter(|v| v.popcount() % 2 == 1) {
        if best.as_ref().is_none_or(|b| lex_less(&v, b)) {
            best = Some(v);
        }
    }
    if best.is_none() {
        best = solve_with_parity_row(m);
    }
    if let Some(x) = &best {
        debug_assert!(x.popcount() % 2 == 1);
        debug_assert!(gf2_apply_is_zero(m, x));
    }
    Ok(best)
}

fn solve_with_parity_row(m: &PrimeFieldMatrix) -> Option<BitVector> {
    // Augmented system [M | 0 ; 1ᵀ | 1].
    let c = m.cols;
    let mut aug = PrimeFieldMatrix::zeros(2, m.rows + 1, c + 1).ok()?;
    for i in 0..m.rows {
        for j in 0..c {
            aug.entries[i * (c + 1) + j] = m.get(i, j) & 1;
        }
    }
    for j in 0..=c {
        aug.entries[m.rows * (c + 1) + j] = 1;
    }
    let mut bits = BitRows::from_matrix(&aug);
    let pivots = bits.reduce();
    if pivots.iter().any(|&(_, col)| col == c) {
        return None;
    }
    let ones: Vec<usize> = pivots.iter().filter(|&&(r, _)| bits.get(r, c)).map(|&(_, col)| col).collect();
    let mut ones = ones;
    ones.sort_unstable();
    Some(BitVector { len: c, ones })
}

/// Whether Mx = 0 over GF(2).
pub fn gf2_apply_is_zero(m: &PrimeFieldMatrix, x: &BitVector) -> bool {
    (0..m.rows).all(|i| x.ones.iter().filter(|&&j| m.get(i, j) & 1 == 1).count() % 2 == 0)
}
