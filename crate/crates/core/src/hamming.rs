//! Hamming-family constructions: the hypercube signing M_d, the boundary
//! pair E_d/F_d of the clique complex of the hypercube, orthogonal matrices
//! with zero diagonal, tensor signings and the ζ(d, j, t) sums.
//!
//! Vertices of H(d, n) are the words of Y_n^d in lexicographic order with
//! the first coordinate most significant, so word x has index
//! Σ x_k n^{d−1−k}.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::combinatorics::binom_i;
use crate::error::{Error, Result};
use crate::graph::{tensor_product, Graph};
use crate::linalg::{int, ExactMatrix, Rational};

/// Y_n^d in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammingIndex {
    d: usize,
    n: usize,
    len: usize,
}

impl HammingIndex {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d == 0 || n < 2 {
            return Err(Error::Parameter(format!("H({}, {}) needs d ≥ 1 and n ≥ 2", d, n)));
        }
        let len = (0..d)
            .try_fold(1usize, |acc, _| acc.checked_mul(n))
            .filter(|&l| l <= crate::linalg::MAX_ENTRIES)
            .ok_or_else(|| Error::Parameter(format!("{}^{} vertices is too many", n, d)))?;
        Ok(HammingIndex { d, n, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn word(&self, mut k: usize) -> Vec<usize> {
        let mut w = vec![0; self.d];
        for slot in w.iter_mut().rev() {
            *slot = k % self.n;
            k /= self.n;
        }
        w
    }

    pub fn index_of(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| acc * self.n + x)
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut dist = 0;
        for _ in 0..self.d {
            dist += (a % self.n != b % self.n) as usize;
            a /= self.n;
            b /= self.n;
        }
        dist
    }
}

/// H(d, n, j): words at Hamming distance j.
pub fn hamming_graph(d: usize, n: usize, j: usize) -> Result<Graph> {
    let idx = HammingIndex::new(d, n)?;
    if j == 0 || j > d {
        return Err(Error::Parameter(format!("distance {} outside 1..={}", j, d)));
    }
    let labels = (0..idx.len())
        .map(|k| idx.word(k).iter().map(|&x| char::from_digit(x as u32, 36).unwrap_or('?')).collect::<String>())
        .collect();
    Graph::from_fn(idx.len(), |a, b| idx.distance(a, b) == j).with_labels(labels)
}

/// M_1 = [[0, 1], [1, 0]], M_d = [[M_{d−1}, I], [I, −M_{d−1}]].
pub fn hypercube_signing(d: usize) -> Result<ExactMatrix> {
    if d == 0 || d > 22 {
        return Err(Error::Parameter(format!("hypercube dimension {} out of range", d)));
    }
    let mut m = ExactMatrix::from_i64(2, 2, vec![0, 1, 1, 0])?;
    for _ in 1..d {
        let id = ExactMatrix::identity(m.rows())?;
        m = ExactMatrix::block(&[&[&m, &id], &[&id, &m.scale_int(-1)]])?;
    }
    Ok(m)
}

/// Labels of B_d^*: the edges of the d-cube as words over {0, 1, *} with a
/// single *, in lexicographic order with 0 < 1 < *.
pub fn b_star_labels(d: usize) -> Vec<String> {
    if d == 0 {
        return Vec::new();
    }
    if d == 1 {
        return vec![String::from("*")];
    }
    let inner = b_star_labels(d - 1);
    let mut out = Vec::with_capacity(d << (d - 1));
    for head in ['0', '1'] {
        out.extend(inner.iter().map(|l| format!("{}{}", head, l)));
    }
    for v in 0..1usize << (d - 1) {
        let mut s = String::from("*");
        for k in (0..d - 1).rev() {
            s.push(if v >> k & 1 == 1 { '1' } else { '0' });
        }
        out.push(s);
    }
    out
}

/// (E_d, F_d) with E_1 = [1 1], F_1 = [−1 1] and
/// E_d = [[E_{d−1}, O], [O, F_{d−1}], [I, I]],
/// F_d = [[F_{d−1}, O], [O, E_{d−1}], [−I, I]].
/// Rows follow `b_star_labels(d)`, columns the vertices of H(d, 2).
pub fn clique_boundary_pair(d: usize) -> Result<(ExactMatrix, ExactMatrix)> {
    if d == 0 || d > 20 {
        return Err(Error::Parameter(format!("hypercube dimension {} out of range", d)));
    }
    let mut e = ExactMatrix::from_i64(1, 2, vec![1, 1])?;
    let mut f = ExactMatrix::from_i64(1, 2, vec![-1, 1])?;
    for _ in 1..d {
        let id = ExactMatrix::identity(e.cols())?;
        let z = ExactMatrix::zeros(e.rows(), e.cols())?;
        let neg = id.scale_int(-1);
        let e2 = ExactMatrix::block(&[&[&e, &z], &[&z, &f], &[&id, &id]])?;
        let f2 = ExactMatrix::block(&[&[&f, &z], &[&z, &e], &[&neg, &id]])?;
        e = e2;
        f = f2;
    }
    Ok((e, f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Constructed,
    Ingested,
}

/// A symmetric matrix with zero diagonal, nonzero off-diagonal entries and
/// square `weight`·I.
#[derive(Clone, Debug, PartialEq)]
pub struct OmzdEntry {
    pub order: usize,
    pub matrix: ExactMatrix,
    pub weight: Rational,
    pub provenance: Provenance,
}

/// Checks the OMZD axioms and returns c with M² = cI.
pub fn verify_omzd(m: &ExactMatrix) -> Result<Rational> {
    let n = m.rows();
    if !m.is_square() || n == 0 {
        return Err(Error::NotOmzd(format!("{}x{} matrix", m.rows(), m.cols())));
    }
    if !m.is_symmetric() {
        return Err(Error::NotOmzd("not symmetric".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if (i == j) == m.is_nonzero_at(i, j) {
                let what = if i == j { "nonzero diagonal" } else { "zero off-diagonal entry" };
                return Err(Error::NotOmzd(format!("{} at ({}, {})", what, i, j)));
            }
        }
    }
    let sq = m.mul(m)?;
    let c = sq.entry(0, 0);
    if !c.is_positive() || sq != ExactMatrix::scalar(n, &c)? {
        return Err(Error::NotOmzd("square is not a positive multiple of I".into()));
    }
    Ok(c)
}

/// OMZD(n): [[0,1],[1,0]] for n = 2, a Paley conference matrix when
/// n ≡ 2 (mod 4) and n − 1 is a prime power, and otherwise whatever was
/// ingested, provided it passes the axioms.
pub fn omzd(n: usize) -> Result<OmzdEntry> {
    omzd_with_data(n, None)
}

pub fn omzd_with_data(n: usize, ingested: Option<&ExactMatrix>) -> Result<OmzdEntry> {
    if n % 2 == 1 || n == 4 || n == 0 {
        return Err(Error::Nonexistent(n));
    }
    if n == 2 {
        let m = ExactMatrix::from_i64(2, 2, vec![0, 1, 1, 0])?;
        return Ok(OmzdEntry { order: 2, matrix: m, weight: int(1), provenance: Provenance::Constructed });
    }
    if n % 4 == 2 {
        if let Some((p, k)) = prime_power(n - 1) {
            let m = paley_conference(p, k)?;
            let weight = verify_omzd(&m)?;
            return Ok(OmzdEntry { order: n, matrix: m, weight, provenance: Provenance::Constructed });
        }
    }
    match ingested {
        Some(m) if m.rows() == n => {
            let weight = verify_omzd(m)?;
            Ok(OmzdEntry { order: n, matrix: m.clone(), weight, provenance: Provenance::Ingested })
        }
        Some(m) => Err(Error::NotOmzd(format!("ingested matrix has order {}, wanted {}", m.rows(), n))),
        None => Err(Error::Unavailable(n)),
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|p| q % p == 0)?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// GF(p^k) with elements encoded as base-p digit vectors of polynomials.
struct FiniteField {
    p: usize,
    k: usize,
    /// monic irreducible modulus, low to high, length k + 1
    modulus: Vec<usize>,
}

impl FiniteField {
    fn new(p: usize, k: usize) -> Self {
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(k as u32))
                .map(|low| {
                    let mut c = digits(low, p, k);
                    c.push(1);
                    c
                })
                .find(|c| is_irreducible(c, p))
                .expect("irreducible polynomials exist in every degree")
        };
        FiniteField { p, k, modulus }
    }

    fn size(&self) -> usize {
        self.p.pow(self.k as u32)
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        let (x, y) = (digits(a, self.p, self.k), digits(b, self.p, self.k));
        let z: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + self.p - v) % self.p).collect();
        undigits(&z, self.p)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (digits(a, self.p, self.k), digits(b, self.p, self.k));
        let mut prod = vec![0usize; 2 * self.k];
        for (i, u) in x.iter().enumerate() {
            for (j, v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % self.p;
            }
        }
        let r = poly_rem(prod, &self.modulus, self.p);
        undigits(&r[..self.k], self.p)
    }
}

fn digits(mut a: usize, p: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut() {
        *slot = a % p;
        a /= p;
    }
    out
}

fn undigits(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Remainder of `a` modulo a monic `m`, padded to at least deg m entries.
fn poly_rem(mut a: Vec<usize>, m: &[usize], p: usize) -> Vec<usize> {
    let dm = m.len() - 1;
    for top in (dm..a.len()).rev() {
        let c = a[top];
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let slot = &mut a[top - dm + i];
                *slot = (*slot + p - (c * mi) % p) % p;
            }
        }
    }
    a.resize(a.len().max(dm), 0);
    a.truncate(dm.max(1));
    a
}

/// No monic factor of degree 1..=deg/2.
fn is_irreducible(c: &[usize], p: usize) -> bool {
    let deg = c.len() - 1;
    (1..=deg / 2).all(|fd| {
        (0..p.pow(fd as u32)).all(|low| {
            let mut f = digits(low, p, fd);
            f.push(1);
            poly_rem(c.to_vec(), &f, p).iter().any(|&x| x != 0)
        })
    })
}

/// Symmetric conference matrix of order q + 1 for q = p^k ≡ 1 (mod 4):
/// C[0][j] = C[i][0] = 1 off the diagonal, C[i][j] = χ(a_i − a_j).
fn paley_conference(p: usize, k: usize) -> Result<ExactMatrix> {
    let f = FiniteField::new(p, k);
    let q = f.size();
    let mut square = vec![false; q];
    for x in 1..q {
        square[f.mul(x, x)] = true;
    }
    let chi = |x: usize| -> i64 {
        if x == 0 {
            0
        } else if square[x] {
            1
        } else {
            -1
        }
    };
    ExactMatrix::from_fn(q + 1, q + 1, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) | (_, 0) => 1,
        _ => chi(f.sub(i - 1, j - 1)),
    })
}

#[derive(Clone, Debug)]
pub struct TensorSigning {
    pub orders: Vec<usize>,
    pub matrix: ExactMatrix,
    /// ∏ c_i
    pub weight: Rational,
    /// B² = weight·I
    pub square_verified: bool,
    /// support of B equals K_{n_1} × ... × K_{n_k}
    pub support_verified: bool,
}

/// Kronecker product of OMZDs, certified by B² = (∏ c_i)I rather than
/// normalizing each factor.
pub fn tensor_signing(orders: &[usize]) -> Result<TensorSigning> {
    tensor_signing_with(orders, |n| omzd(n))
}

pub fn tensor_signing_with(orders: &[usize], mut lookup: impl FnMut(usize) -> Result<OmzdEntry>) -> Result<TensorSigning> {
    if orders.is_empty() {
        return Err(Error::Parameter("no factors".into()));
    }
    let mut matrix: Option<ExactMatrix> = None;
    let mut graph: Option<Graph> = None;
    let mut weight = int(1);
    for &n in orders {
        let e = lookup(n)?;
        weight *= &e.weight;
        let k = Graph::from_fn(n, |_, _| true);
        matrix = Some(match matrix {
            None => e.matrix,
            Some(m) => m.kronecker(&e.matrix)?,
        });
        graph = Some(match graph {
            None => k,
            Some(g) => tensor_product(&g, &k),
        });
    }
    let matrix = matrix.expect("at least one factor");
    let graph = graph.expect("at least one factor");
    let square_verified = matrix.mul(&matrix)? == ExactMatrix::scalar(matrix.rows(), &weight)?;
    let support_verified = graph.matches_support(&matrix) && (0..matrix.rows()).all(|i| !matrix.is_nonzero_at(i, i));
    Ok(TensorSigning { orders: orders.to_vec(), matrix, weight, square_verified, support_verified })
}

/// ζ(d, j, t) = Σ_{i ≡ t (3)} C(d, i) Σ_h (−1)^h C(i, h) C(d − i, j − h),
/// alongside its closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZetaTable {
    pub d: u32,
    pub j: u32,
    pub t: u32,
    pub value: i64,
    /// (−3)^{⌈j/2⌉−1} C(d, j), or 0 at j = 0
    pub kappa: i64,
    /// which of the four closed-form cases applied
    pub case: u8,
}

pub fn zeta_direct(d: u32, j: u32, t: u32) -> i128 {
    let (d, j) = (d as i64, j as i64);
    (0..=d)
        .filter(|i| i % 3 == t as i64)
        .map(|i| binom_i(d, i) * (0..=j).map(|h| sign(h) * binom_i(i, h) * binom_i(d - i, j - h)).sum::<i128>())
        .sum()
}

fn sign(e: i64) -> i128 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed form as a (case, value) pair.
pub fn zeta_closed(d: u32, j: u32, t: u32) -> (u8, i128) {
    let (di, ji) = (d as i64, j as i64);
    let (s, r): (i64, i64) = match d % 3 {
        0 => (0, di / 3),
        1 => (-2, (di + 2) / 3),
        _ => (2, (di - 2) / 3),
    };
    let kappa = kappa(d, j);
    let two_d = 1i128 << d;
    let case = match (s, t) {
        (-2, 1) | (2, 0) | (0, 2) => 1,
        (-2, 0) | (2, 2) | (0, 1) => 2,
        _ if j % 2 == 0 => 3,
        _ => 4,
    };
    let value = match (case, j) {
        (1 | 2, 0) => (two_d - sign(di)) / 3,
        (1, _) => sign(r) * kappa,
        (2, _) => sign(r + ji) * kappa,
        (3, 0) => (two_d + 2 * sign(di)) / 3,
        (3, _) => sign(r + 1) * 2 * kappa,
        _ => 0,
    };
    (case, value)
}

fn kappa(d: u32, j: u32) -> i128 {
    if j == 0 {
        return 0;
    }
    (-3i128).pow(j.div_ceil(2) - 1) * binom_i(d as i64, j as i64)
}

/// Both evaluations; disagreement is a `LemmaViolation`. The closed form is
/// also checked for j > d, where both sides vanish.
pub fn zeta(d: u32, j: u32, t: u32) -> Result<ZetaTable> {
    if d < 3 || t > 2 || d > 60 {
        return Err(Error::Parameter(format!("ζ({}, {}, {}) needs 3 ≤ d ≤ 60 and t ≤ 2", d, j, t)));
    }
    let direct = zeta_direct(d, j, t);
    let (case, closed) = zeta_closed(d, j, t);
    let narrow = |x: i128| i64::try_from(x).map_err(|_| Error::Parameter(format!("ζ({}, {}, {}) overflows", d, j, t)));
    if direct != closed {
        return Err(Error::LemmaViolation { d, j, t, direct: narrow(direct)?, closed: narrow(closed)? });
    }
    Ok(ZetaTable { d, j, t, value: narrow(direct)?, kappa: narrow(kappa(d, j))?, case })
}

