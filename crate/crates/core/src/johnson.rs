//! Johnson graphs J(n, d) through binary words: the boundary matrices W,
//! the signed adjacency A, the Laplacian pair Q/P, the PSD witness R, the
//! degree profile of the signing, weighing matrices and tight frames.
//!
//! Word convention: position p (1-based) is bit p−1, a word is printed with
//! position n leftmost, and B_{n,d} is listed in decreasing numeric order.
//! So words with a one in position n come first and `W_{n,d}` splits into
//! the blocks [[W_{n−1,d−1}, O], [(−1)^d I, W_{n−1,d}]].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{binom, binomial, Combinations};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, annihilator_check_int, int, rank_rational, ExactMatrix};

/// A binary word of length n, stored as its sorted 1-based one-positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    n: usize,
    ones: Vec<usize>,
}

impl BinaryWord {
    pub fn new(n: usize, mut ones: Vec<usize>) -> Result<Self> {
        ones.sort_unstable();
        ones.dedup();
        if ones.first().is_some_and(|&p| p == 0) || ones.last().is_some_and(|&p| p > n) {
            return Err(Error::Parameter(format!("positions {:?} outside 1..={}", ones, n)));
        }
        Ok(BinaryWord { n, ones })
    }

    /// Parse a 0/1 string; the leftmost character is position n.
    pub fn parse(s: &str) -> Result<Self> {
        let n = s.len();
        let mut ones = Vec::new();
        for (k, ch) in s.chars().enumerate() {
            match ch {
                '1' => ones.push(n - k),
                '0' => {}
                _ => return Err(Error::Parameter(format!("bad character {:?} in word", ch))),
            }
        }
        BinaryWord::new(n, ones)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn weight(&self) -> usize {
        self.ones.len()
    }

    /// X(α): positions holding a one, increasing.
    pub fn x(&self) -> &[usize] {
        &self.ones
    }

    /// Z(α): positions holding a zero, increasing.
    pub fn z(&self) -> Vec<usize> {
        (1..=self.n).filter(|p| self.ones.binary_search(p).is_err()).collect()
    }

    /// Z_0, ..., Z_d: zeros below the first one, between consecutive ones,
    /// and above the last one.
    pub fn gaps(&self) -> Vec<Vec<usize>> {
        let d = self.ones.len();
        let mut out = vec![Vec::new(); d + 1];
        for p in self.z() {
            let i = self.ones.partition_point(|&x| x < p);
            out[i].push(p);
        }
        out
    }

    pub fn gap_sizes(&self) -> Vec<usize> {
        self.gaps().iter().map(Vec::len).collect()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.ones.binary_search(&p).is_ok()
    }
}

impl core::fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for p in (1..=self.n).rev() {
            f.write_str(if self.contains(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// B_{n,d} in the fixed order together with its ranking function.
#[derive(Clone, Debug)]
pub struct JohnsonIndex {
    n: usize,
    d: usize,
    words: Vec<BinaryWord>,
    ranker: Ranker,
}

impl JohnsonIndex {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d > n {
            return Err(Error::Parameter(format!("weight {} exceeds length {}", d, n)));
        }
        let total = binomial(n as u64, d as u64)
            .filter(|&t| t <= linalg::MAX_ENTRIES as u128)
            .ok_or_else(|| Error::Parameter(format!("C({}, {}) is too large to index", n, d)))?
            as usize;
        let ranker = Ranker::new(n, d);
        let mut words = vec![BinaryWord { n, ones: Vec::new() }; total];
        for c in Combinations::new(n, d) {
            let ones: Vec<usize> = c.iter().map(|&p| p + 1).collect();
            let k = ranker.rank(&ones);
            words[k] = BinaryWord { n, ones };
        }
        Ok(JohnsonIndex { n, d, words, ranker })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn word(&self, k: usize) -> &BinaryWord {
        &self.words[k]
    }

    /// Position of a word (given by its sorted one-positions) in the list.
    pub fn index_of(&self, ones: &[usize]) -> usize {
        self.ranker.rank(ones)
    }
}

/// Rank in decreasing numeric order. The colex rank Σ C(x_i − 1, i) is the
/// rank in increasing numeric order.
#[derive(Clone, Debug)]
struct Ranker {
    d: usize,
    total: usize,
    /// C(p, k) for p ≤ n, k ≤ d, saturating; entries a valid word reads
    /// are below `total` and so exact
    pascal: Vec<usize>,
}

impl Ranker {
    fn new(n: usize, d: usize) -> Self {
        let w = d + 1;
        let mut pascal = vec![0usize; (n + 1) * w];
        for p in 0..=n {
            pascal[p * w] = 1;
            for k in 1..=d.min(p) {
                pascal[p * w + k] = pascal[(p - 1) * w + k - 1].saturating_add(pascal[(p - 1) * w + k]);
            }
        }
        Ranker { d, total: pascal[n * w + d], pascal }
    }

    /// C(p − 1, i + 1), zero past the table.
    fn term(&self, p: usize, i: usize) -> usize {
        if i + 1 > self.d {
            0
        } else {
            self.pascal[(p - 1) * (self.d + 1) + i + 1]
        }
    }

    fn rank(&self, ones: &[usize]) -> usize {
        debug_assert_eq!(ones.len(), self.d);
        let colex: usize = ones.iter().enumerate().map(|(i, &p)| self.term(p, i)).sum();
        self.total - 1 - colex
    }
}

fn check_range(n: usize, d: usize, lo: usize) -> Result<()> {
    if d < lo || d + 1 > n {
        return Err(Error::Parameter(format!("need {} ≤ d ≤ n − 1, got n = {}, d = {}", lo, n, d)));
    }
    Ok(())
}

/// W_{n,d}: rows B_{n,d}, columns B_{n,d+1}, entry (−1)^{i−1} when α is β
/// with its i-th smallest one removed.
pub fn boundary_w(n: usize, d: usize) -> Result<ExactMatrix> {
    check_range(n, d, 0)?;
    let rows = binom(n, d);
    let cols = binom(n, d + 1);
    let mut m = vec![0i64; linalg::check_shape(rows, cols)?];
    let upper = JohnsonIndex::new(n, d + 1)?;
    let lower = Ranker::new(n, d);
    let mut alpha = Vec::with_capacity(d);
    for (j, beta) in upper.words().iter().enumerate() {
        for i in 0..=d {
            alpha.clear();
            alpha.extend(beta.x().iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &p)| p));
            let r = lower.rank(&alpha);
            m[r * cols + j] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    ExactMatrix::from_i64(rows, cols, m)
}

/// h(α, β): ones shared by both words strictly between the two positions
/// where they differ. Only meaningful at Hamming distance 2.
pub fn h_value(a: &BinaryWord, b: &BinaryWord) -> usize {
    let removed = a.x().iter().find(|p| !b.contains(**p)).copied().unwrap_or(0);
    let added = b.x().iter().find(|p| !a.contains(**p)).copied().unwrap_or(0);
    let (lo, hi) = (removed.min(added), removed.max(added));
    a.x().iter().filter(|&&p| p > lo && p < hi && b.contains(p)).count()
}

/// Neighbours of a word in J(n, d) with the sign (−1)^h of the edge, as
/// (word index, sign) pairs.
fn signed_neighbours(idx: &JohnsonIndex, alpha: &BinaryWord) -> Vec<(usize, i64)> {
    let x = alpha.x();
    let z = alpha.z();
    let rk = &idx.ranker;
    // t(p, i): colex term of position p sitting at index i
    let t = |p: usize, i: usize| rk.term(p, i) as i128;
    let base: i128 = x.iter().enumerate().map(|(i, &p)| t(p, i)).sum();
    // shift costs for moving x_k one index down or up, as prefix sums
    let mut down = vec![0i128; x.len() + 1];
    let mut up = vec![0i128; x.len() + 1];
    for (k, &p) in x.iter().enumerate() {
        down[k + 1] = down[k] + if k > 0 { t(p, k - 1) } else { 0 } - t(p, k);
        up[k + 1] = up[k] + t(p, k + 1) - t(p, k);
    }
    let mut out = Vec::with_capacity(x.len() * z.len());
    for (ri, &r) in x.iter().enumerate() {
        for &a in &z {
            let pos = x.partition_point(|&p| p < a);
            // β = α − r + a; h counts the ones of α strictly between r and a
            let (colex, h) = if r < a {
                (base - t(r, ri) + down[pos] - down[ri + 1] + t(a, pos - 1), pos - ri - 1)
            } else {
                (base - t(r, ri) + up[ri] - up[pos] + t(a, pos), ri - pos)
            };
            out.push((rk.total - 1 - colex as usize, if h % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// A_{n,d}: (−1)^{h(α,β)} on Johnson-adjacent pairs.
pub fn signed_adjacency_a(n: usize, d: usize) -> Result<ExactMatrix> {
    check_range(n, d, 1)?;
    let idx = JohnsonIndex::new(n, d)?;
    let size = idx.len();
    let mut m = vec![0i64; linalg::check_shape(size, size)?];
    for (k, alpha) in idx.words().iter().enumerate() {
        for (j, s) in signed_neighbours(&idx, alpha) {
            m[k * size + j] = s;
        }
    }
    ExactMatrix::from_i64(size, size, m)
}

/// Q_{n,d} = Wᵀ_{n,d−1} W_{n,d−1} and P_{n,d} = W_{n,d} Wᵀ_{n,d}, each
/// checked against its entrywise description in terms of A_{n,d}:
/// Q = A + dI and P = (n − d)I − A.
pub fn laplacian_pair(n: usize, d: usize) -> Result<(ExactMatrix, ExactMatrix)> {
    check_range(n, d, 1)?;
    let w_low = boundary_w(n, d - 1)?;
    let w = boundary_w(n, d)?;
    let q = w_low.transpose().mul(&w_low)?;
    let p = w.mul(&w.transpose())?;
    let a = signed_adjacency_a(n, d)?;
    if q != a.add_identity_int(d as i64)? {
        return Err(Error::Verification(format!("Q_{{{},{}}} differs from its entrywise form", n, d)));
    }
    if p != a.scale_int(-1).add_identity_int((n - d) as i64)? {
        return Err(Error::Verification(format!("P_{{{},{}}} differs from its entrywise form", n, d)));
    }
    Ok((q, p))
}

/// P_{n,d} alone.
pub fn up_laplacian_p(n: usize, d: usize) -> Result<ExactMatrix> {
    check_range(n, d, 1)?;
    let w = boundary_w(n, d)?;
    w.mul(&w.transpose())
}

/// M_{n,d} = [P_{n−1,d−1} | W_{n−1,d−1}].
pub fn frame_matrix_m(n: usize, d: usize) -> Result<ExactMatrix> {
    if d < 2 || n < d + 1 {
        return Err(Error::Parameter(format!("need d ≥ 2 and n ≥ d + 1, got n = {}, d = {}", n, d)));
    }
    let p = up_laplacian_p(n - 1, d - 1)?;
    let w = boundary_w(n - 1, d - 1)?;
    ExactMatrix::block(&[&[&p, &w]])
}

/// R_{n,d} = Mᵀ M: positive semidefinite with the support of J(n, d).
pub fn psd_witness_r(n: usize, d: usize) -> Result<ExactMatrix> {
    let m = frame_matrix_m(n, d)?;
    m.transpose().mul(&m)
}

/// Sign counts of one row of A_{n,d}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub k_plus: usize,
    pub k_minus: usize,
    /// zeros sitting in odd-indexed gaps
    pub r_value: usize,
    /// zeros sitting in even-indexed gaps
    pub s_value: usize,
}

/// Closed form for (k₊, k₋): for odd d, ((d+1)(n−d)/2, (d−1)(n−d)/2); for
/// even d, d(n−d)/2 ± r. The direct count of signs in the row is taken as
/// well and must agree.
pub fn degree_profile(n: usize, d: usize, word: &BinaryWord) -> Result<DegreeProfile> {
    check_range(n, d, 1)?;
    let idx = JohnsonIndex::new(n, d)?;
    checked_profile(&idx, word)
}

/// Every vertex of J(n, d) in index order, one index build for all rows.
pub fn degree_profiles(n: usize, d: usize) -> Result<Vec<DegreeProfile>> {
    check_range(n, d, 1)?;
    let idx = JohnsonIndex::new(n, d)?;
    idx.words().iter().map(|w| checked_profile(&idx, w)).collect()
}

fn checked_profile(idx: &JohnsonIndex, word: &BinaryWord) -> Result<DegreeProfile> {
    let (n, d) = (idx.n(), idx.d());
    if word.len() != n || word.weight() != d {
        return Err(Error::Parameter(format!("word {} is not in B_{{{},{}}}", word, n, d)));
    }
    let gaps = word.gap_sizes();
    let r: usize = gaps.iter().skip(1).step_by(2).sum();
    let s: usize = gaps.iter().step_by(2).sum();
    let (kp, km) = if d % 2 == 1 {
        ((d + 1) * (n - d) / 2, (d - 1) * (n - d) / 2)
    } else {
        (d * (n - d) / 2 + r, d * (n - d) / 2 - r)
    };
    let nb = signed_neighbours(idx, word);
    let dp = nb.iter().filter(|e| e.1 > 0).count();
    let dm = nb.len() - dp;
    if (dp, dm) != (kp, km) {
        return Err(Error::Verification(format!(
            "word {}: closed form ({}, {}) but row count ({}, {})",
            word, kp, km, dp, dm
        )));
    }
    Ok(DegreeProfile { k_plus: kp, k_minus: km, r_value: r, s_value: s })
}

/// (k₊, k₋) by listing the signed neighbours of the word.
pub fn degree_profile_direct(n: usize, d: usize, word: &BinaryWord) -> Result<(usize, usize)> {
    let idx = JohnsonIndex::new(n, d)?;
    let nb = signed_neighbours(&idx, word);
    let plus = nb.iter().filter(|e| e.1 > 0).count();
    Ok((plus, nb.len() - plus))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeighingCertificate {
    pub d: usize,
    pub order: usize,
    pub weight: usize,
    pub verified: bool,
}

/// A_{2d,d} A_{2d,d}ᵀ = d² I.
pub fn weighing_check(d: usize) -> Result<WeighingCertificate> {
    if d == 0 {
        return Err(Error::Parameter("d must be positive".into()));
    }
    let a = signed_adjacency_a(2 * d, d)?;
    let prod = a.mul(&a.transpose())?;
    let target = ExactMatrix::identity(a.rows())?.scale_int((d * d) as i64);
    Ok(WeighingCertificate { d, order: a.rows(), weight: d * d, verified: prod == target })
}

#[derive(Clone, Debug)]
pub struct FrameCertificate {
    /// Columns are the frame vectors.
    pub vectors: ExactMatrix,
    pub ambient_dim: usize,
    pub frame_rank: usize,
    /// M Mᵀ = n P_{n−1,d−1}
    pub gram_identity: bool,
    /// M Mᵀ is n(n − 1) times a projector
    pub tight: bool,
    /// Mᵀ M has exactly the off-diagonal support of J(n, d)
    pub johnson_support: bool,
}

/// Columns of M_{n,d} as a tight frame of rank C(n−2, d−1).
pub fn frame_vectors(n: usize, d: usize) -> Result<FrameCertificate> {
    if d < 2 || n < 2 * d {
        return Err(Error::Parameter(format!("need d ≥ 2 and n ≥ 2d, got n = {}, d = {}", n, d)));
    }
    let m = frame_matrix_m(n, d)?;
    let mmt = m.mul(&m.transpose())?;
    let p = up_laplacian_p(n - 1, d - 1)?;
    let gram_identity = mmt == p.scale_int(n as i64);
    let tight = linalg::is_idempotent_scaled(&mmt, &int((n * (n - 1)) as i64))?;
    let r = m.transpose().mul(&m)?;
    let johnson_support = johnson_graph(n, d, 1)?.matches_support(&r);
    Ok(FrameCertificate {
        ambient_dim: m.rows(),
        frame_rank: rank_rational(&m),
        vectors: m,
        gram_identity,
        tight,
        johnson_support,
    })
}

/// Distance-j graph of J(n, d): words meeting in d − j ones.
pub fn johnson_graph(n: usize, d: usize, j: usize) -> Result<Graph> {
    check_range(n, d, 1)?;
    if j == 0 || j > d.min(n - d) {
        return Err(Error::Parameter(format!("distance {} outside 1..={}", j, d.min(n - d))));
    }
    let idx = JohnsonIndex::new(n, d)?;
    let masks: Vec<Vec<u64>> = idx.words().iter().map(|w| word_mask(n, w)).collect();
    Ok(Graph::from_fn(idx.len(), |a, b| {
        let common: u32 = masks[a].iter().zip(&masks[b]).map(|(x, y)| (x & y).count_ones()).sum();
        common as usize == d - j
    })
    .with_labels(idx.words().iter().map(|w| format!("{}", w)).collect::<Vec<String>>())?)
}

fn word_mask(n: usize, w: &BinaryWord) -> Vec<u64> {
    let mut m = vec![0u64; n.div_ceil(64).max(1)];
    for &p in w.x() {
        m[(p - 1) / 64] |= 1 << ((p - 1) % 64);
    }
    m
}

/// Kneser graph K(n, d) = J(n, d, d).
pub fn kneser_graph(n: usize, d: usize) -> Result<Graph> {
    if n < 2 * d {
        return Err(Error::Parameter(format!("K({}, {}) needs n ≥ 2d", n, d)));
    }
    johnson_graph(n, d, d)
}

/// One verified statement about a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub verified: bool,
    pub witness_refs: Vec<String>,
}

impl Claim {
    fn new(name: &str, verified: bool, refs: &[&str]) -> Self {
        Claim { name: name.into(), verified, witness_refs: refs.iter().map(|s| String::from(*s)).collect() }
    }
}

/// Every identity of the Johnson apparatus that applies to (n, d).
pub fn johnson_claims(n: usize, d: usize) -> Result<Vec<Claim>> {
    check_range(n, d, 1)?;
    let mut out = Vec::new();
    let w_low = boundary_w(n, d - 1)?;
    let w = boundary_w(n, d)?;
    out.push(Claim::new("boundary chain W_{n,d-1} W_{n,d} = 0", w_low.mul(&w)?.is_zero(), &["W_{n,d-1}", "W_{n,d}"]));
    out.push(Claim::new("rank W_{n,d} = C(n-1,d)", rank_rational(&w) == binom(n - 1, d), &["W_{n,d}"]));
    let (q, p) = laplacian_pair(n, d)?;
    let nn = n as i64;
    out.push(Claim::new("Q + P = nI", q.add(&p)? == ExactMatrix::identity(q.rows())?.scale_int(nn), &["Q_{n,d}", "P_{n,d}"]));
    out.push(Claim::new("P W = n W", p.mul(&w)? == w.scale_int(nn), &["P_{n,d}", "W_{n,d}"]));
    out.push(Claim::new("P^2 = n P", linalg::is_idempotent_scaled(&p, &int(nn))?, &["P_{n,d}"]));
    let a = signed_adjacency_a(n, d)?;
    let dd = d as i64;
    out.push(Claim::new(
        "(A + dI)(A - (n-d)I) = 0",
        annihilator_check_int(&a, &[-dd, nn - dd])?,
        &["A_{n,d}"],
    ));
    out.push(Claim::new("A W_{n,d} = -d W_{n,d}", a.mul(&w)? == w.scale_int(-dd), &["A_{n,d}", "W_{n,d}"]));
    let wl_t = w_low.transpose();
    out.push(Claim::new(
        "A W^T_{n,d-1} = (n-d) W^T_{n,d-1}",
        a.mul(&wl_t)? == wl_t.scale_int(nn - dd),
        &["A_{n,d}", "W_{n,d-1}"],
    ));
    out.push(Claim::new(
        "rank(A + dI) = C(n-1,d-1)",
        rank_rational(&a.add_identity_int(dd)?) == binom(n - 1, d - 1),
        &["A_{n,d}"],
    ));
    if d >= 2 {
        let r = psd_witness_r(n, d)?;
        let nm = (n * (n - 1)) as i64;
        let support = johnson_graph(n, d, 1)?.matches_support(&r);
        let label = if n >= 2 * d { "mr certificate: " } else { "" };
        out.push(Claim::new(
            &format!("{}rank R = C(n-2,d-1), R(R - n(n-1)I) = 0, support J(n,d)", label),
            rank_rational(&r) == binom(n - 2, d - 1) && annihilator_check_int(&r, &[0, nm])? && support,
            &["R_{n,d}"],
        ));
    }
    Ok(out)
}

/// A zero forcing set of J(n, d) with C(n, d) − C(n−2, d−1) vertices: every
/// word except those with position n set and position n − 1 clear. Whether
/// it forces is for the caller to check by closure.
pub fn forcing_candidate(n: usize, d: usize) -> Result<Vec<usize>> {
    check_range(n, d, 1)?;
    let idx = JohnsonIndex::new(n, d)?;
    Ok((0..idx.len())
        .filter(|&k| {
            let w = idx.word(k);
            !(w.contains(n) && !w.contains(n - 1))
        })
        .collect())
}
