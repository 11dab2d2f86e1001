//! Association schemes: axiom checks, first eigenmatrices of the Johnson and
//! Hamming schemes, the idempotents E_I = Σ_{i∈I} E_i written in the basis
//! A_0, ..., A_d, and conjugacy-class schemes of finite groups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::combinatorics::binom_i;
use crate::error::{Error, Result};
use crate::graph::{distance_data, Graph};
use crate::linalg::{int, is_idempotent_scaled, rank_rational, ExactMatrix, Rational};

/// A verified scheme with its intersection numbers p[i][j][k].
#[derive(Clone, Debug)]
pub struct SchemeData {
    n: usize,
    matrices: Vec<ExactMatrix>,
    p: Vec<Vec<Vec<u64>>>,
    symmetric: bool,
}

impl SchemeData {
    pub fn order(&self) -> usize {
        self.n
    }

    /// d, the number of non-identity classes.
    pub fn classes(&self) -> usize {
        self.matrices.len() - 1
    }

    pub fn matrices(&self) -> &[ExactMatrix] {
        &self.matrices
    }

    pub fn intersection_number(&self, i: usize, j: usize, k: usize) -> u64 {
        self.p[i][j][k]
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Valency of class j.
    pub fn valency(&self, j: usize) -> u64 {
        self.p[j][j][0]
    }

    /// Graph whose edges are the pairs in the classes of `set`.
    pub fn union_graph(&self, set: &[usize]) -> Graph {
        Graph::from_fn(self.n, |x, y| set.iter().any(|&j| self.matrices[j].is_nonzero_at(x, y)))
    }
}

fn axiom(axiom: &'static str, detail: String) -> Error {
    Error::Axiom { axiom, detail }
}

/// Checks A_0 = I, Σ A_i = J, closure under transposition and that every
/// product A_i A_j is a non-negative integer combination of the A_k.
pub fn verify_scheme(matrices: &[ExactMatrix]) -> Result<SchemeData> {
    let first = matrices.first().ok_or_else(|| Error::Shape("no matrices".into()))?;
    let n = first.rows();
    for (i, a) in matrices.iter().enumerate() {
        if a.rows() != n || a.cols() != n {
            return Err(Error::Shape(format!("A_{} is {}x{}, expected {}x{}", i, a.rows(), a.cols(), n, n)));
        }
        let zero_one = (0..n).all(|x| (0..n).all(|y| a.get_i64(x, y).is_some_and(|v| v == 0 || v == 1)));
        if !zero_one {
            return Err(axiom("0/1 entries", format!("A_{} has an entry outside {{0, 1}}", i)));
        }
    }
    if *first != ExactMatrix::identity(n)? {
        return Err(axiom("A_0 = I", String::from("A_0 differs from the identity")));
    }
    // class of each pair
    let mut class = vec![usize::MAX; n * n];
    for (i, a) in matrices.iter().enumerate() {
        for x in 0..n {
            for y in 0..n {
                if a.is_nonzero_at(x, y) {
                    if class[x * n + y] != usize::MAX {
                        return Err(axiom("sum is J", format!("({}, {}) lies in A_{} and A_{}", x, y, class[x * n + y], i)));
                    }
                    class[x * n + y] = i;
                }
            }
        }
    }
    if let Some(pos) = class.iter().position(|&c| c == usize::MAX) {
        return Err(axiom("sum is J", format!("({}, {}) lies in no class", pos / n, pos % n)));
    }
    let mut symmetric = true;
    for (i, a) in matrices.iter().enumerate() {
        let t = a.transpose();
        if t == *a {
            continue;
        }
        symmetric = false;
        if !matrices.iter().any(|b| *b == t) {
            return Err(axiom("transpose closure", format!("A_{}ᵀ is not a class", i)));
        }
    }
    // one representative pair per class
    let reps: Vec<usize> = (0..matrices.len())
        .map(|k| class.iter().position(|&c| c == k).ok_or_else(|| axiom("nonempty classes", format!("A_{} is zero", k))))
        .collect::<Result<_>>()?;
    let d1 = matrices.len();
    let mut p = vec![vec![vec![0u64; d1]; d1]; d1];
    for i in 0..d1 {
        for j in 0..d1 {
            let prod = matrices[i].mul(&matrices[j])?;
            let coeffs: Vec<i64> = reps.iter().map(|&r| prod.get_i64(r / n, r % n).unwrap_or(-1)).collect();
            // the product must agree with Σ p_k A_k on every pair
            let ok = (0..n * n).all(|pos| prod.get_i64(pos / n, pos % n) == Some(coeffs[class[pos]]));
            if !ok {
                return Err(axiom("products in span", format!("A_{} A_{} is not constant on classes", i, j)));
            }
            for (k, &c) in coeffs.iter().enumerate() {
                p[i][j][k] = c as u64;
            }
        }
    }
    Ok(SchemeData { n, matrices: matrices.to_vec(), p, symmetric })
}

/// The distance scheme of a distance-regular graph.
pub fn scheme_from_graph(g: &Graph) -> Result<SchemeData> {
    verify_scheme(&distance_data(g)?.distance_matrices()?)
}

/// First eigenmatrix: `p[i][j]` = P_j(i), the eigenvalue of A_j on the
/// i-th eigenspace, of dimension `multiplicities[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenMatrixData {
    pub p: Vec<Vec<Rational>>,
    pub multiplicities: Vec<usize>,
}

impl EigenMatrixData {
    pub fn classes(&self) -> usize {
        self.p.len() - 1
    }

    pub fn valency(&self, j: usize) -> Rational {
        self.p[0][j].clone()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.p[i][j]
    }
}

/// P_j(i) = Σ_h (−1)^{j−h} C(d−i, h) C(d−h, j−h) C(n−d−i+h, h) with
/// m_i = C(n, i) − C(n, i−1). Uses min(d, n − d) classes.
pub fn johnson_eigenmatrix(n: usize, d: usize) -> Result<EigenMatrixData> {
    if d == 0 || n < d + 1 {
        return Err(Error::Parameter(format!("J({}, {}) needs 1 ≤ d ≤ n − 1", n, d)));
    }
    let d = d.min(n - d) as i64;
    let n = n as i64;
    let p = (0..=d)
        .map(|i| {
            (0..=d)
                .map(|j| {
                    let v: i128 = (0..=j)
                        .map(|h| {
                            let s = if (j - h) % 2 == 0 { 1 } else { -1 };
                            s * binom_i(d - i, h) * binom_i(d - h, j - h) * binom_i(n - d - i + h, h)
                        })
                        .sum();
                    int(v as i64)
                })
                .collect()
        })
        .collect();
    let multiplicities = (0..=d).map(|i| (binom_i(n, i) - binom_i(n, i - 1)) as usize).collect();
    Ok(EigenMatrixData { p, multiplicities })
}

/// P_j(i) = Σ_h (−1)^h (n−1)^{j−h} C(i, h) C(d−i, j−h) with
/// m_i = (n−1)^i C(d, i).
pub fn hamming_eigenmatrix(d: usize, n: usize) -> Result<EigenMatrixData> {
    if d == 0 || n < 2 || d > 30 {
        return Err(Error::Parameter(format!("H({}, {}) needs 1 ≤ d ≤ 30 and n ≥ 2", d, n)));
    }
    let (d, q) = (d as i64, n as i128 - 1);
    let p = (0..=d)
        .map(|i| {
            (0..=d)
                .map(|j| {
                    let v: i128 = (0..=j)
                        .map(|h| {
                            let s = if h % 2 == 0 { 1 } else { -1 };
                            s * q.pow((j - h) as u32) * binom_i(i, h) * binom_i(d - i, j - h)
                        })
                        .sum();
                    Rational::from_integer(v.into())
                })
                .collect()
        })
        .collect();
    let multiplicities = (0..=d).map(|i| (q.pow(i as u32) * binom_i(d, i)) as usize).collect();
    Ok(EigenMatrixData { p, multiplicities })
}

/// ∏ over distinct i of (A_j − P_j(i) I) vanishes for every j, and the
/// multiplicities sum to the order.
pub fn check_eigenmatrix(scheme: &SchemeData, eig: &EigenMatrixData) -> Result<bool> {
    if eig.classes() != scheme.classes() {
        return Err(Error::Shape(format!("{} eigenmatrix classes for a {}-class scheme", eig.classes(), scheme.classes())));
    }
    if eig.multiplicities.iter().sum::<usize>() != scheme.order() {
        return Ok(false);
    }
    for (j, a) in scheme.matrices().iter().enumerate() {
        let roots: BTreeSet<Rational> = eig.p.iter().map(|row| row[j].clone()).collect();
        let roots: Vec<Rational> = roots.into_iter().collect();
        if !crate::linalg::annihilator_check(a, &roots)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// E_I together with the classes J it is supported on.
#[derive(Clone, Debug)]
pub struct IdempotentWitness {
    pub i_set: Vec<usize>,
    /// classes j ≥ 1 with a nonzero coefficient
    pub j_set: Vec<usize>,
    /// coefficient of A_j, j = 0..=d
    pub coefficients: Vec<Rational>,
    pub matrix: ExactMatrix,
    /// trace of E_I, which equals its rank
    pub rank: usize,
    /// whether the graph on the classes J is connected
    pub connected: bool,
}

/// E_I = (1/n) Σ_j [Σ_{i∈I} m_i P_j(i)/P_j(0)] A_j, with E_I² = E_I, a
/// constant diagonal and off-diagonal support exactly A_J checked exactly.
pub fn idempotent_ei(scheme: &SchemeData, eig: &EigenMatrixData, i_set: &[usize]) -> Result<IdempotentWitness> {
    if !scheme.is_symmetric() {
        return Err(Error::RequiresSymmetric);
    }
    let d = scheme.classes();
    if eig.classes() != d {
        return Err(Error::Shape(format!("{} eigenmatrix classes for a {}-class scheme", eig.classes(), d)));
    }
    let set: BTreeSet<usize> = i_set.iter().copied().collect();
    if set.is_empty() || set.len() > d || set.iter().any(|&i| i > d) {
        return Err(Error::Parameter(format!("I = {:?} is not a nonempty proper subset of 0..={}", i_set, d)));
    }
    let n = Rational::from_integer(scheme.order().into());
    let coefficients: Vec<Rational> = (0..=d)
        .map(|j| {
            let s: Rational = set
                .iter()
                .map(|&i| Rational::from_integer(eig.multiplicities[i].into()) * &eig.p[i][j] / &eig.p[0][j])
                .sum();
            s / &n
        })
        .collect();
    let mut matrix = ExactMatrix::zeros(scheme.order(), scheme.order())?;
    for (a, c) in scheme.matrices().iter().zip(&coefficients) {
        if !c.is_zero() {
            matrix = matrix.add(&a.scale(c))?;
        }
    }
    if !is_idempotent_scaled(&matrix, &Rational::one())? {
        return Err(Error::Verification(format!("E_I for I = {:?} is not idempotent", i_set)));
    }
    let j_set: Vec<usize> = (1..=d).filter(|&j| !coefficients[j].is_zero()).collect();
    let graph = scheme.union_graph(&j_set);
    if !graph.matches_support(&matrix) || !crate::linalg::constant_diagonal(&matrix) {
        return Err(Error::Verification(format!("E_I for I = {:?} has the wrong pattern", i_set)));
    }
    let trace = matrix.trace();
    if !trace.is_integer() {
        return Err(Error::Verification(format!("E_I for I = {:?} has trace {}", i_set, trace)));
    }
    let rank = trace.to_integer().try_into().map_err(|_| Error::Verification("negative trace".into()))?;
    Ok(IdempotentWitness { i_set: set.into_iter().collect(), j_set, coefficients, matrix, rank, connected: graph.is_connected() })
}

/// Every nonempty proper I with |I| ≤ cap, in lexicographic order of the
/// sorted index lists, each verified.
pub fn two_eig_search(scheme: &SchemeData, eig: &EigenMatrixData, cap: usize) -> Result<Vec<IdempotentWitness>> {
    let d = scheme.classes();
    if d >= 20 {
        return Err(Error::CapExceeded(format!("2^{} subsets", d + 1)));
    }
    let mut sets: Vec<Vec<usize>> = (1u32..(1 << (d + 1)) - 1)
        .map(|mask| (0..=d).filter(|&i| mask >> i & 1 == 1).collect::<Vec<usize>>())
        .filter(|s| s.len() <= cap)
        .collect();
    sets.sort();
    sets.iter().map(|s| idempotent_ei(scheme, eig, s)).collect()
}

/// One entry of a character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharValue {
    Rational(Rational),
    /// real but irrational, kept out of exact arithmetic
    Irrational,
    /// not real
    Complex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjugacyClass {
    pub size: usize,
    pub name: String,
    /// element index in the group table
    pub representative: usize,
}

/// A validated character table. Row orthogonality is checked on every
/// pair of rows whose values are all rational.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTableData {
    order: usize,
    classes: Vec<ConjugacyClass>,
    table: Vec<Vec<CharValue>>,
}

impl CharacterTableData {
    pub fn new(order: usize, classes: Vec<ConjugacyClass>, table: Vec<Vec<CharValue>>) -> Result<Self> {
        let k = classes.len();
        if k == 0 || table.len() != k || table.iter().any(|r| r.len() != k) {
            return Err(Error::CharacterTable(format!("table must be {}x{}", k, k)));
        }
        if classes.iter().map(|c| c.size).sum::<usize>() != order {
            return Err(Error::CharacterTable(format!("class sizes do not sum to {}", order)));
        }
        let t = CharacterTableData { order, classes, table };
        let exact: Vec<usize> = (0..k).filter(|&i| t.is_exact(i)).collect();
        for (a, &i) in exact.iter().enumerate() {
            for &i2 in &exact[a..] {
                let s: Rational = (0..k)
                    .map(|j| Rational::from_integer(t.classes[j].size.into()) * t.value(i, j) * t.value(i2, j))
                    .sum();
                let want = if i == i2 { Rational::from_integer(order.into()) } else { Rational::zero() };
                if s != want {
                    return Err(Error::CharacterTable(format!("rows {} and {} are not orthogonal", i, i2)));
                }
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn rows(&self) -> usize {
        self.table.len()
    }

    pub fn is_exact(&self, i: usize) -> bool {
        self.table[i].iter().all(|v| matches!(v, CharValue::Rational(_)))
    }

    pub fn is_real(&self, i: usize) -> bool {
        self.table[i].iter().all(|v| !matches!(v, CharValue::Complex))
    }

    /// χ_i(h_j); panics on a non-rational entry.
    pub fn value(&self, i: usize, j: usize) -> Rational {
        match &self.table[i][j] {
            CharValue::Rational(r) => r.clone(),
            other => panic!("χ_{}(h_{}) is {:?}", i, j, other),
        }
    }

    pub fn raw(&self, i: usize, j: usize) -> &CharValue {
        &self.table[i][j]
    }
}

/// A finite group as a multiplication table, `mul[x][y]` = xy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|r| r.len() != n) {
            return Err(Error::GroupTable(String::from("table must be square and nonempty")));
        }
        for (x, row) in mul.iter().enumerate() {
            let mut seen = vec![false; n];
            for &z in row {
                if z >= n || core::mem::replace(&mut seen[z], true) {
                    return Err(Error::GroupTable(format!("row {} is not a permutation", x)));
                }
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for row in &mul {
                if core::mem::replace(&mut seen[row[y]], true) {
                    return Err(Error::GroupTable(format!("column {} is not a permutation", y)));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::GroupTable(String::from("no identity")))?;
        let inverse = (0..n).map(|x| (0..n).find(|&y| mul[x][y] == identity).expect("latin square")).collect();
        // all triples while cheap, otherwise a stride through them
        let total = n * n * n;
        let step = (total / 2_000_000).max(1);
        let mut t = 0;
        while t < total {
            let (x, y, z) = (t / (n * n), t / n % n, t % n);
            if mul[mul[x][y]][z] != mul[x][mul[y][z]] {
                return Err(Error::GroupTable(format!("({}·{})·{} ≠ {}·({}·{})", x, y, z, x, y, z)));
            }
            t += step;
        }
        Ok(GroupTable { mul, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// Conjugacy class of x, sorted.
    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.order()).map(|g| self.mul(self.mul(g, x), self.inverse(g))).collect();
        set.into_iter().collect()
    }
}

/// Conjugacy-class scheme and the idempotents of its non-linear characters.
#[derive(Clone, Debug)]
pub struct ConjugacyScheme {
    pub scheme: SchemeData,
    /// (character index, witness) for each exact non-linear character
    pub witnesses: Vec<(usize, IdempotentWitness)>,
    /// non-linear characters skipped because their values are irrational
    pub skipped_irrational: Vec<usize>,
}

/// A_i(x, y) = [y⁻¹x ∈ C_i] in the order of the table's classes, and for
/// every non-linear character χ, E = (χ(e)/|H|) Σ_j χ(h_j) A_j verified to
/// be idempotent with support the normal Cayley graph on the classes where
/// χ does not vanish.
pub fn conjugacy_scheme(group: &GroupTable, chars: &CharacterTableData) -> Result<ConjugacyScheme> {
    let n = group.order();
    if chars.order() != n {
        return Err(Error::CharacterTable(format!("table for order {} but group has order {}", chars.order(), n)));
    }
    if let Some(i) = (0..chars.rows()).find(|&i| !chars.is_real(i)) {
        return Err(Error::AmbivalentOnly { character: i });
    }
    let mut class_index = vec![usize::MAX; n];
    for (k, c) in chars.classes().iter().enumerate() {
        if c.representative >= n {
            return Err(Error::CharacterTable(format!("representative {} out of range", c.representative)));
        }
        let members = group.class_of(c.representative);
        if members.len() != c.size {
            return Err(Error::CharacterTable(format!("class {} has {} elements, table says {}", c.name, members.len(), c.size)));
        }
        for m in members {
            if class_index[m] != usize::MAX {
                return Err(Error::CharacterTable(format!("classes {} and {} overlap", class_index[m], k)));
            }
            class_index[m] = k;
        }
    }
    let e_class = class_index[group.identity()];
    if e_class != 0 {
        return Err(Error::CharacterTable(String::from("the first class must be the identity")));
    }
    let k = chars.classes().len();
    let mut entries = vec![vec![0i64; n * n]; k];
    for x in 0..n {
        for y in 0..n {
            entries[class_index[group.mul(group.inverse(y), x)]][x * n + y] = 1;
        }
    }
    let matrices: Vec<ExactMatrix> = entries.into_iter().map(|e| ExactMatrix::from_i64(n, n, e)).collect::<Result<_>>()?;
    let scheme = verify_scheme(&matrices)?;
    let mut witnesses = Vec::new();
    let mut skipped = Vec::new();
    let order = Rational::from_integer(n.into());
    for i in 0..chars.rows() {
        if !chars.is_exact(i) {
            if !matches!(chars.raw(i, 0), CharValue::Rational(r) if r.is_one()) {
                skipped.push(i);
            }
            continue;
        }
        let deg = chars.value(i, 0);
        if deg.is_one() {
            continue;
        }
        let coefficients: Vec<Rational> = (0..k).map(|j| &deg / &order * chars.value(i, j)).collect();
        let mut matrix = ExactMatrix::zeros(n, n)?;
        for (a, c) in matrices.iter().zip(&coefficients) {
            if !c.is_zero() {
                matrix = matrix.add(&a.scale(c))?;
            }
        }
        if !is_idempotent_scaled(&matrix, &Rational::one())? {
            return Err(Error::Verification(format!("idempotent of character {} fails E² = E", i)));
        }
        let j_set: Vec<usize> = (1..k).filter(|&j| !coefficients[j].is_zero()).collect();
        let graph = scheme.union_graph(&j_set);
        if !graph.matches_support(&matrix) {
            return Err(Error::Verification(format!("idempotent of character {} has the wrong support", i)));
        }
        let rank = rank_rational(&matrix);
        witnesses.push((
            i,
            IdempotentWitness { i_set: vec![i], j_set, coefficients, matrix, rank, connected: graph.is_connected() },
        ));
    }
    Ok(ConjugacyScheme { scheme, witnesses, skipped_irrational: skipped })
}
