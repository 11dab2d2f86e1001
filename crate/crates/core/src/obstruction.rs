//! Lower bounds on q(G) from the path polynomials Φ_j(G).
//!
//! For a distance-j pair {u, v}, the (u, v) entry of M^j for M in S(G) is a
//! sum over walks; the terms of length exactly j are the shortest paths. If
//! M has at most j distinct eigenvalues, M^j is a combination of lower
//! powers, all of which vanish at (u, v), so the shortest-path polynomial
//! has a common root with every edge variable nonzero. Each rule here
//! certifies that no such root exists, giving q(G) ≥ j + 1.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{distance_data, is_bipartite, is_triangle_free, DistanceData, Graph};
use crate::hamming::{hamming_graph, HammingIndex};
use crate::linalg::{gf2_kernel_with_odd_support, PrimeFieldMatrix};

pub const MONOMIAL_CAP: usize = 10_000_000;

/// Shortest paths between one distance-j pair, each path a sorted list of
/// edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPolynomial {
    pub pair: (usize, usize),
    pub monomials: Vec<Vec<usize>>,
}

impl PathPolynomial {
    /// Two monomials without a common variable.
    pub fn is_coprime_binomial(&self) -> bool {
        self.monomials.len() == 2 && self.monomials[0].iter().all(|e| self.monomials[1].binary_search(e).is_err())
    }
}

/// Φ_j(G) with pairs and monomials in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPolynomialSystem {
    pub j: usize,
    pub edge_count: usize,
    pub polynomials: Vec<PathPolynomial>,
}

impl PathPolynomialSystem {
    /// Ω: edge ids that occur, increasing.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.edge_count];
        for p in &self.polynomials {
            for m in &p.monomials {
                for &e in m {
                    seen[e] = true;
                }
            }
        }
        (0..self.edge_count).filter(|&e| seen[e]).collect()
    }

    /// μ_F(x): occurrences of each edge variable over the chosen polynomials.
    pub fn multiplicities(&self, family: &[usize]) -> BTreeMap<usize, usize> {
        let mut mu = BTreeMap::new();
        for &f in family {
            for m in &self.polynomials[f].monomials {
                for &e in m {
                    *mu.entry(e).or_insert(0) += 1;
                }
            }
        }
        mu
    }

    /// Number of polynomials each variable appears in.
    pub fn polynomials_per_variable(&self) -> BTreeMap<usize, usize> {
        let mut count = BTreeMap::new();
        for p in &self.polynomials {
            let mut vars: Vec<usize> = p.monomials.iter().flatten().copied().collect();
            vars.sort_unstable();
            vars.dedup();
            for e in vars {
                *count.entry(e).or_insert(0) += 1;
            }
        }
        count
    }
}

/// All shortest u–v paths, as sorted edge-id lists in lexicographic order.
fn shortest_paths(g: &Graph, dd: &DistanceData, u: usize, v: usize, budget: &mut usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    // depth-first from v back towards u along decreasing distance to u
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(v, Vec::new())];
    while let Some((x, edges)) = stack.pop() {
        if x == u {
            let mut m = edges;
            m.sort_unstable();
            out.push(m);
            if *budget == 0 {
                return Err(Error::CapExceeded(format!("more than {} monomials", MONOMIAL_CAP)));
            }
            *budget -= 1;
            continue;
        }
        let dx = dd.distance(u, x);
        for &w in g.neighbors(x) {
            if dd.distance(u, w) + 1 == dx {
                let mut e = edges.clone();
                e.push(g.edge_id(w, x).expect("neighbours share an edge"));
                stack.push((w, e));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Φ_j(G): one polynomial per distance-j pair u < v.
pub fn phi(g: &Graph, j: usize) -> Result<PathPolynomialSystem> {
    let dd = distance_data(g)?;
    if j == 0 || j > dd.diameter() {
        return Err(Error::Parameter(format!("j = {} outside 1..={}", j, dd.diameter())));
    }
    let mut budget = MONOMIAL_CAP;
    let mut polynomials = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if dd.distance(u, v) == j {
                polynomials.push(PathPolynomial { pair: (u, v), monomials: shortest_paths(g, &dd, u, v, &mut budget)? });
            }
        }
    }
    Ok(PathPolynomialSystem { j, edge_count: g.edge_count(), polynomials })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    Parity,
    SignExhaust,
    UniquePath,
    ParityTrace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// indices into the polynomial list of the system
    PolynomialIndices(Vec<usize>),
    /// a distance-j pair with a single shortest path
    Pair(usize, usize),
    None,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExhaustStats {
    pub assignments_tried: u64,
    /// per polynomial, how many assignments failed first on it
    pub first_failure: Vec<u64>,
}

/// q(G) ≥ bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionCertificate {
    pub kind: CertificateKind,
    pub j: usize,
    pub bound: usize,
    pub witness: Witness,
    pub stats: Option<ExhaustStats>,
}

/// Largest j for which some distance-j pair has exactly one shortest path;
/// that monomial never vanishes, so q ≥ j + 1.
pub fn unique_path_rule(g: &Graph) -> Option<ObstructionCertificate> {
    let dd = distance_data(g).ok()?;
    let n = g.n();
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..n {
        // number of shortest paths from u, by BFS layers
        let mut count = vec![0u64; n];
        count[u] = 1;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| dd.distance(u, v));
        for &v in &order[1..] {
            count[v] = g
                .neighbors(v)
                .iter()
                .filter(|&&w| dd.distance(u, w) + 1 == dd.distance(u, v))
                .map(|&w| count[w])
                .fold(0u64, |a, b| a.saturating_add(b));
        }
        for v in u + 1..n {
            let j = dd.distance(u, v);
            if count[v] == 1 && best.is_none_or(|(bj, _, _)| j > bj) {
                best = Some((j, u, v));
            }
        }
    }
    let (j, u, v) = best?;
    Some(ObstructionCertificate { kind: CertificateKind::UniquePath, j, bound: j + 1, witness: Witness::Pair(u, v), stats: None })
}

/// An odd family F of two-monomial coprime polynomials in which every
/// variable occurs an even number of times. Multiplying the relations
/// m₁ = −m₂ over F gives ∏ = (−1)^{|F|} ∏ with both products equal to the
/// same square, which is impossible with nonzero variables.
pub fn parity_certificate(sys: &PathPolynomialSystem) -> Result<Option<ObstructionCertificate>> {
    let binomials: Vec<usize> = (0..sys.polynomials.len()).filter(|&i| sys.polynomials[i].is_coprime_binomial()).collect();
    if binomials.is_empty() {
        return Ok(None);
    }
    let vars = sys.variables();
    let row_of: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(r, &e)| (e, r)).collect();
    let mut m = PrimeFieldMatrix::zeros(2, vars.len(), binomials.len())?;
    for (c, &i) in binomials.iter().enumerate() {
        for mono in &sys.polynomials[i].monomials {
            for e in mono {
                let r = row_of[e];
                let v = m.get(r, c);
                m.set(r, c, v ^ 1);
            }
        }
    }
    let Some(x) = gf2_kernel_with_odd_support(&m)? else {
        return Ok(None);
    };
    let family: Vec<usize> = x.ones.iter().map(|&c| binomials[c]).collect();
    verify_parity_family(sys, &family)?;
    Ok(Some(ObstructionCertificate {
        kind: CertificateKind::Parity,
        j: sys.j,
        bound: sys.j + 1,
        witness: Witness::PolynomialIndices(family),
        stats: None,
    }))
}

/// The three hypotheses on F: odd size, every member a coprime binomial,
/// every variable multiplicity even.
pub fn verify_parity_family(sys: &PathPolynomialSystem, family: &[usize]) -> Result<()> {
    let mut sorted = family.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != family.len() {
        return Err(Error::Verification("family repeats a polynomial".into()));
    }
    if family.len() % 2 == 0 {
        return Err(Error::Verification(format!("family has even size {}", family.len())));
    }
    if let Some(&f) = family.iter().find(|&&f| f >= sys.polynomials.len() || !sys.polynomials[f].is_coprime_binomial()) {
        return Err(Error::Verification(format!("polynomial {} is not a coprime binomial", f)));
    }
    if let Some((e, mu)) = sys.multiplicities(family).into_iter().find(|&(_, mu)| mu % 2 == 1) {
        return Err(Error::Verification(format!("variable {} occurs {} times", e, mu)));
    }
    Ok(())
}

/// Polynomials as bit masks over Ω, ready for enumeration.
#[derive(Clone, Debug)]
pub struct SignProblem {
    pub variables: Vec<usize>,
    masks: Vec<Vec<u32>>,
}

pub const SIGN_VARIABLE_CAP: usize = 32;

impl SignProblem {
    pub fn new(sys: &PathPolynomialSystem) -> Result<Self> {
        let variables = sys.variables();
        if variables.len() > SIGN_VARIABLE_CAP {
            return Err(Error::CapExceeded(format!("{} variables, at most {}", variables.len(), SIGN_VARIABLE_CAP)));
        }
        let bit: BTreeMap<usize, u32> = variables.iter().enumerate().map(|(b, &e)| (e, 1u32 << b)).collect();
        let masks = sys
            .polynomials
            .iter()
            .map(|p| p.monomials.iter().map(|m| m.iter().map(|e| bit[e]).fold(0, |a, b| a | b)).collect())
            .collect();
        Ok(SignProblem { variables, masks })
    }

    /// 2^|Ω|.
    pub fn space(&self) -> u64 {
        1u64 << self.variables.len()
    }

    pub fn polynomial_count(&self) -> usize {
        self.masks.len()
    }

    /// Index of the first polynomial whose monomials all share one sign
    /// under the assignment (bit set = variable negative), if any.
    pub fn first_failure(&self, x: u32) -> Option<usize> {
        self.masks.iter().position(|ms| {
            let s0 = (x & ms[0]).count_ones() & 1;
            ms[1..].iter().all(|&m| (x & m).count_ones() & 1 == s0)
        })
    }

    /// Scan [lo, hi) and stop at the first surviving assignment.
    pub fn scan(&self, lo: u64, hi: u64) -> RangeOutcome {
        let mut first_failure = vec![0u64; self.masks.len()];
        let mut tried = 0;
        for x in lo..hi.min(self.space()) {
            tried += 1;
            match self.first_failure(x as u32) {
                Some(i) => first_failure[i] += 1,
                None => return RangeOutcome { survivor: Some(x), tried, first_failure },
            }
        }
        RangeOutcome { survivor: None, tried, first_failure }
    }

    /// `width` contiguous disjoint ranges covering the space, split by the
    /// high bits.
    pub fn ranges(&self, width: usize) -> Vec<(u64, u64)> {
        let space = self.space();
        let width = (width.max(1) as u64).min(space);
        let step = space.div_ceil(width);
        (0..width).map(|k| (k * step, ((k + 1) * step).min(space))).filter(|(a, b)| a < b).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeOutcome {
    pub survivor: Option<u64>,
    pub tried: u64,
    pub first_failure: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignExhaust {
    /// No assignment survives every polynomial.
    Unsat(ObstructionCertificate),
    /// Smallest surviving assignment; inconclusive.
    Survivor { assignment: u64, variables: Vec<usize>, tried: u64 },
}

/// Merge range results in range order; the smallest survivor wins.
pub fn merge_ranges(problem: &SignProblem, j: usize, outcomes: Vec<RangeOutcome>) -> SignExhaust {
    let tried = outcomes.iter().map(|o| o.tried).sum();
    if let Some(x) = outcomes.iter().filter_map(|o| o.survivor).min() {
        return SignExhaust::Survivor { assignment: x, variables: problem.variables.clone(), tried };
    }
    let mut first_failure = vec![0u64; problem.polynomial_count()];
    for o in &outcomes {
        for (a, b) in first_failure.iter_mut().zip(&o.first_failure) {
            *a += b;
        }
    }
    SignExhaust::Unsat(ObstructionCertificate {
        kind: CertificateKind::SignExhaust,
        j,
        bound: j + 1,
        witness: Witness::None,
        stats: Some(ExhaustStats { assignments_tried: tried, first_failure }),
    })
}

/// Every ±1 assignment to Ω. An assignment survives a polynomial when its
/// monomials do not all take the same sign, a necessary condition for the
/// polynomial to vanish at some real point with those signs. Runs the
/// ranges one after another.
pub fn sign_exhaust(sys: &PathPolynomialSystem, parallel_width: usize) -> Result<SignExhaust> {
    let problem = SignProblem::new(sys)?;
    let outcomes = problem.ranges(parallel_width).into_iter().map(|(a, b)| problem.scan(a, b)).collect();
    Ok(merge_ranges(&problem, sys.j, outcomes))
}

/// A connected triangle-free non-bipartite graph of odd order has q ≥ 3.
pub fn parity_trace_rule(g: &Graph) -> Option<ObstructionCertificate> {
    let fires = g.n() % 2 == 1 && g.is_connected() && is_triangle_free(g) && !is_bipartite(g);
    fires.then_some(ObstructionCertificate { kind: CertificateKind::ParityTrace, j: 2, bound: 3, witness: Witness::None, stats: None })
}

/// Φ_d(H(d, 3)) and whether its image under x ↦ (x, 0, ..., 0) is a
/// sub-system of Φ_d(H(e, n)).
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub system: PathPolynomialSystem,
    pub target: (usize, usize),
    pub verified: bool,
}

pub fn hamming_embedding_system(d: usize, e: usize, n: usize) -> Result<EmbeddingReport> {
    if d < 2 || e < d || n < 3 {
        return Err(Error::Parameter(format!("need 2 ≤ d ≤ e and n ≥ 3, got d = {}, e = {}, n = {}", d, e, n)));
    }
    let small = hamming_graph(d, 3, 1)?;
    let system = phi(&small, d)?;
    let big = hamming_graph(e, n, 1)?;
    let big_dd = distance_data(&big)?;
    let (si, bi) = (HammingIndex::new(d, 3)?, HammingIndex::new(e, n)?);
    let embed = |v: usize| {
        let mut w = si.word(v);
        w.resize(e, 0);
        bi.index_of(&w)
    };
    let small_edges = small.edges();
    let edge_image: Vec<usize> = small_edges
        .iter()
        .map(|&(a, b)| big.edge_id(embed(a).min(embed(b)), embed(a).max(embed(b))).expect("edges map to edges"))
        .collect();
    let mut budget = MONOMIAL_CAP;
    let mut verified = true;
    for p in &system.polynomials {
        let (u, v) = (embed(p.pair.0), embed(p.pair.1));
        let (u, v) = (u.min(v), u.max(v));
        if big_dd.distance(u, v) != d {
            verified = false;
            break;
        }
        let target = shortest_paths(&big, &big_dd, u, v, &mut budget)?;
        let mut image: Vec<Vec<usize>> = p
            .monomials
            .iter()
            .map(|m| {
                let mut t: Vec<usize> = m.iter().map(|&x| edge_image[x]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        image.sort();
        if image != target {
            verified = false;
            break;
        }
    }
    Ok(EmbeddingReport { system, target: (e, n), verified })
}
