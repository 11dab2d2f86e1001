//! Lower and upper bounds on q(G) gathered from every rule in the crate,
//! each backed by a certificate that was checked on the spot.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{antipodal_fold, distance_data, find_isomorphism, intersection_array, Graph};
use crate::linalg::{minimal_polynomial_degree, ExactMatrix};
use crate::obstruction::{
    parity_certificate, parity_trace_rule, phi, unique_path_rule, verify_parity_family, CertificateKind,
    ObstructionCertificate, PathPolynomialSystem, SignExhaust, Witness,
};

pub const DEFAULT_SIGN_VARIABLE_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundRule {
    /// q ≥ 2 once there is an edge, q ≥ 1 always.
    Trivial,
    UniquePath,
    Parity,
    /// A supplied parity family, re-verified against Φ_j.
    ParityFamily,
    SignExhaust,
    ParityTrace,
    /// Distinct eigenvalues of the 0/1 adjacency matrix; equals
    /// diameter + 1 for a distance-regular graph.
    DiameterPlusOne,
    AdjacencySpectrum,
    /// A supplied matrix with the graph's off-diagonal pattern.
    Matrix,
    /// Signed quotient of an antipodal double cover of the graph.
    Fold,
}

impl BoundRule {
    pub fn name(self) -> &'static str {
        match self {
            BoundRule::Trivial => "trivial",
            BoundRule::UniquePath => "unique-path",
            BoundRule::Parity => "parity",
            BoundRule::ParityFamily => "parity-family",
            BoundRule::SignExhaust => "sign-exhaust",
            BoundRule::ParityTrace => "parity-trace",
            BoundRule::DiameterPlusOne => "diameter+1",
            BoundRule::AdjacencySpectrum => "adjacency-spectrum",
            BoundRule::Matrix => "matrix",
            BoundRule::Fold => "fold",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEvidence {
    pub value: usize,
    pub rule: BoundRule,
    pub detail: String,
    pub certificate: Option<ObstructionCertificate>,
}

/// A bound known from the literature but not checked here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CitedBound {
    pub value: usize,
    pub source: String,
}

#[derive(Clone, Debug, Default)]
pub struct QBoundOptions {
    /// sign_exhaust runs only when |Ω| is at most this.
    pub sign_variable_cap: usize,
    /// Largest j tried by the Φ_j rules; defaults to the diameter.
    pub max_j: Option<usize>,
    /// Named candidate matrices, e.g. bundled signings.
    pub matrices: Vec<(String, ExactMatrix)>,
    /// Named graphs whose antipodal fold should be this graph.
    pub covers: Vec<(String, Graph)>,
    /// Named (j, family) parity witnesses indexing Φ_j.
    pub parity_families: Vec<(String, usize, Vec<usize>)>,
    pub cited_upper: Vec<CitedBound>,
}

impl QBoundOptions {
    pub fn new() -> Self {
        QBoundOptions { sign_variable_cap: DEFAULT_SIGN_VARIABLE_CAP, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
pub struct QBoundReport {
    pub graph_id: String,
    pub order: usize,
    pub diameter: usize,
    pub distance_regular: bool,
    pub lower: usize,
    pub upper: usize,
    pub resolved: bool,
    /// Every lower bound found, not just the best.
    pub lower_evidence: Vec<BoundEvidence>,
    pub upper_evidence: Vec<BoundEvidence>,
    pub cited: Vec<CitedBound>,
    /// Inconclusive or skipped work, in the order it happened.
    pub notes: Vec<String>,
}

impl QBoundReport {
    pub fn best_lower(&self) -> Option<&BoundEvidence> {
        self.lower_evidence.iter().filter(|e| e.value == self.lower).min_by_key(|e| e.rule)
    }

    pub fn best_upper(&self) -> Option<&BoundEvidence> {
        self.upper_evidence.iter().filter(|e| e.value == self.upper).min_by_key(|e| e.rule)
    }
}

fn distinct_eigenvalues(m: &ExactMatrix) -> Result<usize> {
    let k = minimal_polynomial_degree(m, m.rows().max(1))?;
    Ok(k.degree().expect("a matrix of order n has minimal polynomial degree at most n"))
}

fn obstruction(rule: BoundRule, detail: String, cert: ObstructionCertificate) -> BoundEvidence {
    BoundEvidence { value: cert.bound, rule, detail, certificate: Some(cert) }
}

/// Bounds on q(G). `exhaust` runs the sign search on one system so the
/// caller chooses sequential or threaded enumeration.
pub fn q_bounds(
    graph_id: &str,
    g: &Graph,
    options: &QBoundOptions,
    mut exhaust: impl FnMut(&PathPolynomialSystem) -> Result<SignExhaust>,
) -> Result<QBoundReport> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let dd = distance_data(g)?;
    let diameter = dd.diameter();
    let ia = intersection_array(g);
    let mut notes = Vec::new();
    let mut lower_evidence = Vec::new();
    let mut upper_evidence = Vec::new();

    let trivial = if g.edge_count() > 0 { 2 } else { 1 };
    lower_evidence.push(BoundEvidence {
        value: trivial,
        rule: BoundRule::Trivial,
        detail: format!("{} edges", g.edge_count()),
        certificate: None,
    });
    if let Some(c) = unique_path_rule(g) {
        if c.j >= 1 {
            lower_evidence.push(obstruction(BoundRule::UniquePath, format!("unique shortest path at distance {}", c.j), c));
        }
    }
    if let Some(c) = parity_trace_rule(g) {
        lower_evidence.push(obstruction(BoundRule::ParityTrace, "odd order, triangle-free, not bipartite".into(), c));
    }

    // Φ_j rules, largest j first; a success settles every smaller j.
    let max_j = options.max_j.unwrap_or(diameter).min(diameter);
    let best_lower = |ev: &Vec<BoundEvidence>| ev.iter().map(|e| e.value).max().unwrap_or(1);
    for j in (2..=max_j).rev() {
        if best_lower(&lower_evidence) >= j + 1 {
            break;
        }
        let sys = match phi(g, j) {
            Ok(s) => s,
            Err(e) => {
                notes.push(format!("phi at j = {}: {}", j, e));
                continue;
            }
        };
        for (name, fj, family) in &options.parity_families {
            if *fj != j {
                continue;
            }
            match verify_parity_family(&sys, family) {
                Ok(()) => {
                    let cert = ObstructionCertificate {
                        kind: CertificateKind::Parity,
                        j,
                        bound: j + 1,
                        witness: Witness::PolynomialIndices(family.clone()),
                        stats: None,
                    };
                    lower_evidence.push(obstruction(
                        BoundRule::ParityFamily,
                        format!("{}: |F| = {} at j = {}", name, family.len(), j),
                        cert,
                    ));
                }
                Err(e) => notes.push(format!("parity family {} rejected: {}", name, e)),
            }
        }
        if let Some(c) = parity_certificate(&sys)? {
            let size = match &c.witness {
                Witness::PolynomialIndices(f) => f.len(),
                _ => 0,
            };
            lower_evidence.push(obstruction(BoundRule::Parity, format!("|F| = {} at j = {}", size, j), c));
            continue;
        }
        if best_lower(&lower_evidence) >= j + 1 {
            continue;
        }
        let omega = sys.variables().len();
        if omega > options.sign_variable_cap {
            notes.push(format!("sign search at j = {} skipped: {} variables exceed the cap {}", j, omega, options.sign_variable_cap));
            continue;
        }
        match exhaust(&sys)? {
            SignExhaust::Unsat(c) => {
                let tried = c.stats.as_ref().map_or(0, |s| s.assignments_tried);
                lower_evidence.push(obstruction(
                    BoundRule::SignExhaust,
                    format!("no sign pattern survives at j = {} ({} assignments)", j, tried),
                    c,
                ));
            }
            SignExhaust::Survivor { assignment, tried, .. } => {
                notes.push(format!("sign search at j = {} inconclusive: assignment {:#x} survives after {} tried", j, assignment, tried));
            }
        }
    }

    let adjacency = g.adjacency_matrix()?;
    let k = distinct_eigenvalues(&adjacency)?;
    if ia.is_some() {
        if k != diameter + 1 {
            return Err(Error::Verification(format!(
                "distance-regular graph of diameter {} has {} distinct eigenvalues",
                diameter, k
            )));
        }
        upper_evidence.push(BoundEvidence {
            value: k,
            rule: BoundRule::DiameterPlusOne,
            detail: format!("diameter {}", diameter),
            certificate: None,
        });
    } else {
        upper_evidence.push(BoundEvidence {
            value: k,
            rule: BoundRule::AdjacencySpectrum,
            detail: "0/1 adjacency matrix".into(),
            certificate: None,
        });
    }
    for (name, m) in &options.matrices {
        if !m.is_symmetric() || !g.matches_support(m) {
            notes.push(format!("matrix {} rejected: not symmetric with this graph's pattern", name));
            continue;
        }
        upper_evidence.push(BoundEvidence {
            value: distinct_eigenvalues(m)?,
            rule: BoundRule::Matrix,
            detail: name.clone(),
            certificate: None,
        });
    }
    for (name, cover) in &options.covers {
        match antipodal_fold(cover) {
            Some(f) => {
                // carry the signing over to this graph's labels when they differ
                let map = if f.folded.n() == g.n() && f.folded.edges() == g.edges() {
                    Some((0..g.n()).collect::<Vec<_>>())
                } else {
                    find_isomorphism(&f.folded, g)
                };
                let Some(map) = map else {
                    notes.push(format!("fold of {} is not isomorphic to this graph", name));
                    continue;
                };
                let s = f.signed.matrix()?;
                let mut inv = alloc::vec![0; g.n()];
                for (a, &b) in map.iter().enumerate() {
                    inv[b] = a;
                }
                let moved = ExactMatrix::from_fn(g.n(), g.n(), |i, j| s.get_i64(inv[i], inv[j]).expect("signed entries are small"))?;
                if !g.matches_support(&moved) {
                    return Err(Error::Verification(format!("transported fold of {} lost the pattern", name)));
                }
                upper_evidence.push(BoundEvidence {
                    value: distinct_eigenvalues(&moved)?,
                    rule: BoundRule::Fold,
                    detail: format!("fold of {}, {} negative edges", name, f.signed.negative_edges()),
                    certificate: None,
                });
            }
            None => notes.push(format!("{} is not an antipodal double cover", name)),
        }
    }

    let lower = best_lower(&lower_evidence);
    let upper = upper_evidence.iter().map(|e| e.value).min().expect("the adjacency bound is always present");
    if lower > upper {
        return Err(Error::Verification(format!("{}: lower bound {} exceeds upper bound {}", graph_id, lower, upper)));
    }
    Ok(QBoundReport {
        graph_id: graph_id.into(),
        order: g.n(),
        diameter,
        distance_regular: ia.is_some(),
        lower,
        upper,
        resolved: lower == upper,
        lower_evidence,
        upper_evidence,
        cited: options.cited_upper.clone(),
        notes,
    })
}
