//! Abstract simplicial complexes with signed boundary matrices, up and down
//! Laplacians and the graphs on faces they induce.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::linalg::ExactMatrix;

pub const FACE_CAP: usize = 1_000_000;

/// Faces grouped by dimension; `faces[k]` holds the k-dimensional faces
/// (k + 1 vertices), each sorted, the list in lexicographic order. The empty
/// face is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Vec<Vec<usize>>>,
    index: Vec<BTreeMap<Vec<usize>, usize>>,
}

impl SimplicialComplex {
    /// From a downward-closed family; rejects families that are not.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        let mut total = 0usize;
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            if f.last().is_some_and(|&v| v >= n) {
                return Err(Error::Parameter(format!("face {:?} has a vertex outside 0..{}", f, n)));
            }
            let k = f.len() - 1;
            if by_dim.len() <= k {
                by_dim.resize(k + 1, BTreeSet::new());
            }
            if by_dim[k].insert(f) {
                total += 1;
                if total > FACE_CAP {
                    return Err(Error::CapExceeded(format!("more than {} faces", FACE_CAP)));
                }
            }
        }
        for k in 1..by_dim.len() {
            for f in &by_dim[k] {
                for skip in 0..f.len() {
                    let sub: Vec<usize> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    if !by_dim[k - 1].contains(&sub) {
                        return Err(Error::Parameter(format!("{:?} is a face but {:?} is not", f, sub)));
                    }
                }
            }
        }
        let faces: Vec<Vec<Vec<usize>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = faces.iter().map(|fs| fs.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()).collect();
        Ok(SimplicialComplex { n, faces, index })
    }

    /// Downward closure of the given facets.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut all = BTreeSet::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() > 20 {
                return Err(Error::CapExceeded(format!("facet with {} vertices", f.len())));
            }
            for mask in 1u32..1 << f.len() {
                all.insert((0..f.len()).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect::<Vec<usize>>());
                if all.len() > FACE_CAP {
                    return Err(Error::CapExceeded(format!("more than {} faces", FACE_CAP)));
                }
            }
        }
        SimplicialComplex::new(n, all)
    }

    /// Every nonempty subset of an n-set.
    pub fn power_set(n: usize) -> Result<Self> {
        SimplicialComplex::from_facets(n, &[(0..n).collect()])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Top dimension, or None for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, d: usize) -> &[Vec<usize>] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn face_index(&self, face: &[usize]) -> Option<usize> {
        self.index.get(face.len().checked_sub(1)?)?.get(face).copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    fn check_dim(&self, d: usize, up: bool) -> Result<()> {
        let top = self.dim().ok_or_else(|| Error::Parameter("empty complex".into()))?;
        if d > top || (up && d == top) {
            return Err(Error::Parameter(format!("dimension {} out of range for a {}-dimensional complex", d, top)));
        }
        Ok(())
    }

    /// W_d: rows Δ_{d−1}, columns Δ_d, entry (−1)^{i−1} when the row face is
    /// the column face minus its i-th vertex. W_0 is the all-ones row.
    pub fn boundary(&self, d: usize) -> Result<ExactMatrix> {
        self.check_dim(d, false)?;
        let cols = &self.faces[d];
        if d == 0 {
            return ExactMatrix::ones(1, cols.len());
        }
        let rows = self.faces[d - 1].len();
        let mut m = vec![0i64; crate::linalg::check_shape(rows, cols.len())?];
        let mut sub = Vec::with_capacity(d);
        for (c, f) in cols.iter().enumerate() {
            for skip in 0..f.len() {
                sub.clear();
                sub.extend(f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                let r = self.index[d - 1][&sub];
                m[r * cols.len() + c] = if skip % 2 == 0 { 1 } else { -1 };
            }
        }
        ExactMatrix::from_i64(rows, cols.len(), m)
    }

    /// L_d^↓ = W_dᵀ W_d.
    pub fn down_laplacian(&self, d: usize) -> Result<ExactMatrix> {
        let w = self.boundary(d)?;
        w.transpose().mul(&w)
    }

    /// L_d^↑ = W_{d+1} W_{d+1}ᵀ.
    pub fn up_laplacian(&self, d: usize) -> Result<ExactMatrix> {
        self.check_dim(d, true)?;
        let w = self.boundary(d + 1)?;
        w.mul(&w.transpose())
    }

    /// d-faces adjacent when they share a (d−1)-face.
    pub fn derived_graph_down(&self, d: usize) -> Result<Graph> {
        self.check_dim(d, false)?;
        let fs = &self.faces[d];
        Ok(Graph::from_fn(fs.len(), |a, b| shared(&fs[a], &fs[b]) == d))
    }

    /// d-faces adjacent when their union is a (d+1)-face.
    pub fn derived_graph_up(&self, d: usize) -> Result<Graph> {
        self.check_dim(d, true)?;
        let fs = &self.faces[d];
        Ok(Graph::from_fn(fs.len(), |a, b| {
            shared(&fs[a], &fs[b]) == d && {
                let mut u: Vec<usize> = fs[a].iter().chain(&fs[b]).copied().collect();
                u.sort_unstable();
                u.dedup();
                self.index[d + 1].contains_key(&u)
            }
        }))
    }
}

fn shared(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

/// Complete subgraphs of G.
pub fn clique_complex(g: &Graph) -> Result<SimplicialComplex> {
    let mut faces = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    stack.reverse();
    while let Some(c) = stack.pop() {
        let last = *c.last().expect("nonempty");
        for &w in g.neighbors(last).iter().rev() {
            if w > last && c.iter().all(|&u| g.has_edge(u, w)) {
                let mut next = c.clone();
                next.push(w);
                stack.push(next);
            }
        }
        faces.push(c);
        if faces.len() > FACE_CAP {
            return Err(Error::CapExceeded(format!("more than {} cliques", FACE_CAP)));
        }
    }
    SimplicialComplex::new(g.n(), faces)
}

/// Independent sets of G.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    clique_complex(&complement(g))
}

/// Sets of pairwise disjoint edges; complex vertices are edge ids of G.
pub fn matching_complex(g: &Graph) -> Result<SimplicialComplex> {
    let edges = g.edges();
    let disjoint = Graph::from_fn(edges.len(), |a, b| {
        let (x, y) = (edges[a], edges[b]);
        x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
    });
    clique_complex(&disjoint)
}

/// The matrix with its diagonal set to zero.
pub fn signed_variant(l: &ExactMatrix) -> Result<ExactMatrix> {
    let n = l.rows();
    let entries = l.entries();
    let kept = entries
        .into_iter()
        .enumerate()
        .map(|(k, v)| if k / n == k % n { num_traits::Zero::zero() } else { v })
        .collect();
    ExactMatrix::from_rationals(n, l.cols(), kept)
}

