//! Label-canonical simple graphs with stable edge ids.

mod distance;
mod fold;
mod forcing;
mod iso;
mod ops;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

pub use distance::{distance_data, intersection_array, DistanceData, IntersectionArray};
pub use fold::{antipodal_fold, Fold};
pub use forcing::{
    induced_max_degree_floor, is_forcing_set, zero_forcing_closure, zero_forcing_number_exhaustive, DegreeFloor,
    FloorMode, ZeroForcing,
};
pub use iso::{find_isomorphism, is_isomorphism};
pub use ops::{cartesian_product, complement, is_bipartite, is_triangle_free, tensor_product, union};

/// Simple graph on vertices 0..n. Edges are (u, v) with u < v, sorted; an
/// edge's id is its position in that list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Parameter(format!("self-loop at {}", u)));
            }
            if u >= n || v >= n {
                return Err(Error::Parameter(format!("edge ({}, {}) outside 0..{}", u, v, n)));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parameter(format!("duplicate edge {:?}", w[0])));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        Ok(Graph { n, edges: list, adj, labels: None })
    }

    /// Graph whose edges are the pairs i < j with `adjacent(i, j)`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, edges).expect("pairs i < j are valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Parameter(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Common degree, if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, |a| a.len());
        self.adj.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn adjacency_matrix(&self) -> Result<ExactMatrix> {
        ExactMatrix::from_fn(self.n, self.n, |i, j| self.has_edge(i, j) as i64)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            pos[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| pos[*u] != usize::MAX && pos[*v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(vertices.len(), edges).expect("induced edges are valid")
    }

    /// Graph on the same vertices with the pairs where `m` is nonzero off
    /// the diagonal.
    pub fn from_support(m: &ExactMatrix) -> Result<Graph> {
        if !m.is_square() {
            return Err(Error::Shape(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        Ok(Graph::from_fn(m.rows(), |i, j| m.is_nonzero_at(i, j) || m.is_nonzero_at(j, i)))
    }

    /// Whether the off-diagonal nonzero pattern of `m` is exactly this graph.
    pub fn matches_support(&self, m: &ExactMatrix) -> bool {
        m.rows() == self.n
            && m.cols() == self.n
            && (0..self.n).all(|i| {
                (0..self.n).all(|j| i == j || m.is_nonzero_at(i, j) == self.has_edge(i, j))
            })
    }
}

/// Graph with a ±1 sign on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    base: Graph,
    signs: Vec<i8>,
}

impl SignedGraph {
    pub fn new(base: Graph, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != base.edge_count() {
            return Err(Error::Parameter(format!(
                "{} signs for {} edges",
                signs.len(),
                base.edge_count()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parameter("signs must be +1 or -1".into()));
        }
        Ok(SignedGraph { base, signs })
    }

    /// Signed graph read off a symmetric matrix with ±1 off-diagonal entries.
    pub fn from_matrix(m: &ExactMatrix) -> Result<Self> {
        let base = Graph::from_support(m)?;
        let mut signs = Vec::with_capacity(base.edge_count());
        for &(u, v) in base.edges() {
            match m.get_i64(u, v) {
                Some(1) => signs.push(1),
                Some(-1) => signs.push(-1),
                _ => return Err(Error::Parameter(format!("entry ({}, {}) is not ±1", u, v))),
            }
        }
        SignedGraph::new(base, signs)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, edge: usize) -> i8 {
        self.signs[edge]
    }

    pub fn negative_edges(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn matrix(&self) -> Result<ExactMatrix> {
        let n = self.base.n();
        let mut v = vec![0i64; n * n];
        for (k, &(a, b)) in self.base.edges().iter().enumerate() {
            v[a * n + b] = self.signs[k] as i64;
            v[b * n + a] = self.signs[k] as i64;
        }
        ExactMatrix::from_i64(n, n, v)
    }
}
