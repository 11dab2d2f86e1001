use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

const FAR: u16 = u16::MAX;

/// All-pairs distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    diameter: usize,
    dist: Vec<u16>,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Number of unordered pairs at distance j.
    pub fn pair_count(&self, j: usize) -> usize {
        let c = self.dist.iter().filter(|&&d| d as usize == j).count();
        if j == 0 {
            c
        } else {
            c / 2
        }
    }

    /// Distance-j graph.
    pub fn distance_graph(&self, j: usize) -> Graph {
        Graph::from_fn(self.n, |u, v| self.distance(u, v) == j)
    }

    /// 0/1 distance-j matrix.
    pub fn distance_matrix(&self, j: usize) -> Result<ExactMatrix> {
        ExactMatrix::from_fn(self.n, self.n, |u, v| (self.distance(u, v) == j) as i64)
    }

    /// A_0, ..., A_diameter.
    pub fn distance_matrices(&self) -> Result<Vec<ExactMatrix>> {
        (0..=self.diameter).map(|j| self.distance_matrix(j)).collect()
    }
}

pub(crate) fn bfs(g: &Graph, src: usize) -> Vec<u16> {
    let mut d = vec![FAR; g.n()];
    d[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(v) = q.pop_front() {
        for &w in g.neighbors(v) {
            if d[w] == FAR {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

pub fn distance_data(g: &Graph) -> Result<DistanceData> {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for v in 0..n {
        let row = bfs(g, v);
        if row.contains(&FAR) {
            return Err(Error::NotConnected);
        }
        dist.extend(row);
    }
    let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
    Ok(DistanceData { n, diameter, dist })
}

/// {b_0, ..., b_{d−1}; c_1, ..., c_d} of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    pub d: usize,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Self {
        IntersectionArray { d: c.len(), b, c }
    }

    pub fn valency(&self) -> usize {
        self.b.first().copied().unwrap_or(0)
    }

    /// c_i with c_0 = 0 and i in 0..=d.
    pub fn c_at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// b_i with b_d = 0.
    pub fn b_at(&self, i: usize) -> usize {
        if i >= self.d {
            0
        } else {
            self.b[i]
        }
    }

    /// a_i = b_0 − b_i − c_i.
    pub fn a(&self) -> Vec<usize> {
        (0..=self.d).map(|i| self.valency() - self.b_at(i) - self.c_at(i)).collect()
    }

    /// b_0 ≥ b_1 ≥ ... and c_1 ≤ c_2 ≤ ..., with c_1 = 1.
    pub fn is_monotone(&self) -> bool {
        self.c.first().is_none_or(|&c1| c1 == 1)
            && self.b.windows(2).all(|w| w[0] >= w[1])
            && self.c.windows(2).all(|w| w[0] <= w[1])
    }

    /// Number of vertices implied by the array.
    pub fn order(&self) -> Option<usize> {
        let mut k = 1usize;
        let mut total = 1usize;
        for i in 0..self.d {
            k = k.checked_mul(self.b[i])? / self.c[i];
            total += k;
        }
        Some(total)
    }
}

/// The intersection array, if the counts c_i, b_i are constant over all
/// pairs at each distance.
pub fn intersection_array(g: &Graph) -> Option<IntersectionArray> {
    let dd = distance_data(g).ok()?;
    let d = dd.diameter();
    let mut b: Vec<Option<usize>> = vec![None; d + 1];
    let mut c: Vec<Option<usize>> = vec![None; d + 1];
    for u in 0..g.n() {
        for v in 0..g.n() {
            let i = dd.distance(u, v);
            let mut ci = 0;
            let mut bi = 0;
            for &w in g.neighbors(v) {
                let dw = dd.distance(u, w);
                if dw + 1 == i {
                    ci += 1;
                } else if dw == i + 1 {
                    bi += 1;
                }
            }
            for (slot, val) in [(&mut b[i], bi), (&mut c[i], ci)] {
                match slot {
                    None => *slot = Some(val),
                    Some(x) if *x == val => {}
                    Some(_) => return None,
                }
            }
        }
    }
    let b: Vec<usize> = b[..d].iter().map(|x| x.unwrap()).collect();
    let c: Vec<usize> = c[1..].iter().map(|x| x.unwrap()).collect();
    Some(IntersectionArray::new(b, c))
}
