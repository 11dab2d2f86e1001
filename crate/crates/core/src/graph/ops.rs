use alloc::format;
use alloc::vec;

use super::Graph;
use crate::error::{Error, Result};

pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.n(), |i, j| !g.has_edge(i, j))
}

/// Union of two graphs on the same vertex set.
pub fn union(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() != h.n() {
        return Err(Error::Shape(format!("union of graphs on {} and {} vertices", g.n(), h.n())));
    }
    Ok(Graph::from_fn(g.n(), |i, j| g.has_edge(i, j) || h.has_edge(i, j)))
}

/// Vertex (a, b) is numbered a·|H| + b.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    Graph::from_fn(g.n() * m, |x, y| {
        let (a, b) = (x / m, x % m);
        let (c, d) = (y / m, y % m);
        (a == c && h.has_edge(b, d)) || (b == d && g.has_edge(a, c))
    })
}

/// Tensor (categorical) product, same vertex numbering as the Cartesian one.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    Graph::from_fn(g.n() * m, |x, y| g.has_edge(x / m, y / m) && h.has_edge(x % m, y % m))
}

/// No three mutually adjacent vertices (equivalently trace A³ = 0).
pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Equal => return false,
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
            }
        }
        true
    })
}

/// BFS two-colouring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut colour = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}
