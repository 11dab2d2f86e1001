use alloc::vec;
use alloc::vec::Vec;

use super::distance::bfs;
use super::Graph;

/// Per-vertex invariant: degree, then the sorted degrees of the neighbours,
/// then the sorted BFS layer sizes.
fn invariant(g: &Graph, v: usize) -> (usize, Vec<usize>, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    let dist = bfs(g, v);
    let mut layers = Vec::new();
    for &d in &dist {
        let d = d as usize;
        if d >= layers.len() {
            layers.resize(d + 1, 0);
        }
        layers[d] += 1;
    }
    (g.degree(v), nd, layers)
}

/// A bijection f with uv ∈ E(g) ⇔ f(u)f(v) ∈ E(h), found by backtracking
/// over invariant-compatible candidates.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let ig: Vec<_> = (0..n).map(|v| invariant(g, v)).collect();
    let ih: Vec<_> = (0..n).map(|v| invariant(h, v)).collect();
    let mut a = ig.clone();
    let mut b = ih.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    // visit g in BFS order so each new vertex has mapped neighbours
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = alloc::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &ig, &ih, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend<T: PartialEq>(
    g: &Graph,
    h: &Graph,
    ig: &[T],
    ih: &[T],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(k) else {
        return true;
    };
    for c in 0..h.n() {
        if used[c] || ig[v] != ih[c] {
            continue;
        }
        let consistent = order[..k].iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], c));
        if !consistent {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if extend(g, h, ig, ih, order, k + 1, map, used) {
            return true;
        }
        used[c] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    let n = g.n();
    if n != h.n() || map.len() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || core::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
}
