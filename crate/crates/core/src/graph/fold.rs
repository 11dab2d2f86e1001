use alloc::vec;
use alloc::vec::Vec;

use super::{distance_data, Graph, SignedGraph};

/// Quotient of an antipodal double cover by its fibers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fold {
    /// fibers[k] = (representative, partner) with representative < partner.
    pub fibers: Vec<(usize, usize)>,
    pub folded: Graph,
    /// Signature induced by the cover: +1 where the two lifted edges run
    /// parallel, −1 where they cross.
    pub signed: SignedGraph,
}

/// Fold a graph whose distance-diameter graph is a perfect matching.
///
/// Returns `None` when the antipodal pairs do not form a perfect matching
/// or the cover is not a 2-lift of the quotient (some pair of fibers joined
/// by other than 0 or 2 matched edges).
pub fn antipodal_fold(g: &Graph) -> Option<Fold> {
    let dd = distance_data(g).ok()?;
    let diam = dd.diameter();
    if diam < 2 {
        return None;
    }
    let n = g.n();
    let mut partner = vec![usize::MAX; n];
    for u in 0..n {
        let far: Vec<usize> = (0..n).filter(|&v| dd.distance(u, v) == diam).collect();
        if far.len() != 1 {
            return None;
        }
        partner[u] = far[0];
    }
    let fibers: Vec<(usize, usize)> =
        (0..n).filter(|&u| u < partner[u]).map(|u| (u, partner[u])).collect();
    let mut fiber_of = vec![0; n];
    for (k, &(a, b)) in fibers.iter().enumerate() {
        fiber_of[a] = k;
        fiber_of[b] = k;
    }
    let m = fibers.len();
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    for x in 0..m {
        for y in x + 1..m {
            let (a, a2) = fibers[x];
            let (b, b2) = fibers[y];
            let parallel = (g.has_edge(a, b), g.has_edge(a2, b2));
            let cross = (g.has_edge(a, b2), g.has_edge(a2, b));
            match (parallel, cross) {
                ((false, false), (false, false)) => {}
                ((true, true), (false, false)) => {
                    edges.push((x, y));
                    signs.push(1);
                }
                ((false, false), (true, true)) => {
                    edges.push((x, y));
                    signs.push(-1);
                }
                _ => return None,
            }
        }
    }
    let folded = Graph::new(m, edges).ok()?;
    let signed = SignedGraph::new(folded.clone(), signs).ok()?;
    Some(Fold { fibers, folded, signed })
}
