//! Zero forcing and the induced-degree floor used with interlacing.

use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::combinatorics::{binomial, Combinations};

/// Fixed point of the colour-change rule: a blue vertex with exactly one
/// white neighbour turns that neighbour blue.
pub fn zero_forcing_closure(g: &Graph, start: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut blue = vec![false; n];
    for &v in start {
        blue[v] = true;
    }
    // white neighbour counts
    let mut white: Vec<usize> = (0..n).map(|v| g.neighbors(v).iter().filter(|&&w| !blue[w]).count()).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| blue[v] && white[v] == 1).collect();
    while let Some(v) = queue.pop() {
        if white[v] != 1 {
            continue;
        }
        let w = *g.neighbors(v).iter().find(|&&w| !blue[w]).expect("one white neighbour");
        blue[w] = true;
        for &x in g.neighbors(w) {
            white[x] -= 1;
            if blue[x] && white[x] == 1 {
                queue.push(x);
            }
        }
        if white[w] == 1 {
            queue.push(w);
        }
    }
    (0..n).filter(|&v| blue[v]).collect()
}

pub fn is_forcing_set(g: &Graph, start: &[usize]) -> bool {
    zero_forcing_closure(g, start).len() == g.n()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroForcing {
    /// Minimum size together with a smallest forcing set (first in
    /// lexicographic order).
    Number { z: usize, witness: Vec<usize> },
    CapExceeded { n: usize, cap: usize },
}

/// Z(G) by trying subsets in order of increasing size.
pub fn zero_forcing_number_exhaustive(g: &Graph, cap: usize) -> ZeroForcing {
    let n = g.n();
    if n > cap {
        return ZeroForcing::CapExceeded { n, cap };
    }
    for k in 0..=n {
        for s in Combinations::new(n, k) {
            if is_forcing_set(g, &s) {
                return ZeroForcing::Number { z: k, witness: s };
            }
        }
    }
    unreachable!("the full vertex set forces")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FloorMode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFloor {
    /// Smallest induced maximum degree seen.
    pub value: usize,
    /// A subset attaining it.
    pub witness: Vec<usize>,
    pub subsets_checked: u64,
    /// True when every r-subset was examined, making `value` the exact floor.
    pub exhaustive: bool,
    /// Exhaustive mode was requested but the subset count was too large.
    pub forced_sample: bool,
}

const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

fn induced_max_degree(g: &Graph, subset: &[usize], member: &mut [bool]) -> usize {
    for &v in subset {
        member[v] = true;
    }
    let d = subset
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| member[w]).count())
        .max()
        .unwrap_or(0);
    for &v in subset {
        member[v] = false;
    }
    d
}

/// Minimum, over r-subsets S, of the maximum degree of G[S].
///
/// Exhaustive mode runs only while C(n, r) ≤ 10^6; beyond that it falls back
/// to sampling and says so. A sampled value is an upper estimate of the
/// floor, never a proof of it.
pub fn induced_max_degree_floor(g: &Graph, r: usize, mode: FloorMode) -> DegreeFloor {
    let n = g.n();
    let r = r.min(n);
    let total = binomial(n as u64, r as u64);
    let mut member = vec![false; n];
    let (mode, forced) = match mode {
        FloorMode::Exhaustive if total.is_none_or(|t| t > EXHAUSTIVE_LIMIT) => {
            (FloorMode::Sample { count: 100_000, seed: 1 }, true)
        }
        m => (m, false),
    };
    let mut best = usize::MAX;
    let mut witness = Vec::new();
    let mut checked = 0u64;
    match mode {
        FloorMode::Exhaustive => {
            for s in Combinations::new(n, r) {
                checked += 1;
                let d = induced_max_degree(g, &s, &mut member);
                if d < best {
                    best = d;
                    witness = s;
                }
            }
        }
        FloorMode::Sample { count, seed } => {
            let mut state = seed | 1;
            let mut pool: Vec<usize> = (0..n).collect();
            for _ in 0..count {
                // partial Fisher–Yates driven by xorshift64
                for i in 0..r {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    let j = i + (state % (n - i) as u64) as usize;
                    pool.swap(i, j);
                }
                let mut s = pool[..r].to_vec();
                s.sort_unstable();
                checked += 1;
                let d = induced_max_degree(g, &s, &mut member);
                if d < best {
                    best = d;
                    witness = s;
                }
            }
        }
    }
    if best == usize::MAX {
        best = 0;
    }
    DegreeFloor {
        value: best,
        witness,
        subsets_checked: checked,
        exhaustive: matches!(mode, FloorMode::Exhaustive),
        forced_sample: forced,
    }
}
