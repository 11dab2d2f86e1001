//! Binomials and subset enumeration.

use alloc::vec::Vec;

/// C(n, k), or `None` past u128.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n−i) is divisible by i+1 after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i + 1) as u128;
    }
    Some(acc)
}

/// C(n, k) for arguments known to fit, as used by the family builders.
pub fn binom(n: usize, k: usize) -> usize {
    binomial(n as u64, k as u64).and_then(|b| usize::try_from(b).ok()).expect("binomial overflow")
}

/// Signed binomial: zero outside 0 ≤ k ≤ n, including negative n.
pub fn binom_i(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    binomial(n as u64, k as u64).expect("binomial overflow") as i128
}

/// k-subsets of 0..n in lexicographic order, each sorted ascending.
pub struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n, cur: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.as_mut()?;
        let out = cur.clone();
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Subsets of 0..n as bitmasks, in increasing numeric order.
pub fn subsets_u32(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}
