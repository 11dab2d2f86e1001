//! Sign enumeration spread over threads.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use spectra_core::obstruction::{merge_ranges, PathPolynomialSystem, RangeOutcome, SignExhaust, SignProblem};

/// The space is always cut into this many ranges so the merged result,
/// including the assignment count, does not depend on the thread count.
pub const RANGE_COUNT: usize = 64;

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn sign_exhaust_parallel(sys: &PathPolynomialSystem, threads: usize) -> spectra_core::Result<SignExhaust> {
    let problem = SignProblem::new(sys)?;
    let ranges = problem.ranges(RANGE_COUNT);
    let slots: Vec<Mutex<Option<RangeOutcome>>> = ranges.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..threads.clamp(1, ranges.len().max(1)) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(lo, hi)) = ranges.get(k) else { break };
                let out = problem.scan(lo, hi);
                *slots[k].lock().expect("no worker panics while holding a slot") = Some(out);
            });
        }
    });
    let outcomes = slots.into_iter().map(|m| m.into_inner().expect("unpoisoned").expect("every range scanned")).collect();
    Ok(merge_ranges(&problem, sys.j, outcomes))
}
