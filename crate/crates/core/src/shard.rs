//! Splitting sweep ranges into disjoint shards and running them on a pool.
//!
//! Library sweeps expose `*_in(range, ..)` functions over a half-open range
//! of their outer loop variable. Callers partition the range here, run the
//! pieces with [`run_sharded`], and merge. Results come back in shard order,
//! so output never depends on the worker count.

use std::ops::Range;

use crate::intcore::Scalar;

/// Splits `range` into at most `parts` contiguous, disjoint, non-empty
/// pieces covering it exactly.
pub fn partition<T: Scalar>(range: Range<T>, parts: usize) -> Vec<Range<T>> {
    let Range { start, end } = range;
    if start >= end {
        return Vec::new();
    }
    let parts = T::from_usize(parts.max(1)).expect("part count fits");
    let len = end.clone() - start.clone();
    let (step, extra) = len.div_rem(&parts);
    let mut out = Vec::new();
    let mut lo = start;
    let mut i = T::zero();
    while i < parts {
        let mut width = step.clone();
        if i < extra {
            width = width + T::one();
        }
        if width.is_zero() {
            break;
        }
        let hi = lo.clone() + width;
        out.push(lo..hi.clone());
        lo = hi;
        i = i + T::one();
    }
    debug_assert!(lo == end);
    out
}

/// Runs `work` over every shard on a pool of `jobs` threads and returns
/// the results in shard order.
pub fn run_sharded<S, R, F>(jobs: usize, shards: Vec<S>, work: F) -> Vec<R>
where
    S: Send,
    R: Send,
    F: Fn(S) -> R + Sync + Send,
{
    use rayon::prelude::*;

    if jobs <= 1 {
        return shards.into_iter().map(work).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| shards.into_par_iter().map(&work).collect())
}

/// Shard count for `jobs` workers: oversplit so uneven shards balance out.
pub fn shard_count(jobs: usize) -> usize {
    if jobs <= 1 {
        1
    } else {
        jobs * 8
    }
}
