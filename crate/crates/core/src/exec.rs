//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper returns results in input order, so callers see the same
//! output whichever strategy runs.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How data-parallel loops are scheduled. `Parallel` degrades to
/// `Sequential` when the crate is built without the `parallel` feature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Ordered `flat_map` over an `i64` range.
pub fn flat_map_range<T, F>(exec: Execution, range: Range<i64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> Vec<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().flat_map_iter(f).collect();
    }
    let _ = exec;
    range.flat_map(f).collect()
}

/// Ordered `map` over an `i64` range.
pub fn map_range<T, F>(exec: Execution, range: Range<i64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// Fold a `u64` range into per-chunk accumulators and merge them. `merge`
/// must be associative and commutative for the result to be schedule-free.
pub fn fold_range<A, I, F, M>(exec: Execution, range: Range<u64>, identity: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range
            .into_par_iter()
            .fold(&identity, &fold)
            .reduce(&identity, &merge);
    }
    let _ = (exec, &merge);
    range.fold(identity(), fold)
}

/// Ordered `map` over a slice.
pub fn map_slice<S, T, F>(exec: Execution, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}
