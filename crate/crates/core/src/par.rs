//! Minimal data-parallel shim.
//!
//! With the `parallel` feature (default) these run on the rayon pool; without
//! it they fall back to plain sequential iteration. Callers must only combine
//! results with associative, commutative merges so that both builds — and any
//! thread count — produce identical output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indices<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..n).map(f).collect()
}

/// Fold `0..n` into per-worker accumulators and merge them.
#[cfg(feature = "parallel")]
pub(crate) fn fold_indices<A, Init, Fold, Merge>(n: usize, init: Init, fold: Fold, merge: Merge) -> A
where
    A: Send,
    Init: Fn() -> A + Sync + Send,
    Fold: Fn(A, usize) -> A + Sync + Send,
    Merge: Fn(A, A) -> A + Sync + Send,
{
    (0..n)
        .into_par_iter()
        .fold(&init, &fold)
        .reduce(&init, &merge)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn fold_indices<A, Init, Fold, Merge>(n: usize, init: Init, fold: Fold, _merge: Merge) -> A
where
    Init: Fn() -> A,
    Fold: Fn(A, usize) -> A,
    Merge: Fn(A, A) -> A,
{
    (0..n).fold(init(), &fold)
}
