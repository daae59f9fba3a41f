//! Execution helpers: data-parallel maps over index ranges.
//!
//! With the `parallel` feature (default) these dispatch to rayon; without it
//! they degrade to plain sequential loops. Outputs are index-ordered either
//! way, so results are bit-identical regardless of thread count. Reductions
//! over floating-point values are always performed sequentially by callers.

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Send + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Fallible variant; returns the first error in index order.
#[cfg(feature = "parallel")]
pub(crate) fn try_map_indices<U, F>(n: usize, f: F) -> crate::Result<Vec<U>>
where
    U: Send,
    F: Fn(usize) -> crate::Result<U> + Send + Sync,
{
    use rayon::prelude::*;
    let results: Vec<crate::Result<U>> = (0..n).into_par_iter().map(f).collect();
    results.into_iter().collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn try_map_indices<U, F>(n: usize, f: F) -> crate::Result<Vec<U>>
where
    F: Fn(usize) -> crate::Result<U>,
{
    (0..n).map(f).collect()
}
