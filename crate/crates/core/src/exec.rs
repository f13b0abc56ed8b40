//! Execution façade for the data-parallel inner loops (quadruple checks,
//! per-node vertex solves, oracle subset sweeps). With the `parallel` feature
//! these fan out over rayon; without it the identical computation runs
//! sequentially. Output order matches the input order in both builds, so
//! results are bit-identical regardless of thread count.

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}
