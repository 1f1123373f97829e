//! Sequential/parallel execution of verification work units.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a verification loop is driven.
///
/// `Parallel` uses rayon when the `parallel` feature is enabled and silently
/// degrades to sequential iteration otherwise, so library code can always ask
/// for it. Benchmarks compare the two explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::Parallel
    }
}

/// Maps `f` over `units` and concatenates the results.
///
/// `f` must be pure: results are order-normalized by callers, not by the
/// driver.
pub fn run_units<U, R, F>(exec: Exec, units: Vec<U>, f: F) -> Vec<R>
where
    U: Send + Sync,
    R: Send,
    F: Fn(&U) -> Vec<R> + Sync + Send,
{
    match exec {
        Exec::Sequential => units.iter().flat_map(|u| f(u)).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => units.par_iter().flat_map_iter(|u| f(u)).collect(),
        #[cfg(not(feature = "parallel"))]
        Exec::Parallel => units.iter().flat_map(|u| f(u)).collect(),
    }
}
