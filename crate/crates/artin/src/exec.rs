//! Execution strategy for the data-parallel hot loops.
//!
//! Enumeration layers, poset-ball expansion and sample verification are all
//! independent-item maps. Each caller goes through [`map_indexed`] so the
//! parallel and sequential paths produce bit-identical output: results are
//! collected in input order, never in completion order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How the divisible inner loops run. `Parallel` exists only when the
/// `parallel` feature is enabled; `ExecMode::default()` picks it up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for ExecMode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        ExecMode::Sequential
    }
}

impl std::fmt::Display for ExecMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExecMode::Sequential => write!(f, "sequential"),
            #[cfg(feature = "parallel")]
            ExecMode::Parallel => write!(f, "parallel"),
        }
    }
}

/// Order-preserving map over a slice.
pub(crate) fn map_indexed<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => items.par_iter().map(f).collect(),
    }
}
