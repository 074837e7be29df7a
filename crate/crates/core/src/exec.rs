//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature (on by default) batch work is spread over the
//! rayon thread pool. Results are always collected in input order, so output
//! is identical whichever strategy runs.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    /// Map `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Map `f` over `0..len`, preserving order.
    pub fn map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..len).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
        }
    }

    /// Sum of `f` over `items`. Integer-valued so the result does not depend
    /// on reduction order.
    pub fn count<T, F>(self, items: &[T], f: F) -> usize
    where
        T: Sync,
        F: Fn(&T) -> usize + Sync + Send,
    {
        match self {
            Execution::Sequential => items.iter().map(f).sum(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => items.par_iter().map(f).sum(),
        }
    }
}
