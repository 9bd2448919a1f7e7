//! Tiny seam between the rayon-backed and sequential execution paths.
//!
//! Bulk enumerations take an explicit [`ExecMode`]; `ExecMode::default()`
//! is parallel when the `parallel` feature is enabled. With the feature
//! disabled `ExecMode::Parallel` silently degrades to the sequential loop,
//! so results never depend on the build configuration.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Caps the global worker count used by the parallel execution paths. Must
/// be called before any parallel work; returns `false` when the pool was
/// already initialized or parallelism is compiled out.
pub fn set_worker_count(n: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        false
    }
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if mode == ExecMode::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}
