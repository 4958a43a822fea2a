//! Execution-mode switch: data-parallel candidate scans with a sequential
//! fallback.

/// How candidate scans run. `Parallel` uses rayon when the `parallel`
/// feature is enabled and silently degrades to sequential otherwise, so the
/// two modes always return identical results.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExecMode {
    #[default]
    Parallel,
    Sequential,
}

/// First `Some` produced by `f` over `0..len`, in index order regardless of
/// mode: the parallel scan keeps the earliest match.
pub fn scan_first<U, F>(mode: ExecMode, len: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..len).find_map(f),
        ExecMode::Parallel => parallel_scan(len, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_scan<U, F>(len: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().find_map_first(f)
}

#[cfg(not(feature = "parallel"))]
fn parallel_scan<U, F>(len: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    (0..len).find_map(f)
}
