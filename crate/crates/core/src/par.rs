//! Order-preserving map over independent work items. Uses a rayon pool when
//! the `parallel` feature is on and more than one worker is requested;
//! otherwise runs on the calling thread.

/// Maps `f` over `items`, keeping input order. `workers == 0` means one
/// worker per available core.
pub fn map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let workers = if workers == 0 { available_workers() } else { workers };
        if workers > 1 && items.len() > 1 {
            use rayon::prelude::*;
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
                return pool.install(|| items.par_iter().map(&f).collect());
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = workers;
    items.iter().map(f).collect()
}

pub fn available_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Whether this build can run work items concurrently.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
