//! Worker-pool plumbing for the data-parallel search kernels.
//!
//! With the `parallel` feature (default) the hot scans run on a global rayon
//! pool whose size is capped by the `GRADEALG_THREADS` environment variable;
//! without it every kernel falls back to its sequential twin. Results are
//! deterministic in both modes.

/// Worker cap from `GRADEALG_THREADS`, if set to a positive integer.
pub fn worker_count() -> Option<usize> {
    std::env::var("GRADEALG_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

#[cfg(feature = "parallel")]
pub(crate) fn install<R, F>(f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    use std::sync::OnceLock;
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    let pool = POOL.get_or_init(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(worker_count().unwrap_or(0))
            .build()
            .expect("failed to build worker pool")
    });
    pool.install(f)
}
