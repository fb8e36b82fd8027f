//! Worker pool shared by quadrature and projection.
//!
//! Work is split into fixed-size chunks whose partial results are combined
//! in chunk order, so sums are bitwise identical for any worker count.

use std::ops::Range;
use std::sync::OnceLock;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Environment variable capping the number of workers.
pub const THREADS_ENV: &str = "CONTRAKERNEL_THREADS";

static POOL: OnceLock<ThreadPool> = OnceLock::new();

fn requested_threads() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&n| n > 0)
}

/// The process-wide pool, sized from `CONTRAKERNEL_THREADS` on first use.
pub fn pool() -> &'static ThreadPool {
    POOL.get_or_init(|| {
        let mut builder = ThreadPoolBuilder::new().thread_name(|i| format!("contrakernel-{i}"));
        if let Some(n) = requested_threads() {
            builder = builder.num_threads(n);
        }
        builder.build().expect("failed to build worker pool")
    })
}

/// Number of workers in [`pool`].
pub fn threads() -> usize {
    pool().current_num_threads()
}

/// Applies `f` to consecutive ranges of `0..len` of width `chunk` and
/// returns the results in range order.
pub fn map_chunks<T, F>(len: usize, chunk: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<usize>) -> T + Sync,
{
    let chunk = chunk.max(1);
    let count = len.div_ceil(chunk);
    pool().install(|| {
        (0..count)
            .into_par_iter()
            .map(|c| f(c * chunk..((c + 1) * chunk).min(len)))
            .collect()
    })
}

/// Parallel map over `items` preserving order.
pub fn map_items<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync,
{
    pool().install(|| items.par_iter().map(&f).collect())
}
