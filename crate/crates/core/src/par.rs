//! Task fan-out for the data-parallel loops (subset sums, Ryser chunks,
//! orbit enumeration).
//!
//! With the `parallel` feature and more than one thread, tasks run on a
//! scoped rayon pool; otherwise they run in order on the calling thread.
//! Results always come back in task order, so reductions are deterministic.

/// Evaluates `f(0..tasks)` and returns the results in task order.
pub(crate) fn run<T, F>(threads: usize, tasks: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if threads > 1 && tasks > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("failed to build worker pool");
        return pool.install(|| (0..tasks).into_par_iter().map(&f).collect());
    }
    let _ = threads;
    (0..tasks).map(f).collect()
}

/// Splits `0..len` into at most `parts` contiguous, nearly equal ranges.
pub(crate) fn split(len: u64, parts: usize) -> Vec<std::ops::Range<u64>> {
    let parts = (parts as u64).clamp(1, len.max(1));
    let base = len / parts;
    let extra = len % parts;
    let mut start = 0;
    (0..parts)
        .map(|p| {
            let size = base + u64::from(p < extra);
            let r = start..start + size;
            start += size;
            r
        })
        .collect()
}

/// How many chunks to cut a loop into for `threads` workers.
pub(crate) fn chunk_count(threads: usize) -> usize {
    if threads <= 1 {
        1
    } else {
        threads * 4
    }
}
