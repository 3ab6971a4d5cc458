//! Case-level parallelism for the verification sweeps. Native targets fan
//! out through rayon; wasm runs the same code sequentially.

#[cfg(not(target_arch = "wasm32"))]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(target_arch = "wasm32")]
pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Runs `body` inside a pool bounded to `threads` workers (native only; the
/// bound is a no-op on wasm).
#[cfg(not(target_arch = "wasm32"))]
pub fn with_thread_bound<R: Send>(
    threads: usize,
    body: impl FnOnce() -> R + Send,
) -> Result<R, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
        .map(|pool| pool.install(body))
}

#[cfg(target_arch = "wasm32")]
pub fn with_thread_bound<R>(_threads: usize, body: impl FnOnce() -> R) -> Result<R, String> {
    Ok(body())
}
