//! Thread-pool plumbing for the `parallel` feature.

/// Size the global rayon pool before any parallel work runs. `0` keeps the
/// rayon default. Calling twice is fine; the second call is ignored with a
/// warning, matching rayon's build-once global pool.
#[cfg(feature = "parallel")]
pub fn init_thread_pool(threads: usize) {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if threads > 0 {
        builder = builder.num_threads(threads);
    }
    if builder.build_global().is_err() {
        log::warn!("global thread pool already initialized; --threads ignored");
    }
}

#[cfg(not(feature = "parallel"))]
pub fn init_thread_pool(_threads: usize) {}
