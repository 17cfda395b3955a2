//! Execution helpers shared by the scanning routines.
//!
//! Every bulk scan in the crate funnels through [`first_witness`] so that
//! the parallel and sequential code paths are interchangeable. The parallel
//! path uses `find_map_first`, which returns the *leftmost* witness, so
//! output is deterministic and identical across modes.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

pub(crate) fn set_parallel_enabled(enabled: bool) {
    PARALLEL_ENABLED.store(enabled, Ordering::Relaxed);
}

pub(crate) fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL_ENABLED.load(Ordering::Relaxed)
}

/// Return the leftmost `Some` value of `f` over `items`, scanning in
/// parallel when enabled.
pub(crate) fn first_witness<T, W, F>(items: &[T], f: F) -> Option<W>
where
    T: Sync,
    W: Send,
    F: Fn(&T) -> Option<W> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.par_iter().find_map_first(|t| f(t));
        }
    }
    items.iter().find_map(|t| f(t))
}

/// Map `f` over `items` preserving order, in parallel when enabled.
pub(crate) fn ordered_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.par_iter().map(|t| f(t)).collect();
        }
    }
    items.iter().map(f).collect()
}
