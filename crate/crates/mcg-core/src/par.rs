//! Thin data-parallel layer: rayon when the `parallel` feature is on, plain
//! iteration otherwise. Callers can also force the sequential path to
//! compare the two (see the criterion bench).

/// Execution mode for batch work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Map `f` over `items`, preserving order.
pub fn map_batch<T, U, F>(mode: Mode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        Mode::Sequential => items.into_iter().map(f).collect(),
        Mode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}
