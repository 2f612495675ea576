//! Exact combinatorics and modular representation theory of Young
//! permutation modules for symmetric groups: p-Kostka numbers via reduction
//! formulae and the Klyachko/Brauer-quotient recursion, the closed-form
//! classification of indecomposable Young permutation modules, and a
//! desk-scale oracle that decomposes the modules over prime fields.

pub mod character;
pub mod engine;
pub mod error;
pub mod indec;
pub mod oracle;
pub mod partition;

pub use error::YoungError;
pub use partition::{Composition, Partition};

/// Engine version string, stamped into cache entries and serialized tables.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Maps items in parallel when the `parallel` feature is enabled, otherwise
/// sequentially. Used for independent oracle decompositions and sweeps.
pub fn par_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
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

/// Sequential counterpart of [`par_map`], kept available under every feature
/// set so benchmarks can compare the two paths.
pub fn seq_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
