//! Desk-scale modular-representation oracle: builds M^λ over F_p, decomposes
//! it into indecomposables through End(M^λ), and labels the summands as
//! Young modules Y^μ by the dominance-unitriangular labeling pass.

pub mod algebra;
pub mod decompose;
pub mod homspace;
pub mod iso;
pub mod label;
pub mod linalg;
pub mod tabloids;

pub use decompose::Summand;
pub use homspace::{hom_dim, EndAlgebra, HomSpace};
pub use iso::modules_isomorphic;
pub use label::{DecompositionRecord, LabelTable, Oracle, SummandEntry};
pub use tabloids::{multinomial_dim, PermutationModule};

/// Budgets and determinism knobs for the oracle.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// cap on dim M^λ (number of basis tabloids)
    pub max_tabloids: u64,
    /// cap on dim End(M^λ) (number of contingency classes)
    pub max_end_dim: usize,
    /// corners at most this big are certified by exact radical analysis
    pub corner_exact_threshold: usize,
    /// swept + random Fitting attempts per large corner before escalating
    pub fitting_trials: usize,
    /// random intertwiner combinations tried per isomorphism test
    pub iso_random_trials: usize,
    /// master seed; every randomized step derives its own stream from it
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_tabloids: 3000,
            max_end_dim: 400,
            corner_exact_threshold: 16,
            fitting_trials: 48,
            iso_random_trials: 64,
            seed: 0x59a0,
        }
    }
}

impl OracleConfig {
    /// A copy with budgets raised enough to handle every M^λ with λ ⊢ r ≤ 6,
    /// including the regular module M^{(1^6)} whose End has dimension 720.
    pub fn desk_scale() -> Self {
        OracleConfig { max_end_dim: 800, ..OracleConfig::default() }
    }
}
