//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building states, operators, or runs.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects live on blocks with different total quantum numbers.
    #[error("total quantum number mismatch: {0} vs {1}")]
    TotalMismatch(u32, u32),

    /// An amplitude vector has the wrong length for its block.
    #[error("amplitude vector has length {got}, block of total {total} needs {want}")]
    BadLength { got: usize, want: usize, total: u32 },

    /// A state vector with no weight cannot be normalized.
    #[error("state vector has zero (or non-finite) norm")]
    ZeroNorm,

    /// A square Fock cutoff too small to hold the requested block.
    #[error("cutoff {cutoff} cannot hold the block of total {total}")]
    CutoffTooSmall { cutoff: u32, total: u32 },

    /// Occupation outside the square cutoff box.
    #[error("occupation ({n},{m}) exceeds cutoff {cutoff}")]
    OutsideCutoff { n: u32, m: u32, cutoff: u32 },

    /// Model parameters outside their domain (omega > 0, gamma >= 0,
    /// epsilon >= 0, all finite).
    #[error("invalid model parameters: {0}")]
    BadParams(String),

    /// The Duan scale must be nonzero and finite.
    #[error("quadrature scale lambda must be nonzero and finite, got {0}")]
    BadLambda(f64),

    /// Normalized entropy divides by log2(N+1), undefined on the
    /// one-dimensional block N = 0.
    #[error("normalized entropy is undefined on the one-dimensional block N = 0")]
    VacuumBlock,

    /// Time grids must be finite and strictly ascending.
    #[error("invalid time grid: {0}")]
    BadTimeGrid(String),

    /// First-order perturbation theory refused (degenerate level or gamma = 0).
    #[error("perturbation theory not applicable: {0}")]
    Perturbation(String),

    /// A numerical invariant (norm conservation, eigensolver residual, ...)
    /// was violated; computations never continue silently past this.
    #[error("numerical invariant violated: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
