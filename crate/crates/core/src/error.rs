use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The spectrum could not be parsed or is not non-increasing.
    #[error("invalid spectrum: {0}")]
    InvalidLambda(String),

    /// A stage index outside `1..=n-1` was requested.
    #[error("stage index {k} out of range 1..={max}")]
    StageOutOfRange { k: usize, max: usize },

    /// Exhaustive face enumeration was refused because the diagram is too large.
    #[error(
        "diagram has {boxes} boxes but the enumeration bound is {max}; \
         set GC_FIBERS_MAX_BOXES={boxes} (or larger) to proceed"
    )]
    SizeGuard { boxes: usize, max: usize },

    /// An edge set, equality set or face id does not describe a face.
    #[error("invalid face: {0}")]
    InvalidFace(String),

    /// An input lies outside the domain of an operation (non-interlacing pair, point outside the polytope, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A Hermitian matrix does not have the expected spectrum.
    #[error("spectrum mismatch: {0}")]
    Spectrum(String),

    /// A numerical procedure failed its own accuracy check.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Two independent computations of the same quantity disagree.
    #[error("inconsistent classification: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
