use thiserror::Error;

/// Errors surfaced by ring construction, poset analysis, code enumeration
/// and the transform machinery.
#[derive(Debug, Error)]
pub enum Error {
    /// A ring axiom failed its exhaustive check.
    #[error("validation error: {0}")]
    Validation(String),

    /// Malformed ring specification input.
    #[error("spec error: {0}")]
    Spec(String),

    /// A representative ordering misses or duplicates a class.
    #[error("order error: {0}")]
    Order(String),

    /// A matrix claimed to be the zeta matrix of a poset is not one.
    #[error("structure error: {0}")]
    Structure(String),

    /// An enumeration would exceed the configured cap.
    #[error("size error: {0}")]
    Size(String),

    /// A coordinate ideal generated by a codeword tuple is not principal.
    #[error("non-principal ideal: {0}")]
    NonPrincipal(String),

    /// A subset family has an empty member.
    #[error("family error: {0}")]
    Family(String),

    /// A variable substitution does not cover the alphabet.
    #[error("assignment error: {0}")]
    Assignment(String),

    /// Matrix and alphabet dimensions disagree.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// An internal cross-check failed; indicates a bug or an input outside
    /// the supported class of rings.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
