use alloc::string::String;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("hyperplane normal vector is zero")]
    ZeroNormal,
    #[error("matrix is singular")]
    Singular,
    #[error("point set is affinely dependent")]
    AffinelyDependent,
    #[error("duplicate hyperplane {0}")]
    DuplicateHyperplane(String),
    #[error("{count} supporting hyperplanes exceed the budget of {budget}")]
    BudgetExceeded { count: usize, budget: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("syntax error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
