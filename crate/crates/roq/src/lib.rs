//! File formats, figure export, seeded sampling and the `roq` command line
//! built on [`roq_core`].

pub mod cli;
pub mod format;
pub mod random;
pub mod render;
pub mod suite;

/// Process exit statuses. Verdicts use 0, 1 and 2; errors use the rest.
pub mod exit {
    pub const TRUE: i32 = 0;
    pub const FALSE: i32 = 1;
    pub const UNKNOWN: i32 = 2;
    pub const IO: i32 = 3;
    pub const MALFORMED: i32 = 4;
    pub const DIMENSION: i32 = 5;
    pub const BUDGET: i32 = 6;
    pub const PRECONDITION: i32 = 7;
    pub const USAGE: i32 = 64;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("{0}")]
    Precondition(String),
}

impl Failure {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Failure::Malformed(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Failure::Precondition(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) => exit::IO,
            Failure::Malformed(_) => exit::MALFORMED,
            Failure::Dimension { .. } => exit::DIMENSION,
            Failure::Budget(_) => exit::BUDGET,
            Failure::Precondition(_) => exit::PRECONDITION,
        }
    }
}

impl From<roq_core::Error> for Failure {
    fn from(e: roq_core::Error) -> Self {
        use roq_core::Error as E;
        match e {
            E::DimensionMismatch { expected, found } => Failure::Dimension { expected, found },
            E::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            E::Parse { .. } | E::UnboundVariable(_) | E::ZeroNormal | E::DuplicateHyperplane(_) => {
                Failure::Malformed(e.to_string())
            }
            _ => Failure::Precondition(e.to_string()),
        }
    }
}
