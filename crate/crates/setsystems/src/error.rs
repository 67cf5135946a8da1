use thiserror::Error;

/// Errors produced by parsers, constructions, and capped procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Invalid arguments to a construction (overlapping blocks, k > n, ...).
    #[error("{0}")]
    Construction(String),

    /// A capped exhaustive procedure was asked to run on a domain that is
    /// too large. Never downgraded silently; the caller picks a smaller
    /// instance or a sampled mode.
    #[error("{what}: domain size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// The subtree enumeration budget ran out before the search finished.
    #[error("enumeration budget of {budget} subtrees exceeded")]
    BudgetExceeded { budget: usize },

    /// A solver found no feasible set at all (the oracle rejects even the
    /// empty set).
    #[error("{0}")]
    Infeasible(String),
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn construction(message: impl Into<String>) -> Self {
        Error::Construction(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
