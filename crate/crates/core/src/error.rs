use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants line up with the exit codes of the command-line driver:
/// `Input`, `Parse` and `Validity` are caller mistakes, `Budget` means a search
/// gave up, `Structural` means a stated precondition about the graph failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {0}")]
    Validity(String),

    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),

    #[error("structural precondition failed: {0}")]
    Structural(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Parse { .. } => "parse",
            Error::Validity(_) => "validity",
            Error::Budget(_) => "budget",
            Error::Structural(_) => "structural",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Counts search nodes against an optional limit.
#[derive(Debug, Clone, Copy)]
pub(crate) struct NodeBudget {
    limit: Option<u64>,
    used: u64,
}

impl NodeBudget {
    pub(crate) fn new(limit: Option<u64>) -> Self {
        NodeBudget { limit, used: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::Budget(limit)),
            _ => Ok(()),
        }
    }
}
