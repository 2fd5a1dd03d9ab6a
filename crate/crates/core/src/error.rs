use thiserror::Error;

/// Errors produced by the counting engines, the oracle and the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dimensions {rows}x{cols}: both must be at least 1")]
    InvalidDimensions { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("tile id {0} is out of range 0..=10")]
    InvalidTile(u32),

    #[error("mosaic is not suitably connected")]
    NotSuitablyConnected,

    #[error("expected a single-column mosaic, got {0} columns")]
    NotAColumn(usize),

    #[error("closed form undefined for ({m}, {n})")]
    ClosedFormDomain { m: usize, n: usize },

    #[error("invalid boundary state {0:?}: expected only 'x' and 'o'")]
    InvalidState(String),

    #[error("{0}")]
    Budget(#[from] BudgetExceeded),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// The enumeration budget was exhausted before the search finished.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("budget exceeded: {cells} cells requested, at most {max_cells} allowed")]
    Cells { cells: usize, max_cells: usize },
    #[error("budget exceeded: search visited more than {max_nodes} nodes")]
    Nodes { max_nodes: u64 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
