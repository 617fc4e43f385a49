use std::fmt;

use thiserror::Error;

/// Position of a character in DSL source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Position {
    /// Byte offset from the start of the input.
    pub offset: usize,
    /// 1-based line.
    pub line: usize,
    /// 1-based column, counted in characters.
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at {position}")]
pub struct SyntaxError {
    pub message: String,
    pub position: Position,
    /// Token kinds that would have been accepted, when known.
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term is zero")]
    SingularSeries,

    #[error("series is not compositionally invertible: {0}")]
    NotInvertible(String),

    #[error("first moment is zero: {0} has no compositional inverse")]
    ZeroFirstMoment(String),

    #[error("unknown umbra `{0}`")]
    UnknownUmbra(String),

    #[error("umbra `{name}` defines moments up to order {available}, but order {requested} is needed")]
    InsufficientMoments { name: String, available: usize, requested: usize },

    #[error("moment sequence is not unital: a_0 = {0}")]
    NonUnital(String),

    #[error("expected a constant, found polynomial {0}")]
    NotConstant(String),

    #[error("identity check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

pub type Result<T> = std::result::Result<T, Error>;
