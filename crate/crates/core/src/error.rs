use thiserror::Error;

/// Failures while reading `.sgp` or `.dgf` text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },
    #[error("table row {row} has {found} entries, expected {expected}")]
    RowLength {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("table has {found} rows, expected {expected}")]
    RowCount { found: usize, expected: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("order {order} exceeds the configured maximum of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("declared zero `{0}` is not an absorbing element")]
    BadZero(String),
    #[error("line {line}: edge `{edge}` references undeclared vertex `{vertex}`")]
    UnknownVertex {
        line: usize,
        edge: String,
        vertex: String,
    },
    #[error("line {line}: duplicate edge name `{0}`", line = .1)]
    DuplicateEdge(String, usize),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("graph declares no vertices")]
    NoVertices,
}

/// A computed fact disagreed with a statement the library checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{check} violated: {witness}")]
pub struct TheoremViolation {
    pub check: String,
    pub witness: String,
}

impl TheoremViolation {
    pub fn new(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            witness: witness.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("not an inverse semigroup: {0}")]
    NotInverse(String),
    #[error("operation requires a semigroup with zero")]
    MissingZero,
    #[error("sigma degenerates to the universal relation on a semigroup with zero")]
    HasZero,
    #[error("element name `{0}` is reserved for the adjoined zero")]
    ReservedName(String),
    #[error("I(G) has no zero-divisors: the graph is a single isolated vertex")]
    TrivialGraph,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Violation(#[from] TheoremViolation),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
