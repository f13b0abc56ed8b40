use thiserror::Error;

/// Errors across the whole pipeline. Geometry preconditions and internal
/// invariant violations are kept distinct: the latter signal a bug (or an
/// invalid perturbation table), never bad user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("points {0}, {1}, {2} are collinear; general position is required")]
    CollinearTriple(usize, usize, usize),

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("strain table is not in the image of the rigidity map (pair ({0}, {1}) mismatches)")]
    NotInImage(usize, usize),

    #[error("input too large for exhaustive search: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
