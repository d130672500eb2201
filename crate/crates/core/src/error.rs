use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants are grouped by the exit code the command-line front end maps
/// them to (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("undeclared vertex `{0}`")]
    UndeclaredVertex(String),
    #[error("undeclared arrow `{0}`")]
    UndeclaredArrow(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("relation terms are not parallel: {0}")]
    NonParallelRelation(String),
    #[error("path `{0}` is not composable")]
    NonComposablePath(String),
    #[error("malformed mutation word `{0}`")]
    BadWord(String),
    #[error("bad argument: {0}")]
    BadArgument(String),

    #[error("quotient still growing at path length {cap}; algebra looks infinite-dimensional")]
    InfiniteDimensional { cap: usize },
    #[error("enumeration exceeded the cap of {cap} objects")]
    CapExceeded { cap: usize },

    #[error("relations are inconsistent: a vertex idempotent lies in the ideal")]
    InconsistentRelations,
    #[error("relations do not generate an admissible ideal: {0}")]
    NotAdmissible(String),
    #[error("invalid field descriptor `{0}`")]
    InvalidField(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("scalar `{0}` is not defined over the chosen field")]
    ScalarNotInField(String),
    #[error("characteristic {characteristic} is too small; need more than {needed}")]
    FieldTooSmall { characteristic: u64, needed: usize },
    #[error("semisimple quotient does not split over the base field")]
    NonSplitSemisimple,
    #[error("algebra is not symmetric")]
    NotSymmetricAlgebra,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("complexes live over different algebras")]
    AlgebraMismatch,
    #[error("no edge {letter} at vertex `{vertex}`")]
    NoSuchEdge { vertex: String, letter: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code: 1 parse, 2 divergence/cap, 3 field or splitness,
    /// 4 internal invariant violation.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Syntax { .. }
            | UndeclaredVertex(_)
            | UndeclaredArrow(_)
            | DuplicateId(_)
            | NonParallelRelation(_)
            | NonComposablePath(_)
            | BadWord(_)
            | BadArgument(_)
            | UnknownPreset(_)
            | UnknownVertex(_)
            | IndexOutOfRange { .. }
            | NoSuchEdge { .. } => 1,
            InfiniteDimensional { .. } | CapExceeded { .. } => 2,
            InconsistentRelations
            | NotAdmissible(_)
            | InvalidField(_)
            | FieldMismatch
            | ScalarNotInField(_)
            | FieldTooSmall { .. }
            | NonSplitSemisimple
            | NotSymmetricAlgebra => 3,
            DimensionMismatch { .. } | AlgebraMismatch | Internal(_) => 4,
        }
    }
}
