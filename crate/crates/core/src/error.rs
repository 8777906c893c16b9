use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("truth basis dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("basis kind `{kind}` requires dim = 2, got {dim}")]
    FixedDimension { kind: &'static str, dim: usize },

    #[error("unknown basis kind `{0}` (expected set1, set2 or random)")]
    UnknownBasisKind(String),

    #[error("random basis needs a `dim` field")]
    MissingDimension,

    #[error("could not draw a non-degenerate basis after {0} attempts")]
    DegenerateBasis(u32),

    #[error("basis vectors are not orthonormal (deviation {0:e})")]
    NotOrthonormal(f64),

    #[error("fuzzy weight {0} is outside [0, 1]")]
    FuzzyDomain(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operator `{role}` is {actual}, expected {expected}")]
    ArityMismatch {
        role: String,
        expected: &'static str,
        actual: &'static str,
    },

    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),

    #[error("lexical error at offset {offset}: unexpected character {ch:?}")]
    Lex { offset: usize, ch: char },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unbound atom `{0}`")]
    UnboundAtom(String),

    #[error("invalid assignment `{input}`: {reason}")]
    InvalidAssignment { input: String, reason: String },

    #[error("classical evaluation is undefined for square-root-of-NOT nodes")]
    RootInClassicalFormula,

    #[error("truth table over {0} atoms refused (limit is 16)")]
    TableTooLarge(usize),

    #[error("inadmissible counterfactual: p* = true with q* = false is excluded by the counterfactual link")]
    Inadmissible,

    #[error("invalid scenario: {0}")]
    Scenario(String),
}

impl Error {
    /// True for errors caused by malformed user input (basis specs, scenario
    /// files, assignments) rather than by formula parsing or evaluation.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::Lex { .. }
                | Error::Syntax { .. }
                | Error::UnboundAtom(_)
                | Error::RootInClassicalFormula
                | Error::TableTooLarge(_)
        )
    }
}
