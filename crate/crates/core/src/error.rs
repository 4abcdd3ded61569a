use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: `{0}` vs `{1}`")]
    RingMismatch(String, String),

    #[error("operands live in different graded modules")]
    ModuleMismatch,

    #[error("product {left} * {right} has degree {degree}, beyond the truncation degree {max_degree}")]
    Truncated {
        left: String,
        right: String,
        degree: usize,
        max_degree: usize,
    },

    #[error("negative power {0} of a linear map")]
    NegativePower(i64),

    #[error("ring `{0}` is not a field")]
    NotAField(String),

    #[error("`{0}` is not invertible in `{1}`")]
    NotInvertible(String, String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),

    #[error("invalid ring `{0}`: {1}")]
    RingSyntax(String, String),

    #[error("invalid coefficient `{0}` for ring `{1}`")]
    CoeffSyntax(String, String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid presentation: {0}")]
    Invalid(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("coassociativity fails on generator `{0}`")]
    GeneratorCoassociativity(String),

    #[error("counit axiom fails on generator `{0}`")]
    GeneratorCounit(String),

    #[error("algebra is not connected: {0}")]
    NotConnected(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
