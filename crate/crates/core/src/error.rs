use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { pos: usize, name: String },
    #[error("expression mixes Racah-algebra and tensor-algebra identifiers")]
    MixedExpression,
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("rank tie between distinct monomials {0} and {1}")]
    RankTie(String, String),
    #[error("invalid basis tuple {0}: the exponent of D must be 0 or 1")]
    InvalidTuple(String),
    #[error("degree caps give {count} basis tuples, above the limit of {limit}")]
    CapLimitExceeded { count: usize, limit: usize },
    #[error("representation dimension must be positive")]
    ZeroDimension,
    #[error("invalid option: {0}")]
    InvalidOption(String),
}
