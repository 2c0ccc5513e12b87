use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Messages name the violated precondition; the CLI prints them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("u must not equal 1")]
    UEqualsOne,
    #[error("v must not equal 1")]
    VEqualsOne,
    #[error("uv must not equal 1")]
    UvEqualsOne,
    #[error("lambda must be nonzero for the {0} formula")]
    ZeroLambda(&'static str),
    #[error("the {variant} formula does not apply to {basis}")]
    VariantNotApplicable {
        variant: &'static str,
        basis: &'static str,
    },
    #[error("the ladder formula requires order r >= 1")]
    LadderNeedsPositiveOrder,
    #[error("series truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series is not invertible: constant term must be a nonzero constant")]
    NotInvertible,
    #[error("harmonic number index must be at least 1")]
    HarmonicZero,
    #[error("{name} requires {param} >= {min}, got {got}")]
    SizeTooSmall {
        name: &'static str,
        param: &'static str,
        min: usize,
        got: usize,
    },
    #[error("degree {requested} exceeds the configured cap of {cap}")]
    DegreeTooLarge { requested: usize, cap: usize },
    #[error("basis member {0} does not have exact degree {0}")]
    DegenerateBasis(usize),
    #[error("formula routes disagree: {0}")]
    RoutesDisagree(String),
    #[error("missing parameter {0}")]
    MissingParam(&'static str),
    #[error("cannot write output: {0}")]
    Output(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
