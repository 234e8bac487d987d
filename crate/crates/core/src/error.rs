use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// Bad argument values (ranges, coprimality, shapes).
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("not a knot: {components} components")]
    NotAKnot { components: u64 },

    #[error("ambient space must be S^3, got {0}")]
    NotS3(String),

    #[error("word is not in H: exponent sums of tau_l and tau_m are {tau_l} and {tau_m}")]
    NotInH { tau_l: i64, tau_m: i64 },

    #[error("no double branched cover for delta=1 forms in this ambient space")]
    NoDoubleCover,

    #[error("delta=1 form in L({p},{q}) with p odd: supply the delta=0 form")]
    NeedDeltaZero { p: i64, q: i64 },

    #[error("cannot evaluate a Laurent polynomial at 0")]
    EvaluateAtZero,

    #[error("value at {0} is not an integer")]
    NonIntegral(i64),
}

impl Error {
    /// True for failures of a mathematical precondition, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotAKnot { .. }
                | Error::NotS3(_)
                | Error::NotInH { .. }
                | Error::NoDoubleCover
                | Error::NeedDeltaZero { .. }
        )
    }
}
