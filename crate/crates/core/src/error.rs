use thiserror::Error;

use crate::weights::Mode;

/// Errors raised by the library. Identity mismatches are not errors; they are
/// reported through [`crate::verify::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: {dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("unbound indeterminate `{0}`")]
    UnboundVariable(String),

    #[error("invalid indeterminate name `{0}`")]
    InvalidName(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("expected a {expected} weight system, got {found}")]
    ModeMismatch { expected: Mode, found: Mode },

    #[error("unknown catalog id `{0}`")]
    UnknownCatalog(String),

    #[error("invalid weight descriptor: {0}")]
    Descriptor(String),

    #[error("moment table has depth {have}, need {need}")]
    InsufficientDepth { have: usize, need: usize },

    #[error("sequence too short: need {need} terms, have {have}")]
    SequenceTooShort { need: usize, have: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("odd residual power of sqrt(t) ({0}) in umbral expansion")]
    OddSqrtPower(i64),

    #[error("enumeration refused: {0}")]
    EnumerationBound(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shortens long polynomial renderings inside error messages.
pub(crate) fn abbreviate(s: String) -> String {
    const MAX: usize = 160;
    if s.len() <= MAX {
        s
    } else {
        let mut cut = MAX;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}... ({} chars)", &s[..cut], s.len())
    }
}
