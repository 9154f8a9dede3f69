use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("chord {name} appears {count} times (expected 2)")]
    ChordMultiplicity { name: String, count: usize },

    #[error("chord {0} has equal signs on both endpoints")]
    EqualSigns(String),

    #[error("chord {0} must have exactly one over (o) and one under (u) endpoint")]
    BadRoles(String),

    #[error("crossing {0}: {1}")]
    BadGaussCrossing(String, String),

    #[error("expected an {expected} code")]
    WrongKind { expected: &'static str },

    #[error("unknown chord {0}")]
    UnknownChord(String),

    #[error("multi-component diagrams are not supported by {0}")]
    MultiComponent(&'static str),

    #[error("{0} requires at least two components")]
    SingleComponent(&'static str),

    #[error("move is not applicable: {0}")]
    InapplicableMove(String),

    #[error("pair ({0}, {1}) is not in the pairing")]
    PairNotFound(String, String),

    #[error("unknown example {0}")]
    UnknownExample(String),

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("invalid replay record: {0}")]
    BadRecord(String),
}

impl Error {
    /// Errors raised while reading text input, as opposed to errors raised by a computation.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::ChordMultiplicity { .. }
                | Error::EqualSigns(_)
                | Error::BadRoles(_)
                | Error::BadGaussCrossing(..)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
