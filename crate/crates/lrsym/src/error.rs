use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("inner shape is not contained in outer shape")]
    InnerNotContained,
    #[error("partition does not fit in the {rows}x{cols} rectangle")]
    RectangleTooSmall { rows: usize, cols: usize },
    #[error("word is not Yamanouchi")]
    NotYamanouchi,
    #[error("word is neither Yamanouchi nor dual Yamanouchi")]
    NotDualYamanouchi,
    #[error("letter {0} exceeds alphabet bound {1}")]
    LetterOutOfRange(usize, usize),
    #[error("invalid tableau filling: {0}")]
    InvalidFilling(String),
    #[error("tableau is not a Littlewood-Richardson tableau")]
    NotLr,
    #[error("tableau entries are not standard")]
    NonStandardInput,
    #[error("tableau does not have normal shape")]
    NotNormalShape,
    #[error("recording matrix is invalid: {0}")]
    InvalidMatrix(String),
    #[error("tableau violates the companion-set condition")]
    CfViolation,
    #[error("cell ({0},{1}) is not an inside corner")]
    NotAnInsideCorner(usize, usize),
    #[error("cell ({0},{1}) is not an outside corner")]
    NotAnOutsideCorner(usize, usize),
    #[error("operator index {0} out of range for alphabet bound {1}")]
    IndexOutOfRange(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("outer tableau does not extend inner tableau")]
    NotExtending,
    #[error("cumulated-matrix inequality violated at row {0}, column {1}")]
    RemarkViolation(usize, usize),
    #[error("|lambda| != |mu| + |nu|")]
    ArityMismatch,
    #[error("unknown map {0:?}")]
    UnknownMap(String),
    #[error("circuit stage received a value of the wrong kind: expected {0}")]
    TypeMismatch(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
