use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The shape itself is malformed (not a partition, not nested, box outside shape).
    #[error("malformed shape: {0}")]
    Shape(String),
    #[error("tableau is not a valid {family}: {reason}")]
    Invalid { family: &'static str, reason: String },
    #[error("letter {0} is outside the order's domain")]
    OutsideOrder(String),
    #[error("orders are not related by a single adjacent transposition: {0}")]
    NotAdjacent(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("not in the image of the forward map: {0}")]
    NotInImage(String),
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("an infinite sum needs a finite degree bound")]
    Unbounded,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
