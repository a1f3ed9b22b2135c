use thiserror::Error;

use crate::complex::CellId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("leading term undetermined at precision {precision}")]
    IndeterminateAtPrecision { precision: String },

    #[error("degenerate simplex {0:?}")]
    DegenerateSimplex(Vec<CellId>),

    #[error("cell set is not face-closed: {cell} has face {face} outside the set")]
    NotFaceClosed { cell: CellId, face: CellId },

    #[error("cell set is not contained in the larger set: {0}")]
    NotNested(CellId),

    #[error("no collapse rate for cell {0}")]
    MissingRate(CellId),

    #[error("unknown cell {0}")]
    UnknownCell(CellId),

    #[error("face {face} of cell {cell} is outside the codomain")]
    FaceOutsideCodomain { cell: CellId, face: CellId },

    #[error("invalid excision set: {0}")]
    InvalidExcision(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
