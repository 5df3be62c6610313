use std::path::PathBuf;

use crate::solver::ApproxResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid simplex {vertices:?}: {reason}")]
    InvalidSimplex { vertices: Vec<u32>, reason: &'static str },

    #[error("simplex {0:?} appears more than once")]
    DuplicateSimplex(Vec<u32>),

    #[error("face {face:?} of simplex {simplex:?} is missing")]
    MissingFace { simplex: Vec<u32>, face: Vec<u32> },

    #[error("face {face:?} enters after its coface {simplex:?}")]
    MonotonicityViolation { face: Vec<u32>, simplex: Vec<u32> },

    #[error("simplex {0:?} has no critical value")]
    EmptyCriticalSet(Vec<u32>),

    #[error("simplex {0:?} has a non-finite coordinate")]
    NonFiniteCoordinate(Vec<u32>),

    #[error("no value given for vertex {0}")]
    MissingVertexValue(u32),

    #[error("box has zero extent in both parameters")]
    DegenerateBox,

    #[error("box level {0} does not match its width")]
    InvalidLevel(u32),

    #[error("diagram dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("critical values must lie in the positive quadrant; normalize first")]
    NotNormalized,

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("approximation did not converge ({reason})")]
    NotConverged { reason: String, partial: Box<ApproxResult> },

    #[error("cannot sample {requested} distinct maximal simplices: {reason}")]
    InfeasibleSpec { requested: usize, reason: String },

    #[error("heatmap depth {0} exceeds the maximum of 10")]
    DepthTooLarge(u32),

    #[error("dataset {0} contains fewer than two filtration files")]
    EmptyDataset(PathBuf),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
