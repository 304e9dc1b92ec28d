use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },

    #[error("edge ({0}, {0}) is a loop")]
    Loop(usize),

    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("order {order} exceeds the exhaustive search ceiling of {ceiling}")]
    Capacity { order: usize, ceiling: usize },

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("invalid construction spec `{spec}`: {reason}")]
    Spec { spec: String, reason: String },

    #[error("cache error: {0}")]
    Cache(String),
}
