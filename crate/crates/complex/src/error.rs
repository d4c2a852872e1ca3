use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0:?} is not a face")]
    NotAFace(Vec<usize>),
    #[error("{0} is not a vertex")]
    NotAVertex(usize),
    #[error("vertex {vertex} out of range (complex has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("map is not simplicial: {0:?} is sent to a non-face")]
    NotSimplicial(Vec<usize>),
    #[error("map does not send vertex {0} anywhere")]
    Unmapped(usize),
    #[error("invalid height function: the edge {0}–{1} has equal heights")]
    InvalidHeight(usize, usize),
    #[error("missing height for vertex {0}")]
    MissingHeight(usize),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("invalid complex JSON: {0}")]
    Json(String),
}
