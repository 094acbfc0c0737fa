use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=62")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{what} is capped at {cap} vertices, got {n}")]
    Capacity { what: &'static str, n: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// A rejected graph6 line. `offset` is the byte position of the problem
/// within the line, counted after any `>>graph6<<` header.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6 size byte at offset 0 encodes n = 0")]
    ZeroVertices,
    #[error("graph6 line encodes more than 62 vertices")]
    TooLarge,
    #[error("truncated payload: expected {expected} bytes, found {found} (offset {offset})")]
    Truncated { expected: usize, found: usize, offset: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

impl Graph6Error {
    /// Byte offset of the problem within the line, after any header.
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty | Graph6Error::ZeroVertices | Graph6Error::TooLarge => 0,
            Graph6Error::BadByte { offset, .. }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::TrailingData { offset }
            | Graph6Error::NonZeroPadding { offset } => offset,
        }
    }
}
