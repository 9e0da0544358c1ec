use thiserror::Error;

/// What went wrong while decoding a graph6 line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    EmptyInput,
    /// The size prefix is not a single byte in `?`..=`}` (only the short form is supported).
    MalformedLength,
    CharOutOfRange(u8),
    WrongLength { expected: usize, found: usize },
    TrailingBitsNonzero,
}

impl std::fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6ErrorKind::EmptyInput => write!(f, "empty input"),
            Graph6ErrorKind::MalformedLength => {
                write!(f, "malformed length field (only 0..=62 vertices supported)")
            }
            Graph6ErrorKind::CharOutOfRange(b) => write!(f, "character 0x{b:02x} out of range"),
            Graph6ErrorKind::WrongLength { expected, found } => {
                write!(f, "expected {expected} bytes, found {found}")
            }
            Graph6ErrorKind::TrailingBitsNonzero => write!(f, "nonzero padding bits"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 error at byte {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("vertex {0} does not exist")]
    InvalidVertex(usize),
    #[error("edge {0} does not exist")]
    InvalidEdge(usize),
    #[error("{0} is undefined for an edgeless graph")]
    Edgeless(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("graph too large for exhaustive search: {n} vertices (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("color {color} on edge {edge} is outside 1..={k}")]
    ColorOutOfRange { edge: usize, color: u32, k: u32 },
    #[error("time budget exhausted; chi_s lies in [{lb}, {ub}]")]
    Timeout { lb: usize, ub: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
