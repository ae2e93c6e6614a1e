use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge would join vertex {0} to itself")]
    Loop(u32),
    #[error("no vertex {0}")]
    NoVertex(u32),
    #[error("no edge {0}")]
    NoEdge(u32),
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree {
        vertex: u32,
        degree: usize,
        expected: &'static str,
    },
    #[error("vertex {0} is not a terminal")]
    NotTerminal(u32),
    #[error("edge {0} is a bridge")]
    Bridge(u32),
    #[error("graph is colourable")]
    Colourable,
    #[error("parse error at line {line}, offset {offset}: {msg}")]
    Parse {
        line: usize,
        offset: usize,
        msg: String,
    },
    #[error("graph6 cannot encode parallel edge {0}")]
    MultiEdge(u32),
    #[error("{0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("reduction failed: {0}")]
    Reduction(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
