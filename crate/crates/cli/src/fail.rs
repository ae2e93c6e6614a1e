use std::fmt;

/// Top-level failure, mapped to the process exit code.
#[derive(Debug)]
pub enum Failure {
    /// A verification or analysis claim did not hold.
    Verify(String),
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Verify(m) => write!(f, "verification failed: {m}"),
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Io(m) => write!(f, "i/o: {m}"),
        }
    }
}

impl From<snarklab::Error> for Failure {
    fn from(e: snarklab::Error) -> Self {
        match e {
            snarklab::Error::Param(_) => Failure::Usage(e.to_string()),
            e => Failure::Verify(e.to_string()),
        }
    }
}

pub fn io(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}
