use std::fmt;
use std::path::PathBuf;

/// Location of a parse failure inside an input file.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Locus {
    pub line: Option<u64>,
    pub field: Option<String>,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.line, &self.field) {
            (Some(l), Some(fl)) => write!(f, "line {l}, {fl}"),
            (Some(l), None) => write!(f, "line {l}"),
            (None, Some(fl)) => write!(f, "{fl}"),
            (None, None) => f.write_str("input"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum WorkbenchError {
    #[error("{}: {locus}: {message}", path.display())]
    Parse {
        path: PathBuf,
        locus: Locus,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Invalid {
        path: PathBuf,
        #[source]
        source: madm_core::Error,
    },

    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Analysis(#[from] madm_core::Error),

    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write to standard output: {0}")]
    Stdout(#[source] std::io::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

impl WorkbenchError {
    /// 2 for anything the caller can fix in the input or flags, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            WorkbenchError::Write { .. }
            | WorkbenchError::Stdout(_)
            | WorkbenchError::Internal(_) => 1,
            _ => 2,
        }
    }

    /// The reader of standard output went away, e.g. `madm ... | head`.
    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, WorkbenchError::Stdout(e) if e.kind() == std::io::ErrorKind::BrokenPipe)
    }
}

pub type Result<T, E = WorkbenchError> = std::result::Result<T, E>;
