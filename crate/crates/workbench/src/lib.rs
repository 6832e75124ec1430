//! File formats, reports and command implementations behind the `madm` binary.

pub mod cli;
mod error;
pub mod problem_file;
pub mod report;

pub use error::{Locus, Result, WorkbenchError};
pub use problem_file::{emit_problem, load_problem, Format, LoadedProblem, ProblemFile};
pub use report::{ReportFile, REPORT_VERSION};
