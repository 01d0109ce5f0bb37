//! Text formats: automaton JSON, Abbadingo samples, run files and DOT.

mod abbadingo;
mod dot;
mod json;
mod runs;

pub use abbadingo::{parse_abbadingo, write_abbadingo};
pub use dot::to_dot;
pub use json::{Automaton, AutomatonDoc};
pub use runs::{parse_runs, write_runs};

use crate::automata::AutomataError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown automaton type '{0}'")]
    UnknownType(String),
    #[error("field '{field}' is required for type '{kind}'")]
    MissingField { field: &'static str, kind: String },
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}
