//! Exact minimum-consistent-DFA search, a brute-force oracle for tiny
//! instances, and the RPNI merge heuristic.

mod brute;
mod exact;
mod rpni;

use std::time::Duration;

pub use brute::brute_force_min;
pub use exact::{exists_consistent, min_consistent};
pub use rpni::rpni;

use crate::automata::{check_consistency, Acceptor, AutomataError, DfaSample, Dfa, PartialDfa};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("max_states must be at least 1")]
    InvalidBound,
    #[error("no consistent automaton with at most {bound} states")]
    ExceedsBound { bound: usize },
    #[error("time budget exhausted while deciding m = {m}")]
    Timeout { m: usize },
    #[error("outside the brute-force domain: {0}")]
    OutOfDomain(String),
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

/// One exact decision query: is there a DFA (or ADFA) with at most
/// `max_states` states consistent with `sample`?
#[derive(Debug, Clone, Copy)]
pub struct SolveRequest<'a> {
    pub sample: &'a DfaSample,
    pub max_states: usize,
    pub require_acyclic: bool,
    pub time_budget: Option<Duration>,
}

impl<'a> SolveRequest<'a> {
    pub fn new(sample: &'a DfaSample, max_states: usize) -> Self {
        Self {
            sample,
            max_states,
            require_acyclic: false,
            time_budget: None,
        }
    }

    pub fn acyclic(mut self, require_acyclic: bool) -> Self {
        self.require_acyclic = require_acyclic;
        self
    }

    pub fn budget(mut self, time_budget: Option<Duration>) -> Self {
        self.time_budget = time_budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Sat,
    Unsat,
    Timeout,
}

/// A consistent automaton found by the search: total in the general case,
/// partial and acyclic when acyclicity was requested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Total(Dfa),
    Partial(PartialDfa),
}

impl Witness {
    pub fn num_states(&self) -> usize {
        match self {
            Self::Total(d) => d.num_states(),
            Self::Partial(p) => p.num_states(),
        }
    }

    pub fn as_acceptor(&self) -> &dyn Acceptor {
        match self {
            Self::Total(d) => d,
            Self::Partial(p) => p,
        }
    }

    /// Total DFA; a partial witness is completed with self-loops.
    pub fn to_dfa(&self) -> Dfa {
        match self {
            Self::Total(d) => d.clone(),
            Self::Partial(p) => p.complete(),
        }
    }

    pub fn is_consistent_with(&self, sample: &DfaSample) -> Result<bool, AutomataError> {
        Ok(check_consistency(self.as_acceptor(), sample)?.is_consistent())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub witness: Option<Witness>,
    pub states_explored: u64,
}
