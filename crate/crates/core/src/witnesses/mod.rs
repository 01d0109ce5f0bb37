//! Constructive sides of the reductions: colorings to small consistent
//! automata and back, the two-chain DFA, and the approximation-ratio report.

mod binary;
mod ratio;
mod single;
mod two_chain;
mod zhang;

pub use binary::{binary_dfa_from_coloring, coloring_from_binary_dfa, ChainAnalysis};
pub use ratio::{ratio_report, RatioReport};
pub use single::{coloring_from_single_dfa, single_dfa_from_coloring};
pub use two_chain::two_chain_dfa;
pub use zhang::{coloring_from_zhang_dfa, zhang_dfa_from_coloring};

use crate::automata::{check_consistency, Acceptor, AutomataError, DfaSample};
use crate::graphs::{is_proper_coloring, Coloring, Graph, GraphError};
use crate::reductions::ReductionError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("the coloring is not proper")]
    ImproperColoring,
    #[error("the coloring uses color {color} but K = {k}")]
    ColorsExceedK { color: usize, k: usize },
    #[error("automaton is inconsistent with the sample: {count} violation(s), first on {first}")]
    Inconsistent { count: usize, first: String },
    #[error("0-chain invariant violated: {0}")]
    ChainInvariant(String),
    #[error("{states} states exceed the bound {bound}")]
    SizeBound { states: usize, bound: usize },
    #[error("N = {separator_len} must exceed (K+1)L = {min}")]
    SeparatorTooShort { separator_len: usize, min: usize },
    #[error("return-state property fails: {0}")]
    ReturnState(String),
    #[error("extracted {k_hat} colors but K = {k}")]
    TooManyClasses { k_hat: usize, k: usize },
    #[error("ratio invariant violated: {0}")]
    RatioInvariant(String),
    #[error("internal construction error: {0}")]
    Construction(String),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn ensure_consistent<A: Acceptor + ?Sized>(automaton: &A, sample: &DfaSample) -> Result<(), WitnessError> {
    let report = check_consistency(automaton, sample)?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(WitnessError::Inconsistent {
            count: report.violations.len(),
            first: sample.alphabet().format_word(&v.word),
        }),
    }
}

fn ensure_proper(graph: &Graph, coloring: &Coloring, k: Option<usize>) -> Result<(), WitnessError> {
    if !is_proper_coloring(graph, coloring)? {
        return Err(WitnessError::ImproperColoring);
    }
    if let Some(k) = k {
        if let Some(&color) = coloring.colors().iter().find(|&&c| c > k) {
            return Err(WitnessError::ColorsExceedK { color, k });
        }
    }
    Ok(())
}

/// Renumbers arbitrary class keys to `1..` in order of first occurrence.
fn renumber<T: PartialEq + Copy>(keys: &[T]) -> Vec<usize> {
    let mut seen: Vec<T> = Vec::new();
    keys.iter()
        .map(|k| match seen.iter().position(|s| s == k) {
            Some(i) => i + 1,
            None => {
                seen.push(*k);
                seen.len()
            }
        })
        .collect()
}
