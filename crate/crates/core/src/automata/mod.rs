//! Automata and sample data model.
//!
//! Everything here is indexed densely: symbols are `0..alphabet.size()` and
//! states are `0..num_states`. The output alphabet of Moore and Mealy
//! machines is fixed to `{+, -}`, carried as `bool` (`true` is `+`).

mod alphabet;
mod dfa;
mod machine;
mod prefix;
mod sample;

pub use alphabet::Alphabet;
pub use dfa::{check_consistency, Acceptor, ConsistencyReport, Dfa, PartialDfa, Violation};
pub use machine::{MachineSample, MealyMachine, MooreMachine, Run};
pub use prefix::{
    is_prefix_complete, prefix_tree_acceptor, prefixes, PrefixCompleteness, PrefixTree,
};
pub use sample::{DfaSample, LabeledString};

/// Index of an input symbol.
pub type Symbol = usize;
/// Index of a state.
pub type StateId = usize;
/// A string over an indexed alphabet.
pub type Word = Vec<Symbol>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomataError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol name '{0}'")]
    DuplicateSymbolName(String),
    #[error("symbol {symbol} is outside the alphabet 0..{size}")]
    SymbolOutOfRange { symbol: Symbol, size: usize },
    #[error("state {state} is outside 0..{num_states}")]
    StateOutOfRange { state: StateId, num_states: usize },
    #[error("an automaton needs at least one state")]
    NoStates,
    #[error("transition table has {got} entries, expected {expected}")]
    TableSize { expected: usize, got: usize },
    #[error("output table has {got} entries, expected {expected}")]
    OutputSize { expected: usize, got: usize },
    #[error("alphabet size mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("string {word} is labeled both positive and negative")]
    ConflictingLabel { word: String },
    #[error("run input has length {input} but output has length {output}")]
    RunLengthMismatch { input: usize, output: usize },
    #[error("runs {first} and {second} disagree on a common input prefix")]
    ConflictingRuns { first: String, second: String },
    #[error("sample is neither prefix-complete nor almost prefix-complete")]
    NotPrefixComplete,
    #[error("transition ({state}, {symbol}) already leads to {existing}, cannot redirect to {new}")]
    TransitionConflict {
        state: StateId,
        symbol: Symbol,
        existing: StateId,
        new: StateId,
    },
}

/// Renders a `+`/`-` output string.
pub fn format_outputs(outputs: &[bool]) -> String {
    outputs.iter().map(|&o| if o { '+' } else { '-' }).collect()
}

/// Parses a `+`/`-` output string. `None` on any other character.
pub fn parse_outputs(text: &str) -> Option<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '+' => Some(true),
            '-' | '−' => Some(false),
            _ => None,
        })
        .collect()
}
