//! Sample constructions from graph coloring instances.
//!
//! * [`zhang_sample`]: prefix-closed sample over the alphabet `V ∪ E`.
//! * [`binary_sample`]: prefix-complete sample over `{0,1}` built from
//!   head/body/tail strings `ṽ_i 0^L ẽ_ij`.
//! * [`single_string`]: all prefixes of one binary string made of the
//!   binary strings separated by long runs of zeros.

mod binary;
mod params;
mod single;
mod zhang;

pub use binary::{binary_sample, reduction_strings, ReductionString};
pub use params::{code_len, make_encoding, Encoding, ParamWarning, ReductionParams};
pub use single::{single_string, single_string_labels, SingleStringInstance};
pub use zhang::{zhang_alphabet, zhang_sample};

use crate::automata::AutomataError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("parameter {name} must be positive")]
    NonPositive { name: &'static str },
    #[error("{count} codes do not fit in {len} bits")]
    CodeCapacity { count: usize, len: usize },
    #[error("encoding does not match the graph: {0}")]
    EncodingMismatch(String),
    #[error("the construction needs a graph with at least one edge")]
    NoEdges,
    #[error(transparent)]
    Automata(#[from] AutomataError),
}
