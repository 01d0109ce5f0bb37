//! Consistent-automaton identification and its hardness reductions from
//! graph coloring.
//!
//! * [`automata`]: DFAs, partial DFAs, Moore/Mealy machines, samples and
//!   prefix trees.
//! * [`graphs`]: graphs, colorings, an exact chromatic-number oracle, DIMACS.
//! * [`reductions`]: sample constructions from a graph.
//! * [`witnesses`]: coloring ⇄ automaton constructions for each reduction.
//! * [`solver`]: exact minimum consistent DFA search, brute force, RPNI.
//! * [`io`]: JSON, Abbadingo, run files and DOT.

pub mod automata;
pub mod graphs;
pub mod io;
pub mod reductions;
pub mod solver;
pub mod witnesses;

pub use automata::{Alphabet, Dfa, DfaSample, MachineSample, PartialDfa};
pub use graphs::{Coloring, Graph};
