use super::binary::{analyze_chains, build_binary_witness};
use super::{ensure_consistent, ensure_proper, renumber, WitnessError};
use crate::automata::{Dfa, PartialDfa, StateId};
use crate::graphs::{Coloring, Graph};
use crate::reductions::{single_string, Encoding, ReductionParams};

/// Binary witness extended by a 0-chain `q_{0,0}, …, q_{0,N-1}` into its old
/// initial state, with a 0-edge from every leaf back to `q_{0,1}`, then
/// completed with self-loops.
pub fn single_dfa_from_coloring(
    graph: &Graph,
    coloring: &Coloring,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<Dfa, WitnessError> {
    let min = params.binary_bound();
    if params.separator_len <= min {
        return Err(WitnessError::SeparatorTooShort {
            separator_len: params.separator_len,
            min,
        });
    }
    let (inner, leaves) = build_binary_witness(graph, coloring, params, encoding)?;
    let n = params.separator_len;
    let shift = |q: StateId| q + n;

    let mut triples: Vec<(StateId, usize, StateId)> = inner
        .defined_transitions()
        .map(|(from, a, to)| (shift(from), a, shift(to)))
        .collect();
    for t in 0..n - 1 {
        triples.push((t, 0, t + 1));
    }
    triples.push((n - 1, 0, shift(inner.initial())));
    for &leaf in &leaves {
        triples.push((shift(leaf), 0, 1));
    }
    let accepting = (1..n).chain(inner.accepting_states().map(shift));
    let m = PartialDfa::from_parts(
        inner.alphabet().clone(),
        n + inner.num_states(),
        0,
        triples,
        accepting,
    )?;
    Ok(m.complete())
}

/// Finds the common return state after every `T*0^N`, then groups the
/// vertices occurring in `Str` by `δ*(r, ṽ_i 0^L)`. Vertices without edges
/// get color 1.
pub fn coloring_from_single_dfa(
    dfa: &Dfa,
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<Coloring, WitnessError> {
    let bound = params.single_bound();
    if dfa.num_states() > bound {
        return Err(WitnessError::SizeBound {
            states: dfa.num_states(),
            bound,
        });
    }
    let instance = single_string(graph, params, encoding)?;
    ensure_consistent(dfa, &instance.sample)?;

    let trace = dfa.trace(&instance.word)?;
    let block_len = params.block_len();
    let returns: Vec<StateId> = (0..instance.blocks.len())
        .map(|b| trace[b * block_len + params.separator_len])
        .collect();
    let r = returns[0];
    if let Some(b) = returns.iter().position(|&q| q != r) {
        return Err(WitnessError::ReturnState(format!(
            "after block {} the separator ends in state {} instead of {r}",
            b + 1,
            returns[b]
        )));
    }

    let vertices: Vec<usize> = (0..graph.num_vertices())
        .filter(|&v| graph.degree(v) > 0)
        .collect();
    let analysis = analyze_chains(dfa, r, graph, params, encoding, &vertices)?;
    let keys: Vec<Option<StateId>> = analysis.end_state_of_vertex.clone();
    // isolated vertices share the class of the first vertex
    let first = keys.iter().flatten().next().copied();
    let filled: Vec<Option<StateId>> = keys.iter().map(|k| k.or(first)).collect();
    let coloring = Coloring::from_colors(renumber(&filled))?;
    if analysis.num_classes > params.colors {
        return Err(WitnessError::TooManyClasses {
            k_hat: analysis.num_classes,
            k: params.colors,
        });
    }
    ensure_proper(graph, &coloring, None)?;
    Ok(coloring.with_num_colors(params.colors)?)
}
