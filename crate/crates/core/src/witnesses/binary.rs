use serde::{Deserialize, Serialize};

use super::{ensure_consistent, ensure_proper, renumber, WitnessError};
use crate::automata::{Alphabet, Dfa, PartialDfa, StateId};
use crate::graphs::{Coloring, Graph};
use crate::reductions::{binary_sample, Encoding, ReductionParams};

/// The 0-chains found inside a consistent DFA for the binary sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainAnalysis {
    /// `q_{i,L}` per vertex; `None` for vertices the sample says nothing
    /// about.
    pub end_state_of_vertex: Vec<Option<StateId>>,
    /// Number of distinct end states, `k̂`.
    pub num_classes: usize,
    /// For each class, the chain `q_{·,0..L}` of its first vertex.
    pub chain_states: Vec<Vec<StateId>>,
}

/// Forward binary witness plus its leaves (the states reached by strings
/// of `S`).
pub(crate) fn build_binary_witness(
    graph: &Graph,
    coloring: &Coloring,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<(PartialDfa, Vec<StateId>), WitnessError> {
    ensure_proper(graph, coloring, Some(params.colors))?;
    let mut m = PartialDfa::new(Alphabet::binary(), false);
    let q0 = m.initial();

    // chains for used colors; chains[k-1] = q_{k,0..L}
    let mut chains: Vec<Option<Vec<StateId>>> = vec![None; params.colors];
    for v in 0..graph.num_vertices() {
        let k = coloring.color(v);
        if chains[k - 1].is_none() {
            let chain: Vec<StateId> = (0..=params.body_len)
                .map(|h| m.add_state(h == params.body_len))
                .collect();
            for h in 0..params.body_len {
                m.set_transition(chain[h], 0, chain[h + 1])?;
            }
            chains[k - 1] = Some(chain);
        }
    }
    let chain = |k: usize| chains[k - 1].as_ref().expect("chain exists for used colors");

    // head trie, merged by color only at the last symbol
    for v in 0..graph.num_vertices() {
        let code = &encoding.vertex_codes[v];
        let mut q = q0;
        for &bit in &code[..code.len() - 1] {
            q = match m.next(q, bit) {
                Some(t) => t,
                None => {
                    let t = m.add_state(false);
                    m.set_transition(q, bit, t)?;
                    t
                }
            };
        }
        m.set_transition(q, code[code.len() - 1], chain(coloring.color(v))[0])?;
    }

    // per-chain tail tries over incident edges
    let mut leaves = Vec::new();
    for (e, &(i, j)) in graph.edges().iter().enumerate() {
        for v in [i, j] {
            let k = coloring.color(v);
            let code = &encoding.edge_codes[e];
            let mut q = chain(k)[params.body_len];
            for &bit in &code[..code.len() - 1] {
                q = match m.next(q, bit) {
                    Some(t) => t,
                    None => {
                        let t = m.add_state(false);
                        m.set_transition(q, bit, t)?;
                        t
                    }
                };
            }
            let last = code[code.len() - 1];
            if m.next(q, last).is_some() {
                return Err(WitnessError::Construction(format!(
                    "tail path for edge {e} already present in chain {k}"
                )));
            }
            let leaf = m.add_state(coloring.color(i) == k);
            m.set_transition(q, last, leaf)?;
            leaves.push(leaf);
        }
    }
    Ok((m, leaves))
}

/// Acyclic partial DFA with one 0-chain of length `L` per used color, a
/// head trie routing `ṽ_i` to the chain of `Φ(v_i)`, and per-chain tail
/// tries whose terminal for `ẽ_ij` accepts iff `Φ(v_i) = k` and `i < j`.
pub fn binary_dfa_from_coloring(
    graph: &Graph,
    coloring: &Coloring,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<PartialDfa, WitnessError> {
    Ok(build_binary_witness(graph, coloring, params, encoding)?.0)
}

/// Follows `ṽ_i 0^L` from `start` for every vertex in `vertices`, checks the
/// chain invariants and groups vertices by end state.
pub(crate) fn analyze_chains(
    dfa: &Dfa,
    start: StateId,
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
    vertices: &[usize],
) -> Result<ChainAnalysis, WitnessError> {
    let n = graph.num_vertices();
    let mut end_state_of_vertex = vec![None; n];
    let mut chains: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for &v in vertices {
        let head_end = dfa.run_from(start, &encoding.vertex_codes[v])?;
        let mut chain = vec![head_end];
        for _ in 0..params.body_len {
            chain.push(dfa.next(*chain.last().expect("nonempty"), 0));
        }
        let mut sorted = chain.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != chain.len() {
            return Err(WitnessError::ChainInvariant(format!(
                "chain of vertex {} revisits a state",
                v + 1
            )));
        }
        end_state_of_vertex[v] = Some(chain[params.body_len]);
        chains[v] = chain;
    }

    let ends: Vec<StateId> = vertices
        .iter()
        .map(|&v| end_state_of_vertex[v].expect("computed above"))
        .collect();
    let classes = renumber(&ends);
    let num_classes = classes.iter().copied().max().unwrap_or(0);

    let mut owner: Vec<Option<usize>> = vec![None; dfa.num_states()];
    for (&v, &class) in vertices.iter().zip(&classes) {
        for &q in &chains[v] {
            match owner[q] {
                Some(c) if c != class => {
                    return Err(WitnessError::ChainInvariant(format!(
                        "state {q} lies on the chains of classes {c} and {class}"
                    )));
                }
                _ => owner[q] = Some(class),
            }
        }
    }

    let mut chain_states = vec![Vec::new(); num_classes];
    for (&v, &class) in vertices.iter().zip(&classes) {
        if chain_states[class - 1].is_empty() {
            chain_states[class - 1] = chains[v].clone();
        }
    }
    if num_classes * params.body_len > dfa.num_states() {
        return Err(WitnessError::ChainInvariant(format!(
            "{num_classes} disjoint chains of length {} cannot fit in {} states",
            params.body_len,
            dfa.num_states()
        )));
    }
    Ok(ChainAnalysis {
        end_state_of_vertex,
        num_classes,
        chain_states,
    })
}

/// Colors `v_i` and `v_j` alike iff `δ*(q₀, ṽ_i 0^L) = δ*(q₀, ṽ_j 0^L)`.
/// Only consistency with the binary sample is required.
pub fn coloring_from_binary_dfa(
    dfa: &Dfa,
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<(Coloring, ChainAnalysis), WitnessError> {
    let sample = binary_sample(graph, params, encoding)?;
    ensure_consistent(dfa, &sample)?;
    let vertices: Vec<usize> = (0..graph.num_vertices()).collect();
    let analysis = analyze_chains(dfa, dfa.initial(), graph, params, encoding, &vertices)?;
    let ends: Vec<StateId> = analysis
        .end_state_of_vertex
        .iter()
        .map(|q| q.expect("every vertex analyzed"))
        .collect();
    let coloring = Coloring::from_colors(renumber(&ends))?;
    ensure_proper(graph, &coloring, None)?;
    Ok((coloring, analysis))
}
