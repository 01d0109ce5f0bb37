use super::{ensure_consistent, WitnessError};
use crate::automata::{Alphabet, Dfa, PartialDfa, StateId};
use crate::graphs::Graph;
use crate::reductions::{single_string, Encoding, ReductionParams};

/// DFA for the single-string sample whose size does not depend on the
/// chromatic number.
///
/// Two `{0,1}`-chains `C₊`, `C₋` of `N + head_len + L` states count through
/// `0^N ṽ 0^L`; chain `C_b` is entered when the coming block's string has
/// sign `b`. From the end of `C_b` a tail trie over the edge codes of the
/// sign-`b` strings leads to `q_b^{b'}`, where `b'` is the sign of the next
/// block (`+` after the last block). `q_a^b` accepts iff `a = +` and
/// continues into `C_b`. The initial state is `q₋^{σ₁}`.
pub fn two_chain_dfa(
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<Dfa, WitnessError> {
    let instance = single_string(graph, params, encoding)?;
    let blocks = &instance.blocks;
    let chain_len = params.separator_len + params.head_len + params.body_len;

    let mut m = PartialDfa::new(Alphabet::binary(), false);
    // leaves[a][b], index 1 = positive
    let mut leaves: [[Option<StateId>; 2]; 2] = [[None; 2]; 2];
    let first_sign = usize::from(blocks[0].positive);
    leaves[0][first_sign] = Some(m.initial());

    let mut chains: Vec<Vec<StateId>> = Vec::with_capacity(2);
    for _ in 0..2 {
        let chain: Vec<StateId> = (1..=chain_len)
            .map(|t| m.add_state(t < params.separator_len || t == chain_len))
            .collect();
        for w in chain.windows(2) {
            m.set_transition(w[0], 0, w[1])?;
            m.set_transition(w[0], 1, w[1])?;
        }
        chains.push(chain);
    }

    for (idx, block) in blocks.iter().enumerate() {
        let a = usize::from(block.positive);
        let b = blocks.get(idx + 1).map_or(1, |next| usize::from(next.positive));
        let code = &encoding.edge_codes[block.edge];
        let mut q = chains[a][chain_len - 1];
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
        let leaf = match leaves[a][b] {
            Some(l) => l,
            None => {
                let l = m.add_state(a == 1);
                leaves[a][b] = Some(l);
                l
            }
        };
        m.set_transition(q, code[code.len() - 1], leaf)
            .map_err(|err| WitnessError::Construction(err.to_string()))?;
    }
    for (b, chain) in chains.iter().enumerate() {
        for row in &leaves {
            if let Some(leaf) = row[b] {
                m.set_transition(leaf, 0, chain[0])?;
            }
        }
    }

    let dfa = m.complete();
    ensure_consistent(&dfa, &instance.sample)
        .map_err(|err| WitnessError::Construction(format!("two-chain layout: {err}")))?;
    let bound = params.two_chain_bound();
    if dfa.num_states() >= bound {
        return Err(WitnessError::Construction(format!(
            "{} states, expected fewer than {bound}",
            dfa.num_states()
        )));
    }
    Ok(dfa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::check_consistency;
    use crate::graphs::example_graph;
    use crate::reductions::make_encoding;

    fn check(g: &Graph, k: usize) -> (usize, usize) {
        let p = ReductionParams::for_graph(g, k).unwrap();
        let e = make_encoding(g, &p).unwrap();
        let m = two_chain_dfa(g, &p, &e).unwrap();
        let inst = single_string(g, &p, &e).unwrap();
        assert!(check_consistency(&m, &inst.sample).unwrap().is_consistent());
        (m.num_states(), p.two_chain_bound())
    }

    #[test]
    fn triangle() {
        let (m, bound) = check(&Graph::complete(3).unwrap(), 3);
        assert_eq!(bound, 302);
        assert!(m < 302);
    }

    #[test]
    fn example_and_k4() {
        let (m, bound) = check(&example_graph(), 3);
        assert!(m < bound);
        let (m, bound) = check(&Graph::complete(4).unwrap(), 4);
        assert!(m < bound);
    }
}
