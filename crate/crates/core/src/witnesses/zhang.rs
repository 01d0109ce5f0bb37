use super::{ensure_consistent, ensure_proper, renumber, WitnessError};
use crate::automata::{Dfa, PartialDfa};
use crate::graphs::{Coloring, Graph};
use crate::reductions::{zhang_alphabet, zhang_sample};

/// States `0..=K`; `0` is initial and the only accepting state.
/// `δ(0, v_i) = Φ(v_i)`; for `e_ij` with `i < j`, `δ(Φ(i), e_ij) = 0` and
/// `δ(Φ(j), e_ij) = Φ(j)`.
pub fn zhang_dfa_from_coloring(graph: &Graph, coloring: &Coloring) -> Result<PartialDfa, WitnessError> {
    ensure_proper(graph, coloring, None)?;
    let n = graph.num_vertices();
    let k = coloring.num_colors();
    let mut triples = Vec::new();
    for v in 0..n {
        triples.push((0, v, coloring.color(v)));
    }
    for (e, &(i, j)) in graph.edges().iter().enumerate() {
        triples.push((coloring.color(i), n + e, 0));
        triples.push((coloring.color(j), n + e, coloring.color(j)));
    }
    Ok(PartialDfa::from_parts(zhang_alphabet(graph), k + 1, 0, triples, [0])?)
}

/// `Φ(v_i) = δ(q₀, v_i)`, renumbered by first occurrence.
pub fn coloring_from_zhang_dfa(dfa: &Dfa, graph: &Graph) -> Result<Coloring, WitnessError> {
    let sample = zhang_sample(graph)?;
    ensure_consistent(dfa, &sample)?;
    let targets: Vec<usize> = (0..graph.num_vertices())
        .map(|v| dfa.next(dfa.initial(), v))
        .collect();
    let coloring = Coloring::from_colors(renumber(&targets))?;
    ensure_proper(graph, &coloring, None)?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::check_consistency;
    use crate::graphs::{example_graph, is_proper_coloring};

    #[test]
    fn example_witness() {
        let g = example_graph();
        let c = Coloring::new(vec![1, 2, 3, 1, 1], 3).unwrap();
        let m = zhang_dfa_from_coloring(&g, &c).unwrap();
        assert_eq!(m.num_states(), 4);
        let sample = zhang_sample(&g).unwrap();
        assert!(check_consistency(&m, &sample).unwrap().is_consistent());
        let back = coloring_from_zhang_dfa(&m.complete(), &g).unwrap();
        assert!(is_proper_coloring(&g, &back).unwrap());
        assert_eq!(back.colors(), &[1, 2, 3, 1, 1]);
    }

    #[test]
    fn small_cases() {
        let edge = Graph::path(2).unwrap();
        let m = zhang_dfa_from_coloring(&edge, &Coloring::new(vec![1, 2], 2).unwrap()).unwrap();
        assert_eq!(m.num_states(), 3);
        assert!(check_consistency(&m, &zhang_sample(&edge).unwrap()).unwrap().is_consistent());

        let empty = Graph::empty(3).unwrap();
        let m = zhang_dfa_from_coloring(&empty, &Coloring::new(vec![1; 3], 1).unwrap()).unwrap();
        assert_eq!(m.num_states(), 2);
        let back = coloring_from_zhang_dfa(&m.complete(), &empty).unwrap();
        assert_eq!(back.num_used(), 1);
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let g = Graph::path(2).unwrap();
        let c = Coloring::new(vec![1, 1], 1).unwrap();
        assert_eq!(zhang_dfa_from_coloring(&g, &c).unwrap_err(), WitnessError::ImproperColoring);
    }

    #[test]
    fn inconsistent_dfa_is_rejected() {
        let g = Graph::path(2).unwrap();
        let alphabet = zhang_alphabet(&g);
        let one_state = Dfa::new(alphabet, 1, 0, vec![0; 3], [0]).unwrap();
        assert!(matches!(
            coloring_from_zhang_dfa(&one_state, &g),
            Err(WitnessError::Inconsistent { .. })
        ));
    }
}
