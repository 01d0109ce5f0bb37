use super::ReductionError;
use crate::automata::{Alphabet, DfaSample, Word};
use crate::graphs::Graph;

/// `Σ = V ∪ E`: symbol `i` is vertex `v_{i+1}`, symbol `|V| + e` is the
/// `e`-th edge in canonical order.
pub fn zhang_alphabet(graph: &Graph) -> Alphabet {
    let vertices = (1..=graph.num_vertices()).map(|i| format!("v{i}"));
    let edges = graph
        .edges()
        .iter()
        .map(|&(i, j)| format!("e{}_{}", i + 1, j + 1));
    Alphabet::with_names(vertices.chain(edges)).expect("names are distinct and nonempty")
}

/// `Z+ = {ε} ∪ {v_i e_ij : i < j}`, `Z- = V ∪ {v_j e_ij : i < j}`.
pub fn zhang_sample(graph: &Graph) -> Result<DfaSample, ReductionError> {
    let n = graph.num_vertices();
    let alphabet = zhang_alphabet(graph);
    let mut positives: Vec<Word> = vec![Vec::new()];
    let mut negatives: Vec<Word> = (0..n).map(|v| vec![v]).collect();
    for (e, &(i, j)) in graph.edges().iter().enumerate() {
        positives.push(vec![i, n + e]);
        negatives.push(vec![j, n + e]);
    }
    Ok(DfaSample::from_sets(alphabet, positives, negatives)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{is_prefix_complete, PrefixCompleteness};
    use crate::graphs::example_graph;

    #[test]
    fn example_sizes() {
        let s = zhang_sample(&example_graph()).unwrap();
        assert_eq!(s.positives().len(), 7);
        assert_eq!(s.negatives().len(), 11);
        assert_eq!(s.alphabet().size(), 11);
        assert_eq!(is_prefix_complete(&s), PrefixCompleteness::Complete);
    }

    #[test]
    fn edge_strings_are_oriented() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        let s = zhang_sample(&g).unwrap();
        let a = s.alphabet();
        let w = |text: &str| a.parse_word(text).unwrap();
        assert_eq!(s.label(&w("v2 e2_3")), Some(true));
        assert_eq!(s.label(&w("v3 e2_3")), Some(false));
        assert_eq!(s.label(&w("v1")), Some(false));
        assert_eq!(s.label(&[]), Some(true));
        assert_eq!(s.label(&w("v1 e2_3")), None);
    }
}
