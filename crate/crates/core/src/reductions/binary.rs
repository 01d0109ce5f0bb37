use std::collections::BTreeSet;

use super::{Encoding, ReductionError, ReductionParams};
use crate::automata::{Alphabet, DfaSample, Word};
use crate::graphs::Graph;

/// One string `ṽ_i 0^L ẽ_ij` of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionString {
    /// Head vertex `i`.
    pub vertex: usize,
    /// Canonical index of the edge.
    pub edge: usize,
    /// `true` iff `i` is the smaller endpoint, i.e. the string is in `S+`.
    pub positive: bool,
    pub word: Word,
}

/// `S`, ordered by head vertex and then by edge index.
pub fn reduction_strings(
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<Vec<ReductionString>, ReductionError> {
    encoding.check(graph, params)?;
    let mut out = Vec::with_capacity(2 * graph.num_edges());
    for v in 0..graph.num_vertices() {
        for e in graph.incident_edges(v) {
            let mut word = encoding.vertex_codes[v].clone();
            word.extend(std::iter::repeat_n(0, params.body_len));
            word.extend_from_slice(&encoding.edge_codes[e]);
            out.push(ReductionString {
                vertex: v,
                edge: e,
                positive: graph.edges()[e].0 == v,
                word,
            });
        }
    }
    Ok(out)
}

/// `ṽ_i 0^L` for every vertex.
pub(crate) fn body_words(params: &ReductionParams, encoding: &Encoding) -> Vec<Word> {
    encoding
        .vertex_codes
        .iter()
        .map(|code| {
            let mut w = code.clone();
            w.extend(std::iter::repeat_n(0, params.body_len));
            w
        })
        .collect()
}

/// Prefix-complete binary sample with `S+ = {ṽ_i 0^L} ∪ {ṽ_i 0^L ẽ_ij : i < j}`
/// and every other prefix of `S ∪ S+` negative.
pub fn binary_sample(
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<DfaSample, ReductionError> {
    let strings = reduction_strings(graph, params, encoding)?;
    let mut positives: BTreeSet<Word> = body_words(params, encoding).into_iter().collect();
    positives.extend(strings.iter().filter(|s| s.positive).map(|s| s.word.clone()));
    let mut negatives = BTreeSet::new();
    for word in strings.iter().map(|s| &s.word).chain(positives.iter()) {
        for len in 0..=word.len() {
            let prefix = &word[..len];
            if !positives.contains(prefix) && !negatives.contains(prefix) {
                negatives.insert(prefix.to_vec());
            }
        }
    }
    Ok(DfaSample::from_sets(Alphabet::binary(), positives, negatives)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{is_prefix_complete, PrefixCompleteness};
    use crate::graphs::example_graph;
    use crate::reductions::make_encoding;

    fn setup(g: &Graph, k: usize) -> (ReductionParams, Encoding) {
        let p = ReductionParams::for_graph(g, k).unwrap();
        let e = make_encoding(g, &p).unwrap();
        (p, e)
    }

    #[test]
    fn example_strings() {
        let g = example_graph();
        let (p, e) = setup(&g, 3);
        let s = reduction_strings(&g, &p, &e).unwrap();
        assert_eq!(s.len(), 12);
        assert_eq!(s.iter().filter(|x| x.positive).count(), 6);
        assert!(s.iter().all(|x| x.word.len() == 3 + 57 + 3));
        // ṽ_2 0^L ẽ_{2,4}: vertex 1 is the smaller endpoint of edge (1,3), index 3
        let x = s.iter().find(|x| x.vertex == 1 && x.edge == 3).unwrap();
        assert!(x.positive);
        assert_eq!(&x.word[..3], &[0, 0, 1]);
        assert_eq!(&x.word[60..], &[0, 1, 1]);
        let y = s.iter().find(|x| x.vertex == 3 && x.edge == 3).unwrap();
        assert!(!y.positive);
    }

    #[test]
    fn sample_shape() {
        let g = Graph::complete(3).unwrap();
        let (p, e) = setup(&g, 3);
        let sample = binary_sample(&g, &p, &e).unwrap();
        assert_eq!(is_prefix_complete(&sample), PrefixCompleteness::Complete);
        assert_eq!(sample.positives().len(), 3 + 3);
        assert_eq!(sample.label(&[]), Some(false));
        let mut body = vec![0, 1];
        body.extend(std::iter::repeat_n(0, 25));
        assert_eq!(sample.label(&body), Some(true));
        body.pop();
        assert_eq!(sample.label(&body), Some(false));
    }

    #[test]
    fn isolated_vertices_keep_prefix_completeness() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let (p, e) = setup(&g, 2);
        let sample = binary_sample(&g, &p, &e).unwrap();
        assert_eq!(is_prefix_complete(&sample), PrefixCompleteness::Complete);
        let mut isolated = e.vertex_codes[2].clone();
        isolated.extend(std::iter::repeat_n(0, p.body_len));
        assert_eq!(sample.label(&isolated), Some(true));
    }
}
