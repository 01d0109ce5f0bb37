use std::collections::HashSet;

use super::binary::body_words;
use super::{reduction_strings, Encoding, ReductionError, ReductionParams, ReductionString};
use crate::automata::{Alphabet, DfaSample, MachineSample, Run, Word};
use crate::graphs::Graph;

/// The single-string instance `Str = 0^N s_1 0^N s_2 ⋯ 0^N s_r`.
#[derive(Debug, Clone)]
pub struct SingleStringInstance {
    pub word: Word,
    /// `labels[p]` is the label of the length-`p` prefix; `labels[0]` is `ε`.
    pub labels: Vec<bool>,
    /// Every prefix of `word` with its label.
    pub sample: DfaSample,
    /// The same information as one Mealy run (`ε` omitted).
    pub run: MachineSample,
    /// The strings of `S`, in block order.
    pub blocks: Vec<ReductionString>,
}

/// Labels every prefix of `word` by membership in
/// `T*(0^[1,N-1] ∪ 0^N S+)` where `T = {0^N s : s ∈ S}`.
pub fn single_string_labels(
    word: &[usize],
    strings: &[Word],
    positives: &[Word],
    separator_len: usize,
) -> Vec<bool> {
    let n = separator_len;
    let len = word.len();
    // zero_run[p]: number of consecutive zeros starting at position p
    let mut zero_run = vec![0usize; len + 1];
    for p in (0..len).rev() {
        zero_run[p] = if word[p] == 0 { zero_run[p + 1] + 1 } else { 0 };
    }
    let positive_set: HashSet<&[usize]> = positives.iter().map(|w| w.as_slice()).collect();
    let mut positive_lens: Vec<usize> = positives.iter().map(Vec::len).collect();
    positive_lens.sort_unstable();
    positive_lens.dedup();

    let mut in_star = vec![false; len + 1];
    in_star[0] = true;
    let mut labels = vec![false; len + 1];
    for i in 0..=len {
        if !in_star[i] {
            continue;
        }
        for j in 1..n.min(zero_run[i] + 1) {
            labels[i + j] = true;
        }
        if zero_run[i] < n {
            continue;
        }
        let start = i + n;
        for s in strings {
            if word[start..].starts_with(s) {
                in_star[start + s.len()] = true;
            }
        }
        for &l in &positive_lens {
            if start + l <= len && positive_set.contains(&word[start..start + l]) {
                labels[start + l] = true;
            }
        }
    }
    labels
}

/// Builds `Str` and labels all of its prefixes.
pub fn single_string(
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<SingleStringInstance, ReductionError> {
    if graph.num_edges() == 0 {
        return Err(ReductionError::NoEdges);
    }
    let blocks = reduction_strings(graph, params, encoding)?;
    let mut word = Vec::with_capacity(blocks.len() * params.block_len());
    for block in &blocks {
        word.extend(std::iter::repeat_n(0, params.separator_len));
        word.extend_from_slice(&block.word);
    }
    let strings: Vec<Word> = blocks.iter().map(|b| b.word.clone()).collect();
    let mut positives = body_words(params, encoding);
    positives.extend(blocks.iter().filter(|b| b.positive).map(|b| b.word.clone()));
    let labels = single_string_labels(&word, &strings, &positives, params.separator_len);

    let mut sample = DfaSample::new(Alphabet::binary());
    for (p, &label) in labels.iter().enumerate() {
        sample.insert(word[..p].to_vec(), label)?;
    }
    let run = MachineSample::new(
        Alphabet::binary(),
        [Run {
            input: word.clone(),
            output: labels[1..].to_vec(),
        }],
    )?;
    Ok(SingleStringInstance {
        word,
        labels,
        sample,
        run,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::make_encoding;

    #[test]
    fn triangle_length() {
        let g = Graph::complete(3).unwrap();
        let p = ReductionParams::for_graph(&g, 3).unwrap();
        let e = make_encoding(&g, &p).unwrap();
        let inst = single_string(&g, &p, &e).unwrap();
        // 6 blocks of N + head + L + tail = 101 + 2 + 25 + 2
        assert_eq!(inst.word.len(), 780);
        assert_eq!(inst.labels.len(), 781);
        assert_eq!(inst.sample.len(), 781);
        assert_eq!(inst.run.runs().len(), 1);
        assert!(!inst.labels[0]);
    }

    #[test]
    fn tiny_instance_labels() {
        // P2 with L = N = 1: Str = 0 0 0 0 | 0 1 0 0
        let g = Graph::path(2).unwrap();
        let (p, _) = ReductionParams::with_overrides(&g, 1, Some(1), Some(1)).unwrap();
        let e = make_encoding(&g, &p).unwrap();
        let inst = single_string(&g, &p, &e).unwrap();
        assert_eq!(inst.word, vec![0, 0, 0, 0, 0, 1, 0, 0]);
        let expected = [false, false, false, true, true, false, false, true, false];
        assert_eq!(inst.labels, expected);
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        let g = Graph::empty(2).unwrap();
        let p = ReductionParams::for_graph(&g, 1).unwrap();
        let e = make_encoding(&g, &p).unwrap();
        assert_eq!(single_string(&g, &p, &e).unwrap_err(), ReductionError::NoEdges);
    }
}
