use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::automata::Word;
use crate::graphs::Graph;

/// `max(1, ⌈log₂ count⌉)`: code length for `count` distinct items. One bit is
/// the floor so that a single edge still gets a nonempty tail.
pub fn code_len(count: usize) -> usize {
    let bits = if count <= 1 {
        0
    } else {
        (usize::BITS - (count - 1).leading_zeros()) as usize
    };
    bits.max(1)
}

/// Knobs of the binary and single-string constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionParams {
    /// Target number of colors `K`.
    #[serde(rename = "K")]
    pub colors: usize,
    /// Body length `L`.
    #[serde(rename = "L")]
    pub body_len: usize,
    /// Separator length `N`.
    #[serde(rename = "N")]
    pub separator_len: usize,
    pub head_len: usize,
    pub tail_len: usize,
}

/// A parameter below its lower bound. The instance is still generated, but
/// the lemmas no longer apply to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamWarning {
    BodyTooShort { body_len: usize, min: usize },
    SeparatorTooShort { separator_len: usize, min: usize },
}

impl std::fmt::Display for ParamWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::BodyTooShort { body_len, min } => {
                write!(f, "L = {body_len} is below the lower bound {min}")
            }
            Self::SeparatorTooShort { separator_len, min } => {
                write!(f, "N = {separator_len} is below the lower bound {min}")
            }
        }
    }
}

impl ReductionParams {
    /// Smallest legal values: `L = 4|V| + 2|E|·tail_len + 1` and
    /// `N = (K+1)L + 1`.
    pub fn for_graph(graph: &Graph, colors: usize) -> Result<Self, ReductionError> {
        Ok(Self::with_overrides(graph, colors, None, None)?.0)
    }

    /// Like [`ReductionParams::for_graph`] but with optional `L`/`N`
    /// overrides. Overrides below the bounds are reported as warnings.
    pub fn with_overrides(
        graph: &Graph,
        colors: usize,
        body_len: Option<usize>,
        separator_len: Option<usize>,
    ) -> Result<(Self, Vec<ParamWarning>), ReductionError> {
        if colors == 0 {
            return Err(ReductionError::NonPositive { name: "K" });
        }
        let head_len = code_len(graph.num_vertices());
        let tail_len = code_len(graph.num_edges());
        let body_len = body_len.unwrap_or_else(|| Self::min_body_len(graph, tail_len));
        if body_len == 0 {
            return Err(ReductionError::NonPositive { name: "L" });
        }
        let separator_len = separator_len.unwrap_or((colors + 1) * body_len + 1);
        if separator_len == 0 {
            return Err(ReductionError::NonPositive { name: "N" });
        }
        let params = Self {
            colors,
            body_len,
            separator_len,
            head_len,
            tail_len,
        };
        let warnings = params.warnings(graph);
        Ok((params, warnings))
    }

    fn min_body_len(graph: &Graph, tail_len: usize) -> usize {
        4 * graph.num_vertices() + 2 * graph.num_edges() * tail_len + 1
    }

    /// Lower-bound violations for `graph`.
    pub fn warnings(&self, graph: &Graph) -> Vec<ParamWarning> {
        let mut out = Vec::new();
        let min_body = Self::min_body_len(graph, self.tail_len);
        if self.body_len < min_body {
            out.push(ParamWarning::BodyTooShort {
                body_len: self.body_len,
                min: min_body,
            });
        }
        let min_sep = (self.colors + 1) * self.body_len + 1;
        if self.separator_len < min_sep {
            out.push(ParamWarning::SeparatorTooShort {
                separator_len: self.separator_len,
                min: min_sep,
            });
        }
        out
    }

    /// `|ṽ 0^L ẽ|`.
    pub fn string_len(&self) -> usize {
        self.head_len + self.body_len + self.tail_len
    }

    /// `|0^N ṽ 0^L ẽ|`.
    pub fn block_len(&self) -> usize {
        self.separator_len + self.string_len()
    }

    /// `(K+1)L`: the binary witness has strictly fewer states.
    pub fn binary_bound(&self) -> usize {
        (self.colors + 1) * self.body_len
    }

    /// `N + (K+1)L`: the single-string witness has at most this many states.
    pub fn single_bound(&self) -> usize {
        self.separator_len + self.binary_bound()
    }

    /// `2(N + 2L)`: the two-chain DFA has strictly fewer states.
    pub fn two_chain_bound(&self) -> usize {
        2 * (self.separator_len + 2 * self.body_len)
    }
}

/// Binary codes `ṽ_i` and `ẽ_ij`. Edge codes are indexed by canonical edge
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    pub vertex_codes: Vec<Word>,
    pub edge_codes: Vec<Word>,
}

fn big_endian(value: usize, len: usize) -> Word {
    (0..len).rev().map(|bit| (value >> bit) & 1).collect()
}

/// Vertex `i` gets the `head_len`-bit big-endian binary of `i`; the `e`-th
/// edge in canonical order gets the `tail_len`-bit binary of `e`.
pub fn make_encoding(graph: &Graph, params: &ReductionParams) -> Result<Encoding, ReductionError> {
    let fits = |count: usize, len: usize| len >= usize::BITS as usize || count <= 1 << len;
    if !fits(graph.num_vertices(), params.head_len) {
        return Err(ReductionError::CodeCapacity {
            count: graph.num_vertices(),
            len: params.head_len,
        });
    }
    if !fits(graph.num_edges(), params.tail_len) {
        return Err(ReductionError::CodeCapacity {
            count: graph.num_edges(),
            len: params.tail_len,
        });
    }
    Ok(Encoding {
        vertex_codes: (0..graph.num_vertices())
            .map(|i| big_endian(i, params.head_len))
            .collect(),
        edge_codes: (0..graph.num_edges())
            .map(|e| big_endian(e, params.tail_len))
            .collect(),
    })
}

impl Encoding {
    pub(crate) fn check(&self, graph: &Graph, params: &ReductionParams) -> Result<(), ReductionError> {
        if self.vertex_codes.len() != graph.num_vertices() || self.edge_codes.len() != graph.num_edges() {
            return Err(ReductionError::EncodingMismatch(format!(
                "{} vertex codes and {} edge codes for |V| = {}, |E| = {}",
                self.vertex_codes.len(),
                self.edge_codes.len(),
                graph.num_vertices(),
                graph.num_edges()
            )));
        }
        let well_formed = |codes: &[Word], len: usize| {
            let mut sorted: Vec<&Word> = codes.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.len() == codes.len() && codes.iter().all(|c| c.len() == len && c.iter().all(|&b| b < 2))
        };
        if !well_formed(&self.vertex_codes, params.head_len) {
            return Err(ReductionError::EncodingMismatch(
                "vertex codes must be distinct binary strings of length head_len".into(),
            ));
        }
        if !well_formed(&self.edge_codes, params.tail_len) {
            return Err(ReductionError::EncodingMismatch(
                "edge codes must be distinct binary strings of length tail_len".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::example_graph;

    fn bits(s: &str) -> Word {
        s.bytes().map(|b| (b - b'0') as usize).collect()
    }

    #[test]
    fn code_lengths() {
        assert_eq!(code_len(0), 1);
        assert_eq!(code_len(1), 1);
        assert_eq!(code_len(2), 1);
        assert_eq!(code_len(3), 2);
        assert_eq!(code_len(4), 2);
        assert_eq!(code_len(5), 3);
        assert_eq!(code_len(6), 3);
        assert_eq!(code_len(8), 3);
        assert_eq!(code_len(9), 4);
    }

    #[test]
    fn default_params_match_hand_arithmetic() {
        // L = 4|V| + 2|E|·tail_len + 1, N = (K+1)L + 1
        let p = ReductionParams::for_graph(&example_graph(), 3).unwrap();
        assert_eq!((p.head_len, p.tail_len), (3, 3));
        assert_eq!(p.body_len, 4 * 5 + 2 * 6 * 3 + 1);
        assert_eq!(p.body_len, 57);
        assert_eq!(p.separator_len, 229);

        let tri = Graph::complete(3).unwrap();
        let p = ReductionParams::for_graph(&tri, 3).unwrap();
        assert_eq!((p.head_len, p.tail_len), (2, 2));
        assert_eq!((p.body_len, p.separator_len), (25, 101));

        let edge = Graph::path(2).unwrap();
        let p = ReductionParams::for_graph(&edge, 1).unwrap();
        assert_eq!((p.head_len, p.tail_len), (1, 1));
        assert_eq!(p.body_len, 4 * 2 + 2 + 1);
    }

    #[test]
    fn overrides_warn_instead_of_failing() {
        let tri = Graph::complete(3).unwrap();
        let (p, warnings) = ReductionParams::with_overrides(&tri, 3, Some(2), Some(3)).unwrap();
        assert_eq!((p.body_len, p.separator_len), (2, 3));
        assert_eq!(
            warnings,
            vec![
                ParamWarning::BodyTooShort { body_len: 2, min: 25 },
                ParamWarning::SeparatorTooShort { separator_len: 3, min: 9 }
            ]
        );
        assert!(ReductionParams::with_overrides(&tri, 3, Some(0), None).is_err());
        assert!(ReductionParams::for_graph(&tri, 0).is_err());
    }

    #[test]
    fn example_encoding() {
        let g = example_graph();
        let p = ReductionParams::for_graph(&g, 3).unwrap();
        let enc = make_encoding(&g, &p).unwrap();
        let v: Vec<Word> = ["000", "001", "010", "011", "100"].iter().map(|s| bits(s)).collect();
        let e: Vec<Word> = ["000", "001", "010", "011", "100", "101"].iter().map(|s| bits(s)).collect();
        assert_eq!(enc.vertex_codes, v);
        assert_eq!(enc.edge_codes, e);
    }

    #[test]
    fn small_encodings() {
        let g = Graph::empty(1).unwrap();
        let p = ReductionParams::for_graph(&g, 1).unwrap();
        assert_eq!(make_encoding(&g, &p).unwrap().vertex_codes, vec![bits("0")]);

        let tri = Graph::complete(3).unwrap();
        let p = ReductionParams::for_graph(&tri, 3).unwrap();
        assert_eq!(
            make_encoding(&tri, &p).unwrap().edge_codes,
            vec![bits("00"), bits("01"), bits("10")]
        );
    }

    #[test]
    fn capacity_is_checked() {
        let g = Graph::complete(3).unwrap();
        let mut p = ReductionParams::for_graph(&g, 3).unwrap();
        p.head_len = 1;
        assert!(matches!(
            make_encoding(&g, &p),
            Err(ReductionError::CodeCapacity { count: 3, len: 1 })
        ));
    }
}
