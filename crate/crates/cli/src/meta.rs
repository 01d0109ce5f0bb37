use anyhow::{bail, Context, Result};
use prefixdfa::automata::Word;
use prefixdfa::graphs::{emit_dimacs, Graph};
use prefixdfa::reductions::{Encoding, ReductionParams};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Sidecar written next to every generated sample; enough to rerun the
/// converse constructions without re-supplying parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReduceMeta {
    pub kind: String,
    pub alphabet: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ReductionParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_codes: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_codes: Option<Vec<String>>,
    pub graph: GraphMeta,
    pub graph_sha256: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub str_len: Option<usize>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

/// Vertices are 1-based, as in DIMACS.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphMeta {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

pub fn graph_hash(graph: &Graph) -> String {
    hex::encode(Sha256::digest(emit_dimacs(graph).as_bytes()))
}

pub fn bits_to_string(word: &[usize]) -> String {
    word.iter().map(|b| if *b == 0 { '0' } else { '1' }).collect()
}

fn string_to_bits(text: &str) -> Result<Word> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => bail!("code contains '{other}'"),
        })
        .collect()
}

impl ReduceMeta {
    pub fn new(kind: &str, alphabet: Vec<String>, graph: &Graph) -> Self {
        Self {
            kind: kind.to_owned(),
            alphabet,
            params: None,
            vertex_codes: None,
            edge_codes: None,
            graph: GraphMeta {
                vertices: graph.num_vertices(),
                edges: graph.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            },
            graph_sha256: graph_hash(graph),
            str_len: None,
            warnings: Vec::new(),
        }
    }

    pub fn with_encoding(mut self, params: ReductionParams, encoding: &Encoding) -> Self {
        self.params = Some(params);
        self.vertex_codes = Some(encoding.vertex_codes.iter().map(|c| bits_to_string(c)).collect());
        self.edge_codes = Some(encoding.edge_codes.iter().map(|c| bits_to_string(c)).collect());
        self
    }

    pub fn graph(&self) -> Result<Graph> {
        let edges = self
            .graph
            .edges
            .iter()
            .map(|&[u, v]| {
                if u == 0 || v == 0 {
                    bail!("metadata vertices are 1-based");
                }
                Ok((u - 1, v - 1))
            })
            .collect::<Result<Vec<_>>>()?;
        let graph = Graph::new(self.graph.vertices, edges)?;
        if graph_hash(&graph) != self.graph_sha256 {
            bail!("graph does not match its recorded sha256");
        }
        Ok(graph)
    }

    pub fn params(&self) -> Result<ReductionParams> {
        self.params
            .with_context(|| format!("metadata of a '{}' sample carries no parameters", self.kind))
    }

    pub fn encoding(&self) -> Result<Encoding> {
        let decode = |codes: &Option<Vec<String>>, what: &str| -> Result<Vec<Word>> {
            codes
                .as_ref()
                .with_context(|| format!("metadata has no {what} codes"))?
                .iter()
                .map(|c| string_to_bits(c))
                .collect()
        };
        Ok(Encoding {
            vertex_codes: decode(&self.vertex_codes, "vertex")?,
            edge_codes: decode(&self.edge_codes, "edge")?,
        })
    }
}
