use serde::{Deserialize, Serialize};

use super::IoError;
use crate::automata::{
    format_outputs, parse_outputs, Acceptor, Alphabet, Dfa, MealyMachine, MooreMachine, PartialDfa,
};

/// Serialized form shared by all automaton kinds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub states: usize,
    pub alphabet: Vec<String>,
    pub initial: usize,
    /// `[from, symbol, to]` triples, sorted.
    pub transitions: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accepting: Option<Vec<usize>>,
    /// `"+"`/`"-"` per state (Moore) or per transition, parallel to
    /// `transitions` (Mealy).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Partial(PartialDfa),
    Moore(MooreMachine),
    Mealy(MealyMachine),
}

fn total_triples(k: usize, table: &[usize]) -> Vec<[usize; 3]> {
    table
        .iter()
        .enumerate()
        .map(|(i, &to)| [i / k, i % k, to])
        .collect()
}

fn sign(b: bool) -> String {
    format_outputs(&[b])
}

impl Automaton {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Dfa(_) => "dfa",
            Self::Partial(_) => "partial-dfa",
            Self::Moore(_) => "moore",
            Self::Mealy(_) => "mealy",
        }
    }

    /// The automaton as an acceptor; machines have none.
    pub fn as_acceptor(&self) -> Option<&dyn Acceptor> {
        match self {
            Self::Dfa(d) => Some(d),
            Self::Partial(p) => Some(p),
            _ => None,
        }
    }

    /// Total DFA view: partial DFAs are completed, machines are rejected.
    pub fn to_dfa(&self) -> Option<Dfa> {
        match self {
            Self::Dfa(d) => Some(d.clone()),
            Self::Partial(p) => Some(p.complete()),
            _ => None,
        }
    }

    pub fn to_doc(&self) -> AutomatonDoc {
        let kind = self.kind().to_owned();
        match self {
            Self::Dfa(d) => AutomatonDoc {
                kind,
                states: d.num_states(),
                alphabet: d.alphabet().all_names(),
                initial: d.initial(),
                transitions: total_triples(d.alphabet().size(), d.transitions()),
                accepting: Some(d.accepting_states().collect()),
                output: None,
            },
            Self::Partial(p) => AutomatonDoc {
                kind,
                states: p.num_states(),
                alphabet: p.alphabet().all_names(),
                initial: p.initial(),
                transitions: p.defined_transitions().map(|(f, a, t)| [f, a, t]).collect(),
                accepting: Some(p.accepting_states().collect()),
                output: None,
            },
            Self::Moore(m) => AutomatonDoc {
                kind,
                states: m.num_states(),
                alphabet: m.alphabet().all_names(),
                initial: m.initial(),
                transitions: total_triples(m.alphabet().size(), m.transitions()),
                accepting: None,
                output: Some((0..m.num_states()).map(|q| sign(m.output(q))).collect()),
            },
            Self::Mealy(m) => {
                let k = m.alphabet().size();
                AutomatonDoc {
                    kind,
                    states: m.num_states(),
                    alphabet: m.alphabet().all_names(),
                    initial: m.initial(),
                    transitions: total_triples(k, m.transitions()),
                    accepting: None,
                    output: Some(
                        (0..m.transitions().len())
                            .map(|i| sign(m.output(i / k, i % k)))
                            .collect(),
                    ),
                }
            }
        }
    }

    pub fn from_doc(doc: &AutomatonDoc) -> Result<Self, IoError> {
        let alphabet = Alphabet::with_names(doc.alphabet.iter().cloned())?;
        let missing = |field| IoError::MissingField {
            field,
            kind: doc.kind.clone(),
        };
        let triples = doc.transitions.iter().map(|t| (t[0], t[1], t[2]));
        let outputs = || -> Result<Vec<bool>, IoError> {
            let raw = doc.output.as_ref().ok_or_else(|| missing("output"))?;
            parse_outputs(&raw.concat())
                .filter(|v| v.len() == raw.len())
                .ok_or_else(|| IoError::Json("outputs must be '+' or '-'".into()))
        };
        match doc.kind.as_str() {
            "partial-dfa" => {
                let accepting = doc.accepting.clone().ok_or_else(|| missing("accepting"))?;
                Ok(Self::Partial(PartialDfa::from_parts(
                    alphabet, doc.states, doc.initial, triples, accepting,
                )?))
            }
            "dfa" | "moore" | "mealy" => {
                let accepting = doc.accepting.clone();
                let partial = PartialDfa::from_parts(alphabet, doc.states, doc.initial, triples, [])?;
                if !partial.is_total() {
                    return Err(IoError::Json(format!(
                        "type '{}' needs a transition for every state and symbol",
                        doc.kind
                    )));
                }
                let dfa = partial.complete();
                let table = dfa.transitions().to_vec();
                let alphabet = dfa.alphabet().clone();
                match doc.kind.as_str() {
                    "dfa" => Ok(Self::Dfa(Dfa::new(
                        alphabet,
                        doc.states,
                        doc.initial,
                        table,
                        accepting.ok_or_else(|| missing("accepting"))?,
                    )?)),
                    "moore" => Ok(Self::Moore(MooreMachine::new(
                        alphabet,
                        doc.states,
                        doc.initial,
                        table,
                        outputs()?,
                    )?)),
                    _ => {
                        // outputs follow the order of `transitions` in the document
                        let raw = outputs()?;
                        if raw.len() != doc.transitions.len() {
                            return Err(IoError::Json("one output per transition expected".into()));
                        }
                        let k = dfa.alphabet().size();
                        let mut out = vec![false; table.len()];
                        for (t, o) in doc.transitions.iter().zip(raw) {
                            out[t[0] * k + t[1]] = o;
                        }
                        Ok(Self::Mealy(MealyMachine::new(alphabet, doc.states, doc.initial, table, out)?))
                    }
                }
            }
            other => Err(IoError::UnknownType(other.to_owned())),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("documents always serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let doc: AutomatonDoc = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
        Self::from_doc(&doc)
    }
}
