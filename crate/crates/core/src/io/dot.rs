use std::collections::BTreeMap;
use std::fmt::Write;

use super::Automaton;
use crate::automata::format_outputs;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering with a point-shaped start marker, accepting states as
/// double circles and parallel edges merged into one comma-separated label.
/// Moore outputs annotate the states; Mealy outputs annotate each symbol as
/// `a/+`.
pub fn to_dot(automaton: &Automaton) -> String {
    let doc = automaton.to_doc();
    let accepting = doc.accepting.clone().unwrap_or_default();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..doc.states {
        let shape = if accepting.contains(&q) { "doublecircle" } else { "circle" };
        let label = match automaton {
            Automaton::Moore(m) => format!("q{q}/{}", format_outputs(&[m.output(q)])),
            _ => format!("q{q}"),
        };
        writeln!(out, "  q{q} [shape={shape}, label=\"{}\"];", escape(&label)).expect("writing to a String");
    }
    writeln!(out, "  __start -> q{};", doc.initial).expect("writing to a String");

    let mut edges: BTreeMap<(usize, usize), Vec<(usize, String)>> = BTreeMap::new();
    for (i, t) in doc.transitions.iter().enumerate() {
        let mut label = doc.alphabet[t[1]].clone();
        if let (Automaton::Mealy(_), Some(outputs)) = (automaton, &doc.output) {
            label = format!("{label}/{}", outputs[i]);
        }
        edges.entry((t[0], t[2])).or_default().push((t[1], label));
    }
    for ((from, to), mut labels) in edges {
        labels.sort();
        let joined: Vec<String> = labels.into_iter().map(|(_, l)| l).collect();
        writeln!(out, "  q{from} -> q{to} [label=\"{}\"];", escape(&joined.join(",")))
            .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
