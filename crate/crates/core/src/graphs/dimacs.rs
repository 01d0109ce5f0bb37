use std::fmt::Write;

use super::{Graph, GraphError};

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses DIMACS `.col` text (`c` comments, one `p edge n m`, `e u v` lines
/// with 1-based vertices). Duplicate edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut num_vertices: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if num_vertices.is_some() {
                    return Err(parse_error(line_no, "duplicate problem line"));
                }
                let format = tokens.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(parse_error(line_no, "expected 'p edge <n> <m>'"));
                }
                let n: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse_error(line_no, "missing vertex count"))?;
                tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| parse_error(line_no, "missing edge count"))?;
                if n == 0 {
                    return Err(parse_error(line_no, "vertex count must be positive"));
                }
                num_vertices = Some(n);
            }
            Some("e") => {
                let n = num_vertices
                    .ok_or_else(|| parse_error(line_no, "edge before problem line"))?;
                let mut endpoint = || -> Result<usize, GraphError> {
                    let v: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_error(line_no, "malformed edge line"))?;
                    if v == 0 || v > n {
                        return Err(parse_error(
                            line_no,
                            format!("vertex {v} is outside 1..={n}"),
                        ));
                    }
                    Ok(v - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if u == v {
                    return Err(parse_error(line_no, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unexpected line type '{other}'")));
            }
        }
    }
    let n = num_vertices.ok_or_else(|| parse_error(0, "missing problem line"))?;
    Graph::new(n, edges)
}

/// DIMACS `.col` text with edges in canonical order.
pub fn emit_dimacs(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.num_vertices(), graph.num_edges());
    for &(u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}
