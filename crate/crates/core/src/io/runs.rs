use super::{parse_error, IoError};
use crate::automata::{format_outputs, parse_outputs, Alphabet, MachineSample, Run};

/// Two lines per run: the input word and its `+`/`-` outputs.
pub fn write_runs(sample: &MachineSample) -> String {
    let mut out = String::new();
    for run in sample.runs() {
        out.push_str(&sample.alphabet().format_word(&run.input));
        out.push('\n');
        out.push_str(&format_outputs(&run.output));
        out.push('\n');
    }
    out
}

pub fn parse_runs(text: &str, alphabet: Alphabet) -> Result<MachineSample, IoError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if !lines.len().is_multiple_of(2) {
        let (line, _) = lines[lines.len() - 1];
        return Err(parse_error(line, "input line without an output line"));
    }
    let mut runs = Vec::new();
    for pair in lines.chunks(2) {
        let (in_line, input) = pair[0];
        let (out_line, output) = pair[1];
        let input = alphabet
            .parse_word(input)
            .ok_or_else(|| parse_error(in_line, "unknown input symbol"))?;
        let output = if output == "ε" {
            Vec::new()
        } else {
            parse_outputs(output).ok_or_else(|| parse_error(out_line, "outputs must be '+' or '-'"))?
        };
        if input.len() != output.len() {
            return Err(parse_error(
                out_line,
                format!("{} outputs for an input of length {}", output.len(), input.len()),
            ));
        }
        runs.push(Run { input, output });
    }
    Ok(MachineSample::new(alphabet, runs)?)
}
