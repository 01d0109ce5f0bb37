use std::fmt::Write;

use super::{parse_error, IoError};
use crate::automata::{Alphabet, DfaSample};

/// Abbadingo text: `<count> <alphabet size>` then `<label> <length> <symbols…>`
/// per string, in shortlex order.
pub fn write_abbadingo(sample: &DfaSample) -> String {
    let strings = sample.labeled_strings();
    let mut out = format!("{} {}\n", strings.len(), sample.alphabet().size());
    for s in strings {
        write!(out, "{} {}", u8::from(s.label), s.symbols.len()).expect("writing to a String");
        for a in &s.symbols {
            write!(out, " {a}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

/// Parses Abbadingo text. Without an explicit alphabet, size 2 becomes the
/// named binary alphabet and other sizes get unnamed symbols.
pub fn parse_abbadingo(text: &str, alphabet: Option<Alphabet>) -> Result<DfaSample, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or_else(|| parse_error(1, "missing header"))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_error(line_no, format!("bad number '{t}'"))))
        .collect::<Result<_, _>>()?;
    let [count, size] = nums[..] else {
        return Err(parse_error(line_no, "header must be '<count> <alphabet size>'"));
    };
    let alphabet = match alphabet {
        Some(a) if a.size() != size => {
            return Err(parse_error(
                line_no,
                format!("header alphabet size {size} differs from {}", a.size()),
            ))
        }
        Some(a) => a,
        None if size == 2 => Alphabet::binary(),
        None => Alphabet::new(size)?,
    };
    let mut sample = DfaSample::new(alphabet);
    let mut seen = 0;
    for (line_no, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_error(line_no, format!("bad number '{t}'"))))
            .collect::<Result<_, _>>()?;
        if nums.len() < 2 || nums[0] > 1 {
            return Err(parse_error(line_no, "expected '<label 0|1> <length> <symbols…>'"));
        }
        let word = nums[2..].to_vec();
        if word.len() != nums[1] {
            return Err(parse_error(
                line_no,
                format!("declared length {} but found {} symbols", nums[1], word.len()),
            ));
        }
        sample
            .insert(word, nums[0] == 1)
            .map_err(|e| parse_error(line_no, e.to_string()))?;
        seen += 1;
    }
    if seen != count {
        return Err(parse_error(0, format!("header announces {count} strings, found {seen}")));
    }
    Ok(sample)
}
