use std::collections::HashSet;

use super::{AutomataError, Symbol};

/// Input alphabet `0..size`, optionally with display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: usize,
    names: Option<Vec<String>>,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self, AutomataError> {
        if size == 0 {
            return Err(AutomataError::EmptyAlphabet);
        }
        Ok(Self { size, names: None })
    }

    pub fn with_names<I, S>(names: I) -> Result<Self, AutomataError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AutomataError::EmptyAlphabet);
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(AutomataError::DuplicateSymbolName(name.clone()));
            }
        }
        Ok(Self {
            size: names.len(),
            names: Some(names),
        })
    }

    /// `{0, 1}` with names `"0"` and `"1"`.
    pub fn binary() -> Self {
        Self {
            size: 2,
            names: Some(vec!["0".to_owned(), "1".to_owned()]),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `symbol`; falls back to the decimal index.
    pub fn name(&self, symbol: Symbol) -> String {
        match &self.names {
            Some(names) if symbol < names.len() => names[symbol].clone(),
            _ => symbol.to_string(),
        }
    }

    /// Looks up a symbol by display name, or by decimal index when unnamed.
    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == name),
            None => name.parse().ok().filter(|&s| s < self.size),
        }
    }

    /// Display names for every symbol, in index order.
    pub fn all_names(&self) -> Vec<String> {
        (0..self.size).map(|s| self.name(s)).collect()
    }

    pub fn check_symbol(&self, symbol: Symbol) -> Result<(), AutomataError> {
        if symbol < self.size {
            Ok(())
        } else {
            Err(AutomataError::SymbolOutOfRange {
                symbol,
                size: self.size,
            })
        }
    }

    pub fn check_word(&self, word: &[Symbol]) -> Result<(), AutomataError> {
        word.iter().try_for_each(|&s| self.check_symbol(s))
    }

    /// Two alphabets are compatible when they have the same number of symbols.
    /// Names are presentation only.
    pub fn ensure_compatible(&self, other: &Alphabet) -> Result<(), AutomataError> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(AutomataError::AlphabetMismatch {
                left: self.size,
                right: other.size,
            })
        }
    }

    fn single_char_names(&self) -> bool {
        (0..self.size).all(|s| self.name(s).chars().count() == 1)
    }

    /// Renders a word. Single-character names are concatenated, longer ones
    /// are space separated. The empty word renders as `ε`.
    pub fn format_word(&self, word: &[Symbol]) -> String {
        if word.is_empty() {
            return "ε".to_owned();
        }
        let parts: Vec<String> = word.iter().map(|&s| self.name(s)).collect();
        if self.single_char_names() {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }

    /// Inverse of [`Alphabet::format_word`] for the concatenated and
    /// space-separated forms.
    pub fn parse_word(&self, text: &str) -> Option<Vec<Symbol>> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Some(Vec::new());
        }
        if text.contains(char::is_whitespace) || !self.single_char_names() {
            text.split_whitespace().map(|t| self.symbol(t)).collect()
        } else {
            text.chars()
                .map(|c| self.symbol(c.encode_utf8(&mut [0; 4])))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicates() {
        assert_eq!(Alphabet::new(0), Err(AutomataError::EmptyAlphabet));
        assert!(matches!(
            Alphabet::with_names(["a", "b", "a"]),
            Err(AutomataError::DuplicateSymbolName(_))
        ));
    }

    #[test]
    fn word_formatting_round_trips() {
        let bin = Alphabet::binary();
        assert_eq!(bin.format_word(&[0, 1, 1]), "011");
        assert_eq!(bin.parse_word("011"), Some(vec![0, 1, 1]));
        assert_eq!(bin.format_word(&[]), "ε");

        let named = Alphabet::with_names(["v1", "v2", "e1_2"]).unwrap();
        assert_eq!(named.format_word(&[0, 2]), "v1 e1_2");
        assert_eq!(named.parse_word("v1 e1_2"), Some(vec![0, 2]));
        assert_eq!(named.parse_word("v3"), None);

        let plain = Alphabet::new(12).unwrap();
        assert_eq!(plain.parse_word("3 11"), Some(vec![3, 11]));
        assert_eq!(plain.parse_word("12"), None);
    }
}
