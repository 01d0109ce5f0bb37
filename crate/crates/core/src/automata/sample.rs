use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::iter::Peekable;

use super::{Alphabet, AutomataError, Symbol, Word};

/// A string together with its label (`true` = positive).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledString {
    pub symbols: Word,
    pub label: bool,
}

/// A pair `(D+, D-)` of disjoint finite string sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaSample {
    alphabet: Alphabet,
    positives: BTreeSet<Word>,
    negatives: BTreeSet<Word>,
}

impl DfaSample {
    pub fn new(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            positives: BTreeSet::new(),
            negatives: BTreeSet::new(),
        }
    }

    pub fn from_sets<P, N>(alphabet: Alphabet, positives: P, negatives: N) -> Result<Self, AutomataError>
    where
        P: IntoIterator<Item = Word>,
        N: IntoIterator<Item = Word>,
    {
        let mut sample = Self::new(alphabet);
        for w in positives {
            sample.insert(w, true)?;
        }
        for w in negatives {
            sample.insert(w, false)?;
        }
        Ok(sample)
    }

    /// Adds a labeled string. Re-inserting with the same label is a no-op;
    /// the opposite label is an error.
    pub fn insert(&mut self, word: Word, label: bool) -> Result<(), AutomataError> {
        self.alphabet.check_word(&word)?;
        let (own, other) = if label {
            (&mut self.positives, &self.negatives)
        } else {
            (&mut self.negatives, &self.positives)
        };
        if other.contains(&word) {
            return Err(AutomataError::ConflictingLabel {
                word: self.alphabet.format_word(&word),
            });
        }
        own.insert(word);
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn positives(&self) -> &BTreeSet<Word> {
        &self.positives
    }

    pub fn negatives(&self) -> &BTreeSet<Word> {
        &self.negatives
    }

    pub fn label(&self, word: &[Symbol]) -> Option<bool> {
        if self.positives.contains(word) {
            Some(true)
        } else if self.negatives.contains(word) {
            Some(false)
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.positives.len() + self.negatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positives.is_empty() && self.negatives.is_empty()
    }

    /// All labeled strings in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, bool)> + '_ {
        MergeLabeled {
            pos: self.positives.iter().peekable(),
            neg: self.negatives.iter().peekable(),
        }
    }

    /// All labeled strings in shortlex (length, then lexicographic) order.
    pub fn labeled_strings(&self) -> Vec<LabeledString> {
        let mut out: Vec<LabeledString> = self
            .iter()
            .map(|(w, label)| LabeledString {
                symbols: w.clone(),
                label,
            })
            .collect();
        out.sort_by(|a, b| {
            a.symbols
                .len()
                .cmp(&b.symbols.len())
                .then_with(|| a.symbols.cmp(&b.symbols))
        });
        out
    }

    /// Copy of the sample without the empty string.
    pub fn without_empty(&self) -> Self {
        let mut out = self.clone();
        out.positives.remove(&Vec::new());
        out.negatives.remove(&Vec::new());
        out
    }
}

struct MergeLabeled<I: Iterator> {
    pos: Peekable<I>,
    neg: Peekable<I>,
}

impl<'a, I: Iterator<Item = &'a Word>> Iterator for MergeLabeled<I> {
    type Item = (&'a Word, bool);

    fn next(&mut self) -> Option<Self::Item> {
        let take_pos = match (self.pos.peek(), self.neg.peek()) {
            (None, None) => return None,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            // sets are disjoint, so never Equal
            (Some(p), Some(n)) => p.cmp(n) == Ordering::Less,
        };
        if take_pos {
            self.pos.next().map(|w| (w, true))
        } else {
            self.neg.next().map(|w| (w, false))
        }
    }
}
