use std::collections::VecDeque;

use super::{Alphabet, DfaSample, PartialDfa, StateId, Symbol, Word};

/// All prefixes of `word`, shortest first, including `ε` and `word` itself.
pub fn prefixes(word: &[Symbol]) -> impl Iterator<Item = &[Symbol]> + '_ {
    (0..=word.len()).map(move |len| &word[..len])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixCompleteness {
    /// `D+ ∪ D-` is prefix-closed.
    Complete,
    /// `D+ ∪ D-` equals its prefix closure minus `ε`.
    AlmostComplete,
    Neither,
}

pub fn is_prefix_complete(sample: &DfaSample) -> PrefixCompleteness {
    let closed_above_root = sample
        .iter()
        .filter(|(w, _)| w.len() >= 2)
        .all(|(w, _)| sample.label(&w[..w.len() - 1]).is_some());
    if !closed_above_root {
        return PrefixCompleteness::Neither;
    }
    let has_empty = sample.label(&[]).is_some();
    if has_empty || sample.is_empty() {
        PrefixCompleteness::Complete
    } else {
        PrefixCompleteness::AlmostComplete
    }
}

/// Augmented prefix tree of a sample: one node per distinct prefix, numbered
/// in shortlex order so node 0 is `ε` and parents precede children.
#[derive(Debug, Clone)]
pub struct PrefixTree {
    alphabet: Alphabet,
    children: Vec<Option<usize>>,
    parent: Vec<Option<(usize, Symbol)>>,
    labels: Vec<Option<bool>>,
}

impl PrefixTree {
    pub fn from_sample(sample: &DfaSample) -> Self {
        let k = sample.alphabet().size();
        // insertion-order trie first, then renumber breadth-first
        let mut children: Vec<Option<usize>> = vec![None; k];
        let mut labels: Vec<Option<bool>> = vec![None];
        for (word, label) in sample.iter() {
            let mut node = 0;
            for &a in word {
                node = match children[node * k + a] {
                    Some(c) => c,
                    None => {
                        let c = labels.len();
                        labels.push(None);
                        children.extend(std::iter::repeat_n(None, k));
                        children[node * k + a] = Some(c);
                        c
                    }
                };
            }
            labels[node] = Some(label);
        }

        let n = labels.len();
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            queue.extend((0..k).filter_map(|a| children[u * k + a]));
        }
        let mut rank = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut tree = Self {
            alphabet: sample.alphabet().clone(),
            children: vec![None; n * k],
            parent: vec![None; n],
            labels: order.iter().map(|&old| labels[old]).collect(),
        };
        for (new, &old) in order.iter().enumerate() {
            for a in 0..k {
                if let Some(c) = children[old * k + a] {
                    tree.children[new * k + a] = Some(rank[c]);
                    tree.parent[rank[c]] = Some((new, a));
                }
            }
        }
        tree
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn child(&self, node: usize, symbol: Symbol) -> Option<usize> {
        self.children[node * self.alphabet.size() + symbol]
    }

    pub fn parent(&self, node: usize) -> Option<(usize, Symbol)> {
        self.parent[node]
    }

    pub fn label(&self, node: usize) -> Option<bool> {
        self.labels[node]
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        (0..self.alphabet.size()).all(|a| self.child(node, a).is_none())
    }

    /// The prefix a node stands for.
    pub fn word(&self, mut node: usize) -> Word {
        let mut out = Vec::new();
        while let Some((p, a)) = self.parent[node] {
            out.push(a);
            node = p;
        }
        out.reverse();
        out
    }

    /// Tree-shaped partial DFA; a state accepts iff its prefix is positive.
    pub fn to_acceptor(&self) -> PartialDfa {
        let k = self.alphabet.size();
        let transitions = self
            .children
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|to| (i / k, i % k, to as StateId)));
        let accepting = (0..self.len()).filter(|&q| self.labels[q] == Some(true));
        PartialDfa::from_parts(self.alphabet.clone(), self.len(), 0, transitions, accepting)
            .expect("prefix tree is a valid partial DFA")
    }
}

/// The prefix-tree acceptor of `sample`.
pub fn prefix_tree_acceptor(sample: &DfaSample) -> PartialDfa {
    PrefixTree::from_sample(sample).to_acceptor()
}
