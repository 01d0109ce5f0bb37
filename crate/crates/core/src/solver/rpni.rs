use crate::automata::{check_consistency, Dfa, DfaSample, PartialDfa, PrefixTree};

enum Undo {
    Parent(usize),
    Label(usize, Option<bool>),
    Trans(usize),
}

struct Hypothesis {
    k: usize,
    parent: Vec<usize>,
    label: Vec<Option<bool>>,
    trans: Vec<Option<usize>>,
    log: Vec<Undo>,
}

impl Hypothesis {
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn undo_to(&mut self, mark: usize) {
        while self.log.len() > mark {
            match self.log.pop().expect("nonempty") {
                Undo::Parent(x) => self.parent[x] = x,
                Undo::Label(x, old) => self.label[x] = old,
                Undo::Trans(i) => self.trans[i] = None,
            }
        }
    }

    /// Merges `b` into `a` and folds the subtrees; false on a label clash.
    /// Red representatives always stay representatives.
    fn merge(&mut self, a: usize, b: usize, is_red: &[bool]) -> bool {
        let mut work = vec![(a, b)];
        while let Some((a, b)) = work.pop() {
            let (mut ra, mut rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            if is_red[rb] && !is_red[ra] {
                std::mem::swap(&mut ra, &mut rb);
            }
            match (self.label[ra], self.label[rb]) {
                (Some(x), Some(y)) if x != y => return false,
                (None, Some(y)) => {
                    self.log.push(Undo::Label(ra, None));
                    self.label[ra] = Some(y);
                }
                _ => {}
            }
            self.parent[rb] = ra;
            self.log.push(Undo::Parent(rb));
            for s in 0..self.k {
                if let Some(tb) = self.trans[rb * self.k + s] {
                    match self.trans[ra * self.k + s] {
                        Some(ta) => work.push((ta, tb)),
                        None => {
                            self.trans[ra * self.k + s] = Some(tb);
                            self.log.push(Undo::Trans(ra * self.k + s));
                        }
                    }
                }
            }
        }
        true
    }
}

/// RPNI: red/blue state merging over the prefix-tree acceptor.
///
/// The blue state with the smallest breadth-first index is tried against
/// every red state in ascending order; the first merge whose fold is
/// label-consistent is kept, otherwise the blue state turns red. The
/// result is completed with self-loops and always consistent.
pub fn rpni(sample: &DfaSample) -> Dfa {
    let tree = PrefixTree::from_sample(sample);
    let k = sample.alphabet().size();
    let n = tree.len();
    let mut h = Hypothesis {
        k,
        parent: (0..n).collect(),
        label: (0..n).map(|x| tree.label(x)).collect(),
        trans: (0..n * k)
            .map(|i| tree.child(i / k, i % k))
            .collect(),
        log: Vec::new(),
    };
    let mut red: Vec<usize> = vec![0];
    let mut is_red = vec![false; n];
    is_red[0] = true;
    loop {
        let blue = red
            .iter()
            .filter(|&&r| h.find(r) == r)
            .flat_map(|&r| (0..k).map(move |s| r * k + s))
            .filter_map(|i| h.trans[i].map(|t| h.find(t)))
            .filter(|&t| !is_red[t])
            .min();
        let Some(b) = blue else { break };
        let mut merged = false;
        let mut candidates: Vec<usize> = red.iter().copied().filter(|&r| h.find(r) == r).collect();
        candidates.sort_unstable();
        for r in candidates {
            let mark = h.log.len();
            if h.merge(r, b, &is_red) {
                h.log.clear();
                merged = true;
                break;
            }
            h.undo_to(mark);
        }
        if !merged {
            red.push(b);
            is_red[b] = true;
        }
    }

    red.retain(|&r| h.find(r) == r);
    red.sort_unstable();
    let index = |q: usize| red.binary_search(&q).expect("targets of red states are red");
    let mut triples = Vec::new();
    for (i, &r) in red.iter().enumerate() {
        for s in 0..k {
            if let Some(t) = h.trans[r * k + s] {
                triples.push((i, s, index(h.find(t))));
            }
        }
    }
    let accepting = (0..red.len()).filter(|&i| h.label[red[i]] == Some(true));
    let dfa = PartialDfa::from_parts(sample.alphabet().clone(), red.len(), 0, triples, accepting)
        .expect("quotient automaton is well formed")
        .complete();
    assert!(
        check_consistency(&dfa, sample)
            .expect("same alphabet")
            .is_consistent(),
        "rpni produced an inconsistent automaton"
    );
    dfa
}
