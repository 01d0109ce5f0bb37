use std::time::Instant;

use super::{SolveOutcome, SolveRequest, SolveStatus, SolverError, Witness};
use crate::automata::{check_consistency, DfaSample, PartialDfa, PrefixTree, StateId};

const PLUS: u8 = 1;
const MINUS: u8 = 2;

enum Undo {
    ClassOf(usize),
    Delta(usize),
    Label(usize),
    Pending(usize, u8),
    NumClasses(usize),
}

struct Search<'a> {
    tree: &'a PrefixTree,
    k: usize,
    m: usize,
    acyclic: bool,
    class_of: Vec<Option<usize>>,
    /// `m × k` class transitions.
    delta: Vec<Option<usize>>,
    label: Vec<Option<bool>>,
    /// Labels of leaves waiting for an undefined class transition.
    pending: Vec<u8>,
    num_classes: usize,
    trail: Vec<Undo>,
    deadline: Option<Instant>,
    explored: u64,
    timed_out: bool,
    solution: Option<Witness>,
}

impl Search<'_> {
    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("nonempty") {
                Undo::ClassOf(x) => self.class_of[x] = None,
                Undo::Delta(i) => self.delta[i] = None,
                Undo::Label(c) => self.label[c] = None,
                Undo::Pending(i, old) => self.pending[i] = old,
                Undo::NumClasses(old) => self.num_classes = old,
            }
        }
    }

    fn set_label(&mut self, c: usize, l: bool) -> bool {
        match self.label[c] {
            Some(existing) => existing == l,
            None => {
                self.label[c] = Some(l);
                self.trail.push(Undo::Label(c));
                true
            }
        }
    }

    fn assign(&mut self, x: usize, c: usize) -> bool {
        self.class_of[x] = Some(c);
        self.trail.push(Undo::ClassOf(x));
        match self.tree.label(x) {
            Some(l) => self.set_label(c, l),
            None => true,
        }
    }

    /// True iff `from` is reachable from `to` through class transitions.
    fn reaches(&self, to: usize, from: usize) -> bool {
        let mut seen = vec![false; self.m];
        let mut stack = vec![to];
        while let Some(c) = stack.pop() {
            if c == from {
                return true;
            }
            if std::mem::replace(&mut seen[c], true) {
                continue;
            }
            stack.extend((0..self.k).filter_map(|a| self.delta[c * self.k + a]));
        }
        false
    }

    fn define(&mut self, from: usize, a: usize, to: usize) -> bool {
        if self.acyclic && self.reaches(to, from) {
            return false;
        }
        if to == self.num_classes {
            self.trail.push(Undo::NumClasses(self.num_classes));
            self.num_classes += 1;
        }
        let i = from * self.k + a;
        self.delta[i] = Some(to);
        self.trail.push(Undo::Delta(i));
        let bits = self.pending[i];
        (bits & PLUS == 0 || self.set_label(to, true)) && (bits & MINUS == 0 || self.set_label(to, false))
    }

    fn defer(&mut self, i: usize, l: Option<bool>) -> bool {
        let bit = match l {
            Some(true) => PLUS,
            Some(false) => MINUS,
            None => return true,
        };
        let old = self.pending[i];
        if old & bit == 0 {
            self.pending[i] = old | bit;
            self.trail.push(Undo::Pending(i, old));
        }
        self.pending[i] != PLUS | MINUS
    }

    fn tick(&mut self) -> bool {
        self.explored += 1;
        if self.explored.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.timed_out = true;
                }
            }
        }
        !self.timed_out
    }

    /// Open leaf demands `(need +, need -)` on undefined transitions.
    fn open_demands(&self) -> (bool, bool) {
        let mut need = (false, false);
        for (i, &bits) in self.pending.iter().enumerate() {
            if bits != 0 && self.delta[i].is_none() {
                need.0 |= bits & PLUS != 0;
                need.1 |= bits & MINUS != 0;
            }
        }
        need
    }

    fn feasible_end(&self) -> bool {
        let (need_plus, need_minus) = self.open_demands();
        let used = &self.label[..self.num_classes];
        let has = |l: bool| used.contains(&Some(l));
        let unlabeled = used.iter().filter(|x| x.is_none()).count();
        let required = usize::from(need_plus && !has(true)) + usize::from(need_minus && !has(false));
        required <= unlabeled + (self.m - self.num_classes)
    }

    fn build_witness(&self) -> Witness {
        let k = self.k;
        let mut label = self.label[..self.num_classes].to_vec();
        let mut delta = self.delta[..self.num_classes * k].to_vec();
        let (need_plus, need_minus) = self.open_demands();
        let target = |l: bool, label: &mut Vec<Option<bool>>, delta: &mut Vec<Option<usize>>| {
            if let Some(c) = label.iter().position(|&x| x == Some(l)) {
                return c;
            }
            if let Some(c) = label.iter().position(|x| x.is_none()) {
                label[c] = Some(l);
                return c;
            }
            label.push(Some(l));
            delta.extend(std::iter::repeat_n(None, k));
            label.len() - 1
        };
        let plus = need_plus.then(|| target(true, &mut label, &mut delta));
        let minus = need_minus.then(|| target(false, &mut label, &mut delta));
        for (i, &bits) in self.pending.iter().enumerate() {
            if bits != 0 && i < self.num_classes * k && delta[i].is_none() {
                delta[i] = if bits & PLUS != 0 { plus } else { minus };
            }
        }
        let n = label.len();
        let triples = delta
            .iter()
            .enumerate()
            .filter_map(|(i, t)| t.map(|to| (i / k, i % k, to as StateId)));
        let accepting = (0..n).filter(|&c| label[c] == Some(true));
        let partial = PartialDfa::from_parts(self.tree.alphabet().clone(), n, 0, triples, accepting)
            .expect("class automaton is well formed");
        if self.acyclic {
            Witness::Partial(partial)
        } else {
            Witness::Total(partial.complete())
        }
    }

    fn run(&mut self, start: usize) -> bool {
        let n = self.tree.len();
        let mut idx = start;
        while idx < n {
            let x = idx;
            let (p, a) = self.tree.parent(x).expect("non-root node has a parent");
            let cp = self.class_of[p].expect("parents are assigned before children");
            let i = cp * self.k + a;
            if let Some(c) = self.delta[i] {
                if !self.assign(x, c) {
                    return false;
                }
            } else if !self.acyclic && self.tree.is_leaf(x) {
                if !self.defer(i, self.tree.label(x)) {
                    return false;
                }
            } else {
                let top = self.num_classes.min(self.m - 1);
                for c in 0..=top {
                    if !self.tick() {
                        return false;
                    }
                    let mark = self.trail.len();
                    if self.define(cp, a, c) && self.assign(x, c) && self.run(idx + 1) {
                        return true;
                    }
                    self.undo_to(mark);
                    if self.timed_out {
                        return false;
                    }
                }
                return false;
            }
            idx += 1;
        }
        if self.feasible_end() {
            self.solution = Some(self.build_witness());
            true
        } else {
            false
        }
    }
}

/// Exact decision by backtracking over class assignments of the prefix
/// tree in breadth-first order.
///
/// A node whose incoming class transition is already defined is forced;
/// otherwise it may join any existing class or open exactly one new class.
/// Outside acyclic mode, leaves never branch: their labels are attached to
/// the open transition and checked when it gets defined or at the end.
pub fn exists_consistent(req: &SolveRequest<'_>) -> Result<SolveOutcome, SolverError> {
    if req.max_states == 0 {
        return Err(SolverError::InvalidBound);
    }
    let tree = PrefixTree::from_sample(req.sample);
    let k = req.sample.alphabet().size();
    let m = req.max_states;
    let n = tree.len();
    let mut search = Search {
        tree: &tree,
        k,
        m,
        acyclic: req.require_acyclic,
        class_of: vec![None; n],
        delta: vec![None; m * k],
        label: vec![None; m],
        pending: vec![0; m * k],
        num_classes: 1,
        trail: Vec::new(),
        deadline: req.time_budget.map(|b| Instant::now() + b),
        explored: 0,
        timed_out: false,
        solution: None,
    };
    search.class_of[0] = Some(0);
    search.label[0] = tree.label(0);
    let found = search.run(1);

    let status = if found {
        SolveStatus::Sat
    } else if search.timed_out {
        SolveStatus::Timeout
    } else {
        SolveStatus::Unsat
    };
    if let Some(w) = &search.solution {
        assert!(w.num_states() <= m, "witness exceeds max_states");
        assert!(
            check_consistency(w.as_acceptor(), req.sample)?.is_consistent(),
            "search produced an inconsistent witness"
        );
        if let Witness::Partial(p) = w {
            assert!(p.is_acyclic(), "acyclic search produced a cycle");
        }
    }
    Ok(SolveOutcome {
        status,
        witness: search.solution,
        states_explored: search.explored,
    })
}

/// Smallest `m ≤ upper_bound` with a consistent (acyclic) automaton, by
/// increasing `m` from 1. The budget covers the whole sequence of queries.
pub fn min_consistent(
    sample: &DfaSample,
    upper_bound: usize,
    require_acyclic: bool,
    time_budget: Option<std::time::Duration>,
) -> Result<(usize, Witness), SolverError> {
    if upper_bound == 0 {
        return Err(SolverError::InvalidBound);
    }
    let deadline = time_budget.map(|b| Instant::now() + b);
    for m in 1..=upper_bound {
        let remaining = deadline.map(|d| d.saturating_duration_since(Instant::now()));
        let req = SolveRequest::new(sample, m)
            .acyclic(require_acyclic)
            .budget(remaining);
        let outcome = exists_consistent(&req)?;
        match outcome.status {
            SolveStatus::Sat => {
                return Ok((m, outcome.witness.expect("sat carries a witness")));
            }
            SolveStatus::Unsat => continue,
            SolveStatus::Timeout => return Err(SolverError::Timeout { m }),
        }
    }
    Err(SolverError::ExceedsBound { bound: upper_bound })
}
