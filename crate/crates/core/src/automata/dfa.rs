use super::{
    Alphabet, AutomataError, DfaSample, MealyMachine, MooreMachine, StateId, Symbol, Word,
};

/// Anything that can be run over a word and accept or reject it.
///
/// Runs that fall off a missing transition reject.
pub trait Acceptor {
    fn alphabet(&self) -> &Alphabet;
    fn initial(&self) -> StateId;
    fn num_states(&self) -> usize;
    fn step(&self, state: StateId, symbol: Symbol) -> Option<StateId>;
    fn is_accepting(&self, state: StateId) -> bool;

    /// `δ*(from, word)`, or `None` if the run leaves the defined transitions.
    fn run_from(&self, from: StateId, word: &[Symbol]) -> Result<Option<StateId>, AutomataError> {
        self.alphabet().check_word(word)?;
        let mut q = from;
        for &a in word {
            match self.step(q, a) {
                Some(next) => q = next,
                None => return Ok(None),
            }
        }
        Ok(Some(q))
    }

    fn accepts(&self, word: &[Symbol]) -> Result<bool, AutomataError> {
        Ok(self
            .run_from(self.initial(), word)?
            .is_some_and(|q| self.is_accepting(q)))
    }
}

/// A string the automaton labels differently from the sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub word: Word,
    /// The sample's label.
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConsistencyReport {
    pub violations: Vec<Violation>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every string of `sample` against `automaton` and collects all
/// violations.
///
/// Strings are visited in lexicographic order and the run of the previous
/// string is reused up to the common prefix, so prefix-closed samples cost
/// time linear in their total length.
pub fn check_consistency<A: Acceptor + ?Sized>(
    automaton: &A,
    sample: &DfaSample,
) -> Result<ConsistencyReport, AutomataError> {
    automaton.alphabet().ensure_compatible(sample.alphabet())?;
    let mut report = ConsistencyReport::default();
    // trail[i] = state after the first i symbols of `prev`
    let mut trail: Vec<Option<StateId>> = vec![Some(automaton.initial())];
    let mut prev: &[Symbol] = &[];
    for (word, label) in sample.iter() {
        let common = prev
            .iter()
            .zip(word.iter())
            .take_while(|(a, b)| a == b)
            .count();
        trail.truncate(common + 1);
        for &a in &word[common..] {
            let q = trail.last().copied().flatten();
            trail.push(q.and_then(|q| automaton.step(q, a)));
        }
        let accepted = trail
            .last()
            .copied()
            .flatten()
            .is_some_and(|q| automaton.is_accepting(q));
        if accepted != label {
            report.violations.push(Violation {
                word: word.clone(),
                expected: label,
            });
        }
        prev = word;
    }
    Ok(report)
}

fn check_state(state: StateId, num_states: usize) -> Result<(), AutomataError> {
    if state < num_states {
        Ok(())
    } else {
        Err(AutomataError::StateOutOfRange { state, num_states })
    }
}

/// Deterministic finite automaton with a total transition function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    /// Row-major `num_states × alphabet.size()`.
    transitions: Vec<StateId>,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from a row-major transition table.
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        initial: StateId,
        transitions: Vec<StateId>,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Result<Self, AutomataError> {
        if num_states == 0 {
            return Err(AutomataError::NoStates);
        }
        let expected = num_states * alphabet.size();
        if transitions.len() != expected {
            return Err(AutomataError::TableSize {
                expected,
                got: transitions.len(),
            });
        }
        check_state(initial, num_states)?;
        for &t in &transitions {
            check_state(t, num_states)?;
        }
        let mut acc = vec![false; num_states];
        for q in accepting {
            check_state(q, num_states)?;
            acc[q] = true;
        }
        Ok(Self {
            alphabet,
            initial,
            transitions,
            accepting: acc,
        })
    }

    /// Builds a DFA from one row of targets per state.
    pub fn from_rows(
        alphabet: Alphabet,
        initial: StateId,
        rows: Vec<Vec<StateId>>,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Result<Self, AutomataError> {
        let k = alphabet.size();
        if let Some(bad) = rows.iter().find(|r| r.len() != k) {
            return Err(AutomataError::TableSize {
                expected: k,
                got: bad.len(),
            });
        }
        let n = rows.len();
        Self::new(alphabet, n, initial, rows.concat(), accepting)
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn next(&self, state: StateId, symbol: Symbol) -> StateId {
        self.transitions[state * self.alphabet.size() + symbol]
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    pub fn transitions(&self) -> &[StateId] {
        &self.transitions
    }

    /// `δ*(from, word)`.
    pub fn run_from(&self, from: StateId, word: &[Symbol]) -> Result<StateId, AutomataError> {
        check_state(from, self.num_states())?;
        self.alphabet.check_word(word)?;
        Ok(word.iter().fold(from, |q, &a| self.next(q, a)))
    }

    /// `δ*(q₀, word)`.
    pub fn final_state(&self, word: &[Symbol]) -> Result<StateId, AutomataError> {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool, AutomataError> {
        Ok(self.accepting[self.final_state(word)?])
    }

    /// States visited while reading `word`, starting with the initial state.
    pub fn trace(&self, word: &[Symbol]) -> Result<Vec<StateId>, AutomataError> {
        self.alphabet.check_word(word)?;
        let mut out = Vec::with_capacity(word.len() + 1);
        let mut q = self.initial;
        out.push(q);
        for &a in word {
            q = self.next(q, a);
            out.push(q);
        }
        Ok(out)
    }

    /// Moore machine emitting `+` on entering an accepting state.
    pub fn to_moore(&self) -> MooreMachine {
        MooreMachine::new(
            self.alphabet.clone(),
            self.num_states(),
            self.initial,
            self.transitions.clone(),
            self.accepting.clone(),
        )
        .expect("a valid DFA yields a valid Moore machine")
    }

    /// Mealy machine emitting `+` on every edge that enters an accepting state.
    pub fn to_mealy(&self) -> MealyMachine {
        let output = self.transitions.iter().map(|&t| self.accepting[t]).collect();
        MealyMachine::new(
            self.alphabet.clone(),
            self.num_states(),
            self.initial,
            self.transitions.clone(),
            output,
        )
        .expect("a valid DFA yields a valid Mealy machine")
    }

    pub fn to_partial(&self) -> PartialDfa {
        PartialDfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            transitions: self.transitions.iter().map(|&t| Some(t)).collect(),
            accepting: self.accepting.clone(),
        }
    }
}

impl Acceptor for Dfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn initial(&self) -> StateId {
        self.initial
    }
    fn num_states(&self) -> usize {
        self.accepting.len()
    }
    fn step(&self, state: StateId, symbol: Symbol) -> Option<StateId> {
        Some(self.next(state, symbol))
    }
    fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }
}

/// DFA whose transition function may be partial. Used for acyclic automata
/// and as the builder for every witness construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialDfa {
    alphabet: Alphabet,
    initial: StateId,
    transitions: Vec<Option<StateId>>,
    accepting: Vec<bool>,
}

impl PartialDfa {
    /// A single initial state with no transitions.
    pub fn new(alphabet: Alphabet, initial_accepting: bool) -> Self {
        Self {
            transitions: vec![None; alphabet.size()],
            alphabet,
            initial: 0,
            accepting: vec![initial_accepting],
        }
    }

    /// Builds a partial DFA from `(from, symbol, to)` triples.
    pub fn from_parts(
        alphabet: Alphabet,
        num_states: usize,
        initial: StateId,
        transitions: impl IntoIterator<Item = (StateId, Symbol, StateId)>,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Result<Self, AutomataError> {
        if num_states == 0 {
            return Err(AutomataError::NoStates);
        }
        check_state(initial, num_states)?;
        let mut out = Self {
            transitions: vec![None; num_states * alphabet.size()],
            alphabet,
            initial,
            accepting: vec![false; num_states],
        };
        for q in accepting {
            check_state(q, num_states)?;
            out.accepting[q] = true;
        }
        for (from, symbol, to) in transitions {
            out.set_transition(from, symbol, to)?;
        }
        Ok(out)
    }

    pub fn add_state(&mut self, accepting: bool) -> StateId {
        self.accepting.push(accepting);
        self.transitions
            .extend(std::iter::repeat_n(None, self.alphabet.size()));
        self.accepting.len() - 1
    }

    pub fn set_initial(&mut self, state: StateId) -> Result<(), AutomataError> {
        check_state(state, self.num_states())?;
        self.initial = state;
        Ok(())
    }

    pub fn set_accepting(&mut self, state: StateId, accepting: bool) -> Result<(), AutomataError> {
        check_state(state, self.num_states())?;
        self.accepting[state] = accepting;
        Ok(())
    }

    /// Defines `δ(from, symbol) = to`. Redefining the same target is allowed;
    /// a different target is a conflict.
    pub fn set_transition(
        &mut self,
        from: StateId,
        symbol: Symbol,
        to: StateId,
    ) -> Result<(), AutomataError> {
        let n = self.num_states();
        check_state(from, n)?;
        check_state(to, n)?;
        self.alphabet.check_symbol(symbol)?;
        let slot = &mut self.transitions[from * self.alphabet.size() + symbol];
        match *slot {
            Some(existing) if existing != to => Err(AutomataError::TransitionConflict {
                state: from,
                symbol,
                existing,
                new: to,
            }),
            _ => {
                *slot = Some(to);
                Ok(())
            }
        }
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn next(&self, state: StateId, symbol: Symbol) -> Option<StateId> {
        self.transitions[state * self.alphabet.size() + symbol]
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    /// Defined transitions as `(from, symbol, to)`, sorted by `(from, symbol)`.
    pub fn defined_transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.size();
        self.transitions
            .iter()
            .enumerate()
            .filter_map(move |(i, t)| t.map(|to| (i / k, i % k, to)))
    }

    pub fn is_total(&self) -> bool {
        self.transitions.iter().all(Option::is_some)
    }

    /// `δ*(q₀, word)`, `None` if the run falls off a missing transition.
    pub fn final_state(&self, word: &[Symbol]) -> Result<Option<StateId>, AutomataError> {
        Acceptor::run_from(self, self.initial, word)
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool, AutomataError> {
        Acceptor::accepts(self, word)
    }

    /// True iff no state reachable from the initial state lies on a cycle of
    /// defined transitions.
    pub fn is_acyclic(&self) -> bool {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let k = self.alphabet.size();
        let mut mark = vec![Mark::New; self.num_states()];
        // iterative DFS: (state, next symbol to explore)
        let mut stack = vec![(self.initial, 0usize)];
        mark[self.initial] = Mark::Open;
        while let Some((q, a)) = stack.last_mut() {
            if *a == k {
                mark[*q] = Mark::Done;
                stack.pop();
                continue;
            }
            let t = self.next(*q, *a);
            *a += 1;
            if let Some(r) = t {
                match mark[r] {
                    Mark::Open => return false,
                    Mark::New => {
                        mark[r] = Mark::Open;
                        stack.push((r, 0));
                    }
                    Mark::Done => {}
                }
            }
        }
        true
    }

    /// Total DFA over the same states: every missing transition becomes a
    /// self-loop.
    pub fn complete(&self) -> Dfa {
        let k = self.alphabet.size();
        let transitions = self
            .transitions
            .iter()
            .enumerate()
            .map(|(i, t)| t.unwrap_or(i / k))
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            transitions,
            accepting: self.accepting.clone(),
        }
    }
}

impl Acceptor for PartialDfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
    fn initial(&self) -> StateId {
        self.initial
    }
    fn num_states(&self) -> usize {
        self.accepting.len()
    }
    fn step(&self, state: StateId, symbol: Symbol) -> Option<StateId> {
        self.next(state, symbol)
    }
    fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }
}
