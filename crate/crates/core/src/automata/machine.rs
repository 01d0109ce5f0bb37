use std::collections::BTreeMap;

use super::{
    format_outputs, is_prefix_complete, Alphabet, AutomataError, DfaSample, PrefixCompleteness,
    StateId, Symbol, Word,
};

fn validate_table(
    alphabet: &Alphabet,
    num_states: usize,
    initial: StateId,
    transitions: &[StateId],
) -> Result<(), AutomataError> {
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
    if let Some(&state) = transitions
        .iter()
        .chain(std::iter::once(&initial))
        .find(|&&t| t >= num_states)
    {
        return Err(AutomataError::StateOutOfRange { state, num_states });
    }
    Ok(())
}

/// Moore machine with binary state output `ρ: Q → {+,-}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreMachine {
    alphabet: Alphabet,
    initial: StateId,
    transitions: Vec<StateId>,
    output: Vec<bool>,
}

impl MooreMachine {
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        initial: StateId,
        transitions: Vec<StateId>,
        output: Vec<bool>,
    ) -> Result<Self, AutomataError> {
        validate_table(&alphabet, num_states, initial, &transitions)?;
        if output.len() != num_states {
            return Err(AutomataError::OutputSize {
                expected: num_states,
                got: output.len(),
            });
        }
        Ok(Self {
            alphabet,
            initial,
            transitions,
            output,
        })
    }

    pub fn num_states(&self) -> usize {
        self.output.len()
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
    pub fn output(&self, state: StateId) -> bool {
        self.output[state]
    }
    pub fn transitions(&self) -> &[StateId] {
        &self.transitions
    }

    /// One output per input symbol: the output of each state entered. The
    /// initial state's output is not emitted.
    pub fn run(&self, input: &[Symbol]) -> Result<Vec<bool>, AutomataError> {
        self.alphabet.check_word(input)?;
        let mut q = self.initial;
        Ok(input
            .iter()
            .map(|&a| {
                q = self.next(q, a);
                self.output[q]
            })
            .collect())
    }

    pub fn is_consistent_with(&self, sample: &MachineSample) -> Result<bool, AutomataError> {
        self.alphabet.ensure_compatible(sample.alphabet())?;
        for run in sample.runs() {
            if self.run(&run.input)? != run.output {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Mealy machine with binary edge output `λ: Q × Σ → {+,-}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MealyMachine {
    alphabet: Alphabet,
    initial: StateId,
    transitions: Vec<StateId>,
    /// Parallel to `transitions`.
    output: Vec<bool>,
}

impl MealyMachine {
    pub fn new(
        alphabet: Alphabet,
        num_states: usize,
        initial: StateId,
        transitions: Vec<StateId>,
        output: Vec<bool>,
    ) -> Result<Self, AutomataError> {
        validate_table(&alphabet, num_states, initial, &transitions)?;
        if output.len() != transitions.len() {
            return Err(AutomataError::OutputSize {
                expected: transitions.len(),
                got: output.len(),
            });
        }
        Ok(Self {
            alphabet,
            initial,
            transitions,
            output,
        })
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len() / self.alphabet.size()
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
    pub fn output(&self, state: StateId, symbol: Symbol) -> bool {
        self.output[state * self.alphabet.size() + symbol]
    }
    pub fn transitions(&self) -> &[StateId] {
        &self.transitions
    }

    pub fn run(&self, input: &[Symbol]) -> Result<Vec<bool>, AutomataError> {
        self.alphabet.check_word(input)?;
        let mut q = self.initial;
        Ok(input
            .iter()
            .map(|&a| {
                let out = self.output(q, a);
                q = self.next(q, a);
                out
            })
            .collect())
    }

    pub fn is_consistent_with(&self, sample: &MachineSample) -> Result<bool, AutomataError> {
        self.alphabet.ensure_compatible(sample.alphabet())?;
        for run in sample.runs() {
            if self.run(&run.input)? != run.output {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// An observed input/output pair of equal length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub input: Word,
    pub output: Vec<bool>,
}

/// A finite set of runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineSample {
    alphabet: Alphabet,
    runs: Vec<Run>,
}

impl MachineSample {
    /// Validates lengths and symbols; duplicate runs collapse. Consistency
    /// between runs is checked separately by [`MachineSample::check_consistency`].
    pub fn new(alphabet: Alphabet, runs: impl IntoIterator<Item = Run>) -> Result<Self, AutomataError> {
        let mut runs: Vec<Run> = runs.into_iter().collect();
        for run in &runs {
            alphabet.check_word(&run.input)?;
            if run.input.len() != run.output.len() {
                return Err(AutomataError::RunLengthMismatch {
                    input: run.input.len(),
                    output: run.output.len(),
                });
            }
        }
        runs.sort();
        runs.dedup();
        Ok(Self { alphabet, runs })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    fn describe(&self, run: &Run) -> String {
        format!(
            "({}, {})",
            self.alphabet.format_word(&run.input),
            format_outputs(&run.output)
        )
    }

    /// Labels of every nonempty prefix, or the first pair of runs that
    /// disagree on a shared prefix.
    fn prefix_labels(&self) -> Result<BTreeMap<&[Symbol], (bool, usize)>, AutomataError> {
        let mut labels: BTreeMap<&[Symbol], (bool, usize)> = BTreeMap::new();
        for (idx, run) in self.runs.iter().enumerate() {
            for len in 1..=run.input.len() {
                let out = run.output[len - 1];
                match labels.get(&run.input[..len]) {
                    Some(&(seen, owner)) if seen != out => {
                        return Err(AutomataError::ConflictingRuns {
                            first: self.describe(&self.runs[owner]),
                            second: self.describe(run),
                        });
                    }
                    Some(_) => {}
                    None => {
                        labels.insert(&run.input[..len], (out, idx));
                    }
                }
            }
        }
        Ok(labels)
    }

    pub fn check_consistency(&self) -> Result<(), AutomataError> {
        self.prefix_labels().map(|_| ())
    }

    /// The equivalent almost prefix-complete DFA sample. The empty string is
    /// never emitted.
    pub fn to_dfa_sample(&self) -> Result<DfaSample, AutomataError> {
        let labels = self.prefix_labels()?;
        let mut sample = DfaSample::new(self.alphabet.clone());
        for (word, (label, _)) in labels {
            sample.insert(word.to_vec(), label)?;
        }
        Ok(sample)
    }
}

impl DfaSample {
    /// One run per maximal string; output position `ℓ` is the label of the
    /// length-`ℓ` prefix. The label of `ε`, if any, is dropped.
    pub fn to_machine_sample(&self) -> Result<MachineSample, AutomataError> {
        if is_prefix_complete(self) == PrefixCompleteness::Neither {
            return Err(AutomataError::NotPrefixComplete);
        }
        let words: Vec<(&Word, bool)> = self.iter().collect();
        let mut runs = Vec::new();
        for (i, (word, _)) in words.iter().enumerate() {
            // in lexicographic order every extension of `word` follows it directly
            let extended = words
                .get(i + 1)
                .is_some_and(|(next, _)| next.starts_with(word));
            if extended || word.is_empty() {
                continue;
            }
            let output = (1..=word.len())
                .map(|len| {
                    self.label(&word[..len])
                        .expect("prefix-closed sample contains every prefix")
                })
                .collect();
            runs.push(Run {
                input: (*word).clone(),
                output,
            });
        }
        MachineSample::new(self.alphabet().clone(), runs)
    }
}
