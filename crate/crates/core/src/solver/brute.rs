use super::SolverError;
use crate::automata::{check_consistency, Dfa, DfaSample};

/// Smallest consistent DFA by enumerating every transition table, accepting
/// set and initial state with `m = 1, 2, …, m_max` states. Only for tiny
/// instances: binary alphabet and `m_max ≤ 3`.
pub fn brute_force_min(sample: &DfaSample, m_max: usize) -> Result<(usize, Dfa), SolverError> {
    let k = sample.alphabet().size();
    if k != 2 {
        return Err(SolverError::OutOfDomain(format!("alphabet has {k} symbols, expected 2")));
    }
    if m_max == 0 {
        return Err(SolverError::InvalidBound);
    }
    if m_max > 3 {
        return Err(SolverError::OutOfDomain(format!("m_max = {m_max} exceeds 3")));
    }
    for m in 1..=m_max {
        let cells = m * k;
        let tables = m.pow(cells as u32);
        for code in 0..tables {
            let mut rest = code;
            let transitions: Vec<usize> = (0..cells)
                .map(|_| {
                    let t = rest % m;
                    rest /= m;
                    t
                })
                .collect();
            for mask in 0u32..(1 << m) {
                let accepting = (0..m).filter(|&q| mask & (1 << q) != 0);
                for initial in 0..m {
                    let dfa = Dfa::new(
                        sample.alphabet().clone(),
                        m,
                        initial,
                        transitions.clone(),
                        accepting.clone(),
                    )?;
                    if check_consistency(&dfa, sample)?.is_consistent() {
                        return Ok((m, dfa));
                    }
                }
            }
        }
    }
    Err(SolverError::ExceedsBound { bound: m_max })
}
