use serde::{Deserialize, Serialize};

use super::{coloring_from_binary_dfa, WitnessError};
use crate::automata::Dfa;
use crate::graphs::{chromatic_number, Graph};
use crate::reductions::{Encoding, ReductionParams};

/// Bookkeeping of the approximation-ratio chain for one heuristic DFA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub m_hat: usize,
    pub k_hat: usize,
    #[serde(rename = "L")]
    pub body_len: usize,
    pub k_star: usize,
    /// `k*·L`: every consistent DFA has at least this many states.
    pub m_star_lower: usize,
}

impl RatioReport {
    /// `⌊m̂ / L⌋`.
    pub fn k_hat_bound(&self) -> usize {
        self.m_hat / self.body_len
    }
}

/// Extracts `k̂` from a heuristic DFA for the binary sample and checks
/// `k* ≤ k̂ ≤ ⌊m̂/L⌋`.
pub fn ratio_report(
    graph: &Graph,
    heuristic: &Dfa,
    params: &ReductionParams,
    encoding: &Encoding,
) -> Result<RatioReport, WitnessError> {
    let (_, analysis) = coloring_from_binary_dfa(heuristic, graph, params, encoding)?;
    let k_star = chromatic_number(graph, None)
        .k_star()
        .expect("unbounded search is exact");
    let report = RatioReport {
        m_hat: heuristic.num_states(),
        k_hat: analysis.num_classes,
        body_len: params.body_len,
        k_star,
        m_star_lower: k_star * params.body_len,
    };
    if report.k_hat < k_star {
        return Err(WitnessError::RatioInvariant(format!(
            "k_hat = {} < k* = {k_star}",
            report.k_hat
        )));
    }
    if report.k_hat > report.k_hat_bound() {
        return Err(WitnessError::RatioInvariant(format!(
            "k_hat = {} > floor(m_hat / L) = {}",
            report.k_hat,
            report.k_hat_bound()
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::prefix_tree_acceptor;
    use crate::reductions::{binary_sample, make_encoding};

    #[test]
    fn pta_of_triangle() {
        let g = Graph::complete(3).unwrap();
        let p = ReductionParams::for_graph(&g, 3).unwrap();
        let e = make_encoding(&g, &p).unwrap();
        let sample = binary_sample(&g, &p, &e).unwrap();
        let pta = prefix_tree_acceptor(&sample).complete();
        let r = ratio_report(&g, &pta, &p, &e).unwrap();
        assert_eq!((r.k_hat, r.k_star), (3, 3));
        assert_eq!(r.m_hat, sample.len());
        assert_eq!(r.m_star_lower, 75);
        let json = serde_json::to_value(r).unwrap();
        assert_eq!(json["L"], 25);
    }
}
