use anyhow::Result;
use prefixdfa::automata::{check_consistency, Acceptor, DfaSample};
use prefixdfa::graphs::{chromatic_number, is_proper_coloring, Coloring, Graph};
use prefixdfa::reductions::{binary_sample, make_encoding, single_string, zhang_sample, Encoding, ReductionParams};
use prefixdfa::solver::{exists_consistent, rpni, SolveRequest, SolveStatus};
use prefixdfa::witnesses::{
    binary_dfa_from_coloring, coloring_from_binary_dfa, coloring_from_single_dfa, coloring_from_zhang_dfa,
    ratio_report, single_dfa_from_coloring, two_chain_dfa, zhang_dfa_from_coloring,
};

use crate::commands::{budget, read_graph, resolve_k, resolve_params};
use crate::{Kind, Status, VerifyArgs};

/// Collects named checks and prints each as it is decided.
#[derive(Default)]
struct Report {
    failed: bool,
    timed_out: bool,
}

impl Report {
    fn check(&mut self, name: &str, ok: bool, detail: impl std::fmt::Display) -> bool {
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("{tag} {name}: {detail}");
        self.failed |= !ok;
        ok
    }

    fn status(&self) -> Status {
        if self.failed {
            Status::Fail
        } else if self.timed_out {
            Status::Timeout
        } else {
            Status::Pass
        }
    }
}

fn consistent<A: Acceptor + ?Sized>(a: &A, sample: &DfaSample) -> Result<(bool, String)> {
    let report = check_consistency(a, sample)?;
    let detail = if report.is_consistent() {
        format!("all {} strings agree", sample.len())
    } else {
        format!("{} of {} strings disagree", report.violations.len(), sample.len())
    };
    Ok((report.is_consistent(), detail))
}

fn proper_within(graph: &Graph, coloring: &Coloring, k: usize) -> Result<(bool, String)> {
    let proper = is_proper_coloring(graph, coloring)?;
    let used = coloring.num_used();
    Ok((
        proper && used <= k,
        format!("{} with {used} colors, K = {k}", if proper { "proper" } else { "improper" }),
    ))
}

/// A proper coloring with at most `k` colors, or a failed check.
fn k_coloring(report: &mut Report, graph: &Graph, k: usize) -> Option<Coloring> {
    match chromatic_number(graph, Some(k)).witness() {
        Some(c) => {
            report.check("K-colorable", true, format!("oracle coloring uses {} colors", c.num_used()));
            Some(c.with_num_colors(k).expect("oracle stays within the bound"))
        }
        None => {
            report.check("K-colorable", false, format!("chromatic number exceeds K = {k}"));
            None
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Status> {
    let graph = read_graph(&args.graph)?;
    let k = resolve_k(&graph, args.params.k)?;
    let budget = budget(args.budget)?;
    let mut report = Report::default();
    println!(
        "graph: |V|={} |E|={}, K={k}",
        graph.num_vertices(),
        graph.num_edges()
    );

    match args.kind {
        Kind::Zhang => {
            let sample = zhang_sample(&graph)?;
            if let Some(coloring) = k_coloring(&mut report, &graph, k) {
                let dfa = zhang_dfa_from_coloring(&graph, &coloring)?;
                let (ok, detail) = consistent(&dfa, &sample)?;
                report.check("forward consistency", ok, detail);
                report.check(
                    "forward size = K+1",
                    dfa.num_states() == k + 1,
                    format!("{} states, K+1 = {}", dfa.num_states(), k + 1),
                );
            }
            let outcome = exists_consistent(&SolveRequest::new(&sample, k + 1).budget(budget))?;
            match outcome.status {
                SolveStatus::Sat => {
                    let dfa = outcome.witness.expect("sat comes with a witness").to_dfa();
                    report.check("converse solve", true, format!("sat at m={}", k + 1));
                    match coloring_from_zhang_dfa(&dfa, &graph) {
                        Ok(c) => {
                            let (ok, detail) = proper_within(&graph, &c, k)?;
                            report.check("converse extraction", ok, detail);
                        }
                        Err(e) => {
                            report.check("converse extraction", false, e);
                        }
                    }
                }
                SolveStatus::Unsat => {
                    report.check("converse solve", false, format!("unsat at m={}", k + 1));
                }
                SolveStatus::Timeout => {
                    report.timed_out = true;
                    println!("TIMEOUT converse solve: budget exhausted at m={}", k + 1);
                }
            }
        }
        Kind::Binary => {
            let params = resolve_params(&graph, k, &args.params)?;
            let encoding = make_encoding(&graph, &params)?;
            let sample = binary_sample(&graph, &params, &encoding)?;
            println!(
                "params: L={} N={} head={} tail={}, {} strings",
                params.body_len,
                params.separator_len,
                params.head_len,
                params.tail_len,
                sample.len()
            );
            if let Some(coloring) = k_coloring(&mut report, &graph, k) {
                let dfa = binary_dfa_from_coloring(&graph, &coloring, &params, &encoding)?;
                let (ok, detail) = consistent(&dfa, &sample)?;
                report.check("forward consistency", ok, detail);
                report.check("forward acyclic", dfa.is_acyclic(), "no reachable cycle");
                report.check(
                    "forward size < (K+1)L",
                    dfa.num_states() < params.binary_bound(),
                    format!("{} < {}", dfa.num_states(), params.binary_bound()),
                );
                match coloring_from_binary_dfa(&dfa.complete(), &graph, &params, &encoding) {
                    Ok((c, analysis)) => {
                        let (ok, detail) = proper_within(&graph, &c, k)?;
                        report.check("converse extraction", ok, format!("{detail}, k_hat = {}", analysis.num_classes));
                    }
                    Err(e) => {
                        report.check("converse extraction", false, e);
                    }
                }
            }
            if args.ratio {
                check_ratio(&mut report, &graph, &params, &encoding, &sample)?;
            }
        }
        Kind::Single => {
            let params = resolve_params(&graph, k, &args.params)?;
            let encoding = make_encoding(&graph, &params)?;
            let instance = single_string(&graph, &params, &encoding)?;
            println!(
                "params: L={} N={}, |Str|={}",
                params.body_len,
                params.separator_len,
                instance.word.len()
            );
            if let Some(coloring) = k_coloring(&mut report, &graph, k) {
                match single_dfa_from_coloring(&graph, &coloring, &params, &encoding) {
                    Ok(dfa) => {
                        let (ok, detail) = consistent(&dfa, &instance.sample)?;
                        report.check("forward consistency", ok, detail);
                        report.check(
                            "forward size <= N+(K+1)L",
                            dfa.num_states() <= params.single_bound(),
                            format!("{} <= {}", dfa.num_states(), params.single_bound()),
                        );
                        match coloring_from_single_dfa(&dfa, &graph, &params, &encoding) {
                            Ok(c) => {
                                let (ok, detail) = proper_within(&graph, &c, k)?;
                                report.check("converse extraction", ok, detail);
                            }
                            Err(e) => {
                                report.check("converse extraction", false, e);
                            }
                        }
                    }
                    Err(e) => {
                        report.check("forward construction", false, e);
                    }
                }
            }
            match two_chain_dfa(&graph, &params, &encoding) {
                Ok(dfa) => {
                    let (ok, detail) = consistent(&dfa, &instance.sample)?;
                    report.check("two-chain consistency", ok, detail);
                    report.check(
                        "two-chain size < 2(N+2L)",
                        dfa.num_states() < params.two_chain_bound(),
                        format!("{} < {}", dfa.num_states(), params.two_chain_bound()),
                    );
                }
                Err(e) => {
                    report.check("two-chain construction", false, e);
                }
            }
            if args.ratio {
                let sample = binary_sample(&graph, &params, &encoding)?;
                check_ratio(&mut report, &graph, &params, &encoding, &sample)?;
            }
        }
    }
    Ok(report.status())
}

fn check_ratio(
    report: &mut Report,
    graph: &Graph,
    params: &ReductionParams,
    encoding: &Encoding,
    sample: &DfaSample,
) -> Result<()> {
    let heuristic = rpni(sample);
    match ratio_report(graph, &heuristic, params, encoding) {
        Ok(r) => {
            report.check(
                "ratio k* <= k_hat <= floor(m_hat/L)",
                true,
                format!("{} <= {} <= {} (m_hat = {}, L = {})", r.k_star, r.k_hat, r.k_hat_bound(), r.m_hat, r.body_len),
            );
        }
        Err(e) => {
            report.check("ratio k* <= k_hat <= floor(m_hat/L)", false, e);
        }
    }
    Ok(())
}
