use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use prefixdfa::automata::{Alphabet, DfaSample};
use prefixdfa::graphs::{chromatic_number, emit_dimacs, example_graph, parse_dimacs, Coloring, Graph};
use prefixdfa::io::{parse_abbadingo, parse_runs, to_dot, write_abbadingo, write_runs, Automaton};
use prefixdfa::reductions::{
    binary_sample, make_encoding, single_string, zhang_alphabet, zhang_sample, ReductionParams,
};
use prefixdfa::solver::{exists_consistent, min_consistent, SolveRequest, SolveStatus, SolverError, Witness};
use prefixdfa::witnesses::{
    binary_dfa_from_coloring, coloring_from_binary_dfa, coloring_from_single_dfa, coloring_from_zhang_dfa,
    single_dfa_from_coloring, two_chain_dfa, zhang_dfa_from_coloring,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::meta::ReduceMeta;
use crate::{
    ConvertArgs, ConvertTarget, DotArgs, ExtractArgs, Family, GraphArgs, Kind, ParamArgs, ReduceArgs, SolveArgs,
    Status, WitnessArgs, WitnessKind,
};

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

/// Writes to `path`, or to stdout when there is none.
fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_text(p, text),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
            _ => Ok(()),
        },
    }
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_dimacs(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn read_automaton(path: &Path) -> Result<Automaton> {
    Automaton::from_json(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

pub fn budget(seconds: Option<f64>) -> Result<Option<Duration>> {
    seconds
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| anyhow!("--budget must be a non-negative number of seconds")))
        .transpose()
}

/// The requested `K`, or the chromatic number.
pub fn resolve_k(graph: &Graph, k: Option<usize>) -> Result<usize> {
    match k {
        Some(0) => bail!("--K must be at least 1"),
        Some(k) => Ok(k),
        None => Ok(chromatic_number(graph, None).k_star().expect("unbounded search is exact")),
    }
}

/// Parameters with overrides; under-bound overrides are reported on stderr.
pub fn resolve_params(graph: &Graph, k: usize, args: &ParamArgs) -> Result<ReductionParams> {
    let (params, warnings) = ReductionParams::with_overrides(graph, k, args.l, args.n)?;
    for w in warnings {
        eprintln!("warning: {w}; the construction lemmas do not apply");
    }
    Ok(params)
}

fn rename_alphabet(automaton: &Automaton, names: &[String]) -> Result<Automaton> {
    let mut doc = automaton.to_doc();
    if doc.alphabet.len() != names.len() {
        bail!("metadata alphabet has {} symbols, the automaton {}", names.len(), doc.alphabet.len());
    }
    doc.alphabet = names.to_vec();
    Ok(Automaton::from_doc(&doc)?)
}

pub fn reduce(args: &ReduceArgs) -> Result<Status> {
    let graph = read_graph(&args.graph)?;
    let k = resolve_k(&graph, args.params.k)?;
    let mut run_text = None;
    let (sample, meta) = match args.kind {
        Kind::Zhang => {
            if args.params.l.is_some() || args.params.n.is_some() {
                eprintln!("warning: --L and --N do not affect the zhang sample");
            }
            let alphabet = zhang_alphabet(&graph);
            let meta = ReduceMeta::new("zhang", alphabet.all_names(), &graph);
            (zhang_sample(&graph)?, meta)
        }
        Kind::Binary => {
            let params = resolve_params(&graph, k, &args.params)?;
            let encoding = make_encoding(&graph, &params)?;
            let sample = binary_sample(&graph, &params, &encoding)?;
            let mut meta = ReduceMeta::new("binary", Alphabet::binary().all_names(), &graph)
                .with_encoding(params, &encoding);
            meta.warnings = params.warnings(&graph).iter().map(ToString::to_string).collect();
            (sample, meta)
        }
        Kind::Single => {
            let params = resolve_params(&graph, k, &args.params)?;
            let encoding = make_encoding(&graph, &params)?;
            let instance = single_string(&graph, &params, &encoding)?;
            let mut meta = ReduceMeta::new("single", Alphabet::binary().all_names(), &graph)
                .with_encoding(params, &encoding);
            meta.warnings = params.warnings(&graph).iter().map(ToString::to_string).collect();
            meta.str_len = Some(instance.word.len());
            run_text = Some(write_runs(&instance.run));
            (instance.sample, meta)
        }
    };

    emit(args.out.as_deref(), &write_abbadingo(&sample))?;
    let meta_path = args.meta.clone().or_else(|| args.out.as_ref().map(|o| with_suffix(o, ".meta.json")));
    if let Some(path) = &meta_path {
        write_text(path, &(serde_json::to_string_pretty(&meta)? + "\n"))?;
    }
    let run_path = args.run.clone().or_else(|| args.out.as_ref().map(|o| with_suffix(o, ".run")));
    if let (Some(text), Some(path)) = (&run_text, &run_path) {
        write_text(path, text)?;
    }

    let mut summary = format!(
        "{}: {} strings ({} positive, {} negative)",
        args.kind.name(),
        sample.len(),
        sample.positives().len(),
        sample.negatives().len()
    );
    if let Some(p) = meta.params {
        summary += &format!(", K={} L={} N={}", p.colors, p.body_len, p.separator_len);
    }
    if let Some(len) = meta.str_len {
        summary += &format!(", run length {len}");
    }
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(Status::Pass)
}

fn read_sample(path: &Path, meta: Option<&Path>) -> Result<DfaSample> {
    let alphabet = match meta {
        Some(m) => {
            let meta: ReduceMeta = serde_json::from_str(&read_text(m)?).with_context(|| format!("parsing {}", m.display()))?;
            Some(Alphabet::with_names(meta.alphabet)?)
        }
        None => None,
    };
    parse_abbadingo(&read_text(path)?, alphabet).with_context(|| format!("parsing {}", path.display()))
}

fn witness_automaton(witness: &Witness) -> Automaton {
    match witness {
        Witness::Total(d) => Automaton::Dfa(d.clone()),
        Witness::Partial(p) => Automaton::Partial(p.clone()),
    }
}

pub fn solve(args: &SolveArgs) -> Result<Status> {
    if args.max_m == 0 {
        bail!("--max-m must be at least 1");
    }
    let sample = read_sample(&args.sample, args.meta.as_deref())?;
    let budget = budget(args.budget)?;
    let mode = if args.acyclic { " (acyclic)" } else { "" };

    let witness = if args.minimize {
        match min_consistent(&sample, args.max_m, args.acyclic, budget) {
            Ok((m, witness)) => {
                println!("m*={m}{mode}");
                witness
            }
            Err(SolverError::ExceedsBound { bound }) => {
                println!("unsat: no consistent DFA with at most {bound} states{mode}");
                return Ok(Status::Fail);
            }
            Err(SolverError::Timeout { m }) => {
                println!("timeout at m={m}");
                return Ok(Status::Timeout);
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        let outcome = exists_consistent(&SolveRequest::new(&sample, args.max_m).acyclic(args.acyclic).budget(budget))?;
        match outcome.status {
            SolveStatus::Sat => {
                let witness = outcome.witness.expect("sat comes with a witness");
                println!("sat at m={}{mode}: witness has {} states", args.max_m, witness.num_states());
                witness
            }
            SolveStatus::Unsat => {
                println!("unsat at m={}{mode}", args.max_m);
                return Ok(Status::Fail);
            }
            SolveStatus::Timeout => {
                println!("timeout at m={}", args.max_m);
                return Ok(Status::Timeout);
            }
        }
    };
    if let Some(out) = &args.out {
        let mut automaton = witness_automaton(&witness);
        if let Some(names) = sample.alphabet().names() {
            automaton = rename_alphabet(&automaton, names)?;
        }
        write_text(out, &automaton.to_json())?;
    }
    Ok(Status::Pass)
}

/// Parses `1,2,3`; `K` is the declared count when given, else the largest color.
pub fn parse_coloring(text: &str, graph: &Graph, k: Option<usize>) -> Result<Coloring> {
    let colors = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().with_context(|| format!("bad color '{}'", t.trim())))
        .collect::<Result<Vec<_>>>()?;
    if colors.len() != graph.num_vertices() {
        bail!("{} colors for {} vertices", colors.len(), graph.num_vertices());
    }
    Ok(match k {
        Some(k) => Coloring::new(colors, k)?,
        None => Coloring::from_colors(colors)?,
    })
}

/// The coloring to build from: the given one, or the oracle's optimum
/// declared with `K` colors.
fn choose_coloring(graph: &Graph, text: Option<&str>, k: Option<usize>) -> Result<Coloring> {
    if let Some(text) = text {
        return parse_coloring(text, graph, k);
    }
    let outcome = chromatic_number(graph, k);
    let Some(coloring) = outcome.witness() else {
        bail!("the graph has no {}-coloring", k.unwrap_or_default());
    };
    Ok(match k {
        Some(k) => coloring.with_num_colors(k)?,
        None => coloring.clone(),
    })
}

pub fn witness(args: &WitnessArgs) -> Result<Status> {
    let graph = read_graph(&args.graph)?;
    if args.params.k == Some(0) {
        bail!("--K must be at least 1");
    }
    let (automaton, summary) = match args.kind {
        WitnessKind::Zhang => {
            let coloring = choose_coloring(&graph, args.coloring.as_deref(), args.params.k)?;
            let dfa = zhang_dfa_from_coloring(&graph, &coloring)?;
            let summary = format!("zhang witness: {} states, K+1 = {}", dfa.num_states(), coloring.num_colors() + 1);
            (Automaton::Partial(dfa), summary)
        }
        WitnessKind::Binary | WitnessKind::Single => {
            let coloring = choose_coloring(&graph, args.coloring.as_deref(), args.params.k)?;
            let params = resolve_params(&graph, coloring.num_colors(), &args.params)?;
            let encoding = make_encoding(&graph, &params)?;
            if args.kind == WitnessKind::Binary {
                let dfa = binary_dfa_from_coloring(&graph, &coloring, &params, &encoding)?;
                let summary = format!(
                    "binary witness: {} states, (K+1)L = {}",
                    dfa.num_states(),
                    params.binary_bound()
                );
                (Automaton::Partial(dfa), summary)
            } else {
                let dfa = single_dfa_from_coloring(&graph, &coloring, &params, &encoding)?;
                let summary = format!(
                    "single witness: {} states, N+(K+1)L = {}",
                    dfa.num_states(),
                    params.single_bound()
                );
                (Automaton::Dfa(dfa), summary)
            }
        }
        WitnessKind::TwoChain => {
            if args.coloring.is_some() {
                eprintln!("warning: the two-chain DFA does not depend on a coloring");
            }
            let k = resolve_k(&graph, args.params.k)?;
            let params = resolve_params(&graph, k, &args.params)?;
            let encoding = make_encoding(&graph, &params)?;
            let dfa = two_chain_dfa(&graph, &params, &encoding)?;
            let summary = format!(
                "two-chain DFA: {} states, 2(N+2L) = {}",
                dfa.num_states(),
                params.two_chain_bound()
            );
            (Automaton::Dfa(dfa), summary)
        }
    };
    emit(args.out.as_deref(), &automaton.to_json())?;
    if args.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(Status::Pass)
}

fn format_colors(coloring: &Coloring) -> String {
    coloring.colors().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn extract(args: &ExtractArgs) -> Result<Status> {
    let meta: ReduceMeta =
        serde_json::from_str(&read_text(&args.meta)?).with_context(|| format!("parsing {}", args.meta.display()))?;
    let kind = match (args.kind, meta.kind.as_str()) {
        (Some(k), recorded) if k.name() != recorded => {
            bail!("metadata describes a '{recorded}' sample, not '{}'", k.name())
        }
        (Some(k), _) => k,
        (None, "zhang") => Kind::Zhang,
        (None, "binary") => Kind::Binary,
        (None, "single") => Kind::Single,
        (None, other) => bail!("unknown sample kind '{other}' in metadata"),
    };
    let automaton = read_automaton(&args.dfa)?;
    let dfa = automaton
        .to_dfa()
        .with_context(|| format!("a {} is not an acceptor", automaton.kind()))?;
    let graph = meta.graph()?;

    let result = match kind {
        Kind::Zhang => coloring_from_zhang_dfa(&dfa, &graph).map(|c| (c, None)),
        Kind::Binary => {
            let (params, encoding) = (meta.params()?, meta.encoding()?);
            coloring_from_binary_dfa(&dfa, &graph, &params, &encoding).map(|(c, a)| (c, Some((params, a.num_classes))))
        }
        Kind::Single => {
            let (params, encoding) = (meta.params()?, meta.encoding()?);
            coloring_from_single_dfa(&dfa, &graph, &params, &encoding).map(|c| (c, Some((params, 0))))
        }
    };
    match result {
        Ok((coloring, extra)) => {
            println!("coloring: {}", format_colors(&coloring));
            let k_hat = match extra {
                Some((_, classes)) if kind == Kind::Binary => classes,
                _ => coloring.num_used(),
            };
            println!("k_hat={k_hat}");
            if let (Kind::Binary, Some((params, _))) = (kind, extra) {
                println!(
                    "m_hat={} L={} floor(m_hat/L)={}",
                    dfa.num_states(),
                    params.body_len,
                    dfa.num_states() / params.body_len
                );
            }
            Ok(Status::Pass)
        }
        Err(e) => {
            println!("FAIL extraction: {e}");
            Ok(Status::Fail)
        }
    }
}

pub fn convert(args: &ConvertArgs) -> Result<Status> {
    let text = match args.to {
        ConvertTarget::Moore | ConvertTarget::Mealy => {
            let automaton = read_automaton(&args.input)?;
            let dfa = match &automaton {
                Automaton::Dfa(d) => d.clone(),
                Automaton::Partial(p) => p.complete(),
                other => bail!("cannot convert a {} to a {}", other.kind(), target_name(args.to)),
            };
            let converted = if args.to == ConvertTarget::Moore {
                Automaton::Moore(dfa.to_moore())
            } else {
                Automaton::Mealy(dfa.to_mealy())
            };
            converted.to_json()
        }
        ConvertTarget::MachineSample => {
            let sample = read_sample(&args.input, None)?;
            write_runs(&sample.to_machine_sample()?)
        }
        ConvertTarget::DfaSample => {
            let alphabet = match &args.alphabet {
                Some(names) => Alphabet::with_names(names.split(',').map(str::trim))?,
                None => Alphabet::binary(),
            };
            let runs = parse_runs(&read_text(&args.input)?, alphabet)
                .with_context(|| format!("parsing {}", args.input.display()))?;
            write_abbadingo(&runs.to_dfa_sample()?)
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok(Status::Pass)
}

fn target_name(target: ConvertTarget) -> &'static str {
    match target {
        ConvertTarget::Moore => "moore",
        ConvertTarget::Mealy => "mealy",
        ConvertTarget::MachineSample => "machine-sample",
        ConvertTarget::DfaSample => "dfa-sample",
    }
}

pub fn dot(args: &DotArgs) -> Result<Status> {
    let automaton = read_automaton(&args.input)?;
    emit(args.out.as_deref(), &to_dot(&automaton))?;
    Ok(Status::Pass)
}

pub fn graph(args: &GraphArgs) -> Result<Status> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let graph = match args.family {
        Family::Complete => Graph::complete(args.n)?,
        Family::Cycle => Graph::cycle(args.n)?,
        Family::Path => Graph::path(args.n)?,
        Family::Empty => Graph::empty(args.n)?,
        Family::Gnp => Graph::random_gnp(args.n, args.p, &mut rng)?,
        Family::Example => example_graph(),
    };
    emit(args.out.as_deref(), &emit_dimacs(&graph))?;
    Ok(Status::Pass)
}
