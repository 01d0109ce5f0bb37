use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use prefixdfa::automata::{
    check_consistency, is_prefix_complete, prefix_tree_acceptor, Acceptor, Alphabet, Dfa,
    DfaSample, PrefixCompleteness, Word,
};
use prefixdfa::graphs::{chromatic_number, example_graph, is_proper_coloring, Coloring, Graph};
use prefixdfa::reductions::{
    binary_sample, make_encoding, single_string, zhang_sample, Encoding, ReductionParams,
};
use prefixdfa::solver::{brute_force_min, min_consistent, rpni, SolverError};
use prefixdfa::witnesses::{
    binary_dfa_from_coloring, coloring_from_binary_dfa, coloring_from_single_dfa, ratio_report,
    single_dfa_from_coloring, two_chain_dfa, zhang_dfa_from_coloring,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_GRAPHS: u64 = 10;
const RANDOM_SAMPLES: u64 = 200;
const MACHINE_STRINGS: usize = 1000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn graph_suite() -> Vec<(String, Graph)> {
    let mut suite = vec![
        ("triangle".to_owned(), Graph::complete(3).unwrap()),
        ("C5".to_owned(), Graph::cycle(5).unwrap()),
        ("K4".to_owned(), Graph::complete(4).unwrap()),
        ("example".to_owned(), example_graph()),
        ("edgeless(4)".to_owned(), Graph::empty(4).unwrap()),
        ("P4".to_owned(), Graph::path(4).unwrap()),
    ];
    for seed in 0..RANDOM_GRAPHS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        suite.push((format!("G(6,0.5)#{seed}"), Graph::random_gnp(6, 0.5, &mut rng).unwrap()));
    }
    suite
}

fn optimal(g: &Graph) -> (usize, Coloring) {
    let out = chromatic_number(g, None);
    (out.k_star().unwrap(), out.witness().unwrap().clone())
}

fn setup(g: &Graph, k: usize) -> (ReductionParams, Encoding) {
    let p = ReductionParams::for_graph(g, k).unwrap();
    let e = make_encoding(g, &p).unwrap();
    (p, e)
}

fn consistent<A: Acceptor + ?Sized>(a: &A, s: &DfaSample) -> bool {
    check_consistency(a, s).unwrap().is_consistent()
}

fn criterion_1() -> Outcome {
    let mut checked = Vec::new();
    for (name, g) in graph_suite() {
        let (k_star, _) = optimal(&g);
        let sample = zhang_sample(&g).map_err(|e| e.to_string())?;
        let (m, w) = min_consistent(&sample, g.num_vertices() + 1, false, None)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure!(w.is_consistent_with(&sample).unwrap(), "{name}: witness inconsistent");
        ensure!(m == k_star + 1, "{name}: m* = {m} but chromatic number + 1 = {}", k_star + 1);
        checked.push(format!("{name}:{m}"));
    }
    let fig = min_consistent(&zhang_sample(&example_graph()).unwrap(), 6, false, None).unwrap().0;
    ensure!(fig == 4, "example graph m* = {fig}, expected 4");
    Ok(format!("{} graphs, m* = k*+1 [{}]", checked.len(), checked.join(" ")))
}

fn criterion_2() -> Outcome {
    let mut details = Vec::new();
    for (name, g, l_expected, bound_expected) in [
        ("example", example_graph(), 57, 228),
        ("triangle", Graph::complete(3).unwrap(), 25, 100),
    ] {
        let (p, e) = setup(&g, 3);
        ensure!(p.body_len == l_expected, "{name}: L = {}", p.body_len);
        ensure!(p.binary_bound() == bound_expected, "{name}: (K+1)L = {}", p.binary_bound());
        let (_, c) = optimal(&g);
        let m = binary_dfa_from_coloring(&g, &c, &p, &e).map_err(|e| e.to_string())?;
        let sample = binary_sample(&g, &p, &e).unwrap();
        ensure!(consistent(&m, &sample), "{name}: witness inconsistent");
        ensure!(m.is_acyclic(), "{name}: witness has a cycle");
        ensure!(m.num_states() < bound_expected, "{name}: {} states", m.num_states());
        details.push(format!("{name}: {} < {bound_expected}", m.num_states()));
    }
    Ok(details.join(", "))
}

fn criterion_3() -> Outcome {
    let mut n = 0;
    for (name, g) in graph_suite() {
        let (k, c) = optimal(&g);
        let (p, e) = setup(&g, k);
        let witness = binary_dfa_from_coloring(&g, &c, &p, &e).map_err(|e| e.to_string())?.complete();
        let (back, analysis) =
            coloring_from_binary_dfa(&witness, &g, &p, &e).map_err(|e| format!("{name}: {e}"))?;
        ensure!(is_proper_coloring(&g, &back).unwrap(), "{name}: improper extraction");
        ensure!(analysis.num_classes <= k, "{name}: k_hat = {} > K = {k}", analysis.num_classes);
        ensure!(
            analysis.num_classes * p.body_len <= witness.num_states(),
            "{name}: k_hat*L exceeds the state count"
        );

        let pta = prefix_tree_acceptor(&binary_sample(&g, &p, &e).unwrap()).complete();
        let (pc, pa) = coloring_from_binary_dfa(&pta, &g, &p, &e).map_err(|e| format!("{name}: {e}"))?;
        ensure!(is_proper_coloring(&g, &pc).unwrap(), "{name}: improper PTA extraction");
        ensure!(
            pa.num_classes == g.num_vertices(),
            "{name}: PTA k_hat = {} != |V|",
            pa.num_classes
        );
        n += 1;
    }
    Ok(format!("{n} graphs, witness and PTA extractions proper"))
}

fn criterion_4() -> Outcome {
    let mut details = Vec::new();
    for (name, g) in [("triangle", Graph::complete(3).unwrap()), ("example", example_graph())] {
        let (k, c) = optimal(&g);
        let (p, e) = setup(&g, k);
        let inst = single_string(&g, &p, &e).map_err(|e| e.to_string())?;
        let expected_len = 2 * g.num_edges() * (p.separator_len + p.head_len + p.body_len + p.tail_len);
        ensure!(inst.word.len() == expected_len, "{name}: |Str| = {}", inst.word.len());
        if name == "triangle" {
            ensure!(expected_len == 780, "triangle |Str| = {expected_len}");
            ensure!(p.single_bound() == 201, "triangle bound = {}", p.single_bound());
        }
        // (a) the sample is exactly Pref(Str)
        ensure!(inst.sample.len() == inst.word.len() + 1, "{name}: sample size");
        for len in 0..=inst.word.len() {
            ensure!(inst.sample.label(&inst.word[..len]).is_some(), "{name}: prefix {len} missing");
        }
        let runs = inst.sample.to_machine_sample().map_err(|e| e.to_string())?;
        ensure!(runs.runs().len() == 1, "{name}: {} maximal strings", runs.runs().len());
        // (b) witness
        let m = single_dfa_from_coloring(&g, &c, &p, &e).map_err(|e| e.to_string())?;
        ensure!(consistent(&m, &inst.sample), "{name}: witness inconsistent");
        ensure!(m.num_states() <= p.single_bound(), "{name}: {} states", m.num_states());
        // (c) extraction
        let back = coloring_from_single_dfa(&m, &g, &p, &e).map_err(|e| e.to_string())?;
        ensure!(is_proper_coloring(&g, &back).unwrap(), "{name}: improper extraction");
        ensure!(back.num_used() <= k, "{name}: {} colors", back.num_used());
        // (d) separator labels
        let zeros: Word = vec![0; p.separator_len];
        for j in 1..p.separator_len {
            ensure!(inst.sample.label(&zeros[..j]) == Some(true), "{name}: 0^{j} not positive");
        }
        ensure!(inst.sample.label(&zeros) == Some(false), "{name}: 0^N not negative");
        details.push(format!("{name}: |Str|={} m={} <= {}", inst.word.len(), m.num_states(), p.single_bound()));
    }
    Ok(details.join(", "))
}

fn criterion_5() -> Outcome {
    let mut details = Vec::new();
    for (name, g) in [
        ("triangle", Graph::complete(3).unwrap()),
        ("example", example_graph()),
        ("K4", Graph::complete(4).unwrap()),
    ] {
        let (k, _) = optimal(&g);
        let (p, e) = setup(&g, k);
        let m = two_chain_dfa(&g, &p, &e).map_err(|e| format!("{name}: {e}"))?;
        let inst = single_string(&g, &p, &e).unwrap();
        ensure!(consistent(&m, &inst.sample), "{name}: inconsistent");
        ensure!(m.num_states() < p.two_chain_bound(), "{name}: {} states", m.num_states());
        if name == "triangle" {
            ensure!(p.two_chain_bound() == 302, "triangle bound = {}", p.two_chain_bound());
        }
        details.push(format!("{name}(k*={k}): {} < {}", m.num_states(), p.two_chain_bound()));
    }
    Ok(details.join(", "))
}

fn random_sample(rng: &mut ChaCha8Rng) -> DfaSample {
    let mut sample = DfaSample::new(Alphabet::binary());
    let count = rng.gen_range(0..=8);
    for _ in 0..count {
        let len = rng.gen_range(0..=5);
        let word: Word = (0..len).map(|_| rng.gen_range(0..2)).collect();
        if sample.label(&word).is_none() {
            sample.insert(word, rng.gen_bool(0.5)).unwrap();
        }
    }
    sample
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut histogram = [0usize; 5];
    for i in 0..RANDOM_SAMPLES {
        let s = random_sample(&mut rng);
        let exact = min_consistent(&s, 3, false, None);
        let brute = brute_force_min(&s, 3);
        let key = match (&exact, &brute) {
            (Ok((a, _)), Ok((b, _))) if a == b => *a,
            (Err(SolverError::ExceedsBound { .. }), Err(SolverError::ExceedsBound { .. })) => 4,
            _ => {
                return Err(format!(
                    "sample #{i}: exact {:?} vs brute force {:?}",
                    exact.map(|x| x.0),
                    brute.map(|x| x.0)
                ))
            }
        };
        histogram[key] += 1;
    }
    Ok(format!(
        "{RANDOM_SAMPLES} samples agree (m*=1: {}, 2: {}, 3: {}, >3: {})",
        histogram[1], histogram[2], histogram[3], histogram[4]
    ))
}

fn criterion_7() -> Outcome {
    let g = example_graph();
    let (p, e) = setup(&g, 3);
    let sample = binary_sample(&g, &p, &e).unwrap();
    let heuristic = rpni(&sample);
    ensure!(consistent(&heuristic, &sample), "rpni output inconsistent");
    let r = ratio_report(&g, &heuristic, &p, &e).map_err(|e| e.to_string())?;
    ensure!(r.k_star <= r.k_hat, "k* = {} > k_hat = {}", r.k_star, r.k_hat);
    ensure!(r.k_hat <= r.m_hat / r.body_len, "k_hat = {} > floor(m_hat/L)", r.k_hat);
    ensure!(r.m_star_lower == r.k_star * r.body_len, "m* lower bound bookkeeping");
    ensure!(r.m_star_lower <= r.m_hat, "m_hat = {} below k*L = {}", r.m_hat, r.m_star_lower);
    Ok(format!(
        "m_hat={} k_hat={} k*={} L={} floor(m_hat/L)={} k*L={}",
        r.m_hat,
        r.k_hat,
        r.k_star,
        r.body_len,
        r.m_hat / r.body_len,
        r.m_star_lower
    ))
}

fn witness_suite() -> Vec<(String, Dfa, DfaSample)> {
    let mut out = Vec::new();
    let fig = example_graph();
    let tri = Graph::complete(3).unwrap();
    let (_, fc) = optimal(&fig);
    let (_, tc) = optimal(&tri);
    out.push((
        "zhang/example".into(),
        zhang_dfa_from_coloring(&fig, &fc).unwrap().complete(),
        zhang_sample(&fig).unwrap(),
    ));
    for (name, g, c) in [("example", &fig, &fc), ("triangle", &tri, &tc)] {
        let (p, e) = setup(g, 3);
        out.push((
            format!("binary/{name}"),
            binary_dfa_from_coloring(g, c, &p, &e).unwrap().complete(),
            binary_sample(g, &p, &e).unwrap(),
        ));
    }
    let (p, e) = setup(&tri, 3);
    let inst = single_string(&tri, &p, &e).unwrap();
    out.push((
        "single/triangle".into(),
        single_dfa_from_coloring(&tri, &tc, &p, &e).unwrap(),
        inst.sample.clone(),
    ));
    out.push(("two-chain/triangle".into(), two_chain_dfa(&tri, &p, &e).unwrap(), inst.sample));
    out
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let suite = witness_suite();
    for (name, dfa, sample) in &suite {
        let moore = dfa.to_moore();
        let mealy = dfa.to_mealy();
        for (word, _) in sample.iter() {
            let out = moore.run(word).unwrap();
            for (i, &o) in out.iter().enumerate() {
                if let Some(l) = sample.label(&word[..=i]) {
                    ensure!(o == l, "{name}: Moore output differs at {} of {:?}", i, word);
                }
            }
            ensure!(mealy.run(word).unwrap() == out, "{name}: Mealy and Moore differ on a sample string");
        }
        let k = dfa.alphabet().size();
        for _ in 0..MACHINE_STRINGS {
            let len = rng.gen_range(0..=64);
            let w: Word = (0..len).map(|_| rng.gen_range(0..k)).collect();
            ensure!(moore.run(&w).unwrap() == mealy.run(&w).unwrap(), "{name}: Mealy/Moore differ");
        }
        let ms = sample.to_machine_sample().map_err(|e| e.to_string())?;
        let back = ms.to_dfa_sample().map_err(|e| e.to_string())?;
        ensure!(back == sample.without_empty(), "{name}: sample round trip");
        ensure!(back.to_machine_sample().unwrap() == ms, "{name}: machine-sample round trip");
    }
    Ok(format!("{} witnesses, {MACHINE_STRINGS} random strings each", suite.len()))
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for (name, g) in graph_suite() {
        let (k, _) = optimal(&g);
        let (p, e) = setup(&g, k);
        let mut samples = vec![zhang_sample(&g).unwrap(), binary_sample(&g, &p, &e).unwrap()];
        if g.num_edges() > 0 && g.num_edges() <= 6 {
            samples.push(single_string(&g, &p, &e).unwrap().sample);
        }
        for s in samples {
            ensure!(is_prefix_complete(&s) == PrefixCompleteness::Complete, "{name}: not prefix-complete");
            let pta = prefix_tree_acceptor(&s);
            ensure!(pta.is_acyclic(), "{name}: PTA has a cycle");
            ensure!(consistent(&pta, &s), "{name}: PTA inconsistent");
            count += 1;
        }
    }
    let g = Graph::path(2).unwrap();
    let (p, warnings) = ReductionParams::with_overrides(&g, 1, Some(1), Some(1)).unwrap();
    ensure!(!warnings.is_empty(), "tiny instance should be under the bounds");
    let e = make_encoding(&g, &p).unwrap();
    let inst = single_string(&g, &p, &e).unwrap();
    let (m, w) = min_consistent(&inst.sample, inst.word.len() + 1, true, None).map_err(|e| e.to_string())?;
    ensure!(m == inst.word.len() + 1, "minimum ADFA has {m} states, |Str|+1 = {}", inst.word.len() + 1);
    ensure!(w.is_consistent_with(&inst.sample).unwrap(), "ADFA witness inconsistent");
    Ok(format!("{count} PTAs acyclic and consistent; tiny |Str|={} -> min ADFA {m}", inst.word.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Zhang equivalence m* = k*+1", Duration::from_secs(60), criterion_1),
        ("binary forward witness < (K+1)L", Duration::from_secs(5), criterion_2),
        ("binary converse extraction", Duration::from_secs(10), criterion_3),
        ("single-string lemma", Duration::from_secs(10), criterion_4),
        ("two-chain bound < 2(N+2L)", Duration::from_secs(10), criterion_5),
        ("exact solver = brute force", Duration::from_secs(120), criterion_6),
        ("ratio chain", Duration::from_secs(30), criterion_7),
        ("machine transfer", Duration::from_secs(10), criterion_8),
        ("ADFA facts", Duration::from_secs(30), criterion_9),
    ];
    let mut failures = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_owned()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(msg) if elapsed > *limit => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(msg) => println!("PASS criterion {}: {title} ({msg}) [{elapsed:.2?}]", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {}: {title}: {msg} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
