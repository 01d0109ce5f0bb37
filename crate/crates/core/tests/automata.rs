use prefixdfa::automata::{
    check_consistency, prefix_tree_acceptor, Alphabet, Dfa, DfaSample, MachineSample, PartialDfa, Run, Word,
};
use prefixdfa::io::{parse_abbadingo, parse_runs, to_dot, write_abbadingo, write_runs, Automaton};
use proptest::prelude::*;

fn dfa_strategy() -> impl Strategy<Value = Dfa> {
    (1usize..=4).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..n, n * 2),
            proptest::collection::vec(any::<bool>(), n),
            0..n,
        )
            .prop_map(move |(table, acc, init)| {
                let accepting: Vec<usize> = (0..n).filter(|&q| acc[q]).collect();
                Dfa::new(Alphabet::binary(), n, init, table, accepting).unwrap()
            })
    })
}

fn word_strategy() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..2, 0..12)
}

fn sample_strategy() -> impl Strategy<Value = DfaSample> {
    proptest::collection::vec((word_strategy(), any::<bool>()), 0..10).prop_map(|items| {
        let mut s = DfaSample::new(Alphabet::binary());
        for (w, l) in items {
            if s.label(&w).is_none() {
                s.insert(w, l).unwrap();
            }
        }
        s
    })
}

/// Prefix-closed sample labeled by a DFA on every prefix of the words.
fn closed_sample(d: &Dfa, words: &[Word]) -> DfaSample {
    let mut s = DfaSample::new(Alphabet::binary());
    for w in words {
        for len in 0..=w.len() {
            s.insert(w[..len].to_vec(), d.accepts(&w[..len]).unwrap()).unwrap();
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn moore_last_output_is_the_verdict(d in dfa_strategy(), w in word_strategy()) {
        let out = d.to_moore().run(&w).unwrap();
        prop_assert_eq!(out.len(), w.len());
        if let Some(&last) = out.last() {
            prop_assert_eq!(last, d.accepts(&w).unwrap());
        }
        prop_assert_eq!(d.to_mealy().run(&w).unwrap(), out);
    }

    #[test]
    fn pta_is_acyclic_and_consistent(s in sample_strategy()) {
        let pta = prefix_tree_acceptor(&s);
        prop_assert!(pta.is_acyclic());
        prop_assert!(check_consistency(&pta, &s).unwrap().is_consistent());
        let total = pta.complete();
        prop_assert_eq!(total.num_states(), pta.num_states());
        prop_assert!(check_consistency(&total, &s).unwrap().is_consistent());
    }

    #[test]
    fn sample_machine_round_trip(d in dfa_strategy(), words in proptest::collection::vec(word_strategy(), 1..6)) {
        let s = closed_sample(&d, &words);
        let ms = s.to_machine_sample().unwrap();
        prop_assert!(d.to_moore().is_consistent_with(&ms).unwrap());
        prop_assert!(d.to_mealy().is_consistent_with(&ms).unwrap());
        let back = ms.to_dfa_sample().unwrap();
        prop_assert_eq!(&back, &s.without_empty());
        prop_assert_eq!(back.to_machine_sample().unwrap(), ms);
    }

    #[test]
    fn consistency_report_lists_every_violation(d in dfa_strategy(), s in sample_strategy()) {
        let report = check_consistency(&d, &s).unwrap();
        let expected = s.iter().filter(|(w, l)| d.accepts(w).unwrap() != *l).count();
        prop_assert_eq!(report.violations.len(), expected);
    }

    #[test]
    fn file_formats_round_trip(d in dfa_strategy(), s in sample_strategy()) {
        prop_assert_eq!(parse_abbadingo(&write_abbadingo(&s), None).unwrap(), s);
        for a in [Automaton::Dfa(d.clone()), Automaton::Moore(d.to_moore()), Automaton::Mealy(d.to_mealy())] {
            let back = Automaton::from_json(&a.to_json()).unwrap();
            prop_assert_eq!(to_dot(&back), to_dot(&a));
            prop_assert_eq!(back, a);
        }
    }
}

#[test]
fn run_file_round_trip_over_named_alphabet() {
    let a = Alphabet::with_names(["a", "b", "c"]).unwrap();
    let ms = MachineSample::new(
        a.clone(),
        [
            Run { input: vec![0, 2], output: vec![true, false] },
            Run { input: vec![1], output: vec![false] },
        ],
    )
    .unwrap();
    let text = write_runs(&ms);
    assert_eq!(parse_runs(&text, a).unwrap(), ms);
}

#[test]
fn partial_dfa_json_omits_missing_transitions() {
    let mut p = PartialDfa::new(Alphabet::binary(), false);
    let q = p.add_state(true);
    p.set_transition(0, 0, q).unwrap();
    let doc = Automaton::Partial(p.clone()).to_doc();
    assert_eq!(doc.transitions, vec![[0, 0, 1]]);
    assert_eq!(Automaton::from_doc(&doc).unwrap(), Automaton::Partial(p));
}
