use syncomplex::automata::minimize;
use syncomplex::bounds::{closed_form_bound, Family};
use syncomplex::classify::classify;
use syncomplex::search::{
    search_max_sigma, verify_theorem9_pairing, PruneFlags, SearchFamily, SearchResult,
    SearchTask,
};
use syncomplex::sigma_of_language;

fn run(family: SearchFamily, n: usize, k: usize, prune: PruneFlags) -> SearchResult {
    let mut task = SearchTask::new(family, n, k);
    task.prune = prune;
    search_max_sigma(&task).unwrap()
}

fn off() -> PruneFlags {
    PruneFlags {
        lemma8_filter: false,
        canonical_first_letter: false,
        dedupe_letter_multisets: false,
    }
}

#[test]
fn witnesses_survive_independent_recheck() {
    let cells = [
        (SearchFamily::Right, 4, 2),
        (SearchFamily::Left, 3, 3),
        (SearchFamily::Left, 4, 2),
        (SearchFamily::TwoSided, 4, 2),
        (SearchFamily::All, 3, 2),
    ];
    for (family, n, k) in cells {
        let r = run(family, n, k, PruneFlags::default());
        assert!(r.exhaustive);
        assert!(!r.witnesses.is_empty());
        assert!(r.witness_count >= r.witnesses.len() as u64);
        for w in &r.witnesses {
            let d = w.to_dfa().unwrap();
            assert_eq!(minimize(&d).n(), n, "{w}");
            assert_eq!(sigma_of_language(&d).unwrap() as u64, r.max_sigma, "{w}");
            let c = classify(&d).unwrap();
            let ok = match family {
                SearchFamily::Right => c.is_right_ideal,
                SearchFamily::Left => c.is_left_ideal,
                SearchFamily::TwoSided => c.is_two_sided_ideal,
                SearchFamily::All => true,
            };
            assert!(ok, "{family} {w}");
        }
    }
}

#[test]
fn pruning_never_changes_the_maximum() {
    let baseline = run(SearchFamily::Left, 3, 2, PruneFlags::default());
    let no_filter = run(
        SearchFamily::Left,
        3,
        2,
        PruneFlags {
            lemma8_filter: false,
            ..PruneFlags::default()
        },
    );
    assert_eq!(baseline.max_sigma, 7);
    assert_eq!(no_filter.max_sigma, baseline.max_sigma);
    assert!(baseline.candidates_pruned >= no_filter.candidates_pruned);

    for (family, n, k) in [
        (SearchFamily::Right, 3, 3),
        (SearchFamily::Left, 3, 2),
        (SearchFamily::TwoSided, 4, 2),
    ] {
        let pruned = run(family, n, k, PruneFlags::default());
        let raw = run(family, n, k, off());
        assert_eq!(pruned.max_sigma, raw.max_sigma, "{family} n={n} k={k}");
        assert!(pruned.candidates_accepted <= raw.candidates_accepted);
        assert_eq!(raw.candidates_examined, SearchTask::new(family, n, k).space());
    }
}

#[test]
fn maximum_grows_with_the_alphabet_and_respects_closed_forms() {
    for (family, closed) in [
        (SearchFamily::Right, Family::Right),
        (SearchFamily::Left, Family::Left),
        (SearchFamily::TwoSided, Family::TwoSided),
    ] {
        for n in 2..=3 {
            let mut last = 0;
            for k in 1..=3 {
                let r = run(family, n, k, PruneFlags::default());
                assert!(r.max_sigma >= last, "{family} n={n} k={k}");
                assert!(r.max_sigma <= closed_form_bound::<u64>(closed, n).unwrap());
                last = r.max_sigma;
            }
        }
    }
}

#[test]
fn unrestricted_family_reaches_the_full_monoid() {
    for n in 1..=3usize {
        let r = run(SearchFamily::All, n, 3, PruneFlags::default());
        assert_eq!(r.max_sigma, (n as u64).pow(n as u32), "n={n}");
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let mut one = SearchTask::new(SearchFamily::Left, 4, 2);
    one.jobs = Some(1);
    let mut two = one.clone();
    two.jobs = Some(3);
    let a = search_max_sigma(&one).unwrap();
    let b = search_max_sigma(&two).unwrap();
    assert_eq!(a.max_sigma, b.max_sigma);
    assert_eq!(a.witnesses, b.witnesses);
    assert_eq!(a.witness_count, b.witness_count);
    assert_eq!(a.candidates_examined, b.candidates_examined);
    assert_eq!(a.candidates_accepted, b.candidates_accepted);
}

#[test]
fn budget_limits_the_sweep() {
    let mut task = SearchTask::new(SearchFamily::Right, 4, 3);
    task.budget = Some(task.space() / 2);
    let partial = search_max_sigma(&task).unwrap();
    assert!(!partial.exhaustive);
    assert!(partial.candidates_examined <= task.space() / 2);
    assert!(partial.max_sigma <= 61);
}

#[test]
fn invalid_tasks_are_rejected() {
    assert!(search_max_sigma(&SearchTask::new(SearchFamily::Right, 0, 2)).is_err());
    assert!(search_max_sigma(&SearchTask::new(SearchFamily::Right, 3, 0)).is_err());
    assert!(search_max_sigma(&SearchTask::new(SearchFamily::Right, 8, 2)).is_err());
}

#[test]
fn three_state_pairing_report() {
    let r = verify_theorem9_pairing().unwrap();
    assert!(r.ok());
    assert_eq!(r.ruled_out.len() + r.realized.len() + r.remaining.len(), 27);
    let words: Vec<&str> = r.steps.iter().map(|s| s.partner_word.as_str()).collect();
    assert_eq!(words, ["cb", "db", "d", "c", "bdb", "bd"]);
}
