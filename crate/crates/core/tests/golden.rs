use rmcode::codes::DEFAULT_BUDGET;
use rmcode::golden::{run_corpus, run_example_text, CORPUS};

#[test]
fn corpus_passes() {
    let outcomes = run_corpus(None, DEFAULT_BUDGET).unwrap();
    assert_eq!(outcomes.len(), 10);
    let mut report = String::new();
    for o in &outcomes {
        for c in o.failures() {
            report.push_str(&format!("{} / {}\n{}\n", o.name, c.name, c.detail));
        }
    }
    assert!(report.is_empty(), "{report}");
}

#[test]
fn single_example_by_name() {
    let outcomes = run_corpus(Some("torus_p1_f5"), DEFAULT_BUDGET).unwrap();
    assert_eq!(outcomes.len(), 1);
    assert!(outcomes[0].passed());
    assert!(run_corpus(Some("no_such_example"), DEFAULT_BUDGET).is_err());
}

#[test]
fn perturbed_value_reports_a_diff() {
    let (name, points, expected) = CORPUS.iter().find(|(n, _, _)| *n == "torus_p1_f5").unwrap();
    let perturbed = expected.replace("beta = [-1, 3, -3, 1]", "beta = [-1, 3, 3, 1]");
    assert_ne!(&perturbed, expected);
    let outcome = run_example_text(name, points, &perturbed, DEFAULT_BUDGET);
    let failed: Vec<_> = outcome.failures().collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].name, "β up to scalar");
    assert!(failed[0].detail.contains("expected") && failed[0].detail.contains("got"));
}

#[test]
fn unknown_keys_are_rejected() {
    let (name, points, expected) = CORPUS[0];
    let outcome = run_example_text(name, points, &format!("{expected}\nstray = 1\n"), DEFAULT_BUDGET);
    assert!(!outcome.passed());
    assert_eq!(outcome.checks[0].name, "expected values");
}
