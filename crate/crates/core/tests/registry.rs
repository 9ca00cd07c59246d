use influence_core::experiments::{run_suite, suite_names, SuiteParams, DEFAULT_SEED, SUITES};

const REQUIRED: &[&str] = &[
    "Example 1",
    "Remark 1",
    "Remark 2",
    "Definition 2",
    "Lemma 1",
    "Definition 3",
    "Definition 4",
    "Remark 3",
    "Figure 2",
    "Lemma 2",
    "Lemma 3",
    "Lemma 4",
    "Corollary 1",
    "Corollary 2",
    "Corollary 3",
    "Corollary 4",
    "Definition 6",
    "Definition 7",
    "Remark 4",
    "Proposition 1",
    "Theorem 1",
    "Corollary 5",
    "Lemma 6",
    "Lemma 7",
    "Table 1",
    "Conjecture 1",
    "Conjecture 2",
    "Conjecture 3",
    "Lemma 8",
    "Lemma 9",
    "Corollary 8",
    "Theorem 3",
    "Definition 8",
    "Theorem 4",
];

fn small() -> SuiteParams {
    SuiteParams {
        max_n: Some(16),
        trials: Some(8),
        max_vertices: Some(5),
        parallel: false,
    }
}

const CHEAP: &[&str] = &["figure1", "properties", "milnor", "theorem1", "lemma7", "special-sums", "segment-oracle"];

#[test]
fn every_result_has_a_suite() {
    for anchor in REQUIRED {
        assert!(
            SUITES.iter().any(|s| s.anchors.contains(anchor)),
            "{anchor} is not covered"
        );
    }
}

#[test]
fn claim_anchors_are_registered() {
    for name in CHEAP {
        let info = SUITES.iter().find(|s| s.name == *name).unwrap();
        let report = run_suite(name, &small(), DEFAULT_SEED).unwrap();
        assert!(!report.claims.is_empty(), "{name} has no claims");
        for claim in &report.claims {
            assert!(
                info.anchors.iter().any(|a| claim.anchor.starts_with(a)),
                "{name}/{}: anchor {:?} not registered",
                claim.id,
                claim.anchor
            );
            assert!(!claim.anchor.contains('"'), "{}: quoted anchor", claim.id);
        }
    }
}

#[test]
fn payload_is_seed_deterministic() {
    for name in ["figure1", "properties", "milnor"] {
        let a = run_suite(name, &small(), 7).unwrap();
        let b = run_suite(name, &small(), 7).unwrap();
        assert_eq!(a.payload(), b.payload(), "{name}");
        assert_eq!(a.seed, 7);
    }
}

#[test]
fn names_resolve() {
    for name in suite_names() {
        assert!(SUITES.iter().any(|s| s.name == name));
    }
    assert!(run_suite("missing", &small(), 0).is_err());
}
