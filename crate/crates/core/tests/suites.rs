use springer_core::verify::{run_all, run_suite, VerifyConfig, SUITES};

#[test]
fn every_suite_passes_up_to_four() {
    let cfg = VerifyConfig { max_n: 4, seed: 11, samples: 30 };
    let reports = run_all(&cfg).unwrap();
    assert_eq!(reports.len(), SUITES.len());
    for r in &reports {
        assert!(r.passed(), "{r}");
        assert!(r.checks > 0, "{} ran no checks", r.name);
    }
}

#[test]
fn suites_are_reproducible() {
    let cfg = VerifyConfig { max_n: 4, seed: 3, samples: 10 };
    for name in ["ring", "expansion-agreement", "positivity"] {
        assert_eq!(run_suite(name, &cfg).unwrap(), run_suite(name, &cfg).unwrap());
    }
}
