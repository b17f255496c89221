use sumfree_core::verify::{run_suite, Suite};

#[test]
fn every_suite_passes_at_default_parameters() {
    for s in Suite::ALL {
        let r = run_suite(s, s.default_params()).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.checks.iter().all(|c| c.checked > 0), "{}", r.summary());
    }
}

#[test]
fn other_seeds_pass_and_reruns_repeat() {
    for s in Suite::ALL {
        let mut p = s.default_params();
        p.seed = 7;
        p.trials = p.trials.min(100);
        let a = run_suite(s, p).unwrap();
        assert!(a.passed(), "{}", a.summary());
        assert_eq!(a.summary(), run_suite(s, p).unwrap().summary());
    }
}

#[test]
fn claim12_example_request() {
    let mut p = Suite::BlueEdgeParity.default_params();
    p.n = 40;
    p.trials = 500;
    p.seed = 7;
    assert!(run_suite(Suite::BlueEdgeParity, p).unwrap().passed());
}
