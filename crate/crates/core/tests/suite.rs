use lawvere::suite::{find_law, replay, run_law, run_suite, ConfigError, SuiteConfig};

fn quick(seed: u64) -> SuiteConfig {
    SuiteConfig {
        seed,
        cases: 8,
        max_points: 4,
        samples: 4,
        ..SuiteConfig::default()
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run_suite(&quick(11)).unwrap();
    let b = run_suite(&quick(11)).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.pass), "{:?}", a.iter().find(|r| !r.pass));
}

#[test]
fn zero_cases_are_rejected() {
    let config = SuiteConfig {
        cases: 0,
        ..SuiteConfig::default()
    };
    assert_eq!(run_suite(&config), Err(ConfigError::NoCases));
}

#[test]
fn mutant_breaks_the_main_theorem_and_replays() {
    let config = SuiteConfig {
        mutate: true,
        ..quick(42)
    };
    let law = find_law("thm-main").unwrap();
    let report = run_law(&law, &config);
    assert!(!report.pass);
    let text = report.counterexample.expect("failing report carries a counterexample");
    assert!(text.contains("dist a a 1"), "{text}");
    assert!(replay("thm-main", &text).unwrap().is_err());
}

#[test]
fn every_failing_report_replays() {
    let config = SuiteConfig {
        mutate: true,
        ..quick(5)
    };
    for report in run_suite(&config).unwrap().into_iter().filter(|r| !r.pass) {
        let text = report.counterexample.as_deref().unwrap();
        assert!(
            replay(&report.law, text).unwrap().is_err(),
            "{} passed on its own counterexample",
            report.law
        );
    }
}

#[test]
fn passing_inputs_replay_clean() {
    let text = "space s\npoints a b\ndist a b 1\ndist b a 1\n";
    assert_eq!(replay("thm-main", text).unwrap(), Ok(()));
    assert!(replay("no-such-law", text).is_err());
}
