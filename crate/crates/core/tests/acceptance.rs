//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to
//! see the lines; failing claims are listed with their details.

use cosetkit::acceptance::{run_criterion, AcceptanceOptions, TITLES};
use cosetkit::report::Status;

#[test]
fn acceptance() {
    let opts = AcceptanceOptions::default();
    let mut failures = Vec::new();
    for n in 1..=TITLES.len() as u8 {
        let report = run_criterion(n, &opts);
        println!("{}", report.line());
        for c in report.claims.iter().filter(|c| c.status != Status::Pass) {
            println!("    {} {}", c.line(), c.details);
        }
        if report.status != Status::Pass {
            failures.push(n);
        }
    }
    assert!(failures.is_empty(), "criteria not passing: {failures:?}");
}
