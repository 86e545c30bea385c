use std::io::Write;

use quandle_cli::acceptance::run_criterion;

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for id in 1..=10 {
        let outcome = run_criterion(id, 0);
        writeln!(err, "{outcome}").unwrap();
        if !outcome.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
