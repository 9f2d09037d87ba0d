use ratell_core::catalog::{check_tasks, run_checks, CheckGroup, Status};

#[test]
fn every_check_passes() {
    let records = run_checks(&CheckGroup::ALL);
    let failed: Vec<_> = records.iter().filter(|r| r.status == Status::Fail).collect();
    for r in &failed {
        eprintln!("FAIL {}: expected {} got {}", r.name, r.expected, r.actual);
    }
    assert!(failed.is_empty(), "{} of {} checks failed", failed.len(), records.len());
    assert!(records.len() > 150, "only {} records", records.len());
}

#[test]
fn tasks_respect_groups() {
    let tasks = check_tasks(&[CheckGroup::Seven]);
    assert!(tasks.iter().all(|t| t.group == CheckGroup::Seven));
    assert!(tasks.iter().any(|t| t.name == "catalog N^7"));
}
