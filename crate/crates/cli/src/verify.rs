use rayon::prelude::*;

use ratell_core::catalog::{check_tasks, CheckGroup, CheckRecord};

/// Runs every check task of `groups` in parallel; records sorted by name.
pub fn run_verification(groups: &[CheckGroup]) -> Vec<CheckRecord> {
    let tasks = check_tasks(groups);
    let mut records: Vec<CheckRecord> = tasks.par_iter().flat_map_iter(|t| t.run()).collect();
    records.sort();
    records
}
