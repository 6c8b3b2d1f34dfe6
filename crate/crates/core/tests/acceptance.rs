//! Acceptance suite: runs the full verification grid and reports one line
//! per criterion. Every check is exact; the whole grid is expected to run
//! in seconds.

use hitchin_core::sweep;

#[test]
fn acceptance_grid() {
    let results = sweep::run_all();
    let mut all_pass = true;
    for r in &results {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict}  criterion {}: {} ({})",
            r.index, r.name, r.detail
        );
        all_pass &= r.pass;
    }
    assert!(all_pass, "at least one acceptance criterion failed");
}
