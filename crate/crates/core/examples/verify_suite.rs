// Runs every named check once with default bounds and prints a table.

use links_gould::verify::{run_suite, CheckParams};

pub fn run_example() -> Result<usize, links_gould::Error> {
    let reports = run_suite(&CheckParams::seeded(2024))?;
    let mut failed = 0;
    for r in &reports {
        println!("{:<26} {:>4} cases {:>8} ms  {:?}", r.name, r.cases, r.elapsed_ms, r.outcome);
        if let Some(cx) = &r.counterexample {
            println!("    {} [{}]: {}", cx.case, cx.braid.as_deref().unwrap_or("-"), cx.detail);
            failed += 1;
        }
    }
    Ok(failed)
}

#[allow(dead_code)]
fn main() {
    let failed = run_example().expect("suite runs");
    println!("{failed} failing checks");
}
