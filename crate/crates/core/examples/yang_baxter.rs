// Checks the braid relation `(R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R)` for every
// R-matrix in the crate, then breaks one entry and shows where it fails.

use std::time::Instant;

use links_gould::burau::{r_small, SmallR};
use links_gould::links_gould::{r_lg21, r_lg21_special, s_lg31};
use links_gould::verify::perturb_entry;

pub fn run_example() -> Vec<(&'static str, bool)> {
    let start = Instant::now();
    let results = vec![
        ("R1", r_small(SmallR::R1).yang_baxter_violation().is_none()),
        ("R3", r_small(SmallR::R3).yang_baxter_violation().is_none()),
        ("R (2,1), two variables", r_lg21().yang_baxter_violation().is_none()),
        ("R (2,1), specialized", r_lg21_special().yang_baxter_violation().is_none()),
        ("S (3,1)", s_lg31().yang_baxter_violation().is_none()),
    ];
    for (name, ok) in &results {
        println!("{name:<24} {}", if *ok { "ok" } else { "FAILS" });
    }
    println!("({} ms)", start.elapsed().as_millis());

    let broken = perturb_entry(&r_lg21_special(), 0, 0);
    match broken.yang_baxter_violation() {
        Some(basis) => println!("with entry (1,1) doubled: fails on basis {:?}", basis.map(|d| d + 1)),
        None => println!("with entry (1,1) doubled: still holds?!"),
    }
    results
}

#[allow(dead_code)]
fn main() {
    run_example();
}
