// Batch evaluation of a small knot table, as `lgknot batch` does it.

use links_gould::cli::{run_batch, Invariant};

const TABLE: &str = "\
# name; strands; word
0_1; 1;
3_1; 2; 1 1 1
4_1; 3; 1 -2 1 -2
5_1; 2; 1 1 1 1 1
5_2; 3; 1 1 1 2 -1 2
2^2_1; 2; 1 1
broken; 2; 1 3
";

pub fn run_example() -> (usize, usize) {
    let records = run_batch(TABLE, Invariant::All);
    let mut ok = 0;
    for (v, good) in &records {
        if *good {
            ok += 1;
            println!(
                "{:<6} Δ = {:<28} LG21 ≐ Δ² via {}",
                v["name"].as_str().unwrap(),
                v["invariants"]["alexander_det"]["text"].as_str().unwrap(),
                v["main21_unit"]
            );
        } else {
            println!("{:<6} error: {}", v["name"].as_str().unwrap_or("?"), v["error"]);
        }
    }
    println!("{ok} ok, {} failed", records.len() - ok);
    (ok, records.len() - ok)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
