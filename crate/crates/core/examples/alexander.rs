// The Alexander polynomial of a few closed braids, three ways: the reduced
// Burau determinant, the weighted trace of a 4×4 R-matrix, and the
// exterior-algebra product. All three agree up to a unit `±t^{k/2}`.

use links_gould::braid::BraidWord;
use links_gould::burau::{alexander_det, alexander_trace, AlexanderWeight, SmallR};
use links_gould::exterior::{alexander_exterior, ExteriorPath};
use links_gould::scalar::{equal_up_to_unit, normalize_unit};
use links_gould::Error;

pub fn run_example() -> Result<(), Error> {
    let knots = [("hopf", 2, "1 1"), ("trefoil", 2, "1 1 1"), ("figure-eight", 3, "1 -2 1 -2"), ("8_19", 4, "1 2 3 1 2 3 1 2 3")];
    for (name, n, word) in knots {
        let b = BraidWord::parse(word, n)?;
        let det = alexander_det(&b)?;
        let trace = alexander_trace(&b, SmallR::R1, AlexanderWeight::H, true)?;
        let ext = alexander_exterior(&b, ExteriorPath::ViaPsiMu1)?;
        let (shown, _) = normalize_unit(&det);
        println!("{name:>13}: Δ = {shown}");
        // the unit is the part the two routes disagree on
        let u = equal_up_to_unit(&trace, &det).expect("trace agrees up to unit");
        println!("{:>13}  trace = {:+}·t^({}/2)·Δ", "", u.sign, u.shift);
        assert!(equal_up_to_unit(&ext, &det).is_some());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
