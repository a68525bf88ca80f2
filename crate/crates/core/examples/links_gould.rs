// Links–Gould invariants of the trefoil: the two-variable `LG^{2,1}`, its
// one-variable specialization, and the specialized `LG^{3,1}`, set against
// powers of the Alexander polynomial.

use links_gould::braid::BraidWord;
use links_gould::burau::alexander_det;
use links_gould::links_gould::{lg_invariant, LgFlavor};
use links_gould::scalar::{equal_up_to_unit, Specialization};
use links_gould::Error;

pub fn run_example() -> Result<(), Error> {
    let trefoil = BraidWord::parse("1 1 1", 2)?;

    let two = lg_invariant(&trefoil, LgFlavor::Lg21TwoVar)?;
    println!("LG^(2,1)(t0, t1) = {two}");
    let two = two.as_two_var().unwrap();
    println!("at t1 = 1:        {}", two.specialize(Specialization::T1ToOne));

    let d = alexander_det(&trefoil)?;
    let lg21 = lg_invariant(&trefoil, LgFlavor::Lg21Special)?.as_one_var().unwrap().clone();
    let lg31 = lg_invariant(&trefoil, LgFlavor::Lg31Special)?.as_one_var().unwrap().clone();
    println!("LG^(2,1)(t, t^-1) = {lg21}");
    println!("Δ²                = {}", &d * &d);
    println!("LG^(3,1)          = {lg31}");
    println!("Δ³                = {}", &(&d * &d) * &d);

    let u21 = equal_up_to_unit(&lg21, &(&d * &d)).expect("LG^(2,1) ≐ Δ²");
    let u31 = equal_up_to_unit(&lg31, &(&(&d * &d) * &d)).expect("LG^(3,1) ≐ Δ³");
    println!("units: {u21:?}, {u31:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
