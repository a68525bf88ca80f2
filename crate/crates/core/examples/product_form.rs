// The specialized Links–Gould invariants factor as products of exterior
// traces, each of which is twice the Alexander polynomial up to a unit.

use links_gould::braid::BraidWord;
use links_gould::burau::alexander_det;
use links_gould::exterior::{lg_product, product_factors, ProductFlavor};
use links_gould::links_gould::{lg_invariant, LgFlavor};
use links_gould::scalar::{equal_up_to_unit, Rational};
use links_gould::Error;

pub fn run_example() -> Result<(), Error> {
    let b = BraidWord::parse("1 -2 1 -2", 3)?;
    let two_delta = alexander_det(&b)?.scale(&Rational::from_integer(2.into()));
    for (flavor, lg) in [(ProductFlavor::Lg21, LgFlavor::Lg21Special), (ProductFlavor::Lg31, LgFlavor::Lg31Special)] {
        let factors = product_factors(&b, flavor)?;
        for (k, f) in factors.iter().enumerate() {
            let u = equal_up_to_unit(f, &two_delta).expect("factor ≐ 2Δ");
            println!("{flavor:?} factor {k}: {f}   (= {:+}·t^({}/2)·2Δ)", u.sign, u.shift);
        }
        let product = lg_product(&b, flavor)?;
        let trace = lg_invariant(&b, lg)?;
        println!("{flavor:?}: product {product}, trace {trace}, equal: {}", Some(&product) == trace.as_one_var());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
