// The tensor representations are exterior powers of Burau sums in disguise:
// each basis tensor maps to a wedge of Burau basis vectors, and this map
// commutes with every generator.

use links_gould::braid::BraidWord;
use links_gould::exterior::{intertwining_violation, word_intertwining_violation, Intertwiner, IntertwinerKind};
use links_gould::tensor::decode;
use links_gould::Error;

pub fn run_example() -> Result<(), Error> {
    let kinds = [(IntertwinerKind::J, 4), (IntertwinerKind::K, 4), (IntertwinerKind::I21, 3), (IntertwinerKind::I31, 2)];
    for (kind, n) in kinds {
        let inter = Intertwiner::new(kind, n);
        let op = kind.operator();
        let d = kind.site_dim();
        let shown: Vec<String> = (0..d as u64)
            .map(|i| {
                let (_, wedge) = Intertwiner::new(kind, 1).image(i);
                format!("e{}↦{wedge}", i + 1)
            })
            .collect();
        println!("{kind:?} on one strand: {}", shown.join(", "));
        assert!(inter.is_bijective());
        let bad = intertwining_violation(&inter, &op)?;
        println!("{kind:?}, n = {n}: every generator commutes: {}", bad.is_none());
    }

    let b = BraidWord::parse("1 -2 1 -2", 3)?;
    let inter = Intertwiner::new(IntertwinerKind::I21, 3);
    let bad = word_intertwining_violation(&inter, &b, &IntertwinerKind::I21.operator())?;
    println!("figure-eight word through I21: {}", if bad.is_none() { "commutes" } else { "fails" });
    println!("basis tensor 17 on 3 sites of dim 4 = digits {:?}", decode(4, 3, 17));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
