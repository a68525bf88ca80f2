mod alexander {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/alexander.rs"));
}
mod links_gould_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/links_gould.rs"));
}
mod yang_baxter {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/yang_baxter.rs"));
}
mod intertwiners {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/intertwiners.rs"));
}
mod product_form {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/product_form.rs"));
}
mod knot_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/knot_table.rs"));
}
mod verify_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_suite.rs"));
}

#[test]
fn alexander_runs() {
    alexander::run_example().unwrap();
}

#[test]
fn links_gould_runs() {
    links_gould_example::run_example().unwrap();
}

#[test]
fn yang_baxter_runs() {
    let results = yang_baxter::run_example();
    assert_eq!(results.len(), 5);
    assert!(results.iter().all(|(_, ok)| *ok));
}

#[test]
fn intertwiners_runs() {
    intertwiners::run_example().unwrap();
}

#[test]
fn product_form_runs() {
    product_form::run_example().unwrap();
}

#[test]
fn knot_table_runs() {
    assert_eq!(knot_table::run_example(), (6, 1));
}

#[test]
fn verify_suite_runs() {
    assert_eq!(verify_suite::run_example().unwrap(), 0);
}
