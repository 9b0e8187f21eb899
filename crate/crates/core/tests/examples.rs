mod edge_list_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/edge_list.rs"));
}

#[test]
fn edge_list_example_runs() {
    edge_list_example::run_example().expect("edge list example should run");
}

mod cycle_matrix_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cycle_matrix.rs"));
}

#[test]
fn cycle_matrix_example_runs() {
    cycle_matrix_example::run_example().expect("cycle matrix example should run");
}

mod constraints_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/constraints.rs"));
}

#[test]
fn constraints_example_runs() {
    constraints_example::run_example().expect("constraints example should run");
}

mod solve_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/solve.rs"));
}

#[test]
fn solve_example_runs() {
    solve_example::run_example().expect("solve example should run");
}

mod lattices_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattices.rs"));
}

#[test]
fn lattices_example_runs() {
    lattices_example::run_example().expect("lattices example should run");
}

mod surgery_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/surgery.rs"));
}

#[test]
fn surgery_example_runs() {
    surgery_example::run_example().expect("surgery example should run");
}

mod verify_catalog_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_catalog.rs"));
}

#[test]
fn verify_catalog_example_runs() {
    verify_catalog_example::run_example().expect("verify catalog example should run");
}

mod genus8_batch_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/genus8_batch.rs"));
}

#[test]
fn genus8_batch_example_runs() {
    genus8_batch_example::run_example().expect("genus8 batch example should run");
}
