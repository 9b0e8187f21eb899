// Search for an integral edge-minimizing metric on `G` and classify the
// resulting lattice.

use std::error::Error;

use zemm::catalog;
use zemm::search::{solve_zemm, verify_zemm, Status};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let entry = catalog::get("G").ok_or("G missing from catalog")?;
    let forest = entry.forest();
    let result = solve_zemm(&entry.graph, Some(&forest));
    println!(
        "{:?} after {} nodes ({} unknowns fixed by propagation)",
        result.status, result.nodes_explored, result.fixed_by_propagation
    );
    let gram = result.gram.ok_or("no matrix found")?;
    print!("{gram}");
    verify_zemm(&entry.graph, Some(&forest), &gram)?;

    let lattice = result.lattice.ok_or("no lattice")?;
    println!(
        "lattice {lattice}: det {}, {} roots",
        lattice.determinant, lattice.root_count
    );
    assert_eq!(result.status, Status::Found);
    assert_eq!(lattice.to_string(), "E6");
    assert_eq!(Some(&gram), entry.gram_fixture.as_ref());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
