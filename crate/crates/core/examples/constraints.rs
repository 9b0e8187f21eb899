// Edge-norm equations for `G` and what unit propagation alone decides.

use std::error::Error;

use zemm::catalog;
use zemm::constraints::propagate;
use zemm::search::{constraint_system, edge_name};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let entry = catalog::get("G").ok_or("G missing from catalog")?;
    let (_, system) = constraint_system(&entry.graph, &entry.forest());
    println!(
        "{} unknowns, {} equations",
        system.unknowns.len(),
        system.equations.len()
    );
    for eq in &system.equations {
        println!("  {:>4}: {eq}", edge_name(&entry.graph, eq.source_edge));
    }

    let partial = propagate(&system)?;
    println!("propagation fixes {} unknowns:", partial.fixed.len());
    for (pair, v) in &partial.fixed {
        println!("  {pair} = {v}");
    }
    println!("{} equations remain:", partial.remaining.len());
    for eq in &partial.remaining {
        println!("  {eq}");
    }
    assert_eq!(partial.fixed.len(), 7);
    assert_eq!(partial.remaining.len(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
