// Check every catalog graph against its stored cycle and Gram matrices and
// run the solver on each.

use std::error::Error;

use zemm::catalog::verify_catalog;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let reports = verify_catalog();
    for r in &reports {
        let lattice = r.lattice.map_or("-".to_string(), |l| l.to_string());
        let exact = match r.solver_matches_fixture {
            Some(true) => "same as stored",
            Some(false) => "differs from stored",
            None => "",
        };
        println!(
            "{:<6} genus {} {:?} {:<28} {exact}",
            r.name, r.genus, r.solver_status, lattice
        );
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.ok()).collect();
    for r in &failed {
        println!("{}: {}", r.name, r.failures().join("; "));
    }
    assert!(failed.is_empty());
    assert_eq!(reports.iter().filter(|r| r.has_fixtures()).count(), 15);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
