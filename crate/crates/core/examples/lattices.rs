// Determinants, root counts and classification of the simply-laced root
// lattices, plus a matrix read from JSON.

use std::error::Error;

use zemm::cli::read_gram;
use zemm::lattice::{cartan, classify, determinant, roots, LatticeKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let families = [
        (LatticeKind::A, 1..=8),
        (LatticeKind::D, 4..=8),
        (LatticeKind::E, 6..=8),
    ];
    for (kind, ranks) in families {
        for n in ranks {
            let m = cartan(kind, n).ok_or("no Cartan matrix")?;
            let class = classify(&m)?;
            println!(
                "{class:>3}: det {:>2}, {:>3} roots",
                determinant(&m),
                roots(&m)?.len()
            );
            assert_eq!(class.kind, kind);
        }
    }

    // A sum of two A1 pieces is neither A, D nor E.
    let m = read_gram(r#"{"gram": [[2, 0], [0, 2]]}"#)?;
    let class = classify(&m)?;
    println!("{class}");
    assert_eq!(class.kind, LatticeKind::Other);

    let indefinite = read_gram("[[2, 2], [2, 2]]")?;
    assert!(classify(&indefinite).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
