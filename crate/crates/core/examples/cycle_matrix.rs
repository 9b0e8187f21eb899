// Fundamental cycles of the genus-6 graph `G` relative to its prescribed
// spanning tree.

use std::error::Error;

use zemm::catalog;
use zemm::homology::cycle_matrix;
use zemm::search::edge_name;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let entry = catalog::get("G").ok_or("G missing from catalog")?;
    let g = &entry.graph;
    let forest = entry.forest();
    println!("genus {} with tree {:?}", forest.genus(), forest.tree_edge_ids);

    let m = cycle_matrix(g, &forest);
    let header: Vec<String> = m
        .col_order
        .iter()
        .map(|&e| format!("{:>4}", edge_name(g, e)))
        .collect();
    println!("      {}", header.concat());
    for r in 0..m.rows {
        let cells: Vec<String> = m.row(r).iter().map(|x| format!("{x:>4}")).collect();
        println!("row {r} {}", cells.concat());
    }

    // The first `genus` columns form an identity block.
    for r in 0..m.rows {
        for c in 0..m.rows {
            assert_eq!(m.get(r, c), i64::from(r == c));
        }
    }
    assert_eq!(Some(&m), entry.cycle_fixture.as_ref());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
