// Raise and lower the genus of trivalent graphs by local surgery.

use std::error::Error;

use zemm::catalog;
use zemm::multigraph::EdgeId;
use zemm::surgery::{enumerate_extensions, op_3a, op_3b, op_3c, op_a, op_b, op_c};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k4 = catalog::get("K4").ok_or("K4 missing")?.graph;
    println!("K4: genus {}", k4.genus());

    let a = op_a(&k4, EdgeId(0), EdgeId(5))?;
    let b = op_b(&k4, EdgeId(2))?;
    let c = op_c(&k4, EdgeId(3))?;
    for (name, g) in [("a", &a), ("b", &b), ("c", &c)] {
        println!(
            "op {name}: {} vertices, {} edges, genus {}, trivalent {}",
            g.vertex_count(),
            g.edge_count(),
            g.genus(),
            g.is_trivalent()
        );
        assert_eq!(g.genus(), 4);
    }

    // Undo each step: the new edge of (a), a parallel pair of (b), the loop of (c).
    let new_edge = a.next_edge_id().0 - 1;
    let back = op_3a(&a, EdgeId(new_edge))?;
    let parallel = b
        .edge_ids()
        .find(|&e| b.parallel_edges(e).is_ok_and(|p| !p.is_empty()))
        .ok_or("no pair")?;
    let shrunk = op_3b(&b, parallel)?;
    let looped = c.loops()[0];
    let unlooped = op_3c(&c, looped)?;
    for g in [&back, &shrunk, &unlooped] {
        assert_eq!(g.genus(), 3);
    }
    println!("reductions return to genus {}", back.genus());

    let ext = enumerate_extensions(&k4);
    println!("{} one-step extensions of K4, e.g. {}", ext.len(), ext[0].step);
    assert_eq!(ext.len(), 15 + 6);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
