// Parse a multigraph from edge-list text, inspect it, and write it back.

use std::error::Error;

use zemm::edgelist;

const BARBELL: &str = "\
# two loops joined by a bridge
graph barbell
edge 0 0 0 left
edge 1 0 1 bridge
edge 2 1 1 right
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = edgelist::parse(BARBELL)?;
    println!(
        "{}: {} vertices, {} edges, {} component(s), genus {}",
        g.name(),
        g.vertex_count(),
        g.edge_count(),
        g.component_count(),
        g.genus()
    );
    println!(
        "degrees {:?}, trivalent: {}",
        g.degree_sequence(),
        g.is_trivalent()
    );
    println!("loops {:?}, bridges {:?}", g.loops(), g.bridges());
    for c in g.irreducible_components() {
        println!("irreducible piece with genus {}", c.genus(&g));
    }
    assert_eq!(g.genus(), 2);
    assert_eq!(g.bridges().len(), 1);

    let text = edgelist::write(&g);
    print!("{text}");
    assert_eq!(edgelist::parse(&text)?, g);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
