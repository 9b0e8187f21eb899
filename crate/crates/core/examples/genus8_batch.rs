// Solve a slice of the genus-8 corpus and write results to a scratch
// directory.

use std::error::Error;
use std::fs;

use zemm::cli::{run_genus8, Genus8Options};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let out = std::env::temp_dir().join(format!("zemm-genus8-example-{}", std::process::id()));
    let mut opts = Genus8Options::new(&out);
    opts.base = Some("G3".into());
    opts.limit = Some(12);
    opts.jobs = 2;
    let summary = run_genus8(&opts)?;
    println!("{}", serde_json::to_string(&summary)?);

    let results = fs::read_to_string(out.join("results.jsonl"))?;
    let first = results.lines().next().ok_or("empty results")?;
    println!("first record: {}…", &first[..first.len().min(100)]);
    assert_eq!(results.lines().count(), 12);
    assert_eq!(summary.found, 12);
    assert_eq!(summary.lattices.get("E8"), Some(&12));

    // A second pass with resume reuses every record.
    opts.resume = true;
    let again = run_genus8(&opts)?;
    assert_eq!(again.reused, 12);
    fs::remove_dir_all(&out)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
