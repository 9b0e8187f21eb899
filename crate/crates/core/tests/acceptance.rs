//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{
    box_roots, brute_force_zemms, cofactor_det, disjoint_union, random_edge, random_multigraph,
    random_trivalent,
};
use zemm::catalog;
use zemm::cli::{cmd_verify_paper, Format};
use zemm::homology::default_forest;
use zemm::lattice::{cartan, classify, determinant, roots, LatticeKind};
use zemm::search::{solve_all, solve_zemm, verify_zemm, Status};
use zemm::surgery::{genus8_corpus, op_3a, op_a, op_b, op_c};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixtures() -> Outcome {
    let start = Instant::now();
    let entries: Vec<_> = catalog::entries()
        .into_iter()
        .filter(|e| e.gram_fixture.is_some())
        .collect();
    check(entries.len() == 15, || {
        format!("{} graphs carry fixtures", entries.len())
    })?;
    let mut out = Vec::new();
    let code = cmd_verify_paper(&entries, Format::Text, &mut out);
    let text = String::from_utf8_lossy(&out);
    check(code == 0, || format!("verify-paper exited {code}:\n{text}"))?;
    let g = &entries[0];
    let m = zemm::homology::cycle_matrix(&g.graph, &g.forest());
    check(Some(&m) == g.cycle_fixture.as_ref(), || {
        "cycle matrix of G differs".into()
    })?;
    for e in &entries {
        verify_zemm(&e.graph, Some(&e.forest()), e.gram_fixture.as_ref().unwrap())
            .map_err(|err| format!("{}: {err}", e.name))?;
    }
    Ok(format!("15/15 fixtures verified in {:.2?}", start.elapsed()))
}

fn search_reproduction() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for e in catalog::entries()
        .into_iter()
        .filter(|e| e.gram_fixture.is_some())
    {
        let r = solve_zemm(&e.graph, Some(&e.forest()));
        check(r.status == Status::Found, || {
            format!("{}: {:?}", e.name, r.status)
        })?;
        let class = r.lattice.ok_or_else(|| format!("{}: unclassified", e.name))?;
        let want = if e.name == "G" { "E6" } else { "E7" };
        check(class.to_string() == want, || {
            format!("{}: {class}, expected {want}", e.name)
        })?;
        seen.push(format!("{}={class}", e.name));
    }
    Ok(format!(
        "{} graphs solved in {:.2?} ({})",
        seen.len(),
        start.elapsed(),
        seen.join(" ")
    ))
}

fn corpus_count() -> Outcome {
    let start = Instant::now();
    let corpus: Vec<_> = genus8_corpus().collect();
    let elapsed = start.elapsed();
    check(corpus.len() == 2394, || format!("{} graphs", corpus.len()))?;
    let names: BTreeSet<_> = corpus.iter().map(|m| m.name.as_str()).collect();
    check(names.len() == 2394, || "duplicate names".into())?;
    for m in &corpus {
        let g = &m.graph;
        check(
            g.vertex_count() == 14
                && g.edge_count() == 21
                && g.genus() == 8
                && g.is_trivalent()
                && g.bridges().is_empty()
                && g.irreducible_components().len() == 1,
            || format!("{} fails the shape checks", m.name),
        )?;
    }
    Ok(format!(
        "2394 graphs enumerated in {elapsed:.2?}, all 14v/21e/genus 8/trivalent/bridgeless/irreducible"
    ))
}

fn corpus_e8() -> Outcome {
    let start = Instant::now();
    let mut nodes = 0;
    let mut count = 0;
    for m in genus8_corpus() {
        let r = solve_zemm(&m.graph, None);
        check(r.status == Status::Found, || {
            format!("{}: {:?}", m.name, r.status)
        })?;
        let gram = r.gram.as_ref().unwrap();
        verify_zemm(&m.graph, None, gram).map_err(|e| format!("{}: {e}", m.name))?;
        let class = r.lattice.ok_or_else(|| format!("{}: unclassified", m.name))?;
        check(
            class.kind == LatticeKind::E
                && class.rank == 8
                && class.determinant == 1
                && class.root_count == 240,
            || format!("{}: {class}", m.name),
        )?;
        nodes += r.nodes_explored;
        count += 1;
    }
    Ok(format!(
        "{count}/2394 found, all E8 (det 1, 240 roots); {nodes} nodes in {:.2?}",
        start.elapsed()
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut graphs = 0;
    let mut solutions = 0;
    let mut by_genus = [0usize; 5];
    while graphs < 200 {
        let g = random_multigraph(&mut rng, &format!("r{graphs}"), 7, 12);
        if g.genus() > 4 {
            continue;
        }
        let f = default_forest(&g);
        let expected = brute_force_zemms(&g, &f);
        let got: Vec<Vec<Vec<i64>>> = solve_all(&g, Some(&f), None).iter().map(|m| m.rows()).collect();
        let got_set: BTreeSet<_> = got.iter().cloned().collect();
        check(got_set.len() == got.len(), || {
            format!("{}: duplicate solutions", g.name())
        })?;
        check(got_set == expected, || {
            format!(
                "{}: solver {} vs brute force {} solutions\n{}",
                g.name(),
                got_set.len(),
                expected.len(),
                zemm::edgelist::write(&g)
            )
        })?;
        by_genus[g.genus()] += 1;
        solutions += expected.len();
        graphs += 1;
    }
    Ok(format!(
        "200 graphs (by genus {by_genus:?}), {solutions} solutions, sets equal"
    ))
}

fn lattice_oracle() -> Outcome {
    let mut done = Vec::new();
    let cases = (1..=8)
        .map(|n| (LatticeKind::A, n))
        .chain((4..=8).map(|n| (LatticeKind::D, n)))
        .chain((6..=8).map(|n| (LatticeKind::E, n)));
    for (kind, n) in cases {
        let m = cartan(kind, n).ok_or("missing Cartan matrix")?;
        let rows = m.rows();
        let det = determinant(&m);
        check(det == cofactor_det(&rows), || {
            format!("{kind:?}{n}: determinant {det}")
        })?;
        let count = roots(&m).map_err(|e| e.to_string())?.len() as u64;
        let brute = box_roots(&rows);
        check(count == brute, || {
            format!("{kind:?}{n}: {count} roots, box finds {brute}")
        })?;
        let class = classify(&m).map_err(|e| e.to_string())?;
        check(class.kind == kind && class.rank == n, || {
            format!("{kind:?}{n} classified as {class}")
        })?;
        done.push(format!("{class}:{brute}"));
    }
    Ok(format!("{} lattices match ({})", done.len(), done.join(" ")))
}

fn structural() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for op in ["a", "b", "c"] {
        for i in 0..500 {
            let steps = rng.gen_range(0..6);
            let g = random_trivalent(&mut rng, steps);
            let e = random_edge(&mut rng, &g);
            let h = match op {
                "a" => {
                    let mut f = random_edge(&mut rng, &g);
                    while f == e {
                        f = random_edge(&mut rng, &g);
                    }
                    op_a(&g, e, f)
                }
                "b" => op_b(&g, e),
                _ => op_c(&g, e),
            }
            .map_err(|err| format!("op {op} #{i}: {err}"))?;
            check(h.genus() == g.genus() + 1, || {
                format!("op {op} #{i}: genus {} -> {}", g.genus(), h.genus())
            })?;
            check(h.is_trivalent(), || format!("op {op} #{i}: result not trivalent"))?;
        }
    }
    let mut bridges = 0;
    for i in 0..200 {
        let (s1, s2) = (rng.gen_range(0..4), rng.gen_range(0..4));
        let u = disjoint_union(&random_trivalent(&mut rng, s1), &random_trivalent(&mut rng, s2));
        let (ea, eb) = (u.edges()[0].id, u.edges()[u.edge_count() - 1].id);
        let joined = op_a(&u, ea, eb).map_err(|e| e.to_string())?;
        let bridge = joined.next_edge_id();
        let bridge = zemm::multigraph::EdgeId(bridge.0 - 1);
        check(joined.bridges().contains(&bridge), || {
            format!("join #{i}: new edge is not a bridge")
        })?;
        let h = op_3a(&joined, bridge).map_err(|e| format!("3a #{i}: {e}"))?;
        check(h.genus() == joined.genus(), || {
            format!("3a #{i}: genus {} -> {}", joined.genus(), h.genus())
        })?;
        bridges += 1;
    }
    let mut moves = 0;
    for i in 0..500 {
        let g = random_multigraph(&mut rng, "m", 8, 14);
        if g.edge_count() == 0 {
            continue;
        }
        let e = random_edge(&mut rng, &g);
        let (s, _) = g.subdivide(e).map_err(|e| e.to_string())?;
        check(s.genus() == g.genus(), || format!("subdivide #{i} changes genus"))?;
        if !g.edge(e).unwrap().is_loop() {
            let c = g.contract(e).map_err(|e| e.to_string())?;
            check(c.genus() == g.genus(), || format!("contract #{i} changes genus"))?;
        }
        moves += 1;
    }
    Ok(format!(
        "1500 raising ops, {bridges} bridge reductions, {moves} subdivide/contract moves"
    ))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 fixture verification", fixtures),
        ("2 search reproduction", search_reproduction),
        ("3 corpus count", corpus_count),
        ("4 genus-8 corpus is E8", corpus_e8),
        ("5 oracle equivalence", oracle_equivalence),
        ("6 lattice oracle", lattice_oracle),
        ("7 structural properties", structural),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = panic::catch_unwind(f).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
