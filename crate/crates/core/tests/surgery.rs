mod common;

use common::isomorphic;
use zemm::catalog;
use zemm::multigraph::{EdgeId, Multigraph};
use zemm::surgery::{enumerate_extensions, op_3a, op_3b, op_3c, op_b, op_c, SurgeryError, SurgeryStep};

/// Representatives of the isomorphism classes among `graphs`, with the
/// first step producing each.
fn classes(graphs: impl IntoIterator<Item = (SurgeryStep, Multigraph)>) -> Vec<(SurgeryStep, Multigraph)> {
    let mut reps: Vec<(SurgeryStep, Multigraph)> = Vec::new();
    for (step, g) in graphs {
        if !reps.iter().any(|(_, r)| isomorphic(r, &g)) {
            reps.push((step, g));
        }
    }
    reps
}

#[test]
fn extensions_of_g_are_the_ten_genus7_graphs() {
    let g = catalog::get("G").unwrap().graph;
    let ext = enumerate_extensions(&g);
    assert_eq!(ext.len(), 105 + 15);
    let joins = classes(
        ext.iter()
            .filter(|e| e.step.kind() == "a")
            .map(|e| (e.step, e.graph.clone())),
    );
    let handles = classes(
        ext.iter()
            .filter(|e| e.step.kind() == "b")
            .map(|e| (e.step, e.graph.clone())),
    );
    let named: Vec<(String, Multigraph)> = (1..=10)
        .map(|i| format!("G{i}"))
        .map(|n| (n.clone(), catalog::get(&n).unwrap().graph))
        .collect();
    let names_of = |g: &Multigraph| -> Vec<String> {
        named
            .iter()
            .filter(|(_, h)| isomorphic(g, h))
            .map(|(n, _)| n.clone())
            .collect()
    };
    let mut from_joins: Vec<Vec<String>> = joins.iter().map(|(_, g)| names_of(g)).collect();
    let mut from_handles: Vec<Vec<String>> = handles.iter().map(|(_, g)| names_of(g)).collect();
    from_joins.sort();
    from_handles.sort();
    // Six classes from (a): the drawn G7 and G8 repeat G3 and G4.
    let expect = |v: &[&[&str]]| -> Vec<Vec<String>> {
        v.iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect()
    };
    assert_eq!(
        from_joins,
        expect(&[&["G1"], &["G2"], &["G3", "G7"], &["G4", "G8"], &["G5"], &["G6"]])
    );
    assert_eq!(from_handles, expect(&[&["G10"], &["G9"]]));
}

#[test]
fn genus7_catalog_has_two_repeated_classes() {
    let genus7: Vec<_> = catalog::corpus_bases();
    for (i, a) in genus7.iter().enumerate() {
        for b in &genus7[i..] {
            let same = a.name == b.name
                || [("G3", "G7"), ("G4", "G8")].contains(&(a.name.as_str(), b.name.as_str()));
            assert_eq!(isomorphic(&a.graph, &b.graph), same, "{} {}", a.name, b.name);
        }
    }
}

#[test]
fn reductions_undo_their_extension() {
    let k4 = catalog::get("K4").unwrap().graph;
    for e in k4.edge_ids() {
        let b = op_b(&k4, e).unwrap();
        let handle = EdgeId(b.next_edge_id().0 - 1);
        assert!(isomorphic(&op_3b(&b, handle).unwrap(), &k4));
        let c = op_c(&k4, e).unwrap();
        let lp = *c.loops().first().unwrap();
        let mut back = op_3c(&c, lp).unwrap();
        assert_eq!(back.degree_sequence().iter().filter(|&&d| d == 0).count(), 1);
        let isolated = back.vertices().find(|&v| back.degree(v) == 0).unwrap();
        back.remove_isolated_vertex(isolated).unwrap();
        assert!(isomorphic(&back, &k4));
    }
    for x in enumerate_extensions(&k4)
        .into_iter()
        .filter(|x| x.step.kind() == "a")
    {
        let join = EdgeId(x.graph.next_edge_id().0 - 1);
        assert!(isomorphic(&op_3a(&x.graph, join).unwrap(), &k4), "{}", x.step);
    }
}

#[test]
fn reductions_reject_wrong_shapes() {
    let theta = catalog::get("theta").unwrap().graph;
    assert!(matches!(
        op_3a(&theta, EdgeId(0)),
        Err(SurgeryError::Shape { .. })
    ));
    assert!(matches!(
        op_3c(&theta, EdgeId(0)),
        Err(SurgeryError::Shape { .. })
    ));
    let path = Multigraph::from_edges("path", 3, &[(0, 1), (1, 2)]);
    assert!(matches!(
        op_3a(&path, EdgeId(0)),
        Err(SurgeryError::NotTrivalent { .. })
    ));
    let barbell = Multigraph::from_edges("barbell", 2, &[(0, 0), (0, 1), (1, 1)]);
    assert!(matches!(
        op_3a(&barbell, EdgeId(1)),
        Err(SurgeryError::Stuck { .. })
    ));
}

#[test]
fn corpus_names_follow_steps() {
    let first: Vec<String> = zemm::surgery::genus8_corpus().take(3).map(|m| m.name).collect();
    assert_eq!(first, ["F11_a_0_1", "F11_a_0_2", "F11_a_0_3"]);
    let last = zemm::surgery::genus8_corpus().last().unwrap();
    assert_eq!(last.name, "G10_b_17");
}
