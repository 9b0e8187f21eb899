//! Built-in graphs with their prescribed spanning trees and reference
//! matrices.
//!
//! The reference graphs carry edge labels `1..=n`; edge id `k` has label `k+1`,
//! the tree is labels `g+1..=n`, and the reference cycle matrix and Gram
//! matrix are stored alongside. A few small graphs without references round
//! out the set.

mod data;

use serde::Serialize;

use crate::homology::{cycle_matrix, spanning_forest, CycleMatrix, SpanningForest};
use crate::lattice::{classify, LatticeClass, LatticeKind};
use crate::multigraph::{EdgeId, Multigraph, VertexId};
use crate::search::{solve_zemm, verify_zemm, GramMatrix, Status};

pub(crate) struct ReferenceData {
    name: &'static str,
    vertices: u32,
    edges: &'static [(u32, u32)],
    genus: usize,
    cycle_rows: &'static [&'static [i64]],
    gram: &'static [&'static [i64]],
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Multigraph,
    pub tree: Option<Vec<EdgeId>>,
    pub expected_genus: usize,
    pub cycle_fixture: Option<CycleMatrix>,
    pub gram_fixture: Option<GramMatrix>,
    /// One of the genus-7 graphs the genus-8 corpus is grown from.
    pub corpus_base: bool,
    pub notes: String,
}

impl CatalogEntry {
    pub fn forest(&self) -> SpanningForest {
        spanning_forest(&self.graph, self.tree.as_deref()).expect("catalog tree is a spanning forest")
    }
}

fn reference_entry(d: &ReferenceData) -> CatalogEntry {
    let mut g = Multigraph::new(d.name, d.vertices as usize);
    for (k, &(t, h)) in d.edges.iter().enumerate() {
        g.insert_edge(
            EdgeId(k as u32),
            VertexId(t),
            VertexId(h),
            Some((k + 1).to_string()),
        )
        .expect("reference edge");
    }
    let n = d.edges.len();
    let cols: Vec<EdgeId> = (0..n as u32).map(EdgeId).collect();
    let rows: Vec<Vec<i64>> = d.cycle_rows.iter().map(|r| r.to_vec()).collect();
    CatalogEntry {
        name: d.name.to_string(),
        tree: Some(cols[d.genus..].to_vec()),
        expected_genus: d.genus,
        cycle_fixture: Some(CycleMatrix::from_rows(cols, &rows)),
        gram_fixture: Some(GramMatrix::from_rows(d.gram).expect("symmetric fixture")),
        corpus_base: d.genus == 7,
        notes: String::new(),
        graph: g,
    }
}

fn plain(name: &str, vertices: usize, edges: &[(u32, u32)], genus: usize, notes: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        graph: Multigraph::from_edges(name, vertices, edges),
        tree: None,
        expected_genus: genus,
        cycle_fixture: None,
        gram_fixture: None,
        corpus_base: false,
        notes: notes.to_string(),
    }
}

/// Every entry, reference graphs first.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = data::REFERENCE_GRAPHS.iter().map(reference_entry).collect();
    for e in &mut out {
        match e.name.as_str() {
            "G7" => e.notes = "isomorphic to G3".into(),
            "G8" => e.notes = "isomorphic to G4".into(),
            _ => {}
        }
    }
    out.push(plain(
        "E42",
        12,
        data::E42_EDGES,
        8,
        "two disjoint genus-4 halves; drawn without orientations or tree, so the default forest is used; not a corpus base",
    ));
    out.push(plain(
        "K4",
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        3,
        "",
    ));
    let k5: Vec<(u32, u32)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    out.push(plain("K5", 5, &k5, 6, ""));
    let k33: Vec<(u32, u32)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    out.push(plain("K33", 6, &k33, 4, ""));
    out.push(plain("theta", 2, &[(0, 1), (0, 1), (0, 1)], 2, ""));
    out.push(plain("loop", 1, &[(0, 0)], 1, ""));
    out
}

pub fn names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

pub fn get(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// The fourteen genus-7 graphs, in catalog order.
pub fn corpus_bases() -> Vec<CatalogEntry> {
    entries().into_iter().filter(|e| e.corpus_base).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub genus: usize,
    pub genus_ok: bool,
    /// Computed cycle matrix equals the stored one.
    pub cycle_matrix_ok: Option<bool>,
    /// Stored Gram matrix passes `verify_zemm`; the error text otherwise.
    pub gram_fixture: Option<Result<(), String>>,
    /// Class of the stored Gram matrix; expected to be `E` of rank genus.
    pub fixture_lattice: Option<LatticeClass>,
    pub solver_status: Status,
    /// Solver output equals the stored Gram matrix.
    pub solver_matches_fixture: Option<bool>,
    pub lattice: Option<LatticeClass>,
}

impl EntryReport {
    pub fn has_fixtures(&self) -> bool {
        self.gram_fixture.is_some()
    }

    /// The stored Gram matrix classifies as `E` of rank genus.
    pub fn fixture_class_ok(&self) -> Option<bool> {
        self.has_fixtures().then(|| {
            self.fixture_lattice
                .is_some_and(|l| l.kind == LatticeKind::E && l.rank == self.genus)
        })
    }

    /// Genus, cycle matrix and stored Gram matrix all check out, and the
    /// solver finds a matrix.
    pub fn ok(&self) -> bool {
        self.failures().is_empty()
    }

    /// Human-readable list of failed checks.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.genus_ok {
            out.push(format!("genus is {}", self.genus));
        }
        if self.cycle_matrix_ok == Some(false) {
            out.push("cycle matrix differs from the stored one".into());
        }
        if let Some(Err(e)) = &self.gram_fixture {
            out.push(format!("stored Gram matrix rejected: {e}"));
        }
        if self.fixture_class_ok() == Some(false) {
            let class = self
                .fixture_lattice
                .map_or("not positive definite".into(), |l| l.to_string());
            out.push(format!(
                "stored Gram matrix classifies as {class}, expected E{}",
                self.genus
            ));
        }
        if self.solver_status == Status::Unsat {
            out.push("solver found no matrix".into());
        }
        out
    }
}

pub fn verify_entry(e: &CatalogEntry) -> EntryReport {
    let f = e.forest();
    let genus = e.graph.genus();
    let cycle_matrix_ok = e.cycle_fixture.as_ref().map(|m| *m == cycle_matrix(&e.graph, &f));
    let gram_fixture = e
        .gram_fixture
        .as_ref()
        .map(|m| verify_zemm(&e.graph, Some(&f), m).map_err(|err| err.to_string()));
    let r = solve_zemm(&e.graph, Some(&f));
    let fixture_lattice = e.gram_fixture.as_ref().and_then(|m| classify(m).ok());
    EntryReport {
        name: e.name.clone(),
        genus,
        genus_ok: genus == e.expected_genus,
        cycle_matrix_ok,
        gram_fixture,
        fixture_lattice,
        solver_status: r.status,
        solver_matches_fixture: e.gram_fixture.as_ref().map(|m| r.gram.as_ref() == Some(m)),
        lattice: r.lattice,
    }
}

pub fn verify_catalog() -> Vec<EntryReport> {
    entries().iter().map(verify_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let all = entries();
        assert_eq!(all.len(), 21);
        assert_eq!(corpus_bases().len(), 14);
        for e in &all {
            assert_eq!(e.graph.genus(), e.expected_genus, "{}", e.name);
        }
        for e in corpus_bases() {
            assert_eq!((e.graph.vertex_count(), e.graph.edge_count()), (12, 18));
            assert!(e.graph.is_trivalent(), "{}", e.name);
        }
    }

    #[test]
    fn reference_cycle_matrices_match() {
        for e in entries().iter().filter(|e| e.cycle_fixture.is_some()) {
            let m = cycle_matrix(&e.graph, &e.forest());
            assert_eq!(Some(&m), e.cycle_fixture.as_ref(), "{}", e.name);
        }
    }

    #[test]
    fn reference_graphs_are_irreducible() {
        for e in entries()
            .iter()
            .filter(|e| e.gram_fixture.is_some() || e.name == "E42")
        {
            assert!(e.graph.is_trivalent(), "{}", e.name);
            if e.name != "E42" {
                assert!(e.graph.bridges().is_empty(), "{}", e.name);
                assert_eq!(e.graph.irreducible_components().len(), 1, "{}", e.name);
            }
        }
    }

    #[test]
    fn g_fixture_verifies() {
        let e = get("G").unwrap();
        let f = e.forest();
        verify_zemm(&e.graph, Some(&f), e.gram_fixture.as_ref().unwrap()).unwrap();
    }
}
