//! Genus-changing operations on trivalent graphs and the genus-8 corpus.
//!
//! The raising operations each add one to the genus:
//!
//! * (a) subdivide two edges and join the new midpoints;
//! * (b) put a handle on an edge: two new vertices on it joined by an extra
//!   edge, making a parallel pair;
//! * (c) hang a loop off an edge through a pendant edge.
//!
//! The reductions (3a), (3b), (3c) undo them on a trivalent graph and lower
//! the genus by one, except that (3a) applied to a bridge keeps the genus.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog;
use crate::multigraph::{EdgeId, GraphError, Multigraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SurgeryStep {
    /// (a)
    JoinMidpoints(EdgeId, EdgeId),
    /// (b)
    AddHandle(EdgeId),
    /// (c)
    LoopPendant(EdgeId),
    /// (3a)
    ReduceEdge(EdgeId),
    /// (3b)
    ReduceParallel(EdgeId),
    /// (3c)
    ReduceLoop(EdgeId),
}

impl SurgeryStep {
    pub fn kind(&self) -> &'static str {
        match self {
            SurgeryStep::JoinMidpoints(..) => "a",
            SurgeryStep::AddHandle(_) => "b",
            SurgeryStep::LoopPendant(_) => "c",
            SurgeryStep::ReduceEdge(_) => "3a",
            SurgeryStep::ReduceParallel(_) => "3b",
            SurgeryStep::ReduceLoop(_) => "3c",
        }
    }

    pub fn apply(&self, g: &Multigraph) -> Result<Multigraph, SurgeryError> {
        match *self {
            SurgeryStep::JoinMidpoints(a, b) => op_a(g, a, b),
            SurgeryStep::AddHandle(e) => op_b(g, e),
            SurgeryStep::LoopPendant(e) => op_c(g, e),
            SurgeryStep::ReduceEdge(e) => op_3a(g, e),
            SurgeryStep::ReduceParallel(e) => op_3b(g, e),
            SurgeryStep::ReduceLoop(e) => op_3c(g, e),
        }
    }
}

/// `a_3_7`, `b_5`: kind followed by edge ids.
impl fmt::Display for SurgeryStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryStep::JoinMidpoints(a, b) => write!(f, "a_{a}_{b}"),
            SurgeryStep::AddHandle(e)
            | SurgeryStep::LoopPendant(e)
            | SurgeryStep::ReduceEdge(e)
            | SurgeryStep::ReduceParallel(e)
            | SurgeryStep::ReduceLoop(e) => write!(f, "{}_{e}", self.kind()),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("(a) needs two distinct edges, got {0} twice")]
    SameEdge(EdgeId),
    #[error("({op}) needs a trivalent graph")]
    NotTrivalent { op: &'static str },
    #[error("({op}) expects {expected}, but edge {edge} is not")]
    Shape {
        op: &'static str,
        edge: EdgeId,
        expected: &'static str,
    },
    #[error("({op}) on edge {edge}: vertex {vertex} has no edge left to contract")]
    Stuck {
        op: &'static str,
        edge: EdgeId,
        vertex: VertexId,
    },
}

pub fn op_a(g: &Multigraph, e1: EdgeId, e2: EdgeId) -> Result<Multigraph, SurgeryError> {
    if e1 == e2 {
        return Err(SurgeryError::SameEdge(e1));
    }
    g.edge(e2).ok_or(GraphError::UnknownEdge(e2))?;
    let mut h = g.clone();
    let (_, _, m1) = h.subdivide_in_place(e1)?;
    let (_, _, m2) = h.subdivide_in_place(e2)?;
    h.add_edge(m1, m2, None)?;
    Ok(h)
}

/// `tail -> m1 -> m2 -> head` with a second edge `m1 -> m2`.
pub fn op_b(g: &Multigraph, e: EdgeId) -> Result<Multigraph, SurgeryError> {
    let mut h = g.clone();
    let (_, second, m1) = h.subdivide_in_place(e)?;
    let (_, _, m2) = h.subdivide_in_place(second)?;
    h.add_edge(m1, m2, None)?;
    Ok(h)
}

/// Subdivides `e` at `m`, adds a vertex `v`, an edge `m -> v` and a loop at `v`.
pub fn op_c(g: &Multigraph, e: EdgeId) -> Result<Multigraph, SurgeryError> {
    let mut h = g.clone();
    let (_, _, m) = h.subdivide_in_place(e)?;
    let v = h.add_vertex();
    h.add_edge(m, v, None)?;
    h.add_edge(v, v, None)?;
    Ok(h)
}

fn require_trivalent(g: &Multigraph, op: &'static str) -> Result<(), SurgeryError> {
    if g.is_trivalent() {
        Ok(())
    } else {
        Err(SurgeryError::NotTrivalent { op })
    }
}

/// Least-id non-loop edge at `v` other than those in `skip`.
fn other_edge(g: &Multigraph, v: VertexId, skip: &[EdgeId]) -> Option<EdgeId> {
    g.incident_edges(v)
        .find(|f| !f.is_loop() && !skip.contains(&f.id))
        .map(|f| f.id)
}

/// Deletes a non-loop edge without parallels and smooths both endpoints by
/// contracting the least-id remaining edge at each.
pub fn op_3a(g: &Multigraph, e: EdgeId) -> Result<Multigraph, SurgeryError> {
    require_trivalent(g, "3a")?;
    let edge = g.edge(e).ok_or(GraphError::UnknownEdge(e))?.clone();
    let shape = |expected| SurgeryError::Shape {
        op: "3a",
        edge: e,
        expected,
    };
    if edge.is_loop() {
        return Err(shape("a non-loop edge"));
    }
    if !g.parallel_edges(e)?.is_empty() {
        return Err(shape("an edge without parallels"));
    }
    let stuck = |vertex| SurgeryError::Stuck {
        op: "3a",
        edge: e,
        vertex,
    };
    let c1 = other_edge(g, edge.tail, &[e]).ok_or_else(|| stuck(edge.tail))?;
    let c2 = other_edge(g, edge.head, &[e]).ok_or_else(|| stuck(edge.head))?;
    let mut h = g.clone();
    h.remove_edge(e)?;
    h.contract_in_place(c1)?;
    h.contract_in_place(c2)?;
    Ok(h)
}

/// Deletes `e`, which has a parallel `f` (least id), and contracts the edge
/// other than `f` at each endpoint.
pub fn op_3b(g: &Multigraph, e: EdgeId) -> Result<Multigraph, SurgeryError> {
    require_trivalent(g, "3b")?;
    let edge = g.edge(e).ok_or(GraphError::UnknownEdge(e))?.clone();
    let Some(&f) = g.parallel_edges(e)?.first().filter(|_| !edge.is_loop()) else {
        return Err(SurgeryError::Shape {
            op: "3b",
            edge: e,
            expected: "a non-loop edge with a parallel",
        });
    };
    let stuck = |vertex| SurgeryError::Stuck {
        op: "3b",
        edge: e,
        vertex,
    };
    let c1 = other_edge(g, edge.tail, &[e, f]).ok_or_else(|| stuck(edge.tail))?;
    let c2 = other_edge(g, edge.head, &[e, f]).ok_or_else(|| stuck(edge.head))?;
    let mut h = g.clone();
    h.remove_edge(e)?;
    h.contract_in_place(c1)?;
    if c2 != c1 {
        h.contract_in_place(c2)?;
    }
    Ok(h)
}

/// Deletes the loop `e` at `v` and the edge `f = v w`, leaving `v`
/// isolated, then contracts the least-id remaining edge at `w`.
pub fn op_3c(g: &Multigraph, e: EdgeId) -> Result<Multigraph, SurgeryError> {
    require_trivalent(g, "3c")?;
    let edge = g.edge(e).ok_or(GraphError::UnknownEdge(e))?.clone();
    if !edge.is_loop() {
        return Err(SurgeryError::Shape {
            op: "3c",
            edge: e,
            expected: "a loop",
        });
    }
    let v = edge.tail;
    let stuck = |vertex| SurgeryError::Stuck {
        op: "3c",
        edge: e,
        vertex,
    };
    let f = other_edge(g, v, &[e]).ok_or_else(|| stuck(v))?;
    let w = g.edge(f).unwrap().other(v);
    let c = other_edge(g, w, &[f]).ok_or_else(|| stuck(w))?;
    let mut h = g.clone();
    h.remove_edge(e)?;
    h.remove_edge(f)?;
    h.contract_in_place(c)?;
    Ok(h)
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub step: SurgeryStep,
    pub graph: Multigraph,
}

/// Every (a) on an unordered pair of distinct edges, then every (b), each in
/// ascending id order: `C(n, 2) + n` graphs.
pub fn enumerate_extensions(g: &Multigraph) -> Vec<Extension> {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let pairs = ids.iter().enumerate().flat_map(|(i, &a)| {
        ids[i + 1..]
            .iter()
            .map(move |&b| SurgeryStep::JoinMidpoints(a, b))
    });
    let handles = ids.iter().map(|&e| SurgeryStep::AddHandle(e));
    pairs
        .chain(handles)
        .map(|step| Extension {
            step,
            graph: step.apply(g).expect("edges of g"),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CorpusMember {
    /// `<base>_<step>`, e.g. `F11_a_3_7`.
    pub name: String,
    pub base: String,
    pub step: SurgeryStep,
    pub graph: Multigraph,
}

/// Extensions of every genus-7 catalog graph, base by base in catalog order.
pub fn genus8_corpus() -> impl Iterator<Item = CorpusMember> {
    catalog::corpus_bases().into_iter().flat_map(|base| {
        enumerate_extensions(&base.graph).into_iter().map(move |x| {
            let name = format!("{}_{}", base.name, x.step);
            CorpusMember {
                graph: x.graph.with_name(name.clone()),
                name,
                base: base.name.clone(),
                step: x.step,
            }
        })
    })
}

/// Isomorphism invariant: vertex and edge counts, loops, bridges, sorted
/// degree sequence and the sorted multiset of endpoint-degree pairs.
pub fn invariant_key(g: &Multigraph) -> Vec<usize> {
    let deg = g.degree_sequence();
    let mut sorted_deg = deg.clone();
    sorted_deg.sort_unstable();
    let mut ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (deg[e.tail.index()], deg[e.head.index()]);
            (a.min(b), a.max(b))
        })
        .collect();
    ends.sort_unstable();
    let mut key = vec![
        g.vertex_count(),
        g.edge_count(),
        g.loops().len(),
        g.bridges().len(),
    ];
    key.extend(sorted_deg);
    key.extend(ends.into_iter().flat_map(|(a, b)| [a, b]));
    key
}

/// Keeps the first member of each invariant class. Distinct keys mean
/// non-isomorphic graphs; equal keys do not imply isomorphism.
pub fn dedup_by_invariant(members: impl IntoIterator<Item = CorpusMember>) -> Vec<CorpusMember> {
    let mut seen = BTreeSet::new();
    members
        .into_iter()
        .filter(|m| seen.insert(invariant_key(&m.graph)))
        .collect()
}
