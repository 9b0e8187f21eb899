//! Directed multigraphs with loops and parallel edges.
//!
//! Vertices are dense ids `0..n`. Edge ids are unique and stable: surgery
//! never reuses an id, and new edges always receive `max_id + 1`. Edges are
//! kept sorted by id, so every traversal in this crate is id-ascending and
//! therefore deterministic.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
    pub label: Option<String>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// The endpoint opposite to `v`. For a loop this is `v` itself.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }

    pub fn is_incident(&self, v: VertexId) -> bool {
        self.tail == v || self.head == v
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(EdgeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    SimpleLoop,
    TwoConnectedLoopless,
}

/// A cohomology-irreducible piece of a graph, given by a subset of the
/// parent's edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    pub kind: ComponentKind,
    pub edge_ids: Vec<EdgeId>,
}

impl IrreducibleComponent {
    /// Components are connected, so the genus is `|E| - |V| + 1`.
    pub fn genus(&self, parent: &Multigraph) -> usize {
        let mut verts = BTreeSet::new();
        for id in &self.edge_ids {
            let e = parent.edge(*id).expect("component edge belongs to parent");
            verts.insert(e.tail);
            verts.insert(e.head);
        }
        self.edge_ids.len() + 1 - verts.len()
    }

    /// The component as a standalone graph. Vertices are renumbered in
    /// ascending order of their parent ids; edge ids and orientations are kept.
    pub fn to_graph(&self, parent: &Multigraph, name: &str) -> Multigraph {
        let mut verts = BTreeSet::new();
        for id in &self.edge_ids {
            let e = parent.edge(*id).expect("component edge belongs to parent");
            verts.insert(e.tail);
            verts.insert(e.head);
        }
        let index: Vec<VertexId> = verts.into_iter().collect();
        let lookup = |v: VertexId| VertexId(index.binary_search(&v).unwrap() as u32);
        let mut g = Multigraph::new(name, index.len());
        for id in &self.edge_ids {
            let e = parent.edge(*id).unwrap();
            g.insert_edge(*id, lookup(e.tail), lookup(e.head), e.label.clone())
                .expect("ids are unique in the parent");
        }
        g
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    name: String,
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new(name: impl Into<String>, vertex_count: usize) -> Self {
        Multigraph {
            name: name.into(),
            vertex_count,
            edges: Vec::new(),
        }
    }

    /// Builds a graph from `(tail, head)` pairs; edge ids follow list order.
    pub fn from_edges(name: impl Into<String>, vertex_count: usize, pairs: &[(u32, u32)]) -> Self {
        let mut g = Multigraph::new(name, vertex_count);
        for &(t, h) in pairs {
            g.add_edge(VertexId(t), VertexId(h), None)
                .expect("endpoints within vertex range");
        }
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count as u32).map(VertexId)
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn contains_edge(&self, id: EdgeId) -> bool {
        self.edge(id).is_some()
    }

    fn require_edge(&self, id: EdgeId) -> Result<&Edge, GraphError> {
        self.edge(id).ok_or(GraphError::UnknownEdge(id))
    }

    /// The id a newly added edge would receive.
    pub fn next_edge_id(&self) -> EdgeId {
        self.edges.last().map_or(EdgeId(0), |e| EdgeId(e.id.0 + 1))
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.vertex_count += 1;
        VertexId(self.vertex_count as u32 - 1)
    }

    pub fn add_edge(
        &mut self,
        tail: VertexId,
        head: VertexId,
        label: Option<String>,
    ) -> Result<EdgeId, GraphError> {
        let id = self.next_edge_id();
        self.insert_edge(id, tail, head, label)?;
        Ok(id)
    }

    /// Inserts an edge with an explicit id, keeping the id order.
    pub fn insert_edge(
        &mut self,
        id: EdgeId,
        tail: VertexId,
        head: VertexId,
        label: Option<String>,
    ) -> Result<(), GraphError> {
        for v in [tail, head] {
            if v.index() >= self.vertex_count {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        match self.edges.binary_search_by_key(&id, |e| e.id) {
            Ok(_) => Err(GraphError::DuplicateEdge(id)),
            Err(pos) => {
                self.edges.insert(
                    pos,
                    Edge {
                        id,
                        tail,
                        head,
                        label,
                    },
                );
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Result<Edge, GraphError> {
        let pos = self
            .edges
            .binary_search_by_key(&id, |e| e.id)
            .map_err(|_| GraphError::UnknownEdge(id))?;
        Ok(self.edges.remove(pos))
    }

    /// Removes a vertex that has no incident edges and shifts higher ids down.
    pub fn remove_isolated_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        if v.index() >= self.vertex_count || self.edges.iter().any(|e| e.is_incident(v)) {
            return Err(GraphError::UnknownVertex(v));
        }
        self.drop_vertex(v);
        Ok(())
    }

    fn drop_vertex(&mut self, v: VertexId) {
        let shift = |u: VertexId| if u > v { VertexId(u.0 - 1) } else { u };
        for e in &mut self.edges {
            e.tail = shift(e.tail);
            e.head = shift(e.head);
        }
        self.vertex_count -= 1;
    }

    /// Edges incident to `v`, id-ascending; a loop appears once.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.is_incident(v))
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            deg[e.tail.index()] += 1;
            deg[e.head.index()] += 1;
        }
        deg
    }

    pub fn is_trivalent(&self) -> bool {
        self.degree_sequence().iter().all(|&d| d == 3)
    }

    /// Connected-component label for each vertex, numbered in order of the
    /// least vertex of each component.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            uf.union(e.tail.index(), e.head.index());
        }
        let mut labels = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if labels[r] == usize::MAX {
                labels[r] = next;
                next += 1;
            }
            labels[v] = labels[r];
        }
        labels
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    /// First Betti number `|E| - |V| + c`.
    pub fn genus(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    pub fn loops(&self) -> Vec<EdgeId> {
        self.edges.iter().filter(|e| e.is_loop()).map(|e| e.id).collect()
    }

    /// Edges sharing both endpoints with `id` (in either orientation).
    pub fn parallel_edges(&self, id: EdgeId) -> Result<Vec<EdgeId>, GraphError> {
        let e = self.require_edge(id)?;
        let key = (e.tail.min(e.head), e.tail.max(e.head));
        Ok(self
            .edges
            .iter()
            .filter(|f| f.id != id && (f.tail.min(f.head), f.tail.max(f.head)) == key)
            .map(|f| f.id)
            .collect())
    }

    fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            if e.is_loop() {
                continue;
            }
            adj[e.tail.index()].push((e.head, e.id));
            adj[e.head.index()].push((e.tail, e.id));
        }
        adj
    }

    /// Edges whose removal disconnects their component. Loops are never
    /// bridges, and a parallel pair protects both of its edges.
    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        let adj = self.adjacency();
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut out = BTreeSet::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, edge used to enter it, next adjacency index)
            let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (u, parent_edge, ref mut next)) = stack.last_mut() {
                if *next < adj[u].len() {
                    let (w, eid) = adj[u][*next];
                    *next += 1;
                    if Some(eid) == parent_edge {
                        continue;
                    }
                    let w = w.index();
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(eid), 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.insert(parent_edge.unwrap());
                        }
                    }
                }
            }
        }
        out
    }

    /// Splits the graph into cohomology-irreducible pieces: every loop is
    /// its own component, bridges belong to none, and the remaining edges
    /// are grouped into biconnected blocks.
    pub fn irreducible_components(&self) -> Vec<IrreducibleComponent> {
        let bridges = self.bridges();
        let mut comps = Vec::new();
        for e in &self.edges {
            if e.is_loop() {
                comps.push(IrreducibleComponent {
                    kind: ComponentKind::SimpleLoop,
                    edge_ids: vec![e.id],
                });
            }
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            if e.is_loop() || bridges.contains(&e.id) {
                continue;
            }
            adj[e.tail.index()].push((e.head.index(), e.id));
            adj[e.head.index()].push((e.tail.index(), e.id));
        }
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<EdgeId> = Vec::new();
        let mut seen_edge = BTreeSet::new();
        for root in 0..n {
            if disc[root] != usize::MAX || adj[root].is_empty() {
                continue;
            }
            let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (u, parent_edge, ref mut next)) = stack.last_mut() {
                if *next < adj[u].len() {
                    let (w, eid) = adj[u][*next];
                    *next += 1;
                    if Some(eid) == parent_edge {
                        continue;
                    }
                    if seen_edge.insert(eid) {
                        edge_stack.push(eid);
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(eid), 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let entering = parent_edge.unwrap();
                            let mut block = Vec::new();
                            while let Some(top) = edge_stack.pop() {
                                block.push(top);
                                if top == entering {
                                    break;
                                }
                            }
                            block.sort();
                            comps.push(IrreducibleComponent {
                                kind: ComponentKind::TwoConnectedLoopless,
                                edge_ids: block,
                            });
                        }
                    }
                }
            }
        }
        comps.sort_by(|a, b| a.edge_ids[0].cmp(&b.edge_ids[0]));
        comps
    }

    /// Replaces `id` by a path `tail -> m -> head` through a fresh vertex `m`.
    /// The halves get the two next fresh edge ids, tail side first.
    pub fn subdivide(&self, id: EdgeId) -> Result<(Multigraph, VertexId), GraphError> {
        let mut g = self.clone();
        let (_, _, m) = g.subdivide_in_place(id)?;
        Ok((g, m))
    }

    pub(crate) fn subdivide_in_place(
        &mut self,
        id: EdgeId,
    ) -> Result<(EdgeId, EdgeId, VertexId), GraphError> {
        let fresh = self.next_edge_id().0;
        let e = self.remove_edge(id)?;
        let m = self.add_vertex();
        let half = |suffix: &str| e.label.as_ref().map(|l| format!("{l}.{suffix}"));
        let (first, second) = (EdgeId(fresh), EdgeId(fresh + 1));
        self.insert_edge(first, e.tail, m, half("0"))?;
        self.insert_edge(second, m, e.head, half("1"))?;
        Ok((first, second, m))
    }

    /// Contracts a non-loop edge, merging its endpoints into the smaller
    /// vertex id. Parallel edges and loops that arise are kept.
    pub fn contract(&self, id: EdgeId) -> Result<Multigraph, GraphError> {
        let mut g = self.clone();
        g.contract_in_place(id)?;
        Ok(g)
    }

    pub(crate) fn contract_in_place(&mut self, id: EdgeId) -> Result<VertexId, GraphError> {
        let e = self.require_edge(id)?.clone();
        if e.is_loop() {
            return Err(GraphError::ContractLoop(id));
        }
        self.remove_edge(id)?;
        let keep = e.tail.min(e.head);
        let gone = e.tail.max(e.head);
        for f in &mut self.edges {
            if f.tail == gone {
                f.tail = keep;
            }
            if f.head == gone {
                f.head = keep;
            }
        }
        self.drop_vertex(gone);
        Ok(keep)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}
