//! Spanning forests, fundamental cycles and the coedge matrix.
//!
//! Given a spanning forest `T`, every non-tree edge `e_i` closes a unique
//! simple cycle `f_i` with the tree. Writing the `f_i` as rows over all edges
//! gives a `g x n` matrix whose columns are the coedges `e_j*` expressed in
//! the basis `e_1*, ..., e_g*` of `H^1`. Non-tree edges come first, so the
//! leading `g x g` block is the identity.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::multigraph::{EdgeId, Multigraph, UnionFind, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForestError {
    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("edge {0} listed twice")]
    Duplicate(EdgeId),
    #[error("edge {0} is a loop")]
    Loop(EdgeId),
    #[error("edge {0} closes a cycle in the tree")]
    Cycle(EdgeId),
    #[error("tree has {got} edges but a spanning forest needs {need}")]
    NotSpanning { got: usize, need: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningForest {
    pub tree_edge_ids: Vec<EdgeId>,
    pub nontree_edge_ids: Vec<EdgeId>,
}

impl SpanningForest {
    pub fn genus(&self) -> usize {
        self.nontree_edge_ids.len()
    }

    /// Column order of the cycle matrix: non-tree edges, then tree edges.
    pub fn column_order(&self) -> Vec<EdgeId> {
        self.nontree_edge_ids
            .iter()
            .chain(&self.tree_edge_ids)
            .copied()
            .collect()
    }
}

/// Breadth-first forest from the least unvisited vertex, scanning incident
/// edges by ascending id.
pub fn default_forest(g: &Multigraph) -> SpanningForest {
    let mut adj: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); g.vertex_count()];
    for e in g.edges() {
        if !e.is_loop() {
            adj[e.tail.index()].push((e.id, e.head));
            adj[e.head.index()].push((e.id, e.tail));
        }
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut tree = BTreeSet::new();
    for root in g.vertices() {
        if seen[root.index()] {
            continue;
        }
        seen[root.index()] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(eid, w) in &adj[u.index()] {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    tree.insert(eid);
                    queue.push_back(w);
                }
            }
        }
    }
    split(g, tree.into_iter().collect())
}

fn split(g: &Multigraph, tree: Vec<EdgeId>) -> SpanningForest {
    let in_tree: BTreeSet<EdgeId> = tree.iter().copied().collect();
    SpanningForest {
        nontree_edge_ids: g.edge_ids().filter(|id| !in_tree.contains(id)).collect(),
        tree_edge_ids: tree,
    }
}

/// Validates a prescribed tree and keeps its order verbatim. With `None`
/// the [`default_forest`] is used.
pub fn spanning_forest(g: &Multigraph, prescribed: Option<&[EdgeId]>) -> Result<SpanningForest, ForestError> {
    let Some(tree) = prescribed else {
        return Ok(default_forest(g));
    };
    let mut uf = UnionFind::new(g.vertex_count());
    let mut seen = BTreeSet::new();
    for &id in tree {
        let e = g.edge(id).ok_or(ForestError::UnknownEdge(id))?;
        if !seen.insert(id) {
            return Err(ForestError::Duplicate(id));
        }
        if e.is_loop() {
            return Err(ForestError::Loop(id));
        }
        if !uf.union(e.tail.index(), e.head.index()) {
            return Err(ForestError::Cycle(id));
        }
    }
    let need = g.vertex_count() - g.component_count();
    if tree.len() != need {
        return Err(ForestError::NotSpanning {
            got: tree.len(),
            need,
        });
    }
    Ok(split(g, tree.to_vec()))
}

/// Row `i` is the signed edge vector of the fundamental cycle of the `i`-th
/// non-tree edge; column `j` is the coedge of `col_order[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleMatrix {
    pub rows: usize,
    pub cols: usize,
    pub col_order: Vec<EdgeId>,
    /// Row-major.
    pub entries: Vec<i64>,
}

impl CycleMatrix {
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn column_index(&self, edge: EdgeId) -> Option<usize> {
        self.col_order.iter().position(|&e| e == edge)
    }

    /// Coedge of `edge` in the basis of the first `rows` columns.
    pub fn coedge(&self, edge: EdgeId) -> Option<Vec<i64>> {
        self.column_index(edge).map(|c| self.column(c))
    }

    pub fn is_zero_column(&self, c: usize) -> bool {
        (0..self.rows).all(|r| self.get(r, c) == 0)
    }

    /// Builds a matrix from explicit rows, e.g. a transcribed fixture.
    pub fn from_rows(col_order: Vec<EdgeId>, rows: &[Vec<i64>]) -> Self {
        let cols = col_order.len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        CycleMatrix {
            rows: rows.len(),
            cols,
            col_order,
            entries: rows.concat(),
        }
    }
}

struct RootedForest {
    depth: Vec<usize>,
    /// `(parent vertex, edge to parent)`; `None` at roots.
    up: Vec<Option<(VertexId, EdgeId)>>,
}

impl RootedForest {
    fn new(g: &Multigraph, f: &SpanningForest) -> Self {
        let n = g.vertex_count();
        let mut adj: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); n];
        for &id in &f.tree_edge_ids {
            let e = g.edge(id).expect("forest edge in graph");
            adj[e.tail.index()].push((id, e.head));
            adj[e.head.index()].push((id, e.tail));
        }
        let mut depth = vec![usize::MAX; n];
        let mut up = vec![None; n];
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(eid, w) in &adj[u] {
                    if depth[w.index()] == usize::MAX {
                        depth[w.index()] = depth[u] + 1;
                        up[w.index()] = Some((VertexId(u as u32), eid));
                        queue.push_back(w.index());
                    }
                }
            }
        }
        RootedForest { depth, up }
    }

    /// Signed tree edges along the path `from -> to`.
    fn path(&self, g: &Multigraph, from: VertexId, to: VertexId) -> Vec<(EdgeId, i64)> {
        let sign = |eid: EdgeId, a: VertexId| {
            if g.edge(eid).unwrap().tail == a {
                1
            } else {
                -1
            }
        };
        let (mut a, mut b) = (from, to);
        let mut rising = Vec::new();
        let mut falling = Vec::new();
        while a != b {
            if self.depth[a.index()] >= self.depth[b.index()] {
                let (p, eid) = self.up[a.index()].expect("endpoints share a tree");
                rising.push((eid, sign(eid, a)));
                a = p;
            } else {
                let (p, eid) = self.up[b.index()].expect("endpoints share a tree");
                falling.push((eid, sign(eid, p)));
                b = p;
            }
        }
        falling.reverse();
        rising.extend(falling);
        rising
    }
}

pub fn cycle_matrix(g: &Multigraph, f: &SpanningForest) -> CycleMatrix {
    let col_order = f.column_order();
    let cols = col_order.len();
    let col_of = |id: EdgeId| col_order.iter().position(|&c| c == id).unwrap();
    let rooted = RootedForest::new(g, f);
    let mut entries = vec![0i64; f.genus() * cols];
    for (r, &id) in f.nontree_edge_ids.iter().enumerate() {
        let e = g.edge(id).expect("forest edge in graph");
        let row = &mut entries[r * cols..(r + 1) * cols];
        row[r] = 1;
        for (tid, s) in rooted.path(g, e.head, e.tail) {
            row[col_of(tid)] += s;
        }
    }
    CycleMatrix {
        rows: f.genus(),
        cols,
        col_order,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_default_forest() {
        let g = Multigraph::from_edges("triangle", 3, &[(0, 1), (1, 2), (2, 0)]);
        let f = spanning_forest(&g, None).unwrap();
        assert_eq!(f.tree_edge_ids, vec![EdgeId(0), EdgeId(2)]);
        assert_eq!(f.nontree_edge_ids, vec![EdgeId(1)]);
        let m = cycle_matrix(&g, &f);
        // e1 : 1 -> 2, back through 2 -> 0 (e2 forward) and 0 -> 1 (e0 forward)
        assert_eq!(m.col_order, vec![EdgeId(1), EdgeId(0), EdgeId(2)]);
        assert_eq!(m.row(0), &[1, 1, 1]);
    }

    #[test]
    fn single_loop() {
        let g = Multigraph::from_edges("loop", 1, &[(0, 0)]);
        let f = spanning_forest(&g, None).unwrap();
        assert!(f.tree_edge_ids.is_empty());
        let m = cycle_matrix(&g, &f);
        assert_eq!((m.rows, m.cols, m.entries.clone()), (1, 1, vec![1]));
    }

    #[test]
    fn prescribed_forest_validation() {
        let g = Multigraph::from_edges("g", 3, &[(0, 1), (1, 2), (2, 0), (1, 1)]);
        assert_eq!(
            spanning_forest(&g, Some(&[EdgeId(3), EdgeId(0)])),
            Err(ForestError::Loop(EdgeId(3)))
        );
        assert_eq!(
            spanning_forest(&g, Some(&[EdgeId(0), EdgeId(1), EdgeId(2)])),
            Err(ForestError::Cycle(EdgeId(2)))
        );
        assert_eq!(
            spanning_forest(&g, Some(&[EdgeId(0)])),
            Err(ForestError::NotSpanning { got: 1, need: 2 })
        );
        assert_eq!(
            spanning_forest(&g, Some(&[EdgeId(7)])),
            Err(ForestError::UnknownEdge(EdgeId(7)))
        );
        let f = spanning_forest(&g, Some(&[EdgeId(2), EdgeId(1)])).unwrap();
        assert_eq!(f.tree_edge_ids, vec![EdgeId(2), EdgeId(1)]);
        assert_eq!(f.nontree_edge_ids, vec![EdgeId(0), EdgeId(3)]);
    }

    #[test]
    fn bridge_columns_are_zero() {
        let g = Multigraph::from_edges("lollipop", 4, &[(0, 1), (1, 2), (2, 3), (3, 1)]);
        let f = spanning_forest(&g, None).unwrap();
        let m = cycle_matrix(&g, &f);
        let c = m.column_index(EdgeId(0)).unwrap();
        assert!(m.is_zero_column(c));
    }

    #[test]
    fn disconnected_graph_is_block_diagonal() {
        let g = Multigraph::from_edges("two", 4, &[(0, 1), (1, 0), (2, 3), (3, 2)]);
        let f = spanning_forest(&g, None).unwrap();
        let m = cycle_matrix(&g, &f);
        assert_eq!(m.rows, 2);
        assert_eq!(m.row(0), &[1, 0, 1, 0]);
        assert_eq!(m.row(1), &[0, 1, 0, 1]);
    }
}
