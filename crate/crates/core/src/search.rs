//! Backtracking search for a zero-energy matrix.
//!
//! Unknowns are the off-diagonal entries `a_ij`, each in `{-1, 0, 1}`. Every
//! guess is followed by propagation, a check of each fully assigned 3x3
//! principal minor it completes, and a check of the leading principal minors
//! over the largest fully assigned leading block.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::constraints::{
    all_pairs, build_constraints, Compiled, ConstraintSystem, LinearEquation, Pair, Unsat,
};
use crate::exact;
use crate::homology::{cycle_matrix, spanning_forest, CycleMatrix, SpanningForest};
use crate::lattice::{classify, LatticeClass};
use crate::multigraph::{EdgeId, Multigraph, UnionFind};

/// Symmetric integer matrix, stored row-major. Serialized as a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    dim: usize,
    entries: Vec<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GramError {
    #[error("expected {expected} entries, got {got}")]
    Size { expected: usize, got: usize },
    #[error("row {row} has {len} entries, expected {dim}")]
    Ragged { row: usize, len: usize, dim: usize },
    #[error("entries ({i},{j}) and ({j},{i}) differ")]
    NotSymmetric { i: usize, j: usize },
}

impl GramMatrix {
    pub fn new(dim: usize, entries: Vec<i64>) -> Result<Self, GramError> {
        if entries.len() != dim * dim {
            return Err(GramError::Size {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(GramError::NotSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(GramMatrix { dim, entries })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, GramError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(GramError::Ragged {
                    row: r + 1,
                    len: row.len(),
                    dim,
                });
            }
            entries.extend_from_slice(row);
        }
        GramMatrix::new(dim, entries)
    }

    /// `2` on the diagonal and the given off-diagonal values.
    pub fn from_pairs(dim: usize, value: impl Fn(Pair) -> i64) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 2;
        }
        for p in all_pairs(dim) {
            let v = value(p);
            entries[p.0 * dim + p.1] = v;
            entries[p.1 * dim + p.0] = v;
        }
        GramMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(<[i64]>::to_vec)
            .take(self.dim)
            .collect()
    }

    /// `x^T M x`.
    pub fn quadratic_form(&self, x: &[i64]) -> i64 {
        let n = self.dim;
        (0..n)
            .map(|i| x[i] * (0..n).map(|j| self.get(i, j) * x[j]).sum::<i64>())
            .sum()
    }

    /// `M'[i][j] = M[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.dim;
        let entries = (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect();
        GramMatrix { dim: n, entries }
    }

    pub fn leading_minors(&self) -> Vec<BigInt> {
        exact::leading_minors(&self.entries, self.dim)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for GramMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GramMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        GramMatrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Sylvester's criterion on exact leading minors.
pub fn is_positive_definite(m: &GramMatrix) -> bool {
    let minors = m.leading_minors();
    minors.len() == m.dim && minors.iter().all(Signed::is_positive)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Found,
    Unsat,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZemmResult {
    pub graph: String,
    pub status: Status,
    pub gram: Option<GramMatrix>,
    pub lattice: Option<LatticeClass>,
    pub nodes_explored: u64,
    pub fixed_by_propagation: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Outcome of the search on a bare constraint system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub gram: Result<GramMatrix, Unsat>,
    pub nodes_explored: u64,
    pub fixed_by_propagation: usize,
}

const VALUE_ORDER: [i8; 3] = [0, 1, -1];

struct Search<'a> {
    c: &'a Compiled,
    /// Pair index of `(i, j)`, either order.
    idx: Vec<usize>,
    /// Unknowns in column-major order: `(0,1), (0,2), (1,2), (0,3), ...`.
    column_major: Vec<usize>,
    nodes: u64,
}

type Values = Vec<Option<i8>>;

impl<'a> Search<'a> {
    fn new(c: &'a Compiled) -> Self {
        let n = c.dim;
        let mut idx = vec![usize::MAX; n * n];
        for (k, p) in c.pairs.iter().enumerate() {
            idx[p.0 * n + p.1] = k;
            idx[p.1 * n + p.0] = k;
        }
        let mut column_major: Vec<usize> = (0..c.pairs.len()).collect();
        column_major.sort_by_key(|&k| (c.pairs[k].1, c.pairs[k].0));
        Search {
            c,
            idx,
            column_major,
            nodes: 0,
        }
    }

    fn value(&self, values: &Values, i: usize, j: usize) -> Option<i64> {
        if i == j {
            Some(2)
        } else {
            values[self.idx[i * self.c.dim + j]].map(i64::from)
        }
    }

    /// Next unknown to branch on. Prefers the equation with the fewest free
    /// unknowns (earliest on ties), taking its negative-coefficient terms
    /// first; otherwise the first free unknown in column-major order.
    fn choose(&self, values: &Values) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for k in 0..self.c.eqs.len() {
            let free = self.c.eqs[k]
                .terms
                .iter()
                .filter(|(v, _)| values[*v].is_none())
                .count();
            if free >= 1 && best.is_none_or(|(_, f)| free < f) {
                best = Some((k, free));
            }
        }
        if let Some((k, _)) = best {
            let mut free: Vec<(usize, i64)> = self.c.eqs[k]
                .terms
                .iter()
                .copied()
                .filter(|(v, _)| values[*v].is_none())
                .collect();
            free.sort_by_key(|&(v, c)| (c > 0, v));
            return Some(free[0].0);
        }
        self.column_major.iter().copied().find(|&v| values[v].is_none())
    }

    /// Local positive-definiteness checks after `fixed` became assigned.
    fn consistent(&self, values: &Values, fixed: &[usize]) -> bool {
        let n = self.c.dim;
        for &v in fixed {
            let Pair(i, j) = self.c.pairs[v];
            let a = values[v].unwrap() as i64;
            if a == 0 {
                continue;
            }
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                if let (Some(b), Some(c)) = (self.value(values, i, k), self.value(values, j, k)) {
                    // det [[2,a,b],[a,2,c],[b,c,2]] = 8 + 2abc - 2(a^2+b^2+c^2)
                    if 8 + 2 * a * b * c - 2 * (a * a + b * b + c * c) <= 0 {
                        return false;
                    }
                }
            }
        }
        let mut block = 0;
        'grow: while block < n {
            for i in 0..block {
                if self.value(values, i, block).is_none() {
                    break 'grow;
                }
            }
            block += 1;
        }
        if block >= 4 {
            let entries: Vec<i64> = (0..block * block)
                .map(|k| self.value(values, k / block, k % block).unwrap())
                .collect();
            let minors = exact::leading_minors(&entries, block);
            if minors.len() < block || !minors.iter().all(Signed::is_positive) {
                return false;
            }
        }
        true
    }

    fn assign(&self, values: &Values, var: usize, x: i8) -> Option<Values> {
        let mut next = values.clone();
        next[var] = Some(x);
        let mut fixed = vec![var];
        self.c
            .propagate(&mut next, Some(&[var]), |v| fixed.push(v))
            .ok()?;
        self.consistent(&next, &fixed).then_some(next)
    }

    /// Depth-first; `emit` returns `false` to stop.
    fn dfs(&mut self, values: &Values, emit: &mut dyn FnMut(&Values) -> bool) -> bool {
        let Some(var) = self.choose(values) else {
            return emit(values);
        };
        for x in VALUE_ORDER {
            self.nodes += 1;
            if let Some(next) = self.assign(values, var, x) {
                if !self.dfs(&next, emit) {
                    return false;
                }
            }
        }
        true
    }

    fn gram(&self, values: &Values) -> GramMatrix {
        GramMatrix::from_pairs(self.c.dim, |p| {
            values[p.index(self.c.dim)].expect("complete assignment") as i64
        })
    }
}

/// Propagates, then returns the root assignment or the contradiction.
fn root(c: &Compiled) -> Result<(Values, usize), Unsat> {
    let mut values = vec![None; c.pairs.len()];
    let mut fixed = 0;
    c.propagate(&mut values, None, |_| fixed += 1)?;
    Ok((values, fixed))
}

fn no_solution(s: &ConstraintSystem) -> Unsat {
    Unsat {
        source_edge: s.equations.first().map_or(EdgeId(0), |e| e.source_edge),
        reason: "search space exhausted".into(),
    }
}

fn solve_block(s: &ConstraintSystem) -> SearchOutcome {
    let c = Compiled::new(s);
    let (values, fixed) = match root(&c) {
        Ok(r) => r,
        Err(u) => {
            return SearchOutcome {
                gram: Err(u),
                nodes_explored: 0,
                fixed_by_propagation: 0,
            }
        }
    };
    let mut search = Search::new(&c);
    let mut found = None;
    search.dfs(&values, &mut |v| {
        found = Some(v.clone());
        false
    });
    SearchOutcome {
        gram: found.map(|v| search.gram(&v)).ok_or_else(|| no_solution(s)),
        nodes_explored: search.nodes,
        fixed_by_propagation: fixed,
    }
}

/// Same answer and node count as [`solve_block`]; the three values of the
/// first branching unknown are searched concurrently.
fn solve_block_parallel(s: &ConstraintSystem) -> SearchOutcome {
    let c = Compiled::new(s);
    let (values, fixed) = match root(&c) {
        Ok(r) => r,
        Err(u) => {
            return SearchOutcome {
                gram: Err(u),
                nodes_explored: 0,
                fixed_by_propagation: 0,
            }
        }
    };
    let probe = Search::new(&c);
    let Some(var) = probe.choose(&values) else {
        return SearchOutcome {
            gram: Ok(probe.gram(&values)),
            nodes_explored: 0,
            fixed_by_propagation: fixed,
        };
    };
    let branches: Vec<(u64, Option<Values>)> = VALUE_ORDER
        .par_iter()
        .map(|&x| {
            let mut search = Search::new(&c);
            search.nodes = 1;
            let mut found = None;
            if let Some(next) = search.assign(&values, var, x) {
                search.dfs(&next, &mut |v| {
                    found = Some(v.clone());
                    false
                });
            }
            (search.nodes, found)
        })
        .collect();
    let mut nodes = 0;
    for (n, found) in branches {
        nodes += n;
        if let Some(v) = found {
            return SearchOutcome {
                gram: Ok(probe.gram(&v)),
                nodes_explored: nodes,
                fixed_by_propagation: fixed,
            };
        }
    }
    SearchOutcome {
        gram: Err(no_solution(s)),
        nodes_explored: nodes,
        fixed_by_propagation: fixed,
    }
}

/// Groups of rows tied together by the equations, each sorted, ordered by
/// their least row.
fn row_blocks(s: &ConstraintSystem) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(s.dim);
    for eq in &s.equations {
        for &(Pair(i, j), _) in &eq.terms {
            uf.union(i, j);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; s.dim];
    for r in 0..s.dim {
        let root = uf.find(r);
        if slot[root] == usize::MAX {
            slot[root] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[root]].push(r);
    }
    blocks
}

/// The equations living on `rows`, renumbered to `0..rows.len()`.
fn restrict(s: &ConstraintSystem, rows: &[usize]) -> ConstraintSystem {
    let mut local = vec![usize::MAX; s.dim];
    for (k, &r) in rows.iter().enumerate() {
        local[r] = k;
    }
    let equations = s
        .equations
        .iter()
        .filter(|eq| {
            eq.terms
                .first()
                .is_some_and(|&(Pair(i, _), _)| local[i] != usize::MAX)
        })
        .map(|eq| LinearEquation {
            terms: eq
                .terms
                .iter()
                .map(|&(Pair(i, j), c)| (Pair::new(local[i], local[j]), c))
                .collect(),
            ..eq.clone()
        })
        .collect();
    ConstraintSystem {
        dim: rows.len(),
        equations,
        unknowns: all_pairs(rows.len()),
    }
}

/// Splits the system into independent row blocks, solves each with `block`
/// and joins the answers with zeros between blocks. A matrix with zero
/// cross-block entries is positive definite iff every diagonal block is, so
/// the system has a solution iff every block does.
fn solve_by_blocks(s: &ConstraintSystem, block: fn(&ConstraintSystem) -> SearchOutcome) -> SearchOutcome {
    let blocks = row_blocks(s);
    if blocks.len() <= 1 {
        return block(s);
    }
    let mut nodes = 0;
    let mut fixed = 0;
    let mut owner = vec![(0, 0); s.dim];
    let mut grams = Vec::with_capacity(blocks.len());
    for (b, rows) in blocks.iter().enumerate() {
        for (k, &r) in rows.iter().enumerate() {
            owner[r] = (b, k);
        }
        let out = block(&restrict(s, rows));
        nodes += out.nodes_explored;
        fixed += out.fixed_by_propagation;
        match out.gram {
            Ok(m) => grams.push(m),
            Err(u) => {
                return SearchOutcome {
                    gram: Err(u),
                    nodes_explored: nodes,
                    fixed_by_propagation: fixed,
                }
            }
        }
    }
    let gram = GramMatrix::from_pairs(s.dim, |Pair(i, j)| {
        let ((bi, li), (bj, lj)) = (owner[i], owner[j]);
        if bi == bj {
            grams[bi].get(li, lj)
        } else {
            0
        }
    });
    SearchOutcome {
        gram: Ok(gram),
        nodes_explored: nodes,
        fixed_by_propagation: fixed,
    }
}

/// First solution in search order. Independent row blocks are searched
/// separately.
pub fn solve_system(s: &ConstraintSystem) -> SearchOutcome {
    solve_by_blocks(s, solve_block)
}

/// Same answer and node count as [`solve_system`], with the three values of
/// the first branching unknown of each block searched concurrently.
pub fn solve_system_parallel(s: &ConstraintSystem) -> SearchOutcome {
    solve_by_blocks(s, solve_block_parallel)
}

/// Every solution, in search order, up to `limit`.
pub fn solve_system_all(s: &ConstraintSystem, limit: Option<usize>) -> Vec<GramMatrix> {
    let c = Compiled::new(s);
    let Ok((values, _)) = root(&c) else {
        return Vec::new();
    };
    let mut search = Search::new(&c);
    let mut out: Vec<Values> = Vec::new();
    if limit == Some(0) {
        return Vec::new();
    }
    search.dfs(&values, &mut |v| {
        out.push(v.clone());
        limit.is_none_or(|l| out.len() < l)
    });
    out.iter().map(|v| search.gram(v)).collect()
}

/// Cycle matrix and constraint system of `g` under the given (or default)
/// forest.
pub fn constraint_system(g: &Multigraph, forest: &SpanningForest) -> (CycleMatrix, ConstraintSystem) {
    let m = cycle_matrix(g, forest);
    let s = build_constraints(&m, &g.bridges());
    (m, s)
}

fn forest_or_default(g: &Multigraph, forest: Option<&SpanningForest>) -> SpanningForest {
    forest
        .cloned()
        .unwrap_or_else(|| spanning_forest(g, None).expect("default forest"))
}

/// Searches for a zero-energy matrix of `g`. Genus 0 is `Trivial`.
pub fn solve_zemm(g: &Multigraph, forest: Option<&SpanningForest>) -> ZemmResult {
    let f = forest_or_default(g, forest);
    let (_, s) = constraint_system(g, &f);
    finish(g, solve_system(&s))
}

pub fn solve_zemm_parallel(g: &Multigraph, forest: Option<&SpanningForest>) -> ZemmResult {
    let f = forest_or_default(g, forest);
    let (_, s) = constraint_system(g, &f);
    finish(g, solve_system_parallel(&s))
}

fn finish(g: &Multigraph, out: SearchOutcome) -> ZemmResult {
    let trivial = g.genus() == 0;
    match out.gram {
        Ok(m) => ZemmResult {
            graph: g.name().to_string(),
            status: if trivial { Status::Trivial } else { Status::Found },
            lattice: classify(&m).ok(),
            gram: Some(m),
            nodes_explored: out.nodes_explored,
            fixed_by_propagation: out.fixed_by_propagation,
            reason: None,
        },
        Err(u) => ZemmResult {
            graph: g.name().to_string(),
            status: Status::Unsat,
            gram: None,
            lattice: None,
            nodes_explored: out.nodes_explored,
            fixed_by_propagation: out.fixed_by_propagation,
            reason: Some(format!("edge {}: {}", u.source_edge, u.reason)),
        },
    }
}

/// Every zero-energy matrix of `g` under the forest, in search order.
pub fn solve_all(g: &Multigraph, forest: Option<&SpanningForest>, limit: Option<usize>) -> Vec<GramMatrix> {
    let f = forest_or_default(g, forest);
    let (_, s) = constraint_system(g, &f);
    solve_system_all(&s, limit)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("matrix is {got}x{got} but the graph has genus {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("diagonal entry ({i},{i}) is {value}, expected 2")]
    Diagonal { i: usize, value: i64 },
    #[error("entry ({i},{j}) is {value}, outside {{-1, 0, 1}}")]
    OffDiagonal { i: usize, j: usize, value: i64 },
    #[error("edge {edge}: coedge has norm {value}, expected 2")]
    EdgeNorm { edge: String, value: i64 },
    #[error("leading minor of order {order} is {value}")]
    NotPositiveDefinite { order: usize, value: String },
}

/// Checks the zero-energy conditions: shape, `q(e*) = 2` for every coedge
/// that is not zero (ascending edge id), and positive definiteness.
pub fn verify_zemm(
    g: &Multigraph,
    forest: Option<&SpanningForest>,
    m: &GramMatrix,
) -> Result<(), VerifyError> {
    let f = forest_or_default(g, forest);
    let cm = cycle_matrix(g, &f);
    if m.dim() != cm.rows {
        return Err(VerifyError::Dimension {
            expected: cm.rows,
            got: m.dim(),
        });
    }
    for i in 0..m.dim() {
        if m.get(i, i) != 2 {
            return Err(VerifyError::Diagonal {
                i: i + 1,
                value: m.get(i, i),
            });
        }
        for j in i + 1..m.dim() {
            if m.get(i, j).abs() > 1 {
                return Err(VerifyError::OffDiagonal {
                    i: i + 1,
                    j: j + 1,
                    value: m.get(i, j),
                });
            }
        }
    }
    for e in g.edges() {
        let c = cm.column_index(e.id).unwrap();
        if cm.is_zero_column(c) {
            continue;
        }
        let value = m.quadratic_form(&cm.column(c));
        if value != 2 {
            return Err(VerifyError::EdgeNorm {
                edge: edge_name(g, e.id),
                value,
            });
        }
    }
    let minors = m.leading_minors();
    if let Some(k) = minors.iter().position(|x| !x.is_positive()) {
        return Err(VerifyError::NotPositiveDefinite {
            order: k + 1,
            value: minors[k].to_string(),
        });
    }
    Ok(())
}

/// `e<label>` when the edge has a label, else `#<id>`.
pub fn edge_name(g: &Multigraph, id: EdgeId) -> String {
    match g.edge(id).and_then(|e| e.label.as_deref()) {
        Some(l) => format!("e{l}"),
        None => format!("#{id}"),
    }
}
