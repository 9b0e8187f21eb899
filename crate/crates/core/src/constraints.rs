//! Linear equations on the off-diagonal Gram entries.
//!
//! For a coedge column `c` the requirement `q(c) = 1` reads
//! `1 = sum_i c_i^2 + sum_{i<j} c_i c_j a_ij` once the diagonal is fixed to
//! 2. Identity columns give `1 = 1` and are skipped, as are bridge columns
//! (their coedge is zero and carries no condition). Columns whose equation
//! reduces to `1 = 1` are dropped as well.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::homology::CycleMatrix;
use crate::multigraph::EdgeId;

/// Index pair `(i, j)` with `i < j`, zero-based. Displays one-based, as
/// `a_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pair(pub usize, pub usize);

impl Pair {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j, "diagonal entries are not unknowns");
        Pair(i.min(j), i.max(j))
    }

    /// Position in the lexicographic list of all pairs of a `dim x dim` matrix.
    pub fn index(self, dim: usize) -> usize {
        let Pair(i, j) = self;
        i * (2 * dim - i - 1) / 2 + (j - i - 1)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a_{{{},{}}}", self.0 + 1, self.1 + 1)
    }
}

/// All pairs of a `dim x dim` matrix in lexicographic order.
pub fn all_pairs(dim: usize) -> Vec<Pair> {
    (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| Pair(i, j)))
        .collect()
}

/// `1 = constant + sum coef * a_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearEquation {
    pub constant: i64,
    pub terms: Vec<(Pair, i64)>,
    pub source_edge: EdgeId,
}

impl LinearEquation {
    /// The value the terms must sum to.
    pub fn target(&self) -> i64 {
        1 - self.constant
    }

    pub fn residual(&self, value: impl Fn(Pair) -> i64) -> i64 {
        self.constant + self.terms.iter().map(|&(p, c)| c * value(p)).sum::<i64>() - 1
    }

    /// `{"source_edge", "constant", "terms": [{"i","j","coef"}], "text"}` with
    /// one-based indices.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source_edge": self.source_edge,
            "constant": self.constant,
            "terms": self.terms.iter().map(|(p, c)| serde_json::json!({
                "i": p.0 + 1, "j": p.1 + 1, "coef": c
            })).collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for LinearEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1=")?;
        let mut first = true;
        if self.constant != 0 || self.terms.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for &(p, c) in &self.terms {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}{p}")?;
            } else {
                write!(f, "{sign}{mag}{p}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub dim: usize,
    pub equations: Vec<LinearEquation>,
    pub unknowns: Vec<Pair>,
}

impl ConstraintSystem {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "dim": self.dim,
            "equations": self.equations.iter().map(LinearEquation::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn build_constraints(m: &CycleMatrix, bridges: &BTreeSet<EdgeId>) -> ConstraintSystem {
    let g = m.rows;
    let mut equations = Vec::new();
    for c in g..m.cols {
        let edge = m.col_order[c];
        if bridges.contains(&edge) {
            continue;
        }
        let col = m.column(c);
        let constant = col.iter().map(|x| x * x).sum();
        let mut terms = BTreeMap::new();
        for i in 0..g {
            for j in i + 1..g {
                let coef = col[i] * col[j];
                if coef != 0 {
                    *terms.entry(Pair(i, j)).or_insert(0) += coef;
                }
            }
        }
        terms.retain(|_, c| *c != 0);
        if terms.is_empty() && constant == 1 {
            continue;
        }
        equations.push(LinearEquation {
            constant,
            terms: terms.into_iter().collect(),
            source_edge: edge,
        });
    }
    equations.sort_by_key(|e| e.source_edge);
    ConstraintSystem {
        dim: g,
        equations,
        unknowns: all_pairs(g),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("unsatisfiable at edge {source_edge}: {reason}")]
pub struct Unsat {
    pub source_edge: EdgeId,
    pub reason: String,
}

/// Result of propagation: forced values and the equations that still have
/// free unknowns, reduced by substitution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialAssignment {
    pub fixed: BTreeMap<Pair, i64>,
    pub remaining: Vec<LinearEquation>,
}

/// Compiled form shared by propagation and search: unknowns are indexed by
/// [`Pair::index`], and each equation knows its terms by index.
#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub dim: usize,
    pub pairs: Vec<Pair>,
    pub eqs: Vec<CompiledEq>,
    /// Equations mentioning each unknown.
    pub occurs: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub(crate) struct CompiledEq {
    pub target: i64,
    pub terms: Vec<(usize, i64)>,
    pub source_edge: EdgeId,
}

impl Compiled {
    pub fn new(s: &ConstraintSystem) -> Self {
        let pairs = all_pairs(s.dim);
        let mut occurs = vec![Vec::new(); pairs.len()];
        let eqs = s
            .equations
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let terms: Vec<(usize, i64)> = e.terms.iter().map(|&(p, c)| (p.index(s.dim), c)).collect();
                for &(v, _) in &terms {
                    occurs[v].push(k);
                }
                CompiledEq {
                    target: e.target(),
                    terms,
                    source_edge: e.source_edge,
                }
            })
            .collect();
        Compiled {
            dim: s.dim,
            pairs,
            eqs,
            occurs,
        }
    }

    /// Remaining target and free terms of equation `k` under `values`.
    pub fn reduce(&self, k: usize, values: &[Option<i8>]) -> (i64, Vec<(usize, i64)>) {
        let eq = &self.eqs[k];
        let mut target = eq.target;
        let mut free = Vec::new();
        for &(v, c) in &eq.terms {
            match values[v] {
                Some(x) => target -= c * x as i64,
                None => free.push((v, c)),
            }
        }
        (target, free)
    }

    /// Fixpoint propagation with a work queue of equations. `dirty` seeds the
    /// queue; `None` means all equations. Forced unknowns are written into
    /// `values` and reported through `on_fix`.
    pub fn propagate(
        &self,
        values: &mut [Option<i8>],
        dirty: Option<&[usize]>,
        mut on_fix: impl FnMut(usize),
    ) -> Result<(), Unsat> {
        let mut queued = vec![false; self.eqs.len()];
        let mut queue: VecDeque<usize> = match dirty {
            Some(vars) => vars
                .iter()
                .flat_map(|&v| self.occurs[v].iter().copied())
                .collect(),
            None => (0..self.eqs.len()).collect(),
        };
        for &k in &queue {
            queued[k] = true;
        }
        while let Some(k) = queue.pop_front() {
            queued[k] = false;
            let (target, free) = self.reduce(k, values);
            let slack: i64 = free.iter().map(|(_, c)| c.abs()).sum();
            let fail = |reason: String| Unsat {
                source_edge: self.eqs[k].source_edge,
                reason,
            };
            if free.is_empty() {
                if target != 0 {
                    return Err(fail(format!("constant equation is off by {}", -target)));
                }
                continue;
            }
            if target.abs() > slack {
                return Err(fail(format!(
                    "needs terms summing to {target} but at most {slack} is reachable"
                )));
            }
            let forced: Vec<(usize, i64)> = if free.len() == 1 {
                let (v, c) = free[0];
                if target % c != 0 {
                    return Err(fail(format!("{} forced to non-integer value", self.pairs[v])));
                }
                vec![(v, target / c)]
            } else if target.abs() == slack && free.iter().all(|(_, c)| c.abs() == 1) {
                free.iter().map(|&(v, c)| (v, target.signum() * c)).collect()
            } else {
                continue;
            };
            for (v, x) in forced {
                if x.abs() > 1 {
                    return Err(fail(format!(
                        "{} forced to out-of-range value {x}",
                        self.pairs[v]
                    )));
                }
                values[v] = Some(x as i8);
                on_fix(v);
                for &k2 in &self.occurs[v] {
                    if !queued[k2] {
                        queued[k2] = true;
                        queue.push_back(k2);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fixes every unknown that the equations force on their own and reports
/// contradictions. No guessing happens here.
pub fn propagate(s: &ConstraintSystem) -> Result<PartialAssignment, Unsat> {
    let c = Compiled::new(s);
    let mut values = vec![None; c.pairs.len()];
    c.propagate(&mut values, None, |_| {})?;
    let fixed: BTreeMap<Pair, i64> = values
        .iter()
        .enumerate()
        .filter_map(|(v, x)| x.map(|x| (c.pairs[v], x as i64)))
        .collect();
    let mut remaining = Vec::new();
    for (k, eq) in s.equations.iter().enumerate() {
        let (target, free) = c.reduce(k, &values);
        if free.is_empty() {
            continue;
        }
        remaining.push(LinearEquation {
            constant: 1 - target,
            terms: free.into_iter().map(|(v, coef)| (c.pairs[v], coef)).collect(),
            source_edge: eq.source_edge,
        });
    }
    Ok(PartialAssignment { fixed, remaining })
}
