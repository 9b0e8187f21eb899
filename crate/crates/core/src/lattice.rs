//! Root counts and A/D/E identification of positive definite even lattices.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact;
use crate::search::{is_positive_definite, GramMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeKind {
    A,
    D,
    E,
    Trivial,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeClass {
    pub kind: LatticeKind,
    pub rank: usize,
    pub determinant: i128,
    pub root_count: u64,
}

impl fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LatticeKind::A => write!(f, "A{}", self.rank),
            LatticeKind::D => write!(f, "D{}", self.rank),
            LatticeKind::E => write!(f, "E{}", self.rank),
            LatticeKind::Trivial => write!(f, "trivial"),
            LatticeKind::Other => write!(
                f,
                "other (rank {}, det {}, {} roots)",
                self.rank, self.determinant, self.root_count
            ),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("determinant {0} does not fit in 128 bits")]
    Overflow(String),
}

pub fn determinant(m: &GramMatrix) -> num_bigint::BigInt {
    exact::determinant(m.entries(), m.dim())
}

/// All `x` with `x^T M x = 2`, in enumeration order.
pub fn roots(m: &GramMatrix) -> Result<Vec<Vec<i64>>, LatticeError> {
    let v = exact::short_vectors(m.entries(), m.dim(), 2).ok_or(LatticeError::NotPositiveDefinite)?;
    Ok(v.into_iter().filter(|x| m.quadratic_form(x) == 2).collect())
}

/// Root systems are recognised by `(rank, determinant, root count)`:
/// `A_n = (n, n+1, n(n+1))`, `D_n = (n, 4, 2n(n-1))` for `n >= 4`,
/// `E_6 = (6, 3, 72)`, `E_7 = (7, 2, 126)`, `E_8 = (8, 1, 240)`.
pub fn classify(m: &GramMatrix) -> Result<LatticeClass, LatticeError> {
    if !is_positive_definite(m) {
        return Err(LatticeError::NotPositiveDefinite);
    }
    let rank = m.dim();
    let det = determinant(m);
    let determinant = det
        .to_i128()
        .ok_or_else(|| LatticeError::Overflow(det.to_string()))?;
    let root_count = roots(m)?.len() as u64;
    let n = rank as i128;
    let r = root_count as i128;
    let kind = match (rank, determinant, r) {
        (0, _, _) => LatticeKind::Trivial,
        (_, d, r) if d == n + 1 && r == n * (n + 1) => LatticeKind::A,
        (_, 4, r) if n >= 4 && r == 2 * n * (n - 1) => LatticeKind::D,
        (6, 3, 72) | (7, 2, 126) | (8, 1, 240) => LatticeKind::E,
        _ => LatticeKind::Other,
    };
    Ok(LatticeClass {
        kind,
        rank,
        determinant,
        root_count,
    })
}

/// Cartan matrices of the simply-laced Dynkin diagrams, for tests and
/// examples. `kind` is one of A, D, E.
pub fn cartan(kind: LatticeKind, rank: usize) -> Option<GramMatrix> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match (kind, rank) {
        (LatticeKind::A, n) if n >= 1 => edges.extend((1..n).map(|i| (i - 1, i))),
        (LatticeKind::D, n) if n >= 4 => {
            edges.extend((1..n - 1).map(|i| (i - 1, i)));
            edges.push((n - 3, n - 1));
        }
        (LatticeKind::E, n @ 6..=8) => {
            // chain 0-1-...-(n-2) with node n-1 attached to node 2
            edges.extend((1..n - 1).map(|i| (i - 1, i)));
            edges.push((2, n - 1));
        }
        _ => return None,
    }
    let mut e = vec![0; rank * rank];
    for i in 0..rank {
        e[i * rank + i] = 2;
    }
    for (a, b) in edges {
        e[a * rank + b] = -1;
        e[b * rank + a] = -1;
    }
    Some(GramMatrix::new(rank, e).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> GramMatrix {
        GramMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn small_root_counts() {
        assert_eq!(roots(&m(&[&[2, -1], &[-1, 2]])).unwrap().len(), 6);
        assert_eq!(roots(&m(&[&[2, 0], &[0, 2]])).unwrap().len(), 4);
        assert_eq!(roots(&m(&[&[4]])).unwrap().len(), 0);
    }

    #[test]
    fn cartan_matrices_classify() {
        for n in 1..=8 {
            let c = classify(&cartan(LatticeKind::A, n).unwrap()).unwrap();
            assert_eq!((c.kind, c.determinant), (LatticeKind::A, n as i128 + 1));
        }
        for n in 4..=8 {
            let c = classify(&cartan(LatticeKind::D, n).unwrap()).unwrap();
            assert_eq!((c.kind, c.determinant), (LatticeKind::D, 4));
        }
        let e: Vec<_> = (6..=8)
            .map(|n| classify(&cartan(LatticeKind::E, n).unwrap()).unwrap())
            .map(|c| (c.kind, c.determinant, c.root_count))
            .collect();
        assert_eq!(
            e,
            vec![
                (LatticeKind::E, 3, 72),
                (LatticeKind::E, 2, 126),
                (LatticeKind::E, 1, 240)
            ]
        );
    }

    #[test]
    fn decomposable_is_other() {
        let c = classify(&m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])).unwrap();
        assert_eq!(c.kind, LatticeKind::Other);
        assert_eq!(c.to_string(), "other (rank 3, det 8, 6 roots)");
    }

    #[test]
    fn rank_zero_is_trivial() {
        let c = classify(&GramMatrix::from_rows::<[i64; 0]>(&[]).unwrap()).unwrap();
        assert_eq!(
            (c.kind, c.determinant, c.root_count),
            (LatticeKind::Trivial, 1, 0)
        );
    }

    #[test]
    fn indefinite_is_rejected() {
        assert_eq!(
            classify(&m(&[&[2, 3], &[3, 2]])),
            Err(LatticeError::NotPositiveDefinite)
        );
    }
}
