//! Brute-force oracles and random inputs shared by the integration tests.
//! Nothing here calls into the solver or the lattice code.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use zemm::homology::{cycle_matrix, SpanningForest};
use zemm::multigraph::Multigraph;

pub type Matrix = Vec<Vec<i64>>;

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// Symmetric `m` is positive definite iff every pivot of an unpivoted
/// rational LDL^T elimination is positive.
pub fn rational_pd(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a = to_rational(m);
    for k in 0..n {
        if !a[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    true
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Matrix = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Gauss-Jordan inverse over the rationals; `None` if singular.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a = to_rational(m);
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(i64::from(i == j))))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, p);
        inv.swap(k, p);
        let d = a[k][k].clone();
        for j in 0..n {
            a[k][j] = &a[k][j] / &d;
            inv[k][j] = &inv[k][j] / &d;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                    let t = &f * &inv[k][j];
                    inv[i][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Number of integer vectors with `x^T m x == 2`, by scanning the box
/// `|x_i| <= sqrt(2 (m^-1)_ii)` that contains the whole norm-2 ellipsoid.
/// `m` must be positive definite.
pub fn box_roots(m: &[Vec<i64>]) -> u64 {
    let n = m.len();
    let inv = rational_inverse(m).expect("nonsingular");
    let bound: Vec<i64> = (0..n)
        .map(|i| {
            let r = (&inv[i][i] * BigRational::from_integer(2.into()))
                .floor()
                .to_integer();
            let r = r.to_i64().expect("small bound");
            let mut b = 0;
            while (b + 1) * (b + 1) <= r {
                b += 1;
            }
            b
        })
        .collect();
    // Odometer over the box with y = m x kept up to date.
    let mut x: Vec<i64> = bound.iter().map(|b| -b).collect();
    let mut y: Vec<i64> = (0..n).map(|i| (0..n).map(|j| m[i][j] * x[j]).sum()).collect();
    let mut count = 0;
    if n == 0 {
        return 0;
    }
    loop {
        let q: i64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        if q == 2 {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            if x[k] < bound[k] {
                x[k] += 1;
                for i in 0..n {
                    y[i] += m[i][k];
                }
                break;
            }
            let span = 2 * bound[k];
            x[k] = -bound[k];
            for i in 0..n {
                y[i] -= span * m[i][k];
            }
            k += 1;
        }
    }
}

pub fn quad(m: &[Vec<i64>], x: &[i64]) -> i64 {
    let n = m.len();
    (0..n)
        .map(|i| (0..n).map(|j| x[i] * m[i][j] * x[j]).sum::<i64>())
        .sum()
}

/// Every matrix with 2 on the diagonal and off-diagonal entries in
/// `{-1, 0, 1}` that gives each coedge norm 2 and is positive definite.
pub fn brute_force_zemms(g: &Multigraph, forest: &SpanningForest) -> BTreeSet<Matrix> {
    let cm = cycle_matrix(g, forest);
    let n = cm.rows;
    let columns: Vec<Vec<i64>> = (0..cm.cols)
        .map(|c| cm.column(c))
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    let mut digits = vec![0usize; pairs.len()];
    loop {
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (&(i, j), &d) in pairs.iter().zip(&digits) {
            let v = [0, 1, -1][d];
            m[i][j] = v;
            m[j][i] = v;
        }
        if columns.iter().all(|c| quad(&m, c) == 2) && rational_pd(&m) {
            out.insert(m);
        }
        let mut k = 0;
        while k < digits.len() && digits[k] == 2 {
            digits[k] = 0;
            k += 1;
        }
        if k == digits.len() {
            return out;
        }
        digits[k] += 1;
    }
}

/// Random multigraph with loops and parallel edges allowed.
pub fn random_multigraph(
    rng: &mut ChaCha8Rng,
    name: &str,
    max_vertices: usize,
    max_edges: usize,
) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges: Vec<(u32, u32)> = (0..m)
        .map(|_| (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32)))
        .collect();
    Multigraph::from_edges(name, n, &edges)
}

/// Signed boundary of a chain: net flow into each vertex.
pub fn boundary(g: &Multigraph, coeffs: &[(zemm::multigraph::EdgeId, i64)]) -> Vec<i64> {
    let mut b = vec![0; g.vertex_count()];
    for &(id, c) in coeffs {
        let e = g.edge(id).expect("edge");
        b[e.head.index()] += c;
        b[e.tail.index()] -= c;
    }
    b
}

/// Small trivalent seeds: theta, K4, a barbell and the loop-pendant
/// "dumbbell with a handle".
pub fn trivalent_seeds() -> Vec<Multigraph> {
    vec![
        Multigraph::from_edges("theta", 2, &[(0, 1), (0, 1), (1, 0)]),
        Multigraph::from_edges("K4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        Multigraph::from_edges("barbell", 2, &[(0, 0), (0, 1), (1, 1)]),
        Multigraph::from_edges(
            "prism",
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
    ]
}

pub fn random_edge(rng: &mut ChaCha8Rng, g: &Multigraph) -> zemm::multigraph::EdgeId {
    g.edges()[rng.gen_range(0..g.edge_count())].id
}

/// A seed grown by `steps` random surgeries of type (a), (b) or (c).
pub fn random_trivalent(rng: &mut ChaCha8Rng, steps: usize) -> Multigraph {
    use zemm::surgery::{op_a, op_b, op_c};
    let seeds = trivalent_seeds();
    let mut g = seeds[rng.gen_range(0..seeds.len())].clone();
    for _ in 0..steps {
        let e = random_edge(rng, &g);
        g = match rng.gen_range(0..3) {
            0 => {
                let mut f = random_edge(rng, &g);
                while f == e {
                    f = random_edge(rng, &g);
                }
                op_a(&g, e, f).expect("op a")
            }
            1 => op_b(&g, e).expect("op b"),
            _ => op_c(&g, e).expect("op c"),
        };
    }
    g
}

/// Disjoint union; edges of `b` get fresh ids after those of `a`.
pub fn disjoint_union(a: &Multigraph, b: &Multigraph) -> Multigraph {
    let offset = a.vertex_count() as u32;
    let mut pairs: Vec<(u32, u32)> = a.edges().iter().map(|e| (e.tail.0, e.head.0)).collect();
    pairs.extend(b.edges().iter().map(|e| (e.tail.0 + offset, e.head.0 + offset)));
    Multigraph::from_edges("union", a.vertex_count() + b.vertex_count(), &pairs)
}

/// Symmetric edge-multiplicity matrix; loops on the diagonal.
pub fn multiplicities(g: &Multigraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut a = vec![vec![0u32; n]; n];
    for e in g.edges() {
        let (t, h) = (e.tail.index(), e.head.index());
        a[t][h] += 1;
        if t != h {
            a[h][t] += 1;
        }
    }
    a
}

/// Backtracking search for a vertex bijection preserving multiplicities.
pub fn isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    let (a, b) = (multiplicities(g), multiplicities(h));
    let n = a.len();
    if n != b.len() || g.edge_count() != h.edge_count() {
        return false;
    }
    let sig = |m: &Vec<Vec<u32>>, v: usize| {
        let mut row = m[v].clone();
        row.sort_unstable();
        (m[v][v], row)
    };
    let mut sa: Vec<_> = (0..n).map(|v| sig(&a, v)).collect();
    let mut sb: Vec<_> = (0..n).map(|v| sig(&b, v)).collect();
    let (ka, kb) = (sa.clone(), sb.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    fn extend(
        a: &[Vec<u32>],
        b: &[Vec<u32>],
        ka: &[(u32, Vec<u32>)],
        kb: &[(u32, Vec<u32>)],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let v = map.len();
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || ka[v] != kb[w] {
                continue;
            }
            if (0..v).any(|u| a[v][u] != b[w][map[u]]) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(a, b, ka, kb, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(&a, &b, &ka, &kb, &mut Vec::new(), &mut vec![false; n])
}
