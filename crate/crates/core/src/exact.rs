//! Exact integer and rational kernels with an `i64`/`i128` fast path and a
//! big-number fallback on overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// Fraction-free elimination without pivoting. Returns the leading principal
/// minors in order, stopping after the first one that is not positive.
pub(crate) fn leading_minors(a: &[i64], n: usize) -> Vec<BigInt> {
    match minors_i64(a, n) {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None => minors_big(a, n),
    }
}

fn minors_i64(a: &[i64], n: usize) -> Option<Vec<i64>> {
    let mut m = a.to_vec();
    let mut prev = 1i64;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let p = m[k * n + k];
        out.push(p);
        if p <= 0 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = m[i * n + j]
                    .checked_mul(p)?
                    .checked_sub(m[i * n + k].checked_mul(m[k * n + j])?)?;
                m[i * n + j] = x / prev;
            }
        }
        prev = p;
    }
    Some(out)
}

fn minors_big(a: &[i64], n: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let p = m[k * n + k].clone();
        out.push(p.clone());
        if !p.is_positive() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &m[i * n + j] * &p - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = x / &prev;
            }
        }
        prev = p;
    }
    out
}

/// Fraction-free elimination with row pivoting.
pub(crate) fn determinant(a: &[i64], n: usize) -> BigInt {
    match det_i64(a, n) {
        Some(d) => BigInt::from(d),
        None => det_big(a, n),
    }
}

fn det_i64(a: &[i64], n: usize) -> Option<i64> {
    let mut m = a.to_vec();
    let mut prev = 1i64;
    let mut sign = 1i64;
    for k in 0..n {
        if m[k * n + k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return Some(0);
            };
            for c in 0..n {
                m.swap(k * n + c, r * n + c);
            }
            sign = -sign;
        }
        let p = m[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let x = m[i * n + j]
                    .checked_mul(p)?
                    .checked_sub(m[i * n + k].checked_mul(m[k * n + j])?)?;
                m[i * n + j] = x / prev;
            }
        }
        prev = p;
    }
    if n == 0 {
        return Some(1);
    }
    m[n * n - 1].checked_mul(sign)
}

fn det_big(a: &[i64], n: usize) -> BigInt {
    let mut m: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        if m[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, r * n + c);
            }
            negate = !negate;
        }
        let p = m[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &m[i * n + j] * &p - &m[i * n + k] * &m[k * n + j];
                m[i * n + j] = x / &prev;
            }
        }
        prev = p;
    }
    if n == 0 {
        return BigInt::one();
    }
    let d = m[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact ordered field operations; `None` signals overflow.
trait Exact: Clone + Ord + Sized {
    fn int(x: i64) -> Self;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn floor_i64(&self) -> Option<i64>;
    fn is_positive(&self) -> bool;
}

impl Exact for Ratio<i128> {
    fn int(x: i64) -> Self {
        Ratio::from_integer(x as i128)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn floor_i64(&self) -> Option<i64> {
        self.floor().to_integer().to_i64()
    }
    fn is_positive(&self) -> bool {
        *self.numer() > 0
    }
}

impl Exact for BigRational {
    fn int(x: i64) -> Self {
        BigRational::from_integer(x.into())
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn floor_i64(&self) -> Option<i64> {
        self.floor().to_integer().to_i64()
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

/// All nonzero integer vectors `x` with `x^T A x <= bound`, for a positive
/// definite `A`. Returns `None` if `A` is not positive definite. Vectors come
/// out in a fixed order determined by the enumeration.
pub(crate) fn short_vectors(a: &[i64], n: usize, bound: i64) -> Option<Vec<Vec<i64>>> {
    match enumerate::<Ratio<i128>>(a, n, bound) {
        Ok(v) => v,
        Err(Overflow) => enumerate::<BigRational>(a, n, bound).unwrap_or_else(|_| unreachable!()),
    }
}

struct Overflow;

fn ov<T>(x: Option<T>) -> Result<T, Overflow> {
    x.ok_or(Overflow)
}

/// `Ok(None)` means not positive definite.
fn enumerate<F: Exact>(a: &[i64], n: usize, bound: i64) -> Result<Option<Vec<Vec<i64>>>, Overflow> {
    // q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    let mut q: Vec<F> = a.iter().map(|&x| F::int(x)).collect();
    for i in 0..n {
        if !q[i * n + i].is_positive() {
            return Ok(None);
        }
        for j in i + 1..n {
            q[j * n + i] = q[i * n + j].clone();
            q[i * n + j] = ov(q[i * n + j].div(&q[i * n + i]))?;
        }
        for k in i + 1..n {
            for l in k..n {
                let t = ov(q[k * n + i].mul(&q[i * n + l]))?;
                q[k * n + l] = ov(q[k * n + l].sub(&t))?;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    if n > 0 {
        descend(&q, n, n - 1, F::int(bound), &mut x, &mut out)?;
    }
    Ok(Some(out))
}

fn descend<F: Exact>(
    q: &[F],
    n: usize,
    i: usize,
    budget: F,
    x: &mut [i64],
    out: &mut Vec<Vec<i64>>,
) -> Result<(), Overflow> {
    // center c = -sum_{j>i} q[i][j] x_j
    let mut c = F::int(0);
    for j in i + 1..n {
        c = ov(c.sub(&ov(q[i * n + j].mul(&F::int(x[j])))?))?;
    }
    let qii = &q[i * n + i];
    let cost = |v: i64| -> Result<Option<F>, Overflow> {
        let d = ov(F::int(v).sub(&c))?;
        let t = ov(qii.mul(&ov(d.mul(&d))?))?;
        Ok(if t <= budget { Some(t) } else { None })
    };
    let start = ov(c.floor_i64())?;
    let mut candidates = Vec::new();
    let mut v = start;
    while let Some(t) = cost(v)? {
        candidates.push((v, t));
        v -= 1;
    }
    candidates.reverse();
    let mut v = start + 1;
    while let Some(t) = cost(v)? {
        candidates.push((v, t));
        v += 1;
    }
    for (v, t) in candidates {
        x[i] = v;
        if i == 0 {
            if x.iter().any(|&y| y != 0) {
                out.push(x.to_vec());
            }
        } else {
            let rest = ov(budget.sub(&t))?;
            descend(q, n, i - 1, rest, x, out)?;
        }
    }
    x[i] = 0;
    Ok(())
}
