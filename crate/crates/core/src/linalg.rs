//! Small exact integer linear algebra helpers.
//!
//! Matrices here are tiny (fan dimension, Dynkin rank), so everything is done
//! with `BigInt` and fraction-free elimination.

#![allow(clippy::needless_range_loop)]
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) type Matrix = Vec<Vec<i64>>;

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant via Bareiss elimination. The empty matrix has determinant 1.
pub(crate) fn det(m: &[Vec<i64>]) -> BigInt {
    det_big(to_big(m))
}

pub(crate) fn det_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Rank of an integer matrix (rows are vectors).
pub(crate) fn rank(m: &[Vec<i64>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut a = to_big(m);
    let rows = a.len();
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let (f, g) = (a[r][c].clone(), a[i][c].clone());
            for j in c..cols {
                let v = &a[i][j] * &f - &a[r][j] * &g;
                a[i][j] = v;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solves `a x = b` by Cramer's rule. Returns `(numerators, denominator)` with
/// a positive denominator, or `None` when `a` is singular.
pub(crate) fn solve_cramer(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    let d = det_big(a.to_vec());
    if d.is_zero() {
        return None;
    }
    let mut nums = Vec::with_capacity(n);
    for col in 0..n {
        let mut m = a.to_vec();
        for (row, rhs) in m.iter_mut().zip(b) {
            row[col] = rhs.clone();
        }
        nums.push(det_big(m));
    }
    if d.is_negative() {
        Some((nums.into_iter().map(|x| -x).collect(), -d))
    } else {
        Some((nums, d))
    }
}

/// Inverse of a unimodular matrix (determinant ±1), via the adjugate.
pub(crate) fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Matrix> {
    let n = m.len();
    let d = det(m);
    let d = d.to_i64()?;
    if d.abs() != 1 {
        return None;
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Matrix = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let cof = det(&minor).to_i64()?;
            let cof = if (i + j) % 2 == 0 { cof } else { -cof };
            // adj(M)[j][i] = cofactor(i, j)
            inv[j][i] = cof * d;
        }
    }
    Some(inv)
}

pub(crate) fn transpose(m: &[Vec<i64>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub(crate) fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// All `r`-element subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Floor of `num / den` for a positive denominator.
pub(crate) fn floor_div(num: &BigInt, den: &BigInt) -> BigInt {
    num.div_floor(den)
}

/// Ceiling of `|num| / den` for a positive denominator.
pub(crate) fn ceil_abs_div(num: &BigInt, den: &BigInt) -> BigInt {
    num.abs().div_ceil(den)
}
