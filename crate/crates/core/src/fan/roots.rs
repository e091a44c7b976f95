//! Demazure roots of a smooth complete fan.
//!
//! For a ray `rho` pick a maximal cone containing it; its rays `u_k` form a
//! lattice basis, so `y_k = <m, u_k>` are integer coordinates on `M`. The
//! roots attached to `rho` are the lattice points of the polytope
//! `y_rho = -1, y_k >= 0 (k != rho), <m, rho'> >= 0` for the rays outside the
//! cone. Completeness makes that polytope bounded; its vertices give a box to
//! scan.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::ValidatedFan;
use crate::linalg;
use crate::par::{self, Execution};

/// A Demazure root `m` with its distinguished ray: `<m, rays[ray_index]> = -1`
/// and `<m, rho'> >= 0` for every other ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DemazureRoot {
    pub m: Vec<i64>,
    pub ray_index: usize,
}

/// Semisimple (`-m` is also a root) and unipotent roots.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPartition {
    pub semisimple: Vec<DemazureRoot>,
    pub unipotent: Vec<DemazureRoot>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricAutReport {
    pub dim_torus: usize,
    pub n_roots: usize,
    pub dim_aut: u64,
    pub n_semisimple: usize,
    pub n_unipotent: usize,
    pub reductive: bool,
}

/// The lattice slice of one ray in basis coordinates.
struct RaySlice {
    /// `m = basis_inv * y`.
    basis_inv: Vec<Vec<i64>>,
    /// Position of the ray inside the basis.
    pos: usize,
    /// Constraints `coeffs . y_free >= rhs` over the free coordinates.
    constraints: Vec<(Vec<i64>, i64)>,
}

impl RaySlice {
    fn new(fan: &ValidatedFan, ray: usize) -> Self {
        let n = fan.dim();
        let cone = fan.cone_containing(ray);
        let basis: Vec<Vec<i64>> = cone.iter().map(|&i| fan.rays()[i].clone()).collect();
        let pos = cone.iter().position(|&i| i == ray).expect("ray is in its cone");
        let basis_inv = linalg::unimodular_inverse(&basis).expect("smooth cone");
        // coordinates of other rays in the basis: c = (basis^T)^{-1} rho' = basis_inv^T rho'
        let inv_t = linalg::transpose(&basis_inv);
        let mut constraints = Vec::new();
        for k in 0..n - 1 {
            let mut e = vec![0; n - 1];
            e[k] = 1;
            constraints.push((e, 0));
        }
        for (i, r) in fan.rays().iter().enumerate() {
            if cone.contains(&i) {
                continue;
            }
            let c = linalg::mat_vec(&inv_t, r);
            let free: Vec<i64> = c
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != pos)
                .map(|(_, &x)| x)
                .collect();
            constraints.push((free, c[pos]));
        }
        RaySlice {
            basis_inv,
            pos,
            constraints,
        }
    }

    fn full_y(&self, free: &[i64]) -> Vec<i64> {
        let mut y = Vec::with_capacity(free.len() + 1);
        y.extend_from_slice(&free[..self.pos]);
        y.push(-1);
        y.extend_from_slice(&free[self.pos..]);
        y
    }

    fn satisfies(&self, free: &[i64]) -> bool {
        self.constraints
            .iter()
            .all(|(c, rhs)| linalg::dot(c, free) >= *rhs)
    }

    /// Rational vertices `(numerators, denominator)` of the free-coordinate
    /// polytope.
    fn vertices(&self) -> Vec<(Vec<BigInt>, BigInt)> {
        let d = self.basis_inv.len() - 1;
        if d == 0 {
            return if self.satisfies(&[]) {
                vec![(Vec::new(), BigInt::from(1))]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        for subset in linalg::combinations(self.constraints.len(), d) {
            let a: Vec<Vec<BigInt>> = subset
                .iter()
                .map(|&i| self.constraints[i].0.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let b: Vec<BigInt> = subset
                .iter()
                .map(|&i| BigInt::from(self.constraints[i].1))
                .collect();
            let Some((num, den)) = linalg::solve_cramer(&a, &b) else {
                continue;
            };
            let feasible = self.constraints.iter().all(|(c, rhs)| {
                let lhs: BigInt = c.iter().zip(&num).map(|(&ci, x)| BigInt::from(ci) * x).sum();
                lhs >= BigInt::from(*rhs) * &den
            });
            if feasible {
                out.push((num, den));
            }
        }
        out
    }

    /// Inclusive upper bounds on each free coordinate, or `None` when the slice
    /// is empty.
    fn box_bounds(vertices: &[(Vec<BigInt>, BigInt)], d: usize) -> Option<Vec<i64>> {
        if vertices.is_empty() {
            return None;
        }
        let mut ub = vec![0i64; d];
        for (num, den) in vertices {
            for (u, x) in ub.iter_mut().zip(num) {
                let f = linalg::floor_div(x, den)
                    .to_i64()
                    .expect("vertex coordinate fits in i64");
                *u = (*u).max(f);
            }
        }
        Some(ub)
    }

    fn roots(&self, ray: usize) -> Vec<DemazureRoot> {
        let d = self.basis_inv.len() - 1;
        let Some(ub) = Self::box_bounds(&self.vertices(), d) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut free = vec![0i64; d];
        loop {
            if self.satisfies(&free) {
                let m = linalg::mat_vec(&self.basis_inv, &self.full_y(&free));
                out.push(DemazureRoot { m, ray_index: ray });
            }
            // odometer over the box
            let mut k = 0;
            loop {
                if k == d {
                    return out;
                }
                if free[k] < ub[k] {
                    free[k] += 1;
                    break;
                }
                free[k] = 0;
                k += 1;
            }
        }
    }

    /// Largest `|m_j|` over the slice's vertices, rounded up.
    fn m_radius(&self) -> u64 {
        let mut best = 0u64;
        for (num, den) in self.vertices() {
            let mut y: Vec<BigInt> = num.clone();
            y.insert(self.pos, -den.clone());
            for row in &self.basis_inv {
                let mj: BigInt = row.iter().zip(&y).map(|(&a, x)| BigInt::from(a) * x).sum();
                let r = linalg::ceil_abs_div(&mj, &den)
                    .to_u64()
                    .expect("radius fits in u64");
                best = best.max(r);
            }
        }
        best
    }
}

/// All Demazure roots of a validated fan, sorted by `m`.
pub fn demazure_roots(fan: &ValidatedFan) -> Vec<DemazureRoot> {
    demazure_roots_with(fan, Execution::default())
}

pub fn demazure_roots_with(fan: &ValidatedFan, exec: Execution) -> Vec<DemazureRoot> {
    if fan.dim() == 0 {
        return Vec::new();
    }
    let mut roots = par::flat_map_range(exec, fan.rays().len(), |ray| {
        RaySlice::new(fan, ray).roots(ray)
    });
    roots.sort();
    roots
}

/// A radius `r` such that every Demazure root satisfies `|m|_inf <= r`,
/// computed from the vertices of the per-ray polytopes.
pub fn safe_oracle_radius(fan: &ValidatedFan) -> u64 {
    if fan.dim() == 0 {
        return 0;
    }
    (0..fan.rays().len())
        .map(|ray| RaySlice::new(fan, ray).m_radius())
        .max()
        .unwrap_or(0)
}

/// Literal scan of the box `|m|_inf <= radius` against the definition of a
/// Demazure root. Test oracle for [`demazure_roots`].
pub fn demazure_roots_bruteforce(fan: &ValidatedFan, radius: u64) -> Vec<DemazureRoot> {
    demazure_roots_bruteforce_with(fan, radius, Execution::default())
}

pub fn demazure_roots_bruteforce_with(
    fan: &ValidatedFan,
    radius: u64,
    exec: Execution,
) -> Vec<DemazureRoot> {
    let n = fan.dim();
    if n == 0 {
        return Vec::new();
    }
    let r = radius as i64;
    let side = (2 * r + 1) as usize;
    let rays = fan.rays();
    let check = |m: &[i64]| -> Option<usize> {
        let mut distinguished = None;
        for (i, ray) in rays.iter().enumerate() {
            let p = linalg::dot(m, ray);
            if p == -1 && distinguished.is_none() {
                distinguished = Some(i);
            } else if p < 0 {
                return None;
            }
        }
        distinguished
    };
    let mut roots = par::flat_map_range(exec, side, |first| {
        let mut found = Vec::new();
        let mut m = vec![-r; n];
        m[0] = first as i64 - r;
        loop {
            if let Some(ray_index) = check(&m) {
                found.push(DemazureRoot {
                    m: m.clone(),
                    ray_index,
                });
            }
            let mut k = 1;
            loop {
                if k == n {
                    return found;
                }
                if m[k] < r {
                    m[k] += 1;
                    break;
                }
                m[k] = -r;
                k += 1;
            }
        }
    });
    roots.sort();
    roots
}

/// Splits roots into semisimple (closed under negation) and unipotent ones.
pub fn classify_roots(roots: &[DemazureRoot]) -> RootPartition {
    let all: HashSet<&[i64]> = roots.iter().map(|r| r.m.as_slice()).collect();
    let mut out = RootPartition::default();
    for r in roots {
        let neg: Vec<i64> = r.m.iter().map(|x| -x).collect();
        if all.contains(neg.as_slice()) {
            out.semisimple.push(r.clone());
        } else {
            out.unipotent.push(r.clone());
        }
    }
    out
}

/// `dim Aut^0 = dim T + |R|`, reductive iff every root is semisimple.
pub fn toric_aut_report(fan: &ValidatedFan) -> ToricAutReport {
    let roots = demazure_roots(fan);
    let part = classify_roots(&roots);
    ToricAutReport {
        dim_torus: fan.dim(),
        n_roots: roots.len(),
        dim_aut: (fan.dim() + roots.len()) as u64,
        n_semisimple: part.semisimple.len(),
        n_unipotent: part.unipotent.len(),
        reductive: part.unipotent.is_empty(),
    }
}
