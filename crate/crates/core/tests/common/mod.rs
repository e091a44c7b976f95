//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's enumeration code.

#![allow(dead_code, clippy::needless_range_loop)]

use horoaut::fan::DemazureRoot;
use horoaut::lie::{DynkinType, SimpleFactor};
use horoaut::{Fan, RootSystemSpec};
use rand::Rng;

/// Weyl dimension from an explicit Euclidean realization:
/// `prod (lambda + rho, a) / (rho, a)` over the given positive roots.
/// `lambda` and `rho` may share any common scale factor.
pub fn euclidean_weyl_dim(positive_roots: &[Vec<i64>], lambda: &[i64], rho: &[i64]) -> u64 {
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in positive_roots {
        let shifted: Vec<i64> = lambda.iter().zip(rho).map(|(x, y)| x + y).collect();
        num *= dot(&shifted, a) as u128;
        den *= dot(rho, a) as u128;
    }
    assert_eq!(num % den, 0, "Weyl quotient must be integral");
    (num / den) as u64
}

/// Euclidean data for a few classical types: positive roots, twice the
/// fundamental weights, and twice rho (Bourbaki realizations).
pub struct Euclidean {
    pub roots: Vec<Vec<i64>>,
    pub fw2: Vec<Vec<i64>>,
    pub rho2: Vec<i64>,
}

impl Euclidean {
    pub fn a2() -> Self {
        // inside R^3; the trace direction pairs to zero with every root
        Euclidean {
            roots: vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]],
            fw2: vec![vec![2, 0, 0], vec![2, 2, 0]],
            rho2: vec![2, 0, -2],
        }
    }

    pub fn c2() -> Self {
        Euclidean {
            roots: vec![vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]],
            fw2: vec![vec![2, 0], vec![2, 2]],
            rho2: vec![4, 2],
        }
    }

    pub fn b3() -> Self {
        Euclidean {
            roots: vec![
                vec![1, -1, 0],
                vec![1, 0, -1],
                vec![0, 1, -1],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
            ],
            fw2: vec![vec![2, 0, 0], vec![2, 2, 0], vec![1, 1, 1]],
            rho2: vec![5, 3, 1],
        }
    }

    pub fn dim(&self, fw: &[i64]) -> u64 {
        let n = self.rho2.len();
        let mut lambda = vec![0i64; n];
        for (c, w) in fw.iter().zip(&self.fw2) {
            for (l, x) in lambda.iter_mut().zip(w) {
                *l += c * x;
            }
        }
        euclidean_weyl_dim(&self.roots, &lambda, &self.rho2)
    }
}

/// Demazure roots straight from the definition, scanning `|m|_inf <= r`.
pub fn scan_roots(fan: &Fan, r: i64) -> Vec<DemazureRoot> {
    let n = fan.dim;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut m = vec![-r; n];
    loop {
        let pairings: Vec<i64> = fan
            .rays
            .iter()
            .map(|ray| ray.iter().zip(&m).map(|(a, b)| a * b).sum())
            .collect();
        let neg: Vec<usize> = (0..pairings.len()).filter(|&i| pairings[i] < 0).collect();
        if neg.len() == 1 && pairings[neg[0]] == -1 {
            out.push(DemazureRoot {
                m: m.clone(),
                ray_index: neg[0],
            });
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            if m[k] < r {
                m[k] += 1;
                break;
            }
            m[k] = -r;
            k += 1;
        }
    }
}

pub fn spec(factors: &[(DynkinType, usize)], torus: usize) -> RootSystemSpec {
    RootSystemSpec::new(
        factors.iter().map(|&(t, r)| SimpleFactor::new(t, r)).collect(),
        torus,
    )
}

/// Every simple type with rank at most 8.
pub fn all_types() -> Vec<(DynkinType, usize)> {
    let mut v = Vec::new();
    for l in 1..=8 {
        v.push((DynkinType::A, l));
    }
    for l in 2..=8 {
        v.push((DynkinType::B, l));
        v.push((DynkinType::C, l));
    }
    for l in 4..=8 {
        v.push((DynkinType::D, l));
    }
    for l in 6..=8 {
        v.push((DynkinType::E, l));
    }
    v.push((DynkinType::F, 4));
    v.push((DynkinType::G, 2));
    v
}

/// Random unimodular matrix as a product of elementary row operations, with
/// its inverse built from the inverse operations.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let id = |n: usize| -> Vec<Vec<i64>> {
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
    };
    let mut u = id(n);
    let mut inv = id(n);
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        // u <- E u with E = I + c e_ij ; inv <- inv E^{-1}
        for col in 0..n {
            u[i][col] += c * u[j][col];
        }
        for row in 0..n {
            inv[row][j] -= c * inv[row][i];
        }
    }
    (u, inv)
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// Random smooth complete fan: star subdivisions of `P^n`.
pub fn random_refinement<R: Rng>(rng: &mut R, n: usize, max_steps: usize) -> Fan {
    let steps = rng.gen_range(0..=max_steps);
    let choices: Vec<usize> = (0..steps).map(|_| rng.gen_range(0..1000)).collect();
    Fan::projective_space(n).refine(&choices)
}
