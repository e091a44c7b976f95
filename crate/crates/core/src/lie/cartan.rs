//! Cartan matrices in Bourbaki numbering and positive-root enumeration.
//!
//! Convention: `cartan[i][j] = <alpha_i^vee, alpha_j>`, so column `j` is the
//! simple root `alpha_j` written in fundamental-weight coordinates.

use super::{DynkinType, RootSystemError};

pub(crate) fn check_rank(kind: DynkinType, rank: usize) -> Result<(), RootSystemError> {
    let ok = match kind {
        DynkinType::A => rank >= 1,
        DynkinType::B | DynkinType::C => rank >= 2,
        DynkinType::D => rank >= 4,
        DynkinType::E => (6..=8).contains(&rank),
        DynkinType::F => rank == 4,
        DynkinType::G => rank == 2,
    };
    if ok {
        Ok(())
    } else {
        Err(RootSystemError::InvalidRank { kind, rank })
    }
}

/// Bourbaki Cartan matrix. The rank must already be checked.
pub(crate) fn cartan_matrix(kind: DynkinType, rank: usize) -> Vec<Vec<i64>> {
    let l = rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match kind {
        DynkinType::A => {
            for i in 0..l - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        DynkinType::B => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_l short
            link(l - 2, l - 1, -1, -2);
        }
        DynkinType::C => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_l long
            link(l - 2, l - 1, -2, -1);
        }
        DynkinType::D => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            link(l - 3, l - 1, -1, -1);
        }
        DynkinType::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..l - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        DynkinType::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        DynkinType::G => {
            // alpha_1 short
            link(0, 1, -3, -1);
        }
    }
    a
}

/// Half squared lengths `(alpha_i, alpha_i) / 2` of the simple roots, scaled so
/// the short roots have value 1. `d_i * a_ij` is symmetric.
pub(crate) fn symmetrizer(kind: DynkinType, rank: usize) -> Vec<i64> {
    let l = rank;
    match kind {
        DynkinType::A | DynkinType::D | DynkinType::E => vec![1; l],
        DynkinType::B => (0..l).map(|i| if i + 1 == l { 1 } else { 2 }).collect(),
        DynkinType::C => (0..l).map(|i| if i + 1 == l { 2 } else { 1 }).collect(),
        DynkinType::F => vec![2, 2, 1, 1],
        DynkinType::G => vec![1, 3],
    }
}

/// Positive roots in simple-root coordinates, ordered by height and then
/// lexicographically.
///
/// Height induction: for a positive root `beta` and a simple root `alpha_i`
/// with `beta != alpha_i`, `beta + alpha_i` is a root iff `q - <beta, alpha_i^vee> > 0`
/// where `q` is the largest `k` with `beta - k alpha_i` a root.
pub(crate) fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = cartan.len();
    let mut layers: Vec<Vec<Vec<i64>>> = Vec::new();
    let mut simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    simple.sort();
    layers.push(simple);
    let is_root = |layers: &[Vec<Vec<i64>>], v: &[i64]| -> bool {
        let h: i64 = v.iter().sum();
        if h <= 0 || v.iter().any(|&c| c < 0) {
            return false;
        }
        layers
            .get(h as usize - 1)
            .is_some_and(|layer| layer.binary_search_by(|r| r.as_slice().cmp(v)).is_ok())
    };
    loop {
        let last = layers.last().expect("at least one layer");
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in last {
            for i in 0..l {
                let simple_i = beta.iter().enumerate().all(|(j, &c)| c == i64::from(i == j));
                if simple_i {
                    continue;
                }
                let mut q = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if is_root(&layers, &probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| cartan[i][j] * beta[j]).sum();
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.push(up);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        next.dedup();
        layers.push(next);
    }
    layers.into_iter().flatten().collect()
}

pub(crate) fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    crate::linalg::transpose(a)
}
