//! Fans of smooth complete toric varieties and their Demazure roots.

mod catalog;
mod roots;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;

pub use roots::{
    classify_roots, demazure_roots, demazure_roots_bruteforce, demazure_roots_bruteforce_with,
    demazure_roots_with, safe_oracle_radius, toric_aut_report, DemazureRoot, RootPartition,
    ToricAutReport,
};

/// Raw fan data: primitive ray generators in `Z^dim` and maximal cones as
/// sets of 0-based ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fan {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub maximal_cones: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("Malformed: {0}")]
    Malformed(String),
    #[error("NotPrimitiveRay: ray {index} = {ray:?} is not a primitive nonzero vector")]
    NotPrimitiveRay { index: usize, ray: Vec<i64> },
    #[error("NotSmooth: cone {cone:?} does not extend to a lattice basis (determinant {det})")]
    NotSmooth { cone: Vec<usize>, det: String },
    #[error("NotComplete: {0}")]
    NotComplete(String),
    #[error("BadFaceStructure: {0}")]
    BadFaceStructure(String),
}

impl FanError {
    /// The name of the violated invariant.
    pub fn invariant(&self) -> &'static str {
        match self {
            FanError::Malformed(_) => "Malformed",
            FanError::NotPrimitiveRay { .. } => "NotPrimitiveRay",
            FanError::NotSmooth { .. } => "NotSmooth",
            FanError::NotComplete(_) => "NotComplete",
            FanError::BadFaceStructure(_) => "BadFaceStructure",
        }
    }
}

/// A fan certified smooth and complete. Cones are stored with sorted ray
/// indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedFan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

impl ValidatedFan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    /// First maximal cone containing `ray`.
    pub(crate) fn cone_containing(&self, ray: usize) -> &[usize] {
        self.cones
            .iter()
            .find(|c| c.contains(&ray))
            .expect("validated fans use every ray")
    }

    pub fn to_fan(&self) -> Fan {
        Fan {
            dim: self.dim,
            rays: self.rays.clone(),
            maximal_cones: self.cones.clone(),
        }
    }
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, maximal_cones: Vec<Vec<usize>>) -> Self {
        Fan {
            dim,
            rays,
            maximal_cones,
        }
    }

    pub fn validate(&self) -> Result<ValidatedFan, FanError> {
        validate_fan(self)
    }
}

fn cone_matrix(rays: &[Vec<i64>], cone: &[usize]) -> Vec<Vec<i64>> {
    cone.iter().map(|&i| rays[i].clone()).collect()
}

/// gcd of the maximal minors of the `r x n` matrix of the cone's rays; the rays
/// extend to a lattice basis iff it is 1.
fn maximal_minor_gcd(m: &[Vec<i64>], n: usize) -> BigInt {
    linalg::combinations(n, m.len())
        .into_iter()
        .fold(BigInt::zero(), |g, cols| {
            let sub: Vec<Vec<i64>> = m
                .iter()
                .map(|row| cols.iter().map(|&c| row[c]).collect())
                .collect();
            num_integer::Integer::gcd(&g, &linalg::det(&sub))
        })
}

/// Checks every fan invariant: primitive distinct rays, smooth cones,
/// completeness by facet pairing, and a proper face structure.
///
/// Completeness and face structure are decided together: every facet of every
/// maximal cone must be shared by exactly one other maximal cone lying on the
/// opposite side of it, and a generic point must lie in exactly one cone. The
/// first condition makes the cones cover space with a constant multiplicity,
/// the second makes that multiplicity one.
pub fn validate_fan(fan: &Fan) -> Result<ValidatedFan, FanError> {
    let n = fan.dim;
    for (i, ray) in fan.rays.iter().enumerate() {
        if ray.len() != n {
            return Err(FanError::Malformed(format!(
                "ray {i} has {} coordinates, expected {n}",
                ray.len()
            )));
        }
    }
    for (k, cone) in fan.maximal_cones.iter().enumerate() {
        if let Some(&bad) = cone.iter().find(|&&i| i >= fan.rays.len()) {
            return Err(FanError::Malformed(format!(
                "cone {k} refers to missing ray {bad}"
            )));
        }
        let set: BTreeSet<usize> = cone.iter().copied().collect();
        if set.len() != cone.len() {
            return Err(FanError::Malformed(format!("cone {k} repeats a ray")));
        }
    }
    for (i, ray) in fan.rays.iter().enumerate() {
        if linalg::gcd_all(ray) != 1 {
            return Err(FanError::NotPrimitiveRay {
                index: i,
                ray: ray.clone(),
            });
        }
    }
    let mut seen = BTreeMap::new();
    for (i, ray) in fan.rays.iter().enumerate() {
        if let Some(j) = seen.insert(ray.clone(), i) {
            return Err(FanError::BadFaceStructure(format!(
                "rays {j} and {i} coincide"
            )));
        }
    }

    if n == 0 {
        // the point: only the zero cone
        if fan.maximal_cones.len() > 1 || fan.maximal_cones.iter().any(|c| !c.is_empty()) {
            return Err(FanError::BadFaceStructure(
                "a 0-dimensional fan has only the zero cone".into(),
            ));
        }
        return Ok(ValidatedFan {
            dim: 0,
            rays: Vec::new(),
            cones: vec![Vec::new()],
        });
    }
    if fan.maximal_cones.is_empty() {
        return Err(FanError::NotComplete("the fan has no cones".into()));
    }

    let mut cones: Vec<Vec<usize>> = fan
        .maximal_cones
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();

    for cone in &cones {
        let m = cone_matrix(&fan.rays, cone);
        if cone.len() > n || linalg::rank(&m) < cone.len() {
            return Err(FanError::NotSmooth {
                cone: cone.clone(),
                det: "0 (rays are linearly dependent)".into(),
            });
        }
        if cone.len() == n {
            let d = linalg::det(&m);
            if d.abs() != BigInt::from(1) {
                return Err(FanError::NotSmooth {
                    cone: cone.clone(),
                    det: d.to_string(),
                });
            }
        } else if !cone.is_empty() {
            let g = maximal_minor_gcd(&m, n);
            if g != BigInt::from(1) {
                return Err(FanError::NotSmooth {
                    cone: cone.clone(),
                    det: format!("gcd of maximal minors {g}"),
                });
            }
        }
    }
    if let Some(c) = cones.iter().find(|c| c.len() < n) {
        return Err(FanError::NotComplete(format!(
            "maximal cone {c:?} is not full-dimensional"
        )));
    }

    {
        let mut sorted = cones.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(FanError::BadFaceStructure("a maximal cone is listed twice".into()));
        }
    }
    let used: BTreeSet<usize> = cones.iter().flatten().copied().collect();
    if let Some(i) = (0..fan.rays.len()).find(|i| !used.contains(i)) {
        return Err(FanError::BadFaceStructure(format!(
            "ray {i} lies in no maximal cone"
        )));
    }

    // facet -> (cone, opposite ray)
    let mut facets: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for (k, cone) in cones.iter().enumerate() {
        for skip in 0..n {
            let facet: Vec<usize> = cone
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &r)| r)
                .collect();
            facets.entry(facet).or_default().push((k, cone[skip]));
        }
    }
    for (facet, owners) in &facets {
        match owners.as_slice() {
            [_] => {
                return Err(FanError::NotComplete(format!(
                    "facet {facet:?} is uncovered on one side"
                )))
            }
            [(_, a), (_, b)] => {
                let side = |x: usize| {
                    let mut m = cone_matrix(&fan.rays, facet);
                    m.push(fan.rays[x].clone());
                    linalg::det(&m)
                };
                if (side(*a) * side(*b)).is_positive() {
                    return Err(FanError::BadFaceStructure(format!(
                        "cones through facet {facet:?} overlap"
                    )));
                }
            }
            _ => {
                return Err(FanError::BadFaceStructure(format!(
                    "facet {facet:?} is shared by {} maximal cones",
                    owners.len()
                )))
            }
        }
    }

    let hyperplanes: Vec<Vec<Vec<i64>>> = facets.keys().map(|f| cone_matrix(&fan.rays, f)).collect();
    let p = generic_point(n, &hyperplanes);
    let covering = cones
        .iter()
        .filter(|c| interior_contains(&cone_matrix(&fan.rays, c), &p))
        .count();
    if covering != 1 {
        return Err(FanError::BadFaceStructure(format!(
            "a generic point lies in {covering} maximal cones"
        )));
    }

    cones.sort();
    Ok(ValidatedFan {
        dim: n,
        rays: fan.rays.clone(),
        cones,
    })
}

/// A point on the moment curve `(1, t, t^2, ...)` off every facet hyperplane.
/// Each hyperplane meets the curve in at most `n - 1` points, so a good `t`
/// exists among the first `|hyperplanes| * (n - 1) + 1` candidates.
fn generic_point(n: usize, hyperplanes: &[Vec<Vec<i64>>]) -> Vec<i64> {
    let mut t: i64 = 1;
    loop {
        t += 1;
        let p: Vec<i64> = (0..n as u32).map(|k| t.pow(k)).collect();
        let off = hyperplanes.iter().all(|h| {
            let mut m = h.clone();
            m.push(p.clone());
            !linalg::det(&m).is_zero()
        });
        if off {
            return p;
        }
    }
}

/// Whether `p` is a strictly positive combination of the (independent) rows.
fn interior_contains(rows: &[Vec<i64>], p: &[i64]) -> bool {
    let a: Vec<Vec<BigInt>> = linalg::transpose(rows)
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let b: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
    match linalg::solve_cramer(&a, &b) {
        Some((x, _)) => x.iter().all(Signed::is_positive),
        None => false,
    }
}
