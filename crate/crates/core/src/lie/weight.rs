use std::collections::BTreeSet;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A character of the maximal torus: coefficients over the fundamental weights
/// of the semisimple part (factor-blocked, Bourbaki order) followed by
/// coordinates on the central torus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Weight {
    pub fw: Vec<i64>,
    pub torus: Vec<i64>,
}

impl Weight {
    pub fn new(fw: Vec<i64>, torus: Vec<i64>) -> Self {
        Weight { fw, torus }
    }

    pub fn zero(fw_len: usize, torus_len: usize) -> Self {
        Weight {
            fw: vec![0; fw_len],
            torus: vec![0; torus_len],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.fw.iter().chain(&self.torus).all(|&x| x == 0)
    }

    pub fn fw_is_zero(&self) -> bool {
        self.fw.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            fw: self.fw.iter().map(|x| x * k).collect(),
            torus: self.torus.iter().map(|x| x * k).collect(),
        }
    }

    /// `sum_i coeffs[i] * basis[i]`; `shape` gives the lengths when `basis` is empty.
    pub fn combination(coeffs: &[i64], basis: &[Weight], shape: (usize, usize)) -> Weight {
        let mut out = Weight::zero(shape.0, shape.1);
        for (c, b) in coeffs.iter().zip(basis) {
            for (o, x) in out.fw.iter_mut().zip(&b.fw) {
                *o += c * x;
            }
            for (o, x) in out.torus.iter_mut().zip(&b.torus) {
                *o += c * x;
            }
        }
        out
    }

    /// Concatenated coordinates (fw then torus).
    pub fn coords(&self) -> Vec<i64> {
        self.fw.iter().chain(&self.torus).copied().collect()
    }
}

fn zip_with(a: &Weight, b: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
    assert_eq!(a.fw.len(), b.fw.len(), "weight shape mismatch");
    assert_eq!(a.torus.len(), b.torus.len(), "weight shape mismatch");
    Weight {
        fw: a.fw.iter().zip(&b.fw).map(|(&x, &y)| f(x, y)).collect(),
        torus: a.torus.iter().zip(&b.torus).map(|(&x, &y)| f(x, y)).collect(),
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// A parabolic subgroup, recorded by its marked Dynkin nodes (the simple roots
/// that are not roots of the parabolic).
///
/// Built through [`super::RootSystem::marking`], which validates the nodes and
/// applies the B2 -> C2 relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicMarking {
    /// `(factor, node)` pairs, node 1-based Bourbaki (after normalization).
    nodes: BTreeSet<(usize, usize)>,
    /// Flat mask over the fundamental-weight coordinates.
    mask: Vec<bool>,
}

impl ParabolicMarking {
    pub(crate) fn from_parts(nodes: BTreeSet<(usize, usize)>, mask: Vec<bool>) -> Self {
        ParabolicMarking { nodes, mask }
    }

    pub fn nodes(&self) -> &BTreeSet<(usize, usize)> {
        &self.nodes
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Flat fundamental-weight positions of the marked nodes, ascending.
    pub fn marked_positions(&self) -> Vec<usize> {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect()
    }

    /// Whether `other` marks every node this marking does.
    pub fn is_subset(&self, other: &ParabolicMarking) -> bool {
        self.nodes.is_subset(&other.nodes)
    }
}

/// Result of [`is_dominant`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dominance {
    pub dominant_on_marked: bool,
    pub zero_on_unmarked: bool,
    pub strictly_dominant_on_marked: bool,
}

/// Sign pattern of `w` against the simple coroots, split by marked/unmarked
/// nodes. Torus coordinates never enter.
pub fn is_dominant(w: &Weight, marking: &ParabolicMarking) -> Dominance {
    let mut d = Dominance {
        dominant_on_marked: true,
        zero_on_unmarked: true,
        strictly_dominant_on_marked: true,
    };
    for (&x, &marked) in w.fw.iter().zip(marking.mask()) {
        if marked {
            d.dominant_on_marked &= x >= 0;
            d.strictly_dominant_on_marked &= x > 0;
        } else {
            d.zero_on_unmarked &= x == 0;
        }
    }
    d
}
