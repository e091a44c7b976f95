//! Root systems of reductive groups: positive (co)roots, coroot pairings, the
//! Weyl dimension formula, and the homogeneous-space data used downstream.

mod cartan;
mod homogeneous;
mod weight;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use homogeneous::{
    anticanonical_character, aut_dim_homogeneous, fano_index, line_bundle_positivity,
    HomogeneousAut, Positivity,
};
pub use weight::{is_dominant, Dominance, ParabolicMarking, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpleFactor {
    #[serde(rename = "type")]
    pub kind: DynkinType,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(kind: DynkinType, rank: usize) -> Self {
        SimpleFactor { kind, rank }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// A connected reductive group, up to isogeny: simple factors plus the rank
/// of the central torus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootSystemSpec {
    pub simple_factors: Vec<SimpleFactor>,
    #[serde(default)]
    pub torus_rank: usize,
}

impl RootSystemSpec {
    pub fn new(simple_factors: Vec<SimpleFactor>, torus_rank: usize) -> Self {
        RootSystemSpec {
            simple_factors,
            torus_rank,
        }
    }

    pub fn torus(rank: usize) -> Self {
        RootSystemSpec::new(Vec::new(), rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("InvalidRank: type {kind} does not exist in rank {rank}")]
    InvalidRank { kind: DynkinType, rank: usize },
    #[error("InvalidNode: factor {factor} has no node {node}")]
    InvalidNode { factor: usize, node: usize },
    #[error("DuplicateNode: node {node} of factor {factor} marked twice")]
    DuplicateNode { factor: usize, node: usize },
    #[error("DimensionMismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("NotDominant: weight has negative coefficient {value} at position {position}")]
    NotDominant { position: usize, value: i64 },
    #[error("NotACharacterOfP: nonzero coefficient at unmarked node {node} of factor {factor}")]
    NotACharacterOfP { factor: usize, node: usize },
    #[error("Overflow: dimension does not fit in 64 bits")]
    Overflow,
}

/// Tables for one simple factor.
#[derive(Clone, Debug)]
pub struct FactorTables {
    /// The factor as given by the caller (may be B2).
    pub input: SimpleFactor,
    /// The factor actually used (B2 becomes C2).
    pub kind: DynkinType,
    pub rank: usize,
    /// Position of this factor's first coordinate in the flat fw vector.
    pub offset: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates.
    pub positive_coroots: Vec<Vec<i64>>,
    /// `short_roots[k]` is true when `positive_roots[k]` is short.
    pub short_roots: Vec<bool>,
    /// Short flags of the simple roots.
    pub simple_short: Vec<bool>,
}

impl FactorTables {
    fn build(input: SimpleFactor, offset: usize) -> Result<Self, RootSystemError> {
        cartan::check_rank(input.kind, input.rank)?;
        let kind = if input.kind == DynkinType::B && input.rank == 2 {
            DynkinType::C
        } else {
            input.kind
        };
        let rank = input.rank;
        let cartan = cartan::cartan_matrix(kind, rank);
        let d = cartan::symmetrizer(kind, rank);
        let positive_roots = cartan::positive_roots(&cartan);
        let positive_coroots = cartan::positive_roots(&cartan::transpose(&cartan));
        let norm = |c: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..rank {
                for j in 0..rank {
                    s += c[i] * c[j] * d[i] * cartan[i][j];
                }
            }
            s
        };
        let norms: Vec<i64> = positive_roots.iter().map(|r| norm(r)).collect();
        let longest = norms.iter().copied().max().unwrap_or(0);
        let short_roots = norms.iter().map(|&n| n < longest).collect();
        let dmax = d.iter().copied().max().unwrap_or(1);
        let simple_short = d.iter().map(|&x| x < dmax).collect();
        Ok(FactorTables {
            input,
            kind,
            rank,
            offset,
            cartan,
            positive_roots,
            positive_coroots,
            short_roots,
            simple_short,
        })
    }

    /// Lie algebra dimension, `2 |Phi+| + rank`.
    pub fn dim(&self) -> u64 {
        2 * self.positive_roots.len() as u64 + self.rank as u64
    }

    /// Input node (1-based) to internal node (1-based); swaps 1 and 2 for B2.
    pub fn normalize_node(&self, node: usize) -> usize {
        if self.input.kind == DynkinType::B && self.input.rank == 2 {
            3 - node
        } else {
            node
        }
    }

    /// Whether the internal node (1-based) has exactly one neighbour.
    pub fn is_end_node(&self, node: usize) -> bool {
        let i = node - 1;
        (0..self.rank).filter(|&j| j != i && self.cartan[i][j] != 0).count() == 1
    }

    /// A simple root in fundamental-weight coordinates (local to this factor).
    pub fn simple_root_fw(&self, i: usize) -> Vec<i64> {
        (0..self.rank).map(|r| self.cartan[r][i]).collect()
    }

    /// `sum_i c_i alpha_i` in local fundamental-weight coordinates.
    pub fn root_to_fw(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|r| (0..self.rank).map(|i| self.cartan[r][i] * c[i]).sum())
            .collect()
    }
}

/// A positive coroot of one factor, in simple-coroot coordinates.
#[derive(Clone, Copy, Debug)]
pub struct Coroot<'a> {
    pub factor: usize,
    pub coeffs: &'a [i64],
}

/// Root-system tables for a reductive group.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    factors: Vec<FactorTables>,
    fw_len: usize,
}

/// Builds the tables for `spec`; see [`RootSystem::new`].
pub fn build_root_system(spec: &RootSystemSpec) -> Result<RootSystem, RootSystemError> {
    RootSystem::new(spec)
}

impl RootSystem {
    pub fn new(spec: &RootSystemSpec) -> Result<Self, RootSystemError> {
        let mut offset = 0;
        let mut factors = Vec::with_capacity(spec.simple_factors.len());
        for &f in &spec.simple_factors {
            let t = FactorTables::build(f, offset)?;
            offset += t.rank;
            factors.push(t);
        }
        Ok(RootSystem {
            spec: spec.clone(),
            factors,
            fw_len: offset,
        })
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn factors(&self) -> &[FactorTables] {
        &self.factors
    }

    /// Number of fundamental-weight coordinates (sum of ranks).
    pub fn fw_len(&self) -> usize {
        self.fw_len
    }

    pub fn torus_rank(&self) -> usize {
        self.spec.torus_rank
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.fw_len, self.spec.torus_rank)
    }

    /// Dimension of the group, semisimple part plus central torus.
    pub fn dim(&self) -> u64 {
        self.factors.iter().map(FactorTables::dim).sum::<u64>() + self.spec.torus_rank as u64
    }

    /// Weyl vector: all ones in fundamental-weight coordinates.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.fw_len], vec![0; self.spec.torus_rank])
    }

    /// Fundamental weight `omega_node` of `factor` (internal numbering).
    pub fn fundamental_weight(&self, factor: usize, node: usize) -> Weight {
        let mut w = Weight::zero(self.fw_len, self.spec.torus_rank);
        w.fw[self.factors[factor].offset + node - 1] = 1;
        w
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.fw_len, self.spec.torus_rank)
    }

    pub fn coroots(&self) -> impl Iterator<Item = Coroot<'_>> {
        self.factors.iter().enumerate().flat_map(|(k, f)| {
            f.positive_coroots.iter().map(move |c| Coroot {
                factor: k,
                coeffs: c,
            })
        })
    }

    /// Simple coroot `alpha_node^vee` of `factor` (internal numbering).
    pub fn simple_coroot(&self, factor: usize, node: usize) -> Option<Coroot<'_>> {
        let f = self.factors.get(factor)?;
        let target: Vec<i64> = (1..=f.rank).map(|i| i64::from(i == node)).collect();
        f.positive_coroots
            .iter()
            .find(|c| **c == target)
            .map(|c| Coroot { factor, coeffs: c })
    }

    /// Highest coroot of `factor` (the last one in height order).
    pub fn highest_coroot(&self, factor: usize) -> Option<Coroot<'_>> {
        let f = self.factors.get(factor)?;
        f.positive_coroots.last().map(|c| Coroot { factor, coeffs: c })
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), RootSystemError> {
        if w.fw.len() != self.fw_len || w.torus.len() != self.spec.torus_rank {
            return Err(RootSystemError::DimensionMismatch {
                expected: format!("fw {} + torus {}", self.fw_len, self.spec.torus_rank),
                found: format!("fw {} + torus {}", w.fw.len(), w.torus.len()),
            });
        }
        Ok(())
    }

    /// Builds a weight from caller coordinates, applying the B2 relabeling.
    pub fn weight(&self, fw: Vec<i64>, torus: Vec<i64>) -> Result<Weight, RootSystemError> {
        let mut w = Weight::new(fw, torus);
        self.check_weight(&w)?;
        for f in &self.factors {
            if f.input.kind == DynkinType::B && f.input.rank == 2 {
                w.fw.swap(f.offset, f.offset + 1);
            }
        }
        Ok(w)
    }

    /// Inverse of [`RootSystem::weight`]: internal coordinates back to the
    /// caller's numbering.
    pub fn weight_to_input(&self, w: &Weight) -> Weight {
        // the relabeling is an involution
        let mut out = w.clone();
        for f in &self.factors {
            if f.input.kind == DynkinType::B && f.input.rank == 2 {
                out.fw.swap(f.offset, f.offset + 1);
            }
        }
        out
    }

    /// Validates `(factor, node)` pairs (factor 0-based, node 1-based in the
    /// caller's Bourbaki numbering) and builds the marking.
    pub fn marking(&self, pairs: &[(usize, usize)]) -> Result<ParabolicMarking, RootSystemError> {
        let mut seen = BTreeSet::new();
        let mut nodes = BTreeSet::new();
        let mut mask = vec![false; self.fw_len];
        for &(factor, node) in pairs {
            let f = self
                .factors
                .get(factor)
                .ok_or(RootSystemError::InvalidNode { factor, node })?;
            if node == 0 || node > f.rank {
                return Err(RootSystemError::InvalidNode { factor, node });
            }
            if !seen.insert((factor, node)) {
                return Err(RootSystemError::DuplicateNode { factor, node });
            }
            let internal = f.normalize_node(node);
            nodes.insert((factor, internal));
            mask[f.offset + internal - 1] = true;
        }
        Ok(ParabolicMarking::from_parts(nodes, mask))
    }

    /// Marking with every node of every factor (the Borel subgroup).
    pub fn full_marking(&self) -> ParabolicMarking {
        let pairs: Vec<(usize, usize)> = self
            .factors
            .iter()
            .enumerate()
            .flat_map(|(k, f)| (1..=f.rank).map(move |n| (k, n)))
            .collect();
        self.marking(&pairs).expect("every node exists")
    }

    /// Flat position to `(factor, internal node)`.
    pub fn node_of(&self, position: usize) -> (usize, usize) {
        for (k, f) in self.factors.iter().enumerate() {
            if position < f.offset + f.rank {
                return (k, position - f.offset + 1);
            }
        }
        panic!("position {position} out of range")
    }

    /// `<w, coroot>`; torus coordinates never contribute.
    pub fn coroot_pairing(&self, w: &Weight, coroot: &Coroot<'_>) -> Result<i64, RootSystemError> {
        self.check_weight(w)?;
        let f = self
            .factors
            .get(coroot.factor)
            .filter(|f| f.rank == coroot.coeffs.len())
            .ok_or_else(|| RootSystemError::DimensionMismatch {
                expected: format!("coroot of one of {} factors", self.factors.len()),
                found: format!("factor {} with {} coefficients", coroot.factor, coroot.coeffs.len()),
            })?;
        Ok(coroot
            .coeffs
            .iter()
            .zip(&w.fw[f.offset..f.offset + f.rank])
            .map(|(c, x)| c * x)
            .sum())
    }

    /// Weyl dimension formula: `prod <w + rho, a> / <rho, a>` over positive
    /// coroots, factor by factor, in exact integers.
    pub fn weyl_dim(&self, w: &Weight) -> Result<u64, RootSystemError> {
        self.weyl_dim_big(w)?
            .to_u64()
            .ok_or(RootSystemError::Overflow)
    }

    pub fn weyl_dim_big(&self, w: &Weight) -> Result<BigUint, RootSystemError> {
        self.check_weight(w)?;
        if let Some((position, &value)) = w.fw.iter().enumerate().find(|(_, &x)| x < 0) {
            return Err(RootSystemError::NotDominant { position, value });
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for f in &self.factors {
            let local = &w.fw[f.offset..f.offset + f.rank];
            for c in &f.positive_coroots {
                let shifted: i64 = c.iter().zip(local).map(|(c, x)| c * (x + 1)).sum();
                let height: i64 = c.iter().sum();
                num *= shifted as u64;
                den *= height as u64;
            }
        }
        Ok(num / den)
    }
}
