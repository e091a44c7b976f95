//! Automorphism groups of smooth complete toroidal horospherical varieties.
//!
//! Such a variety is a toric bundle over G/P. The input records the group,
//! the parabolic (as marked nodes), the fan of the toric fiber, and the
//! embedding of the fiber's character lattice `M_S` into the character
//! lattice of the maximal torus of G.
//!
//! The color pairings reduce to pairings with the marked simple coroots, i.e.
//! to reading fundamental-weight coordinates at the marked nodes, so no divisor
//! bookkeeping is needed.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fan::{demazure_roots_with, DemazureRoot, Fan, FanError, ValidatedFan};
use crate::lie::{
    aut_dim_homogeneous, is_dominant, ParabolicMarking, RootSystem, RootSystemError,
    RootSystemSpec, Weight,
};
use crate::linalg;
use crate::par::Execution;

/// Raw input: group, marked nodes (`(factor, node)`, factor 0-based, node
/// 1-based Bourbaki), fiber fan and the images of the standard basis of `M_S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HorosphericalDatum {
    pub group: RootSystemSpec,
    pub marking: Vec<(usize, usize)>,
    pub fiber_fan: Fan,
    pub embedding: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatumError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("FanInvalid: {0}")]
    FanInvalid(#[from] FanError),
    #[error("DimensionMismatch: fiber fan has dimension {fan_dim} but {found} embedding weights were given")]
    DimensionMismatch { fan_dim: usize, found: usize },
    #[error("EmbeddingNotInjective: embedding weights span rank {rank}, need {dim}")]
    EmbeddingNotInjective { rank: usize, dim: usize },
    #[error("EmbeddingNotCharacterOfP: embedding weight {basis_index} is nonzero at unmarked node {node} of factor {factor}")]
    EmbeddingNotCharacterOfP {
        basis_index: usize,
        factor: usize,
        node: usize,
    },
}

impl DatumError {
    /// The name of the violated invariant.
    pub fn invariant(&self) -> &'static str {
        match self {
            DatumError::RootSystem(e) => root_system_invariant(e),
            DatumError::FanInvalid(_) => "FanInvalid",
            DatumError::DimensionMismatch { .. } => "DimensionMismatch",
            DatumError::EmbeddingNotInjective { .. } => "EmbeddingNotInjective",
            DatumError::EmbeddingNotCharacterOfP { .. } => "EmbeddingNotCharacterOfP",
        }
    }
}

pub(crate) fn root_system_invariant(e: &RootSystemError) -> &'static str {
    match e {
        RootSystemError::InvalidRank { .. } => "InvalidRank",
        RootSystemError::InvalidNode { .. } => "InvalidNode",
        RootSystemError::DuplicateNode { .. } => "DuplicateNode",
        RootSystemError::DimensionMismatch { .. } => "DimensionMismatch",
        RootSystemError::NotDominant { .. } => "NotDominant",
        RootSystemError::NotACharacterOfP { .. } => "NotACharacterOfP",
        RootSystemError::Overflow => "Overflow",
    }
}

/// A datum whose invariants have been checked. Embedding weights are kept in
/// internal coordinates (B2 factors relabeled as C2).
#[derive(Clone, Debug)]
pub struct ValidatedDatum {
    datum: HorosphericalDatum,
    rs: RootSystem,
    marking: ParabolicMarking,
    fan: ValidatedFan,
    embedding: Vec<Weight>,
}

impl ValidatedDatum {
    pub fn datum(&self) -> &HorosphericalDatum {
        &self.datum
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn marking(&self) -> &ParabolicMarking {
        &self.marking
    }

    pub fn fan(&self) -> &ValidatedFan {
        &self.fan
    }

    pub fn embedding(&self) -> &[Weight] {
        &self.embedding
    }

    /// Image of `m in M_S` in internal weight coordinates.
    pub fn ambient(&self, m: &[i64]) -> Weight {
        Weight::combination(m, &self.embedding, self.rs.shape())
    }
}

impl HorosphericalDatum {
    /// The datum of a toric variety viewed as a horospherical variety for its
    /// own torus: no simple factors, nothing marked, identity embedding.
    pub fn torus_only(fan: Fan) -> Self {
        let n = fan.dim;
        let embedding = (0..n)
            .map(|i| Weight::new(Vec::new(), (0..n).map(|j| i64::from(i == j)).collect()))
            .collect();
        HorosphericalDatum {
            group: RootSystemSpec::torus(n),
            marking: Vec::new(),
            fiber_fan: fan,
            embedding,
        }
    }

    pub fn validate(&self) -> Result<ValidatedDatum, DatumError> {
        validate_datum(self)
    }
}

pub fn validate_datum(datum: &HorosphericalDatum) -> Result<ValidatedDatum, DatumError> {
    let rs = RootSystem::new(&datum.group)?;
    let marking = rs.marking(&datum.marking)?;
    let fan = datum.fiber_fan.validate()?;
    if datum.embedding.len() != fan.dim() {
        return Err(DatumError::DimensionMismatch {
            fan_dim: fan.dim(),
            found: datum.embedding.len(),
        });
    }
    let mut embedding = Vec::with_capacity(fan.dim());
    for (basis_index, w) in datum.embedding.iter().enumerate() {
        let w = rs.weight(w.fw.clone(), w.torus.clone())?;
        if let Some(pos) = (0..rs.fw_len()).find(|&p| !marking.mask()[p] && w.fw[p] != 0) {
            let (factor, node) = rs.node_of(pos);
            let node = rs.factors()[factor].normalize_node(node);
            return Err(DatumError::EmbeddingNotCharacterOfP {
                basis_index,
                factor,
                node,
            });
        }
        embedding.push(w);
    }
    let rows: Vec<Vec<i64>> = embedding.iter().map(Weight::coords).collect();
    let rank = linalg::rank(&rows);
    if rank != fan.dim() {
        return Err(DatumError::EmbeddingNotInjective {
            rank,
            dim: fan.dim(),
        });
    }
    Ok(ValidatedDatum {
        datum: datum.clone(),
        rs,
        marking,
        fan,
        embedding,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    Semisimple,
    Unipotent,
}

/// A fiber Demazure root whose image is dominant on the marked coroots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BRoot {
    pub m_fiber: Vec<i64>,
    pub ray_index: usize,
    /// Image in the caller's weight coordinates.
    pub m_ambient: Weight,
    pub kind: RootKind,
    /// Dimension of the irreducible G-module with highest weight `m_ambient`.
    pub v_dim: u64,
}

/// Generators named in the Levi/unipotent description, as fiber vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeviAnnotation {
    /// The Levi part is generated by the image of G, the G-equivariant
    /// automorphisms, and these root subgroups. Only asserted when G maps onto
    /// `Aut^0(G/P)`; otherwise G must first be enlarged.
    pub levi_description_applies: bool,
    pub levi_roots: Vec<Vec<i64>>,
    pub unipotent_roots: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutReport {
    pub dim_aut_gp: u64,
    pub g_surjects: bool,
    pub dim_s: u64,
    pub roots: Vec<BRoot>,
    pub n_semisimple: u64,
    pub unipotent_dims: Vec<u64>,
    pub dim_aut_total: u64,
    pub dim_unipotent_radical: u64,
    pub dim_levi: u64,
    pub reductive: bool,
    pub annotation: LeviAnnotation,
}

/// Fiber Demazure roots split by whether they extend to a `B+`-normalized
/// additive action on X.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Extendability {
    pub extends: Vec<ExtendingRoot>,
    pub does_not_extend: Vec<DemazureRoot>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendingRoot {
    pub m: Vec<i64>,
    pub ray_index: usize,
    /// The extended action is normalized by all of G (every marked pairing is 0).
    pub g_normalized: bool,
}

fn split_fiber_roots(d: &ValidatedDatum, exec: Execution) -> (Vec<(DemazureRoot, Weight)>, Vec<DemazureRoot>) {
    let mut keep = Vec::new();
    let mut drop = Vec::new();
    for root in demazure_roots_with(&d.fan, exec) {
        let w = d.ambient(&root.m);
        if is_dominant(&w, &d.marking).dominant_on_marked {
            keep.push((root, w));
        } else {
            drop.push(root);
        }
    }
    (keep, drop)
}

pub fn b_plus_roots(d: &ValidatedDatum) -> Result<Vec<BRoot>, DatumError> {
    b_plus_roots_with(d, Execution::default())
}

pub fn b_plus_roots_with(d: &ValidatedDatum, exec: Execution) -> Result<Vec<BRoot>, DatumError> {
    let (keep, _) = split_fiber_roots(d, exec);
    let present: BTreeSet<&[i64]> = keep.iter().map(|(r, _)| r.m.as_slice()).collect();
    let mut out = Vec::with_capacity(keep.len());
    for (root, w) in &keep {
        let neg: Vec<i64> = root.m.iter().map(|x| -x).collect();
        let kind = if present.contains(neg.as_slice()) {
            RootKind::Semisimple
        } else {
            RootKind::Unipotent
        };
        out.push(BRoot {
            m_fiber: root.m.clone(),
            ray_index: root.ray_index,
            m_ambient: d.rs.weight_to_input(w),
            kind,
            v_dim: d.rs.weyl_dim(w)?,
        });
    }
    Ok(out)
}

pub fn aut_report(d: &ValidatedDatum) -> Result<AutReport, DatumError> {
    aut_report_with(d, Execution::default())
}

/// `dim Aut^0(X) = dim Aut^0(G/P) + dim S + |S+| + sum_{m in U+} dim V(m)`.
pub fn aut_report_with(d: &ValidatedDatum, exec: Execution) -> Result<AutReport, DatumError> {
    let base = aut_dim_homogeneous(&d.rs, &d.marking);
    let roots = b_plus_roots_with(d, exec)?;
    let dim_s = d.fan.dim() as u64;
    let (semi, uni): (Vec<&BRoot>, Vec<&BRoot>) =
        roots.iter().partition(|r| r.kind == RootKind::Semisimple);
    let n_semisimple = semi.len() as u64;
    let unipotent_dims: Vec<u64> = uni.iter().map(|r| r.v_dim).collect();
    let dim_unipotent_radical = unipotent_dims
        .iter()
        .try_fold(0u64, |s, &v| s.checked_add(v))
        .ok_or(RootSystemError::Overflow)?;
    let dim_aut_total = [base.dim, dim_s, n_semisimple, dim_unipotent_radical]
        .into_iter()
        .try_fold(0u64, |s, v| s.checked_add(v))
        .ok_or(RootSystemError::Overflow)?;
    let annotation = LeviAnnotation {
        levi_description_applies: base.g_surjects,
        levi_roots: semi.iter().map(|r| r.m_fiber.clone()).collect(),
        unipotent_roots: uni.iter().map(|r| r.m_fiber.clone()).collect(),
    };
    Ok(AutReport {
        dim_aut_gp: base.dim,
        g_surjects: base.g_surjects,
        dim_s,
        n_semisimple,
        reductive: unipotent_dims.is_empty(),
        dim_levi: dim_aut_total - dim_unipotent_radical,
        dim_unipotent_radical,
        unipotent_dims,
        dim_aut_total,
        roots,
        annotation,
    })
}

pub fn extendable_fiber_roots(d: &ValidatedDatum) -> Extendability {
    let (keep, drop) = split_fiber_roots(d, Execution::default());
    Extendability {
        extends: keep
            .into_iter()
            .map(|(root, w)| ExtendingRoot {
                g_normalized: w.fw_is_zero(),
                m: root.m,
                ray_index: root.ray_index,
            })
            .collect(),
        does_not_extend: drop,
    }
}
