//! Decomposable projective bundles `X = P(L_1 + ... + L_k)` over a rational
//! homogeneous space Y = G/P, with the geometric (lines) convention.
//!
//! X is horospherical for `G x (C^*)^k`; its fiber is `P^{k-1}` and the
//! fiber roots are the characters `chi_i - chi_j`. Such a root survives iff
//! `L_i - L_j` is nef, and it is semisimple iff `L_i = L_j`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fan::Fan;
use crate::horospherical::{root_system_invariant, HorosphericalDatum};
use crate::lie::{
    anticanonical_character, aut_dim_homogeneous, fano_index, is_dominant, DynkinType,
    ParabolicMarking, RootSystem, RootSystemError, RootSystemSpec, Weight,
};
use crate::par::{self, Execution};

/// Base group (semisimple, no central torus), marked nodes, and the `k`
/// line bundles as coefficient vectors over the marked nodes in marking order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSpec {
    pub base: RootSystemSpec,
    pub marking: Vec<(usize, usize)>,
    pub line_bundles: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("TooFewLineBundles: need at least 2 line bundles, found {0}")]
    TooFewLineBundles(usize),
    #[error("TorusNotAllowed: the base group must be semisimple, found torus rank {0}")]
    TorusNotAllowed(usize),
    #[error("UnmarkedFactor: factor {0} has no marked node")]
    UnmarkedFactor(usize),
    #[error("LineBundleShape: line bundle {index} has {found} coefficients, expected {expected}")]
    LineBundleShape {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
}

impl BundleError {
    /// The name of the violated invariant.
    pub fn invariant(&self) -> &'static str {
        match self {
            BundleError::RootSystem(e) => root_system_invariant(e),
            BundleError::TooFewLineBundles(_) => "TooFewLineBundles",
            BundleError::TorusNotAllowed(_) => "TorusNotAllowed",
            BundleError::UnmarkedFactor(_) => "UnmarkedFactor",
            BundleError::LineBundleShape { .. } => "LineBundleShape",
            BundleError::PreconditionViolated(_) => "PreconditionViolated",
        }
    }
}

/// A checked bundle spec; line bundles are stored as internal weights.
#[derive(Clone, Debug)]
pub struct ValidatedBundle {
    spec: BundleSpec,
    rs: RootSystem,
    marking: ParabolicMarking,
    bundles: Vec<Weight>,
}

impl ValidatedBundle {
    pub fn spec(&self) -> &BundleSpec {
        &self.spec
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn marking(&self) -> &ParabolicMarking {
        &self.marking
    }

    pub fn k(&self) -> usize {
        self.bundles.len()
    }

    /// `L_i` as a character of P, internal coordinates.
    pub fn line_bundle(&self, i: usize) -> &Weight {
        &self.bundles[i]
    }

    fn diff(&self, i: usize, j: usize) -> Weight {
        &self.bundles[i] - &self.bundles[j]
    }

    fn is_nef(&self, w: &Weight) -> bool {
        is_dominant(w, &self.marking).dominant_on_marked
    }

    fn is_ample(&self, w: &Weight) -> bool {
        is_dominant(w, &self.marking).strictly_dominant_on_marked
    }
}

impl BundleSpec {
    pub fn validate(&self) -> Result<ValidatedBundle, BundleError> {
        validate_bundle(self)
    }
}

pub fn validate_bundle(spec: &BundleSpec) -> Result<ValidatedBundle, BundleError> {
    if spec.base.torus_rank != 0 {
        return Err(BundleError::TorusNotAllowed(spec.base.torus_rank));
    }
    let rs = RootSystem::new(&spec.base)?;
    let marking = rs.marking(&spec.marking)?;
    for k in 0..rs.factors().len() {
        if !marking.nodes().iter().any(|&(f, _)| f == k) {
            return Err(BundleError::UnmarkedFactor(k));
        }
    }
    if spec.line_bundles.len() < 2 {
        return Err(BundleError::TooFewLineBundles(spec.line_bundles.len()));
    }
    let positions: Vec<usize> = spec
        .marking
        .iter()
        .map(|&(f, n)| rs.factors()[f].offset + n - 1)
        .collect();
    let mut bundles = Vec::with_capacity(spec.line_bundles.len());
    for (index, coeffs) in spec.line_bundles.iter().enumerate() {
        if coeffs.len() != positions.len() {
            return Err(BundleError::LineBundleShape {
                index,
                expected: positions.len(),
                found: coeffs.len(),
            });
        }
        let mut fw = vec![0i64; rs.fw_len()];
        for (&p, &c) in positions.iter().zip(coeffs) {
            fw[p] = c;
        }
        bundles.push(rs.weight(fw, Vec::new())?);
    }
    Ok(ValidatedBundle {
        spec: spec.clone(),
        rs,
        marking,
        bundles,
    })
}

/// The fiber root `chi_i - chi_j` (0-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRoot {
    pub i: usize,
    pub j: usize,
    /// `L_i - L_j` is nef, i.e. the root is a `B+`-root.
    pub nef: bool,
    /// `L_i = L_j`, i.e. the root is semisimple.
    pub iso: bool,
    /// `dim V(L_i - L_j)` when nef.
    pub v_dim: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FanoStatus {
    CertifiedFano,
    CertifiedNotFano,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KUnstable {
    Certified,
    NotApplicable,
    Unknown,
}

impl fmt::Display for FanoStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FanoStatus::CertifiedFano => "certified_fano",
            FanoStatus::CertifiedNotFano => "certified_not_fano",
            FanoStatus::Unknown => "unknown",
        })
    }
}

impl fmt::Display for KUnstable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KUnstable::Certified => "certified",
            KUnstable::NotApplicable => "not_applicable",
            KUnstable::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleReport {
    pub pair_roots: Vec<PairRoot>,
    pub reductive: bool,
    pub dim_aut_gp: u64,
    pub g_surjects: bool,
    pub dim_s: u64,
    pub n_semisimple: u64,
    pub unipotent_dims: Vec<u64>,
    pub dim_aut_total: u64,
    pub fano: FanoStatus,
    pub k_unstable: KUnstable,
    /// Fano index of the base Y (gcd of the anticanonical coefficients).
    pub base_fano_index: Option<u64>,
}

pub fn pair_roots(b: &ValidatedBundle) -> Result<Vec<PairRoot>, BundleError> {
    let k = b.k();
    let mut out = Vec::with_capacity(k * (k - 1));
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let d = b.diff(i, j);
            let nef = b.is_nef(&d);
            let v_dim = if nef { Some(b.rs.weyl_dim(&d)?) } else { None };
            out.push(PairRoot {
                i,
                j,
                nef,
                iso: d.is_zero(),
                v_dim,
            });
        }
    }
    Ok(out)
}

/// Roots, reductivity, dimension, and the two certificates.
pub fn bundle_roots(b: &ValidatedBundle) -> Result<BundleReport, BundleError> {
    let pairs = pair_roots(b)?;
    let base = aut_dim_homogeneous(&b.rs, &b.marking);
    let n_semisimple = pairs.iter().filter(|p| p.iso).count() as u64;
    let unipotent_dims: Vec<u64> = pairs
        .iter()
        .filter(|p| p.nef && !p.iso)
        .map(|p| p.v_dim.expect("nef pairs carry a dimension"))
        .collect();
    let dim_s = (b.k() - 1) as u64;
    let dim_aut_total = unipotent_dims
        .iter()
        .copied()
        .chain([base.dim, dim_s, n_semisimple])
        .try_fold(0u64, |s, v| s.checked_add(v))
        .ok_or(RootSystemError::Overflow)?;
    let reductive = unipotent_dims.is_empty();
    let fano = fano_certificate(b);
    Ok(BundleReport {
        pair_roots: pairs,
        reductive,
        dim_aut_gp: base.dim,
        g_surjects: base.g_surjects,
        dim_s,
        n_semisimple,
        unipotent_dims,
        dim_aut_total,
        fano,
        k_unstable: k_unstable_from(fano, reductive),
        base_fano_index: fano_index(&b.rs, &b.marking),
    })
}

/// Reports for many specs, one per input, in order.
pub fn bundle_batch(
    specs: &[BundleSpec],
    exec: Execution,
) -> Vec<Result<BundleReport, BundleError>> {
    par::map(exec, specs, |s| bundle_roots(&s.validate()?))
}

/// The same variety as a horospherical datum for `G x (C^*)^k`: fiber
/// `P^{k-1}`, basis vector `e_i` of `M_S` sent to `chi_{i+1} - chi_1`.
pub fn to_horospherical_datum(b: &ValidatedBundle) -> HorosphericalDatum {
    let k = b.k();
    let input: Vec<Weight> = b.bundles.iter().map(|w| b.rs.weight_to_input(w)).collect();
    let embedding = (1..k)
        .map(|i| {
            let mut torus = vec![0i64; k];
            torus[i] = 1;
            torus[0] = -1;
            Weight::new((&input[i] - &input[0]).fw, torus)
        })
        .collect();
    HorosphericalDatum {
        group: RootSystemSpec::new(b.spec.base.simple_factors.clone(), k),
        marking: b.spec.marking.clone(),
        fiber_fan: Fan::projective_space(k - 1),
        embedding,
    }
}

/// Three-valued Fano test.
///
/// Over `(P^1)^n` with `k = 2` the answer is exact: Fano iff every
/// coefficient of `L_2 - L_1` lies in `{-1, 0, 1}`. Otherwise we try each
/// twist: `P(+ L_i) = P(+ L_i - L_j)`, and if every `N_i = L_j - L_i` is nef
/// and `-K_Y - sum_i N_i` is ample the bundle is Fano (its anticanonical class
/// is `k xi + pi^*(-K_Y - sum N_i)` with `xi` nef and relatively ample).
pub fn fano_certificate(b: &ValidatedBundle) -> FanoStatus {
    let all_p1 = b
        .rs
        .factors()
        .iter()
        .all(|f| f.kind == DynkinType::A && f.rank == 1);
    if all_p1 && b.k() == 2 {
        let d = b.diff(1, 0);
        return if d.fw.iter().all(|x| x.abs() <= 1) {
            FanoStatus::CertifiedFano
        } else {
            FanoStatus::CertifiedNotFano
        };
    }
    let anti = anticanonical_character(&b.rs, &b.marking);
    for j in 0..b.k() {
        let twists: Vec<Weight> = (0..b.k()).map(|i| b.diff(j, i)).collect();
        if !twists.iter().all(|n| b.is_nef(n)) {
            continue;
        }
        let rest = twists.iter().fold(anti.clone(), |acc, n| &acc - n);
        if b.is_ample(&rest) {
            return FanoStatus::CertifiedFano;
        }
    }
    FanoStatus::Unknown
}

fn k_unstable_from(fano: FanoStatus, reductive: bool) -> KUnstable {
    match (fano, reductive) {
        (_, true) => KUnstable::NotApplicable,
        (FanoStatus::CertifiedFano, false) => KUnstable::Certified,
        _ => KUnstable::Unknown,
    }
}

/// A Fano variety with non-reductive `Aut^0` is K-unstable (Matsushima), and
/// for horospherical varieties K-semistable already means K-polystable.
pub fn k_unstability_certificate(b: &ValidatedBundle) -> Result<KUnstable, BundleError> {
    let reductive = pair_roots(b)?.iter().all(|p| !p.nef || p.iso);
    Ok(k_unstable_from(fano_certificate(b), reductive))
}

/// For `k = 2` over a base of Picard rank one: reductive iff `L_1 = L_2`.
pub fn picard_rank_one_rule(b: &ValidatedBundle) -> Result<bool, BundleError> {
    if b.marking.len() != 1 {
        return Err(BundleError::PreconditionViolated(format!(
            "base must have Picard rank 1, found {} marked nodes",
            b.marking.len()
        )));
    }
    if b.k() != 2 {
        return Err(BundleError::PreconditionViolated(format!(
            "need exactly 2 line bundles, found {}",
            b.k()
        )));
    }
    Ok(b.bundles[0] == b.bundles[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horospherical::aut_report;
    use crate::lie::SimpleFactor;

    fn spec(factors: &[(DynkinType, usize)], marking: &[(usize, usize)], l: &[&[i64]]) -> BundleSpec {
        BundleSpec {
            base: RootSystemSpec::new(
                factors.iter().map(|&(t, r)| SimpleFactor::new(t, r)).collect(),
                0,
            ),
            marking: marking.to_vec(),
            line_bundles: l.iter().map(|v| v.to_vec()).collect(),
        }
    }

    fn report(s: &BundleSpec) -> BundleReport {
        bundle_roots(&s.validate().unwrap()).unwrap()
    }

    const A1: (DynkinType, usize) = (DynkinType::A, 1);

    #[test]
    fn f1_bundle() {
        let r = report(&spec(&[A1], &[(0, 1)], &[&[0], &[1]]));
        let nef: Vec<_> = r.pair_roots.iter().filter(|p| p.nef).collect();
        assert_eq!(nef.len(), 1);
        assert_eq!((nef[0].i, nef[0].j, nef[0].iso, nef[0].v_dim), (1, 0, false, Some(2)));
        assert!(!r.reductive);
        assert_eq!(r.dim_aut_total, 6);
    }

    #[test]
    fn trivial_bundle_is_product() {
        let r = report(&spec(&[A1], &[(0, 1)], &[&[0], &[0]]));
        assert!(r.reductive);
        assert_eq!(r.n_semisimple, 2);
        assert_eq!(r.dim_aut_total, 6);
        let r = report(&spec(&[A1], &[(0, 1)], &[&[0], &[0], &[0]]));
        assert_eq!(r.dim_aut_total, 3 + 2 + 6);
    }

    #[test]
    fn p1_squared_opposite_twist() {
        let r = report(&spec(&[A1, A1], &[(0, 1), (1, 1)], &[&[0, 0], &[1, -1]]));
        assert!(r.pair_roots.iter().all(|p| !p.nef));
        assert!(r.reductive);
        assert_eq!(r.dim_aut_total, 7);
        assert_eq!(r.fano, FanoStatus::CertifiedFano);
        assert_eq!(r.k_unstable, KUnstable::NotApplicable);
        let r = report(&spec(&[A1, A1], &[(0, 1), (1, 1)], &[&[0, 0], &[2, 0]]));
        assert_eq!(r.fano, FanoStatus::CertifiedNotFano);
    }

    #[test]
    fn quadric_threefold_and_product() {
        let c2 = (DynkinType::C, 2);
        let r = report(&spec(&[c2], &[(0, 2)], &[&[0], &[-1]]));
        assert_eq!(r.fano, FanoStatus::CertifiedFano);
        assert_eq!(r.k_unstable, KUnstable::Certified);
        let r = report(&spec(&[A1, c2], &[(0, 1), (1, 2)], &[&[0, 0], &[-1, -1]]));
        assert_eq!(r.fano, FanoStatus::CertifiedFano);
        assert_eq!(r.k_unstable, KUnstable::Certified);
        assert_eq!(
            (r.dim_aut_gp, r.dim_s, r.n_semisimple, r.unipotent_dims.clone()),
            (13, 1, 0, vec![10])
        );
        assert_eq!(r.dim_aut_total, 24);
        assert_eq!(r.base_fano_index, Some(1));
    }

    /// Over `P^1`, `P(O(c_1) + ... + O(c_k))` is Fano iff
    /// `sum_i (max c - c_i) < 2`: the section cut out by the largest summand has
    /// anticanonical degree `2 - sum_i (max c - c_i)`, and fiber lines have
    /// degree `k`.
    #[test]
    fn twist_rule_is_exact_over_p1() {
        for k in 2..=4usize {
            let total = 5i64.pow(k as u32);
            for code in 0..total {
                let c: Vec<i64> = (0..k).map(|t| (code / 5i64.pow(t as u32)) % 5 - 2).collect();
                let max = *c.iter().max().unwrap();
                let fano = c.iter().map(|x| max - x).sum::<i64>() < 2;
                let l: Vec<Vec<i64>> = c.iter().map(|&x| vec![x]).collect();
                let s = BundleSpec {
                    line_bundles: l,
                    ..spec(&[A1], &[(0, 1)], &[&[0], &[0]])
                };
                let got = fano_certificate(&s.validate().unwrap());
                let want = if fano {
                    FanoStatus::CertifiedFano
                } else if k == 2 {
                    FanoStatus::CertifiedNotFano
                } else {
                    FanoStatus::Unknown
                };
                assert_eq!(got, want, "{c:?}");
            }
        }
    }

    #[test]
    fn picard_rank_one() {
        let b = spec(&[(DynkinType::A, 2)], &[(0, 1)], &[&[0], &[0]]).validate().unwrap();
        assert!(picard_rank_one_rule(&b).unwrap());
        let b = spec(&[A1], &[(0, 1)], &[&[0], &[-3]]).validate().unwrap();
        assert!(!picard_rank_one_rule(&b).unwrap());
        let b = spec(&[A1, A1], &[(0, 1), (1, 1)], &[&[0, 0], &[1, 0]])
            .validate()
            .unwrap();
        assert_eq!(picard_rank_one_rule(&b).unwrap_err().invariant(), "PreconditionViolated");
        let b = spec(&[A1], &[(0, 1)], &[&[0], &[0], &[1]]).validate().unwrap();
        assert!(picard_rank_one_rule(&b).is_err());
    }

    #[test]
    fn validation_errors() {
        let mut s = spec(&[A1], &[(0, 1)], &[&[0]]);
        assert_eq!(s.validate().unwrap_err().invariant(), "TooFewLineBundles");
        s.line_bundles = vec![vec![0], vec![1, 2]];
        assert_eq!(s.validate().unwrap_err().invariant(), "LineBundleShape");
        let s = spec(&[A1, A1], &[(0, 1)], &[&[0], &[1]]);
        assert_eq!(s.validate().unwrap_err().invariant(), "UnmarkedFactor");
        let mut s = spec(&[A1], &[(0, 1)], &[&[0], &[1]]);
        s.base.torus_rank = 1;
        assert_eq!(s.validate().unwrap_err().invariant(), "TorusNotAllowed");
    }

    #[test]
    fn datum_path_agrees() {
        let cases = [
            spec(&[A1], &[(0, 1)], &[&[0], &[1]]),
            spec(&[A1], &[(0, 1)], &[&[0], &[0], &[0]]),
            spec(&[A1], &[(0, 1)], &[&[2], &[0], &[-1]]),
            spec(&[(DynkinType::B, 2)], &[(0, 1)], &[&[0], &[1]]),
            spec(&[(DynkinType::A, 3)], &[(0, 1), (0, 3)], &[&[0, 0], &[1, 2], &[0, 1]]),
        ];
        for s in cases {
            let b = s.validate().unwrap();
            let r = bundle_roots(&b).unwrap();
            let d = to_horospherical_datum(&b).validate().unwrap();
            let a = aut_report(&d).unwrap();
            assert_eq!(r.dim_aut_total, a.dim_aut_total, "{s:?}");
            assert_eq!(r.reductive, a.reductive);
            assert_eq!(r.n_semisimple, a.n_semisimple);
            let mut u1 = r.unipotent_dims.clone();
            let mut u2 = a.unipotent_dims.clone();
            u1.sort();
            u2.sort();
            assert_eq!(u1, u2);
        }
    }

    #[test]
    fn batch_preserves_order() {
        let specs = vec![
            spec(&[A1], &[(0, 1)], &[&[0], &[1]]),
            spec(&[A1], &[(0, 1)], &[&[0]]),
            spec(&[A1], &[(0, 1)], &[&[0], &[0]]),
        ];
        let out = bundle_batch(&specs, Execution::Parallel);
        assert_eq!(out[0].as_ref().unwrap().dim_aut_total, 6);
        assert!(out[1].is_err());
        assert!(out[2].as_ref().unwrap().reductive);
        assert_eq!(out, bundle_batch(&specs, Execution::Sequential));
    }
}
