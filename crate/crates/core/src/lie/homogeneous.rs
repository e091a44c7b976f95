//! Data attached to a rational homogeneous space G/P.

use serde::{Deserialize, Serialize};

use super::{is_dominant, DynkinType, FactorTables, ParabolicMarking, RootSystem, RootSystemError, Weight};
use crate::linalg::gcd_all;

/// Dimension of the connected automorphism group of G/P and whether G maps
/// onto it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousAut {
    pub dim: u64,
    pub g_surjects: bool,
}

/// Dimension of the adjoint group that acts on `G_i/P_i` when the marked
/// factor is one of the three exceptional diagrams, detected by root lengths
/// and end nodes.
fn exceptional_dim(f: &FactorTables, marked: &[usize]) -> Option<u64> {
    let [node] = marked else {
        return None;
    };
    let node = *node;
    let short = f.simple_short[node - 1];
    let l = f.rank as u64;
    match f.kind {
        // the unique short simple root; D_{l+1}
        DynkinType::B if l >= 3 && short => Some((l + 1) * (2 * l + 1)),
        // the short simple root sitting at an end node; A_{2l-1}
        DynkinType::C if short && f.is_end_node(node) => Some(4 * l * l - 1),
        // the short simple root; B_3
        DynkinType::G if short => Some(21),
        _ => None,
    }
}

/// `dim Aut^0(G/P)` factor by factor. Unmarked factors act trivially and
/// contribute nothing.
pub fn aut_dim_homogeneous(rs: &RootSystem, marking: &ParabolicMarking) -> HomogeneousAut {
    let mut dim = 0;
    let mut g_surjects = true;
    for (k, f) in rs.factors().iter().enumerate() {
        let marked: Vec<usize> = marking
            .nodes()
            .iter()
            .filter(|(fk, _)| *fk == k)
            .map(|&(_, n)| n)
            .collect();
        if marked.is_empty() {
            continue;
        }
        match exceptional_dim(f, &marked) {
            Some(d) => {
                dim += d;
                g_surjects = false;
            }
            None => dim += f.dim(),
        }
    }
    HomogeneousAut { dim, g_surjects }
}

/// The character of P defining the anticanonical bundle of G/P: the sum of the
/// positive roots that involve some marked simple root, in fundamental-weight
/// coordinates.
pub fn anticanonical_character(rs: &RootSystem, marking: &ParabolicMarking) -> Weight {
    let mut w = rs.zero_weight();
    for f in rs.factors() {
        let mask = &marking.mask()[f.offset..f.offset + f.rank];
        let mut sum = vec![0i64; f.rank];
        for root in &f.positive_roots {
            if root.iter().zip(mask).any(|(&c, &m)| m && c > 0) {
                for (s, c) in sum.iter_mut().zip(root) {
                    *s += c;
                }
            }
        }
        for (i, x) in f.root_to_fw(&sum).into_iter().enumerate() {
            w.fw[f.offset + i] = x;
        }
    }
    w
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Positivity {
    Ample,
    NefNotAmple,
    NotNef,
}

/// Positivity of the homogeneous line bundle on G/P defined by the character
/// `w` of P. Torus coordinates only change the linearization.
pub fn line_bundle_positivity(
    rs: &RootSystem,
    w: &Weight,
    marking: &ParabolicMarking,
) -> Result<Positivity, RootSystemError> {
    rs.check_weight(w)?;
    let d = is_dominant(w, marking);
    if !d.zero_on_unmarked {
        let pos = w
            .fw
            .iter()
            .zip(marking.mask())
            .position(|(&x, &m)| !m && x != 0)
            .expect("some unmarked coefficient is nonzero");
        let (factor, node) = rs.node_of(pos);
        return Err(RootSystemError::NotACharacterOfP { factor, node });
    }
    Ok(if d.strictly_dominant_on_marked {
        Positivity::Ample
    } else if d.dominant_on_marked {
        Positivity::NefNotAmple
    } else {
        Positivity::NotNef
    })
}

/// Fano index of G/P: the gcd of the anticanonical coefficients over the
/// marked nodes (the Picard group of G/P is free on the marked fundamental
/// weights). `None` when nothing is marked (G/P is a point).
pub fn fano_index(rs: &RootSystem, marking: &ParabolicMarking) -> Option<u64> {
    if marking.is_empty() {
        return None;
    }
    let k = anticanonical_character(rs, marking);
    let coeffs: Vec<i64> = marking.marked_positions().into_iter().map(|p| k.fw[p]).collect();
    Some(gcd_all(&coeffs).unsigned_abs())
}
