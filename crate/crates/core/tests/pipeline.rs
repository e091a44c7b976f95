#![allow(clippy::type_complexity)]

mod common;

use std::collections::BTreeSet;

use common::{random_refinement, random_unimodular, spec};
use horoaut::bundle::{
    bundle_roots, fano_certificate, k_unstability_certificate, picard_rank_one_rule,
    to_horospherical_datum, BundleReport,
};
use horoaut::fan::{demazure_roots, toric_aut_report};
use horoaut::horospherical::{aut_report, b_plus_roots, extendable_fiber_roots, RootKind};
use horoaut::lie::DynkinType;
use horoaut::{BundleSpec, HorosphericalDatum, KUnstable, Weight};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn base_strategy() -> impl Strategy<Value = (Vec<(DynkinType, usize)>, Vec<(usize, usize)>)> {
    let factor = proptest::sample::select(vec![
        (DynkinType::A, 1),
        (DynkinType::A, 2),
        (DynkinType::A, 3),
        (DynkinType::B, 2),
        (DynkinType::C, 2),
        (DynkinType::B, 3),
        (DynkinType::G, 2),
    ]);
    (proptest::collection::vec(factor, 1..3), any::<u64>()).prop_map(|(factors, bits)| {
        let mut marking = Vec::new();
        let mut b = bits;
        for (k, &(_, l)) in factors.iter().enumerate() {
            let first = (b as usize % l) + 1;
            marking.push((k, first));
            b /= 7;
            for node in 1..=l {
                if node != first && b % 3 == 0 {
                    marking.push((k, node));
                }
                b /= 3;
            }
        }
        (factors, marking)
    })
}

fn bundle_strategy() -> impl Strategy<Value = BundleSpec> {
    (base_strategy(), 2usize..5).prop_flat_map(|((factors, marking), k)| {
        let n = marking.len();
        proptest::collection::vec(proptest::collection::vec(-2i64..3, n), k).prop_map(
            move |line_bundles| BundleSpec {
                base: spec(&factors, 0),
                marking: marking.clone(),
                line_bundles,
            },
        )
    })
}

fn report(s: &BundleSpec) -> BundleReport {
    bundle_roots(&s.validate().unwrap()).unwrap()
}

/// Everything except the pair list, which depends on the labeling.
fn scalars(r: &BundleReport) -> impl PartialEq + std::fmt::Debug {
    let mut u = r.unipotent_dims.clone();
    u.sort();
    (r.reductive, r.dim_aut_total, r.n_semisimple, u, r.fano, r.k_unstable)
}

#[test]
fn spec_examples() {
    let a1 = (DynkinType::A, 1);
    let p1 = |l: &[&[i64]]| BundleSpec {
        base: spec(&[a1], 0),
        marking: vec![(0, 1)],
        line_bundles: l.iter().map(|v| v.to_vec()).collect(),
    };
    // F_1 datum built from the bundle is the hand-written one
    let b = p1(&[&[0], &[1]]).validate().unwrap();
    let d = to_horospherical_datum(&b);
    assert_eq!(d.embedding, vec![Weight::new(vec![1], vec![-1, 1])]);
    assert_eq!(d.group, spec(&[a1], 2));
    // three equal bundles: P^1 x P^2
    let b = p1(&[&[0], &[0], &[0]]).validate().unwrap();
    let d = to_horospherical_datum(&b).validate().unwrap();
    assert_eq!(demazure_roots(d.fan()).len(), 6);
    let r = aut_report(&d).unwrap();
    assert_eq!((r.dim_aut_gp, r.dim_s, r.n_semisimple), (3, 2, 6));
    assert_eq!(r.dim_aut_total, 11);
    assert!(r.roots.iter().all(|x| x.kind == RootKind::Semisimple));
    // the quadric threefold with O(-1)
    let q = BundleSpec {
        base: spec(&[(DynkinType::C, 2)], 0),
        marking: vec![(0, 2)],
        line_bundles: vec![vec![0], vec![-1]],
    };
    let b = q.validate().unwrap();
    assert_eq!(k_unstability_certificate(&b).unwrap(), KUnstable::Certified);
    // P^2 with O, O
    let p2 = BundleSpec {
        base: spec(&[(DynkinType::A, 2)], 0),
        marking: vec![(0, 1)],
        line_bundles: vec![vec![0], vec![0]],
    };
    assert!(picard_rank_one_rule(&p2.validate().unwrap()).unwrap());
}

/// Over `P^1`, the space of lines in `O + O + O(1)` is the space of
/// rank-one quotients of `O(1) + O(1) + O`; the section given by the quotient
/// onto `O` has anticanonical degree `2 - 2 = 0`, so it is not Fano. Lines in
/// `O + O + O(-1)` are quotients of `O + O + O(1)`, where that degree is 1.
#[test]
fn twist_direction_matters_for_k3() {
    let s = |l: &[i64]| BundleSpec {
        base: spec(&[(DynkinType::A, 1)], 0),
        marking: vec![(0, 1)],
        line_bundles: l.iter().map(|&x| vec![x]).collect(),
    };
    use horoaut::FanoStatus::*;
    assert_eq!(fano_certificate(&s(&[0, 0, 1]).validate().unwrap()), Unknown);
    assert_eq!(fano_certificate(&s(&[0, 0, -1]).validate().unwrap()), CertifiedFano);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bundle_and_datum_paths_agree(s in bundle_strategy()) {
        let b = s.validate().unwrap();
        let r = bundle_roots(&b).unwrap();
        let d = to_horospherical_datum(&b).validate().unwrap();
        let a = aut_report(&d).unwrap();
        prop_assert_eq!(r.dim_aut_total, a.dim_aut_total);
        prop_assert_eq!(r.reductive, a.reductive);
        prop_assert_eq!(r.n_semisimple, a.n_semisimple);
        // root by root: fiber root chi_i - chi_j has ambient torus part e_i - e_j
        let k = b.k();
        let mut from_pairs: BTreeSet<(Vec<i64>, Vec<i64>, u64)> = BTreeSet::new();
        for p in r.pair_roots.iter().filter(|p| p.nef) {
            let mut torus = vec![0i64; k];
            torus[p.i] += 1;
            torus[p.j] -= 1;
            let fw = (b.line_bundle(p.i) - b.line_bundle(p.j)).fw;
            let fw = b.root_system().weight_to_input(&Weight::new(fw, vec![])).fw;
            from_pairs.insert((fw, torus, p.v_dim.unwrap()));
        }
        let from_datum: BTreeSet<(Vec<i64>, Vec<i64>, u64)> = a
            .roots
            .iter()
            .map(|x| (x.m_ambient.fw.clone(), x.m_ambient.torus.clone(), x.v_dim))
            .collect();
        prop_assert_eq!(from_pairs, from_datum);
    }

    #[test]
    fn pair_invariants(s in bundle_strategy()) {
        let r = report(&s);
        for p in &r.pair_roots {
            prop_assert!(p.i != p.j);
            prop_assert!(!p.iso || p.nef);
            prop_assert_eq!(p.v_dim.is_some(), p.nef);
            prop_assert_eq!(p.iso, p.v_dim == Some(1) && p.nef);
        }
        let has_unipotent = r.pair_roots.iter().any(|p| p.nef && !p.iso);
        prop_assert_eq!(r.reductive, !has_unipotent);
        prop_assert_eq!(r.dim_s as usize, s.line_bundles.len() - 1);
    }

    #[test]
    fn twist_invariance(s in bundle_strategy(), shift in proptest::collection::vec(-3i64..4, 6)) {
        let mut t = s.clone();
        for l in &mut t.line_bundles {
            for (x, d) in l.iter_mut().zip(shift.iter().cycle()) {
                *x += d;
            }
        }
        let (a, b) = (report(&s), report(&t));
        prop_assert_eq!(&a, &b);
    }

    #[test]
    fn permutation_equivariance(s in bundle_strategy(), seed in any::<u64>()) {
        let k = s.line_bundles.len();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut x = seed;
        for i in (1..k).rev() {
            perm.swap(i, (x % (i as u64 + 1)) as usize);
            x /= i as u64 + 1;
        }
        let mut t = s.clone();
        t.line_bundles = perm.iter().map(|&p| s.line_bundles[p].clone()).collect();
        let (a, b) = (report(&s), report(&t));
        prop_assert_eq!(scalars(&a), scalars(&b));
        // new index q holds old bundle perm[q]
        for pb in &b.pair_roots {
            let pa = a
                .pair_roots
                .iter()
                .find(|p| p.i == perm[pb.i] && p.j == perm[pb.j])
                .unwrap();
            prop_assert_eq!((pa.nef, pa.iso, pa.v_dim), (pb.nef, pb.iso, pb.v_dim));
        }
    }

    #[test]
    fn picard_rank_one_matches_roots(t in 0usize..4, d in -4i64..5) {
        let (factor, node) = [
            ((DynkinType::A, 3), 2),
            ((DynkinType::C, 3), 3),
            ((DynkinType::G, 2), 2),
            ((DynkinType::B, 3), 1),
        ][t];
        let s = BundleSpec {
            base: spec(&[factor], 0),
            marking: vec![(0, node)],
            line_bundles: vec![vec![0], vec![d]],
        };
        let b = s.validate().unwrap();
        let r = bundle_roots(&b).unwrap();
        prop_assert_eq!(picard_rank_one_rule(&b).unwrap(), r.reductive);
        prop_assert_eq!(r.reductive, d == 0);
    }

    #[test]
    fn k_unstable_follows_fano_and_reductivity(s in bundle_strategy()) {
        let b = s.validate().unwrap();
        let r = bundle_roots(&b).unwrap();
        prop_assert_eq!(k_unstability_certificate(&b).unwrap(), r.k_unstable);
        let want = match (r.fano, r.reductive) {
            (_, true) => KUnstable::NotApplicable,
            (horoaut::FanoStatus::CertifiedFano, false) => KUnstable::Certified,
            _ => KUnstable::Unknown,
        };
        prop_assert_eq!(r.k_unstable, want);
    }

    #[test]
    fn b_plus_roots_are_fiber_roots_and_semisimple_is_symmetric(s in bundle_strategy()) {
        let d = to_horospherical_datum(&s.validate().unwrap()).validate().unwrap();
        let fiber: BTreeSet<Vec<i64>> = demazure_roots(d.fan()).into_iter().map(|r| r.m).collect();
        let roots = b_plus_roots(&d).unwrap();
        let semi: BTreeSet<Vec<i64>> = roots
            .iter()
            .filter(|r| r.kind == RootKind::Semisimple)
            .map(|r| r.m_fiber.clone())
            .collect();
        for r in &roots {
            prop_assert!(fiber.contains(&r.m_fiber));
            match r.kind {
                RootKind::Semisimple => {
                    prop_assert_eq!(r.v_dim, 1);
                    prop_assert!(r.m_ambient.fw_is_zero());
                }
                RootKind::Unipotent => {
                    if !r.m_ambient.fw_is_zero() {
                        prop_assert!(r.v_dim >= 2);
                    }
                }
            }
        }
        for m in &semi {
            let neg: Vec<i64> = m.iter().map(|x| -x).collect();
            prop_assert!(semi.contains(&neg));
        }
        let e = extendable_fiber_roots(&d);
        prop_assert_eq!(e.extends.len() + e.does_not_extend.len(), fiber.len());
        prop_assert_eq!(e.extends.len(), roots.len());
    }

    /// Marking more nodes only adds constraints.
    #[test]
    fn enlarging_the_marking_shrinks_b_plus_roots(s in bundle_strategy(), extra in any::<u64>()) {
        let b = s.validate().unwrap();
        let datum = to_horospherical_datum(&b);
        let small: BTreeSet<Vec<i64>> = b_plus_roots(&datum.validate().unwrap())
            .unwrap()
            .into_iter()
            .map(|r| r.m_fiber)
            .collect();
        let mut bigger = datum.clone();
        let mut x = extra;
        for (k, f) in datum.group.simple_factors.iter().enumerate() {
            for node in 1..=f.rank {
                if x % 2 == 1 && !bigger.marking.contains(&(k, node)) {
                    bigger.marking.push((k, node));
                }
                x /= 2;
            }
        }
        let large: BTreeSet<Vec<i64>> = b_plus_roots(&bigger.validate().unwrap())
            .unwrap()
            .into_iter()
            .map(|r| r.m_fiber)
            .collect();
        prop_assert!(large.is_subset(&small));
    }

    /// A change of basis of `M_S` moves the fan by U and the embedding by the
    /// matching substitution; the report does not change.
    #[test]
    fn change_of_fiber_basis(s in bundle_strategy(), seed in any::<u64>(), steps in 0usize..6) {
        let datum = to_horospherical_datum(&s.validate().unwrap());
        let n = datum.fiber_fan.dim;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, _) = random_unimodular(&mut rng, n, steps);
        let mut moved = datum.clone();
        moved.fiber_fan = datum.fiber_fan.transform(&u);
        let zero = Weight::new(vec![0; datum.embedding[0].fw.len()], vec![0; datum.embedding[0].torus.len()]);
        moved.embedding = (0..n)
            .map(|k| (0..n).fold(zero.clone(), |acc, i| &acc + &datum.embedding[i].scaled(u[k][i])))
            .collect();
        let a = aut_report(&datum.validate().unwrap()).unwrap();
        let b = aut_report(&moved.validate().unwrap()).unwrap();
        prop_assert_eq!(a.dim_aut_total, b.dim_aut_total);
        prop_assert_eq!(a.n_semisimple, b.n_semisimple);
        let (mut ua, mut ub) = (a.unipotent_dims.clone(), b.unipotent_dims.clone());
        ua.sort();
        ub.sort();
        prop_assert_eq!(ua, ub);
        let amb = |r: &horoaut::AutReport| -> BTreeSet<Weight> { r.roots.iter().map(|x| x.m_ambient.clone()).collect() };
        prop_assert_eq!(amb(&a), amb(&b));
    }

    #[test]
    fn torus_only_degenerates_to_toric(seed in any::<u64>(), dim in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fan = random_refinement(&mut rng, dim, if dim == 3 { 3 } else { 8 });
        let toric = toric_aut_report(&fan.validate().unwrap());
        let r = aut_report(&HorosphericalDatum::torus_only(fan).validate().unwrap()).unwrap();
        prop_assert_eq!(r.dim_aut_total, toric.dim_aut);
        prop_assert_eq!(r.n_semisimple as usize, toric.n_semisimple);
        prop_assert_eq!(r.unipotent_dims.len(), toric.n_unipotent);
        prop_assert_eq!(r.reductive, toric.reductive);
        prop_assert_eq!(r.dim_levi + r.dim_unipotent_radical, r.dim_aut_total);
    }
}
