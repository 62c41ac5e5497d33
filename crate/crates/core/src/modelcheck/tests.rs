use std::sync::Arc;

use super::*;
use crate::equivariant::EquivariantSpace;
use crate::spectra::{free_f, lambda_map, mapping_cylinder, sphere_spectrum, SpectrumMap, SymmetricSpectrum};
use crate::sset::{boundary_inclusion, circle, collapse_to_vertex, sphere, SimplicialMap, DEFAULT_BUDGET};
use crate::symseq::SymmetricSequence;

fn from_point(x: &Arc<SymmetricSpectrum>) -> SpectrumMap {
    SpectrumMap::from_point(x.clone())
}

#[test]
fn latching_of_free_spectra() {
    for m in 0..=1 {
        let f = free_f(m, &circle(), 3).unwrap();
        let x = f.spectrum();
        for n in 0..=3 {
            let l = latching(x, n).unwrap();
            if n <= m {
                assert!(l.space.space().is_point(), "F_{m}S¹ level {n}");
            } else {
                assert!(l.map.is_isomorphism(), "F_{m}S¹ level {n}");
            }
        }
    }
    let s = Arc::new(sphere_spectrum(2));
    assert!(latching(&s, 0).unwrap().space.space().is_point());
    assert!(latching(&s, 3).is_err());
}

#[test]
fn latching_square_commutes() {
    let (_, _, lambda) = lambda_map(0, 2).unwrap();
    for n in 0..=2 {
        let (lf, top, bottom) = latching_square(&lambda, n).unwrap();
        assert_eq!(lf.then(&bottom), top.then(lambda.component(n)));
    }
}

#[test]
fn free_spectra_are_cofibrant() {
    for n in 0..=2 {
        for k in [sphere(0), circle()] {
            let f = free_f(n, &k, 3).unwrap();
            let r = stable_cofibration_check(&from_point(f.spectrum())).unwrap();
            assert!(r.overall, "F_{n}: {r:?}");
        }
    }
    let s = Arc::new(sphere_spectrum(3));
    assert!(stable_cofibration_check(&from_point(&s)).unwrap().overall);
}

#[test]
fn trivial_action_is_not_cofibrant() {
    let levels = vec![
        Arc::new(EquivariantSpace::point(0)),
        Arc::new(EquivariantSpace::point(1)),
        Arc::new(EquivariantSpace::trivial(sphere(0), 2)),
    ];
    let seq = Arc::new(SymmetricSequence::new(levels).unwrap());
    let sigma = (0..2)
        .map(|n| {
            let src = SymmetricSpectrum::suspension_of(seq.level(n).space());
            SimplicialMap::constant(src.space().clone(), seq.level(n + 1).space().clone())
        })
        .collect();
    let x = Arc::new(SymmetricSpectrum::new(seq, sigma).unwrap());
    let r = stable_cofibration_check(&from_point(&x)).unwrap();
    assert!(!r.overall);
    assert!(r.levels[0].ok() && r.levels[1].ok());
    assert!(r.levels[2].monomorphism && !r.levels[2].free);
}

#[test]
fn lifting_against_identity_and_reversal() {
    let i = boundary_inclusion(1);
    let id = SimplicialMap::identity(i.target().clone());
    assert!(matches!(
        has_lifting_property(&i, &id, DEFAULT_BUDGET).unwrap(),
        LiftingVerdict::Lifts { .. }
    ));
    let p = collapse_to_vertex(1);
    match has_lifting_property(&i, &p, DEFAULT_BUDGET).unwrap() {
        LiftingVerdict::Fails(w) => {
            assert!(w.commutes());
            let src = w.top.source();
            let verts: Vec<_> = src.cells(0).filter(|&c| c != src.basepoint()).collect();
            // the top map swaps the two endpoints
            let a = w.top.image_of(verts[0]).cell;
            let b = w.top.image_of(verts[1]).cell;
            assert_eq!(i.image_of(verts[0]).cell, b);
            assert_eq!(i.image_of(verts[1]).cell, a);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(has_lifting_property(&i, &p, 3).unwrap(), LiftingVerdict::BudgetExceeded { limit: 3 });
}

#[test]
fn spectrum_lifting() {
    let f = free_f(0, &sphere(0), 1).unwrap();
    let i = from_point(f.spectrum());
    let id = SpectrumMap::identity(f.spectrum().clone());
    match has_lifting_property(&i, &id, DEFAULT_BUDGET).unwrap() {
        LiftingVerdict::Lifts { squares } => assert!(squares >= 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn classification() {
    let s = Arc::new(sphere_spectrum(2));
    let c = level_classify(&SpectrumMap::identity(s));
    assert!(c.monomorphism && c.homology_level_equivalence);
    let (_, _, lambda) = lambda_map(0, 2).unwrap();
    let c = level_classify(&lambda);
    assert!(!c.monomorphism);
    // level 0 is `* → S⁰`; level 1 is the identity of `S¹`
    assert_eq!(c.per_level, vec![false, true, false]);
    assert!(!lambda.component(2).is_monomorphism());
    let cyl = mapping_cylinder(&lambda).unwrap();
    let c = level_classify(&cyl.r);
    assert!(c.homology_level_equivalence && !c.monomorphism, "{c:?}");
}

#[test]
fn pushout_product_instances() {
    let f = free_f(1, &circle(), 3).unwrap();
    let r = pushout_product_theorem_check(&from_point(f.spectrum()), &boundary_inclusion(1)).unwrap();
    assert!(r.monomorphism);
    assert!(r.cofibration.overall);
    assert!(r.all_confirmed());
    let id = SimplicialMap::identity(sphere(1));
    let r = pushout_product_theorem_check(&from_point(f.spectrum()), &id).unwrap();
    assert!(r.all_confirmed());
}
