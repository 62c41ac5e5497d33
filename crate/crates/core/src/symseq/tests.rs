use std::sync::Arc;

use super::*;
use crate::equivariant::sphere_action;
use crate::sset::{circle, sphere, Smash};

fn spheres(bound: usize) -> Arc<SymmetricSequence> {
    Arc::new(SymmetricSequence::from_levels((0..=bound).map(sphere_action).collect()))
}

fn g1s0(bound: usize) -> Arc<SymmetricSequence> {
    Arc::new(free_g(1, &sphere(0), bound).unwrap())
}

#[test]
fn unit_tensor_is_identity_up_to_iso() {
    let x = spheres(3);
    let u = Arc::new(SymmetricSequence::unit(3));
    let t = tensor(&u, &x).unwrap();
    let l = left_unitor(&t);
    l.check().unwrap();
    assert!(l.is_isomorphism());
    let t = tensor(&x, &u).unwrap();
    let r = right_unitor(&t);
    r.check().unwrap();
    assert!(r.is_isomorphism());
}

#[test]
fn free_one_squared() {
    let g = g1s0(3);
    let t = tensor(&g, &g).unwrap();
    assert_eq!(t.sequence().level(2).space().count(0), 3);
    assert!(t.sequence().level(1).space().is_point());
    let tw = twist_iso(&t, &t).unwrap();
    tw.check().unwrap();
    // the twist is the nontrivial translation on level 2
    let act = t.sequence().level(2).generator(0);
    assert_eq!(tw.component(2).images(), act.images());
}

#[test]
fn twist_squares_to_identity() {
    let x = spheres(3);
    let g = g1s0(3);
    let xg = tensor(&x, &g).unwrap();
    let gx = tensor(&g, &x).unwrap();
    let a = twist_iso(&xg, &gx).unwrap();
    let b = twist_iso(&gx, &xg).unwrap();
    a.check().unwrap();
    assert_eq!(a.then(&b), SymSeqMap::identity(xg.sequence().clone()));
}

#[test]
fn associator_on_free_cubes() {
    let g = g1s0(3);
    let gg = tensor(&g, &g).unwrap();
    let left = tensor(gg.sequence(), &g).unwrap();
    let right = tensor(&g, gg.sequence()).unwrap();
    let a = assoc_iso(&left, &gg, &right, &gg).unwrap();
    a.check().unwrap();
    assert!(a.is_isomorphism());
    assert_eq!(left.sequence().level(3).space().count(0), 7);
}

#[test]
fn free_tensor_iso_holds() {
    for (p, q) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let bound = 4;
        let k = circle();
        let l = sphere(0);
        let gk = Arc::new(free_g(p, &k, bound).unwrap());
        let gl = Arc::new(free_g(q, &l, bound).unwrap());
        let t = tensor(&gk, &gl).unwrap();
        let kl = Smash::smash2(&k, &l);
        let target = Arc::new(free_g(p + q, kl.space(), bound).unwrap());
        let iso = free_tensor_iso(&t, p, q, &kl, &target);
        iso.check().unwrap();
        assert!(iso.is_isomorphism(), "p={p} q={q}");
    }
}

#[test]
fn eval_and_smash_space() {
    let x = spheres(2);
    assert!(x.eval(3).is_err());
    let u = SymmetricSequence::unit(2);
    assert_eq!(u.eval(0).unwrap().space().counts(), &[2]);
    let xs = smash_space(&x, &sphere(0));
    for n in 0..=2 {
        assert_eq!(xs.level(n).space().counts(), x.level(n).space().counts());
    }
    let uk = smash_space(&u, &circle());
    let g0 = free_g(0, &circle(), 2).unwrap();
    for n in 0..=2 {
        assert_eq!(uk.level(n).space().counts(), g0.level(n).space().counts());
    }
}

#[test]
fn tensor_with_point() {
    let x = spheres(2);
    let pt = Arc::new(SymmetricSequence::point(2));
    let t = tensor(&x, &pt).unwrap();
    for n in 0..=2 {
        assert!(t.sequence().level(n).space().is_point());
    }
    assert!(tensor(&x, &spheres(3)).is_err());
}
