use std::sync::Arc;

use super::*;

fn s1() -> Arc<PointedSimplicialSet> {
    circle()
}

#[test]
fn sphere_counts() {
    assert_eq!(sphere(1).counts(), &[1, 1]);
    assert_eq!(sphere(2).counts(), &[1, 1, 2]);
    assert_eq!(sphere(0).counts(), &[2]);
    assert_eq!(standard_space(StandardSpace::ZeroSphere).unwrap().counts(), &[2]);
    for n in 0..4 {
        sphere(n).validate().unwrap();
    }
}

#[test]
fn standard_spaces_validate() {
    for n in 0..4 {
        for kind in [StandardSpace::DeltaPlus(n), StandardSpace::BoundaryPlus(n)] {
            standard_space(kind).unwrap().validate().unwrap();
        }
        for i in 0..=n {
            if n > 0 {
                standard_space(StandardSpace::HornPlus(n, i)).unwrap().validate().unwrap();
            }
        }
    }
    assert!(standard_space(StandardSpace::HornPlus(2, 3)).is_err());
    assert!(standard_space(StandardSpace::HornPlus(0, 0)).is_err());
    assert_eq!(standard_space(StandardSpace::DeltaPlus(2)).unwrap().counts(), &[4, 3, 1]);
    assert_eq!(standard_space(StandardSpace::HornPlus(2, 1)).unwrap().counts(), &[4, 2]);
}

#[test]
fn smash_of_circles_shares_the_diagonal() {
    let sm = smash(&s1(), &s1());
    let sp = sm.space();
    assert_eq!(sp.counts(), &[1, 1, 2]);
    let edges: Vec<CellId> = sp.cells(1).collect();
    for t in sp.cells(2) {
        let nondeg: Vec<CellId> = sp
            .cell_faces(t)
            .iter()
            .filter(|f| !f.is_degenerate())
            .map(|f| f.cell)
            .collect();
        assert_eq!(nondeg, edges);
    }
}

#[test]
fn product_counts() {
    let d1 = standard_space(StandardSpace::IntervalPlus).unwrap();
    let p = product(&d1, &d1);
    p.space().validate().unwrap();
    // (Δ[1] ⨿ *)² has 9 vertices and the square block has 2 triangles
    assert_eq!(p.space().count(0), 9);
    assert_eq!(p.space().count(2), 2);
    let s0 = sphere(0);
    assert_eq!(product(&s0, &s0).space().count(0), 4);
    for i in 0..2 {
        p.projection(i).verify().unwrap();
    }
}

#[test]
fn wedge_counts() {
    let w = wedge(vec![s1(), s1()]).unwrap();
    assert_eq!(w.space().counts(), &[1, 2]);
    assert!(wedge(vec![]).is_err());
    let w1 = wedge(vec![sphere(2)]).unwrap();
    assert_eq!(w1.space().as_ref(), sphere(2).as_ref());
    w.inclusion(1).verify().unwrap();
}

#[test]
fn interval_mod_boundary_is_circle() {
    let inc = boundary_inclusion(1);
    let q = quotient_by_subobject(&inc).unwrap();
    assert_eq!(q.space().counts(), &[1, 1]);
    q.space().validate().unwrap();
    q.map().verify().unwrap();
    assert!(!q.map().is_monomorphism());
}

#[test]
fn quotient_edge_cases() {
    let x = sphere(2);
    let base = SimplicialMap::from_fn(Arc::new(PointedSimplicialSet::point()), x.clone(), |_| {
        x.base_simplex(0)
    });
    let q = quotient_by_subobject(&base).unwrap();
    assert_eq!(q.space().as_ref(), x.as_ref());
    let q = quotient_by_subobject(&SimplicialMap::identity(x.clone())).unwrap();
    assert!(q.space().is_point());
    let collapse = collapse_to_vertex(1);
    assert!(matches!(quotient_by_subobject(&collapse), Err(crate::Error::NotMonomorphism)));
}

#[test]
fn pushout_cases() {
    let x = sphere(2);
    let id = SimplicialMap::identity(x.clone());
    let f = SimplicialMap::identity(x.clone());
    let po = pushout(&id, &f).unwrap();
    assert_eq!(po.space().counts(), x.counts());
    let pt = Arc::new(PointedSimplicialSet::point());
    let to_pt = SimplicialMap::constant(x.clone(), pt);
    let po = pushout(&to_pt, &id).unwrap();
    assert!(po.space().is_point());
    // S¹ ← ∂Δ[1]_+ → Δ[1]_+
    let inc = boundary_inclusion(1);
    let c = SimplicialMap::constant(inc.source().clone(), s1());
    let po = pushout(&c, &inc).unwrap();
    assert_eq!(po.space().counts(), &[1, 2]);
    po.space().validate().unwrap();
    po.left.verify().unwrap();
    po.right.verify().unwrap();
}

#[test]
fn map_counts() {
    let s0 = sphere(0);
    assert_eq!(all_maps(&s0, &s0).len(), 2);
    let d1 = standard_space(StandardSpace::IntervalPlus).unwrap();
    let maps = all_maps(&d1, &s1());
    for m in &maps {
        m.verify().unwrap();
    }
    assert_eq!(maps.len(), 2);
    let pt = Arc::new(PointedSimplicialSet::point());
    assert_eq!(all_maps(&sphere(2), &pt).len(), 1);
}

#[test]
fn monomorphisms() {
    assert!(boundary_inclusion(2).is_monomorphism());
    assert!(!collapse_to_vertex(1).is_monomorphism());
    assert!(SimplicialMap::identity(sphere(3)).is_monomorphism());
}

#[test]
fn smash_unit_and_point() {
    let x = sphere(2);
    let sm = smash(&sphere(0), &x);
    assert_eq!(sm.space().counts(), x.counts());
    let pt = Arc::new(PointedSimplicialSet::point());
    assert!(smash(&x, &pt).space().is_point());
    assert!(smash(&pt, &x).space().is_point());
}

#[test]
fn face_of_degenerate() {
    let x = sphere(2);
    for k in 1..5 {
        for s in x.simplices(k) {
            for i in 0..=k {
                let f = x.face(&s, i);
                assert_eq!(f.dim, k - 1);
                assert!(x.contains(&f));
            }
            // d_j s_j = d_{j+1} s_j = id
            for j in 0..=k {
                let d = s.degeneracy(j);
                assert_eq!(x.face(&d, j), s);
                assert_eq!(x.face(&d, j + 1), s);
            }
        }
    }
}
