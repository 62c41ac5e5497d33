//! Exact integral homology through the normalized chain complex and the
//! Smith normal form.

use symspec::homotopy::{normalized_chains, smith_normal_form, space_homology, Matrix};
use symspec::sset::{circle, sphere, wedge, PointedSimplicialSet, SSetBuilder, Simplex};

fn projective_plane() -> PointedSimplicialSet {
    let mut b = SSetBuilder::new();
    let v = b.add_vertex();
    let e = b.add_cell(vec![Simplex::nondegenerate(v), Simplex::nondegenerate(v)]);
    let sv = Simplex::nondegenerate(v).degeneracy(0);
    b.add_cell(vec![Simplex::nondegenerate(e), sv, Simplex::nondegenerate(e)]);
    b.build(v)
}

fn main() -> symspec::Result<()> {
    let rp2 = std::sync::Arc::new(projective_plane());
    rp2.validate()?;
    for (k, g) in space_homology(&rp2, 2).iter().enumerate() {
        println!("H_{k}(RP²) = {g}");
    }
    let w = wedge(vec![circle(), sphere(2), circle()])?;
    let h = space_homology(w.space(), 2);
    println!("S¹ ∨ S² ∨ S¹: H_1 = {}, H_2 = {}", h[1], h[2]);
    println!("∂² = 0 on the wedge: {}", normalized_chains(w.space()).is_complex());

    let m: Matrix = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        .iter()
        .map(|r| r.iter().map(|&x| x.into()).collect())
        .collect();
    let s = smith_normal_form(&m, 3);
    println!("Smith diagonal: {:?}", s.diagonal());
    Ok(())
}
