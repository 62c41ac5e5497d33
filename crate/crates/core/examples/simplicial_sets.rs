//! Finite pointed simplicial sets: standard objects, faces in normal form,
//! smash products and exhaustive enumeration of maps.

use symspec::sset::{all_maps, circle, sphere, standard_space, Smash, StandardSpace};

fn main() -> symspec::Result<()> {
    let s1 = circle();
    let d2 = standard_space(StandardSpace::DeltaPlus(2))?;
    println!("S¹ cells by dimension: {:?}", s1.counts());
    println!("Δ[2]_+ cells by dimension: {:?}", d2.counts());

    // faces of a degenerate simplex come back in Eilenberg-Zilber normal form
    let top = d2.simplices(2).into_iter().find(|s| !s.is_degenerate()).unwrap();
    let s = top.degeneracy(1);
    for i in 0..=3 {
        println!("d_{i} s_1 σ = {:?}", d2.face(&s, i));
    }

    let t = Smash::smash2(&s1, &s1);
    println!("S¹ ∧ S¹ cells: {:?}; S² cells: {:?}", t.space().counts(), sphere(2).counts());

    let maps = all_maps(&standard_space(StandardSpace::IntervalPlus)?, &s1);
    println!("pointed maps Δ[1]_+ → S¹: {}", maps.len());
    Ok(())
}
