//! Spaces with a symmetric group action: the coordinate action on spheres
//! and induction along Young subgroups.

use symspec::equivariant::{balanced_smash, sphere_action, Permutation};

fn main() -> symspec::Result<()> {
    let s3 = sphere_action(3);
    s3.check()?;
    let cycle = Permutation::from_one_based(&[2, 3, 1])?;
    let top: Vec<_> = s3.space().simplices(3).into_iter().filter(|s| !s.is_degenerate()).collect();
    println!("S³ has {} nondegenerate 3-simplices", top.len());
    println!("(1 2 3) sends {:?} to {:?}", top[0], s3.act(&cycle, &top[0]));

    // (Σ_3)_+ ∧_{Σ_1 × Σ_2} S³ is a wedge over the three (1,2)-shuffles
    let induced = balanced_smash(3, 1, 2, &s3)?;
    println!("cosets: {}", induced.cosets().len());
    println!("induced space cells: {:?}", induced.space().space().counts());
    Ok(())
}
