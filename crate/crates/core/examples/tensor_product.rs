//! The tensor product of symmetric sequences with its symmetry and
//! associativity isomorphisms checked as literal map equalities.

use std::sync::Arc;

use symspec::spectra::sphere_spectrum;
use symspec::sset::sphere;
use symspec::symseq::{assoc_iso, free_g, tensor, twist_iso, SymSeqMap};

fn main() -> symspec::Result<()> {
    let bound = 3;
    let s = sphere_spectrum(bound).sequence().clone();
    let g = Arc::new(free_g(1, &sphere(0), bound)?);

    let sg = tensor(&s, &g)?;
    let gs = tensor(&g, &s)?;
    for n in 0..=bound {
        println!("(S ⊗ G_1 S⁰)_{n} cells: {:?}", sg.sequence().level(n).space().counts());
    }
    let tau = twist_iso(&sg, &gs)?;
    let back = twist_iso(&gs, &sg)?;
    println!("τ² = id: {}", tau.then(&back) == SymSeqMap::identity(sg.sequence().clone()));

    let gg = tensor(&g, &g)?;
    let left = tensor(gg.sequence(), &g)?;
    let right = tensor(&g, gg.sequence())?;
    let alpha = assoc_iso(&left, &gg, &right, &gg)?;
    println!("associator is an isomorphism: {}", alpha.is_isomorphism());
    Ok(())
}
