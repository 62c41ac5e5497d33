//! Stable colimits of levelwise homology and the map induced by λ.

use symspec::homotopy::{hz_stable_colimit, stable_colimit, stable_map_report};
use symspec::spectra::{free_f, lambda_map, sphere_spectrum};
use symspec::sset::circle;

fn main() -> symspec::Result<()> {
    let s = stable_colimit(&sphere_spectrum(5), 0, false)?;
    println!("sphere: stabilized {} at {:?} ({:?})", s.stabilized, s.stable_group, s.interpretation);

    let f = free_f(1, &circle(), 6)?;
    let r = stable_colimit(f.spectrum(), 0, false)?;
    let ranks: Vec<usize> = r.levels.iter().map(|l| l.group.rank).collect();
    println!("F_1 S¹: ranks {ranks:?}, stabilized {}", r.stabilized);

    let hz = hz_stable_colimit(0, 5);
    println!("HZ: stabilized {} at {:?} ({:?})", hz.stabilized, hz.stable_group, hz.interpretation);

    let (_, _, lambda) = lambda_map(0, 4)?;
    let m = stable_map_report(&lambda, 0, false)?;
    for (n, mat) in m.matrices.iter().enumerate() {
        println!("λ_0 on H_{n} of level {n}: {mat:?}");
    }
    println!("isomorphism at every level: {}", m.iso_at_all_levels);
    Ok(())
}
