//! Latching spaces, the stable cofibration check and pushout products.

use std::sync::Arc;

use symspec::modelcheck::{latching, level_classify, pushout_product_theorem_check, stable_cofibration_check};
use symspec::spectra::{free_f, lambda_map, mapping_cylinder, SpectrumMap};
use symspec::sset::{boundary_inclusion, circle};

fn main() -> symspec::Result<()> {
    let f = free_f(2, &circle(), 3)?;
    let x = f.spectrum();
    for n in 0..=3 {
        let l = latching(x, n)?;
        println!("L_{n} F_2 S¹: point {}, map iso {}", l.space.space().is_point(), l.map.is_isomorphism());
    }
    let r = stable_cofibration_check(&SpectrumMap::from_point(x.clone()))?;
    println!("* → F_2 S¹ is a stable cofibration: {}", r.overall);

    let (_, _, lambda) = lambda_map(0, 2)?;
    let r = stable_cofibration_check(&lambda)?;
    let bad = r.levels.iter().find(|l| !l.ok()).unwrap();
    println!("λ_0: cofibration {}, first failing level {} ({:?})", r.overall, bad.n, bad.witness);

    let cyl = mapping_cylinder(&lambda)?;
    let c = level_classify(&cyl.r);
    println!("cylinder retraction: per-level homology equivalence {:?}", c.per_level);

    let g = free_f(1, &circle(), 2)?;
    let pp = pushout_product_theorem_check(&SpectrumMap::from_point(Arc::clone(g.spectrum())), &boundary_inclusion(1))?;
    for clause in &pp.clauses {
        println!("{}: hypothesis {}, conclusion {:?}", clause.name, clause.hypothesis, clause.conclusion);
    }
    Ok(())
}
