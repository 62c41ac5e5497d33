//! Symmetric spectra: the sphere spectrum, free spectra, validation and the
//! smash product of free spectra.

use symspec::spectra::{free_f, free_smash_map, smash, sphere_spectrum, validate};
use symspec::sset::{circle, sphere, Smash};

fn main() -> symspec::Result<()> {
    let report = validate(&sphere_spectrum(4));
    println!("sphere spectrum valid: {} (σ/σ² shortcut: {})", report.ok, report.shortcut_ok);

    let f1 = free_f(1, &sphere(0), 3)?;
    for n in 0..=3 {
        println!("F_1 S⁰ level {n}: {:?}", f1.spectrum().space(n).counts());
    }

    let f0 = free_f(0, &circle(), 3)?;
    let sm = smash(f1.spectrum(), f0.spectrum())?;
    let kl = Smash::smash2(&sphere(0), &circle());
    let target = free_f(1, kl.space(), 3)?;
    let iso = free_smash_map(&f1, &f0, &sm, &target, &kl)?;
    iso.check()?;
    println!("F_1 S⁰ ∧ F_0 S¹ ≅ F_1(S⁰ ∧ S¹): {}", iso.is_isomorphism());
    Ok(())
}
