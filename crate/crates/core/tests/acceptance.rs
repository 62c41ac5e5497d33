//! Acceptance suite. Each test prints one `PASS`/`FAIL` line with its
//! timing to the terminal, bypassing libtest's output capture.

mod common;

use std::io::Write;
use std::sync::Arc;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use common::*;
use symspec::homotopy::{
    free_part_matrix, hz_level_complex, hz_stable_colimit, is_unimodular, normalized_chains, smith_normal_form,
    stable_colimit, stable_map_report, suspension_chain_map, Homology, HomologyGroup,
};
use symspec::modelcheck::{latching, pushout_product_theorem_check, pushout_product_theorem_check_spectra, stable_cofibration_check};
use symspec::spectra::{
    free_f, free_map, free_smash_map, lambda_map, pushout_product_sset, sigma_power_failure, smash, sphere_spectrum,
    validate, MonoidWitness, SpectrumMap,
};
use symspec::sset::{boundary_inclusion, circle, horn_inclusion, sphere, Smash};
use symspec::symseq::{assoc_iso, left_unitor, right_unitor, tensor, tensor_maps, twist_iso, SymSeqMap, SymmetricSequence};

fn report(n: u32, what: &str, elapsed: Duration, limit: Duration, result: Result<String, String>) {
    let in_time = elapsed <= limit;
    let (status, detail) = match &result {
        Ok(d) if in_time => ("PASS", d.clone()),
        Ok(d) => ("FAIL", format!("{d}; over the {limit:?} limit")),
        Err(e) => ("FAIL", e.clone()),
    };
    let line = format!("criterion {n:>2} {status}: {what} [{:.2?}] {detail}\n", elapsed);
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(status == "PASS", "{line}");
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn euler(c: &symspec::homotopy::ChainComplex) -> i64 {
    (0..=c.top()).map(|k| if k % 2 == 0 { c.rank(k) as i64 } else { -(c.rank(k) as i64) }).sum()
}

#[test]
fn criterion_01_free_smash_isomorphism() {
    let (res, t) = timed(|| -> Result<String, String> {
        let bound = 4;
        let spaces = [("S0", sphere(0)), ("S1", circle())];
        let mut cases = 0;
        for m in 0..=2 {
            for n in 0..=2 {
                if m + n > 3 {
                    continue;
                }
                for (kn, k) in &spaces {
                    for (ln, l) in &spaces {
                        let fk = free_f(m, k, bound).map_err(|e| e.to_string())?;
                        let fl = free_f(n, l, bound).map_err(|e| e.to_string())?;
                        let sm = smash(fk.spectrum(), fl.spectrum()).map_err(|e| e.to_string())?;
                        let kl = Smash::smash2(k, l);
                        let fkl = free_f(m + n, kl.space(), bound).map_err(|e| e.to_string())?;
                        let iso = free_smash_map(&fk, &fl, &sm, &fkl, &kl).map_err(|e| e.to_string())?;
                        let label = format!("F{m}{kn} ∧ F{n}{ln}");
                        iso.check().map_err(|e| format!("{label}: {e}"))?;
                        check(iso.is_isomorphism(), || format!("{label}: not an isomorphism"))?;
                        for j in 0..=bound {
                            let a = normalized_chains(sm.spectrum().space(j));
                            let b = normalized_chains(fkl.spectrum().space(j));
                            check(a.ranks() == b.ranks() && euler(&a) == euler(&b), || {
                                format!("{label}: level {j} cell counts differ")
                            })?;
                        }
                        cases += 1;
                    }
                }
            }
        }
        check(cases == 32, || format!("{cases} cases"))?;
        Ok(format!("{cases} cases through level {bound}"))
    });
    report(1, "F_mK ∧ F_nL ≅ F_(m+n)(K∧L)", t, Duration::from_secs(30), res);
}

#[test]
fn criterion_02_free_one_circle_and_sphere_colimits() {
    let (res, t) = timed(|| -> Result<String, String> {
        let f = free_f(1, &circle(), 6).map_err(|e| e.to_string())?;
        for n in 1..=6 {
            let c = normalized_chains(f.spectrum().space(n));
            let h = Homology::of(&c, n).group;
            check(h == HomologyGroup::free(n), || format!("H_{n} of level {n} is {h}"))?;
            let b = betti_numbers(&c);
            check(b[n] == n, || format!("mod-p oracle disagrees at level {n}"))?;
            check(b.iter().enumerate().all(|(k, &x)| k == n || x == 0), || format!("level {n} has Betti numbers {b:?}"))?;
        }
        let r = stable_colimit(f.spectrum(), 0, false).map_err(|e| e.to_string())?;
        let ranks: Vec<usize> = r.levels.iter().skip(1).map(|l| l.group.rank).collect();
        check(ranks == vec![1, 2, 3, 4, 5, 6], || format!("ranks {ranks:?}"))?;
        check(!r.stabilized, || "F_1 S¹ report stabilized".into())?;
        let s = stable_colimit(&sphere_spectrum(6), 0, false).map_err(|e| e.to_string())?;
        check(s.stabilized && s.stable_group == Some(HomologyGroup::free(1)), || {
            format!("sphere: stabilized={} group={:?}", s.stabilized, s.stable_group)
        })?;
        Ok(format!("ranks {ranks:?}; sphere stabilizes at Z"))
    });
    report(2, "F_1 S¹ levels and stable colimits", t, Duration::from_secs(60), res);
}

#[test]
fn criterion_03_lambda_verdict() {
    let (res, t) = timed(|| -> Result<String, String> {
        let (_, _, lambda) = lambda_map(0, 4).map_err(|e| e.to_string())?;
        let r = stable_map_report(&lambda, 0, false).map_err(|e| e.to_string())?;
        check(!r.iso_at_all_levels, || "λ_0 reported as an isomorphism".into())?;
        let shown: Vec<Vec<Vec<String>>> = r
            .matrices
            .iter()
            .map(|m| m.iter().map(|row| row.iter().map(BigInt::to_string).collect()).collect())
            .collect();
        for (n, m) in r.matrices.iter().enumerate().skip(1) {
            check(m.len() == 1, || format!("level {n}: expected one row, got {}", m.len()))?;
            check(m[0].len() == n, || format!("level {n}: expected {n} columns"))?;
            check(m[0].iter().all(One::is_one), || format!("level {n}: row {:?} is not all ones; matrices {shown:?}", shown[n][0]))?;
        }
        Ok(format!("matrices {shown:?}, not an isomorphism"))
    });
    report(3, "stable_map_report(λ_0, 0)", t, Duration::from_secs(10), res);
}

#[test]
fn criterion_04_free_spectra_are_stably_cofibrant() {
    let (res, t) = timed(|| -> Result<String, String> {
        let mut cases = 0;
        for n in 0..=3 {
            for (kn, k) in [("S0", sphere(0)), ("S1", circle()), ("S2", sphere(2))] {
                let bound = n + 1;
                let f = free_f(n, &k, bound).map_err(|e| e.to_string())?;
                let x = f.spectrum();
                let r = stable_cofibration_check(&SpectrumMap::from_point(x.clone())).map_err(|e| e.to_string())?;
                check(r.overall, || format!("* → F{n}{kn}: {:?}", r.levels.iter().find(|l| !l.ok())))?;
                for j in 0..=bound {
                    let l = latching(x, j).map_err(|e| e.to_string())?;
                    if j <= n {
                        check(l.space.space().is_point(), || format!("L_{j} F{n}{kn} is not a point"))?;
                    } else {
                        check(l.map.is_isomorphism(), || format!("L_{j} F{n}{kn} → level {j} is not an isomorphism"))?;
                    }
                }
                cases += 1;
            }
        }
        Ok(format!("{cases} spectra, latching closed forms hold"))
    });
    report(4, "* → F_nK is a stable cofibration", t, Duration::from_secs(30), res);
}

struct Coherence {
    triangle: bool,
    pentagon: bool,
    hexagon: bool,
    involution: bool,
}

fn coherence(x: &Arc<SymmetricSequence>, y: &Arc<SymmetricSequence>, z: &Arc<SymmetricSequence>, w: &Arc<SymmetricSequence>) -> Coherence {
    let t = |a: &Arc<SymmetricSequence>, b: &Arc<SymmetricSequence>| tensor(a, b).unwrap();
    let id = |a: &Arc<SymmetricSequence>| SymSeqMap::identity(a.clone());
    let bound = x.bound();
    let unit = Arc::new(SymmetricSequence::unit(bound));

    let xu = t(x, &unit);
    let xu_y = t(xu.sequence(), y);
    let uy = t(&unit, y);
    let x_uy = t(x, uy.sequence());
    let xy = t(x, y);
    let lhs = assoc_iso(&xu_y, &xu, &x_uy, &uy).unwrap().then(&tensor_maps(&id(x), &left_unitor(&uy), &x_uy, &xy));
    let triangle = lhs == tensor_maps(&right_unitor(&xu), &id(y), &xu_y, &xy);

    let xy_z = t(xy.sequence(), z);
    let xy_z_w = t(xy_z.sequence(), w);
    let zw = t(z, w);
    let xy_zw = t(xy.sequence(), zw.sequence());
    let y_zw = t(y, zw.sequence());
    let x_y_zw = t(x, y_zw.sequence());
    let yz = t(y, z);
    let x_yz = t(x, yz.sequence());
    let x_yz_w = t(x_yz.sequence(), w);
    let yz_w = t(yz.sequence(), w);
    let x_yzw = t(x, yz_w.sequence());
    let top = assoc_iso(&xy_z_w, &xy_z, &xy_zw, &zw).unwrap().then(&assoc_iso(&xy_zw, &xy, &x_y_zw, &y_zw).unwrap());
    let a_xyz = assoc_iso(&xy_z, &xy, &x_yz, &yz).unwrap();
    let bottom = tensor_maps(&a_xyz, &id(w), &xy_z_w, &x_yz_w)
        .then(&assoc_iso(&x_yz_w, &x_yz, &x_yzw, &yz_w).unwrap())
        .then(&tensor_maps(&id(x), &assoc_iso(&yz_w, &yz, &y_zw, &zw).unwrap(), &x_yzw, &x_y_zw));
    let pentagon = top == bottom;

    let yz_x = t(yz.sequence(), x);
    let zx = t(z, x);
    let y_zx = t(y, zx.sequence());
    let yx = t(y, x);
    let yx_z = t(yx.sequence(), z);
    let xz = t(x, z);
    let y_xz = t(y, xz.sequence());
    let left = a_xyz
        .then(&twist_iso(&x_yz, &yz_x).unwrap())
        .then(&assoc_iso(&yz_x, &yz, &y_zx, &zx).unwrap());
    let right = tensor_maps(&twist_iso(&xy, &yx).unwrap(), &id(z), &xy_z, &yx_z)
        .then(&assoc_iso(&yx_z, &yx, &y_xz, &xz).unwrap())
        .then(&tensor_maps(&id(y), &twist_iso(&xz, &zx).unwrap(), &y_xz, &y_zx));
    let hexagon = left == right;

    let involution = twist_iso(&xy, &yx).unwrap().then(&twist_iso(&yx, &xy).unwrap()) == id(xy.sequence());
    Coherence {
        triangle,
        pentagon,
        hexagon,
        involution,
    }
}

#[test]
fn criterion_05_monoidal_coherence() {
    let (res, t) = timed(|| -> Result<String, String> {
        let mut rng = rng(5);
        for i in 0..50 {
            let bound = rng.gen_range(1..=3);
            let seqs: Vec<_> = (0..4).map(|_| random_sequence(&mut rng, bound)).collect();
            let c = coherence(&seqs[0], &seqs[1], &seqs[2], &seqs[3]);
            check(c.triangle && c.pentagon && c.hexagon && c.involution, || {
                format!(
                    "fixture {i} (bound {bound}): triangle={} pentagon={} hexagon={} τ²={}",
                    c.triangle, c.pentagon, c.hexagon, c.involution
                )
            })?;
        }
        Ok("50 fixtures".into())
    });
    report(5, "triangle, pentagon, hexagon, τ² = id", t, Duration::from_secs(120), res);
}

#[test]
fn criterion_06_sphere_is_commutative() {
    let (res, t) = timed(|| -> Result<String, String> {
        let s = sphere_spectrum(4);
        let w = MonoidWitness::new(s.sequence()).map_err(|e| e.to_string())?;
        let tau = twist_iso(&w.tensor, &w.tensor).map_err(|e| e.to_string())?;
        check(tau.then(&w.multiplication) == w.multiplication, || "m ∘ τ ≠ m".into())?;
        Ok("m ∘ τ = m through level 4".into())
    });
    report(6, "commutativity of S", t, Duration::from_secs(10), res);
}

#[test]
fn criterion_07_pushout_products() {
    let (res, t) = timed(|| -> Result<String, String> {
        let mut rng = rng(7);
        for i in 0..25 {
            let b = random_space(&mut rng, 4);
            let l = random_space(&mut rng, 4);
            let f = random_subcomplex(&mut rng, &b);
            let g = random_subcomplex(&mut rng, &l);
            let (_, corner) = pushout_product_sset(&f, &g).map_err(|e| e.to_string())?;
            corner.verify().map_err(|e| format!("pair {i}: {e}"))?;
            check(injective(&corner) && corner.is_monomorphism(), || format!("pair {i}: f □ g is not a monomorphism"))?;
        }
        let bound = 3;
        let unit = |n: usize, k| SpectrumMap::from_point(free_f(n, &k, bound).unwrap().spectrum().clone());
        let fbd = |n: usize, r: usize| free_map(&boundary_inclusion(r), n, bound).unwrap().2;
        let space_pairs = [
            (unit(0, sphere(0)), boundary_inclusion(1)),
            (unit(1, circle()), boundary_inclusion(1)),
            (unit(1, sphere(0)), horn_inclusion(2, 1).unwrap()),
            (fbd(0, 1), boundary_inclusion(1)),
            (fbd(1, 0), boundary_inclusion(2)),
            (fbd(2, 1), boundary_inclusion(0)),
        ];
        let mut n = 0;
        for (f, g) in &space_pairs {
            let r = pushout_product_theorem_check(f, g).map_err(|e| e.to_string())?;
            check(r.cofibration.overall && r.all_confirmed(), || format!("space pair {n}: {:?}", r.clauses))?;
            n += 1;
        }
        let spectra_pairs = [
            (unit(0, sphere(0)), unit(1, sphere(0))),
            (unit(1, sphere(0)), unit(1, sphere(0))),
            (fbd(0, 1), unit(1, circle())),
            (fbd(1, 0), fbd(0, 0)),
        ];
        for (f, g) in &spectra_pairs {
            let r = pushout_product_theorem_check_spectra(f, g).map_err(|e| e.to_string())?;
            check(r.cofibration.overall && r.all_confirmed(), || format!("spectrum pair {n}: {:?}", r.clauses))?;
            n += 1;
        }
        Ok(format!("25 monomorphism pairs, {n} cofibration pairs"))
    });
    report(7, "pushout products", t, Duration::from_secs(120), res);
}

#[test]
fn criterion_08_hz_stable_colimit() {
    let (res, t) = timed(|| -> Result<String, String> {
        let r = hz_stable_colimit(0, 5);
        for l in &r.levels {
            check(l.group == HomologyGroup::free(1), || format!("level {}: {}", l.n, l.group))?;
            let c = hz_level_complex(l.n);
            check(betti(&c, l.n) == 1, || format!("mod-p oracle disagrees at level {}", l.n))?;
        }
        check(r.stabilized && r.stable_group == Some(HomologyGroup::free(1)), || format!("{r:?}"))?;
        Ok(format!("{} levels, stable group Z", r.levels.len()))
    });
    report(8, "HZ stable colimit", t, Duration::from_secs(10), res);
}

#[test]
fn criterion_09_validator_shortcut() {
    let (res, t) = timed(|| -> Result<String, String> {
        let corpus = spectrum_corpus();
        let mut refuted = 0;
        for (name, x) in &corpus {
            let b = x.bound();
            let passes = |top: usize| (1..=top).all(|p| (0..=b - p).all(|n| sigma_power_failure(x, p, n).is_none()));
            let exhaustive = passes(b);
            let shortcut = passes(b.min(2));
            let r = validate(x);
            check(exhaustive == shortcut && r.ok == exhaustive && r.shortcut_ok == shortcut, || {
                format!("{name}: exhaustive={exhaustive} shortcut={shortcut} report={r:?}")
            })?;
            refuted += usize::from(!exhaustive);
        }
        check(refuted >= 1, || "the corpus has no refuted member".into())?;
        Ok(format!("{} spectra, {refuted} refuted by both", corpus.len()))
    });
    report(9, "σ/σ² shortcut agrees with the exhaustive check", t, Duration::from_secs(30), res);
}

#[test]
fn criterion_10_homology_engine() {
    let (res, t) = timed(|| -> Result<String, String> {
        let mut spaces = small_spaces();
        for (name, x) in spectrum_corpus() {
            for n in 0..=x.bound().min(2) {
                spaces.push((format!("{name}[{n}]"), x.space(n).clone()));
            }
        }
        let mut complexes = 0;
        for (name, x) in &spaces {
            let c = normalized_chains(x);
            check(c.is_complex() && squares_to_zero(&c), || format!("{name}: ∂² ≠ 0"))?;
            let (sm, e) = suspension_chain_map(x);
            let ct = normalized_chains(sm.space());
            check(ct.is_complex() && squares_to_zero(&ct), || format!("S¹ ∧ {name}: ∂² ≠ 0"))?;
            complexes += 2;
            for k in 0..=x.dim() {
                let hs = Homology::of(&c, k);
                let ht = Homology::of(&ct, k + 1);
                check(hs.group == ht.group, || format!("{name}: H_{k} = {} but H_{} of the suspension = {}", hs.group, k + 1, ht.group))?;
                let m = free_part_matrix(&hs, &ht, |z| e.apply(k, z));
                check(is_unimodular(&m, hs.group.rank), || format!("{name}: suspension is not an isomorphism on H_{k}"))?;
            }
        }
        for n in 0..=5 {
            let c = hz_level_complex(n);
            check(c.is_complex() && squares_to_zero(&c), || format!("HZ level {n}: ∂² ≠ 0"))?;
            complexes += 1;
        }
        let mut rng = rng(10);
        for i in 0..100 {
            let (rows, cols) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let m = random_matrix(&mut rng, rows, cols);
            let s = smith_normal_form(&m, cols);
            smith_certificate(&m, rows, cols, &s).map_err(|e| format!("matrix {i}: {e}"))?;
        }
        Ok(format!("{complexes} complexes, {} suspensions, 100 Smith forms", spaces.len()))
    });
    report(10, "homology engine self-checks", t, Duration::from_secs(60), res);
}
