use std::sync::Arc;

use super::free::{free_map, lambda_map};
use super::smash::{smash, smash_maps};
use super::{SpectrumMap, SymmetricSpectrum};
use crate::equivariant::{smash_equivariant, EquivariantSpace};
use crate::error::{Error, Result};
use crate::sset::{
    boundary_inclusion, horn_inclusion, pushout, standard_space, PointedSimplicialSet, Pushout, Simplex,
    SimplicialMap, Smash, StandardSpace,
};
use crate::symseq::SymmetricSequence;

/// `X ∧ K` by prolongation: levels `X_n ∧ K`, structure maps `σ ∧ K`.
#[derive(Clone, Debug)]
pub struct Prolonged {
    base: Arc<SymmetricSpectrum>,
    factor: Arc<PointedSimplicialSet>,
    smashes: Vec<Arc<Smash>>,
    spectrum: Arc<SymmetricSpectrum>,
}

pub fn prolong_smash(x: &Arc<SymmetricSpectrum>, k: &Arc<PointedSimplicialSet>) -> Prolonged {
    let kk = Arc::new(EquivariantSpace::trivial(k.clone(), 0));
    let mut smashes = Vec::new();
    let mut levels = Vec::new();
    for l in x.sequence().levels() {
        let (sm, sp) = smash_equivariant(&[l.clone(), kk.clone()]);
        smashes.push(sm);
        levels.push(Arc::new(sp));
    }
    let seq = Arc::new(SymmetricSequence::from_levels(levels));
    let spectrum = SymmetricSpectrum::from_sigma_cells(seq, |n, t, w| {
        let (a, b) = smashes[n].split2(&w).expect("non-base simplex");
        smashes[n + 1].pair2(x.sigma_apply(n, &t, &a), b)
    });
    Prolonged {
        base: x.clone(),
        factor: k.clone(),
        smashes,
        spectrum: Arc::new(spectrum),
    }
}

impl Prolonged {
    pub fn spectrum(&self) -> &Arc<SymmetricSpectrum> {
        &self.spectrum
    }

    pub fn base(&self) -> &Arc<SymmetricSpectrum> {
        &self.base
    }

    pub fn factor(&self) -> &Arc<PointedSimplicialSet> {
        &self.factor
    }

    pub fn smash(&self, n: usize) -> &Arc<Smash> {
        &self.smashes[n]
    }
}

/// `f ∧ g: X ∧ K → Y ∧ L`.
pub fn prolong_map(f: &SpectrumMap, g: &SimplicialMap, source: &Prolonged, target: &Prolonged) -> SpectrumMap {
    SpectrumMap::from_cells(source.spectrum.clone(), target.spectrum.clone(), |n, w| {
        match source.smashes[n].split2(&w) {
            None => target.spectrum.space(n).base_simplex(w.dim),
            Some((a, b)) => target.smashes[n].pair2(f.component(n).apply(&a), g.apply(&b)),
        }
    })
}

/// The `k`-shifted spectrum: level `n` is `X_{n+k}` with `Σ_n` permuting the
/// first `n` coordinates.
pub fn shift(x: &SymmetricSpectrum, k: usize) -> Result<SymmetricSpectrum> {
    if k > x.bound() {
        return Err(Error::OutOfBound { level: k, bound: x.bound() });
    }
    let levels: Vec<Arc<EquivariantSpace>> = (0..=x.bound() - k)
        .map(|n| {
            let l = x.level(n + k);
            let gens = l.generators()[..n.saturating_sub(1)].to_vec();
            Arc::new(EquivariantSpace::from_parts(l.space().clone(), vec![n], gens))
        })
        .collect();
    let seq = Arc::new(SymmetricSequence::from_levels(levels));
    let mut out = SymmetricSpectrum::from_sigma_fn(seq, |n, _| x.sigma(n + k).clone());
    if let Some(name) = x.name() {
        out = out.with_name(format!("sh^{k} {name}"));
    }
    Ok(out)
}

/// A levelwise pushout `Y ⨿_X Z` of spectra.
#[derive(Clone, Debug)]
pub struct SpectrumPushout {
    pub spectrum: Arc<SymmetricSpectrum>,
    pub left: SpectrumMap,
    pub right: SpectrumMap,
    pub levels: Vec<Pushout>,
}

pub fn pushout_spectra(f: &SpectrumMap, g: &SpectrumMap) -> Result<SpectrumPushout> {
    let (y, z) = (f.target(), g.target());
    if f.source().bound() != g.source().bound() {
        return Err(Error::BoundMismatch(f.source().bound(), g.source().bound()));
    }
    let pos: Vec<Pushout> = (0..=y.bound())
        .map(|n| pushout(f.component(n), g.component(n)))
        .collect::<Result<_>>()?;
    let levels = pos
        .iter()
        .enumerate()
        .map(|(n, po)| {
            let gens = (0..n.saturating_sub(1))
                .map(|j| {
                    let u = y.level(n).generator(j).then(&po.left);
                    let v = z.level(n).generator(j).then(&po.right);
                    Some(po.copair(&u, &v))
                })
                .collect();
            Arc::new(EquivariantSpace::from_parts(po.space().clone(), vec![n], gens))
        })
        .collect();
    let seq = Arc::new(SymmetricSequence::from_levels(levels));
    let spectrum = Arc::new(SymmetricSpectrum::from_sigma_cells(seq, |n, t, w| {
        let rep = Simplex::new(w.dim, w.degen, pos[n].quotient.representative(w.cell));
        match pos[n].wedge.split(&rep) {
            None => pos[n + 1].space().base_simplex(w.dim),
            Some((0, a)) => pos[n + 1].left.apply(&y.sigma_apply(n, &t, &a)),
            Some((_, b)) => pos[n + 1].right.apply(&z.sigma_apply(n, &t, &b)),
        }
    }));
    let left = SpectrumMap::from_parts(y.clone(), spectrum.clone(), pos.iter().map(|p| p.left.clone()).collect());
    let right = SpectrumMap::from_parts(z.clone(), spectrum.clone(), pos.iter().map(|p| p.right.clone()).collect());
    Ok(SpectrumPushout {
        spectrum,
        left,
        right,
        levels: pos,
    })
}

impl SpectrumPushout {
    /// The map out of the pushout restricting to `u` and `v`.
    pub fn copair(&self, u: &SpectrumMap, v: &SpectrumMap) -> SpectrumMap {
        let comps = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, po)| po.copair(u.component(n), v.component(n)))
            .collect();
        SpectrumMap::from_parts(self.spectrum.clone(), u.target().clone(), comps)
    }
}

/// `Mf` with `f = r ∘ i`, `r ∘ s = id` and `i` a monomorphism.
#[derive(Clone, Debug)]
pub struct MappingCylinder {
    pub cylinder: Prolonged,
    pub pushout: SpectrumPushout,
    pub i: SpectrumMap,
    pub r: SpectrumMap,
    pub s: SpectrumMap,
}

impl MappingCylinder {
    pub fn spectrum(&self) -> &Arc<SymmetricSpectrum> {
        &self.pushout.spectrum
    }
}

/// The non-base vertices of `Δ[1]_+`.
fn interval_ends(d: &PointedSimplicialSet) -> [usize; 2] {
    let v: Vec<usize> = d.cells(0).filter(|&c| c != d.basepoint()).map(|c| c.index).collect();
    [v[0], v[1]]
}

/// `X → X ∧ Δ[1]_+` at the given end.
fn end_inclusion(cyl: &Prolonged, vertex: usize) -> SpectrumMap {
    SpectrumMap::from_cells(cyl.base.clone(), cyl.spectrum.clone(), |n, x| {
        cyl.smashes[n].pair2(x, Simplex::on_vertex(vertex, x.dim))
    })
}

/// The cylinder spectrum of `f: X → Y`: `X ∧ Δ[1]_+` glued to `Y` along
/// `X ∧ {1}`.
pub fn mapping_cylinder(f: &SpectrumMap) -> Result<MappingCylinder> {
    let x = f.source();
    let y = f.target();
    let interval = standard_space(StandardSpace::IntervalPlus)?;
    let [e0, e1] = interval_ends(&interval);
    let cylinder = prolong_smash(x, &interval);
    let j1 = end_inclusion(&cylinder, e1);
    let po = pushout_spectra(&j1, f)?;
    let i = end_inclusion(&cylinder, e0).then(&po.left);
    let collapse = SpectrumMap::from_cells(cylinder.spectrum.clone(), y.clone(), |n, w| {
        let (a, _) = cylinder.smashes[n].split2(&w).expect("non-base cell");
        f.component(n).apply(&a)
    });
    let r = po.copair(&collapse, &SpectrumMap::identity(y.clone()));
    let s = po.right.clone();
    Ok(MappingCylinder {
        cylinder,
        pushout: po,
        i,
        r,
        s,
    })
}

/// A pushout-product map `f □ g` together with its source pushout.
#[derive(Clone, Debug)]
pub struct PushoutProduct {
    pub pushout: SpectrumPushout,
    pub map: SpectrumMap,
}

/// `f □ g: V ∧ K ⨿_{U ∧ K} U ∧ L → V ∧ L` for a map of spectra `f: U → V` and
/// a map of spaces `g: K → L`, by prolongation.
pub fn pushout_product(f: &SpectrumMap, g: &SimplicialMap) -> Result<PushoutProduct> {
    let (u, v) = (f.source(), f.target());
    let (k, l) = (g.source(), g.target());
    let uk = prolong_smash(u, k);
    let vk = prolong_smash(v, k);
    let ul = prolong_smash(u, l);
    let vl = prolong_smash(v, l);
    let id_u = SpectrumMap::identity(u.clone());
    let id_v = SpectrumMap::identity(v.clone());
    let id_k = SimplicialMap::identity(k.clone());
    let id_l = SimplicialMap::identity(l.clone());
    let po = pushout_spectra(&prolong_map(f, &id_k, &uk, &vk), &prolong_map(&id_u, g, &uk, &ul))?;
    let map = po.copair(&prolong_map(&id_v, g, &vk, &vl), &prolong_map(f, &id_l, &ul, &vl));
    Ok(PushoutProduct { pushout: po, map })
}

/// `f □ g` for two maps of spectra, through the smash product.
pub fn pushout_product_spectra(f: &SpectrumMap, g: &SpectrumMap) -> Result<PushoutProduct> {
    let (u, v) = (f.source(), f.target());
    let (a, b) = (g.source(), g.target());
    let ua = smash(u, a)?;
    let va = smash(v, a)?;
    let ub = smash(u, b)?;
    let vb = smash(v, b)?;
    let id = SpectrumMap::identity;
    let po = pushout_spectra(
        &smash_maps(f, &id(a.clone()), &ua, &va),
        &smash_maps(&id(u.clone()), g, &ua, &ub),
    )?;
    let map = po.copair(
        &smash_maps(&id(v.clone()), g, &va, &vb),
        &smash_maps(f, &id(b.clone()), &ub, &vb),
    );
    Ok(PushoutProduct { pushout: po, map })
}

/// `f □ g: B ∧ K ⨿_{A ∧ K} A ∧ L → B ∧ L` for maps of spaces.
pub fn pushout_product_sset(f: &SimplicialMap, g: &SimplicialMap) -> Result<(Pushout, SimplicialMap)> {
    let (a, b) = (f.source(), f.target());
    let (k, l) = (g.source(), g.target());
    let ak = Smash::smash2(a, k);
    let bk = Smash::smash2(b, k);
    let al = Smash::smash2(a, l);
    let bl = Smash::smash2(b, l);
    let id_a = SimplicialMap::identity(a.clone());
    let id_b = SimplicialMap::identity(b.clone());
    let id_k = SimplicialMap::identity(k.clone());
    let id_l = SimplicialMap::identity(l.clone());
    let po = pushout(&ak.map_into(&bk, &[f, &id_k]), &ak.map_into(&al, &[&id_a, g]))?;
    let map = po.copair(&bk.map_into(&bl, &[&id_b, g]), &al.map_into(&bl, &[f, &id_l]));
    Ok((po, map))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratingSet {
    /// `F_n(∂Δ[r]_+ → Δ[r]_+)`
    Boundary,
    /// `F_n(Λ^i[r]_+ → Δ[r]_+)`, `r ≥ 1`
    Horn,
    /// The horn maps together with `K_n = c_n □ I_∂`.
    Cylinder,
}

/// A labelled member of a generating set.
#[derive(Clone, Debug)]
pub struct Generator {
    pub label: String,
    pub map: SpectrumMap,
}

/// The members with `n ≤ levels` and `r ≤ dims`, as spectra of the given
/// bound.
pub fn generating_sets(kind: GeneratingSet, levels: usize, dims: usize, bound: usize) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    let horns = |out: &mut Vec<Generator>| -> Result<()> {
        for n in 0..=levels {
            for r in 1..=dims {
                for i in 0..=r {
                    let (_, _, map) = free_map(&horn_inclusion(r, i)?, n, bound)?;
                    out.push(Generator {
                        label: format!("F_{n}(Λ^{i}[{r}]_+ → Δ[{r}]_+)"),
                        map,
                    });
                }
            }
        }
        Ok(())
    };
    match kind {
        GeneratingSet::Boundary => {
            for n in 0..=levels {
                for r in 0..=dims {
                    let (_, _, map) = free_map(&boundary_inclusion(r), n, bound)?;
                    out.push(Generator {
                        label: format!("F_{n}(∂Δ[{r}]_+ → Δ[{r}]_+)"),
                        map,
                    });
                }
            }
        }
        GeneratingSet::Horn => horns(&mut out)?,
        GeneratingSet::Cylinder => {
            horns(&mut out)?;
            for n in 0..=levels {
                let (_, _, lambda) = lambda_map(n, bound)?;
                let cyl = mapping_cylinder(&lambda)?;
                for r in 0..=dims {
                    let pp = pushout_product(&cyl.i, &boundary_inclusion(r))?;
                    out.push(Generator {
                        label: format!("c_{n} □ (∂Δ[{r}]_+ → Δ[{r}]_+)"),
                        map: pp.map,
                    });
                }
            }
        }
    }
    Ok(out)
}
