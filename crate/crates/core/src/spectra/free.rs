use std::sync::Arc;

use super::sphere::{sphere_concat, sphere_spectrum};
use super::{SpectrumMap, SymmetricSpectrum};
use crate::equivariant::Permutation;
use crate::error::{Error, Result};
use crate::sset::{sphere, sphere_smash, PointedSimplicialSet, Simplex, SimplicialMap};
use crate::symseq::{free_g, free_level, tensor, SymmetricSequence, Tensor};

/// The free `S`-module `S ⊗ X` on a symmetric sequence, with
/// `σ(t ∧ [α, s, x]) = [1 × α, t ∧ s, x]`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    generators: Arc<SymmetricSequence>,
    tensor: Tensor,
    spectrum: Arc<SymmetricSpectrum>,
    free_on: Option<(usize, Arc<PointedSimplicialSet>)>,
}

pub fn free_module(x: &Arc<SymmetricSequence>) -> FreeModule {
    let s = Arc::new(sphere_spectrum(x.bound()));
    let t = tensor(s.sequence(), x).expect("bounds agree");
    let spectrum = SymmetricSpectrum::from_sigma_cells(t.sequence().clone(), |n, tt, w| {
        let lvl = t.level(n);
        let (r, alpha, s, y) = lvl.decompose(&w).expect("non-base simplex");
        let beta = Permutation::block_embed(&Permutation::identity(1), &alpha);
        t.level(n + 1).element(r + 1, &beta, &sphere_concat(&tt, r, &s), &y)
    });
    FreeModule {
        generators: x.clone(),
        tensor: t,
        spectrum: Arc::new(spectrum),
        free_on: None,
    }
}

/// `F_n K = S ⊗ G_n K`.
pub fn free_f(n: usize, k: &Arc<PointedSimplicialSet>, bound: usize) -> Result<FreeModule> {
    let g = Arc::new(free_g(n, k, bound)?);
    let mut m = free_module(&g);
    m.spectrum = Arc::new((*m.spectrum).clone().with_name(format!("F_{n}")));
    m.free_on = Some((n, k.clone()));
    Ok(m)
}

impl FreeModule {
    pub fn spectrum(&self) -> &Arc<SymmetricSpectrum> {
        &self.spectrum
    }

    pub fn generators(&self) -> &Arc<SymmetricSequence> {
        &self.generators
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    /// `[α, s, x]` at level `m`, with `s ∈ S^r` and `x ∈ X_{m-r}`.
    pub fn element(&self, m: usize, r: usize, alpha: &Permutation, s: &Simplex, x: &Simplex) -> Simplex {
        self.tensor.level(m).element(r, alpha, s, x)
    }

    /// `(r, α, s, x)`; `None` at the basepoint.
    pub fn decompose(&self, m: usize, w: &Simplex) -> Option<(usize, Permutation, Simplex, Simplex)> {
        self.tensor.level(m).decompose(w)
    }

    /// The map `S ⊗ X → Y` adjoint to a levelwise equivariant `φ: X → Y`,
    /// `[α, s, x] ↦ α · σ^r(s ∧ φ(x))`.
    pub fn adjoint(&self, y: &Arc<SymmetricSpectrum>, phi: &[SimplicialMap]) -> Result<SpectrumMap> {
        if y.bound() != self.spectrum.bound() {
            return Err(Error::BoundMismatch(y.bound(), self.spectrum.bound()));
        }
        let out = SpectrumMap::from_cells(self.spectrum.clone(), y.clone(), |m, w| {
            let (r, alpha, s, x) = self.decompose(m, &w).expect("non-base cell");
            let v = y.sigma_sphere(m - r, r, &s, &phi[m - r].apply(&x));
            y.level(m).act(&alpha, &v)
        });
        Ok(out)
    }

    /// `(n, K)` when this module is `F_n K`.
    pub fn free_on(&self) -> Option<(usize, &Arc<PointedSimplicialSet>)> {
        self.free_on.as_ref().map(|(n, k)| (*n, k))
    }

    /// The map `F_n K → Y` adjoint to `φ: K → Y_n`.
    pub fn free_adjoint(&self, y: &Arc<SymmetricSpectrum>, phi: &SimplicialMap) -> Result<SpectrumMap> {
        let (n, k) = self
            .free_on()
            .ok_or_else(|| Error::InvalidInput("not a free spectrum F_n K".into()))?;
        let g = free_level(n, k);
        let comps: Vec<SimplicialMap> = (0..=self.generators.bound())
            .map(|m| {
                let src = self.generators.level(m).space().clone();
                let tgt = y.space(m).clone();
                if m != n {
                    return SimplicialMap::constant(src, tgt);
                }
                SimplicialMap::from_fn(src, tgt, |c| match g.decompose(&Simplex::nondegenerate(c)) {
                    None => y.space(n).base_simplex(c.dim),
                    Some((coset, kk)) => y.level(n).act(&g.coset_permutation(coset), &phi.apply(&kk)),
                })
            })
            .collect();
        self.adjoint(y, &comps)
    }

    /// The generator `ι = [1, *, (1, k)]` of `F_n K` at level `n` for a
    /// simplex `k ∈ K`.
    pub fn generator(&self, k: &Simplex) -> Option<Simplex> {
        let (n, kk) = self.free_on()?;
        let g = free_level(n, kk).element(&Permutation::identity(n), k);
        let unit = Simplex::on_vertex(non_base_vertex(&sphere(0)), k.dim);
        Some(self.element(n, 0, &Permutation::identity(n), &unit, &g))
    }
}

/// `F_n(f): F_n K → F_n L`.
pub fn free_map(f: &SimplicialMap, n: usize, bound: usize) -> Result<(FreeModule, FreeModule, SpectrumMap)> {
    let a = free_f(n, f.source(), bound)?;
    let b = free_f(n, f.target(), bound)?;
    let (ga, gb) = (free_level(n, f.source()), free_level(n, f.target()));
    let map = SpectrumMap::from_cells(a.spectrum.clone(), b.spectrum.clone(), |m, w| {
        let (r, alpha, s, x) = a.decompose(m, &w).expect("non-base cell");
        let Some((coset, k)) = ga.decompose(&x) else {
            return b.spectrum.space(m).base_simplex(w.dim);
        };
        let x2 = gb.element_at(coset, &f.apply(&k));
        b.element(m, r, &alpha, &s, &x2)
    });
    Ok((a, b, map))
}

/// `λ_n: F_{n+1} S¹ → F_n S⁰`, adjoint to `S¹ → (F_n S⁰)_{n+1}`,
/// `t ↦ σ(t ∧ ι_n)`.
pub fn lambda_map(n: usize, bound: usize) -> Result<(FreeModule, FreeModule, SpectrumMap)> {
    if n + 1 > bound {
        return Err(Error::OutOfBound { level: n + 1, bound });
    }
    let src = free_f(n + 1, &sphere(1), bound)?;
    let tgt = free_f(n, &sphere(0), bound)?;
    let v = Simplex::on_vertex(non_base_vertex(&sphere(0)), 0);
    let iota = tgt.generator(&v).expect("free");
    let y = tgt.spectrum.clone();
    let phi = SimplicialMap::from_fn(sphere(1), y.space(n + 1).clone(), |c| {
        match sphere_smash(1).split(&Simplex::nondegenerate(c)) {
            None => y.space(n + 1).base_simplex(c.dim),
            Some(t) => y.sigma_apply(n, &t[0], &Simplex::on_vertex(iota.cell.index, c.dim)),
        }
    });
    let map = src.free_adjoint(&y, &phi)?;
    Ok((src, tgt, map))
}

/// The first vertex other than the basepoint.
pub(crate) fn non_base_vertex(x: &PointedSimplicialSet) -> usize {
    x.cells(0)
        .find(|&c| c != x.basepoint())
        .expect("a non-base vertex")
        .index
}

/// `F_{m+n}(K ∧ L) → F_m K ∧ F_n L`, adjoint to `k ∧ l ↦ [1, ι k, ι l]`.
pub fn free_smash_map(
    fk: &FreeModule,
    fl: &FreeModule,
    smash: &super::SpectrumSmash,
    fkl: &FreeModule,
    kl: &crate::sset::Smash,
) -> Result<SpectrumMap> {
    let (Some((m, _)), Some((n, _))) = (fk.free_on(), fl.free_on()) else {
        return Err(Error::InvalidInput("free spectra expected".into()));
    };
    let y = smash.spectrum().clone();
    let phi = SimplicialMap::from_fn(kl.space().clone(), y.space(m + n).clone(), |c| {
        match kl.split2(&Simplex::nondegenerate(c)) {
            None => y.space(m + n).base_simplex(c.dim),
            Some((k, l)) => {
                let a = fk.generator(&k).expect("free");
                let b = fl.generator(&l).expect("free");
                smash.class(m + n, m, &Permutation::identity(m + n), &a, &b)
            }
        }
    });
    fkl.free_adjoint(&y, &phi)
}
