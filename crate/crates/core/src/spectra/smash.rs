use std::sync::Arc;

use super::{SpectrumMap, SymmetricSpectrum};
use crate::equivariant::{EquivariantSpace, Permutation, Shuffle};
use crate::error::{Error, Result};
use crate::sset::{sphere_smash, Quotient, Simplex, Smash};
use crate::symseq::{tensor, SymmetricSequence, Tensor};

/// `X ∧ Y`: the coequalizer of the two actions `X ⊗ S ⊗ Y ⇉ X ⊗ Y`,
/// computed levelwise as a quotient of `X ⊗ Y` by
/// `[μ, x·s, y] ~ [μ, x, s·y]`.
#[derive(Clone, Debug)]
pub struct SpectrumSmash {
    left: Arc<SymmetricSpectrum>,
    right: Arc<SymmetricSpectrum>,
    tensor: Tensor,
    quotients: Vec<Quotient>,
    spectrum: Arc<SymmetricSpectrum>,
}

pub fn smash(x: &Arc<SymmetricSpectrum>, y: &Arc<SymmetricSpectrum>) -> Result<SpectrumSmash> {
    if x.bound() != y.bound() {
        return Err(Error::BoundMismatch(x.bound(), y.bound()));
    }
    let t = tensor(x.sequence(), y.sequence())?;
    let mut quotients = Vec::with_capacity(t.bound() + 1);
    let mut levels = Vec::with_capacity(t.bound() + 1);
    for n in 0..=t.bound() {
        let lvl = t.level(n);
        let rels = relations(x, y, &t, n);
        let q = Quotient::new(lvl.space().space().clone(), &rels)?;
        let generators = lvl
            .space()
            .generators()
            .iter()
            .map(|g| g.as_ref().map(|g| q.descend(&g.then(q.map()))))
            .collect();
        levels.push(Arc::new(EquivariantSpace::from_parts(q.space().clone(), vec![n], generators)));
        quotients.push(q);
    }
    let seq = Arc::new(SymmetricSequence::from_levels(levels));
    let spectrum = SymmetricSpectrum::from_sigma_cells(seq, |n, tt, w| {
        let lift = lift(&quotients[n], &w);
        let (p, alpha, a, b) = t.level(n).decompose(&lift).expect("non-base simplex");
        let beta = Permutation::block_embed(&Permutation::identity(1), &alpha);
        let v = t.level(n + 1).element(p + 1, &beta, &x.sigma_apply(p, &tt, &a), &b);
        quotients[n + 1].project(&v)
    });
    Ok(SpectrumSmash {
        left: x.clone(),
        right: y.clone(),
        tensor: t,
        quotients,
        spectrum: Arc::new(spectrum),
    })
}

/// A simplex of the source projecting onto `w`.
fn lift(q: &Quotient, w: &Simplex) -> Simplex {
    Simplex::new(w.dim, w.degen, q.representative(w.cell))
}

fn relations(x: &SymmetricSpectrum, y: &SymmetricSpectrum, t: &Tensor, n: usize) -> Vec<(Simplex, Simplex)> {
    let lvl = t.level(n);
    let mut out = Vec::new();
    for p in 0..n {
        for r in 1..=n - p {
            let q = n - p - r;
            let blocks = [p, r, q];
            let shuffles: Vec<Permutation> =
                Shuffle::all(&blocks).iter().map(|m| m.to_permutation(&blocks)).collect();
            let sm = Smash::smash(vec![x.space(p).clone(), sphere_smash(r).space().clone(), y.space(q).clone()]);
            for c in sm.space().all_cells() {
                let Some(parts) = sm.split(&Simplex::nondegenerate(c)) else { continue };
                let (a, s, b) = (parts[0], parts[1], parts[2]);
                let xs = x.right_action(p, &a, r, &s);
                let sy = y.sigma_sphere(q, r, &s, &b);
                for mu in &shuffles {
                    out.push((lvl.element(p + r, mu, &xs, &b), lvl.element(p, mu, &a, &sy)));
                }
            }
        }
    }
    out
}

impl SpectrumSmash {
    pub fn spectrum(&self) -> &Arc<SymmetricSpectrum> {
        &self.spectrum
    }

    pub fn left(&self) -> &Arc<SymmetricSpectrum> {
        &self.left
    }

    pub fn right(&self) -> &Arc<SymmetricSpectrum> {
        &self.right
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn quotient(&self, n: usize) -> &Quotient {
        &self.quotients[n]
    }

    /// The class of `[α, x, y]` with `x ∈ X_p`.
    pub fn class(&self, n: usize, p: usize, alpha: &Permutation, x: &Simplex, y: &Simplex) -> Simplex {
        self.quotients[n].project(&self.tensor.level(n).element(p, alpha, x, y))
    }

    /// A representative `(p, μ, x, y)`; `None` at the basepoint.
    pub fn decompose(&self, n: usize, w: &Simplex) -> Option<(usize, Permutation, Simplex, Simplex)> {
        self.tensor.level(n).decompose(&lift(&self.quotients[n], w))
    }

    /// The map out of `X ∧ Y` given on representatives `(n, p, μ, x, y)`.
    pub(crate) fn map_out(
        &self,
        target: &Arc<SymmetricSpectrum>,
        mut f: impl FnMut(usize, usize, &Permutation, &Simplex, &Simplex) -> Simplex,
    ) -> SpectrumMap {
        SpectrumMap::from_cells(self.spectrum.clone(), target.clone(), |n, w| {
            let (p, mu, a, b) = self.decompose(n, &w).expect("non-base cell");
            f(n, p, &mu, &a, &b)
        })
    }

    /// `S ∧ X → X`, `[α, s, x] ↦ α · σ^r(s ∧ x)`; needs `left` to be `S`.
    pub fn left_unit(&self) -> SpectrumMap {
        let x = self.right.clone();
        self.map_out(&x, |n, r, alpha, s, b| {
            x.level(n).act(alpha, &x.sigma_sphere(n - r, r, s, b))
        })
    }

    /// `X ∧ S → X`, `[α, x, s] ↦ α · (x · s)`; needs `right` to be `S`.
    pub fn right_unit(&self) -> SpectrumMap {
        let x = self.left.clone();
        self.map_out(&x, |n, p, alpha, a, s| {
            x.level(n).act(alpha, &x.right_action(p, a, n - p, s))
        })
    }

    /// `X ∧ Y → Y ∧ X`; `target` must be `smash(Y, X)`.
    pub fn twist(&self, target: &SpectrumSmash) -> SpectrumMap {
        self.map_out(&target.spectrum, |n, p, alpha, a, b| {
            let q = n - p;
            target.class(n, q, &alpha.compose(&Permutation::shuffle_rho(q, p)), b, a)
        })
    }

    /// `(X ∧ Y) ∧ Z → X ∧ (Y ∧ Z)`. `self` is the outer smash on the left,
    /// `xy` its inner factor, `target` and `yz` the right-hand side.
    pub fn associator(&self, xy: &SpectrumSmash, target: &SpectrumSmash, yz: &SpectrumSmash) -> SpectrumMap {
        self.map_out(&target.spectrum, |n, a, alpha, u, z| {
            let c = n - a;
            let Some((p, beta, x, y)) = xy.decompose(a, u) else {
                return target.spectrum.space(n).base_simplex(u.dim);
            };
            let q = a - p;
            let w = yz.class(q + c, q, &Permutation::identity(q + c), &y, z);
            let perm = alpha.compose(&Permutation::block_embed(&beta, &Permutation::identity(c)));
            target.class(n, p, &perm, &x, &w)
        })
    }
}

/// `f ∧ g` between the given smashes.
pub fn smash_maps(f: &SpectrumMap, g: &SpectrumMap, source: &SpectrumSmash, target: &SpectrumSmash) -> SpectrumMap {
    source.map_out(&target.spectrum, |n, p, alpha, a, b| {
        target.class(n, p, alpha, &f.component(p).apply(a), &g.component(n - p).apply(b))
    })
}
