use std::sync::Arc;

use super::{SpectrumMap, SymmetricSpectrum};
use crate::equivariant::{sphere_action, EquivariantSpace};
use crate::error::Result;
use crate::sset::{sphere_smash, Simplex, SimplicialMap};
use crate::symseq::{left_unitor, tensor, tensor_maps, twist_iso, SymSeqMap, SymmetricSequence, Tensor};

/// `t ∧ s ∈ S^{r+1}` for `t ∈ S¹`, `s ∈ S^r`.
pub(crate) fn sphere_concat(t: &Simplex, r: usize, s: &Simplex) -> Simplex {
    let out = sphere_smash(r + 1);
    match sphere_smash(r).split(s) {
        None => out.space().base_simplex(s.dim),
        Some(mut parts) => {
            parts.insert(0, *t);
            out.pair(t.dim, &parts)
        }
    }
}

/// `s ∧ s' ∈ S^{p+q}`.
pub(crate) fn sphere_product(p: usize, s: &Simplex, q: usize, s2: &Simplex) -> Simplex {
    let out = sphere_smash(p + q);
    match (sphere_smash(p).split(s), sphere_smash(q).split(s2)) {
        (Some(mut a), Some(b)) => {
            a.extend(b);
            out.pair(s.dim, &a)
        }
        _ => out.space().base_simplex(s.dim),
    }
}

/// The sphere spectrum `S = (S⁰, S¹, S², ...)`.
pub fn sphere_spectrum(bound: usize) -> SymmetricSpectrum {
    let seq = Arc::new(SymmetricSequence::from_levels((0..=bound).map(sphere_action).collect()));
    SymmetricSpectrum::from_sigma_cells(seq, |n, t, s| sphere_concat(&t, n, &s)).with_name("S")
}

/// `S̄`: a point at level 0 and `S^n` above.
pub fn bar_sphere(bound: usize) -> SymmetricSpectrum {
    let levels = (0..=bound)
        .map(|n| {
            if n == 0 {
                Arc::new(EquivariantSpace::point(0))
            } else {
                sphere_action(n)
            }
        })
        .collect();
    let seq = Arc::new(SymmetricSequence::from_levels(levels));
    SymmetricSpectrum::from_sigma_cells(seq, |n, t, s| {
        if n == 0 {
            sphere_smash(1).space().base_simplex(t.dim)
        } else {
            sphere_concat(&t, n, &s)
        }
    })
    .with_name("S̄")
}

/// The inclusion `S̄ → S`.
pub fn bar_sphere_inclusion(bar: &Arc<SymmetricSpectrum>, s: &Arc<SymmetricSpectrum>) -> SpectrumMap {
    SpectrumMap::from_cells(bar.clone(), s.clone(), |_, x| x)
}

/// The commutative monoid structure of `S` in symmetric sequences.
#[derive(Clone, Debug)]
pub struct MonoidWitness {
    pub tensor: Tensor,
    /// `m: S ⊗ S → S`
    pub multiplication: SymSeqMap,
    /// `m ∘ τ = m`
    pub commutative: bool,
    /// `m ∘ (η ⊗ 1)` is the left unitor.
    pub unital: bool,
}

impl MonoidWitness {
    pub fn new(s: &Arc<SymmetricSequence>) -> Result<Self> {
        let ss = tensor(s, s)?;
        let lvl = ss.levels().to_vec();
        let multiplication = ss.map_out(s, |n, p, coset, z| {
            let (a, b) = lvl[n].smash(p).split2(z).expect("non-base piece");
            let alpha = lvl[n].summand(p).coset_permutation(coset);
            s.level(n).act(&alpha, &sphere_product(p, &a, n - p, &b))
        });
        multiplication.check()?;
        let tw = twist_iso(&ss, &ss)?;
        let commutative = tw.then(&multiplication) == multiplication;
        let unit = Arc::new(SymmetricSequence::unit(s.bound()));
        let us = tensor(&unit, s)?;
        let eta = SymSeqMap::from_parts(
            unit.clone(),
            s.clone(),
            (0..=s.bound())
                .map(|n| {
                    SimplicialMap::from_fn(
                        unit.level(n).space().clone(),
                        s.level(n).space().clone(),
                        |c| {
                            if c == unit.level(n).space().basepoint() {
                                s.level(n).space().base_simplex(0)
                            } else {
                                Simplex::nondegenerate(c)
                            }
                        },
                    )
                })
                .collect(),
        );
        let eta_id = tensor_maps(&eta, &SymSeqMap::identity(s.clone()), &us, &ss);
        let unital = eta_id.then(&multiplication) == left_unitor(&us);
        Ok(Self {
            tensor: ss,
            multiplication,
            commutative,
            unital,
        })
    }
}
