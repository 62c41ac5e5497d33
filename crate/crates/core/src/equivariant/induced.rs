use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{EquivariantSpace, Permutation, Shuffle};
use crate::error::{Error, Result};
use crate::sset::{sphere_smash, Simplex, SimplicialMap, Smash, Wedge};

/// `(Σ_n)_+ ∧_H A` for a Young subgroup `H = Σ_{b_1} × ... × Σ_{b_m}` acting
/// on `A`: a wedge of copies of `A`, one per shuffle, with
/// `α · (μ, z) = (μ', β · z)` where `α μ = μ' β`.
#[derive(Clone, Debug)]
pub struct Induced {
    base: Arc<EquivariantSpace>,
    cosets: Vec<Shuffle>,
    coset_index: HashMap<Shuffle, usize>,
    wedge: Wedge,
    space: Arc<EquivariantSpace>,
}

impl Induced {
    pub fn new(base: Arc<EquivariantSpace>) -> Self {
        let blocks = base.blocks().to_vec();
        let n = base.degree();
        let cosets = Shuffle::all(&blocks);
        let coset_index: HashMap<Shuffle, usize> =
            cosets.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let wedge = Wedge::new(vec![base.space().clone(); cosets.len()]);
        let generators = (0..n.saturating_sub(1))
            .map(|j| {
                let moves: Vec<(usize, Option<usize>)> = cosets
                    .iter()
                    .map(|mu| {
                        let (nu, g) = mu.act_generator(j, &blocks);
                        (coset_index[&nu], g)
                    })
                    .collect();
                Some(SimplicialMap::from_fn(
                    wedge.space().clone(),
                    wedge.space().clone(),
                    |c| match wedge.split(&Simplex::nondegenerate(c)) {
                        None => Simplex::nondegenerate(c),
                        Some((mu, z)) => {
                            let (nu, g) = moves[mu];
                            let z = match g {
                                Some(g) => base.generator(g).apply(&z),
                                None => z,
                            };
                            wedge.include(nu, &z)
                        }
                    },
                ))
            })
            .collect();
        let space = Arc::new(EquivariantSpace::from_parts(
            wedge.space().clone(),
            vec![n],
            generators,
        ));
        Self {
            base,
            cosets,
            coset_index,
            wedge,
            space,
        }
    }

    pub fn base(&self) -> &Arc<EquivariantSpace> {
        &self.base
    }

    pub fn space(&self) -> &Arc<EquivariantSpace> {
        &self.space
    }

    pub fn wedge(&self) -> &Wedge {
        &self.wedge
    }

    pub fn cosets(&self) -> &[Shuffle] {
        &self.cosets
    }

    pub fn coset_permutation(&self, coset: usize) -> Permutation {
        self.cosets[coset].to_permutation(self.base.blocks())
    }

    /// The simplex `[α, z]`.
    pub fn element(&self, alpha: &Permutation, z: &Simplex) -> Simplex {
        let (mu, beta) = Shuffle::factor(alpha, self.base.blocks());
        let z = self.base.act(&beta, z);
        self.wedge.include(self.coset_index[&mu], &z)
    }

    /// `[μ, z]` for the shuffle with index `coset`.
    pub fn element_at(&self, coset: usize, z: &Simplex) -> Simplex {
        self.wedge.include(coset, z)
    }

    /// The coset index and base simplex of a simplex; `None` at the basepoint.
    pub fn decompose(&self, s: &Simplex) -> Option<(usize, Simplex)> {
        self.wedge.split(s)
    }

    /// The induced map `Ind(A) → Ind(B)` of an `H`-map `f: A → B`.
    pub fn induced_map(&self, other: &Induced, f: &SimplicialMap) -> SimplicialMap {
        SimplicialMap::from_fn(self.wedge.space().clone(), other.wedge.space().clone(), |c| {
            match self.decompose(&Simplex::nondegenerate(c)) {
                None => other.wedge.space().base_simplex(c.dim),
                Some((mu, z)) => other.element_at(mu, &f.apply(&z)),
            }
        })
    }
}

/// `(Σ_n)_+ ∧_{Σ_p×Σ_q} A`.
pub fn balanced_smash(n: usize, p: usize, q: usize, a: &EquivariantSpace) -> Result<Induced> {
    if p + q != n {
        return Err(Error::DegreeMismatch(p + q, n));
    }
    if a.degree() != n {
        return Err(Error::DegreeMismatch(a.degree(), n));
    }
    Ok(Induced::new(Arc::new(a.restrict(vec![p, q]))))
}

/// `S^n` with `Σ_n` permuting the smash coordinates. Shared per `n`.
pub fn sphere_action(n: usize) -> Arc<EquivariantSpace> {
    static CACHE: OnceLock<Mutex<Vec<Option<Arc<EquivariantSpace>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    if let Some(Some(s)) = cache.lock().unwrap().get(n) {
        return s.clone();
    }
    let sm = sphere_smash(n);
    let generators = (0..n.saturating_sub(1))
        .map(|j| Some(coordinate_swap(&sm, j)))
        .collect();
    let built = Arc::new(EquivariantSpace::from_parts(
        sm.space().clone(),
        vec![n],
        generators,
    ));
    let mut guard = cache.lock().unwrap();
    if guard.len() <= n {
        guard.resize(n + 1, None);
    }
    guard[n].get_or_insert(built).clone()
}

/// The automorphism of an iterated smash swapping factors `j` and `j + 1`
/// (which must be equal objects).
pub fn coordinate_swap(sm: &Smash, j: usize) -> SimplicialMap {
    SimplicialMap::from_fn(sm.space().clone(), sm.space().clone(), |c| {
        let mut parts = sm.components(c).to_vec();
        if parts.is_empty() {
            return Simplex::nondegenerate(c);
        }
        parts.swap(j, j + 1);
        sm.pair(c.dim, &parts)
    })
}

/// `A_1 ∧ ... ∧ A_m` for block-equivariant `A_i`, acting by the product of
/// the Young subgroups.
pub fn smash_equivariant(factors: &[Arc<EquivariantSpace>]) -> (Arc<Smash>, EquivariantSpace) {
    let sm = Arc::new(Smash::smash(factors.iter().map(|f| f.space().clone()).collect()));
    let action = smash_action(&sm, factors);
    (sm, action)
}

/// The product action of block-equivariant factors on an existing smash of
/// their spaces.
pub fn smash_action(sm: &Arc<Smash>, factors: &[Arc<EquivariantSpace>]) -> EquivariantSpace {
    let mut blocks = Vec::new();
    let mut generators = Vec::new();
    let mut seen = 0;
    for (i, f) in factors.iter().enumerate() {
        if seen > 0 && f.degree() > 0 {
            generators.push(None);
        }
        seen += f.degree();
        blocks.extend_from_slice(f.blocks());
        for (j, g) in f.generators().iter().enumerate() {
            generators.push(g.as_ref().map(|_| {
                SimplicialMap::from_fn(sm.space().clone(), sm.space().clone(), |c| {
                    match sm.split(&Simplex::nondegenerate(c)) {
                        None => Simplex::nondegenerate(c),
                        Some(mut parts) => {
                            parts[i] = factors[i].generator(j).apply(&parts[i]);
                            sm.pair(c.dim, &parts)
                        }
                    }
                })
            }));
        }
    }
    let blocks: Vec<usize> = blocks.into_iter().filter(|&b| b > 0).collect();
    let blocks = if blocks.is_empty() { vec![0] } else { blocks };
    EquivariantSpace::from_parts(sm.space().clone(), blocks, generators)
}
