use std::sync::Arc;

use super::{free_level, SymSeqMap, SymmetricSequence};
use crate::equivariant::{smash_action, wedge_equivariant, EquivariantSpace, Induced, Permutation};
use crate::error::{Error, Result};
use crate::sset::{PointedSimplicialSet, Simplex, SimplicialMap, Smash, Wedge};

/// Level `n` of `X ⊗ Y`: the wedge over `p + q = n` of
/// `(Σ_n)_+ ∧_{Σ_p×Σ_q} (X_p ∧ Y_q)`.
#[derive(Clone, Debug)]
pub struct TensorLevel {
    n: usize,
    smashes: Vec<Arc<Smash>>,
    summands: Vec<Induced>,
    wedge: Wedge,
    space: Arc<EquivariantSpace>,
}

impl TensorLevel {
    fn new(x: &SymmetricSequence, y: &SymmetricSequence, n: usize) -> Self {
        let mut smashes = Vec::with_capacity(n + 1);
        let mut summands = Vec::with_capacity(n + 1);
        for p in 0..=n {
            let (xp, yq) = (x.level(p), y.level(n - p));
            let sm = Arc::new(Smash::smash2(xp.space(), yq.space()));
            let action = smash_action(&sm, &[xp.clone(), yq.clone()]);
            summands.push(Induced::new(Arc::new(action)));
            smashes.push(sm);
        }
        let parts: Vec<Arc<EquivariantSpace>> = summands.iter().map(|s| s.space().clone()).collect();
        let (wedge, space) = wedge_equivariant(&parts);
        Self {
            n,
            smashes,
            summands,
            wedge,
            space: Arc::new(space),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &Arc<EquivariantSpace> {
        &self.space
    }

    pub fn summand(&self, p: usize) -> &Induced {
        &self.summands[p]
    }

    pub fn smash(&self, p: usize) -> &Arc<Smash> {
        &self.smashes[p]
    }

    /// The simplex `[α, x, y]` with `x ∈ X_p`, `y ∈ Y_{n-p}`.
    pub fn element(&self, p: usize, alpha: &Permutation, x: &Simplex, y: &Simplex) -> Simplex {
        let z = self.smashes[p].pair2(*x, *y);
        self.wedge.include(p, &self.summands[p].element(alpha, &z))
    }

    /// `[μ, x ∧ y]` for the shuffle with index `coset` in summand `p`.
    pub fn element_at(&self, p: usize, coset: usize, z: &Simplex) -> Simplex {
        self.wedge.include(p, &self.summands[p].element_at(coset, z))
    }

    /// `(p, μ, x, y)` with `μ` a shuffle; `None` at the basepoint.
    pub fn decompose(&self, s: &Simplex) -> Option<(usize, Permutation, Simplex, Simplex)> {
        let (p, t) = self.wedge.split(s)?;
        let (c, z) = self.summands[p].decompose(&t)?;
        let (x, y) = self.smashes[p].split2(&z)?;
        Some((p, self.summands[p].coset_permutation(c), x, y))
    }

    /// `(p, coset, z)` with `z ∈ X_p ∧ Y_q`.
    pub fn decompose_raw(&self, s: &Simplex) -> Option<(usize, usize, Simplex)> {
        let (p, t) = self.wedge.split(s)?;
        let (c, z) = self.summands[p].decompose(&t)?;
        Some((p, c, z))
    }

    fn ambient(&self) -> &Arc<PointedSimplicialSet> {
        self.space.space()
    }
}

/// `X ⊗ Y` with the decomposition of every level.
#[derive(Clone, Debug)]
pub struct Tensor {
    left: Arc<SymmetricSequence>,
    right: Arc<SymmetricSequence>,
    levels: Vec<TensorLevel>,
    sequence: Arc<SymmetricSequence>,
}

pub fn tensor(x: &Arc<SymmetricSequence>, y: &Arc<SymmetricSequence>) -> Result<Tensor> {
    if x.bound() != y.bound() {
        return Err(Error::BoundMismatch(x.bound(), y.bound()));
    }
    let levels: Vec<TensorLevel> = (0..=x.bound()).map(|n| TensorLevel::new(x, y, n)).collect();
    let sequence = Arc::new(SymmetricSequence::from_levels(
        levels.iter().map(|l| l.space.clone()).collect(),
    ));
    Ok(Tensor {
        left: x.clone(),
        right: y.clone(),
        levels,
        sequence,
    })
}

impl Tensor {
    pub fn sequence(&self) -> &Arc<SymmetricSequence> {
        &self.sequence
    }

    pub fn left(&self) -> &Arc<SymmetricSequence> {
        &self.left
    }

    pub fn right(&self) -> &Arc<SymmetricSequence> {
        &self.right
    }

    pub fn level(&self, n: usize) -> &TensorLevel {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[TensorLevel] {
        &self.levels
    }

    pub fn bound(&self) -> usize {
        self.levels.len() - 1
    }

    /// A levelwise map out of `X ⊗ Y` given on the pieces `(p, coset, z)`.
    pub(crate) fn map_out(
        &self,
        target: &Arc<SymmetricSequence>,
        mut f: impl FnMut(usize, usize, usize, &Simplex) -> Simplex,
    ) -> SymSeqMap {
        let components = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, lvl)| {
                let tgt = target.level(n).space().clone();
                let t2 = tgt.clone();
                SimplicialMap::from_fn(lvl.ambient().clone(), tgt, |c| {
                    match lvl.decompose_raw(&Simplex::nondegenerate(c)) {
                        None => t2.base_simplex(c.dim),
                        Some((p, coset, z)) => f(n, p, coset, &z),
                    }
                })
            })
            .collect();
        SymSeqMap::from_parts(self.sequence.clone(), target.clone(), components)
    }
}

fn same(a: &Arc<SymmetricSequence>, b: &Arc<SymmetricSequence>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// `f ⊗ g: X ⊗ Y → X' ⊗ Y'`.
pub fn tensor_maps(f: &SymSeqMap, g: &SymSeqMap, source: &Tensor, target: &Tensor) -> SymSeqMap {
    debug_assert!(same(f.source(), &source.left) && same(g.source(), &source.right));
    debug_assert!(same(f.target(), &target.left) && same(g.target(), &target.right));
    source.map_out(&target.sequence, |n, p, coset, z| {
        let (x, y) = source.levels[n].smashes[p].split2(z).expect("non-base piece");
        let (fx, gy) = (f.component(p).apply(&x), g.component(n - p).apply(&y));
        let w = target.levels[n].smashes[p].pair2(fx, gy);
        target.levels[n].element_at(p, coset, &w)
    })
}

/// `τ: X ⊗ Y → Y ⊗ X`, `[α, x, y] ↦ [α ρ_{q,p}, y, x]`.
pub fn twist_iso(source: &Tensor, target: &Tensor) -> Result<SymSeqMap> {
    if !(same(&source.left, &target.right) && same(&source.right, &target.left)) {
        return Err(Error::InvalidInput("twist target is not Y ⊗ X".into()));
    }
    Ok(source.map_out(&target.sequence, |n, p, coset, z| {
        let lvl = &source.levels[n];
        let (x, y) = lvl.smashes[p].split2(z).expect("non-base piece");
        let alpha = lvl.summands[p].coset_permutation(coset);
        let q = n - p;
        let beta = alpha.compose(&Permutation::shuffle_rho(q, p));
        target.levels[n].element(q, &beta, &y, &x)
    }))
}

/// `(X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`, given the four tensors involved.
pub fn assoc_iso(source: &Tensor, xy: &Tensor, target: &Tensor, yz: &Tensor) -> Result<SymSeqMap> {
    if !(same(&source.left, &xy.sequence)
        && same(&target.right, &yz.sequence)
        && same(&xy.left, &target.left)
        && same(&xy.right, &yz.left)
        && same(&source.right, &yz.right))
    {
        return Err(Error::InvalidInput("tensors do not fit an associator".into()));
    }
    Ok(source.map_out(&target.sequence, |n, a, coset, w| {
        let outer = &source.levels[n];
        let (u, z) = outer.smashes[a].split2(w).expect("non-base piece");
        let alpha = outer.summands[a].coset_permutation(coset);
        let c = n - a;
        let Some((p, beta, x, y)) = xy.levels[a].decompose(&u) else {
            return target.ambient_base(n, w.dim);
        };
        let q = a - p;
        let yzs = yz.levels[q + c].element(q, &Permutation::identity(q + c), &y, &z);
        let perm = alpha.compose(&Permutation::block_embed(&beta, &Permutation::identity(c)));
        target.levels[n].element(p, &perm, &x, &yzs)
    }))
}

impl Tensor {
    fn ambient_base(&self, n: usize, dim: usize) -> Simplex {
        self.levels[n].ambient().base_simplex(dim)
    }
}

/// `U ⊗ X → X` for the unit `U = (S⁰, *, ...)`.
pub fn left_unitor(t: &Tensor) -> SymSeqMap {
    let x = t.right.clone();
    t.map_out(&x, |n, p, coset, z| {
        debug_assert_eq!(p, 0);
        let lvl = &t.levels[n];
        let (_, xv) = lvl.smashes[p].split2(z).expect("non-base piece");
        let alpha = lvl.summands[p].coset_permutation(coset);
        x.level(n).act(&alpha, &xv)
    })
}

/// `X ⊗ U → X`.
pub fn right_unitor(t: &Tensor) -> SymSeqMap {
    let x = t.left.clone();
    t.map_out(&x, |n, p, coset, z| {
        debug_assert_eq!(p, n);
        let lvl = &t.levels[n];
        let (xv, _) = lvl.smashes[p].split2(z).expect("non-base piece");
        let alpha = lvl.summands[p].coset_permutation(coset);
        x.level(n).act(&alpha, &xv)
    })
}

/// `G_p K ⊗ G_q L → G_{p+q}(K ∧ L)`, `[α, (β, k), (γ, l)] ↦ (α(β×γ), k ∧ l)`.
pub fn free_tensor_iso(
    t: &Tensor,
    p: usize,
    q: usize,
    kl: &Smash,
    target: &Arc<SymmetricSequence>,
) -> SymSeqMap {
    let k = kl.factors()[0].clone();
    let l = kl.factors()[1].clone();
    let gk = free_level(p, &k);
    let gl = free_level(q, &l);
    let out = free_level(p + q, kl.space());
    t.map_out(target, |n, a, coset, z| {
        if a != p || n != p + q {
            return target.level(n).space().base_simplex(z.dim);
        }
        let lvl = &t.levels[n];
        let (u, v) = lvl.smashes[a].split2(z).expect("non-base piece");
        let alpha = lvl.summands[a].coset_permutation(coset);
        let (Some((cb, kk)), Some((cg, ll))) = (gk.decompose(&u), gl.decompose(&v)) else {
            return target.level(n).space().base_simplex(z.dim);
        };
        let perm = alpha.compose(&Permutation::block_embed(
            &gk.coset_permutation(cb),
            &gl.coset_permutation(cg),
        ));
        out.element(&perm, &kl.pair2(kk, ll))
    })
}
