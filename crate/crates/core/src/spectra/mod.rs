//! Symmetric spectra truncated at a bound: levels `X_0, ..., X_N` with
//! `Σ_n` actions and structure maps `σ: S¹ ∧ X_n → X_{n+1}` for `n < N`.

mod free;
mod ops;
mod smash;
mod sphere;

use std::sync::Arc;

pub use free::{free_f, free_map, free_module, free_smash_map, lambda_map, FreeModule};
pub use ops::{
    generating_sets, mapping_cylinder, prolong_map, prolong_smash, pushout_product,
    pushout_product_spectra, pushout_product_sset, pushout_spectra, shift, Generator,
    GeneratingSet, MappingCylinder, Prolonged, PushoutProduct, SpectrumPushout,
};
pub use smash::{smash, smash_maps, SpectrumSmash};
pub use sphere::{bar_sphere, bar_sphere_inclusion, sphere_spectrum, MonoidWitness};

use crate::equivariant::{is_equivariant, sphere_action, EquivariantSpace, Permutation};
use crate::error::{Error, Result};
use crate::sset::{circle, sphere_smash, PointedSimplicialSet, Simplex, SimplicialMap, Smash};
use crate::symseq::SymmetricSequence;

#[derive(Clone, Debug)]
pub struct SymmetricSpectrum {
    name: Option<String>,
    sequence: Arc<SymmetricSequence>,
    suspensions: Vec<Arc<Smash>>,
    sigma: Vec<SimplicialMap>,
}

impl SymmetricSpectrum {
    /// Assembles a spectrum; `sigma[n]` must be a map out of `S¹ ∧ X_n`
    /// built as [`SymmetricSpectrum::suspension_of`] the level. Only shapes
    /// and simplicial-map axioms are checked here; see [`validate`].
    pub fn new(sequence: Arc<SymmetricSequence>, sigma: Vec<SimplicialMap>) -> Result<Self> {
        if sequence.bound() != sigma.len() {
            return Err(Error::InvalidInput("wrong number of structure maps".into()));
        }
        let out = Self::from_sigma_fn(sequence, |n, _| sigma[n].clone());
        for (n, s) in sigma.iter().enumerate() {
            if s.source().as_ref() != out.suspensions[n].space().as_ref()
                || s.target().as_ref() != out.level(n + 1).space().as_ref()
            {
                return Err(Error::InvalidInput(format!(
                    "structure map {n} has the wrong source or target"
                )));
            }
            s.verify()?;
        }
        Ok(out)
    }

    /// Builds the suspensions `S¹ ∧ X_n` and asks `f` for each `σ_n`.
    pub(crate) fn from_sigma_fn(
        sequence: Arc<SymmetricSequence>,
        mut f: impl FnMut(usize, &Arc<Smash>) -> SimplicialMap,
    ) -> Self {
        let bound = sequence.bound();
        let suspensions: Vec<Arc<Smash>> = (0..bound)
            .map(|n| Arc::new(Self::suspension_of(sequence.level(n).space())))
            .collect();
        let sigma = suspensions
            .iter()
            .enumerate()
            .map(|(n, s)| {
                let m = f(n, s);
                // share the canonical objects
                SimplicialMap::from_fn(s.space().clone(), sequence.level(n + 1).space().clone(), |c| {
                    m.image_of(c)
                })
            })
            .collect();
        Self {
            name: None,
            sequence,
            suspensions,
            sigma,
        }
    }

    /// Structure maps given cellwise on `t ∧ x`.
    pub(crate) fn from_sigma_cells(
        sequence: Arc<SymmetricSequence>,
        mut f: impl FnMut(usize, Simplex, Simplex) -> Simplex,
    ) -> Self {
        let seq = sequence.clone();
        Self::from_sigma_fn(sequence, |n, susp| {
            let tgt = seq.level(n + 1).space().clone();
            let t2 = tgt.clone();
            SimplicialMap::from_fn(susp.space().clone(), tgt, |c| {
                match susp.split2(&Simplex::nondegenerate(c)) {
                    None => t2.base_simplex(c.dim),
                    Some((t, x)) => f(n, t, x),
                }
            })
        })
    }

    /// `S¹ ∧ X` in its canonical form.
    pub fn suspension_of(x: &Arc<PointedSimplicialSet>) -> Smash {
        Smash::smash2(&circle(), x)
    }

    /// The spectrum that is a point at every level.
    pub fn point(bound: usize) -> Self {
        let seq = Arc::new(SymmetricSequence::point(bound));
        Self::from_sigma_cells(seq, |n, _, _| unreachable!("point spectrum level {n} has no cells"))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn bound(&self) -> usize {
        self.sequence.bound()
    }

    pub fn sequence(&self) -> &Arc<SymmetricSequence> {
        &self.sequence
    }

    pub fn level(&self, n: usize) -> &Arc<EquivariantSpace> {
        self.sequence.level(n)
    }

    pub fn space(&self, n: usize) -> &Arc<PointedSimplicialSet> {
        self.sequence.level(n).space()
    }

    pub fn sigma(&self, n: usize) -> &SimplicialMap {
        &self.sigma[n]
    }

    pub fn sigmas(&self) -> &[SimplicialMap] {
        &self.sigma
    }

    pub fn suspension(&self, n: usize) -> &Arc<Smash> {
        &self.suspensions[n]
    }

    /// `σ(t ∧ x)` for `x ∈ X_n`.
    pub fn sigma_apply(&self, n: usize, t: &Simplex, x: &Simplex) -> Simplex {
        self.sigma[n].apply(&self.suspensions[n].pair2(*t, *x))
    }

    /// `σ^p(t_1 ∧ ... ∧ t_p ∧ x) = σ(t_1 ∧ σ(t_2 ∧ ... σ(t_p ∧ x)))`.
    pub fn sigma_power(&self, n: usize, ts: &[Simplex], x: &Simplex) -> Simplex {
        let mut cur = *x;
        let mut level = n;
        for t in ts.iter().rev() {
            cur = self.sigma_apply(level, t, &cur);
            level += 1;
        }
        cur
    }

    /// `σ^r(s ∧ x)` for `s ∈ S^r` and `x ∈ X_n`.
    pub fn sigma_sphere(&self, n: usize, r: usize, s: &Simplex, x: &Simplex) -> Simplex {
        match sphere_smash(r).split(s) {
            None => self.space(n + r).base_simplex(s.dim),
            Some(ts) => self.sigma_power(n, &ts, x),
        }
    }

    /// The right action `x · s = ρ_{r,p} · σ^r(s ∧ x)` of `S^r` on `X_p`.
    pub fn right_action(&self, p: usize, x: &Simplex, r: usize, s: &Simplex) -> Simplex {
        let y = self.sigma_sphere(p, r, s, x);
        self.level(p + r).act(&Permutation::shuffle_rho(r, p), &y)
    }

    /// The first `bound + 1` levels.
    pub fn truncate(&self, bound: usize) -> SymmetricSpectrum {
        let b = bound.min(self.bound());
        SymmetricSpectrum {
            name: self.name.clone(),
            sequence: Arc::new(self.sequence.truncate(b)),
            suspensions: self.suspensions[..b].to_vec(),
            sigma: self.sigma[..b].to_vec(),
        }
    }
}

/// The first failing equivariance check of a candidate spectrum.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ValidationFailure {
    pub p: usize,
    pub n: usize,
    pub reason: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ValidationReport {
    /// Every `σ^p` with `p + n ≤ N` is `Σ_p × Σ_n`-equivariant.
    pub ok: bool,
    /// Only `σ` and `σ²` checked.
    pub shortcut_ok: bool,
    pub failure: Option<ValidationFailure>,
}

/// Checks levels, structure maps and the equivariance of every `σ^p`,
/// ordered by target level then `p`.
pub fn validate(x: &SymmetricSpectrum) -> ValidationReport {
    let fail = |p, n, reason: String| ValidationReport {
        ok: false,
        shortcut_ok: false,
        failure: Some(ValidationFailure { p, n, reason }),
    };
    for (n, l) in x.sequence.levels().iter().enumerate() {
        if let Err(e) = l.check() {
            return fail(0, n, format!("level {n}: {e}"));
        }
    }
    for (n, s) in x.sigma.iter().enumerate() {
        if let Err(e) = s.verify() {
            return fail(1, n, format!("structure map: {e}"));
        }
    }
    let mut first = None;
    let mut shortcut_ok = true;
    for m in 1..=x.bound() {
        for p in 1..=m {
            let n = m - p;
            if let Some(reason) = sigma_power_failure(x, p, n) {
                if p <= 2 {
                    shortcut_ok = false;
                }
                first.get_or_insert(ValidationFailure { p, n, reason });
            }
        }
    }
    ValidationReport {
        ok: first.is_none(),
        shortcut_ok,
        failure: first,
    }
}

/// Checks that `σ^p: S^p ∧ X_n → X_{p+n}` commutes with the generators of
/// `Σ_p × Σ_n`.
pub fn sigma_power_failure(x: &SymmetricSpectrum, p: usize, n: usize) -> Option<String> {
    let sp = sphere_action(p);
    let xn = x.level(n);
    let target = x.level(p + n);
    let sm = Smash::smash2(sp.space(), xn.space());
    let phi = |s: &Simplex| match sm.split2(s) {
        None => target.space().base_simplex(s.dim),
        Some((a, b)) => x.sigma_sphere(n, p, &a, &b),
    };
    for c in sm.space().all_cells() {
        let cs = Simplex::nondegenerate(c);
        let Some((a, b)) = sm.split2(&cs) else { continue };
        let image = phi(&cs);
        for j in 0..p.saturating_sub(1) {
            let moved = sm.pair2(sp.generator(j).apply(&a), b);
            if phi(&moved) != target.generator(j).apply(&image) {
                return Some(format!("σ^{p} on S^{p} ∧ X_{n} does not commute with the transposition ({} {}) of Σ_{p}", j + 1, j + 2));
            }
        }
        for j in 0..n.saturating_sub(1) {
            let moved = sm.pair2(a, xn.generator(j).apply(&b));
            if phi(&moved) != target.generator(p + j).apply(&image) {
                return Some(format!("σ^{p} on S^{p} ∧ X_{n} does not commute with the transposition ({} {}) of Σ_{n}", j + 1, j + 2));
            }
        }
    }
    None
}

/// A map of spectra: equivariant levelwise maps commuting with `σ`.
#[derive(Clone, Debug)]
pub struct SpectrumMap {
    source: Arc<SymmetricSpectrum>,
    target: Arc<SymmetricSpectrum>,
    components: Vec<SimplicialMap>,
}

impl PartialEq for SpectrumMap {
    fn eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.images() == b.images())
    }
}

impl SpectrumMap {
    pub fn new(
        source: Arc<SymmetricSpectrum>,
        target: Arc<SymmetricSpectrum>,
        components: Vec<SimplicialMap>,
    ) -> Result<Self> {
        let out = Self::from_parts(source, target, components);
        out.check()?;
        Ok(out)
    }

    pub(crate) fn from_parts(
        source: Arc<SymmetricSpectrum>,
        target: Arc<SymmetricSpectrum>,
        components: Vec<SimplicialMap>,
    ) -> Self {
        // re-target every component at the canonical level objects
        let components = components
            .into_iter()
            .enumerate()
            .map(|(n, f)| {
                SimplicialMap::from_fn(source.space(n).clone(), target.space(n).clone(), |c| {
                    f.image_of(c)
                })
            })
            .collect();
        Self {
            source,
            target,
            components,
        }
    }

    /// A map given cellwise at every level.
    pub(crate) fn from_cells(
        source: Arc<SymmetricSpectrum>,
        target: Arc<SymmetricSpectrum>,
        mut f: impl FnMut(usize, Simplex) -> Simplex,
    ) -> Self {
        let components = (0..=source.bound())
            .map(|n| {
                SimplicialMap::from_fn(source.space(n).clone(), target.space(n).clone(), |c| {
                    if c == source.space(n).basepoint() {
                        target.space(n).base_simplex(0)
                    } else {
                        f(n, Simplex::nondegenerate(c))
                    }
                })
            })
            .collect();
        Self {
            source,
            target,
            components,
        }
    }

    pub fn identity(x: Arc<SymmetricSpectrum>) -> Self {
        Self::from_cells(x.clone(), x, |_, s| s)
    }

    /// The unique map from the point spectrum.
    pub fn from_point(x: Arc<SymmetricSpectrum>) -> Self {
        Self::from_cells(Arc::new(SymmetricSpectrum::point(x.bound())), x, |_, s| s)
    }

    /// The unique map to the point spectrum.
    pub fn to_point(x: Arc<SymmetricSpectrum>) -> Self {
        let pt = Arc::new(SymmetricSpectrum::point(x.bound()));
        Self::from_cells(x, pt, |_, s| Simplex::on_vertex(0, s.dim))
    }

    pub fn source(&self) -> &Arc<SymmetricSpectrum> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SymmetricSpectrum> {
        &self.target
    }

    pub fn component(&self, n: usize) -> &SimplicialMap {
        &self.components[n]
    }

    pub fn components(&self) -> &[SimplicialMap] {
        &self.components
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SpectrumMap) -> SpectrumMap {
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(a, b)| a.then(b))
            .collect();
        Self {
            source: self.source.clone(),
            target: next.target.clone(),
            components,
        }
    }

    /// The first `bound + 1` components, between truncated spectra.
    pub fn truncate(&self, bound: usize) -> SpectrumMap {
        let b = bound.min(self.source.bound());
        SpectrumMap {
            source: Arc::new(self.source.truncate(b)),
            target: Arc::new(self.target.truncate(b)),
            components: self.components[..=b].to_vec(),
        }
    }

    pub fn is_monomorphism(&self) -> bool {
        self.components.iter().all(SimplicialMap::is_monomorphism)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(SimplicialMap::is_isomorphism)
    }

    /// Components are simplicial and equivariant, and commute with `σ`.
    pub fn check(&self) -> Result<()> {
        if self.source.bound() != self.target.bound() || self.components.len() != self.source.bound() + 1
        {
            return Err(Error::BoundMismatch(self.source.bound(), self.target.bound()));
        }
        for (n, f) in self.components.iter().enumerate() {
            f.verify()?;
            if !is_equivariant(f, self.source.level(n), self.target.level(n))? {
                return Err(Error::InvalidInput(format!("component {n} is not equivariant")));
            }
        }
        for n in 0..self.source.bound() {
            let susp = self.source.suspension(n);
            for c in susp.space().all_cells() {
                let Some((t, x)) = susp.split2(&Simplex::nondegenerate(c)) else { continue };
                let lhs = self.components[n + 1].apply(&self.source.sigma(n).image_of(c));
                let rhs = self.target.sigma_apply(n, &t, &self.components[n].apply(&x));
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!(
                        "map does not commute with σ at level {n}"
                    )));
                }
            }
        }
        Ok(())
    }
}
