//! Stable colimit reports for spectra and maps of spectra.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::chains::{chain_map, normalized_chains, suspension_into, ChainComplex, ChainMap};
use super::homology::{free_part_matrix, is_unimodular, Homology, HomologyGroup, Reduction};
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::spectra::{SpectrumMap, SymmetricSpectrum};
use crate::sset::{sphere_smash, PointedSimplicialSet, SimplicialMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    Homotopy,
    HomologyOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelGroup {
    pub n: usize,
    pub group: HomologyGroup,
}

/// `H_{k+n}(X_n)` for each level and the transition matrices on free parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableColimitReport {
    pub k: i64,
    pub levels: Vec<LevelGroup>,
    /// `maps[i]`: level `i` to level `i + 1`
    pub maps: Vec<Matrix>,
    pub stabilized: bool,
    pub stable_group: Option<HomologyGroup>,
    pub interpretation: Interpretation,
}

/// True iff `x` has no nondegenerate non-base simplices in dimensions
/// `1..d`, which makes it `(d-1)`-connected.
pub fn hurewicz_gate(x: &PointedSimplicialSet, d: usize) -> bool {
    (1..d).all(|k| x.count(k) == 0)
}

fn degree(k: i64, n: usize) -> Option<usize> {
    usize::try_from(k + n as i64).ok()
}

struct LevelHomology {
    complex: ChainComplex,
    homology: Option<Homology>,
}

fn level_homology(x: &Arc<PointedSimplicialSet>, deg: Option<usize>) -> LevelHomology {
    let complex = normalized_chains(x);
    let homology = deg.map(|d| Homology::compute(Arc::new(Reduction::new(&complex)), d));
    LevelHomology { complex, homology }
}

fn group(h: &LevelHomology) -> HomologyGroup {
    h.homology.as_ref().map(|h| h.group.clone()).unwrap_or_default()
}

/// Stabilization: at least two transitions, the last two isomorphisms on
/// free parts between groups with equal torsion.
fn stabilized(levels: &[LevelGroup], maps: &[Matrix]) -> bool {
    let t = maps.len();
    t >= 2
        && (t - 2..t).all(|i| {
            let (a, b) = (&levels[i].group, &levels[i + 1].group);
            a == b && is_unimodular(&maps[i], a.rank)
        })
}

/// The transition `H_{k+n}(X_n) → H_{k+n+1}(S¹ ∧ X_n) → H_{k+n+1}(X_{n+1})`.
fn transition(x: &SymmetricSpectrum, n: usize, src: &LevelHomology, tgt: &LevelHomology) -> Matrix {
    let (Some(hs), Some(ht)) = (&src.homology, &tgt.homology) else {
        let rows = tgt.homology.as_ref().map_or(0, |h| h.group.rank);
        let cols = src.homology.as_ref().map_or(0, |h| h.group.rank);
        return vec![vec![BigInt::from(0); cols]; rows];
    };
    let susp = suspension_into(x.suspension(n));
    let sigma = chain_map(x.sigma(n));
    let e = susp.then(&sigma);
    free_part_matrix(hs, ht, |z| e.apply(hs.degree, z))
}

/// `π_k X = colim_n π_{k+n} X_n` read through homology.
pub fn stable_colimit(x: &SymmetricSpectrum, k: i64, require_homotopy: bool) -> Result<StableColimitReport> {
    let mut gate = true;
    for n in 0..=x.bound() {
        if let Some(d) = degree(k, n) {
            if !hurewicz_gate(x.space(n), d) {
                if require_homotopy {
                    return Err(Error::HurewiczGate { level: n, dim: first_cell_below(x.space(n), d), degree: d });
                }
                gate = false;
            }
        }
    }
    let hs: Vec<LevelHomology> = (0..=x.bound()).map(|n| level_homology(x.space(n), degree(k, n))).collect();
    let levels: Vec<LevelGroup> = hs.iter().enumerate().map(|(n, h)| LevelGroup { n, group: group(h) }).collect();
    let maps: Vec<Matrix> = (0..x.bound()).map(|n| transition(x, n, &hs[n], &hs[n + 1])).collect();
    let stab = stabilized(&levels, &maps);
    Ok(StableColimitReport {
        k,
        stable_group: stab.then(|| levels.last().expect("level 0").group.clone()),
        levels,
        maps,
        stabilized: stab,
        interpretation: if gate { Interpretation::Homotopy } else { Interpretation::HomologyOnly },
    })
}

fn first_cell_below(x: &PointedSimplicialSet, d: usize) -> usize {
    (1..d).find(|&k| x.count(k) > 0).unwrap_or(0)
}

/// The normalized complex of the simplicial abelian group `ℤ[Sⁿ]`, the
/// level `n` of `HZ`; its homology is the homotopy of that level.
pub fn hz_level_complex(n: usize) -> ChainComplex {
    normalized_chains(&sphere_smash(n).space().clone())
}

/// The stable colimit of `π_{k+n} HZ_n = H_{k+n}(hz_level_complex(n))`
/// along suspension followed by the structure isomorphism.
pub fn hz_stable_colimit(k: i64, bound: usize) -> StableColimitReport {
    let x = crate::spectra::sphere_spectrum(bound);
    let hs: Vec<LevelHomology> = (0..=bound)
        .map(|n| {
            let complex = hz_level_complex(n);
            let homology = degree(k, n).map(|d| Homology::compute(Arc::new(Reduction::new(&complex)), d));
            LevelHomology { complex, homology }
        })
        .collect();
    let levels: Vec<LevelGroup> = hs.iter().enumerate().map(|(n, h)| LevelGroup { n, group: group(h) }).collect();
    let maps: Vec<Matrix> = (0..bound).map(|n| transition(&x, n, &hs[n], &hs[n + 1])).collect();
    let stab = stabilized(&levels, &maps);
    debug_assert!(hs.iter().all(|h| h.complex.is_complex()));
    StableColimitReport {
        k,
        stable_group: stab.then(|| levels.last().expect("level 0").group.clone()),
        levels,
        maps,
        stabilized: stab,
        interpretation: Interpretation::Homotopy,
    }
}

/// Matrices of `H_{k+n}(f_n)` on free parts, with a verdict over the
/// computed range only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableMapReport {
    pub k: i64,
    pub source: Vec<LevelGroup>,
    pub target: Vec<LevelGroup>,
    pub matrices: Vec<Matrix>,
    /// isomorphism on every computed level
    pub iso_at_all_levels: bool,
    pub interpretation: Interpretation,
}

pub fn stable_map_report(f: &SpectrumMap, k: i64, require_homotopy: bool) -> Result<StableMapReport> {
    let (x, y) = (f.source(), f.target());
    let mut gate = true;
    for s in [x, y] {
        for n in 0..=s.bound() {
            if let Some(d) = degree(k, n) {
                if !hurewicz_gate(s.space(n), d) {
                    if require_homotopy {
                        return Err(Error::HurewiczGate { level: n, dim: first_cell_below(s.space(n), d), degree: d });
                    }
                    gate = false;
                }
            }
        }
    }
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut matrices = Vec::new();
    let mut iso = true;
    for n in 0..=x.bound() {
        let d = degree(k, n);
        let hs = level_homology(x.space(n), d);
        let ht = level_homology(y.space(n), d);
        let m = induced_on(&hs, &ht, f.component(n));
        let (gs, gt) = (group(&hs), group(&ht));
        iso &= gs == gt && is_unimodular(&m, gs.rank);
        source.push(LevelGroup { n, group: gs });
        target.push(LevelGroup { n, group: gt });
        matrices.push(m);
    }
    Ok(StableMapReport {
        k,
        source,
        target,
        matrices,
        iso_at_all_levels: iso,
        interpretation: if gate { Interpretation::Homotopy } else { Interpretation::HomologyOnly },
    })
}

fn induced_on(hs: &LevelHomology, ht: &LevelHomology, f: &SimplicialMap) -> Matrix {
    match (&hs.homology, &ht.homology) {
        (Some(a), Some(b)) => {
            let c = chain_map(f);
            free_part_matrix(a, b, |z| c.apply(a.degree, z))
        }
        _ => Vec::new(),
    }
}

/// `f_*` on `H_k` free parts, together with both groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub chain: ChainMap,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    pub matrix: Matrix,
}

pub fn induced_map(f: &SimplicialMap, k: usize) -> InducedMap {
    let hs = level_homology(f.source(), Some(k));
    let ht = level_homology(f.target(), Some(k));
    InducedMap {
        chain: chain_map(f),
        source: group(&hs),
        target: group(&ht),
        matrix: induced_on(&hs, &ht, f),
    }
}

/// All homology groups of a space up to its dimension.
pub fn space_homology(x: &Arc<PointedSimplicialSet>, max_dim: usize) -> Vec<HomologyGroup> {
    let c = normalized_chains(x);
    let red = Arc::new(Reduction::new(&c));
    (0..=max_dim).map(|k| Homology::compute(red.clone(), k).group).collect()
}

/// Whether `f_*` is an isomorphism on `H_k` for `k ≤ max_dim`; an exact
/// homology statement, not a weak-equivalence claim.
pub fn homology_equivalence(f: &SimplicialMap, max_dim: usize) -> bool {
    let cs = normalized_chains(f.source());
    let ct = normalized_chains(f.target());
    let (rs, rt) = (Arc::new(Reduction::new(&cs)), Arc::new(Reduction::new(&ct)));
    let chain = chain_map(f);
    (0..=max_dim).all(|k| {
        let a = Homology::compute(rs.clone(), k);
        let b = Homology::compute(rt.clone(), k);
        if a.group != b.group {
            return false;
        }
        let m = free_part_matrix(&a, &b, |z| chain.apply(k, z));
        // torsion is compared by isomorphism type only
        is_unimodular(&m, a.group.rank)
    })
}
