//! JSON interchange for spaces, maps, equivariant spaces, sequences,
//! spectra and reports.
//!
//! Cell ids are arbitrary strings on input; emitted ids are `"k.i"` (the
//! `i`-th nondegenerate `k`-simplex). A map's `source`/`target` may be an
//! inline object, a name resolved by a [`Resolver`], or omitted where the
//! context fixes them: generators act on their level, and `sigma[n]` goes
//! from `S¹ ∧ X_n` (canonical ids) to `X_{n+1}`.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::equivariant::{EquivariantSpace, Permutation};
use crate::error::{Error, Result};
use crate::homotopy::{HomologyGroup, LevelGroup, StableColimitReport, StableMapReport};
use crate::modelcheck::{LiftingProblem, LiftingVerdict};
use crate::spectra::{SpectrumMap, SymmetricSpectrum};
use crate::sset::{CellId, DegeneracyWord, PointedSimplicialSet, Simplex, SimplicialMap};
use crate::symseq::SymmetricSequence;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexJson {
    #[serde(default)]
    pub degen: Vec<usize>,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetJson {
    pub dims: usize,
    pub cells: BTreeMap<usize, Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<SimplexJson>>,
    pub basepoint: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Name(String),
    Inline(SSetJson),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SpaceRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceRef>,
    pub assign: BTreeMap<String, SimplexJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationJson {
    pub n: usize,
    /// one-based
    pub images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivariantJson {
    pub space: SpaceRef,
    pub n: usize,
    #[serde(default)]
    pub generators: Vec<MapJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub bound: usize,
    pub levels: Vec<EquivariantJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub bound: usize,
    pub levels: Vec<EquivariantJson>,
    #[serde(default)]
    pub sigma: Vec<MapJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SpectrumRef {
    Name(String),
    Inline(Box<SpectrumJson>),
}

// Derived untagged enums buffer their input, which loses the integer keys of
// `cells`; going through `Value` keeps them.
macro_rules! name_or_inline {
    ($ty:ident, $wrap:expr) => {
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                use serde::de::Error as _;
                match Value::deserialize(d)? {
                    Value::String(s) => Ok($ty::Name(s)),
                    v => serde_json::from_value(v).map($wrap).map_err(D::Error::custom),
                }
            }
        }
    };
}

name_or_inline!(SpaceRef, SpaceRef::Inline);
name_or_inline!(SpectrumRef, |j| SpectrumRef::Inline(Box::new(j)));

/// A map of spectra: one component per level.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumMapJson {
    pub source: SpectrumRef,
    pub target: SpectrumRef,
    pub components: Vec<MapJson>,
}

/// A space together with the names of its cells.
#[derive(Clone, Debug)]
pub struct Labeled {
    pub space: Arc<PointedSimplicialSet>,
    /// `None`: canonical `"k.i"` ids only
    names: Option<HashMap<String, CellId>>,
}

impl Labeled {
    pub fn canonical(space: Arc<PointedSimplicialSet>) -> Self {
        Self { space, names: None }
    }

    pub fn cell(&self, id: &str) -> Result<CellId> {
        if let Some(c) = self.names.as_ref().and_then(|m| m.get(id)) {
            return Ok(*c);
        }
        parse_canonical(id)
            .filter(|c| self.space.contains(&Simplex::nondegenerate(*c)))
            .ok_or_else(|| Error::InvalidInput(format!("unknown cell id {id:?}")))
    }

    fn simplex(&self, s: &SimplexJson) -> Result<Simplex> {
        let cell = self.cell(&s.target)?;
        let word = DegeneracyWord::new(s.degen.clone())?;
        let dim = cell.dim + word.len();
        if word.indices().first().is_some_and(|&i| i >= dim) {
            return Err(Error::InvalidInput(format!("degeneracy {:?} out of range on {}", s.degen, s.target)));
        }
        Ok(Simplex::new(dim, word.to_mask(), cell))
    }
}

fn parse_canonical(id: &str) -> Option<CellId> {
    let (k, i) = id.split_once('.')?;
    Some(CellId::new(k.parse().ok()?, i.parse().ok()?))
}

/// Named objects for references inside JSON documents.
pub trait Resolver {
    fn space(&self, name: &str) -> Result<Labeled>;
    fn spectrum(&self, name: &str) -> Result<DecodedSpectrum>;
}

/// A resolver that knows no names.
pub struct NoNames;

impl Resolver for NoNames {
    fn space(&self, name: &str) -> Result<Labeled> {
        Err(Error::InvalidInput(format!("unresolved space reference {name:?}")))
    }

    fn spectrum(&self, name: &str) -> Result<DecodedSpectrum> {
        Err(Error::InvalidInput(format!("unresolved spectrum reference {name:?}")))
    }
}

fn id(c: CellId) -> String {
    c.to_string()
}

fn simplex_json(s: &Simplex) -> SimplexJson {
    SimplexJson {
        degen: s.word().indices().to_vec(),
        target: id(s.cell),
    }
}

pub fn encode_space(x: &PointedSimplicialSet) -> SSetJson {
    let cells = (0..=x.dim()).map(|k| (k, x.cells(k).map(id).collect())).collect();
    let faces = x
        .all_cells()
        .filter(|c| c.dim > 0)
        .map(|c| (id(c), x.cell_faces(c).iter().map(simplex_json).collect()))
        .collect();
    SSetJson {
        dims: x.dim(),
        cells,
        faces,
        basepoint: id(x.basepoint()),
    }
}

pub fn decode_space(j: &SSetJson) -> Result<Labeled> {
    let mut names = HashMap::new();
    let mut counts = vec![0; j.dims + 1];
    for (&k, ids) in &j.cells {
        if k > j.dims {
            return Err(Error::InvalidInput(format!("cells of dimension {k} above dims {}", j.dims)));
        }
        counts[k] = ids.len();
        for (i, name) in ids.iter().enumerate() {
            if names.insert(name.clone(), CellId::new(k, i)).is_some() {
                return Err(Error::InvalidInput(format!("duplicate cell id {name:?}")));
            }
        }
    }
    let base = *names
        .get(&j.basepoint)
        .filter(|c| c.dim == 0)
        .ok_or_else(|| Error::InvalidInput(format!("basepoint {:?} is not a vertex", j.basepoint)))?;
    let labels = Labeled {
        space: Arc::new(PointedSimplicialSet::point()),
        names: Some(names),
    };
    let mut faces: Vec<Vec<Vec<Simplex>>> = counts.iter().map(|&c| vec![Vec::new(); c]).collect();
    for (k, ids) in &j.cells {
        for (i, name) in ids.iter().enumerate() {
            if *k == 0 {
                continue;
            }
            let fs = j
                .faces
                .get(name)
                .ok_or_else(|| Error::InvalidInput(format!("no faces for cell {name:?}")))?;
            if fs.len() != k + 1 {
                return Err(Error::InvalidInput(format!("cell {name:?} needs {} faces", k + 1)));
            }
            faces[*k][i] = fs
                .iter()
                .map(|f| {
                    let c = labels.names.as_ref().and_then(|m| m.get(&f.target)).copied();
                    let c = c.ok_or_else(|| Error::InvalidInput(format!("unknown face target {:?}", f.target)))?;
                    let word = DegeneracyWord::new(f.degen.clone())?;
                    let dim = c.dim + word.len();
                    if dim + 1 != *k || word.indices().first().is_some_and(|&x| x >= dim) {
                        return Err(Error::InvalidInput(format!("face of {name:?} has the wrong dimension")));
                    }
                    Ok(Simplex::new(dim, word.to_mask(), c))
                })
                .collect::<Result<_>>()?;
        }
    }
    let space = Arc::new(PointedSimplicialSet::from_faces(faces, base.index)?);
    Ok(Labeled { space, names: labels.names })
}

fn resolve_space(r: &SpaceRef, res: &dyn Resolver) -> Result<Labeled> {
    match r {
        SpaceRef::Name(n) => res.space(n),
        SpaceRef::Inline(j) => decode_space(j),
    }
}

/// A map; `objects` inlines the source and target.
pub fn encode_map(f: &SimplicialMap, objects: bool) -> MapJson {
    MapJson {
        source: objects.then(|| SpaceRef::Inline(encode_space(f.source()))),
        target: objects.then(|| SpaceRef::Inline(encode_space(f.target()))),
        assign: f
            .source()
            .all_cells()
            .map(|c| (id(c), simplex_json(&f.image_of(c))))
            .collect(),
    }
}

/// Decodes and verifies a map; omitted ends fall back to the defaults.
/// Unassigned cells must be the basepoint.
pub fn decode_map(
    j: &MapJson,
    source: Option<&Labeled>,
    target: Option<&Labeled>,
    res: &dyn Resolver,
) -> Result<SimplicialMap> {
    let pick = |r: &Option<SpaceRef>, d: Option<&Labeled>, what: &str| -> Result<Labeled> {
        match (r, d) {
            (Some(r), _) => resolve_space(r, res),
            (None, Some(d)) => Ok(d.clone()),
            (None, None) => Err(Error::InvalidInput(format!("map without a {what}"))),
        }
    };
    let src = pick(&j.source, source, "source")?;
    let tgt = pick(&j.target, target, "target")?;
    let mut images: Vec<Vec<Option<Simplex>>> = src.space.counts().iter().map(|&c| vec![None; c]).collect();
    for (k, v) in &j.assign {
        let c = src.cell(k)?;
        images[c.dim][c.index] = Some(tgt.simplex(v)?);
    }
    let base = src.space.basepoint();
    let images = images
        .into_iter()
        .enumerate()
        .map(|(d, row)| {
            row.into_iter()
                .enumerate()
                .map(|(i, s)| match s {
                    Some(s) => Ok(s),
                    None if CellId::new(d, i) == base => Ok(tgt.space.base_simplex(0)),
                    None => Err(Error::InvalidInput(format!("cell {} is not assigned", CellId::new(d, i)))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(src.space, tgt.space, images)
}

pub fn encode_permutation(p: &Permutation) -> PermutationJson {
    PermutationJson {
        n: p.degree(),
        images: p.to_one_based(),
    }
}

pub fn decode_permutation(j: &PermutationJson) -> Result<Permutation> {
    if j.images.len() != j.n {
        return Err(Error::InvalidInput(format!("permutation of degree {} has {} images", j.n, j.images.len())));
    }
    Permutation::from_one_based(&j.images)
}

/// Only actions of the whole of `Σ_n` are representable.
pub fn encode_equivariant(e: &EquivariantSpace) -> Result<EquivariantJson> {
    if e.blocks().len() > 1 {
        return Err(Error::InvalidInput("Young subgroup actions have no JSON form".into()));
    }
    Ok(EquivariantJson {
        space: SpaceRef::Inline(encode_space(e.space())),
        n: e.degree(),
        generators: (0..e.degree().saturating_sub(1)).map(|j| encode_map(e.generator(j), false)).collect(),
    })
}

pub fn decode_equivariant(j: &EquivariantJson, res: &dyn Resolver) -> Result<(EquivariantSpace, Labeled)> {
    let space = resolve_space(&j.space, res)?;
    if j.generators.len() != j.n.saturating_sub(1) {
        return Err(Error::InvalidInput(format!("Σ_{} needs {} generators", j.n, j.n.saturating_sub(1))));
    }
    let gens = j
        .generators
        .iter()
        .map(|g| decode_map(g, Some(&space), Some(&space), res))
        .collect::<Result<Vec<_>>>()?;
    Ok((EquivariantSpace::new(space.space.clone(), j.n, gens)?, space))
}

pub fn encode_sequence(x: &SymmetricSequence) -> Result<SequenceJson> {
    Ok(SequenceJson {
        bound: x.bound(),
        levels: x.levels().iter().map(|l| encode_equivariant(l)).collect::<Result<_>>()?,
    })
}

fn decode_levels(bound: usize, levels: &[EquivariantJson], res: &dyn Resolver) -> Result<(SymmetricSequence, Vec<Labeled>)> {
    if levels.len() != bound + 1 {
        return Err(Error::InvalidInput(format!("bound {bound} needs {} levels", bound + 1)));
    }
    let mut out = Vec::new();
    let mut labels = Vec::new();
    for (n, l) in levels.iter().enumerate() {
        if l.n != n {
            return Err(Error::DegreeMismatch(l.n, n));
        }
        let (e, lab) = decode_equivariant(l, res)?;
        out.push(Arc::new(e));
        labels.push(lab);
    }
    Ok((SymmetricSequence::new(out)?, labels))
}

pub fn decode_sequence(j: &SequenceJson, res: &dyn Resolver) -> Result<SymmetricSequence> {
    Ok(decode_levels(j.bound, &j.levels, res)?.0)
}

pub fn encode_spectrum(x: &SymmetricSpectrum) -> Result<SpectrumJson> {
    Ok(SpectrumJson {
        bound: x.bound(),
        levels: encode_sequence(x.sequence())?.levels,
        sigma: x.sigmas().iter().map(|s| encode_map(s, false)).collect(),
        name: x.name().map(str::to_owned),
    })
}

/// A decoded spectrum with the cell names of each level.
#[derive(Clone, Debug)]
pub struct DecodedSpectrum {
    pub spectrum: Arc<SymmetricSpectrum>,
    pub labels: Vec<Labeled>,
}

impl DecodedSpectrum {
    pub fn canonical(spectrum: Arc<SymmetricSpectrum>) -> Self {
        let labels = (0..=spectrum.bound()).map(|n| Labeled::canonical(spectrum.space(n).clone())).collect();
        Self { spectrum, labels }
    }
}

/// Decodes the levels and structure maps; equivariance of `σ^p` is left
/// to [`crate::spectra::validate`].
pub fn decode_spectrum(j: &SpectrumJson, res: &dyn Resolver) -> Result<DecodedSpectrum> {
    let (seq, labels) = decode_levels(j.bound, &j.levels, res)?;
    if j.sigma.len() != j.bound {
        return Err(Error::InvalidInput(format!("bound {} needs {} structure maps", j.bound, j.bound)));
    }
    let sigma = j
        .sigma
        .iter()
        .enumerate()
        .map(|(n, m)| {
            let susp = SymmetricSpectrum::suspension_of(seq.level(n).space());
            let src = Labeled::canonical(susp.space().clone());
            decode_map(m, Some(&src), Some(&labels[n + 1]), res)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut x = SymmetricSpectrum::new(Arc::new(seq), sigma)?;
    if let Some(name) = &j.name {
        x = x.with_name(name.clone());
    }
    Ok(DecodedSpectrum {
        spectrum: Arc::new(x),
        labels,
    })
}

pub fn resolve_spectrum(r: &SpectrumRef, res: &dyn Resolver) -> Result<DecodedSpectrum> {
    match r {
        SpectrumRef::Name(n) => res.spectrum(n),
        SpectrumRef::Inline(j) => decode_spectrum(j, res),
    }
}

pub fn encode_spectrum_map(f: &SpectrumMap) -> Result<SpectrumMapJson> {
    Ok(SpectrumMapJson {
        source: SpectrumRef::Inline(Box::new(encode_spectrum(f.source())?)),
        target: SpectrumRef::Inline(Box::new(encode_spectrum(f.target())?)),
        components: f.components().iter().map(|c| encode_map(c, false)).collect(),
    })
}

/// Decodes a map of spectra and checks it.
pub fn decode_spectrum_map(j: &SpectrumMapJson, res: &dyn Resolver) -> Result<SpectrumMap> {
    let x = resolve_spectrum(&j.source, res)?;
    let y = resolve_spectrum(&j.target, res)?;
    if j.components.len() != x.spectrum.bound() + 1 {
        return Err(Error::BoundMismatch(j.components.len().saturating_sub(1), x.spectrum.bound()));
    }
    let comps = j
        .components
        .iter()
        .enumerate()
        .map(|(n, m)| decode_map(m, x.labels.get(n), y.labels.get(n), res))
        .collect::<Result<Vec<_>>>()?;
    SpectrumMap::new(x.spectrum, y.spectrum, comps)
}

/// An integer as an exact JSON number.
pub fn big(b: &BigInt) -> Value {
    Value::Number(serde_json::Number::from_str(&b.to_string()).expect("decimal integer"))
}

fn matrix(m: &[Vec<BigInt>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(big).collect())).collect())
}

pub fn homology_group(g: &HomologyGroup) -> Value {
    json!({ "rank": g.rank, "torsion": g.torsion.iter().map(big).collect::<Vec<_>>() })
}

fn level_groups(levels: &[LevelGroup]) -> Value {
    Value::Array(
        levels
            .iter()
            .map(|l| json!({ "n": l.n, "rank": l.group.rank, "torsion": l.group.torsion.iter().map(big).collect::<Vec<_>>() }))
            .collect(),
    )
}

pub fn stable_colimit_report(r: &StableColimitReport) -> Value {
    json!({
        "k": r.k,
        "levels": level_groups(&r.levels),
        "maps": Value::Array(r.maps.iter().map(|m| matrix(m)).collect()),
        "stabilized": r.stabilized,
        "interpretation": r.interpretation,
    })
}

pub fn stable_map_report(r: &StableMapReport) -> Value {
    json!({
        "k": r.k,
        "source": level_groups(&r.source),
        "target": level_groups(&r.target),
        "matrices": Value::Array(r.matrices.iter().map(|m| matrix(m)).collect()),
        "iso_at_all_levels": r.iso_at_all_levels,
        "interpretation": r.interpretation,
    })
}

fn square(p: &LiftingProblem<SimplicialMap>) -> Value {
    json!({
        "i": encode_map(&p.i, true),
        "p": encode_map(&p.p, true),
        "top": encode_map(&p.top, true),
        "bottom": encode_map(&p.bottom, true),
    })
}

pub fn lifting_verdict(v: &LiftingVerdict<SimplicialMap>) -> Value {
    match v {
        LiftingVerdict::Lifts { squares } => json!({ "verdict": "yes", "squares": squares }),
        LiftingVerdict::Fails(w) => json!({ "verdict": "no", "witness": square(w) }),
        LiftingVerdict::BudgetExceeded { limit } => json!({ "verdict": "budget-exceeded", "limit": limit }),
    }
}

pub fn lifting_verdict_spectra(v: &LiftingVerdict<SpectrumMap>) -> Result<Value> {
    Ok(match v {
        LiftingVerdict::Lifts { squares } => json!({ "verdict": "yes", "squares": squares }),
        LiftingVerdict::Fails(w) => json!({
            "verdict": "no",
            "witness": {
                "i": encode_spectrum_map(&w.i)?,
                "p": encode_spectrum_map(&w.p)?,
                "top": encode_spectrum_map(&w.top)?,
                "bottom": encode_spectrum_map(&w.bottom)?,
            }
        }),
        LiftingVerdict::BudgetExceeded { limit } => json!({ "verdict": "budget-exceeded", "limit": limit }),
    })
}
