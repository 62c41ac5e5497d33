//! Name resolution for builtins and JSON files.
//!
//! Spaces: `point`, `sphere` (the circle), `sphereN`, `delta:r`,
//! `boundary-space:r`, `horn-space:r:i`, `interval`, `hz-level:n` (the
//! simplicial set `S^n` whose free abelian group is level `n` of `HZ`).
//!
//! Spectra: `sphere`, `bar-sphere`, `point`, `free:n:<space>`,
//! `suspension:<space>`, `shift:k:<spectrum>`.
//!
//! Maps of spaces: `boundary:r`, `horn:r:i`, `collapse:r`, `id:<space>`.
//! Maps of spectra: `lambda:n`, `unit:<spectrum>` (from the point),
//! `id:<spectrum>`, `F:n:<map of spaces>`.
//!
//! Anything else is read as a JSON file.

use std::fs;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json::{
    decode_map, decode_space, decode_spectrum, decode_spectrum_map, DecodedSpectrum, Labeled, MapJson, Resolver,
    SSetJson, SpectrumJson, SpectrumMapJson,
};
use crate::spectra::{bar_sphere, free_f, free_map, lambda_map, shift, sphere_spectrum, SpectrumMap, SymmetricSpectrum};
use crate::sset::{
    boundary_inclusion, circle, collapse_to_vertex, horn_inclusion, sphere, standard_space, PointedSimplicialSet,
    SimplicialMap, StandardSpace, DEFAULT_BUDGET,
};

/// Loaded objects are resolved against a bound and share a search budget.
#[derive(Clone, Debug)]
pub struct Workspace {
    pub bound: usize,
    pub budget: u64,
}

impl Default for Workspace {
    fn default() -> Self {
        Self {
            bound: 3,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// A map of either kind.
#[derive(Clone, Debug)]
pub enum AnyMap {
    Space(SimplicialMap),
    Spectrum(SpectrumMap),
}

fn num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::InvalidInput(format!("expected a number, got {s:?}")))
}

fn unknown(kind: &str, name: &str) -> Error {
    Error::InvalidInput(format!("unknown {kind} {name:?}"))
}

impl Workspace {
    pub fn new(bound: usize, budget: u64) -> Self {
        Self { bound, budget }
    }

    fn read_json<T: DeserializeOwned>(&self, path: &str) -> Result<T> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{path:?} is neither a builtin nor a readable file ({e})")))?;
        Ok(serde_json::from_str(&text)?)
    }

    fn read_value(&self, path: &str) -> Result<Value> {
        self.read_json(path)
    }

    fn builtin_space(&self, name: &str) -> Option<Result<Arc<PointedSimplicialSet>>> {
        let parts: Vec<&str> = name.split(':').collect();
        let out = match parts.as_slice() {
            ["point"] => Ok(Arc::new(PointedSimplicialSet::point())),
            ["sphere"] => Ok(circle()),
            ["interval"] => standard_space(StandardSpace::IntervalPlus),
            ["delta", r] => num(r).and_then(|r| standard_space(StandardSpace::DeltaPlus(r))),
            ["boundary-space", r] => num(r).and_then(|r| standard_space(StandardSpace::BoundaryPlus(r))),
            ["horn-space", r, i] => num(r).and_then(|r| standard_space(StandardSpace::HornPlus(r, num(i)?))),
            ["hz-level", n] => num(n).map(sphere),
            [s] if s.starts_with("sphere") => num(&s["sphere".len()..]).map(sphere),
            _ => return None,
        };
        Some(out)
    }

    pub fn load_space(&self, name: &str) -> Result<Arc<PointedSimplicialSet>> {
        Ok(self.space(name)?.space)
    }

    fn builtin_spectrum(&self, name: &str) -> Option<Result<Arc<SymmetricSpectrum>>> {
        let b = self.bound;
        let out = match name.splitn(3, ':').collect::<Vec<_>>().as_slice() {
            ["sphere"] => Ok(Arc::new(sphere_spectrum(b))),
            ["bar-sphere"] => Ok(Arc::new(bar_sphere(b))),
            ["point"] => Ok(Arc::new(SymmetricSpectrum::point(b))),
            ["free", n, k] => (|| Ok(free_f(num(n)?, &self.load_space(k)?, b)?.spectrum().clone()))(),
            ["suspension", k] => (|| Ok(free_f(0, &self.load_space(k)?, b)?.spectrum().clone()))(),
            ["shift", k, x] => (|| -> Result<Arc<SymmetricSpectrum>> {
                let k = num(k)?;
                let x = Workspace::new(b + k, self.budget).load_spectrum(x)?;
                Ok(Arc::new(shift(&x, k)?))
            })(),
            _ => return None,
        };
        Some(out)
    }

    pub fn load_spectrum(&self, name: &str) -> Result<Arc<SymmetricSpectrum>> {
        Ok(self.spectrum(name)?.spectrum)
    }

    fn builtin_space_map(&self, name: &str) -> Option<Result<SimplicialMap>> {
        let parts: Vec<&str> = name.splitn(2, ':').collect();
        let out = match parts.as_slice() {
            ["boundary", r] => num(r).map(boundary_inclusion),
            ["horn", rest] => match rest.split_once(':') {
                Some((r, i)) => (|| horn_inclusion(num(r)?, num(i)?))(),
                None => Err(unknown("horn", name)),
            },
            ["collapse", r] => num(r).map(collapse_to_vertex),
            ["id", x] if self.builtin_space(x).is_some() => self.load_space(x).map(SimplicialMap::identity),
            _ => return None,
        };
        Some(out)
    }

    fn builtin_spectrum_map(&self, name: &str) -> Option<Result<SpectrumMap>> {
        let b = self.bound;
        let (head, rest) = name.split_once(':')?;
        let out = match head {
            "lambda" => (|| Ok(lambda_map(num(rest)?, b)?.2))(),
            "unit" => self.load_spectrum(rest).map(SpectrumMap::from_point),
            "id" => self.load_spectrum(rest).map(SpectrumMap::identity),
            "F" => (|| {
                let (n, f) = rest.split_once(':').ok_or_else(|| unknown("map", name))?;
                Ok(free_map(&self.load_space_map(f)?, num(n)?, b)?.2)
            })(),
            _ => return None,
        };
        Some(out)
    }

    pub fn load_space_map(&self, name: &str) -> Result<SimplicialMap> {
        match self.load_map(name)? {
            AnyMap::Space(f) => Ok(f),
            AnyMap::Spectrum(_) => Err(Error::InvalidInput(format!("{name:?} is a map of spectra"))),
        }
    }

    pub fn load_spectrum_map(&self, name: &str) -> Result<SpectrumMap> {
        match self.load_map(name)? {
            AnyMap::Spectrum(f) => Ok(f),
            AnyMap::Space(_) => Err(Error::InvalidInput(format!("{name:?} is a map of spaces"))),
        }
    }

    /// A map of spaces or of spectra; files are told apart by their keys.
    pub fn load_map(&self, name: &str) -> Result<AnyMap> {
        if let Some(f) = self.builtin_space_map(name) {
            return f.map(AnyMap::Space);
        }
        if let Some(f) = self.builtin_spectrum_map(name) {
            return f.map(AnyMap::Spectrum);
        }
        let v = self.read_value(name)?;
        if v.get("components").is_some() {
            let j: SpectrumMapJson = serde_json::from_value(v)?;
            Ok(AnyMap::Spectrum(decode_spectrum_map(&j, self)?))
        } else {
            let j: MapJson = serde_json::from_value(v)?;
            Ok(AnyMap::Space(decode_map(&j, None, None, self)?))
        }
    }

    /// A spectrum if the name denotes one, otherwise a space.
    pub fn load_either(&self, name: &str) -> Result<std::result::Result<Arc<SymmetricSpectrum>, Arc<PointedSimplicialSet>>> {
        if let Some(x) = self.builtin_spectrum(name) {
            return x.map(Ok);
        }
        if let Some(x) = self.builtin_space(name) {
            return x.map(Err);
        }
        let v = self.read_value(name)?;
        if v.get("levels").is_some() {
            let j: SpectrumJson = serde_json::from_value(v)?;
            Ok(Ok(decode_spectrum(&j, self)?.spectrum))
        } else {
            let j: SSetJson = serde_json::from_value(v)?;
            Ok(Err(decode_space(&j)?.space))
        }
    }
}

impl Resolver for Workspace {
    fn space(&self, name: &str) -> Result<Labeled> {
        match self.builtin_space(name) {
            Some(x) => x.map(Labeled::canonical),
            None => decode_space(&self.read_json::<SSetJson>(name)?),
        }
    }

    fn spectrum(&self, name: &str) -> Result<DecodedSpectrum> {
        match self.builtin_spectrum(name) {
            Some(x) => x.map(DecodedSpectrum::canonical),
            None => decode_spectrum(&self.read_json::<SpectrumJson>(name)?, self),
        }
    }
}
