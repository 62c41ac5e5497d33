use serde::Serialize;

use super::cofibration::{stable_cofibration_check, CofibrationReport};
use crate::error::Result;
use crate::homotopy::homology_equivalence;
use crate::spectra::{pushout_product, pushout_product_spectra, PushoutProduct, SpectrumMap};
use crate::sset::SimplicialMap;

/// Levelwise flags. The homology flag replaces "weak equivalence": it says
/// each `f_n` induces isomorphisms on `H_k` for `k ≤ max_degree[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelClassification {
    pub monomorphism: bool,
    pub homology_level_equivalence: bool,
    pub max_degree: Vec<usize>,
    /// the homology flag of each level
    pub per_level: Vec<bool>,
    pub note: &'static str,
}

const HOMOLOGY_NOTE: &str = "homology isomorphism through the stated degrees; not a weak-equivalence claim";

pub fn level_classify(f: &SpectrumMap) -> LevelClassification {
    let max_degree: Vec<usize> = f
        .components()
        .iter()
        .map(|c| c.source().dim().max(c.target().dim()))
        .collect();
    let per_level: Vec<bool> = f
        .components()
        .iter()
        .zip(&max_degree)
        .map(|(c, &d)| homology_equivalence(c, d))
        .collect();
    LevelClassification {
        monomorphism: f.is_monomorphism(),
        homology_level_equivalence: per_level.iter().all(|&b| b),
        max_degree,
        per_level,
        note: HOMOLOGY_NOTE,
    }
}

fn space_homology_equivalence(g: &SimplicialMap) -> bool {
    homology_equivalence(g, g.source().dim().max(g.target().dim()))
}

/// One implication checked on an instance; `conclusion` is only computed
/// when the hypothesis holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub hypothesis: bool,
    pub conclusion: Option<bool>,
}

impl Clause {
    pub fn confirmed(&self) -> bool {
        !self.hypothesis || self.conclusion == Some(true)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PushoutProductReport {
    #[serde(skip)]
    pub product: PushoutProduct,
    pub monomorphism: bool,
    pub cofibration: CofibrationReport,
    pub clauses: Vec<Clause>,
    pub note: &'static str,
}

impl PushoutProductReport {
    pub fn all_confirmed(&self) -> bool {
        self.clauses.iter().all(Clause::confirmed)
    }
}

struct Inputs {
    f_cofibration: bool,
    g_cofibration: bool,
    f_mono: bool,
    g_mono: bool,
    f_equivalence: bool,
    g_equivalence: bool,
}

fn report(product: PushoutProduct, inp: Inputs) -> Result<PushoutProductReport> {
    let cofibration = stable_cofibration_check(&product.map)?;
    let monomorphism = product.map.is_monomorphism();
    let equivalence_hyp = inp.f_mono && inp.g_mono && (inp.f_equivalence || inp.g_equivalence);
    let clauses = vec![
        Clause {
            name: "cofibrations give a stable cofibration",
            hypothesis: inp.f_cofibration && inp.g_cofibration,
            conclusion: Some(cofibration.overall),
        },
        Clause {
            name: "monomorphisms give a monomorphism",
            hypothesis: inp.f_mono && inp.g_mono,
            conclusion: Some(monomorphism),
        },
        Clause {
            name: "a level equivalence factor gives a level equivalence",
            hypothesis: equivalence_hyp,
            conclusion: equivalence_hyp.then(|| level_classify(&product.map).homology_level_equivalence),
        },
    ];
    Ok(PushoutProductReport {
        product,
        monomorphism,
        cofibration,
        clauses,
        note: HOMOLOGY_NOTE,
    })
}

/// `f □ g` for a map of spectra and a map of spaces; a map of spaces counts
/// as a cofibration when it is a monomorphism.
pub fn pushout_product_theorem_check(f: &SpectrumMap, g: &SimplicialMap) -> Result<PushoutProductReport> {
    let product = pushout_product(f, g)?;
    let inp = Inputs {
        f_cofibration: stable_cofibration_check(f)?.overall,
        g_cofibration: g.is_monomorphism(),
        f_mono: f.is_monomorphism(),
        g_mono: g.is_monomorphism(),
        f_equivalence: level_classify(f).homology_level_equivalence,
        g_equivalence: space_homology_equivalence(g),
    };
    report(product, inp)
}

/// `f □ g` for two maps of spectra, through the smash product.
pub fn pushout_product_theorem_check_spectra(f: &SpectrumMap, g: &SpectrumMap) -> Result<PushoutProductReport> {
    let product = pushout_product_spectra(f, g)?;
    let inp = Inputs {
        f_cofibration: stable_cofibration_check(f)?.overall,
        g_cofibration: stable_cofibration_check(g)?.overall,
        f_mono: f.is_monomorphism(),
        g_mono: g.is_monomorphism(),
        f_equivalence: level_classify(f).homology_level_equivalence,
        g_equivalence: level_classify(g).homology_level_equivalence,
    };
    report(product, inp)
}
