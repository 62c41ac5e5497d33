//! The `symspec` command line. Every command computes a JSON value; the
//! human format is a rendering of that value.
//!
//! Exit codes: 0 confirmed, 1 refuted (the output carries a witness),
//! 2 input error, 3 budget exceeded.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homotopy::{
    hz_level_complex, hz_stable_colimit, normalized_chains, space_homology, stable_colimit, stable_map_report, Homology,
};
use crate::json::{self, encode_equivariant, encode_map, encode_sequence, encode_spectrum, encode_spectrum_map};
use crate::modelcheck::{
    has_lifting_property, latching, pushout_product_theorem_check, pushout_product_theorem_check_spectra,
    stable_cofibration_check, LiftingVerdict,
};
use crate::spectra::{free_f, generating_sets, mapping_cylinder, smash, validate, GeneratingSet, SpectrumMap};
use crate::sset::{Smash, DEFAULT_BUDGET};
use crate::symseq::tensor;
use crate::workspace::{AnyMap, Workspace};

#[derive(Parser, Debug)]
#[command(name = "symspec", version, about = "Finite symmetric spectra: constructions, homology and model-category checks")]
pub struct Cli {
    /// Truncation bound for builtin spectra.
    #[arg(long, global = true, env = "SYMSPEC_BOUND", default_value_t = 3)]
    pub bound: usize,
    /// Candidate budget for exhaustive searches.
    #[arg(long, global = true, env = "SYMSPEC_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Write the JSON result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Boundary,
    Horn,
    #[value(name = "J")]
    J,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check levels, structure maps and equivariance of every σ^p.
    Validate { spectrum: String },
    /// H_{k+n} of each level along the structure maps; `hz` reads the
    /// Eilenberg-MacLane spectrum through its chain complexes.
    StableColimit {
        #[arg(long)]
        spectrum: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Fail unless every level passes the connectivity gate.
        #[arg(long)]
        require_homotopy: bool,
    },
    /// Decide the lifting property of `i` against `p`.
    CheckLift {
        #[arg(long)]
        i: String,
        #[arg(long)]
        p: String,
    },
    /// Smash product of two spectra, or of two spaces.
    Smash { a: String, b: String },
    /// Tensor product of the underlying symmetric sequences.
    Tensor { a: String, b: String },
    /// The free spectrum F_n K.
    Free {
        #[arg(long = "f")]
        n: usize,
        #[arg(long)]
        space: String,
    },
    /// The latching space L_n X and its map to X_n.
    Latching {
        spectrum: String,
        #[arg(long)]
        n: usize,
    },
    /// Stable cofibration check through the corner maps.
    Cofibration { map: String },
    /// f □ g with the theorem clauses it confirms.
    PushoutProduct { f: String, g: String },
    /// Integral homology of a space.
    Homology {
        space: String,
        #[arg(long)]
        max_dim: usize,
    },
    /// Induced maps on H_{k+n} for a map of spectra.
    StableMap {
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        require_homotopy: bool,
    },
    /// Members of the generating sets.
    GenSets {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        levels: usize,
        #[arg(long)]
        dims: usize,
    },
    /// Mapping cylinder of a map of spectra with its factorization checks.
    Cylinder { map: String },
}

/// The outcome of a command before rendering.
pub struct Outcome {
    pub code: i32,
    pub value: Value,
}

fn confirmed(value: Value) -> Outcome {
    Outcome { code: 0, value }
}

fn verdict(ok: bool, value: Value) -> Outcome {
    Outcome {
        code: if ok { 0 } else { 1 },
        value,
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let ws = Workspace::new(cli.bound, cli.budget);
    Ok(match &cli.command {
        Command::Validate { spectrum } => {
            let x = ws.load_spectrum(spectrum)?;
            let r = validate(&x);
            let mut v = serde_json::to_value(&r)?;
            v["report"] = json!(if r.ok { "ok" } else { "refuted" });
            verdict(r.ok, v)
        }
        Command::StableColimit { spectrum, k, .. } if spectrum == "hz" => {
            let r = hz_stable_colimit(*k, ws.bound);
            confirmed(json::stable_colimit_report(&r))
        }
        Command::StableColimit { spectrum, k, require_homotopy } => {
            let x = ws.load_spectrum(spectrum)?;
            match stable_colimit(&x, *k, *require_homotopy) {
                Ok(r) => confirmed(json::stable_colimit_report(&r)),
                Err(e @ Error::HurewiczGate { .. }) => verdict(false, json!({ "refuted": e.to_string() })),
                Err(e) => return Err(e),
            }
        }
        Command::CheckLift { i, p } => {
            let (value, v) = match (ws.load_map(i)?, ws.load_map(p)?) {
                (AnyMap::Space(i), AnyMap::Space(p)) => {
                    let v = has_lifting_property(&i, &p, ws.budget)?;
                    (json::lifting_verdict(&v), kind(&v))
                }
                (AnyMap::Spectrum(i), AnyMap::Spectrum(p)) => {
                    let v = has_lifting_property(&i, &p, ws.budget)?;
                    (json::lifting_verdict_spectra(&v)?, kind(&v))
                }
                _ => return Err(Error::InvalidInput("i and p must both be maps of spaces or of spectra".into())),
            };
            Outcome { code: v, value }
        }
        Command::Smash { a, b } => match (ws.load_either(a)?, ws.load_either(b)?) {
            (Ok(x), Ok(y)) => confirmed(serde_json::to_value(encode_spectrum(smash(&x, &y)?.spectrum())?)?),
            (Err(x), Err(y)) => confirmed(serde_json::to_value(json::encode_space(Smash::smash2(&x, &y).space()))?),
            _ => return Err(Error::InvalidInput("smash needs two spectra or two spaces".into())),
        },
        Command::Tensor { a, b } => {
            let (x, y) = (ws.load_spectrum(a)?, ws.load_spectrum(b)?);
            let t = tensor(x.sequence(), y.sequence())?;
            confirmed(serde_json::to_value(encode_sequence(t.sequence())?)?)
        }
        Command::Free { n, space } => {
            let f = free_f(*n, &ws.load_space(space)?, ws.bound)?;
            confirmed(serde_json::to_value(encode_spectrum(f.spectrum())?)?)
        }
        Command::Latching { spectrum, n } => {
            let l = latching(&ws.load_spectrum(spectrum)?, *n)?;
            confirmed(json!({
                "n": n,
                "space": encode_equivariant(&l.space)?,
                "map": encode_map(&l.map, false),
                "is_point": l.space.space().is_point(),
                "map_is_isomorphism": l.map.is_isomorphism(),
            }))
        }
        Command::Cofibration { map } => {
            let r = stable_cofibration_check(&ws.load_spectrum_map(map)?)?;
            verdict(r.overall, serde_json::to_value(&r)?)
        }
        Command::PushoutProduct { f, g } => {
            let f = ws.load_spectrum_map(f)?;
            let r = match ws.load_map(g)? {
                AnyMap::Space(g) => pushout_product_theorem_check(&f, &g)?,
                AnyMap::Spectrum(g) => pushout_product_theorem_check_spectra(&f, &g)?,
            };
            let mut v = serde_json::to_value(&r)?;
            v["map"] = serde_json::to_value(encode_spectrum_map(&r.product.map)?)?;
            verdict(r.all_confirmed(), v)
        }
        Command::Homology { space, max_dim } => {
            let groups = match space.strip_prefix("hz-level:") {
                Some(n) => {
                    let c = hz_level_complex(n.parse().map_err(|_| Error::InvalidInput(space.clone()))?);
                    (0..=*max_dim).map(|k| Homology::of(&c, k).group).collect()
                }
                None => space_homology(&ws.load_space(space)?, *max_dim),
            };
            let levels: Vec<Value> = groups
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    let mut v = json::homology_group(g);
                    v["k"] = json!(k);
                    v
                })
                .collect();
            let complex = match space.strip_prefix("hz-level:") {
                Some(_) => true,
                None => normalized_chains(&ws.load_space(space)?).is_complex(),
            };
            confirmed(json!({ "groups": levels, "boundary_squares_to_zero": complex }))
        }
        Command::StableMap { map, k, require_homotopy } => {
            let f = ws.load_spectrum_map(map)?;
            match stable_map_report(&f, *k, *require_homotopy) {
                Ok(r) => confirmed(json::stable_map_report(&r)),
                Err(e @ Error::HurewiczGate { .. }) => verdict(false, json!({ "refuted": e.to_string() })),
                Err(e) => return Err(e),
            }
        }
        Command::GenSets { kind, levels, dims } => {
            let kind = match kind {
                Kind::Boundary => GeneratingSet::Boundary,
                Kind::Horn => GeneratingSet::Horn,
                Kind::J => GeneratingSet::Cylinder,
            };
            let gens = generating_sets(kind, *levels, *dims, ws.bound)?;
            let members: Vec<Value> = gens
                .iter()
                .map(|g| {
                    json!({
                        "label": g.label,
                        "monomorphism": g.map.is_monomorphism(),
                        "source_cells": (0..=ws.bound).map(|n| g.map.source().space(n).num_cells()).collect::<Vec<_>>(),
                        "target_cells": (0..=ws.bound).map(|n| g.map.target().space(n).num_cells()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            confirmed(json!({ "count": gens.len(), "members": members }))
        }
        Command::Cylinder { map } => {
            let f = ws.load_spectrum_map(map)?;
            let c = mapping_cylinder(&f)?;
            let factors = c.i.then(&c.r) == f;
            let section = c.s.then(&c.r) == SpectrumMap::identity(f.target().clone());
            let mono = c.i.is_monomorphism();
            verdict(
                factors && section && mono,
                json!({
                    "cylinder": encode_spectrum(c.spectrum())?,
                    "f_equals_r_after_i": factors,
                    "r_after_s_is_identity": section,
                    "i_is_monomorphism": mono,
                }),
            )
        }
    })
}

fn kind<M>(v: &LiftingVerdict<M>) -> i32 {
    match v {
        LiftingVerdict::Lifts { .. } => 0,
        LiftingVerdict::Fails(_) => 1,
        LiftingVerdict::BudgetExceeded { .. } => 3,
    }
}

/// Indented `key: value` lines.
pub fn render_human(v: &Value) -> String {
    fn go(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    if x.is_object() || (x.is_array() && !is_flat(x)) {
                        let _ = writeln!(out, "{pad}{k}:");
                        go(x, indent + 1, out);
                    } else {
                        let _ = writeln!(out, "{pad}{k}: {x}");
                    }
                }
            }
            Value::Array(xs) if !is_flat(v) => {
                for (i, x) in xs.iter().enumerate() {
                    let _ = writeln!(out, "{pad}[{i}]");
                    go(x, indent + 1, out);
                }
            }
            x => {
                let _ = writeln!(out, "{pad}{x}");
            }
        }
    }
    fn is_flat(v: &Value) -> bool {
        v.as_array().is_some_and(|xs| xs.iter().all(|x| !x.is_object() && (!x.is_array() || is_flat(x))))
    }
    let mut out = String::new();
    go(v, 0, &mut out);
    out
}

/// Exit code for an error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => 3,
        _ => 2,
    }
}

/// Parses, runs and prints; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|o| emit(&cli, &o).map(|_| o.code)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}

fn emit(cli: &Cli, o: &Outcome) -> Result<()> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&o.value)? + "\n",
        Format::Human => render_human(&o.value),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// A shared handle for callers that hold spectra across commands.
pub type Shared<T> = Arc<T>;
