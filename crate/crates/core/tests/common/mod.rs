//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symspec::equivariant::EquivariantSpace;
use symspec::homotopy::{ChainComplex, Matrix, SmithForm};
use symspec::json::{decode_space, decode_spectrum, NoNames, SSetJson, SpectrumJson};
use symspec::spectra::{bar_sphere, free_f, lambda_map, mapping_cylinder, shift, smash, sphere_spectrum, SymmetricSpectrum};
use symspec::sset::{
    circle, sphere, standard_space, wedge, CellId, PointedSimplicialSet, SSetBuilder, Simplex, SimplicialMap, Smash,
    StandardSpace,
};
use symspec::symseq::{free_g, smash_space, SymmetricSequence};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

/// A vertex `v`, an edge `e` from `v` to `v` and a 2-cell with faces `e, s_0 v, e`.
pub fn rp2_like() -> Arc<PointedSimplicialSet> {
    let mut b = SSetBuilder::new();
    let v = b.add_vertex();
    let e = b.add_cell(vec![Simplex::nondegenerate(v), Simplex::nondegenerate(v)]);
    let sv = Simplex::nondegenerate(v).degeneracy(0);
    b.add_cell(vec![Simplex::nondegenerate(e), sv, Simplex::nondegenerate(e)]);
    Arc::new(b.build(v))
}

pub fn small_spaces() -> Vec<(String, Arc<PointedSimplicialSet>)> {
    let s1 = circle();
    let mut out = vec![
        ("S0".to_string(), sphere(0)),
        ("S1".into(), s1.clone()),
        ("S2".into(), sphere(2)),
        ("S3".into(), sphere(3)),
        ("D1+".into(), standard_space(StandardSpace::DeltaPlus(1)).unwrap()),
        ("dD2+".into(), standard_space(StandardSpace::BoundaryPlus(2)).unwrap()),
        ("H20+".into(), standard_space(StandardSpace::HornPlus(2, 0)).unwrap()),
        ("D2+".into(), standard_space(StandardSpace::DeltaPlus(2)).unwrap()),
        ("rp2".into(), rp2_like()),
        ("S1vS1".into(), wedge(vec![s1.clone(), s1.clone()]).unwrap().space().clone()),
        ("S1^S1".into(), Smash::smash2(&s1, &s1).space().clone()),
    ];
    let j: SSetJson = serde_json::from_str(&read("rp2.json")).unwrap();
    out.push(("rp2.json".into(), decode_space(&j).unwrap().space));
    out
}

/// Spectra at bound 3 plus the JSON fixtures; `trivial-action` is the one
/// deliberately broken member.
pub fn spectrum_corpus() -> Vec<(String, Arc<SymmetricSpectrum>)> {
    let b = 3;
    let s0 = sphere(0);
    let s1 = circle();
    let mut out: Vec<(String, Arc<SymmetricSpectrum>)> = vec![
        ("S".into(), Arc::new(sphere_spectrum(b))),
        ("S-bar".into(), Arc::new(bar_sphere(b))),
        ("point".into(), Arc::new(SymmetricSpectrum::point(b))),
    ];
    for n in 0..=2 {
        for (kn, k) in [("S0", &s0), ("S1", &s1)] {
            out.push((format!("F{n}{kn}"), free_f(n, k, b).unwrap().spectrum().clone()));
        }
    }
    let d1 = standard_space(StandardSpace::DeltaPlus(1)).unwrap();
    out.push(("F1D1+".into(), free_f(1, &d1, b).unwrap().spectrum().clone()));
    out.push(("shift1(S)".into(), Arc::new(shift(&sphere_spectrum(b + 1), 1).unwrap())));
    let f1 = free_f(1, &s0, b).unwrap();
    let f0 = free_f(0, &s1, b).unwrap();
    out.push(("F1S0^F0S1".into(), smash(f1.spectrum(), f0.spectrum()).unwrap().spectrum().clone()));
    let (_, _, lambda) = lambda_map(0, b).unwrap();
    out.push(("Cyl(lambda0)".into(), mapping_cylinder(&lambda).unwrap().spectrum().clone()));
    for name in ["sphere_bound2.json", "trivial_action.json"] {
        let j: SpectrumJson = serde_json::from_str(&read(name)).unwrap();
        out.push((name.into(), decode_spectrum(&j, &NoNames).unwrap().spectrum));
    }
    out
}

/// A random pointed simplicial set with at most `max_cells` non-base
/// nondegenerate cells in dimensions ≤ 2.
pub fn random_space(rng: &mut impl Rng, max_cells: usize) -> Arc<PointedSimplicialSet> {
    let mut b = SSetBuilder::new();
    let base = b.add_vertex();
    let mut verts = vec![base];
    let mut edges: Vec<(CellId, CellId, CellId)> = Vec::new();
    let total = rng.gen_range(1..=max_cells);
    for _ in 0..total {
        let choice = rng.gen_range(0..3);
        if choice == 0 || verts.len() == 1 && choice == 1 {
            verts.push(b.add_vertex());
        } else if choice == 1 || edges.is_empty() {
            let v0 = *verts.choose(rng).unwrap();
            let v1 = *verts.choose(rng).unwrap();
            let e = b.add_cell(vec![Simplex::nondegenerate(v1), Simplex::nondegenerate(v0)]);
            edges.push((e, v0, v1));
        } else {
            // a 2-cell on a loop `e` at `v`: faces e, s_0 v, e or s_0 v, e, e
            let loops: Vec<_> = edges.iter().filter(|(_, a, c)| a == c).copied().collect();
            match loops.choose(rng) {
                Some(&(e, v, _)) => {
                    let sv = Simplex::nondegenerate(v).degeneracy(0);
                    let ne = Simplex::nondegenerate(e);
                    let faces = if rng.gen_bool(0.5) { vec![ne, sv, ne] } else { vec![sv, ne, ne] };
                    b.add_cell(faces);
                }
                None => {
                    let v = *verts.choose(rng).unwrap();
                    let e = b.add_cell(vec![Simplex::nondegenerate(v), Simplex::nondegenerate(v)]);
                    edges.push((e, v, v));
                }
            }
        }
    }
    let x = b.build(base);
    x.validate().unwrap();
    Arc::new(x)
}

/// The inclusion of a random subcomplex containing the basepoint.
pub fn random_subcomplex(rng: &mut impl Rng, y: &Arc<PointedSimplicialSet>) -> SimplicialMap {
    let mut keep: Vec<CellId> = Vec::new();
    let mut b = SSetBuilder::new();
    let mut remap = std::collections::HashMap::new();
    for c in y.all_cells() {
        let faces = y.cell_faces(c);
        let closed = faces.iter().all(|f| remap.contains_key(&f.cell));
        if c == y.basepoint() || (closed && rng.gen_bool(0.5)) {
            let new = if c.dim == 0 {
                b.add_vertex()
            } else {
                b.add_cell(faces.iter().map(|f| Simplex::new(f.dim, f.degen, remap[&f.cell])).collect())
            };
            remap.insert(c, new);
            keep.push(c);
        }
    }
    let x = Arc::new(b.build(remap[&y.basepoint()]));
    let back: std::collections::HashMap<CellId, CellId> = remap.iter().map(|(k, v)| (*v, *k)).collect();
    let f = SimplicialMap::from_fn(x, y.clone(), move |c| Simplex::nondegenerate(back[&c]));
    f.verify().unwrap();
    f
}

/// Injective on nondegenerate simplices, checked cell by cell.
pub fn injective(f: &SimplicialMap) -> bool {
    let mut seen = std::collections::HashSet::new();
    f.source()
        .all_cells()
        .all(|c| {
            let s = f.image_of(c);
            !s.is_degenerate() && seen.insert(s.cell)
        })
}

fn random_trivial(rng: &mut impl Rng, bound: usize) -> Arc<SymmetricSequence> {
    let pool = [sphere(0), circle(), standard_space(StandardSpace::DeltaPlus(1)).unwrap()];
    let levels = (0..=bound)
        .map(|n| {
            let k = if rng.gen_bool(0.4) { Arc::new(PointedSimplicialSet::point()) } else { pool.choose(rng).unwrap().clone() };
            Arc::new(EquivariantSpace::trivial(k, n))
        })
        .collect();
    Arc::new(SymmetricSequence::new(levels).unwrap())
}

/// A random symmetric sequence: a free sequence, the spheres, the unit, a
/// smash with a space, or levelwise trivial actions.
pub fn random_sequence(rng: &mut impl Rng, bound: usize) -> Arc<SymmetricSequence> {
    let spaces = [sphere(0), circle(), standard_space(StandardSpace::DeltaPlus(1)).unwrap()];
    match rng.gen_range(0..5) {
        0 => {
            let p = rng.gen_range(0..=bound.min(2));
            Arc::new(free_g(p, spaces.choose(rng).unwrap(), bound).unwrap())
        }
        1 => sphere_spectrum(bound).sequence().clone(),
        2 => Arc::new(SymmetricSequence::unit(bound)),
        3 => {
            let p = rng.gen_range(0..=bound.min(1));
            let g = free_g(p, &sphere(0), bound).unwrap();
            Arc::new(smash_space(&g, spaces.choose(rng).unwrap()))
        }
        _ => random_trivial(rng, bound),
    }
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    (0..rows)
        .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-20..=20))).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

const PRIME: i64 = 1_000_003;

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(m: &Matrix, cols: usize, p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = (x % BigInt::from(p)).to_i64().unwrap();
                    v.rem_euclid(p)
                })
                .collect()
        })
        .collect();
    let inv = |x: i64| -> i64 {
        let (mut r, mut e, mut b) = (1i64, p - 2, x);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][c]);
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * iv % p;
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti number `b_k` over `F_p` for a large prime, from the boundary matrices.
pub fn betti(c: &ChainComplex, k: usize) -> usize {
    let rk = |d: usize| -> usize {
        if d == 0 || d > c.top() {
            return 0;
        }
        rank_mod_p(&c.boundary_matrix(d), c.rank(d), PRIME)
    };
    c.rank(k) - rk(k) - rk(k + 1)
}

/// All Betti numbers over `F_p`, each boundary rank computed once.
pub fn betti_numbers(c: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=c.top() + 1)
        .map(|d| if d == 0 || d > c.top() { 0 } else { rank_mod_p(&c.boundary_matrix(d), c.rank(d), PRIME) })
        .collect();
    (0..=c.top()).map(|k| c.rank(k) - ranks[k] - ranks[k + 1]).collect()
}

/// `∂_k ∘ ∂_{k+1} = 0` by matrix multiplication.
pub fn squares_to_zero(c: &ChainComplex) -> bool {
    (1..c.top()).all(|k| {
        let a = c.boundary_matrix(k);
        let b = c.boundary_matrix(k + 1);
        mat_mul(&a, &b, c.rank(k), c.rank(k + 1)).iter().flatten().all(Zero::is_zero)
    })
}

/// Smith form checks: `U M V = D`, `D` diagonal with a divisibility chain of
/// positive entries, and `U`, `V` invertible through the stated inverses.
pub fn smith_certificate(m: &Matrix, rows: usize, cols: usize, s: &SmithForm) -> Result<(), String> {
    let (u, v, d) = (&s.u, &s.v, &s.d);
    let umv = mat_mul(&mat_mul(u, m, rows, cols), v, cols, cols);
    if &umv != d {
        return Err("U M V != D".into());
    }
    if mat_mul(u, &s.u_inv, rows, rows) != identity(rows) || mat_mul(v, &s.v_inv, cols, cols) != identity(cols) {
        return Err("U or V is not invertible".into());
    }
    let mut diag = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if i != j && !d[i][j].is_zero() {
                return Err(format!("off-diagonal entry at ({i},{j})"));
            }
        }
        if i < cols {
            diag.push(d[i][i].clone());
        }
    }
    let nz: Vec<_> = diag.iter().take_while(|x| !x.is_zero()).collect();
    if diag[nz.len()..].iter().any(|x| !x.is_zero()) {
        return Err("zeros before nonzeros on the diagonal".into());
    }
    if nz.iter().any(|x| !x.is_positive()) || nz.windows(2).any(|w| !(w[1] % w[0]).is_zero()) {
        return Err("diagonal is not a positive divisibility chain".into());
    }
    if rank_mod_p(m, cols, PRIME) != nz.len() {
        return Err("rank disagrees with the mod-p oracle".into());
    }
    Ok(())
}
