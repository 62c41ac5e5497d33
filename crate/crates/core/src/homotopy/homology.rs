//! Integral homology with explicit cycle representatives and coordinates.
//!
//! A complex is first shrunk by cancelling pairs `(σ, τ)` with
//! `⟨∂σ, τ⟩ = ±1`; the projection `f` and inclusion `g` of that chain
//! equivalence are recorded so that cycles can be carried across. The small
//! remainder is handled with dense Smith normal forms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::chains::{add_scaled, Chain, ChainComplex};
use super::matrix::{mul, row_hermite, smith_normal_form, zeros, Matrix, SmithForm};

/// `ℤ^rank ⊕ ⊕ ℤ/t_i` with `t_i | t_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug)]
struct Cancel {
    /// degree of `σ`
    k: usize,
    sigma: usize,
    tau: usize,
    /// `⟨∂σ, τ⟩`, a unit
    a: BigInt,
    /// `∂σ` without its `τ` term
    c: Chain,
    /// the `τ` row of `∂_k` without its `σ` entry
    b: Chain,
}

/// The reduced complex and the recorded cancellations.
#[derive(Clone, Debug)]
pub struct Reduction {
    cancels: Vec<Cancel>,
    /// surviving generators per degree, in increasing order
    alive: Vec<Vec<usize>>,
    /// dense boundaries of the reduced complex
    small: Vec<Matrix>,
}

impl Reduction {
    pub fn new(c: &ChainComplex) -> Self {
        let top = c.ranks().len();
        let mut cols: Vec<Vec<Option<Chain>>> =
            c.boundaries().iter().map(|d| d.iter().cloned().map(Some).collect()).collect();
        // rows[k][i]: columns of ∂_k that contain generator i of degree k-1
        let mut rows: Vec<Vec<BTreeSet<usize>>> = (0..top)
            .map(|k| vec![BTreeSet::new(); if k == 0 { 0 } else { c.rank(k - 1) }])
            .collect();
        for k in 1..top {
            for (j, col) in cols[k].iter().enumerate() {
                for &i in col.as_ref().expect("fresh").keys() {
                    rows[k][i].insert(j);
                }
            }
        }
        let mut alive: Vec<Vec<bool>> = (0..top).map(|k| vec![true; c.rank(k)]).collect();
        let mut cancels = Vec::new();
        for k in (1..top).rev() {
            loop {
                let mut progress = false;
                for sigma in 0..cols[k].len() {
                    let Some(col) = cols[k][sigma].as_ref() else { continue };
                    let best = col
                        .iter()
                        .filter(|(_, v)| v.abs().is_one())
                        .min_by_key(|(&i, _)| (rows[k][i].len(), i))
                        .map(|(&i, v)| (i, v.clone()));
                    let Some((tau, a)) = best else { continue };
                    let mut c_sigma = cols[k][sigma].take().expect("alive");
                    for &i in c_sigma.keys() {
                        rows[k][i].remove(&sigma);
                    }
                    c_sigma.remove(&tau);
                    let mut b = Chain::new();
                    for j in std::mem::take(&mut rows[k][tau]) {
                        let colj = cols[k][j].as_mut().expect("indexed column is alive");
                        let bj = colj.remove(&tau).expect("indexed entry");
                        // col_j -= (b_j / a) ∂σ, with 1/a = a
                        let q = -(&bj * &a);
                        for (&i, v) in &c_sigma {
                            let e = colj.entry(i).or_insert_with(BigInt::zero);
                            let was_zero = e.is_zero();
                            *e += v * &q;
                            if e.is_zero() {
                                colj.remove(&i);
                                rows[k][i].remove(&j);
                            } else if was_zero {
                                rows[k][i].insert(j);
                            }
                        }
                        b.insert(j, bj);
                    }
                    // σ leaves degree k: drop its row in ∂_{k+1}
                    if k + 1 < top {
                        for j in std::mem::take(&mut rows[k + 1][sigma]) {
                            if let Some(cj) = cols[k + 1][j].as_mut() {
                                cj.remove(&sigma);
                            }
                        }
                    }
                    // τ leaves degree k-1: drop its column in ∂_{k-1}
                    if let Some(ct) = cols[k - 1][tau].take() {
                        for &i in ct.keys() {
                            rows[k - 1][i].remove(&tau);
                        }
                    }
                    alive[k][sigma] = false;
                    alive[k - 1][tau] = false;
                    cancels.push(Cancel {
                        k,
                        sigma,
                        tau,
                        a,
                        c: c_sigma,
                        b,
                    });
                    progress = true;
                }
                if !progress {
                    break;
                }
            }
        }
        let alive: Vec<Vec<usize>> = alive
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i).collect())
            .collect();
        let small = (0..top)
            .map(|k| {
                let rows_n = if k == 0 { 0 } else { alive[k - 1].len() };
                let mut m = zeros(rows_n, alive[k].len());
                if k > 0 {
                    let pos = position_map(&alive[k - 1]);
                    for (j, &g) in alive[k].iter().enumerate() {
                        for (i, v) in cols[k][g].as_ref().expect("alive") {
                            m[pos[i]][j] = v.clone();
                        }
                    }
                }
                m
            })
            .collect();
        Self {
            cancels,
            alive,
            small,
        }
    }

    pub fn reduced_rank(&self, k: usize) -> usize {
        self.alive.get(k).map_or(0, Vec::len)
    }

    /// The dense boundary `∂_k` of the reduced complex.
    pub fn small_boundary(&self, k: usize) -> Matrix {
        match self.small.get(k) {
            Some(m) => m.clone(),
            None => zeros(if k == 0 { 0 } else { self.reduced_rank(k - 1) }, 0),
        }
    }

    /// The projection `f` on a degree-`k` chain, in reduced coordinates.
    pub fn project(&self, k: usize, chain: &Chain) -> Vec<BigInt> {
        let mut y = chain.clone();
        for cc in &self.cancels {
            if cc.k == k {
                y.remove(&cc.sigma);
            } else if cc.k == k + 1 {
                if let Some(v) = y.remove(&cc.tau) {
                    add_scaled(&mut y, &cc.c, &-(v * &cc.a));
                }
            }
        }
        let mut out = vec![BigInt::zero(); self.reduced_rank(k)];
        let pos = position_map(self.alive.get(k).map_or(&[][..], Vec::as_slice));
        for (i, v) in y {
            out[pos[&i]] = v;
        }
        out
    }

    /// The inclusion `g` of a reduced chain into the original complex.
    pub fn include(&self, k: usize, coords: &[BigInt]) -> Chain {
        let mut x: Chain = self.alive[k]
            .iter()
            .zip(coords)
            .filter(|(_, v)| !v.is_zero())
            .map(|(&g, v)| (g, v.clone()))
            .collect();
        for cc in self.cancels.iter().rev() {
            if cc.k == k {
                let bx: BigInt = cc.b.iter().filter_map(|(j, bj)| x.get(j).map(|v| v * bj)).sum();
                if !bx.is_zero() {
                    x.insert(cc.sigma, -(bx * &cc.a));
                }
            }
        }
        x
    }
}

fn position_map(v: &[usize]) -> std::collections::HashMap<usize, usize> {
    v.iter().enumerate().map(|(p, &g)| (g, p)).collect()
}

/// `H_k` of a complex with a free basis given by cycles and a way to read
/// the coordinates of any cycle.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: usize,
    pub group: HomologyGroup,
    reduction: std::sync::Arc<Reduction>,
    /// first `r` columns of `V` span the non-cycles of the reduced `∂_k`
    kernel: SmithForm,
    image: SmithForm,
    /// positions in the image Smith basis that are free
    free_positions: Vec<usize>,
    /// canonical change of basis on the free part: `coords ↦ coords · W⁻¹`
    w_inv: Matrix,
    representatives: Vec<Chain>,
}

pub fn homology(c: &ChainComplex, k: usize) -> HomologyGroup {
    Homology::compute(std::sync::Arc::new(Reduction::new(c)), k).group
}

impl Homology {
    pub fn of(c: &ChainComplex, k: usize) -> Self {
        Self::compute(std::sync::Arc::new(Reduction::new(c)), k)
    }

    pub fn compute(red: std::sync::Arc<Reduction>, k: usize) -> Self {
        let n = red.reduced_rank(k);
        let dk = red.small_boundary(k);
        let kernel = smith_normal_form(&dk, n);
        let r = kernel.rank;
        let z = n - r;
        let dk1 = red.small_boundary(k + 1);
        let m1 = red.reduced_rank(k + 1);
        // the image of ∂_{k+1} in kernel coordinates
        let full = mul(&kernel.v_inv, &dk1, n, m1);
        let x: Matrix = full[r..].to_vec();
        let image = smith_normal_form(&x, m1);
        let diag = image.diagonal();
        let torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
        let free_positions: Vec<usize> = (image.rank..z).collect();
        // representatives: K · U2⁻¹ columns at free positions, then included
        let reps_small: Vec<Vec<BigInt>> = free_positions
            .iter()
            .map(|&p| {
                (0..n)
                    .map(|row| (0..z).map(|t| &kernel.v[row][r + t] * &image.u_inv[t][p]).sum())
                    .collect()
            })
            .collect();
        let reps: Vec<Chain> = reps_small.iter().map(|v| red.include(k, v)).collect();
        // canonical basis: Hermite form of the representative rows
        let width = reps.iter().filter_map(|c| c.keys().next_back()).max().map_or(0, |m| m + 1);
        let dense: Matrix = reps
            .iter()
            .map(|c| {
                let mut row = vec![BigInt::zero(); width];
                for (&i, v) in c {
                    row[i] = v.clone();
                }
                row
            })
            .collect();
        let (h, _, w_inv) = row_hermite(&dense, width);
        let representatives = h
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i, v.clone()))
                    .collect()
            })
            .collect();
        Self {
            degree: k,
            group: HomologyGroup {
                rank: free_positions.len(),
                torsion,
            },
            reduction: red,
            kernel,
            image,
            free_positions,
            w_inv,
            representatives,
        }
    }

    /// Cycles representing the free basis.
    pub fn representatives(&self) -> &[Chain] {
        &self.representatives
    }

    /// Free-part coordinates of the class of a cycle.
    pub fn coordinates(&self, cycle: &Chain) -> Vec<BigInt> {
        let y = self.reduction.project(self.degree, cycle);
        let n = y.len();
        let r = self.kernel.rank;
        let kc: Vec<BigInt> = (r..n)
            .map(|i| (0..n).map(|j| &self.kernel.v_inv[i][j] * &y[j]).sum())
            .collect();
        let z = kc.len();
        let old: Vec<BigInt> = self
            .free_positions
            .iter()
            .map(|&p| (0..z).map(|t| &self.image.u[p][t] * &kc[t]).sum())
            .collect();
        let f = old.len();
        (0..f)
            .map(|j| (0..f).map(|i| &old[i] * &self.w_inv[i][j]).sum())
            .collect()
    }
}

/// Matrix (target rank × source rank) of a chain map on free parts of
/// homology, given the images of the source representatives.
pub fn free_part_matrix(
    source: &Homology,
    target: &Homology,
    mut image: impl FnMut(&Chain) -> Chain,
) -> Matrix {
    let cols: Vec<Vec<BigInt>> = source
        .representatives()
        .iter()
        .map(|z| target.coordinates(&image(z)))
        .collect();
    let rows = target.group.rank;
    (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect()
}

/// True iff a square integer matrix is invertible over the integers.
pub fn is_unimodular(m: &Matrix, n: usize) -> bool {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return false;
    }
    super::matrix::determinant(m).abs().is_one() || n == 0
}
