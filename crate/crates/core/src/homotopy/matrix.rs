//! Dense integer matrices, Smith and Hermite normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![BigInt::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

pub fn from_i64(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

fn cols_of(m: &Matrix, fallback: usize) -> usize {
    m.first().map_or(fallback, Vec::len)
}

/// `a · b`; `inner` is the shared dimension, needed when `a` has no rows.
pub fn mul(a: &Matrix, b: &Matrix, inner: usize, cols: usize) -> Matrix {
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate().take(inner) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] += x * y;
                }
            }
        }
    }
    out
}

pub fn is_zero(m: &Matrix) -> bool {
    m.iter().all(|r| r.iter().all(Zero::is_zero))
}

/// Exact determinant by fraction-free elimination (Bareiss).
pub fn determinant(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `D = U · M · V` with `U`, `V` unimodular and `D` diagonal, `d_i ≥ 0`,
/// `d_i | d_{i+1}`. The inverses of `U` and `V` are kept as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: Matrix,
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[i][i].clone()).collect()
    }
}

struct Work {
    a: Matrix,
    u: Matrix,
    u_inv: Matrix,
    v: Matrix,
    v_inv: Matrix,
    rows: usize,
    cols: usize,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
            for row in &mut self.u_inv {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            for row in &mut self.v {
                row.swap(i, j);
            }
            self.v_inv.swap(i, j);
        }
    }

    /// row_i += q · row_j
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let x = &self.a[j][c] * q;
            self.a[i][c] += x;
        }
        for c in 0..self.rows {
            let x = &self.u[j][c] * q;
            self.u[i][c] += x;
        }
        // U⁻¹ ← U⁻¹ · E⁻¹: column_j -= q · column_i
        for r in 0..self.rows {
            let x = &self.u_inv[r][i] * q;
            self.u_inv[r][j] -= x;
        }
    }

    /// col_i += q · col_j
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let x = &self.a[r][j] * q;
            self.a[r][i] += x;
        }
        for r in 0..self.cols {
            let x = &self.v[r][j] * q;
            self.v[r][i] += x;
        }
        // V⁻¹ ← E⁻¹ · V⁻¹: row_j -= q · row_i
        for c in 0..self.cols {
            let x = &self.v_inv[i][c] * q;
            self.v_inv[j][c] -= x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        for x in &mut self.u[i] {
            *x = -&*x;
        }
        for row in &mut self.u_inv {
            row[i] = -&row[i];
        }
    }

    /// The nonzero entry of least absolute value in the lower-right block
    /// from `t`, earliest in row-major order.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &Matrix, cols: usize) -> SmithForm {
    let rows = m.len();
    let cols = cols_of(m, cols);
    let mut w = Work {
        a: m.clone(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
        rows,
        cols,
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.add_row(i, t, &-q);
                    dirty |= !w.a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.add_col(j, t, &-q);
                    dirty |= !w.a[t][j].is_zero();
                }
            }
            if dirty {
                // move the smallest remainder in row t or column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < w.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < w.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&w.a[i][j] % &w.a[t][t]).is_zero());
            match bad {
                Some((i, _)) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    SmithForm {
        d: w.a,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
        v_inv: w.v_inv,
        rank: t,
    }
}

/// Row Hermite normal form `H = W · M`, returning `(H, W, W⁻¹)`.
pub fn row_hermite(m: &Matrix, cols: usize) -> (Matrix, Matrix, Matrix) {
    let rows = m.len();
    let cols = cols_of(m, cols);
    let mut w = Work {
        a: m.clone(),
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(0),
        v_inv: identity(0),
        rows,
        cols,
    };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !w.a[i][c].is_zero() && best.is_none_or(|b| w.a[i][c].abs() < w.a[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            w.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..rows {
                if !w.a[i][c].is_zero() {
                    let q = w.a[i][c].div_floor(&w.a[r][c]);
                    w.add_row(i, r, &-q);
                    done &= w.a[i][c].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if w.a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if w.a[r][c].is_negative() {
            w.negate_row(r);
        }
        for i in 0..r {
            let q = w.a[i][c].div_floor(&w.a[r][c]);
            if !q.is_zero() {
                w.add_row(i, r, &-q);
            }
        }
        r += 1;
    }
    (w.a, w.u, w.u_inv)
}
