//! Pfaffians of skew-symmetric matrices, congruence canonical form,
//! sub-Pfaffians and the odd-size adjugate.

use std::collections::HashMap;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{factorial, QuadElem, Rational, Ring};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("matrix size must be even")]
    OddSize,
    #[error("matrix size must be odd")]
    EvenSize,
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("rows have inconsistent lengths")]
    Ragged,
}

/// Skew-symmetric matrix stored by its strict upper triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<R = QuadElem> {
    n: usize,
    upper: Vec<R>,
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl<R: Ring> SkewMatrix<R> {
    pub fn zeros(n: usize) -> Self {
        SkewMatrix { n, upper: vec![R::zero(); n * n.saturating_sub(1) / 2] }
    }

    /// Entries `ω_{01}, ω_{02}, …, ω_{0,n−1}, ω_{12}, …` in row order.
    pub fn from_upper(n: usize, upper: &[R]) -> Self {
        assert_eq!(upper.len(), n * n.saturating_sub(1) / 2, "upper triangle length");
        SkewMatrix { n, upper: upper.to_vec() }
    }

    pub fn from_rows(rows: &[Vec<R>]) -> Result<Self, SkewError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(SkewError::Ragged);
        }
        let mut m = Self::zeros(n);
        for i in 0..n {
            if !rows[i][i].is_zero() {
                return Err(SkewError::NotSkew(i, i));
            }
            for j in i + 1..n {
                if rows[j][i] != -rows[i][j].clone() {
                    return Err(SkewError::NotSkew(i, j));
                }
                m.set(i, j, rows[i][j].clone());
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[upper_index(self.n, i, j)].clone(),
            std::cmp::Ordering::Greater => -self.upper[upper_index(self.n, j, i)].clone(),
            std::cmp::Ordering::Equal => R::zero(),
        }
    }

    /// Sets `ω_{ij} = v` and `ω_{ji} = −v`.
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert_ne!(i, j, "diagonal of a skew matrix is zero");
        if i < j {
            self.upper[upper_index(self.n, i, j)] = v;
        } else {
            self.upper[upper_index(self.n, j, i)] = -v;
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Principal submatrix on the given (increasing) indices.
    pub fn principal(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut m = Self::zeros(k);
        for a in 0..k {
            for b in a + 1..k {
                m.set(a, b, self.get(idx[a], idx[b]));
            }
        }
        m
    }

    /// Drops row and column `i`.
    pub fn without(&self, i: usize) -> Self {
        let idx: Vec<usize> = (0..self.n).filter(|&k| k != i).collect();
        self.principal(&idx)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SkewMatrix<S> {
        SkewMatrix { n: self.n, upper: self.upper.iter().map(f).collect() }
    }
}

impl SkewMatrix<QuadElem> {
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.to_rows())
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self, SkewError> {
        Self::from_rows(&m.to_rows())
    }

    /// `vwᵀ − wvᵀ`.
    pub fn wedge_of(v: &[QuadElem], w: &[QuadElem]) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, &v[i] * &w[j] - &w[i] * &v[j]);
            }
        }
        m
    }

    /// `J_{n,r}`: size `2n`, with `r` blocks `[[0,1],[−1,0]]` on the diagonal.
    pub fn j_pattern(n: usize, r: usize) -> Self {
        assert!(r <= n);
        let mut m = Self::zeros(2 * n);
        for b in 0..r {
            m.set(2 * b, 2 * b + 1, QuadElem::one());
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.to_matrix().rank()
    }

    /// `g ω gᵀ`.
    pub fn congruence(&self, g: &Matrix) -> Self {
        let m = &(g * &self.to_matrix()) * &g.transpose();
        Self::from_matrix(&m).expect("congruence preserves skew-symmetry")
    }
}

/// Pfaffian by row expansion along the first remaining index, memoized on
/// index subsets. Odd sizes give zero.
pub fn pfaffian<R: Ring>(m: &SkewMatrix<R>) -> R {
    let n = m.size();
    if n % 2 == 1 {
        return R::zero();
    }
    if n == 0 {
        return R::one();
    }
    assert!(n <= 64, "pfaffian supports sizes up to 64");
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, R> = HashMap::new();
    pf_rec(m, full, &mut memo)
}

fn pf_rec<R: Ring>(m: &SkewMatrix<R>, set: u64, memo: &mut HashMap<u64, R>) -> R {
    if set == 0 {
        return R::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = R::zero();
    let mut bits = rest;
    let mut pos = 1;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let w = m.get(i, j);
        if !w.is_zero() {
            let sub = pf_rec(m, rest & !(1u64 << j), memo);
            let term = w * sub;
            // (−1)^j in 1-based positions: the first partner gets a plus sign
            acc = if pos % 2 == 1 { acc + term } else { acc - term };
        }
        pos += 1;
    }
    memo.insert(set, acc.clone());
    acc
}

// sign of e_a ∧ e_b for disjoint index sets, as bitmasks
fn wedge_sign(a: u64, b: u64) -> bool {
    let mut inversions = 0u32;
    let mut bits = b;
    while bits != 0 {
        let t = bits.trailing_zeros();
        bits &= bits - 1;
        inversions += (a >> t >> 1).count_ones();
    }
    inversions.is_multiple_of(2)
}

/// Pfaffian from the top exterior power of `Σ_{i<j} ω_{ij} e_i∧e_j`,
/// whose coefficient on `e_1∧…∧e_{2n}` is `n!·Pf(ω)`.
pub fn pfaffian_wedge(m: &SkewMatrix<QuadElem>) -> Result<QuadElem, SkewError> {
    let n2 = m.size();
    if n2 % 2 == 1 {
        return Err(SkewError::OddSize);
    }
    if n2 == 0 {
        return Ok(QuadElem::one());
    }
    let mut two_form: Vec<(u64, QuadElem)> = vec![];
    for i in 0..n2 {
        for j in i + 1..n2 {
            let w = m.get(i, j);
            if !w.is_zero() {
                two_form.push(((1u64 << i) | (1u64 << j), w));
            }
        }
    }
    let mut power: HashMap<u64, QuadElem> = HashMap::from([(0, QuadElem::one())]);
    for _ in 0..n2 / 2 {
        let mut next: HashMap<u64, QuadElem> = HashMap::new();
        for (s, c) in &power {
            for (t, w) in &two_form {
                if s & t != 0 {
                    continue;
                }
                let v = c * w;
                let v = if wedge_sign(*s, *t) { v } else { -v };
                let e = next.entry(s | t).or_insert_with(QuadElem::zero);
                *e = &*e + &v;
            }
        }
        next.retain(|_, v| !v.is_zero());
        power = next;
    }
    let full = (1u64 << n2) - 1;
    let top = power.remove(&full).unwrap_or_else(QuadElem::zero);
    let nf = QuadElem::rational(Rational::from_integer(factorial((n2 / 2) as u64)));
    Ok(top / nf)
}

/// Returns `(g, r)` with `g ω gᵀ = J_r`, built by pivoting on the first
/// nonzero entry of the leading remaining row and clearing its block.
pub fn skew_canonical_form(w: &SkewMatrix<QuadElem>) -> (Matrix, usize) {
    let n = w.size();
    let mut m = w.to_matrix();
    let mut g = Matrix::identity(n);
    let mut r = 0;
    loop {
        let e = 2 * r;
        if e + 1 >= n {
            break;
        }
        let pivot = (e..n).find_map(|i| (e..n).find(|&j| !m.get(i, j).is_zero()).map(|j| (i, j)));
        let Some((i, j)) = pivot else { break };
        // move i to e and j to e+1
        swap_both(&mut m, &mut g, e, i);
        let j = if j == e { i } else { j };
        swap_both(&mut m, &mut g, e + 1, j);
        let f = e + 1;
        let inv = m.get(e, f).inv().expect("nonzero pivot");
        row_scale(&mut m, &mut g, e, &inv);
        for k in f + 1..n {
            let beta = m.get(k, e).clone();
            let alpha = -m.get(k, f);
            if alpha.is_zero() && beta.is_zero() {
                continue;
            }
            // R_k ← R_k + α R_e + β R_f, and the same on columns
            for (src, c) in [(e, alpha), (f, beta)] {
                if c.is_zero() {
                    continue;
                }
                add_row(&mut m, &mut g, k, src, &c);
            }
        }
        r += 1;
    }
    (g, r)
}

fn swap_both(m: &mut Matrix, g: &mut Matrix, a: usize, b: usize) {
    if a != b {
        m.swap_rows(a, b);
        m.swap_cols(a, b);
        g.swap_rows(a, b);
    }
}

fn row_scale(m: &mut Matrix, g: &mut Matrix, r: usize, c: &QuadElem) {
    for j in 0..m.cols() {
        let v = m.get(r, j) * c;
        m.set(r, j, v);
        let v = g.get(r, j) * c;
        g.set(r, j, v);
    }
    for i in 0..m.rows() {
        let v = m.get(i, r) * c;
        m.set(i, r, v);
    }
}

fn add_row(m: &mut Matrix, g: &mut Matrix, dst: usize, src: usize, c: &QuadElem) {
    for j in 0..m.cols() {
        let v = m.get(dst, j) + c * m.get(src, j);
        m.set(dst, j, v);
        let v = g.get(dst, j) + c * g.get(src, j);
        g.set(dst, j, v);
    }
    for i in 0..m.rows() {
        let v = m.get(i, dst) + c * m.get(i, src);
        m.set(i, dst, v);
    }
}

/// Pfaffians of all principal `2k × 2k` submatrices, indices in
/// lexicographic order.
pub fn sub_pfaffians<R: Ring>(m: &SkewMatrix<R>, size: usize) -> Vec<(Vec<usize>, R)> {
    assert!(size.is_multiple_of(2) && size <= m.size(), "sub-Pfaffian size must be even and fit");
    let mut out = vec![];
    let mut idx: Vec<usize> = (0..size).collect();
    let n = m.size();
    loop {
        out.push((idx.clone(), pfaffian(&m.principal(&idx))));
        // next combination
        let Some(p) = (0..size).rev().find(|&p| idx[p] < n - size + p) else { break };
        idx[p] += 1;
        for q in p + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
    }
    out
}

/// Adjugate of an odd skew matrix together with the kernel vector
/// `(C₁, −C₂, C₃, …)`, `C_i` the Pfaffian with row and column `i` removed.
pub fn skew_adjugate_odd(m: &SkewMatrix<QuadElem>) -> Result<(Matrix, Vec<QuadElem>), SkewError> {
    let n = m.size();
    if n.is_multiple_of(2) {
        return Err(SkewError::EvenSize);
    }
    let full = m.to_matrix();
    let mut adj = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let cof = full.minor(&[j], &[i]).det();
            adj.set(i, j, if (i + j) % 2 == 0 { cof } else { -cof });
        }
    }
    let c = (0..n)
        .map(|i| {
            let p = pfaffian(&m.without(i));
            if i % 2 == 0 {
                p
            } else {
                -p
            }
        })
        .collect();
    Ok((adj, c))
}
