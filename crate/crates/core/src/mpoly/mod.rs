//! Sparse multivariate polynomials over [`QuadElem`], binary forms and the
//! expression parser.

mod binary;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{QuadElem, Ring};
use crate::linalg::Matrix;

pub use binary::{multiplicity_type, BinaryForm};
pub use parse::{parse_poly, parse_poly_ctx, parse_poly_with, parse_scalar, ParseContext, ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
    #[error("polynomial is not a homogeneous form of degree {0}")]
    NotAForm(usize),
    #[error("zero form")]
    ZeroForm,
}

/// Polynomial in `nvars` variables; exponent vectors have length `nvars` and
/// zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, QuadElem>,
}

impl MPoly {
    pub fn zero_in(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: QuadElem) -> Self {
        let mut p = Self::zero_in(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, QuadElem::one())
    }

    pub fn monomial(exps: Vec<u32>, c: QuadElem) -> Self {
        let mut p = Self::zero_in(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QuadElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> QuadElem {
        self.terms.get(exps).cloned().unwrap_or_else(QuadElem::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: QuadElem) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get() + &c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<QuadElem> {
        self.is_constant().then(|| self.coeff(&vec![0; self.nvars]))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Degree if every term has the same total degree (zero counts as any).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Same polynomial viewed in `n ≥ nvars` variables.
    pub fn extend(&self, n: usize) -> Self {
        assert!(n >= self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(n, 0);
                (e, c.clone())
            })
            .collect();
        MPoly { nvars: n, terms }
    }

    fn aligned(&self, o: &Self) -> Result<(Self, Self), PolyError> {
        if self.nvars == o.nvars {
            return Ok((self.clone(), o.clone()));
        }
        let n = self.nvars.max(o.nvars);
        let small = if self.nvars < o.nvars { self } else { o };
        if !small.is_constant() {
            return Err(PolyError::ArityMismatch(self.nvars, o.nvars));
        }
        Ok((self.extend(n), o.extend(n)))
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, PolyError> {
        if self.nvars != o.nvars {
            let (a, b) = self.aligned(o)?;
            return a.try_add(&b);
        }
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, PolyError> {
        if self.nvars != o.nvars {
            let (a, b) = self.aligned(o)?;
            return a.try_mul(&b);
        }
        let mut out = Self::zero_in(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QuadElem) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.nvars);
        }
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, QuadElem::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = Self::zero_in(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * QuadElem::from_int(e[var] as i64));
        }
        out
    }

    pub fn eval(&self, point: &[QuadElem]) -> QuadElem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = QuadElem::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t * x.pow(k);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replaces variable `i` by `images[i]`; all images share one arity.
    pub fn substitute(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let n = images.iter().map(|p| p.nvars).max().unwrap_or(0);
        let images: Vec<MPoly> = images.iter().map(|p| p.extend(n)).collect();
        let mut powers: Vec<Vec<MPoly>> =
            images.iter().map(|p| vec![MPoly::constant(n, QuadElem::one()), p.clone()]).collect();
        let mut out = MPoly::zero_in(n);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(n, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// `p(M·x)`: variable `x_i` becomes `Σ_j M_ij x_j`.
    pub fn linear_substitution(&self, m: &Matrix) -> Result<MPoly, PolyError> {
        if m.rows() != self.nvars || m.cols() != self.nvars {
            return Err(PolyError::ArityMismatch(self.nvars, m.rows()));
        }
        let n = self.nvars;
        let images: Vec<MPoly> = (0..n)
            .map(|i| {
                let mut p = MPoly::zero_in(n);
                for j in 0..n {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    p.add_term(e, m.get(i, j).clone());
                }
                p
            })
            .collect();
        Ok(self.substitute(&images))
    }

    /// Determinant of the second-partials matrix in the listed variables.
    pub fn hessian_det_in(&self, vars: &[usize]) -> MPoly {
        let h: Vec<Vec<MPoly>> = vars
            .iter()
            .map(|&i| {
                let pi = self.partial(i);
                vars.iter().map(|&j| pi.partial(j)).collect()
            })
            .collect();
        let out = det_laplace(&h);
        if out.nvars == self.nvars {
            out
        } else {
            out.extend(self.nvars)
        }
    }

    pub fn hessian_det(&self) -> MPoly {
        let vars: Vec<usize> = (0..self.nvars).collect();
        self.hessian_det_in(&vars)
    }

    /// Coefficient of `x_var^k` as a polynomial in the same ring.
    pub fn coeff_of(&self, var: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.add_term(e2, c.clone());
            }
        }
        out
    }

    /// Drops the listed variables (which must not occur) and renumbers.
    pub fn drop_vars(&self, vars: &[usize]) -> MPoly {
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !vars.contains(i)).collect();
        let mut out = MPoly::zero_in(keep.len());
        for (e, c) in &self.terms {
            assert!(vars.iter().all(|&v| e[v] == 0), "dropped variable occurs");
            out.add_term(keep.iter().map(|&i| e[i]).collect(), c.clone());
        }
        out
    }

    pub fn div_scalar(&self, c: &QuadElem) -> MPoly {
        self.scale(&c.inv().expect("division by zero"))
    }

    /// Some nonzero coefficient, scanned in a fixed order.
    pub fn leading_coeff(&self) -> Option<QuadElem> {
        self.sorted_terms().first().map(|(_, c)| (*c).clone())
    }

    /// `Some(c)` with `self = c·other` when the two are proportional.
    pub fn ratio_to(&self, other: &MPoly) -> Option<QuadElem> {
        if other.is_zero() {
            return self.is_zero().then(QuadElem::zero);
        }
        let (e, c) = other.terms.iter().next()?;
        let r = self.coeff(e) / c;
        (other.scale(&r) == *self).then_some(r)
    }

    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &QuadElem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| monomial_cmp(b.0, a.0));
        v
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.sorted_terms() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { names[i].to_string() } else { format!("{}^{k}", names[i]) })
                .collect();
            push_term(&mut out, c, &mono.join("*"));
        }
        out
    }

    pub fn default_names(n: usize) -> Vec<String> {
        match n {
            0..=3 => ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect(),
            _ => (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }
}

/// Canonical term order: total degree first, then lexicographic on the
/// exponent vector (so `x^4` precedes `x^3*y`).
pub fn monomial_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Appends `± c*mono` to a sum being rendered.
pub(crate) fn push_term(out: &mut String, c: &QuadElem, mono: &str) {
    let first = out.is_empty();
    let (neg, body) = if c.is_rational() || c.a().is_zero() {
        let neg = if c.is_rational() { c.a().is_negative() } else { c.b().is_negative() };
        let abs = if neg { -c } else { c.clone() };
        let body = if mono.is_empty() {
            abs.to_string()
        } else if abs.is_one() {
            mono.to_string()
        } else {
            format!("{abs}*{mono}")
        };
        (neg, body)
    } else if mono.is_empty() {
        (false, c.to_string())
    } else {
        (false, format!("({c})*{mono}"))
    };
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    out.push_str(&body);
}

/// Division-free Laplace expansion; fine for the 2×2/3×3 Hessians here.
pub fn det_laplace<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j] == R::zero() {
                    continue;
                }
                let sub: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = m[0][j].clone() * det_laplace(&sub);
                acc = if j % 2 == 0 { acc + t } else { acc - t };
            }
            acc
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = MPoly::default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        f.write_str(&self.fmt_with(&refs))
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        Self::constant(0, QuadElem::one())
    }
}

impl Ring for MPoly {
    fn from_int(n: i64) -> Self {
        Self::constant(0, QuadElem::from_int(n))
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        self.try_add(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self.try_add(&-o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        self.try_mul(o).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, o: &MPoly) -> MPoly {
                (&self).$m(o)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, o: MPoly) -> MPoly {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
