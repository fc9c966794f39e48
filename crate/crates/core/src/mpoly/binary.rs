use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{parse_poly, MPoly, PolyError};
use crate::exactnum::{binomial, QuadElem, Rational, UniPoly};
use crate::linalg::Matrix;

/// Binary form `Σ a_i·C(d,i)·x^{d−i}y^i`, stored by the normalized `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    a: Vec<QuadElem>,
}

fn binom_q(d: usize, i: usize) -> QuadElem {
    QuadElem::rational(Rational::from_integer(binomial(d as u64, i as u64)))
}

impl BinaryForm {
    pub fn new(a: Vec<QuadElem>) -> Self {
        assert!(!a.is_empty(), "binary form needs degree ≥ 0");
        BinaryForm { a }
    }

    pub fn from_ints(a: &[i64]) -> Self {
        Self::new(a.iter().map(|&x| QuadElem::from_int(x)).collect())
    }

    pub fn zero_of_degree(d: usize) -> Self {
        Self::new(vec![QuadElem::zero(); d + 1])
    }

    /// From monomial coefficients `c_i` of `x^{d−i}y^i`.
    pub fn from_raw(c: Vec<QuadElem>) -> Self {
        let d = c.len() - 1;
        Self::new(c.into_iter().enumerate().map(|(i, ci)| ci / binom_q(d, i)).collect())
    }

    pub fn from_raw_ints(c: &[i64]) -> Self {
        Self::from_raw(c.iter().map(|&x| QuadElem::from_int(x)).collect())
    }

    pub fn raw(&self) -> Vec<QuadElem> {
        let d = self.degree();
        self.a.iter().enumerate().map(|(i, ai)| ai * binom_q(d, i)).collect()
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn coeffs(&self) -> &[QuadElem] {
        &self.a
    }

    pub fn coeff(&self, i: usize) -> &QuadElem {
        &self.a[i]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn from_mpoly(p: &MPoly, d: usize) -> Result<Self, PolyError> {
        if p.nvars() != 2 {
            return Err(PolyError::ArityMismatch(p.nvars(), 2));
        }
        let mut c = vec![QuadElem::zero(); d + 1];
        for (e, x) in p.terms() {
            if (e[0] + e[1]) as usize != d {
                return Err(PolyError::NotAForm(d));
            }
            c[e[1] as usize] = x.clone();
        }
        Ok(Self::from_raw(c))
    }

    /// Reads a nonzero homogeneous expression in `x, y`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let p = parse_poly(text, &["x", "y"]).map_err(|e| e.to_string())?;
        let d = p.homogeneous_degree().ok_or_else(|| "not a nonzero homogeneous form".to_string())?;
        Self::from_mpoly(&p, d as usize).map_err(|e| e.to_string())
    }

    pub fn to_mpoly(&self) -> MPoly {
        let d = self.degree() as u32;
        let mut p = MPoly::zero_in(2);
        for (i, c) in self.raw().into_iter().enumerate() {
            p.add_term(vec![d - i as u32, i as u32], c);
        }
        p
    }

    pub fn scale(&self, c: &QuadElem) -> Self {
        Self::new(self.a.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::from_raw(raw_pow(&self.raw(), k))
    }

    pub fn dx(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero_of_degree(0);
        }
        // ∂x of a_i C(d,i) x^{d−i} y^i gives d·a_i C(d−1,i) x^{d−1−i} y^i
        let dq = QuadElem::from_int(d as i64);
        Self::new(self.a[..d].iter().map(|x| x * &dq).collect())
    }

    pub fn dy(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero_of_degree(0);
        }
        let dq = QuadElem::from_int(d as i64);
        Self::new(self.a[1..].iter().map(|x| x * &dq).collect())
    }

    /// `x^k ∂_y^k f`, the concrete action of Hilbert's Δ^k.
    pub fn delta_pow(&self, k: usize) -> Self {
        let d = self.degree();
        if k > d {
            return Self::zero_of_degree(d);
        }
        let mut g = self.clone();
        for _ in 0..k {
            g = g.dy();
        }
        // multiplying by x^k keeps the y-exponents
        let mut c = g.raw();
        c.resize(d + 1, QuadElem::zero());
        Self::from_raw(c)
    }

    /// Raw Hessian determinant `f_xx f_yy − f_xy²`.
    pub fn hessian(&self) -> Self {
        let fx = self.dx();
        let fy = self.dy();
        let fxx = fx.dx();
        let fxy = fx.dy();
        let fyy = fy.dy();
        &(&fxx * &fyy) - &(&fxy * &fxy)
    }

    pub fn eval(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        let d = self.degree() as u32;
        self.raw()
            .iter()
            .enumerate()
            .fold(QuadElem::zero(), |acc, (i, c)| acc + c * x.pow(d - i as u32) * y.pow(i as u32))
    }

    /// `f(M·(x,y))`.
    pub fn subst(&self, m: &Matrix) -> Self {
        let d = self.degree();
        let l1 = vec![m.get(0, 0).clone(), m.get(0, 1).clone()];
        let l2 = vec![m.get(1, 0).clone(), m.get(1, 1).clone()];
        let p1: Vec<Vec<QuadElem>> = powers(&l1, d);
        let p2: Vec<Vec<QuadElem>> = powers(&l2, d);
        let mut out = vec![QuadElem::zero(); d + 1];
        for (i, c) in self.raw().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = raw_mul(&p1[d - i], &p2[i]);
            for (k, v) in t.iter().enumerate() {
                out[k] = &out[k] + c * v;
            }
        }
        Self::from_raw(out)
    }

    /// Exact quotient by `x^k`, if it divides.
    pub fn div_x_pow(&self, k: usize) -> Option<Self> {
        let d = self.degree();
        if k > d {
            return self.is_zero().then(|| Self::zero_of_degree(0));
        }
        let raw = self.raw();
        if raw[d - k + 1..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_raw(raw[..=d - k].to_vec()))
    }

    /// `Some(c)` with `self = c·other`.
    pub fn ratio_to(&self, other: &Self) -> Option<QuadElem> {
        if self.degree() != other.degree() {
            return None;
        }
        let j = other.a.iter().position(|x| !x.is_zero());
        let Some(j) = j else {
            return self.is_zero().then(QuadElem::zero);
        };
        let r = &self.a[j] / &other.a[j];
        (other.scale(&r) == *self).then_some(r)
    }

    pub fn is_proportional(&self, other: &Self) -> bool {
        self.ratio_to(other).is_some_and(|r| !r.is_zero())
    }
}

fn powers(l: &[QuadElem], d: usize) -> Vec<Vec<QuadElem>> {
    let mut v = vec![vec![QuadElem::one()]];
    for _ in 0..d {
        let next = raw_mul(v.last().unwrap(), l);
        v.push(next);
    }
    v
}

/// Product of forms given by monomial coefficients.
pub(crate) fn raw_mul(p: &[QuadElem], q: &[QuadElem]) -> Vec<QuadElem> {
    let mut out = vec![QuadElem::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + a * b;
        }
    }
    out
}

pub(crate) fn raw_pow(p: &[QuadElem], k: u32) -> Vec<QuadElem> {
    let mut acc = vec![QuadElem::one()];
    let mut base = p.to_vec();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = raw_mul(&acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = raw_mul(&base, &base);
        }
    }
    acc
}

impl Add<&BinaryForm> for &BinaryForm {
    type Output = BinaryForm;
    fn add(self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), o.degree(), "adding forms of different degree");
        BinaryForm::new(self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect())
    }
}

impl Sub<&BinaryForm> for &BinaryForm {
    type Output = BinaryForm;
    fn sub(self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), o.degree(), "subtracting forms of different degree");
        BinaryForm::new(self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect())
    }
}

impl Mul<&BinaryForm> for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, o: &BinaryForm) -> BinaryForm {
        BinaryForm::from_raw(raw_mul(&self.raw(), &o.raw()))
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;
    fn neg(self) -> BinaryForm {
        BinaryForm::new(self.a.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_mpoly())
    }
}

/// Root multiplicities over the algebraic closure, largest first; a root at
/// `[1:0]` counts with the power of `y` dividing `f`.
pub fn multiplicity_type(f: &BinaryForm) -> Result<Vec<usize>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    let raw = f.raw();
    let d = f.degree();
    let at_inf = raw.iter().take_while(|c| c.is_zero()).count();
    // g(x,1) = Σ_{i ≥ at_inf} c_i x^{d−i}
    let mut u = vec![QuadElem::zero(); d - at_inf + 1];
    for (i, c) in raw.iter().enumerate().skip(at_inf) {
        u[d - i] = c.clone();
    }
    let mut out = squarefree_multiplicities(&UniPoly::new(u));
    if at_inf > 0 {
        out.push(at_inf);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

// Yun's algorithm; each squarefree factor of degree k contributes k roots.
fn squarefree_multiplicities(u: &UniPoly) -> Vec<usize> {
    let mut out = vec![];
    if u.degree().unwrap_or(0) == 0 {
        return out;
    }
    let du = u.derivative();
    let g = u.gcd(&du);
    let mut w = u.divrem(&g).unwrap().0;
    let mut y = du.divrem(&g).unwrap().0 - w.derivative();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let z = w.gcd(&y);
        for _ in 0..z.degree().unwrap_or(0) {
            out.push(i);
        }
        w = w.divrem(&z).unwrap().0;
        y = y.divrem(&z).unwrap().0 - w.derivative();
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(s: &str) -> BinaryForm {
        BinaryForm::parse(s).unwrap()
    }

    #[test]
    fn normalized_coefficients() {
        let f = bf("x^4 + 6*x^2*y^2 + y^4");
        assert_eq!(f.coeffs(), BinaryForm::from_ints(&[1, 0, 1, 0, 1]).coeffs());
        assert_eq!(f.to_mpoly(), parse_poly("x^4 + 6*x^2*y^2 + y^4", &["x", "y"]).unwrap());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_type(&bf("x^4 - y^4")).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(multiplicity_type(&bf("x^3*y")).unwrap(), vec![3, 1]);
        assert_eq!(multiplicity_type(&bf("(x^2+y^2)^2")).unwrap(), vec![2, 2]);
        assert_eq!(multiplicity_type(&bf("y^4")).unwrap(), vec![4]);
    }

    #[test]
    fn delta_on_pencil() {
        let t = QuadElem::from_frac(2, 7);
        let f = BinaryForm::new(vec![QuadElem::one(), QuadElem::zero(), t.clone(), QuadElem::zero(), QuadElem::one()]);
        // x·∂_y F_t = 12t x³y + 4xy³
        let expect = BinaryForm::from_raw(vec![
            QuadElem::zero(),
            QuadElem::from_int(12) * &t,
            QuadElem::zero(),
            QuadElem::from_int(4),
            QuadElem::zero(),
        ]);
        assert_eq!(f.delta_pow(1), expect);
        assert!(f.delta_pow(5).is_zero());
        assert!(bf("x^4").delta_pow(1).is_zero());
    }

    #[test]
    fn hessian_matches_mpoly() {
        let f = bf("3*x^5 - x^3*y^2 + 7*x*y^4 + 2*y^5");
        assert_eq!(f.hessian().to_mpoly(), f.to_mpoly().hessian_det());
    }
}
