use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ExactError, QuadElem};

/// Dense univariate polynomial in `t`, coefficients indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<QuadElem>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<QuadElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| QuadElem::from_int(c)).collect())
    }

    pub fn constant(c: QuadElem) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: QuadElem, k: usize) -> Self {
        let mut v = vec![QuadElem::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn t() -> Self {
        Self::monomial(QuadElem::one(), 1)
    }

    /// `1 − t^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        Self::one() - Self::monomial(QuadElem::one(), k)
    }

    pub fn coeffs(&self) -> &[QuadElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadElem {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadElem::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> QuadElem {
        self.coeffs.last().cloned().unwrap_or_else(QuadElem::zero)
    }

    pub fn scale(&self, c: &QuadElem) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, t: &QuadElem) -> QuadElem {
        let mut acc = QuadElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * QuadElem::from_int(k as i64)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().inv().expect("nonzero lead");
        self.scale(&l)
    }

    pub fn divrem(&self, other: &Self) -> Result<(Self, Self), ExactError> {
        let dn = other.degree().ok_or(ExactError::DivisionByZero)?;
        let linv = other.lead().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![QuadElem::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn] * &linv;
            if !c.is_zero() {
                for (j, oc) in other.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &c * oc;
                }
            }
            q[k] = c;
        }
        r.truncate(dn);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Newton interpolation through `(x_i, y_i)` with distinct nodes.
    pub fn interpolate(points: &[(QuadElem, QuadElem)]) -> Self {
        let n = points.len();
        let xs: Vec<QuadElem> = points.iter().map(|p| p.0.clone()).collect();
        let mut dd: Vec<QuadElem> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            acc = &acc * &Self::new(vec![-&xs[i], QuadElem::one()]) + Self::constant(dd[i].clone());
        }
        acc
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            crate::mpoly::push_term(&mut out, c, &mono);
        }
        out
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::constant(QuadElem::one())
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![QuadElem::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: &UniPoly) -> UniPoly {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}
