use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, Rational};

/// `a + b·√d` with `d` square-free.
///
/// Elements with `b = 0` are stored with `d = 1`, so a rational value has a
/// single representation no matter which field it was computed in. Two
/// irrational elements over different `d` cannot be combined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: Rational,
    b: Rational,
    d: i64,
}

fn mk(a: Rational, b: Rational, d: i64) -> QuadElem {
    if b.is_zero() || d == 1 {
        QuadElem { a: a + b, b: Rational::zero(), d: 1 }
    } else {
        QuadElem { a, b, d }
    }
}

impl QuadElem {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self, ExactError> {
        if d == 0 || (d != 1 && squarefree_i64(d) != d) {
            return Err(ExactError::BadField(d));
        }
        Ok(mk(a, b, d))
    }

    pub fn rational(a: Rational) -> Self {
        QuadElem { a, b: Rational::zero(), d: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `√n` for any integer `n`, written as `s·√d` with `d` square-free.
    pub fn sqrt_of(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let d = squarefree_i64(n);
        let s = ((n / d) as f64).sqrt().round() as i64;
        debug_assert_eq!(s * s * d, n);
        mk(Rational::zero(), Rational::from_integer(BigInt::from(s)), d)
    }

    pub fn i() -> Self {
        Self::sqrt_of(-1)
    }

    /// Primitive cube root of unity `(−1 + √−3)/2`.
    pub fn omega() -> Self {
        mk(super::rat(-1, 2), super::rat(1, 2), -3)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conj(&self) -> Self {
        mk(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    fn join(&self, other: &Self) -> Result<i64, ExactError> {
        if other.b.is_zero() || self.d == other.d {
            Ok(self.d)
        } else if self.b.is_zero() {
            Ok(other.d)
        } else {
            Err(ExactError::MixedField(self.d, other.d))
        }
    }

    pub fn try_add(&self, y: &Self) -> Result<Self, ExactError> {
        let d = self.join(y)?;
        Ok(mk(&self.a + &y.a, &self.b + &y.b, d))
    }

    pub fn try_sub(&self, y: &Self) -> Result<Self, ExactError> {
        let d = self.join(y)?;
        Ok(mk(&self.a - &y.a, &self.b - &y.b, d))
    }

    pub fn try_mul(&self, y: &Self) -> Result<Self, ExactError> {
        if self.b.is_zero() && y.b.is_zero() {
            return Ok(Self::rational(&self.a * &y.a));
        }
        let d = self.join(y)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &y.a + &self.b * &y.b * dd;
        let b = &self.a * &y.b + &y.a * &self.b;
        Ok(mk(a, b, d))
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Self::rational(self.a.recip()));
        }
        let n = self.norm();
        Ok(mk(&self.a / &n, -&self.b / &n, self.d))
    }

    pub fn try_div(&self, y: &Self) -> Result<Self, ExactError> {
        self.join(y)?;
        self.try_mul(&y.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<Self, ExactError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    /// Numeric value as (re, im).
    pub fn to_complex(&self) -> (f64, f64) {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        if self.d > 0 {
            (a + b * (self.d as f64).sqrt(), 0.0)
        } else {
            (a, b * ((-self.d) as f64).sqrt())
        }
    }

    /// A square root of `self` inside the same quadratic field, if any.
    pub fn sqrt_in_field(&self) -> Result<Self, ExactError> {
        self.sqrt_in(self.d)
    }

    /// Square root inside ℚ(√d); `d = 1` means plain ℚ.
    pub fn sqrt_in(&self, d: i64) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Ok(Self::rational(r));
            }
            if d != 1 {
                let dd = Rational::from_integer(BigInt::from(d));
                if let Some(q) = rational_sqrt(&(&self.a / &dd)) {
                    return Ok(mk(Rational::zero(), q, d));
                }
            }
            return Err(ExactError::NotASquare { suggest_d: squarefree_part(&self.a) });
        }
        if d != self.d {
            return Err(ExactError::MixedField(self.d, d));
        }
        // (p + q√d)² = a + b√d  ⇒  p² = (a ± √N)/2 with N the norm
        let norm_root = rational_sqrt(&self.norm());
        if let Some(n) = norm_root {
            let two = Rational::from_integer(BigInt::from(2));
            for cand in [(&self.a + &n) / &two, (&self.a - &n) / &two] {
                if let Some(p) = rational_sqrt(&cand) {
                    if p.is_zero() {
                        continue;
                    }
                    let q = &self.b / (&two * &p);
                    let y = mk(p, q, self.d);
                    if &(&y * &y) == self {
                        return Ok(y);
                    }
                }
            }
        }
        Err(ExactError::NotASquare { suggest_d: squarefree_part(&self.norm()) })
    }
}

/// Square root of a rational when it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

fn squarefree_i64(n: i64) -> i64 {
    let sign = n.signum();
    let mut m = n.unsigned_abs();
    let mut out: u64 = 1;
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out *= m;
    sign * out as i64
}

/// Square-free integer in the square class of `q` (numerator·denominator).
/// Returns 0 if the value is too large to factor by trial division.
pub fn squarefree_part(q: &Rational) -> i64 {
    let prod: BigInt = q.numer() * q.denom();
    if prod.is_zero() {
        return 0;
    }
    let neg = prod.sign() == Sign::Minus;
    let mut m = prod.abs();
    let mut out = BigInt::one();
    let mut p = 2u64;
    while p < 1_000_000 {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &bp;
        }
        p += 1;
    }
    out *= m;
    match out.to_i64() {
        Some(v) if neg => -v,
        Some(v) => v,
        None => 0,
    }
}

impl Zero for QuadElem {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadElem {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl From<Rational> for QuadElem {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for QuadElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { a: -&self.a, b: -&self.b, d: self.d }
    }
}

// Operator forms panic on mixed fields; the try_* methods report it.
macro_rules! quad_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: &QuadElem) -> QuadElem {
                self.$f(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: QuadElem) -> QuadElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: &QuadElem) -> QuadElem {
                (&self).$m(rhs)
            }
        }
        impl $tr<QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $m(self, rhs: QuadElem) -> QuadElem {
                self.$m(&rhs)
            }
        }
    };
}

quad_op!(Add, add, try_add);
quad_op!(Sub, sub, try_sub);
quad_op!(Mul, mul, try_mul);
quad_op!(Div, div, try_div);

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = format!("sqrt({})", self.d);
        let babs = self.b.abs();
        let bpart = if babs.is_one() { root } else { format!("{babs}*{root}") };
        if self.a.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{bpart}")
            } else {
                write!(f, "{bpart}")
            }
        } else if self.b.is_negative() {
            write!(f, "{} - {bpart}", self.a)
        } else {
            write!(f, "{} + {bpart}", self.a)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn conjugate_product() {
        let x = QuadElem::from_int(1) + QuadElem::sqrt_of(-3);
        let y = QuadElem::from_int(1) - QuadElem::sqrt_of(-3);
        assert_eq!(x * y, QuadElem::from_int(4));
    }

    #[test]
    fn omega_is_cube_root() {
        let w = QuadElem::omega();
        assert!((&w * &w + &w + QuadElem::one()).is_zero());
        assert_eq!(w.pow(3), QuadElem::one());
    }

    #[test]
    fn rationalize() {
        let r = QuadElem::one() / QuadElem::sqrt_of(2);
        assert_eq!(r, QuadElem::new(rat(0, 1), rat(1, 2), 2).unwrap());
        assert_eq!(r.to_string(), "1/2*sqrt(2)");
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(QuadElem::from_int(4).sqrt_in_field().unwrap(), QuadElem::from_int(2));
        assert_eq!(QuadElem::from_int(-16).sqrt_in_field(), Err(ExactError::NotASquare { suggest_d: -1 }));
        let x = QuadElem::from_int(7) + QuadElem::from_int(4) * QuadElem::sqrt_of(3);
        let y = x.sqrt_in_field().unwrap();
        assert_eq!(&y * &y, x);
        assert_eq!(y, QuadElem::from_int(2) + QuadElem::sqrt_of(3));
        assert_eq!(QuadElem::from_int(-3).sqrt_in(-3).unwrap(), QuadElem::sqrt_of(-3));
    }

    #[test]
    fn mixed_fields_rejected() {
        let x = QuadElem::sqrt_of(2);
        let y = QuadElem::sqrt_of(3);
        assert_eq!(x.try_add(&y), Err(ExactError::MixedField(2, 3)));
        // rational values mix with anything
        assert!(x.try_mul(&QuadElem::from_int(5)).is_ok());
    }

    #[test]
    fn sqrt_of_normalizes() {
        assert_eq!(QuadElem::sqrt_of(12), QuadElem::from_int(2) * QuadElem::sqrt_of(3));
        assert_eq!(QuadElem::sqrt_of(-4).to_string(), "2*sqrt(-1)");
        assert!(QuadElem::new(rat(1, 1), rat(1, 1), 12).is_err());
    }
}
