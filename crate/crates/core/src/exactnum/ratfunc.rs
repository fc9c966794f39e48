use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ExactError, QuadElem, Rational, UniPoly};

/// Rational function in `t`, kept reduced with a monic denominator.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::simplify(num, den))
    }

    pub fn poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    /// Divides out the gcd and normalizes the denominator to be monic.
    pub fn simplify(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g).expect("gcd divides");
        let (d, _) = den.divrem(&g).expect("gcd divides");
        let l = d.lead().inv().expect("nonzero");
        RatFunc { num: n.scale(&l), den: d.scale(&l) }
    }

    /// `num / Π (1 − t^k)`
    pub fn over_one_minus(num: UniPoly, ks: &[usize]) -> Self {
        let den = ks.iter().fold(UniPoly::one(), |acc, &k| acc * UniPoly::one_minus_t_pow(k));
        Self::simplify(num, den)
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, t: &QuadElem) -> Result<QuadElem, ExactError> {
        self.num.eval(t).try_div(&self.den.eval(t))
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Power-series coefficients `c_0..c_n` around `t = 0`.
    pub fn taylor(&self, n: usize) -> Result<Vec<QuadElem>, ExactError> {
        let d0 = self.den.coeff(0).inv()?;
        let mut out: Vec<QuadElem> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs().len().saturating_sub(1)) {
                acc = acc - self.den.coeff(j) * &out[k - j];
            }
            out.push(acc * &d0);
        }
        Ok(out)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::simplify(&self.num + &o.num, self.den.clone());
        }
        RatFunc::simplify(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::simplify(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        &self + &o
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        &self * &o
    }
}

fn denom_lcm(p: &UniPoly, acc: &mut BigInt) {
    for c in p.coeffs() {
        *acc = acc.lcm(c.a().denom());
        *acc = acc.lcm(c.b().denom());
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = BigInt::one();
        denom_lcm(&self.num, &mut l);
        denom_lcm(&self.den, &mut l);
        let s = QuadElem::rational(Rational::from_integer(l));
        write!(f, "({}) / ({})", self.num.scale(&s), self.den.scale(&s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancels_common_factor() {
        let r = RatFunc::new(UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[0, 1])).unwrap();
        assert_eq!(r.num(), &UniPoly::t());
        assert_eq!(r.den(), &UniPoly::one());
    }

    #[test]
    fn two_forms_of_tetrahedral_series() {
        let a = RatFunc::over_one_minus(UniPoly::from_ints(&[1, 0, 0, 0, -1, 0, 0, 0, 1]), &[6, 4]);
        let b = RatFunc::over_one_minus(UniPoly::one_minus_t_pow(24), &[6, 8, 12]);
        assert_eq!(a, b);
    }

    #[test]
    fn taylor_of_geometric() {
        let r = RatFunc::over_one_minus(UniPoly::one(), &[2]);
        let c = r.taylor(5).unwrap();
        let ints: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        assert_eq!(ints, ["1", "0", "1", "0", "1", "0"]);
    }
}
