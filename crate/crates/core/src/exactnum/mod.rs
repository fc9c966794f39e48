//! Exact scalars: rationals, elements of ℚ(√d), univariate polynomials and
//! rational functions over them.

mod quad;
mod ratfunc;
mod unipoly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use quad::{rational_sqrt, squarefree_part, QuadElem};
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("mixed quadratic fields: sqrt({0}) and sqrt({1})")]
    MixedField(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a square; adjoin sqrt({suggest_d})")]
    NotASquare { suggest_d: i64 },
    #[error("invalid field parameter d = {0}")]
    BadField(i64),
}

/// Commutative ring with unit, enough for division-free formulas
/// (Pfaffians, invariants) over scalars and over polynomial rings.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc + one.clone();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl Ring for QuadElem {
    fn from_int(n: i64) -> Self {
        QuadElem::from_int(n)
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
