use num_traits::Zero;

use super::{need_degree, BinformError};
use crate::exactnum::{QuadElem, Rational, Ring};
use crate::linalg::Matrix;
use crate::mpoly::BinaryForm;
use crate::skewpf::{pfaffian, SkewMatrix};

/// `I = 3a₂² − 4a₁a₃ + a₀a₄` over any ring.
pub fn quartic_i<R: Ring>(a: &[R]) -> R {
    R::from_int(3) * a[2].clone() * a[2].clone() - R::from_int(4) * a[1].clone() * a[3].clone()
        + a[0].clone() * a[4].clone()
}

/// `J = det [[a₀,a₁,a₂],[a₁,a₂,a₃],[a₂,a₃,a₄]]` over any ring.
pub fn quartic_j<R: Ring>(a: &[R]) -> R {
    let m: Vec<Vec<R>> = (0..3).map(|i| (0..3).map(|j| a[i + j].clone()).collect()).collect();
    crate::mpoly::det_laplace(&m)
}

pub fn invariant_i(f: &BinaryForm) -> Result<QuadElem, BinformError> {
    need_degree(f, 4)?;
    Ok(quartic_i(f.coeffs()))
}

pub fn invariant_j(f: &BinaryForm) -> Result<QuadElem, BinformError> {
    need_degree(f, 4)?;
    Ok(quartic_j(f.coeffs()))
}

pub fn catalecticant(f: &BinaryForm) -> Result<Matrix, BinformError> {
    need_degree(f, 4)?;
    let a = f.coeffs();
    Ok(Matrix::from_rows((0..3).map(|i| (0..3).map(|j| a[i + j].clone()).collect()).collect()))
}

/// `D = I³ − 27J²`.
pub fn discriminant4(f: &BinaryForm) -> Result<QuadElem, BinformError> {
    let i = invariant_i(f)?;
    let j = invariant_j(f)?;
    Ok(i.pow(3) - QuadElem::from_int(27) * j.pow(2))
}

/// Pfaffian of the 4×4 skew matrix built from the quartic's coefficients.
/// It equals `I` on the nose.
pub fn i_as_pfaffian(f: &BinaryForm) -> Result<QuadElem, BinformError> {
    need_degree(f, 4)?;
    let a = f.coeffs();
    let two = QuadElem::from_int(2);
    let three = QuadElem::from_int(3);
    let m = SkewMatrix::from_upper(
        4,
        &[a[0].clone(), &two * &a[1], &three * &a[2], a[2].clone(), &two * &a[3], a[4].clone()],
    );
    Ok(pfaffian(&m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarticClass {
    NullCone,
    Singular,
    Harmonic,
    Equianharmonic,
    Generic,
}

impl QuarticClass {
    pub fn name(self) -> &'static str {
        match self {
            QuarticClass::NullCone => "NullCone",
            QuarticClass::Singular => "Singular",
            QuarticClass::Harmonic => "Harmonic",
            QuarticClass::Equianharmonic => "Equianharmonic",
            QuarticClass::Generic => "Generic",
        }
    }
}

pub fn classify_quartic(f: &BinaryForm) -> Result<QuarticClass, BinformError> {
    need_degree(f, 4)?;
    if f.is_zero() {
        return Err(BinformError::ZeroForm);
    }
    let i = invariant_i(f)?;
    let j = invariant_j(f)?;
    let d = discriminant4(f)?;
    Ok(match (i.is_zero(), j.is_zero(), d.is_zero()) {
        (true, true, _) => QuarticClass::NullCone,
        (_, _, true) => QuarticClass::Singular,
        (_, true, _) => QuarticClass::Harmonic,
        (true, _, _) => QuarticClass::Equianharmonic,
        _ => QuarticClass::Generic,
    })
}

/// The projective pair `(I³ : D)`.
pub fn j_ratio(f: &BinaryForm) -> Result<(QuadElem, QuadElem), BinformError> {
    let i = invariant_i(f)?;
    let j = invariant_j(f)?;
    if i.is_zero() && j.is_zero() {
        return Err(BinformError::NullconeForm);
    }
    Ok((i.pow(3), discriminant4(f)?))
}

/// `d(d−1)(d−2)/#Stab`, the degree of the orbit closure of a general
/// binary form of degree `d` with the given stabilizer order.
pub fn orbit_degree(d: u64, stab: u64) -> Rational {
    assert!(d >= 3 && stab >= 1);
    crate::exactnum::rat((d * (d - 1) * (d - 2)) as i64, stab as i64)
}
