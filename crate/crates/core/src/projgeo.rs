//! Projective geometry of the line and the plane: cross-ratio, harmonic
//! constructions and conic polars. One generic code path serves exact
//! [`QuadElem`] and `f64` coordinates.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::QuadElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeoError {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("cross-ratio undefined: three of the four points coincide")]
    Undefined,
    #[error("cross-ratio orbit needs lambda outside {{0, 1}}")]
    DegenerateLambda,
    #[error("degenerate input points")]
    DegenerateInput,
    #[error("degenerate auxiliary choice")]
    DegenerateChoice,
    #[error("polar line is zero")]
    ZeroLine,
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Coordinates a projective point may take.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Exact zero test, or a tolerance for floats.
    fn negligible(&self) -> bool;
}

impl Field for QuadElem {
    fn negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Field for f64 {
    fn negligible(&self) -> bool {
        self.abs() < 1e-12
    }
}

#[derive(Debug, Clone)]
pub struct PointP1<F> {
    pub p0: F,
    pub p1: F,
}

/// `(ab) = a₀b₁ − a₁b₀`.
pub fn bracket<F: Field>(a: &PointP1<F>, b: &PointP1<F>) -> F {
    a.p0.clone() * b.p1.clone() - a.p1.clone() * b.p0.clone()
}

impl<F: Field> PointP1<F> {
    pub fn new(p0: F, p1: F) -> Result<Self, GeoError> {
        if p0.negligible() && p1.negligible() {
            return Err(GeoError::ZeroVector);
        }
        Ok(PointP1 { p0, p1 })
    }

    /// `[x : 1]`.
    pub fn affine(x: F) -> Self {
        PointP1 { p0: x, p1: F::one() }
    }

    /// `[1 : 0]`.
    pub fn infinity() -> Self {
        PointP1 { p0: F::one(), p1: F::zero() }
    }

    pub fn is_infinite(&self) -> bool {
        self.p1.negligible()
    }

    /// Affine coordinate `p0/p1`, `None` at infinity.
    pub fn affine_value(&self) -> Option<F> {
        (!self.is_infinite()).then(|| self.p0.clone() / self.p1.clone())
    }

    pub fn same_point(&self, o: &Self) -> bool {
        bracket(self, o).negligible()
    }

    /// Image under `[[m00, m01], [m10, m11]]`.
    pub fn transform(&self, m: &[[F; 2]; 2]) -> Self {
        PointP1 {
            p0: m[0][0].clone() * self.p0.clone() + m[0][1].clone() * self.p1.clone(),
            p1: m[1][0].clone() * self.p0.clone() + m[1][1].clone() * self.p1.clone(),
        }
    }
}

impl<F: Field> PartialEq for PointP1<F> {
    fn eq(&self, o: &Self) -> bool {
        self.same_point(o)
    }
}

impl<F: fmt::Display> fmt::Display for PointP1<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.p0, self.p1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CrossRatio<F> {
    Value(F),
    Infinity,
}

impl<F: Clone> CrossRatio<F> {
    pub fn value(&self) -> Option<F> {
        match self {
            CrossRatio::Value(v) => Some(v.clone()),
            CrossRatio::Infinity => None,
        }
    }
}

/// `λ = (ac)(bd) / ((ad)(bc))`.
pub fn cross_ratio<F: Field>(
    a: &PointP1<F>,
    b: &PointP1<F>,
    c: &PointP1<F>,
    d: &PointP1<F>,
) -> Result<CrossRatio<F>, GeoError> {
    let pts = [a, b, c, d];
    for skip in 0..4 {
        let rest: Vec<_> = (0..4).filter(|&k| k != skip).map(|k| pts[k]).collect();
        if rest[0].same_point(rest[1]) && rest[1].same_point(rest[2]) {
            return Err(GeoError::Undefined);
        }
    }
    let num = bracket(a, c) * bracket(b, d);
    let den = bracket(a, d) * bracket(b, c);
    if den.negligible() {
        return Ok(CrossRatio::Infinity);
    }
    Ok(CrossRatio::Value(num / den))
}

/// `{λ, 1/λ, 1−λ, 1/(1−λ), (λ−1)/λ, λ/(λ−1)}`.
pub fn cross_ratio_orbit<F: Field>(l: &F) -> Result<Vec<F>, GeoError> {
    let one = F::one();
    let m = one.clone() - l.clone();
    if l.negligible() || m.negligible() {
        return Err(GeoError::DegenerateLambda);
    }
    Ok(vec![
        l.clone(),
        one.clone() / l.clone(),
        m.clone(),
        one / m,
        (l.clone() - F::one()) / l.clone(),
        l.clone() / (l.clone() - F::one()),
    ])
}

/// Number of distinct values in an orbit (6, 3 or 2).
pub fn distinct_count<F: Field>(vals: &[F]) -> usize {
    let mut seen: Vec<&F> = vec![];
    for v in vals {
        if !seen.iter().any(|w| (v.clone() - (*w).clone()).negligible()) {
            seen.push(v);
        }
    }
    seen.len()
}

/// The `d` with `(ac)(bd)/((ab)(cd)) = −1`.
pub fn fourth_harmonic<F: Field>(a: &PointP1<F>, b: &PointP1<F>, c: &PointP1<F>) -> Result<PointP1<F>, GeoError> {
    if a.same_point(b) || a.same_point(c) || b.same_point(c) {
        return Err(GeoError::DegenerateInput);
    }
    let ac = bracket(a, c);
    let ab = bracket(a, b);
    // linear in d: (ac)(b₀d₁ − b₁d₀) + (ab)(c₀d₁ − c₁d₀) = 0
    PointP1::new(ac.clone() * b.p0.clone() + ab.clone() * c.p0.clone(), ac * b.p1.clone() + ab * c.p1.clone())
}

#[derive(Debug, Clone)]
pub struct PointP2<F>(pub [F; 3]);

#[derive(Debug, Clone)]
pub struct LineP2<F>(pub [F; 3]);

fn cross3<F: Field>(u: &[F; 3], v: &[F; 3]) -> [F; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

fn dot3<F: Field>(u: &[F; 3], v: &[F; 3]) -> F {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

fn is_zero3<F: Field>(u: &[F; 3]) -> bool {
    u.iter().all(Field::negligible)
}

impl<F: Field> PointP2<F> {
    pub fn new(x: F, y: F, z: F) -> Self {
        PointP2([x, y, z])
    }

    pub fn same_point(&self, o: &Self) -> bool {
        is_zero3(&cross3(&self.0, &o.0))
    }

    pub fn on(&self, l: &LineP2<F>) -> bool {
        dot3(&self.0, &l.0).negligible()
    }
}

impl<F: Field> PartialEq for PointP2<F> {
    fn eq(&self, o: &Self) -> bool {
        self.same_point(o)
    }
}

impl<F: Field> PartialEq for LineP2<F> {
    fn eq(&self, o: &Self) -> bool {
        is_zero3(&cross3(&self.0, &o.0))
    }
}

impl<F: fmt::Display> fmt::Display for PointP2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {} : {}]", self.0[0], self.0[1], self.0[2])
    }
}

pub fn join<F: Field>(p: &PointP2<F>, q: &PointP2<F>) -> Option<LineP2<F>> {
    let l = cross3(&p.0, &q.0);
    (!is_zero3(&l)).then_some(LineP2(l))
}

pub fn meet<F: Field>(l: &LineP2<F>, m: &LineP2<F>) -> Option<PointP2<F>> {
    let p = cross3(&l.0, &m.0);
    (!is_zero3(&p)).then_some(PointP2(p))
}

/// Conic `PᵀSP = 0` for a symmetric `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct Conic<F> {
    s: [[F; 3]; 3],
}

impl<F: Field> Conic<F> {
    pub fn new(s: [[F; 3]; 3]) -> Result<Self, GeoError> {
        for i in 0..3 {
            for j in 0..i {
                if !(s[i][j].clone() - s[j][i].clone()).negligible() {
                    return Err(GeoError::NotSymmetric);
                }
            }
        }
        Ok(Conic { s })
    }

    pub fn matrix(&self) -> &[[F; 3]; 3] {
        &self.s
    }

    fn apply(&self, p: &[F; 3]) -> [F; 3] {
        [dot3(&self.s[0], p), dot3(&self.s[1], p), dot3(&self.s[2], p)]
    }

    pub fn contains(&self, p: &PointP2<F>) -> bool {
        dot3(&p.0, &self.apply(&p.0)).negligible()
    }
}

/// The polar line `S·P`; the tangent at `P` when `P` lies on the conic.
pub fn polar_line<F: Field>(s: &Conic<F>, p: &PointP2<F>) -> Result<LineP2<F>, GeoError> {
    let l = s.apply(&p.0);
    if is_zero3(&l) {
        return Err(GeoError::ZeroLine);
    }
    Ok(LineP2(l))
}

/// The point where the polar of `a` meets the line `x ∨ y`.
pub fn apollonius_point<F: Field>(
    s: &Conic<F>,
    a: &PointP2<F>,
    x: &PointP2<F>,
    y: &PointP2<F>,
) -> Result<PointP2<F>, GeoError> {
    let base = join(x, y).ok_or(GeoError::DegenerateInput)?;
    let polar = polar_line(s, a)?;
    meet(&polar, &base).ok_or(GeoError::DegenerateChoice)
}

/// Complete-quadrilateral construction. With `f` on `c ∨ e`:
/// `g = (a∨f) ∩ (b∨e)`, `i = (a∨e) ∩ (b∨f)`, `d = (g∨i) ∩ (a∨b)`.
/// The result is the harmonic conjugate of `c` with respect to `a, b`.
pub fn quadrilateral_fourth<F: Field>(
    a: &PointP2<F>,
    b: &PointP2<F>,
    c: &PointP2<F>,
    e: &PointP2<F>,
    f: &PointP2<F>,
) -> Result<PointP2<F>, GeoError> {
    if a.same_point(b) || a.same_point(c) || b.same_point(c) {
        return Err(GeoError::DegenerateInput);
    }
    let base = join(a, b).ok_or(GeoError::DegenerateInput)?;
    if !c.on(&base) {
        return Err(GeoError::DegenerateInput);
    }
    if e.on(&base) || f.same_point(c) || f.same_point(e) {
        return Err(GeoError::DegenerateChoice);
    }
    let ce = join(c, e).ok_or(GeoError::DegenerateChoice)?;
    if !f.on(&ce) {
        return Err(GeoError::DegenerateChoice);
    }
    let line = |p: &PointP2<F>, q: &PointP2<F>| join(p, q).ok_or(GeoError::DegenerateChoice);
    let g = meet(&line(a, f)?, &line(b, e)?).ok_or(GeoError::DegenerateChoice)?;
    let i = meet(&line(a, e)?, &line(b, f)?).ok_or(GeoError::DegenerateChoice)?;
    meet(&line(&g, &i)?, &base).ok_or(GeoError::DegenerateChoice)
}

/// Cross-ratio of the tempered C-E-G chord: lengths `2^{-1/3}`, `1`,
/// `2^{-7/12}` and the bridge at `0`.
pub fn tempered_cross_ratio() -> f64 {
    let e = 2f64.powf(-1.0 / 3.0);
    let g = 2f64.powf(-7.0 / 12.0);
    let pts = [e, 1.0, g, 0.0].map(PointP1::affine);
    cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).ok().and_then(|c| c.value()).expect("distinct points")
}
