//! Ternary cubics: the Aronhold invariant as a Pfaffian, Hessians, the Hesse
//! pencil `x³ + y³ + z³ + 6s·xyz`, and the branch quartic of the projection
//! from a point of the curve.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::binform::{classify_quartic, invariant_i, invariant_j, j_ratio, BinformError, QuarticClass};
use crate::exactnum::{QuadElem, Ring, UniPoly};
use crate::linalg::Matrix;
use crate::mpoly::{parse_poly, BinaryForm, MPoly};
use crate::skewpf::{pfaffian, SkewMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TernaryError {
    #[error("expected a homogeneous cubic in x, y, z")]
    NotCubic,
    #[error("principal Pfaffians of the Aronhold matrix disagree")]
    PfaffianMismatch,
    #[error("the xyz member of the pencil has no finite parameter")]
    InfinityParam,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("point and basis directions are linearly dependent")]
    DegenerateBasis,
    #[error(transparent)]
    Binform(#[from] BinformError),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exponents of the ten cubic monomials, in coefficient order.
pub const CUBIC_MONOMIALS: [[u32; 3]; 10] =
    [[3, 0, 0], [2, 1, 0], [2, 0, 1], [1, 2, 0], [1, 1, 1], [1, 0, 2], [0, 3, 0], [0, 2, 1], [0, 1, 2], [0, 0, 3]];

fn monomial_index(e: [u32; 3]) -> usize {
    CUBIC_MONOMIALS.iter().position(|m| *m == e).expect("cubic monomial")
}

pub fn parse_cubic(text: &str) -> Result<MPoly, TernaryError> {
    let f = parse_poly(text, &["x", "y", "z"]).map_err(|e| TernaryError::Parse(e.to_string()))?;
    check_cubic(&f)?;
    Ok(f)
}

fn check_cubic(f: &MPoly) -> Result<(), TernaryError> {
    if f.nvars() != 3 || (!f.is_zero() && f.homogeneous_degree() != Some(3)) {
        return Err(TernaryError::NotCubic);
    }
    Ok(())
}

pub fn cubic_coeffs(f: &MPoly) -> Result<[QuadElem; 10], TernaryError> {
    check_cubic(f)?;
    Ok(CUBIC_MONOMIALS.map(|m| f.coeff(&m)))
}

pub fn cubic_from_coeffs(c: &[QuadElem; 10]) -> MPoly {
    let mut f = MPoly::zero_in(3);
    for (m, v) in CUBIC_MONOMIALS.iter().zip(c) {
        f.add_term(m.to_vec(), v.clone());
    }
    f
}

/// `∂³f/∂x_i∂x_j∂x_k` for a cubic with coefficients `c`.
fn third_derivatives<R: Ring>(c: &[R; 10]) -> [[[R; 3]; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                let mult: i64 = e.iter().map(|&n| (1..=n as i64).product::<i64>()).product();
                R::from_int(mult) * c[monomial_index(e)].clone()
            })
        })
    })
}

/// The 9×9 skew matrix with blocks `[[0, H_z, −H_y], [−H_z, 0, H_x], [H_y, −H_x, 0]]`,
/// `H_v` the (constant) Hessian matrix of `∂f/∂v`.
pub fn aronhold_matrix<R: Ring>(c: &[R; 10]) -> SkewMatrix<R> {
    let t = third_derivatives(c);
    let mut m = SkewMatrix::zeros(9);
    // block (r, s) carries sign·H_v; only the upper blocks are stored
    let blocks = [(0, 1, 2, false), (0, 2, 1, true), (1, 2, 0, false)];
    for (r, s, v, neg) in blocks {
        for a in 0..3 {
            for b in 0..3 {
                let h = t[v][a][b].clone();
                m.set(3 * r + a, 3 * s + b, if neg { -h } else { h });
            }
        }
    }
    m
}

/// All nine 8×8 principal Pfaffians `Pf(B_i)`.
pub fn aronhold_pfaffians<R: Ring>(c: &[R; 10]) -> Vec<R> {
    let m = aronhold_matrix(c);
    (0..9).map(|i| pfaffian(&m.without(i))).collect()
}

/// Checks the Pfaffian pattern and returns the common value. The kernel of
/// the matrix contains the identity, so `Pf(B_0) = Pf(B_4) = Pf(B_8)` and the
/// six off-diagonal removals vanish.
pub fn aronhold_from_pfaffians<R: Ring>(pfs: &[R]) -> Result<R, TernaryError> {
    let val = pfs[0].clone();
    for (i, p) in pfs.iter().enumerate() {
        let ok = if i % 4 == 0 { *p == val } else { p.is_zero() };
        if !ok {
            return Err(TernaryError::PfaffianMismatch);
        }
    }
    Ok(val)
}

/// Degree-4 Aronhold invariant, normalized so the Hesse member has
/// `1296·s(s³ − 1)`.
pub fn aronhold(f: &MPoly) -> Result<QuadElem, TernaryError> {
    aronhold_from_pfaffians(&aronhold_pfaffians(&cubic_coeffs(f)?))
}

/// Pencil coordinates of the Hesse family.
#[derive(Debug, Clone, PartialEq)]
pub enum HesseParam {
    Finite(QuadElem),
    Infinity,
}

impl HesseParam {
    /// `[λ : μ]` for `λ(x³+y³+z³) + 6μ·xyz`.
    pub fn pencil(&self) -> [QuadElem; 2] {
        match self {
            HesseParam::Finite(s) => [QuadElem::one(), s.clone()],
            HesseParam::Infinity => [QuadElem::zero(), QuadElem::one()],
        }
    }

    pub fn from_pencil(l: &QuadElem, m: &QuadElem) -> Self {
        if l.is_zero() {
            HesseParam::Infinity
        } else {
            HesseParam::Finite(m / l)
        }
    }
}

pub fn hesse_member(p: &HesseParam) -> MPoly {
    let [l, m] = p.pencil();
    let mut c: [QuadElem; 10] = std::array::from_fn(|_| QuadElem::zero());
    for e in [[3, 0, 0], [0, 3, 0], [0, 0, 3]] {
        c[monomial_index(e)] = l.clone();
    }
    c[monomial_index([1, 1, 1])] = m * QuadElem::from_int(6);
    cubic_from_coeffs(&c)
}

/// `[λ : μ]` if `f` lies in the Hesse pencil.
pub fn pencil_coords(f: &MPoly) -> Option<[QuadElem; 2]> {
    let c = cubic_coeffs(f).ok()?;
    let l = c[monomial_index([3, 0, 0])].clone();
    let m = &c[monomial_index([1, 1, 1])] / &QuadElem::from_int(6);
    if l.is_zero() && m.is_zero() {
        return None;
    }
    let member = hesse_member(&HesseParam::from_pencil(&l, &m));
    let scale = if l.is_zero() { m.clone() } else { l.clone() };
    (member.scale(&scale) == *f).then_some([l, m])
}

/// `(S, T, disc)` with `S = s(s³−1)`, `T = 8s⁶+20s³−1` and
/// `disc = T² − 64S³ = (8s³+1)³`.
pub fn hesse_invariants(p: &HesseParam) -> Result<(QuadElem, QuadElem, QuadElem), TernaryError> {
    let HesseParam::Finite(s) = p else {
        return Err(TernaryError::InfinityParam);
    };
    let s3 = s.pow(3);
    let one = QuadElem::one();
    let big_s = s * &(&s3 - &one);
    let big_t = &(&s3.pow(2) * &QuadElem::from_int(8)) + &(&(&s3 * &QuadElem::from_int(20)) - &one);
    let disc = &big_t.pow(2) - &(&big_s.pow(3) * &QuadElem::from_int(64));
    Ok((big_s, big_t, disc))
}

/// `S`, `T` and `T² − 64S³` as polynomials in `s`.
pub fn hesse_invariant_polys() -> (UniPoly, UniPoly, UniPoly) {
    let s = UniPoly::from_ints(&[0, -1, 0, 0, 1]);
    let t = UniPoly::from_ints(&[-1, 0, 0, 20, 0, 0, 8]);
    let disc = &t.pow(2) - &s.pow(3).scale(&QuadElem::from_int(64));
    (s, t, disc)
}

pub fn hessian_cubic(f: &MPoly) -> Result<MPoly, TernaryError> {
    check_cubic(f)?;
    Ok(f.hessian_det())
}

/// Parameter of the Hessian of a pencil member.
pub fn hesse_hessian_param(p: &HesseParam) -> Result<HesseParam, TernaryError> {
    let h = hessian_cubic(&hesse_member(p))?;
    let [l, m] = pencil_coords(&h).ok_or(TernaryError::NotCubic)?;
    Ok(HesseParam::from_pencil(&l, &m))
}

/// Symmetric trilinear form with `P(p, p, p) = f(p)`.
fn polar<R: Ring>(t: &[[[QuadElem; 3]; 3]; 3], u: &[R; 3], v: &[R; 3], w: &[R; 3], lift: impl Fn(&QuadElem) -> R) -> R {
    let mut acc = R::zero();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                if !t[i][j][k].is_zero() {
                    acc = acc + lift(&t[i][j][k]) * u[i].clone() * v[j].clone() * w[k].clone();
                }
            }
        }
    }
    acc
}

/// `9P(p,w,w)² − 12P(p,p,w)P(w,w,w)` with `w = u·q₁ + v·q₂`; its roots are the
/// lines through `p` tangent to the curve elsewhere.
pub fn salmon_branch_quartic(
    f: &MPoly,
    p: &[QuadElem; 3],
    basis: &[[QuadElem; 3]; 2],
) -> Result<BinaryForm, TernaryError> {
    let c = cubic_coeffs(f)?;
    if !f.eval(p).is_zero() {
        return Err(TernaryError::PointNotOnCurve);
    }
    let m = Matrix::from_rows(vec![p.to_vec(), basis[0].to_vec(), basis[1].to_vec()]);
    if m.det().is_zero() {
        return Err(TernaryError::DegenerateBasis);
    }
    let sixth = QuadElem::from_frac(1, 6);
    let t = third_derivatives(&c).map(|a| a.map(|b| b.map(|x| &x * &sixth)));
    let u = MPoly::var(2, 0);
    let v = MPoly::var(2, 1);
    let w: [MPoly; 3] = std::array::from_fn(|i| &u.scale(&basis[0][i]) + &v.scale(&basis[1][i]));
    let pp: [MPoly; 3] = p.clone().map(|x| MPoly::constant(2, x));
    let lift = |x: &QuadElem| MPoly::constant(2, x.clone());
    let ppw = polar(&t, &pp, &pp, &w, lift);
    let pww = polar(&t, &pp, &w, &w, lift);
    let www = polar(&t, &w, &w, &w, lift);
    let b = &pww.pow(2).scale(&QuadElem::from_int(9)) - &(&ppw * &www).scale(&QuadElem::from_int(12));
    Ok(BinaryForm::from_mpoly(&b, 4).expect("quartic in u, v"))
}

/// Two coordinate directions completing `p` to a basis.
pub fn default_basis(p: &[QuadElem; 3]) -> Result<[[QuadElem; 3]; 2], TernaryError> {
    let e = |i: usize| -> [QuadElem; 3] {
        std::array::from_fn(|k| if k == i { QuadElem::one() } else { QuadElem::zero() })
    };
    for (i, j) in [(1, 2), (0, 2), (0, 1)] {
        let m = Matrix::from_rows(vec![p.to_vec(), e(i).to_vec(), e(j).to_vec()]);
        if !m.det().is_zero() {
            return Ok([e(i), e(j)]);
        }
    }
    Err(TernaryError::DegenerateBasis)
}

/// Whether `(I³ : J²)` agree projectively.
pub fn same_i3_j2(a: &BinaryForm, b: &BinaryForm) -> Result<bool, TernaryError> {
    let (ia, ja) = (invariant_i(a)?, invariant_j(a)?);
    let (ib, jb) = (invariant_i(b)?, invariant_j(b)?);
    Ok(&ia.pow(3) * &jb.pow(2) == &ib.pow(3) * &ja.pow(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeierstrassClass {
    Harmonic,
    Equianharmonic,
    Generic,
    Singular,
}

impl WeierstrassClass {
    pub fn name(self) -> &'static str {
        match self {
            WeierstrassClass::Harmonic => "Harmonic",
            WeierstrassClass::Equianharmonic => "Equianharmonic",
            WeierstrassClass::Generic => "Generic",
            WeierstrassClass::Singular => "Singular",
        }
    }
}

pub fn weierstrass_cubic(p: &QuadElem, q: &QuadElem) -> MPoly {
    let mut c: [QuadElem; 10] = std::array::from_fn(|_| QuadElem::zero());
    c[monomial_index([0, 2, 1])] = QuadElem::one();
    c[monomial_index([3, 0, 0])] = -QuadElem::one();
    c[monomial_index([1, 0, 2])] = -p;
    c[monomial_index([0, 0, 3])] = -q;
    cubic_from_coeffs(&c)
}

/// Classifies `y²z = x³ + pxz² + qz³` through its branch quartic at the flex
/// `(0, 1, 0)`.
pub fn weierstrass_classify(p: &QuadElem, q: &QuadElem) -> Result<WeierstrassClass, TernaryError> {
    let f = weierstrass_cubic(p, q);
    let o = QuadElem::zero;
    let l = QuadElem::one;
    let b = salmon_branch_quartic(&f, &[o(), l(), o()], &[[l(), o(), o()], [o(), o(), l()]])?;
    Ok(match classify_quartic(&b)? {
        QuarticClass::NullCone | QuarticClass::Singular => WeierstrassClass::Singular,
        QuarticClass::Harmonic => WeierstrassClass::Harmonic,
        QuarticClass::Equianharmonic => WeierstrassClass::Equianharmonic,
        QuarticClass::Generic => WeierstrassClass::Generic,
    })
}

/// `(s³(1−s³)³ : 8(s³ + 1/8)³)`.
pub fn hesse_j_closed(s: &QuadElem) -> (QuadElem, QuadElem) {
    let s3 = s.pow(3);
    let num = &s3 * &(&QuadElem::one() - &s3).pow(3);
    let den = &(&s3 + &QuadElem::from_frac(1, 8)).pow(3) * &QuadElem::from_int(8);
    (num, den)
}

/// `(I³ : D)` of the branch quartic of the Hesse member at `(1, −1, 0)`.
pub fn hesse_branch_j(s: &QuadElem) -> Result<(QuadElem, QuadElem), TernaryError> {
    let f = hesse_member(&HesseParam::Finite(s.clone()));
    let p = [QuadElem::one(), -QuadElem::one(), QuadElem::zero()];
    let b = salmon_branch_quartic(&f, &p, &default_basis(&p)?)?;
    Ok(j_ratio(&b)?)
}

/// `I` and `J` of the Hesse branch quartic at `(1, −1, 0)` as polynomials in
/// `s`, by interpolation on `s = 0..=12`.
pub fn hesse_branch_invariant_polys() -> Result<(UniPoly, UniPoly), TernaryError> {
    let mut pi = vec![];
    let mut pj = vec![];
    for k in 0..=12 {
        let s = QuadElem::from_int(k);
        let f = hesse_member(&HesseParam::Finite(s.clone()));
        let p = [QuadElem::one(), -QuadElem::one(), QuadElem::zero()];
        let b = salmon_branch_quartic(&f, &p, &default_basis(&p)?)?;
        pi.push((s.clone(), invariant_i(&b)?));
        pj.push((s, invariant_j(&b)?));
    }
    Ok((UniPoly::interpolate(&pi), UniPoly::interpolate(&pj)))
}

/// At a root of `T(s) = 8s⁶+20s³−1`, reduced modulo `T`: whether the branch
/// pair `(I³ : D)` and the closed pair `(s³(1−s³)³ : 8(s³+1/8)³)` are both
/// `(1 : 1)`.
pub fn harmonic_j_check() -> Result<(bool, bool), TernaryError> {
    let (bi, bj) = hesse_branch_invariant_polys()?;
    let (_, t, _) = hesse_invariant_polys();
    let modt = |p: &UniPoly| p.divrem(&t).expect("nonzero modulus").1;
    let i3 = modt(&bi.pow(3));
    let d = modt(&(&bi.pow(3) - &bj.pow(2).scale(&QuadElem::from_int(27))));
    let branch = !i3.is_zero() && i3 == d;
    let s3 = UniPoly::monomial(QuadElem::one(), 3);
    let num = modt(&(&s3 * &(&UniPoly::one() - &s3).pow(3)));
    let den = modt(&(&s3 + &UniPoly::constant(QuadElem::from_frac(1, 8))).pow(3).scale(&QuadElem::from_int(8)));
    let closed = !num.is_zero() && num == den;
    Ok((branch, closed))
}

/// Constant `c` with `a = c·b`, if any.
pub fn poly_ratio(a: &UniPoly, b: &UniPoly) -> Option<QuadElem> {
    if b.is_zero() || a.degree() != b.degree() {
        return None;
    }
    let c = &a.lead() / &b.lead();
    (b.scale(&c) == *a).then_some(c)
}

/// Third intersection of the line `a ∨ b` with the cubic.
pub fn chord_third_point(f: &MPoly, a: &[QuadElem; 3], b: &[QuadElem; 3]) -> Option<[QuadElem; 3]> {
    let t = third_derivatives(&cubic_coeffs(f).ok()?);
    let id = |x: &QuadElem| x.clone();
    let aab = polar(&t, a, a, b, id);
    let abb = polar(&t, a, b, b, id);
    if aab.is_zero() {
        return None;
    }
    let l = -(&abb / &aab);
    Some(std::array::from_fn(|k| &(&l * &a[k]) + &b[k]))
}

/// Third intersection of the tangent line at `a` with the cubic.
pub fn tangent_third_point(f: &MPoly, a: &[QuadElem; 3]) -> Option<[QuadElem; 3]> {
    let g: Vec<QuadElem> = (0..3).map(|i| f.partial(i).eval(a)).collect();
    let dir = [&g[1] * &QuadElem::from_int(-1), g[0].clone(), QuadElem::zero()];
    let dir = if dir.iter().all(|x| x.is_zero()) { [QuadElem::zero(), -&g[2], g[1].clone()] } else { dir };
    let t = third_derivatives(&cubic_coeffs(f).ok()?);
    let id = |x: &QuadElem| x.clone();
    let aww = polar(&t, a, &dir, &dir, id);
    let www = polar(&t, &dir, &dir, &dir, id);
    if aww.is_zero() {
        return None;
    }
    let l = -(&www / &(&aww * &QuadElem::from_int(3)));
    Some(std::array::from_fn(|k| &(&l * &a[k]) + &dir[k]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::discriminant4;
    use proptest::prelude::*;

    fn q(n: i64) -> QuadElem {
        QuadElem::from_int(n)
    }

    fn fr(n: i64, d: i64) -> QuadElem {
        QuadElem::from_frac(n, d)
    }

    fn hesse(s: QuadElem) -> MPoly {
        hesse_member(&HesseParam::Finite(s))
    }

    #[test]
    fn aronhold_examples() {
        assert!(aronhold(&parse_cubic("x^3 + y^3 + z^3").unwrap()).unwrap().is_zero());
        assert!(aronhold(&parse_cubic("y^2*z - x^3").unwrap()).unwrap().is_zero());
        assert_eq!(aronhold(&hesse(q(-1))).unwrap(), q(2592));
        let pfs = aronhold_pfaffians(
            &cubic_coeffs(&parse_cubic("x^3 + 2*y^3 - z^3 + 3*x*y*z + x^2*y - 5*y*z^2").unwrap()).unwrap(),
        );
        assert_eq!(pfs[0], q(2137));
        assert!(aronhold(&parse_cubic("x^2*y").unwrap()).unwrap().is_zero());
        assert_eq!(aronhold(&parse_cubic("x^2 + y").unwrap_or_else(|_| MPoly::var(3, 0))), Err(TernaryError::NotCubic));
    }

    #[test]
    fn aronhold_on_the_pencil_symbolically() {
        // coefficients as polynomials in s
        let s = MPoly::var(1, 0);
        let one = MPoly::one().extend(1);
        let zero = MPoly::zero_in(1);
        let mut c: [MPoly; 10] = std::array::from_fn(|_| zero.clone());
        for e in [[3, 0, 0], [0, 3, 0], [0, 0, 3]] {
            c[monomial_index(e)] = one.clone();
        }
        c[monomial_index([1, 1, 1])] = s.scale(&q(6));
        let a = aronhold_from_pfaffians(&aronhold_pfaffians(&c)).unwrap();
        let expected = &(&s.pow(4) - &s).scale(&q(1296)) + &zero;
        assert_eq!(a, expected);
    }

    #[test]
    fn hesse_closed_forms() {
        let (s0, _, _) = hesse_invariants(&HesseParam::Finite(q(0))).unwrap();
        assert!(s0.is_zero());
        let (_, _, d) = hesse_invariants(&HesseParam::Finite(fr(-1, 2))).unwrap();
        assert!(d.is_zero());
        assert_eq!(hesse_invariants(&HesseParam::Infinity), Err(TernaryError::InfinityParam));
        let (_, t, disc) = hesse_invariant_polys();
        assert_eq!(t, UniPoly::from_ints(&[-1, 0, 0, 20, 0, 0, 8]));
        assert_eq!(disc, UniPoly::from_ints(&[1, 0, 0, 8]).pow(3));
    }

    #[test]
    fn branch_invariants_match_closed_forms() {
        let (bi, bj) = hesse_branch_invariant_polys().unwrap();
        let (s, t, _) = hesse_invariant_polys();
        assert_eq!(poly_ratio(&bi, &s), Some(q(108)));
        assert_eq!(poly_ratio(&bj, &t), Some(q(-27)));
    }

    #[test]
    fn hessians() {
        let h = hessian_cubic(&parse_cubic("x^3 + y^3 + z^3").unwrap()).unwrap();
        assert_eq!(h, parse_cubic("216*x*y*z").unwrap());
        assert!(hessian_cubic(&parse_cubic("x^3").unwrap()).unwrap().is_zero());
        assert_eq!(hesse_hessian_param(&HesseParam::Finite(q(0))).unwrap(), HesseParam::Infinity);
        assert_eq!(hesse_hessian_param(&HesseParam::Infinity).unwrap(), HesseParam::Infinity);
        // s' = −(1 + 2s³)/(6s²)
        assert_eq!(hesse_hessian_param(&HesseParam::Finite(q(1))).unwrap(), HesseParam::Finite(fr(-1, 2)));
    }

    #[test]
    fn salmon_examples() {
        let p = [q(1), q(-1), q(0)];
        let basis = default_basis(&p).unwrap();
        let b0 = salmon_branch_quartic(&hesse(q(0)), &p, &basis).unwrap();
        assert!(invariant_i(&b0).unwrap().is_zero());
        for s in [q(2), fr(1, 3), q(-5)] {
            let b = salmon_branch_quartic(&hesse(s.clone()), &p, &basis).unwrap();
            let two_s = (&s * &q(2)).to_string();
            let six_s = (&s * &q(6)).to_string();
            let printed = BinaryForm::parse(&format!("(x + {two_s}*y)*(x^3 - {six_s}*x^2*y - 4*y^3)")).unwrap();
            assert!(same_i3_j2(&b, &printed).unwrap());
        }
        assert_eq!(
            salmon_branch_quartic(&hesse(q(1)), &[q(1), q(1), q(1)], &basis),
            Err(TernaryError::PointNotOnCurve)
        );
        assert_eq!(
            salmon_branch_quartic(&hesse(q(1)), &p, &[p.clone(), basis[0].clone()]),
            Err(TernaryError::DegenerateBasis)
        );
    }

    #[test]
    fn weierstrass() {
        let c = |p: i64, qq: i64| weierstrass_classify(&q(p), &q(qq)).unwrap();
        assert_eq!(c(-1, 0), WeierstrassClass::Harmonic);
        assert_eq!(c(1, 0), WeierstrassClass::Harmonic);
        assert_eq!(c(0, 1), WeierstrassClass::Equianharmonic);
        assert_eq!(c(-3, 2), WeierstrassClass::Singular);
        assert_eq!(c(0, 0), WeierstrassClass::Singular);
        assert_eq!(c(1, 1), WeierstrassClass::Generic);
    }

    #[test]
    fn j_correspondence() {
        let mut consts = vec![];
        for s in [q(2), q(3), fr(1, 2), fr(-2, 3), q(-4)] {
            let (i3, d) = hesse_branch_j(&s).unwrap();
            let (n, m) = hesse_j_closed(&s);
            consts.push(&(&i3 * &m) / &(&d * &n));
        }
        assert!(consts.iter().all(|c| *c == consts[0]));
        assert_eq!(consts[0], q(1));
        let (i3, d) = j_ratio(&BinaryForm::parse("x^4 + y^4").unwrap()).unwrap();
        assert_eq!((i3, d), (q(1), q(1)));
        assert_eq!(harmonic_j_check().unwrap(), (true, true));
    }

    fn cubic_strategy() -> impl Strategy<Value = [QuadElem; 10]> {
        prop::array::uniform10(-3i64..=3).prop_map(|a| a.map(q))
    }

    fn unimodular() -> impl Strategy<Value = Matrix> {
        // product of elementary matrices
        prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..6).prop_map(|ops| {
            let mut m = Matrix::identity(3);
            for (i, j, c) in ops {
                if i != j {
                    let mut e = Matrix::identity(3);
                    e.set(i, j, q(c));
                    m = &m * &e;
                }
            }
            m
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(30))]

        #[test]
        fn aronhold_weight_four(c in cubic_strategy(), m in unimodular(), k in 1i64..=3) {
            let f = cubic_from_coeffs(&c);
            let a = aronhold(&f).unwrap();
            let g = f.linear_substitution(&m).unwrap();
            prop_assert_eq!(aronhold(&g).unwrap(), a.clone());
            // diag(k, 1, 1) has det k
            let d = Matrix::from_rows(vec![vec![q(k), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]);
            let g = f.linear_substitution(&d).unwrap();
            prop_assert_eq!(aronhold(&g).unwrap(), &a * &q(k).pow(4));
        }

        #[test]
        fn hessian_stays_in_pencil(n in -20i64..=20, d in 1i64..=6) {
            let s = fr(n, d);
            let h = hessian_cubic(&hesse(s.clone())).unwrap();
            prop_assert!(pencil_coords(&h).is_some());
            if !s.is_zero() {
                let expected = -(&(&QuadElem::one() + &(&s.pow(3) * &q(2))) / &(&s.pow(2) * &q(6)));
                prop_assert_eq!(hesse_hessian_param(&HesseParam::Finite(s)).unwrap(), HesseParam::Finite(expected));
            }
        }

        #[test]
        fn salmon_is_point_free(a in -6i64..=6, b in -6i64..=6) {
            // s chosen so that (a, b, 1) lies on the member
            prop_assume!(a != 0 && b != 0);
            let p0 = [q(a), q(b), q(1)];
            let s = -(&(q(a).pow(3) + q(b).pow(3) + q(1)) / &q(6 * a * b));
            let (_, _, disc) = hesse_invariants(&HesseParam::Finite(s.clone())).unwrap();
            prop_assume!(!disc.is_zero());
            let f = hesse(s);
            let flexes = [[q(1), q(-1), q(0)], [q(1), q(0), q(-1)], [q(0), q(1), q(-1)]];
            let mut pts = vec![p0.clone(), flexes[0].clone()];
            pts.extend(flexes.iter().filter_map(|e| chord_third_point(&f, &p0, e)));
            pts.extend(tangent_third_point(&f, &p0));
            let reference = salmon_branch_quartic(&f, &flexes[0], &default_basis(&flexes[0]).unwrap()).unwrap();
            prop_assert!(!discriminant4(&reference).unwrap().is_zero());
            for p in &pts {
                prop_assert!(f.eval(p).is_zero());
                if p.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let b = salmon_branch_quartic(&f, p, &default_basis(p).unwrap()).unwrap();
                prop_assert!(!discriminant4(&b).unwrap().is_zero());
                prop_assert!(same_i3_j2(&b, &reference).unwrap());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn principal_pfaffian_pattern(c in cubic_strategy()) {
            prop_assert!(aronhold_from_pfaffians(&aronhold_pfaffians(&c)).is_ok());
        }
    }
}
