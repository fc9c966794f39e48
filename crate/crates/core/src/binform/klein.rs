use num_traits::Zero;

use super::transvectant::{covariant_t, transvectant, vanishes};
use super::BinformError;
use crate::exactnum::{rational_sqrt, QuadElem, Rational};
use crate::linalg::Matrix;
use crate::mpoly::BinaryForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KleinFamily {
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl KleinFamily {
    pub const ALL: [KleinFamily; 3] = [KleinFamily::Tetrahedral, KleinFamily::Octahedral, KleinFamily::Icosahedral];

    pub fn name(self) -> &'static str {
        match self {
            KleinFamily::Tetrahedral => "tetrahedral",
            KleinFamily::Octahedral => "octahedral",
            KleinFamily::Icosahedral => "icosahedral",
        }
    }
}

/// Normalizing scalars (`name`, `c` with `normalized = c·raw`) and the
/// outcome of the polynomial identity.
#[derive(Debug, Clone, PartialEq)]
pub struct KleinCheck {
    pub family: KleinFamily,
    pub relation: &'static str,
    pub scalars: Vec<(&'static str, QuadElem)>,
    pub verified: bool,
}

fn form(s: &str) -> BinaryForm {
    BinaryForm::parse(s).expect("built-in form")
}

/// `Φ = x⁴ + 2√−3x²y² + y⁴`.
pub fn tetrahedral_phi() -> BinaryForm {
    form("x^4 + 2*sqrt(-3)*x^2*y^2 + y^4")
}

/// `Ψ = x⁴ − 2√−3x²y² + y⁴`.
pub fn tetrahedral_psi() -> BinaryForm {
    form("x^4 - 2*sqrt(-3)*x^2*y^2 + y^4")
}

/// `t = x⁵y − xy⁵`.
pub fn octahedral_t() -> BinaryForm {
    form("x^5*y - x*y^5")
}

/// `f = x¹¹y + 11x⁶y⁶ − xy¹¹`.
pub fn icosahedral_f() -> BinaryForm {
    form("x^11*y + 11*x^6*y^6 - x*y^11")
}

fn ratio(target: &BinaryForm, raw: &BinaryForm, what: &'static str) -> Result<QuadElem, BinformError> {
    target.ratio_to(raw).filter(|c| !c.is_zero()).ok_or(BinformError::NoScalarFound(what))
}

fn tetrahedral() -> Result<KleinCheck, BinformError> {
    let phi = tetrahedral_phi();
    let psi = tetrahedral_psi();
    let t = form("x*y*(x^4 - y^4)");
    let c_psi = ratio(&psi, &phi.hessian(), "Psi")?;
    let c_t = ratio(&t, &covariant_t(&phi)?, "t")?;
    let lhs = &(&t.pow(2).scale(&(QuadElem::sqrt_of(-3) * QuadElem::from_int(12))) - &phi.pow(3)) + &psi.pow(3);
    Ok(KleinCheck {
        family: KleinFamily::Tetrahedral,
        relation: "12*sqrt(-3)*t^2 - Phi^3 + Psi^3 = 0",
        scalars: vec![("Psi/Hess(Phi)", c_psi), ("t/T(Phi)", c_t)],
        verified: vanishes(&lhs),
    })
}

fn octahedral() -> Result<KleinCheck, BinformError> {
    let t = octahedral_t();
    let w = form("x^8 + 14*x^4*y^4 + y^8");
    let xi = form("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
    let c_w = ratio(&w, &t.hessian(), "W")?;
    let c_xi = ratio(&xi, &covariant_t(&t)?, "Xi")?;
    let lhs = &(&t.pow(4).scale(&QuadElem::from_int(108)) - &w.pow(3)) + &xi.pow(2);
    Ok(KleinCheck {
        family: KleinFamily::Octahedral,
        relation: "108*t^4 - W^3 + Xi^2 = 0",
        scalars: vec![("W/Hess(t)", c_w), ("Xi/T(t)", c_xi)],
        verified: vanishes(&lhs),
    })
}

fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let neg = q < &Rational::zero();
    let a = if neg { -q.clone() } else { q.clone() };
    let n = a.numer().cbrt();
    let d = a.denom().cbrt();
    let r = Rational::new(n, d);
    (&r * &r * &r == a).then(|| if neg { -r } else { r })
}

fn icosahedral() -> Result<KleinCheck, BinformError> {
    let f = icosahedral_f();
    let h = f.hessian();
    let t = covariant_t(&f)?;
    // α·T² + β·H³ = 1728 f⁵ as a linear system in (α, β)
    let (t2, h3, f5) = (t.pow(2).raw(), h.pow(3).raw(), f.pow(5).scale(&QuadElem::from_int(1728)).raw());
    let m = Matrix::from_rows(t2.iter().zip(&h3).map(|(a, b)| vec![a.clone(), b.clone()]).collect());
    let sol = m.solve(&f5).ok_or(BinformError::NoScalarFound("alpha, beta"))?;
    let (alpha, beta) = (sol[0].to_rational(), sol[1].to_rational());
    let (Some(alpha), Some(beta)) = (alpha, beta) else {
        return Err(BinformError::NoScalarFound("alpha, beta"));
    };
    let c_t = rational_sqrt(&alpha).ok_or(BinformError::NoScalarFound("T"))?;
    let c_h = rational_cbrt(&beta).ok_or(BinformError::NoScalarFound("H"))?;
    let (c_t, c_h) = (QuadElem::rational(c_t), QuadElem::rational(c_h));
    let hn = h.scale(&c_h);
    let tn = t.scale(&c_t);
    let lhs = &(&tn.pow(2) + &hn.pow(3)) - &f.pow(5).scale(&QuadElem::from_int(1728));
    Ok(KleinCheck {
        family: KleinFamily::Icosahedral,
        relation: "T^2 + H^3 - 1728*f^5 = 0",
        scalars: vec![("H/Hess(f)", c_h), ("T/T_raw(f)", c_t)],
        verified: vanishes(&lhs),
    })
}

pub fn klein_relation_check(family: KleinFamily) -> Result<KleinCheck, BinformError> {
    match family {
        KleinFamily::Tetrahedral => tetrahedral(),
        KleinFamily::Octahedral => octahedral(),
        KleinFamily::Icosahedral => icosahedral(),
    }
}

/// Whether `(f,f)₄` vanishes identically.
pub fn klein_regularity_check(f: &BinaryForm) -> Result<bool, BinformError> {
    if ![4, 6, 12].contains(&f.degree()) {
        return Err(BinformError::WrongDegree { expected: 4, got: f.degree() });
    }
    Ok(vanishes(&transvectant(f, f, 4)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        for fam in KleinFamily::ALL {
            let c = klein_relation_check(fam).unwrap();
            assert!(c.verified, "{}", fam.name());
        }
    }

    #[test]
    fn derived_scalars() {
        let c = klein_relation_check(KleinFamily::Octahedral).unwrap();
        assert_eq!(c.scalars[0].1, QuadElem::from_frac(-1, 25));
        let c = klein_relation_check(KleinFamily::Icosahedral).unwrap();
        assert_eq!(c.scalars[0].1, QuadElem::from_frac(1, 121));
        // T enters squared, so only its absolute value is determined
        assert_eq!(c.scalars[1].1.pow(2), QuadElem::from_frac(1, 2420 * 2420));
        let c = klein_relation_check(KleinFamily::Tetrahedral).unwrap();
        // Hess(Φ) = 48√−3·Ψ
        assert_eq!(c.scalars[0].1, (QuadElem::sqrt_of(-3) * QuadElem::from_int(48)).inv().unwrap());
    }

    #[test]
    fn regular_polyhedra() {
        assert!(klein_regularity_check(&tetrahedral_psi()).unwrap());
        assert!(klein_regularity_check(&octahedral_t()).unwrap());
        assert!(klein_regularity_check(&icosahedral_f()).unwrap());
        assert!(!klein_regularity_check(&form("x^4 - y^4")).unwrap());
        assert!(klein_regularity_check(&form("x^5")).is_err());
    }
}
