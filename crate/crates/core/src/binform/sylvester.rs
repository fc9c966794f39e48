use num_traits::{One, Zero};

use super::{catalecticant, invariant_j, need_degree, BinformError};
use crate::exactnum::{squarefree_part, QuadElem};
use crate::linalg::Matrix;
use crate::mpoly::BinaryForm;

/// Outcome of writing a harmonic quartic as a sum of two fourth powers.
#[derive(Debug, Clone, PartialEq)]
pub enum Sylvester {
    /// `f = λ₁ℓ₁⁴ + λ₂ℓ₂⁴`.
    Sum { forms: [BinaryForm; 2], coeffs: [QuadElem; 2] },
    /// `f = λℓ⁴` (catalecticant of rank one).
    PerfectPower { form: BinaryForm, coeff: QuadElem },
    /// The apolar quadratic has a double root; `f` lies in the orbit of `x³y`.
    TangentCase,
}

impl Sylvester {
    /// Re-expands the decomposition; `None` for the tangent case.
    pub fn expand(&self) -> Option<BinaryForm> {
        match self {
            Sylvester::Sum { forms, coeffs } => {
                Some(&forms[0].pow(4).scale(&coeffs[0]) + &forms[1].pow(4).scale(&coeffs[1]))
            }
            Sylvester::PerfectPower { form, coeff } => Some(form.pow(4).scale(coeff)),
            Sylvester::TangentCase => None,
        }
    }
}

fn linear(r: QuadElem, s: QuadElem) -> BinaryForm {
    BinaryForm::from_raw(vec![r, s])
}

fn all_rational(f: &BinaryForm) -> bool {
    f.coeffs().iter().all(QuadElem::is_rational)
}

fn sqrt_disc(disc: &QuadElem, f: &BinaryForm) -> Result<QuadElem, BinformError> {
    if let Ok(r) = disc.sqrt_in_field() {
        return Ok(r);
    }
    let field = f.coeffs().iter().find(|c| !c.is_rational()).map_or(1, QuadElem::d);
    if let Ok(r) = disc.sqrt_in(field) {
        return Ok(r);
    }
    if all_rational(f) && disc.is_rational() {
        let d = squarefree_part(&disc.to_rational().expect("rational"));
        if d != 0 {
            if let Ok(r) = disc.sqrt_in(d) {
                return Ok(r);
            }
        }
    }
    Err(BinformError::FieldExtensionNeeded(disc.to_string()))
}

pub fn sylvester_decompose(f: &BinaryForm) -> Result<Sylvester, BinformError> {
    need_degree(f, 4)?;
    if f.is_zero() {
        return Err(BinformError::ZeroForm);
    }
    if !invariant_j(f)?.is_zero() {
        return Err(BinformError::NotHarmonic);
    }
    let cat = catalecticant(f)?;
    if cat.rank() == 1 {
        let a = f.coeffs();
        // a_i = λ r^i up to the choice of the nonzero end
        let (form, coeff) = if !a[0].is_zero() {
            (linear(QuadElem::one(), &a[1] / &a[0]), a[0].clone())
        } else {
            (linear(QuadElem::zero(), QuadElem::one()), a[4].clone())
        };
        return Ok(Sylvester::PerfectPower { form, coeff });
    }
    let k = cat.kernel();
    let [c0, c1, c2] = [&k[0][0], &k[0][1], &k[0][2]];
    let disc = c1 * c1 - QuadElem::from_int(4) * c0 * c2;
    if disc.is_zero() {
        return Ok(Sylvester::TangentCase);
    }
    // ℓ = αx + βy is killed by the apolar operator iff c₀α² + c₁αβ + c₂β² = 0
    let forms = if c0.is_zero() {
        [linear(QuadElem::one(), QuadElem::zero()), linear(-(c2 / c1), QuadElem::one())]
    } else {
        let s = sqrt_disc(&disc, f)?;
        let two_c0 = c0 * QuadElem::from_int(2);
        [linear((-c1 + &s) / &two_c0, QuadElem::one()), linear((-c1 - &s) / &two_c0, QuadElem::one())]
    };
    let p: Vec<Vec<QuadElem>> = forms.iter().map(|l| l.pow(4).raw()).collect();
    let m = Matrix::from_rows((0..5).map(|i| vec![p[0][i].clone(), p[1][i].clone()]).collect());
    let lam = m.solve(&f.raw()).expect("apolar roots span f");
    Ok(Sylvester::Sum { forms, coeffs: [lam[0].clone(), lam[1].clone()] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bf(s: &str) -> BinaryForm {
        BinaryForm::parse(s).unwrap()
    }

    #[test]
    fn ceg_quartic() {
        let f = bf("15*x^4 - 37*x^3*y + 30*x^2*y^2 - 8*x*y^3");
        let s = sylvester_decompose(&f).unwrap();
        assert_eq!(s.expand().unwrap(), f);
        let Sylvester::Sum { forms, coeffs } = &s else { panic!("expected a sum") };
        let expected = [bf("-5/2*x + 1/2*i*x + 2*y"), bf("-5/2*x - 1/2*i*x + 2*y")];
        for (l, c) in forms.iter().zip(coeffs) {
            let k = expected.iter().position(|e| e.is_proportional(l)).expect("matches a printed form");
            // ℓ_printed = 2ℓ, so λ_printed = λ/16 = ±i/4
            let printed = c / QuadElem::from_int(16);
            let sign = if k == 0 { 1 } else { -1 };
            assert_eq!(printed, QuadElem::i() * QuadElem::from_frac(sign, 4));
        }
    }

    #[test]
    fn sum_of_axes() {
        let s = sylvester_decompose(&bf("x^4 + y^4")).unwrap();
        let Sylvester::Sum { forms, coeffs } = &s else { panic!("expected a sum") };
        let mut got: Vec<(BinaryForm, QuadElem)> = forms.iter().cloned().zip(coeffs.iter().cloned()).collect();
        got.sort_by_key(|(l, _)| l.coeff(0).is_zero());
        assert_eq!(got[0], (bf("x"), QuadElem::one()));
        assert_eq!(got[1], (bf("y"), QuadElem::one()));
    }

    #[test]
    fn special_orbits() {
        assert_eq!(sylvester_decompose(&bf("x^3*y")).unwrap(), Sylvester::TangentCase);
        let p = sylvester_decompose(&bf("3*(x - 2*y)^4")).unwrap();
        assert!(matches!(p, Sylvester::PerfectPower { .. }));
        assert_eq!(p.expand().unwrap(), bf("3*(x - 2*y)^4"));
        assert_eq!(sylvester_decompose(&bf("x^4 + x*y^3")), Err(BinformError::NotHarmonic));
    }

    #[test]
    fn adjoins_a_square_root_over_q() {
        // (x + √2y)⁴ + (x − √2y)⁴ = 2(x⁴ + 12x²y² + 4y⁴)
        let f = bf("x^4 + 12*x^2*y^2 + 4*y^4");
        let s = sylvester_decompose(&f).unwrap();
        assert_eq!(s.expand().unwrap(), f);
        let Sylvester::Sum { forms, .. } = &s else { panic!("expected a sum") };
        assert_eq!(forms[0].coeff(0).d(), 2);
        let g = bf("x^4 - 6*x^2*y^2 + y^4");
        assert_eq!(sylvester_decompose(&g).unwrap().expand().unwrap(), g);
    }

    #[test]
    fn refuses_towers() {
        let f = bf("sqrt(3)*(x^4 + 12*x^2*y^2 + 4*y^4)");
        assert!(matches!(sylvester_decompose(&f), Err(BinformError::FieldExtensionNeeded(_))));
    }
}
