use num_traits::Zero;

use super::BinformError;
use crate::exactnum::{binomial, factorial, QuadElem, Rational};
use crate::mpoly::BinaryForm;

fn partial(f: &BinaryForm, nx: usize, ny: usize) -> BinaryForm {
    let mut g = f.clone();
    for _ in 0..nx {
        g = g.dx();
    }
    for _ in 0..ny {
        g = g.dy();
    }
    g
}

/// `(f,g)_n`, scaled by `(d−n)!(e−n)!/(d!e!)` so that
/// `(u^d, v^e)_n = u^{d−n} v^{e−n} (u₀v₁ − u₁v₀)^n`.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, n: usize) -> Result<BinaryForm, BinformError> {
    let (d, e) = (f.degree(), g.degree());
    if n > d || n > e {
        return Err(BinformError::OrderTooHigh { n });
    }
    let mut acc = BinaryForm::zero_of_degree(d + e - 2 * n);
    for i in 0..=n {
        let term = &partial(f, n - i, i) * &partial(g, i, n - i);
        let c = QuadElem::rational(Rational::from_integer(binomial(n as u64, i as u64)));
        let term = term.scale(&if i % 2 == 0 { c } else { -c });
        acc = &acc + &term;
    }
    let num = factorial((d - n) as u64) * factorial((e - n) as u64);
    let den = factorial(d as u64) * factorial(e as u64);
    Ok(acc.scale(&QuadElem::rational(Rational::new(num, den))))
}

/// `T = f_x H_y − f_y H_x` with `H` the raw Hessian determinant.
pub fn covariant_t(f: &BinaryForm) -> Result<BinaryForm, BinformError> {
    if f.degree() < 3 {
        return Err(BinformError::WrongDegree { expected: 3, got: f.degree() });
    }
    let h = f.hessian();
    Ok(&(&f.dx() * &h.dy()) - &(&f.dy() * &h.dx()))
}

pub(crate) fn vanishes(f: &BinaryForm) -> bool {
    f.coeffs().iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::{invariant_i, invariant_j};
    use crate::linalg::Matrix;
    use proptest::prelude::*;

    fn bf(s: &str) -> BinaryForm {
        BinaryForm::parse(s).unwrap()
    }

    #[test]
    fn powers_of_linear_forms() {
        let t = transvectant(&bf("x^4"), &bf("y^4"), 4).unwrap();
        assert_eq!(t, BinaryForm::from_ints(&[1]));
        // (u³, v²)₁ with u = x + 2y, v = 3x − y: u²v(u∧v), u∧v = 1·(−1) − 2·3 = −7
        let u = bf("x + 2*y");
        let v = bf("3*x - y");
        let lhs = transvectant(&u.pow(3), &v.pow(2), 1).unwrap();
        let rhs = (&u.pow(2) * &v).scale(&QuadElem::from_int(-7));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn order_too_high() {
        assert_eq!(transvectant(&bf("x^2"), &bf("y^4"), 3), Err(BinformError::OrderTooHigh { n: 3 }));
    }

    #[test]
    fn t_covariant_examples() {
        assert!(vanishes(&covariant_t(&bf("x^2*y^2")).unwrap()));
        let phi = bf("x^4 + 2*sqrt(-3)*x^2*y^2 + y^4");
        assert!(covariant_t(&phi).unwrap().is_proportional(&bf("x*y*(x^4 - y^4)")));
        let xi = bf("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
        assert!(covariant_t(&bf("x^5*y - x*y^5")).unwrap().is_proportional(&xi));
    }

    fn quartic() -> impl Strategy<Value = BinaryForm> {
        prop::collection::vec(-6i64..=6, 5).prop_map(|c| BinaryForm::from_raw_ints(&c))
    }

    fn unimodular() -> impl Strategy<Value = Matrix> {
        (-3i64..=3, -3i64..=3, 0usize..2).prop_map(|(a, b, swap)| {
            // products of elementary unimodular matrices
            let m = &Matrix::from_ints(&[&[1, a], &[0, 1]]) * &Matrix::from_ints(&[&[1, 0], &[b, 1]]);
            if swap == 1 {
                &m * &Matrix::from_ints(&[&[0, -1], &[1, 0]])
            } else {
                m
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn quartic_invariants_as_transvectants(f in quartic()) {
            let ff4 = transvectant(&f, &f, 4).unwrap();
            prop_assert_eq!(ff4.coeff(0).clone(), invariant_i(&f).unwrap() * QuadElem::from_int(2));
            let h = transvectant(&f, &f, 2).unwrap();
            let fh4 = transvectant(&f, &h, 4).unwrap();
            prop_assert_eq!(fh4.coeff(0).clone(), invariant_j(&f).unwrap() * QuadElem::from_int(6));
        }

        #[test]
        fn second_transvectant_is_the_hessian(f in quartic()) {
            // (f,f)₂ = 2((d−2)!/d!)² H
            let lhs = transvectant(&f, &f, 2).unwrap();
            let rhs = f.hessian().scale(&QuadElem::from_frac(2, 144));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn invariants_are_sl2_invariant(f in quartic(), m in unimodular()) {
            let g = f.subst(&m);
            prop_assert_eq!(invariant_i(&g).unwrap(), invariant_i(&f).unwrap());
            prop_assert_eq!(invariant_j(&g).unwrap(), invariant_j(&f).unwrap());
        }

        #[test]
        fn t_is_covariant(f in quartic(), m in unimodular()) {
            // det M = 1, so the weight plays no role on SL(2)
            prop_assert_eq!(covariant_t(&f.subst(&m)).unwrap(), covariant_t(&f).unwrap().subst(&m));
        }
    }
}
