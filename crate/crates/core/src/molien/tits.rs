use num_traits::Zero;

use crate::exactnum::{QuadElem, Rational};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq)]
pub struct TitsForm {
    /// `2I − A` for the adjacency matrix `A` of the star graph.
    pub matrix: Vec<Vec<i64>>,
    pub positive_definite: bool,
}

/// Symmetrized Euler form of the star with arms of `p−1, q−1, r−1` vertices
/// around a common center (vertex 0). Definiteness from the leading
/// principal minors.
pub fn tits_form_star(p: usize, q: usize, r: usize) -> TitsForm {
    assert!(p >= 1 && q >= 1 && r >= 1, "arm parameters start at 1");
    let n = p + q + r - 2;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut next = 1;
    for arm in [p, q, r] {
        let mut prev = 0;
        for _ in 1..arm {
            m[prev][next] = -1;
            m[next][prev] = -1;
            prev = next;
            next += 1;
        }
    }
    let positive_definite = (1..=n).all(|k| {
        let rows: Vec<Vec<QuadElem>> =
            m[..k].iter().map(|row| row[..k].iter().map(|&v| QuadElem::from_int(v)).collect()).collect();
        let det = Matrix::from_rows(rows).det();
        det.to_rational().is_some_and(|d| d > Rational::zero())
    });
    let sum = Rational::new(1.into(), (p as i64).into())
        + Rational::new(1.into(), (q as i64).into())
        + Rational::new(1.into(), (r as i64).into());
    debug_assert_eq!(positive_definite, sum > Rational::from_integer(1.into()));
    TitsForm { matrix: m, positive_definite }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ade_examples() {
        let e8 = tits_form_star(2, 3, 5);
        assert!(e8.positive_definite);
        assert_eq!(e8.matrix.len(), 8);
        assert!(!tits_form_star(2, 3, 6).positive_definite);
        for n in 1..=9 {
            assert!(tits_form_star(1, n, n).positive_definite);
        }
        assert!(!tits_form_star(3, 3, 3).positive_definite);
        assert!(!tits_form_star(2, 4, 4).positive_definite);
    }

    #[test]
    fn definiteness_matches_angle_sum() {
        for p in 1..=9i64 {
            for q in 1..=9i64 {
                for r in 1..=9i64 {
                    let sum = Rational::new(1.into(), p.into())
                        + Rational::new(1.into(), q.into())
                        + Rational::new(1.into(), r.into());
                    let pd = tits_form_star(p as usize, q as usize, r as usize).positive_definite;
                    assert_eq!(pd, sum > Rational::from_integer(1.into()), "({p},{q},{r})");
                }
            }
        }
    }
}
