use super::{class_data_from_group, ClassData, MatrixGroupSpec, MolienError, DEFAULT_CAP};
use crate::exactnum::QuadElem;
use crate::linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    BinaryTetrahedral,
    TetrahedralSo3,
    BinaryOctahedral,
    BinaryIcosahedral,
    Cyclic(usize),
    BinaryDihedral(usize),
}

impl Preset {
    pub fn parse(name: &str) -> Result<Self, MolienError> {
        let unknown = || MolienError::UnknownPreset(name.to_string());
        let name = name.trim();
        let with_arg = |prefix: &str| -> Option<Result<usize, MolienError>> {
            let rest = name.strip_prefix(prefix)?;
            let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).or_else(|| rest.strip_prefix(':'))?;
            Some(inner.trim().parse().map_err(|_| unknown()))
        };
        Ok(match name {
            "binary_tetrahedral" => Preset::BinaryTetrahedral,
            "tetrahedral_so3" => Preset::TetrahedralSo3,
            "binary_octahedral" => Preset::BinaryOctahedral,
            "binary_icosahedral" => Preset::BinaryIcosahedral,
            _ => {
                if let Some(n) = with_arg("cyclic") {
                    Preset::Cyclic(n?)
                } else if let Some(n) = with_arg("binary_dihedral") {
                    Preset::BinaryDihedral(n?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// A preset group: matrices when the model fits one quadratic field, class
/// data always, and its one-dimensional characters (trivial first) as values
/// per class.
#[derive(Debug, Clone)]
pub struct PresetGroup {
    pub name: String,
    pub spec: Option<MatrixGroupSpec>,
    pub classes: ClassData,
    pub characters: Vec<Vec<QuadElem>>,
}

fn q(n: i64) -> QuadElem {
    QuadElem::from_int(n)
}

fn m2(a: QuadElem, b: QuadElem, c: QuadElem, d: QuadElem) -> Matrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// Primitive `n`-th root of unity, for `n` with `φ(n) ≤ 2`.
fn root_of_unity(n: usize) -> Option<QuadElem> {
    let w3 = (q(-1) + QuadElem::sqrt_of(-3)) / q(2);
    Some(match n {
        1 => q(1),
        2 => q(-1),
        3 => w3,
        4 => QuadElem::i(),
        6 => -w3.pow(2),
        _ => return None,
    })
}

fn from_matrices(
    name: &str,
    spec: MatrixGroupSpec,
    generator_chars: Vec<Vec<QuadElem>>,
) -> Result<PresetGroup, MolienError> {
    let (classes, characters) = class_data_from_group(&spec, DEFAULT_CAP, &generator_chars)?;
    Ok(PresetGroup { name: name.into(), spec: Some(spec), classes, characters })
}

pub fn preset(name: &str) -> Result<PresetGroup, MolienError> {
    let which = Preset::parse(name)?;
    let i = QuadElem::i();
    let w = root_of_unity(3).expect("cube root");
    match which {
        Preset::BinaryTetrahedral => {
            let r = m2(i.clone(), q(0), q(0), -&i);
            let one_i = &q(1) + &i;
            let one_mi = &q(1) - &i;
            let s = m2(&one_i / &q(2), -(&one_mi / &q(2)), &one_i / &q(2), &one_mi / &q(2));
            let spec = MatrixGroupSpec::new(2, vec![r, s])?;
            from_matrices(name, spec, vec![vec![q(1), q(1)], vec![q(1), w.clone()], vec![q(1), w.pow(2)]])
        }
        Preset::TetrahedralSo3 => {
            let rho = Matrix::from_ints(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]);
            // the printed image of S has determinant −1; its negative lies in SO(3)
            let sigma = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
            let spec = MatrixGroupSpec::new(3, vec![rho, sigma])?;
            from_matrices(name, spec, vec![vec![q(1), q(1)], vec![q(1), w.clone()], vec![q(1), w.pow(2)]])
        }
        Preset::BinaryOctahedral => {
            let r2 = QuadElem::sqrt_of(2);
            // (size, trace, sign character)
            let rows = [
                (1, q(2), 1),
                (1, q(-2), 1),
                (8, q(1), 1),
                (8, q(-1), 1),
                (6, q(0), 1),
                (6, r2.clone(), -1),
                (6, -r2, -1),
                (12, q(0), -1),
            ];
            let classes = ClassData::from_traces(&rows.iter().map(|(s, t, _)| (*s, t.clone())).collect::<Vec<_>>());
            let characters = vec![vec![q(1); rows.len()], rows.iter().map(|r| q(r.2)).collect()];
            Ok(PresetGroup { name: name.into(), spec: None, classes, characters })
        }
        Preset::BinaryIcosahedral => {
            let rho0 = (QuadElem::sqrt_of(5) - q(1)) / q(2);
            let rho1 = &rho0 + &q(1);
            let rows = [
                (1, q(2)),
                (1, q(-2)),
                (12, rho0.clone()),
                (12, -&rho0),
                (12, rho1.clone()),
                (12, -&rho1),
                (15, q(0)),
                (15, q(0)),
                (20, q(-1)),
                (20, q(1)),
            ];
            let classes = ClassData::from_traces(&rows);
            let characters = vec![vec![q(1); rows.len()]];
            Ok(PresetGroup { name: name.into(), spec: None, classes, characters })
        }
        Preset::Cyclic(n) => {
            let z = root_of_unity(n)
                .ok_or_else(|| MolienError::UnknownPreset(format!("{name}: needs n in 1, 2, 3, 4, 6")))?;
            let zi = z.inv()?;
            let spec = MatrixGroupSpec::new(2, vec![m2(z.clone(), q(0), q(0), zi)])?;
            let chars = (0..n as u32).map(|k| vec![z.pow(k)]).collect();
            from_matrices(name, spec, chars)
        }
        Preset::BinaryDihedral(n) => {
            let z = root_of_unity(2 * n)
                .ok_or_else(|| MolienError::UnknownPreset(format!("{name}: needs n in 1, 2, 3")))?;
            let a = m2(z.clone(), q(0), q(0), z.inv()?);
            let b = m2(q(0), q(-1), q(1), q(0));
            let spec = MatrixGroupSpec::new(2, vec![a, b])?;
            // abelianization: Z/2 × Z/2 for even n, Z/4 generated by b for odd n
            let chars = if n % 2 == 0 {
                vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(-1), q(1)], vec![q(-1), q(-1)]]
            } else {
                (0..4u32).map(|k| vec![q(-1).pow(k), i.pow(k)]).collect()
            };
            from_matrices(name, spec, chars)
        }
    }
}
