//! Molien series of finite matrix groups, in matrix mode (enumerate the
//! group) or class mode (sizes and characteristic polynomials), plus the
//! semi-invariant series for one-dimensional characters.

mod presets;
mod tits;

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{ExactError, QuadElem, RatFunc, UniPoly};
use crate::linalg::Matrix;
use crate::mpoly::BinaryForm;

pub use presets::{preset, Preset, PresetGroup};
pub use tits::{tits_form_star, TitsForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MolienError {
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("generator {0} is not an invertible {1}x{1} matrix")]
    BadGenerator(usize, usize),
    #[error("values from different quadratic fields: {0} and {1}")]
    FieldMismatch(i64, i64),
    #[error("class data inconsistent: {0}")]
    BadClassData(String),
    #[error("character invalid: {0}")]
    BadCharacter(String),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
    #[error("{0}")]
    Exact(#[from] ExactError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixGroupSpec {
    pub dimension: usize,
    pub generators: Vec<Matrix>,
}

impl MatrixGroupSpec {
    pub fn new(dimension: usize, generators: Vec<Matrix>) -> Result<Self, MolienError> {
        for (k, g) in generators.iter().enumerate() {
            if g.rows() != dimension || g.cols() != dimension || g.det().is_zero() {
                return Err(MolienError::BadGenerator(k, dimension));
            }
        }
        Ok(MatrixGroupSpec { dimension, generators })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassRecord {
    pub size: usize,
    /// `det(I − tA)` for any `A` in the class.
    pub charpoly: UniPoly,
    pub weight: QuadElem,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassData {
    pub classes: Vec<ClassRecord>,
}

impl ClassData {
    /// Classes of a 2×2 unimodular group from `(size, trace)` pairs.
    pub fn from_traces(pairs: &[(usize, QuadElem)]) -> Self {
        let classes = pairs
            .iter()
            .map(|(size, tr)| ClassRecord {
                size: *size,
                charpoly: UniPoly::new(vec![QuadElem::one(), -tr, QuadElem::one()]),
                weight: QuadElem::one(),
            })
            .collect();
        ClassData { classes }
    }

    pub fn order(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    fn validate(&self) -> Result<(), MolienError> {
        if self.classes.is_empty() || self.classes.iter().any(|c| c.size == 0) {
            return Err(MolienError::BadClassData("empty class".into()));
        }
        for c in &self.classes {
            if c.charpoly.coeff(0) != QuadElem::one() {
                return Err(MolienError::BadClassData(format!("charpoly {} must have constant term 1", c.charpoly)));
            }
        }
        Ok(())
    }
}

pub enum GroupInput<'a> {
    Matrices(&'a MatrixGroupSpec),
    Classes(&'a ClassData),
}

/// Closure of the generators under multiplication (the group they generate,
/// when finite). Elements are in breadth-first order from the identity.
pub fn enumerate_group(spec: &MatrixGroupSpec, cap: usize) -> Result<Vec<Matrix>, MolienError> {
    Ok(enumerate_with_words(spec, cap)?.0)
}

/// `(parent index, generator)` that first reached an element; `None` for the identity.
type Parents = Vec<Option<(usize, usize)>>;

/// Elements together with their search-tree parents.
fn enumerate_with_words(spec: &MatrixGroupSpec, cap: usize) -> Result<(Vec<Matrix>, Parents), MolienError> {
    let id = Matrix::identity(spec.dimension);
    let mut index: HashMap<Matrix, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elems = vec![id];
    let mut parent = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, g) in spec.generators.iter().enumerate() {
            let h = &elems[i] * g;
            if index.contains_key(&h) {
                continue;
            }
            if elems.len() == cap {
                return Err(MolienError::CapExceeded(cap));
            }
            index.insert(h.clone(), elems.len());
            elems.push(h);
            parent.push(Some((i, k)));
            queue.push_back(elems.len() - 1);
        }
    }
    Ok((elems, parent))
}

/// `det(I − tA) = Σ (−1)^k e_k(A) t^k`, `e_k` the sum of principal k-minors.
pub fn det_one_minus_t(a: &Matrix) -> UniPoly {
    let n = a.rows();
    let mut coeffs = vec![QuadElem::zero(); n + 1];
    for mask in 0u32..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let drop: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let k = keep.len();
        let minor = if k == 0 { QuadElem::one() } else { a.minor(&drop, &drop).det() };
        let signed = if k.is_multiple_of(2) { minor } else { -minor };
        coeffs[k] = &coeffs[k] + &signed;
    }
    UniPoly::new(coeffs)
}

/// Quadratic fields met among the values; errors on two different ones.
fn common_field<'a>(values: impl IntoIterator<Item = &'a QuadElem>) -> Result<i64, MolienError> {
    let mut d = 1;
    for v in values {
        if v.is_rational() {
            continue;
        }
        if d == 1 {
            d = v.d();
        } else if v.d() != d {
            return Err(MolienError::FieldMismatch(d, v.d()));
        }
    }
    Ok(d)
}

/// `Σ w/p` over grouped denominators, divided by `order`.
fn weighted_sum(terms: Vec<(UniPoly, QuadElem)>, order: usize) -> Result<RatFunc, MolienError> {
    common_field(terms.iter().flat_map(|(p, w)| p.coeffs().iter().chain(std::iter::once(w))))?;
    let mut grouped: Vec<(UniPoly, QuadElem)> = vec![];
    for (p, w) in terms {
        match grouped.iter_mut().find(|(q, _)| *q == p) {
            Some(slot) => slot.1 = &slot.1 + &w,
            None => grouped.push((p, w)),
        }
    }
    let mut acc = RatFunc::poly(UniPoly::zero());
    for (p, w) in grouped {
        if !w.is_zero() {
            acc = &acc + &RatFunc::new(UniPoly::constant(w), p)?;
        }
    }
    let scale = QuadElem::from_int(order as i64).inv()?;
    Ok(RatFunc::simplify(acc.num().scale(&scale), acc.den().clone()))
}

pub const DEFAULT_CAP: usize = 10_000;

/// `(1/|G|) Σ 1/det(I − tg)`.
pub fn molien_series(input: &GroupInput) -> Result<RatFunc, MolienError> {
    match input {
        GroupInput::Matrices(spec) => {
            let elems = enumerate_group(spec, DEFAULT_CAP)?;
            let n = elems.len();
            weighted_sum(elems.iter().map(|g| (det_one_minus_t(g), QuadElem::one())).collect(), n)
        }
        GroupInput::Classes(cd) => {
            cd.validate()?;
            let terms = cd
                .classes
                .iter()
                .map(|c| (c.charpoly.clone(), &c.weight * &QuadElem::from_int(c.size as i64)))
                .collect();
            weighted_sum(terms, cd.order())
        }
    }
}

/// Complex conjugate; for real quadratic fields the identity.
pub fn complex_conj(x: &QuadElem) -> QuadElem {
    if x.d() < 0 {
        x.conj()
    } else {
        x.clone()
    }
}

fn is_root_of_unity(x: &QuadElem) -> bool {
    // roots of unity in a quadratic field have order dividing 4 or 6
    (1..=12).any(|k| x.pow(k) == QuadElem::one())
}

/// Per-character series `(1/|G|) Σ conj(χ(g))/det(I − tg)` and their sum.
/// Characters are given as one value per class.
pub fn semi_molien_series(
    cd: &ClassData,
    characters: &[Vec<QuadElem>],
) -> Result<(Vec<RatFunc>, RatFunc), MolienError> {
    cd.validate()?;
    let mut each = vec![];
    for (k, chi) in characters.iter().enumerate() {
        if chi.len() != cd.classes.len() {
            return Err(MolienError::BadCharacter(format!(
                "character {k} has {} values for {} classes",
                chi.len(),
                cd.classes.len()
            )));
        }
        if let Some(v) = chi.iter().find(|v| !is_root_of_unity(v)) {
            return Err(MolienError::BadCharacter(format!("character {k} value {v} is not a root of unity")));
        }
        let terms = cd
            .classes
            .iter()
            .zip(chi)
            .map(|(c, v)| (c.charpoly.clone(), &(&c.weight * &complex_conj(v)) * &QuadElem::from_int(c.size as i64)))
            .collect();
        each.push(weighted_sum(terms, cd.order())?);
    }
    let total = each.iter().fold(RatFunc::poly(UniPoly::zero()), |acc, s| &acc + s);
    Ok((each, total))
}

/// Conjugacy classes as index lists into `elems`.
pub fn conjugacy_classes(elems: &[Matrix]) -> Vec<Vec<usize>> {
    let index: HashMap<&Matrix, usize> = elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let inverses: Vec<Matrix> = elems.iter().map(|g| g.inverse().expect("group element")).collect();
    let mut class_of = vec![usize::MAX; elems.len()];
    let mut classes: Vec<Vec<usize>> = vec![];
    for i in 0..elems.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let mut members = vec![];
        for (h, hi) in elems.iter().zip(&inverses) {
            let c = &(h * &elems[i]) * hi;
            let j = index[&c];
            if class_of[j] == usize::MAX {
                class_of[j] = classes.len();
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

/// Class data of the generated group and, for each character given by its
/// values on the generators, its values on the classes.
pub fn class_data_from_group(
    spec: &MatrixGroupSpec,
    cap: usize,
    generator_chars: &[Vec<QuadElem>],
) -> Result<(ClassData, Vec<Vec<QuadElem>>), MolienError> {
    let (elems, parent) = enumerate_with_words(spec, cap)?;
    let mut per_elem: Vec<Vec<QuadElem>> = vec![];
    for (k, gen_vals) in generator_chars.iter().enumerate() {
        if gen_vals.len() != spec.generators.len() {
            return Err(MolienError::BadCharacter(format!("character {k} needs one value per generator")));
        }
        common_field(gen_vals)?;
        let mut vals: Vec<QuadElem> = Vec::with_capacity(elems.len());
        for p in &parent {
            vals.push(match p {
                None => QuadElem::one(),
                Some((i, g)) => &vals[*i] * &gen_vals[*g],
            });
        }
        // homomorphism check on every product element·generator
        let index: HashMap<&Matrix, usize> = elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
        for (i, e) in elems.iter().enumerate() {
            for (g, m) in spec.generators.iter().enumerate() {
                let j = index[&(e * m)];
                if vals[j] != &vals[i] * &gen_vals[g] {
                    return Err(MolienError::BadCharacter(format!("character {k} is not a homomorphism")));
                }
            }
        }
        per_elem.push(vals);
    }
    let classes = conjugacy_classes(&elems);
    let cd = ClassData {
        classes: classes
            .iter()
            .map(|c| ClassRecord { size: c.len(), charpoly: det_one_minus_t(&elems[c[0]]), weight: QuadElem::one() })
            .collect(),
    };
    let chars = per_elem.iter().map(|vals| classes.iter().map(|c| vals[c[0]].clone()).collect()).collect();
    Ok((cd, chars))
}

/// `dim` of degree-`k` invariants of a group of 2×2 matrices, as the rank of
/// the summed substitution operator on binary forms of degree `k`.
pub fn invariant_dim_by_averaging(elems: &[Matrix], k: usize) -> usize {
    let mut total = Matrix::zeros(k + 1, k + 1);
    for g in elems {
        for i in 0..=k {
            let mut e = vec![QuadElem::zero(); k + 1];
            e[i] = QuadElem::one();
            let img = BinaryForm::from_raw(e).subst(g).raw();
            for (r, v) in img.into_iter().enumerate() {
                let cur = total.get(r, i).clone();
                total.set(r, i, &cur + &v);
            }
        }
    }
    total.rank()
}
