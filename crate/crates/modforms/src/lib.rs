//! Truncated Eisenstein lattice sums `G_k(z) = Σ' 1/(mz + n)^{2k}` and the
//! numerical checks built on them.

use num_complex::Complex64;
use thiserror::Error;

use classinv_core::QuadElem;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModError {
    #[error("weight parameter k = {0}: the truncated sum needs k >= 2")]
    BadWeight(u32),
    #[error("point {0} is not in the upper half plane")]
    NotUpperHalf(Complex64),
    #[error("need at least 3 samples, got {0}")]
    TooFewSamples(usize),
    #[error("denominator {what} is {value:.3e} at {z}, too close to zero")]
    NearZeroDenominator { what: &'static str, z: Complex64, value: f64 },
    #[error("matrix {0:?} does not have determinant 1")]
    NotUnimodular([[i64; 2]; 2]),
    #[error("cannot parse complex number '{0}'")]
    Parse(String),
}

/// Denominators below this modulus are rejected by the ratio checks.
pub const NEAR_ZERO: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint(Complex64);

impl UpperHalfPoint {
    pub fn new(z: Complex64) -> Result<Self, ModError> {
        if z.im > 0.0 && z.re.is_finite() && z.im.is_finite() {
            Ok(UpperHalfPoint(z))
        } else {
            Err(ModError::NotUpperHalf(z))
        }
    }

    pub fn z(&self) -> Complex64 {
        self.0
    }
}

/// `e^{iπ/3}`.
pub fn rho() -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EisensteinSum {
    pub value: Complex64,
    pub n: u32,
    /// `|G(N) − G(⌊N/2⌋)|`, the change over the outer half of the shells.
    pub refinement: f64,
}

/// Sum over `|m|, |n| ≤ N`, `(m, n) ≠ (0, 0)`, accumulated shell by shell.
pub fn eisenstein(k: u32, z: UpperHalfPoint, n: u32) -> Result<EisensteinSum, ModError> {
    if k < 2 {
        return Err(ModError::BadWeight(k));
    }
    let z = z.z();
    let e = -(2 * k as i32);
    let term = |m: i64, j: i64| (z * m as f64 + j as f64).powi(e);
    let mut total = Complex64::new(0.0, 0.0);
    let mut half = total;
    let n = n as i64;
    for s in 1..=n {
        // shell max(|m|, |j|) = s; (m, j) and (−m, −j) give equal terms
        let mut shell = Complex64::new(0.0, 0.0);
        for j in -s..=s {
            shell += term(s, j);
        }
        for m in -(s - 1)..=(s - 1) {
            shell += term(m, s);
        }
        total += shell * 2.0;
        if s == n / 2 {
            half = total;
        }
    }
    Ok(EisensteinSum { value: total, n: n as u32, refinement: (total - half).norm() })
}

fn g(k: u32, z: Complex64, n: u32) -> Result<Complex64, ModError> {
    Ok(eisenstein(k, UpperHalfPoint::new(z)?, n)?.value)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RingResiduals {
    /// `G₄/G₂²` per sample.
    pub ratio4: Vec<Complex64>,
    /// `G₅/(G₂G₃)` per sample.
    pub ratio5: Vec<Complex64>,
    pub max_deviation4: f64,
    pub max_deviation5: f64,
}

fn max_pairwise(v: &[Complex64]) -> f64 {
    let mut best = 0.0f64;
    for (i, a) in v.iter().enumerate() {
        for b in &v[i + 1..] {
            best = best.max((a - b).norm());
        }
    }
    best
}

/// The ratios `G₄/G₂²` and `G₅/(G₂G₃)` at each sample; both are constant on
/// the upper half plane.
pub fn ring_relation_residual(samples: &[Complex64], n: u32) -> Result<RingResiduals, ModError> {
    if samples.len() < 3 {
        return Err(ModError::TooFewSamples(samples.len()));
    }
    let mut ratio4 = vec![];
    let mut ratio5 = vec![];
    for &z in samples {
        let (g2, g3, g4, g5) = (g(2, z, n)?, g(3, z, n)?, g(4, z, n)?, g(5, z, n)?);
        for (what, v) in [("G2", g2), ("G3", g3)] {
            if v.norm() < NEAR_ZERO {
                return Err(ModError::NearZeroDenominator { what, z, value: v.norm() });
            }
        }
        ratio4.push(g4 / (g2 * g2));
        ratio5.push(g5 / (g2 * g3));
    }
    Ok(RingResiduals { max_deviation4: max_pairwise(&ratio4), max_deviation5: max_pairwise(&ratio5), ratio4, ratio5 })
}

/// `|G_k(gz) − (cz + d)^{2k} G_k(z)|` at equal truncation.
pub fn modularity_residual(k: u32, z: UpperHalfPoint, m: [[i64; 2]; 2], n: u32) -> Result<f64, ModError> {
    let [[a, b], [c, d]] = m;
    if a * d - b * c != 1 {
        return Err(ModError::NotUnimodular(m));
    }
    let w = z.z();
    let gz = (w * a as f64 + b as f64) / (w * c as f64 + d as f64);
    let lhs = g(k, gz, n)?;
    let rhs = (w * c as f64 + d as f64).powi(2 * k as i32) * g(k, w, n)?;
    Ok((lhs - rhs).norm())
}

/// `(w − i)/(w + i)`, from the closed upper half plane to the closed disk.
pub fn cayley(w: Complex64) -> Result<Complex64, ModError> {
    if w.im < 0.0 || !w.re.is_finite() || !w.im.is_finite() {
        return Err(ModError::NotUpperHalf(w));
    }
    let i = Complex64::i();
    Ok((w - i) / (w + i))
}

/// `i(1 + z)/(1 − z)`.
pub fn cayley_inverse(z: Complex64) -> Complex64 {
    Complex64::i() * (1.0 + z) / (1.0 - z)
}

/// `Σ 1/(uλ)^{2k}` over the units `u` of the lattice for `λ = m + n·ζ`
/// (exact). `ζ = e^{iπ/3}` with six units, or `ζ = i` with four.
pub fn unit_orbit_sum(hexagonal: bool, m: i64, n: i64, k: u32) -> QuadElem {
    let zeta =
        if hexagonal { (QuadElem::from_int(1) + QuadElem::sqrt_of(-3)) / QuadElem::from_int(2) } else { QuadElem::i() };
    let units = if hexagonal { 6 } else { 4 };
    let lambda = QuadElem::from_int(m) + QuadElem::from_int(n) * zeta.clone();
    let mut acc = QuadElem::from_int(0);
    for j in 0..units {
        let p = (zeta.pow(j) * lambda.clone()).pow(2 * k);
        acc = acc + p.inv().expect("nonzero lattice point");
    }
    acc
}

/// Parses `a+bi`, `a-bi`, `bi`, `i`, `-i` or `a`.
pub fn parse_complex(text: &str) -> Result<Complex64, ModError> {
    let bad = || ModError::Parse(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn uhp(re: f64, im: f64) -> UpperHalfPoint {
        UpperHalfPoint::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn symmetric_lattices_vanish() {
        let at_rho = eisenstein(2, UpperHalfPoint::new(rho()).unwrap(), 200).unwrap();
        assert!(at_rho.value.norm() < 1e-3, "{}", at_rho.value);
        let at_i = eisenstein(3, uhp(0.0, 1.0), 200).unwrap();
        assert!(at_i.value.norm() < 1e-3, "{}", at_i.value);
    }

    #[test]
    fn real_and_positive_on_the_imaginary_axis() {
        let v = eisenstein(2, uhp(0.0, 2.0), 100).unwrap().value;
        assert!(v.im.abs() < 1e-12 && v.re > 0.0);
        // brute force over the full square agrees
        let z = Complex64::new(0.0, 2.0);
        let mut brute = Complex64::new(0.0, 0.0);
        for m in -100i64..=100 {
            for n in -100i64..=100 {
                if (m, n) != (0, 0) {
                    brute += (z * m as f64 + n as f64).powi(-4);
                }
            }
        }
        assert!((brute - v).norm() < 1e-10);
    }

    #[test]
    fn weight_checks() {
        assert_eq!(eisenstein(1, uhp(0.0, 1.0), 10), Err(ModError::BadWeight(1)));
        assert!(UpperHalfPoint::new(Complex64::new(0.0, -1.0)).is_err());
    }

    #[test]
    fn ring_relations() {
        let samples = [Complex64::new(0.0, 1.1), Complex64::new(0.3, 1.7), Complex64::new(0.0, 2.0)];
        let r = ring_relation_residual(&samples, 150).unwrap();
        assert!(r.max_deviation4 < 1e-3 && r.max_deviation5 < 1e-3);
        assert!((r.ratio4[0] - 3.0 / 7.0).norm() < 1e-3);
        assert!((r.ratio5[0] - 5.0 / 11.0).norm() < 1e-3);
        assert_eq!(ring_relation_residual(&samples[..1], 50), Err(ModError::TooFewSamples(1)));
        let near = [rho(), Complex64::new(0.0, 1.1), Complex64::new(0.0, 2.0)];
        assert!(matches!(ring_relation_residual(&near, 150), Err(ModError::NearZeroDenominator { what: "G2", .. })));
    }

    #[test]
    fn modularity() {
        let z = uhp(0.2, 1.3);
        // the square is not translation invariant: the residual is a tail of order N⁻²
        let t100 = modularity_residual(2, z, [[1, 1], [0, 1]], 100).unwrap();
        let t200 = modularity_residual(2, z, [[1, 1], [0, 1]], 200).unwrap();
        assert!(t100 < 1e-4 && t200 < t100 / 3.0);
        assert!(modularity_residual(2, uhp(0.0, 1.5), [[0, -1], [1, 0]], 100).unwrap() < 1e-10);
        let r = UpperHalfPoint::new(rho()).unwrap();
        assert!(modularity_residual(2, r, [[1, -1], [1, 0]], 200).unwrap() < 1e-3);
        assert!(modularity_residual(2, z, [[2, 0], [0, 1]], 10).is_err());
    }

    #[test]
    fn cayley_examples() {
        let i = Complex64::i();
        assert!(cayley(i).unwrap().norm() < 1e-15);
        assert!((cayley(Complex64::new(0.0, 0.0)).unwrap() + 1.0).norm() < 1e-15);
        assert!((cayley(2.0 * i).unwrap() - 1.0 / 3.0).norm() < 1e-15);
    }

    #[test]
    fn exact_orbit_cancellation() {
        for (m, n) in [(1, 0), (2, 1), (3, -5), (7, 4)] {
            assert_eq!(unit_orbit_sum(true, m, n, 2), QuadElem::from_int(0));
            assert_eq!(unit_orbit_sum(false, m, n, 3), QuadElem::from_int(0));
        }
        // weight 12 survives the six-fold orbit
        assert_ne!(unit_orbit_sum(true, 1, 0, 3), QuadElem::from_int(0));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_complex("0.5+0.866i").unwrap(), Complex64::new(0.5, 0.866));
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("1e-3-2i").unwrap(), Complex64::new(1e-3, -2.0));
        assert_eq!(parse_complex("3").unwrap(), Complex64::new(3.0, 0.0));
        assert!(parse_complex("x+i").is_err());
    }

    #[test]
    fn truncation_is_cauchy() {
        for (re, im) in [(0.0, 1.0), (0.3, 1.7), (0.5, 0.9)] {
            for k in [2, 3] {
                let a = eisenstein(k, uhp(re, im), 200).unwrap().value;
                let b = eisenstein(k, uhp(re, im), 400).unwrap().value;
                assert!((a - b).norm() < 1e-2);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn cayley_maps_into_disk(re in -10.0f64..10.0, im in 1e-3f64..10.0) {
            let w = Complex64::new(re, im);
            let z = cayley(w).unwrap();
            prop_assert!(z.norm() < 1.0);
            prop_assert!((cayley_inverse(z) - w).norm() < 1e-12 * w.norm().max(1.0) * 1e3);
        }
    }
}
