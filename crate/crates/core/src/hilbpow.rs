//! Hilbert's coefficient operators `D`, `Δ`, the formal fractional-power
//! calculus and the covariant detecting μ-th powers among binary forms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactnum::{factorial, QuadElem, Rational};
use crate::mpoly::{BinaryForm, MPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbError {
    #[error("mu = {mu} does not divide the degree {d}")]
    DegreeNotDivisible { d: usize, mu: usize },
    #[error("mu must be at least 2")]
    BadMu,
    #[error("covariant for d = {d}, mu = {mu} is not divisible by x^{k}")]
    NonExactDivision { d: usize, mu: usize, k: usize },
    #[error("zero form")]
    ZeroForm,
    #[error("polynomial uses variable index {0} beyond a_d")]
    VariableOutOfRange(usize),
}

/// `Σ c · f^e · Π Δ^k f`, keyed by `(e, sorted list of k)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FracExpr {
    terms: BTreeMap<(Rational, Vec<u32>), Rational>,
}

impl FracExpr {
    /// `f^e`.
    pub fn f_pow(e: Rational) -> Self {
        let mut out = FracExpr::default();
        out.add((e, vec![]), Rational::one());
        out
    }

    fn add(&mut self, key: (Rational, Vec<u32>), c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &[u32], &Rational)> {
        self.terms.iter().map(|((e, ks), c)| (e, ks.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `f^e · Π Δ^k f` (the list is sorted internally).
    pub fn coeff(&self, e: &Rational, derivs: &[u32]) -> Rational {
        let mut ks = derivs.to_vec();
        ks.sort_unstable();
        self.terms.get(&(e.clone(), ks)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies every term by `f^e`.
    pub fn mul_f_pow(&self, e: &Rational) -> Self {
        let mut out = FracExpr::default();
        for ((fe, ks), c) in &self.terms {
            out.add((fe + e, ks.clone()), c.clone());
        }
        out
    }
}

/// One application of `Δ` by the Leibniz rule.
pub fn delta_symbolic(e: &FracExpr) -> FracExpr {
    let mut out = FracExpr::default();
    for ((fe, ks), c) in &e.terms {
        if !fe.is_zero() {
            let mut k2 = ks.clone();
            k2.push(1);
            k2.sort_unstable();
            out.add((fe - Rational::one(), k2), c * fe);
        }
        for j in 0..ks.len() {
            if j > 0 && ks[j] == ks[j - 1] {
                continue;
            }
            let mult = ks.iter().filter(|&&k| k == ks[j]).count();
            let mut k2 = ks.clone();
            k2[j] += 1;
            k2.sort_unstable();
            out.add((fe.clone(), k2), c * Rational::from_integer(BigInt::from(mult)));
        }
    }
    out
}

fn fmt_rat(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("({q})")
    }
}

impl fmt::Display for FracExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((fe, ks), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            write!(f, "{}", c.abs())?;
            if !fe.is_zero() {
                write!(f, "*f^{}", fmt_rat(fe))?;
            }
            let mut j = 0;
            while j < ks.len() {
                let k = ks[j];
                let m = ks[j..].iter().take_while(|&&x| x == k).count();
                let base = if k == 1 { "Δf".to_string() } else { format!("Δ^{k}f") };
                if m == 1 {
                    write!(f, "*{base}")?;
                } else {
                    write!(f, "*({base})^{m}")?;
                }
                j += m;
            }
        }
        Ok(())
    }
}

/// `Δ^k f = x^k ∂_y^k f` on a concrete form.
pub fn delta_on_form(f: &BinaryForm, k: usize) -> BinaryForm {
    f.delta_pow(k)
}

fn check_mu(d: usize, mu: usize) -> Result<usize, HilbError> {
    if mu < 2 {
        return Err(HilbError::BadMu);
    }
    if !d.is_multiple_of(mu) || d == 0 {
        return Err(HilbError::DegreeNotDivisible { d, mu });
    }
    Ok(d / mu)
}

/// `f^{ν+1−1/μ} Δ^{ν+1}(f^{1/μ})` as a formal expression; all exponents of
/// `f` are non-negative integers.
pub fn hilbert_expression(nu: usize, mu: usize) -> FracExpr {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), FracExpr>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().expect("cache lock").get(&(nu, mu)) {
        return e.clone();
    }
    let inv_mu = Rational::new(BigInt::one(), BigInt::from(mu));
    let mut e = FracExpr::f_pow(inv_mu.clone());
    for _ in 0..=nu {
        e = delta_symbolic(&e);
    }
    let out = e.mul_f_pow(&(Rational::from_integer(BigInt::from(nu + 1)) - inv_mu));
    cache.lock().expect("cache lock").insert((nu, mu), out.clone());
    out
}

/// Hilbert's covariant of order `(d−2)(ν+1)`, `d = μν`.
pub fn hilbert_covariant(f: &BinaryForm, mu: usize) -> Result<BinaryForm, HilbError> {
    let d = f.degree();
    let nu = check_mu(d, mu)?;
    if f.is_zero() {
        return Err(HilbError::ZeroForm);
    }
    let expr = hilbert_expression(nu, mu);
    let deltas: Vec<BinaryForm> = (0..=nu + 1).map(|k| f.delta_pow(k)).collect();
    let mut fpows: Vec<BinaryForm> = vec![BinaryForm::from_ints(&[1])];
    let mut acc = BinaryForm::zero_of_degree(d * (nu + 1));
    for (fe, ks, c) in expr.terms() {
        assert!(fe.is_integer() && !fe.is_negative(), "non-integral exponent after clearing");
        let n = fe.to_integer().to_usize().expect("small exponent");
        while fpows.len() <= n {
            let next = fpows.last().expect("non-empty") * f;
            fpows.push(next);
        }
        let mut term = fpows[n].clone();
        for &k in ks {
            term = &term * &deltas[k as usize];
        }
        acc = &acc + &term.scale(&QuadElem::rational(c.clone()));
    }
    let k = 2 * (nu + 1);
    acc.div_x_pow(k).ok_or(HilbError::NonExactDivision { d, mu, k })
}

/// Outcome of the root-extraction test.
#[derive(Debug, Clone, PartialEq)]
pub enum PowerTest {
    /// `f = c·g^μ`.
    Yes {
        root: BinaryForm,
        scalar: QuadElem,
    },
    No,
}

impl PowerTest {
    pub fn is_yes(&self) -> bool {
        matches!(self, PowerTest::Yes { .. })
    }
}

/// Decides whether `f = c·g^μ` by extracting a formal μ-th root of the
/// dehomogenized form.
pub fn is_power(f: &BinaryForm, mu: usize) -> Result<PowerTest, HilbError> {
    let d = f.degree();
    let nu = check_mu(d, mu)?;
    if f.is_zero() {
        return Err(HilbError::ZeroForm);
    }
    let raw = f.raw();
    // y^α and x^β split off
    let alpha = raw.iter().take_while(|c| c.is_zero()).count();
    let beta = raw.iter().rev().take_while(|c| c.is_zero()).count();
    if alpha % mu != 0 || beta % mu != 0 {
        return Ok(PowerTest::No);
    }
    let m = d - alpha - beta;
    let lead = raw[alpha].clone();
    let p: Vec<QuadElem> = raw[alpha..=alpha + m].iter().map(|c| c / &lead).collect();
    let r = m / mu;
    // q = p^{1/μ} as a power series: k q_k = Σ_{j=1}^k ((1/μ + 1) j − k) p_j q_{k−j}
    let a1 = QuadElem::from_frac(mu as i64 + 1, mu as i64);
    let mut q = vec![QuadElem::one()];
    for k in 1..=r {
        let mut s = QuadElem::zero();
        for j in 1..=k.min(m) {
            let w = &a1 * QuadElem::from_int(j as i64) - QuadElem::from_int(k as i64);
            s = s + w * &p[j] * &q[k - j];
        }
        q.push(s / QuadElem::from_int(k as i64));
    }
    // g = y^{α/μ} x^{β/μ} Σ q_k x^{r−k} y^k
    let mut g_raw = vec![QuadElem::zero(); nu + 1];
    for (k, qk) in q.into_iter().enumerate() {
        g_raw[alpha / mu + k] = qk;
    }
    let g = BinaryForm::from_raw(g_raw);
    if g.pow(mu as u32).scale(&lead) == *f {
        Ok(PowerTest::Yes { root: g, scalar: lead })
    } else {
        Ok(PowerTest::No)
    }
}

/// Coefficient ring `ℚ[a_0, …, a_d]`.
pub fn coeff_var(d: usize, i: usize) -> MPoly {
    MPoly::var(d + 1, i)
}

pub fn coeff_names(d: usize) -> Vec<String> {
    (0..=d).map(|i| format!("a{i}")).collect()
}

fn check_coeff_poly(p: &MPoly, d: usize) -> Result<MPoly, HilbError> {
    if p.nvars() <= d + 1 {
        return Ok(p.extend(d + 1));
    }
    for (e, _) in p.terms() {
        if let Some(i) = e.iter().enumerate().skip(d + 1).find(|(_, &x)| x > 0).map(|(i, _)| i) {
            return Err(HilbError::VariableOutOfRange(i));
        }
    }
    Ok(p.drop_vars(&(d + 1..p.nvars()).collect::<Vec<_>>()))
}

/// `D = Σ (i+1) a_i ∂/∂a_{i+1}`.
pub fn d_coeff(p: &MPoly, d: usize) -> Result<MPoly, HilbError> {
    let p = check_coeff_poly(p, d)?;
    let mut out = MPoly::zero_in(d + 1);
    for i in 0..d {
        let t = &coeff_var(d, i) * &p.partial(i + 1);
        out = &out + &t.scale(&QuadElem::from_int(i as i64 + 1));
    }
    Ok(out)
}

/// `Δ = Σ (d−i) a_{i+1} ∂/∂a_i`.
pub fn delta_coeff(p: &MPoly, d: usize) -> Result<MPoly, HilbError> {
    let p = check_coeff_poly(p, d)?;
    let mut out = MPoly::zero_in(d + 1);
    for i in 0..d {
        let t = &coeff_var(d, i + 1) * &p.partial(i);
        out = &out + &t.scale(&QuadElem::from_int((d - i) as i64));
    }
    Ok(out)
}

/// `a₀^{ν+1−1/μ} Δ^{ν+1}(a₀^{1/μ})` with `Δ^i a₀ = d!/(d−i)!·a_i`.
pub fn minimal_weight(d: usize, mu: usize) -> Result<MPoly, HilbError> {
    let nu = check_mu(d, mu)?;
    let expr = hilbert_expression(nu, mu);
    let a0 = coeff_var(d, 0);
    let mut out = MPoly::zero_in(d + 1);
    for (fe, ks, c) in expr.terms() {
        let n = fe.to_integer().to_u32().expect("integral exponent");
        let mut term = a0.pow(n).scale(&QuadElem::rational(c.clone()));
        for &k in ks {
            let k = k as usize;
            if k > d {
                term = MPoly::zero_in(d + 1);
                break;
            }
            let w = factorial(d as u64) / factorial((d - k) as u64);
            term = &term * &coeff_var(d, k).scale(&QuadElem::rational(Rational::from_integer(w)));
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Clears denominators and content so proportional outputs compare equal.
pub fn primitive_part(p: &MPoly) -> MPoly {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in p.terms() {
        let q = c.to_rational().expect("rational coefficients");
        den = den.lcm(q.denom());
        num = num.gcd(q.numer());
    }
    if num.is_zero() {
        return p.clone();
    }
    let scaled = p.scale(&QuadElem::rational(Rational::new(den.clone(), BigInt::one())));
    let mut g = BigInt::zero();
    for (_, c) in scaled.terms() {
        g = g.gcd(c.to_rational().expect("rational").numer());
    }
    let lead_neg = scaled.leading_coeff().is_some_and(|c| c.to_rational().is_some_and(|q| q.is_negative()));
    let g = if lead_neg { -g } else { g };
    scaled.scale(&QuadElem::rational(Rational::new(BigInt::one(), g)))
}
