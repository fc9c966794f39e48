//! Golden values: printed constants and closed forms recomputed from
//! scratch, one item per value, grouped by module.

use std::fmt::Display;

use serde_json::json;

use classinv_core::binform::{
    catalecticant, classify_quartic, covariant_t, i_as_pfaffian, icosahedral_f, invariant_i, invariant_j,
    klein_regularity_check, klein_relation_check, octahedral_t, orbit_degree, quartic_i, quartic_j,
    sylvester_decompose, tetrahedral_phi, tetrahedral_psi, transvectant, KleinFamily, QuarticClass, Sylvester,
};
use classinv_core::exactnum::rat_int;
use classinv_core::hilbpow::{
    coeff_names, d_coeff, delta_coeff, delta_on_form, delta_symbolic, hilbert_covariant, minimal_weight, FracExpr,
};
use classinv_core::linalg::Matrix;
use classinv_core::molien::{molien_series, preset, semi_molien_series, tits_form_star, GroupInput};
use classinv_core::mpoly::{parse_poly, parse_poly_with};
use classinv_core::projgeo::{
    cross_ratio, cross_ratio_orbit, distinct_count, fourth_harmonic, quadrilateral_fourth, tempered_cross_ratio,
    PointP1, PointP2,
};
use classinv_core::skewpf::{pfaffian, skew_adjugate_odd, skew_canonical_form, SkewMatrix};
use classinv_core::ternary::{
    aronhold, aronhold_from_pfaffians, aronhold_pfaffians, default_basis, hesse_hessian_param, hesse_invariant_polys,
    hesse_invariants, hesse_member, hessian_cubic, parse_cubic, pencil_coords, salmon_branch_quartic, same_i3_j2,
    weierstrass_classify, HesseParam, WeierstrassClass, CUBIC_MONOMIALS,
};
use classinv_core::{BinaryForm, MPoly, QuadElem, RatFunc, UniPoly};
use classinv_modforms::{eisenstein, modularity_residual, rho, unit_orbit_sum, UpperHalfPoint};
use classinv_tiling::{classify_signature, generate_tiling, seed_triangle, Geometry, TriangleSignature};
use num_complex::Complex64;
use num_traits::Zero;

use crate::{commands, CliError, Output};

/// One comparison inside an item; it passes when the rendered values agree.
#[derive(Debug, Clone, PartialEq)]
pub struct Cmp {
    pub label: String,
    pub got: String,
    pub expected: String,
}

fn eq(label: &str, got: impl Display, expected: impl Display) -> Cmp {
    Cmp { label: label.into(), got: got.to_string(), expected: expected.to_string() }
}

fn holds(label: &str, b: bool) -> Cmp {
    eq(label, b, true)
}

type Check = fn() -> Result<Vec<Cmp>, String>;

pub struct Item {
    pub id: &'static str,
    /// What the value is, in words.
    pub location: &'static str,
    /// Set when the printed value is known to disagree with its own formula.
    pub discrepancy: Option<&'static str>,
    check: Check,
}

impl Item {
    pub fn group(&self) -> &'static str {
        self.id.split('.').next().unwrap_or(self.id)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: &'static str,
    pub location: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn e<T, E: Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn q(n: i64) -> QuadElem {
    QuadElem::from_int(n)
}

fn fr(n: i64, d: i64) -> QuadElem {
    QuadElem::from_frac(n, d)
}

fn bf(s: &str) -> Result<BinaryForm, String> {
    BinaryForm::parse(s)
}

fn poly_t(s: &str) -> Result<MPoly, String> {
    e(parse_poly(s, &["t"]))
}

fn aff(x: QuadElem) -> PointP1<QuadElem> {
    PointP1::affine(x)
}

fn p2(x: QuadElem, y: QuadElem) -> PointP2<QuadElem> {
    PointP2::new(x, y, q(1))
}

fn hesse(s: QuadElem) -> MPoly {
    hesse_member(&HesseParam::Finite(s))
}

fn series(num: &[i64], ks: &[usize]) -> RatFunc {
    RatFunc::over_one_minus(UniPoly::from_ints(num), ks)
}

fn one_minus(k: usize) -> UniPoly {
    UniPoly::one_minus_t_pow(k)
}

/// Quartic pencil `x⁴ + 6t x²y² + y⁴` with `t` symbolic.
fn pencil_coeffs() -> Vec<MPoly> {
    let one = MPoly::constant(1, q(1));
    let zero = MPoly::zero_in(1);
    vec![one.clone(), zero.clone(), MPoly::var(1, 0), zero, one]
}

fn printed_branch_quartic(s: &QuadElem) -> Result<BinaryForm, String> {
    let two_s = s * &q(2);
    let six_s = s * &q(6);
    bf(&format!("(x + ({two_s})*y)*(x^3 - ({six_s})*x^2*y - 4*y^3)"))
}

fn flex() -> [QuadElem; 3] {
    [q(1), q(-1), q(0)]
}

pub fn items() -> Vec<Item> {
    let item = |id, location, check: Check| Item { id, location, discrepancy: None, check };
    let known = |id, location, note, check: Check| Item { id, location, discrepancy: Some(note), check };
    vec![
        // exact arithmetic
        item("exactnum.tetrahedral-series-forms", "binary tetrahedral series, two printed forms", || {
            let a = series(&[1, 0, 0, 0, -1, 0, 0, 0, 1], &[6, 4]);
            let b = RatFunc::over_one_minus(one_minus(24), &[6, 8, 12]);
            Ok(vec![holds("equal", a == b)])
        }),
        item("exactnum.semi-series-reduced", "semi-invariant series against (1+t^6)/(1-t^4)^2", || {
            let a = RatFunc::over_one_minus(one_minus(12), &[4, 4, 6]);
            let b = e(RatFunc::new(UniPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]), one_minus(4).pow(2)))?;
            Ok(vec![holds("equal", a == b)])
        }),
        // polynomials
        item("mpoly.phi-under-r", "tetrahedral quartic under diag(i, -i)", || {
            let phi = tetrahedral_phi();
            let r = Matrix::from_rows(vec![vec![QuadElem::i(), q(0)], vec![q(0), -QuadElem::i()]]);
            Ok(vec![eq("image", phi.subst(&r), &phi)])
        }),
        item("mpoly.hessian-octahedral", "Hessian of the octahedral sextic", || {
            let t = e(parse_poly("x^5*y - x*y^5", &["x", "y"]))?;
            Ok(vec![eq("Hess", t.hessian_det(), "-25*x^8 - 350*x^4*y^4 - 25*y^8")])
        }),
        item("mpoly.hessian-phi", "Hessian of the tetrahedral quartic", || {
            Ok(vec![holds("proportional to Psi", tetrahedral_phi().hessian().is_proportional(&tetrahedral_psi()))])
        }),
        item("mpoly.hessian-of-square", "Hessian of the square of a binary quadratic", || {
            let g = e(parse_poly("2*x^2 - 3*x*y + 5*y^2", &["x", "y"]))?;
            let lhs = g.pow(2).hessian_det();
            let rhs = (&g.hessian_det() * &g.pow(2)).scale(&q(12));
            Ok(vec![eq("H(g^2)", lhs, rhs)])
        }),
        item("mpoly.pencil-member", "quartic pencil member at t = 1/3", || {
            let p = e(parse_poly_with("x^4 + 6*t*x^2*y^2 + y^4", &["x", "y"], &[("t", fr(1, 3))]))?;
            Ok(vec![eq("member", p, "x^4 + 2*x^2*y^2 + y^4")])
        }),
        item("mpoly.ceg-quartic", "C-E-G quartic coefficients", || {
            let f = bf("15*x^4 - 37*x^3*y + 30*x^2*y^2 - 8*x*y^3")?;
            let raw: Vec<String> = f.raw().iter().map(|c| c.to_string()).collect();
            Ok(vec![eq("raw", raw.join(","), "15,-37,30,-8,0")])
        }),
        // projective geometry
        item("projgeo.harmonic-roots", "cross-ratio of the roots of x^4 - y^4", || {
            let r = [q(1), q(-1), QuadElem::i(), -QuadElem::i()].map(aff);
            let v = e(cross_ratio(&r[0], &r[1], &r[2], &r[3]))?.value().ok_or("infinite")?;
            Ok(vec![holds("in {-1, 2, 1/2}", [q(-1), q(2), fr(1, 2)].contains(&v))])
        }),
        item("projgeo.tempered", "tempered-scale cross-ratio 0.478", || {
            let v = tempered_cross_ratio();
            Ok(vec![holds(&format!("|{v:.5} - 0.478| < 1e-3"), (v - 0.478).abs() < 1e-3)])
        }),
        item("projgeo.harmonic-orbit", "orbit of the harmonic cross-ratio", || {
            let o = e(cross_ratio_orbit(&q(-1)))?;
            Ok(vec![
                eq("distinct", distinct_count(&o), 3),
                holds("contains 2 and 1/2", o.contains(&q(2)) && o.contains(&fr(1, 2))),
            ])
        }),
        item("projgeo.equianharmonic-orbit", "orbit of the equianharmonic cross-ratio", || {
            let l = (q(1) + QuadElem::sqrt_of(-3)) / q(2);
            Ok(vec![eq("distinct", distinct_count(&e(cross_ratio_orbit(&l))?), 2)])
        }),
        item("projgeo.harmonic-mean", "harmonic mean chord A=0, B=1, C=2/3", || {
            let d = e(fourth_harmonic(&aff(q(0)), &aff(q(1)), &aff(fr(2, 3))))?;
            Ok(vec![eq("D", d.affine_value().ok_or("infinite")?, "4/5")])
        }),
        known(
            "projgeo.quadrilateral",
            "complete quadrilateral on A=0, B=1, C=2/3",
            "the caption incidences give the conjugate of C with respect to A, B (D = 2)",
            || {
                let (a, b, c) = (p2(q(0), q(0)), p2(q(1), q(0)), p2(fr(2, 3), q(0)));
                let e1 = p2(q(0), q(1));
                let f = PointP2([0, 1, 2].map(|k| &(&c.0[k] * &fr(2, 3)) + &(&e1.0[k] * &fr(1, 3))));
                let d = e(quadrilateral_fourth(&a, &b, &c, &e1, &f))?;
                Ok(vec![eq("D", &d.0[0] / &d.0[2], "4/5")])
            },
        ),
        // binary quartics
        item("binform.pencil-i", "I of the quartic pencil", || {
            Ok(vec![eq("I(F_t)", quartic_i(&pencil_coeffs()), poly_t("1 + 3*t^2")?)])
        }),
        item("binform.pencil-j", "J of the quartic pencil", || {
            Ok(vec![eq("J(F_t)", quartic_j(&pencil_coeffs()), poly_t("t*(1 - t)*(1 + t)")?)])
        }),
        item("binform.pencil-discriminant", "discriminant of the quartic pencil", || {
            let a = pencil_coeffs();
            let d = &quartic_i(&a).pow(3) - &quartic_j(&a).pow(2).scale(&q(27));
            let target = poly_t("(3*t - 1)^2*(3*t + 1)^2")?;
            let c = d.ratio_to(&target).ok_or("not proportional")?;
            Ok(vec![eq("constant", c, 1)])
        }),
        item("binform.equianharmonic-i", "I of x^4 - x*y^3", || {
            Ok(vec![eq("I", e(invariant_i(&bf("x^4 - x*y^3")?))?, 0)])
        }),
        item("binform.harmonic-j", "J of x^4 - y^4", || Ok(vec![eq("J", e(invariant_j(&bf("x^4 - y^4")?))?, 0)])),
        known(
            "binform.square-j",
            "J of the square of a nondegenerate quadratic",
            "J = det(catalecticant) gives 1/8 for (x^2+xy+y^2)^2",
            || {
                let f = bf("(x^2 + x*y + y^2)^2")?;
                Ok(vec![eq("J", e(invariant_j(&f))?, 0), holds("I != 0", !e(invariant_i(&f))?.is_zero())])
            },
        ),
        item("binform.catalecticant-rank", "catalecticant rank of x^4 + y^4", || {
            Ok(vec![eq("rank", e(catalecticant(&bf("x^4 + y^4")?))?.rank(), 2)])
        }),
        item("binform.ceg-kernel", "apolar operator of the C-E-G quartic", || {
            let k = e(catalecticant(&bf("15*x^4 - 37*x^3*y + 30*x^2*y^2 - 8*x*y^3")?))?.kernel();
            let v: Vec<String> = k.first().ok_or("trivial kernel")?.iter().map(|x| (x * &q(13)).to_string()).collect();
            Ok(vec![eq("dim", k.len(), 1), eq("13*kernel", v.join(","), "8,20,13")])
        }),
        item("binform.transvectant-powers", "fourth transvectant of x^4 and y^4", || {
            Ok(vec![eq("(x^4, y^4)_4", e(transvectant(&bf("x^4")?, &bf("y^4")?, 4))?, 1)])
        }),
        item("binform.second-transvectant", "(f,f)_2 against the Hessian", || {
            let f = bf("2*x^4 - x^3*y + 5*x*y^3 + 7*y^4")?;
            Ok(vec![holds("proportional", e(transvectant(&f, &f, 2))?.is_proportional(&f.hessian()))])
        }),
        item("binform.fourth-transvectants", "I and J as transvectants", || {
            let f = bf("2*x^4 - x^3*y + 5*x*y^3 + 7*y^4")?;
            let h = e(transvectant(&f, &f, 2))?;
            let i = e(invariant_i(&f))?;
            let j = e(invariant_j(&f))?;
            Ok(vec![
                eq("(f,f)_4", e(transvectant(&f, &f, 4))?, &i * &q(2)),
                eq("(f,(f,f)_2)_4", e(transvectant(&f, &h, 4))?, &j * &q(6)),
            ])
        }),
        item("binform.t-of-square", "T of (xy)^2", || {
            Ok(vec![holds("T = 0", e(covariant_t(&bf("x^2*y^2")?))?.is_zero())])
        }),
        item("binform.t-of-phi", "T of the tetrahedral quartic", || {
            Ok(vec![holds(
                "proportional to xy(x^4-y^4)",
                e(covariant_t(&tetrahedral_phi()))?.is_proportional(&bf("x*y*(x^4 - y^4)")?),
            )])
        }),
        item("binform.t-of-octahedral", "T of the octahedral sextic", || {
            let xi = bf("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12")?;
            Ok(vec![holds("proportional", e(covariant_t(&octahedral_t()))?.is_proportional(&xi))])
        }),
        item("binform.pfaffian-i", "I as a 4x4 Pfaffian on x^4 - x*y^3", || {
            Ok(vec![eq("Pf", e(i_as_pfaffian(&bf("x^4 - x*y^3")?))?, 0)])
        }),
        item("binform.ceg-sylvester", "C-E-G quartic as a sum of two fourth powers", || {
            let f = bf("15*x^4 - 37*x^3*y + 30*x^2*y^2 - 8*x*y^3")?;
            let s = e(sylvester_decompose(&f))?;
            let Sylvester::Sum { forms, coeffs } = &s else { return Err("not a sum".into()) };
            let printed = [bf("(-5/2 + 1/2*i)*x + 2*y")?, bf("(-5/2 - 1/2*i)*x + 2*y")?];
            let mut out = vec![eq("re-expansion", s.expand().ok_or("no expansion")?, &f)];
            for (l, c) in forms.iter().zip(coeffs) {
                let k = printed.iter().position(|p| p.is_proportional(l)).ok_or("form not in the printed pair")?;
                // rescale λℓ⁴ to the printed ℓ
                let r = printed[k].ratio_to(l).ok_or("zero form")?;
                let lam = c / &r.pow(4);
                let sign = if k == 0 { 1 } else { -1 };
                out.push(eq("coefficient", lam, QuadElem::i() * fr(sign, 4)));
            }
            Ok(out)
        }),
        item("binform.tangent-case", "Sylvester decomposition of x^3*y", || {
            Ok(vec![holds("tangent case", e(sylvester_decompose(&bf("x^3*y")?))? == Sylvester::TangentCase)])
        }),
        item("binform.singular", "class of x^2*y*(x+y)", || {
            Ok(vec![eq("class", e(classify_quartic(&bf("x^2*y*(x + y)")?))?.name(), QuarticClass::Singular.name())])
        }),
        item("binform.nullcone", "class of x^3*y", || {
            Ok(vec![eq("class", e(classify_quartic(&bf("x^3*y")?))?.name(), QuarticClass::NullCone.name())])
        }),
        item("binform.orbit-degree-3", "orbit degree, cubic with stabilizer of order 6", || {
            Ok(vec![eq("degree", orbit_degree(3, 6), rat_int(1))])
        }),
        item("binform.orbit-degree-6", "orbit degree, sextic with octahedral stabilizer", || {
            Ok(vec![eq("degree", orbit_degree(6, 24), rat_int(5))])
        }),
        item("binform.orbit-degree-12", "orbit degree, 12-ic with icosahedral stabilizer", || {
            Ok(vec![eq("degree", orbit_degree(12, 60), rat_int(22))])
        }),
        item("binform.klein-tetrahedral", "tetrahedral syzygy", || {
            Ok(vec![holds("verified", e(klein_relation_check(KleinFamily::Tetrahedral))?.verified)])
        }),
        item("binform.klein-octahedral", "octahedral syzygy", || {
            Ok(vec![holds("verified", e(klein_relation_check(KleinFamily::Octahedral))?.verified)])
        }),
        item("binform.klein-icosahedral", "icosahedral syzygy", || {
            Ok(vec![holds("verified", e(klein_relation_check(KleinFamily::Icosahedral))?.verified)])
        }),
        item("binform.regular-tetrahedron", "(f,f)_4 of the tetrahedral quartic", || {
            Ok(vec![holds("vanishes", e(klein_regularity_check(&tetrahedral_psi()))?)])
        }),
        item("binform.regular-octahedron", "(f,f)_4 of the octahedral sextic", || {
            Ok(vec![holds("vanishes", e(klein_regularity_check(&octahedral_t()))?)])
        }),
        item("binform.regular-icosahedron", "(f,f)_4 of the icosahedral 12-ic", || {
            Ok(vec![holds("vanishes", e(klein_regularity_check(&icosahedral_f()))?)])
        }),
        // Hilbert's power test
        item("hilbpow.delta-cube-root", "first Delta of f^(1/3)", || {
            Ok(vec![eq(
                "Delta",
                delta_symbolic(&FracExpr::f_pow(classinv_core::exactnum::rat(1, 3))),
                "1/3*f^(-2/3)*Δf",
            )])
        }),
        item("hilbpow.delta2-cube-root", "second Delta of f^(1/3)", || {
            use classinv_core::exactnum::rat;
            let e2 = delta_symbolic(&delta_symbolic(&FracExpr::f_pow(rat(1, 3))));
            Ok(vec![
                eq("(Δf)^2", e2.coeff(&rat(-5, 3), &[1, 1]), rat(-2, 9)),
                eq("Δ²f", e2.coeff(&rat(-2, 3), &[2]), rat(1, 3)),
                eq("terms", e2.num_terms(), 2),
            ])
        }),
        item("hilbpow.delta3-general", "third Delta of f^(1/mu), mu = 2..7", || {
            use classinv_core::exactnum::rat;
            let mut out = vec![];
            for mu in 2..=7i64 {
                let mut x = FracExpr::f_pow(rat(1, mu));
                for _ in 0..3 {
                    x = delta_symbolic(&x);
                }
                let base = rat(1 - 3 * mu, mu);
                let inv = rat(1, mu);
                out.push(eq("(Δf)^3", x.coeff(&base, &[1, 1, 1]), &inv * rat((1 - mu) * (1 - 2 * mu), mu * mu)));
                out.push(eq("fΔfΔ²f", x.coeff(&(&base + rat(1, 1)), &[1, 2]), &inv * rat(3 * (1 - mu), mu)));
                out.push(eq("f²Δ³f", x.coeff(&(&base + rat(2, 1)), &[3]), inv));
            }
            Ok(out)
        }),
        item("hilbpow.delta-nilpotent", "Delta^(d+1) annihilates forms of degree d <= 12", || {
            let mut out = vec![];
            for d in 1..=12usize {
                let c: Vec<i64> = (0..=d).map(|i| ((7 * i + d) % 5) as i64 - 2).collect();
                out.push(holds(&format!("d = {d}"), delta_on_form(&BinaryForm::from_raw_ints(&c), d + 1).is_zero()));
            }
            Ok(out)
        }),
        item("hilbpow.d-annihilates", "D on the minimal weights of H and T", || {
            let v = |s: &str, d: usize| -> Result<MPoly, String> {
                let names = coeff_names(d);
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                e(parse_poly(s, &refs))
            };
            Ok(vec![
                holds("D(a0a2 - a1^2) = 0", e(d_coeff(&v("a0*a2 - a1^2", 2)?, 2))?.is_zero()),
                holds(
                    "D(2a1^3 - 3a0a1a2 + a0^2a3) = 0",
                    e(d_coeff(&v("2*a1^3 - 3*a0*a1*a2 + a0^2*a3", 3)?, 3))?.is_zero(),
                ),
            ])
        }),
        item("hilbpow.commutator", "[D, Delta] on 30 monomials", || {
            let mut out = vec![];
            for n in 0..30usize {
                let d = 1 + n % 6;
                let ex: Vec<u32> = (0..=d).map(|i| ((n * 3 + i * 5) % 4) as u32).collect();
                let m: u32 = ex.iter().sum();
                let p: u32 = ex.iter().enumerate().map(|(i, &v)| i as u32 * v).sum();
                let mono = MPoly::monomial(ex, q(1));
                let lhs = &e(d_coeff(&e(delta_coeff(&mono, d))?, d))? - &e(delta_coeff(&e(d_coeff(&mono, d))?, d))?;
                out.push(eq(&format!("monomial {n}"), lhs, mono.scale(&q(d as i64 * m as i64 - 2 * p as i64))));
            }
            Ok(out)
        }),
        item("hilbpow.cube-locus", "Hilbert covariant of (xy)^3, mu = 3", || {
            Ok(vec![holds("vanishes", e(hilbert_covariant(&bf("x^3*y^3")?, 3))?.is_zero())])
        }),
        item("hilbpow.sextic-t", "sextic cube covariant against T", || {
            let mut out = vec![];
            for s in ["x^6 + y^6", "x^6 - 3*x^4*y^2 + 2*x*y^5 + y^6", "x^5*y + 4*x^3*y^3 - y^6"] {
                let f = bf(s)?;
                out.push(holds(s, e(hilbert_covariant(&f, 3))?.is_proportional(&e(covariant_t(&f))?)));
            }
            Ok(out)
        }),
        item("hilbpow.minimal-weight-hessian", "minimal weight for nu = 1", || {
            let w = e(minimal_weight(4, 4))?;
            let h = MPoly::monomial(vec![1, 0, 1, 0, 0], q(1)) - MPoly::monomial(vec![0, 2, 0, 0, 0], q(1));
            Ok(vec![holds("proportional to a0a2 - a1^2", w.ratio_to(&h).is_some_and(|c| !c.is_zero()))])
        }),
        item("hilbpow.minimal-weight-t", "minimal weight for nu = 2", || {
            let w = e(minimal_weight(6, 3))?;
            let names = coeff_names(6);
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let t = e(parse_poly("2*a1^3 - 3*a0*a1*a2 + a0^2*a3", &refs))?;
            Ok(vec![holds("proportional to 2a1^3 - 3a0a1a2 + a0^2a3", w.ratio_to(&t).is_some_and(|c| !c.is_zero()))])
        }),
        item("hilbpow.minimal-weight-kernel", "D kills every minimal weight, d <= 12", || {
            let mut out = vec![];
            for d in 2..=12usize {
                for mu in (2..=d).filter(|m| d % m == 0) {
                    out.push(holds(
                        &format!("d = {d}, mu = {mu}"),
                        e(d_coeff(&e(minimal_weight(d, mu))?, d))?.is_zero(),
                    ));
                }
            }
            Ok(out)
        }),
        // Pfaffians
        item("skewpf.two-by-two", "Pfaffian of [[0,a],[-a,0]]", || {
            Ok(vec![eq("Pf", pfaffian(&SkewMatrix::from_upper(2, &[q(7)])), 7)])
        }),
        item("skewpf.four-by-four", "generic 4x4 Pfaffian", || {
            let vars: Vec<MPoly> = (0..6).map(|k| MPoly::var(6, k)).collect();
            let m = SkewMatrix::from_upper(4, &vars);
            let names = ["a", "b", "c", "d", "e", "f"];
            Ok(vec![eq(
                "Pf",
                pfaffian(&m).fmt_with(&names),
                e(parse_poly("a*f - b*e + c*d", &names))?.fmt_with(&names),
            )])
        }),
        item("skewpf.standard-form", "Pfaffian of J_{n,n}, n <= 5", || {
            Ok((1..=5).map(|n| eq(&format!("n = {n}"), pfaffian(&SkewMatrix::j_pattern(n, n)), 1)).collect())
        }),
        item("skewpf.full-rank-form", "canonical form of a nondegenerate 4x4", || {
            let m = SkewMatrix::from_upper(4, &[1, 2, 3, 4, 5, 6].map(q));
            let (g, r) = skew_canonical_form(&m);
            Ok(vec![eq("blocks", r, 2), holds("g w g^T = J", m.congruence(&g) == SkewMatrix::j_pattern(2, 2))])
        }),
        item("skewpf.adjugate-low-rank", "odd adjugate of a rank-2 5x5 matrix", || {
            let v: Vec<QuadElem> = [1, 2, 0, -1, 5].map(q).to_vec();
            let w: Vec<QuadElem> = [0, 1, 3, 2, 1].map(q).to_vec();
            let (adj, _) = e(skew_adjugate_odd(&SkewMatrix::wedge_of(&v, &w)))?;
            Ok(vec![holds("zero", adj.is_zero())])
        }),
        // ternary cubics
        item("ternary.fermat-aronhold", "Aronhold invariant of the Fermat cubic", || {
            Ok(vec![eq("S", e(aronhold(&e(parse_cubic("x^3 + y^3 + z^3"))?))?, 0)])
        }),
        item("ternary.cusp-aronhold", "Aronhold invariant of the cusp", || {
            Ok(vec![eq("S", e(aronhold(&e(parse_cubic("y^2*z - x^3"))?))?, 0)])
        }),
        item("ternary.hesse-aronhold", "Aronhold invariant on the Hesse pencil", || {
            // constant fixed at s = −1, then the identity checked in s
            let c = &e(aronhold(&hesse(q(-1))))? / &q(2);
            let s = MPoly::var(1, 0);
            let mut coeffs: [MPoly; 10] = std::array::from_fn(|_| MPoly::zero_in(1));
            for (k, m) in CUBIC_MONOMIALS.iter().enumerate() {
                if m.contains(&3) {
                    coeffs[k] = MPoly::constant(1, q(1));
                } else if *m == [1, 1, 1] {
                    coeffs[k] = s.scale(&q(6));
                }
            }
            let a = e(aronhold_from_pfaffians(&aronhold_pfaffians(&coeffs)))?;
            Ok(vec![eq("constant", &c, 1296), eq("S(s)", a, (&s.pow(4) - &s).scale(&c))])
        }),
        item("ternary.fermat-s", "S at s = 0", || {
            Ok(vec![eq("S", e(hesse_invariants(&HesseParam::Finite(q(0))))?.0, 0)])
        }),
        item("ternary.discriminant-root", "discriminant at s = -1/2", || {
            Ok(vec![eq("disc", e(hesse_invariants(&HesseParam::Finite(fr(-1, 2))))?.2, 0)])
        }),
        item("ternary.harmonic-t", "T of the Hesse pencil", || {
            Ok(vec![eq("T(s)", hesse_invariant_polys().1, UniPoly::from_ints(&[-1, 0, 0, 20, 0, 0, 8]))])
        }),
        item("ternary.hessian-closure", "Hessian of a Hesse member", || {
            let h = e(hessian_cubic(&hesse(q(2))))?;
            let image = e(hesse_hessian_param(&HesseParam::Finite(q(2))))?;
            Ok(vec![
                holds("in the pencil", pencil_coords(&h).is_some()),
                eq("s'", format!("{image:?}"), format!("{:?}", HesseParam::Finite(fr(-17, 24)))),
            ])
        }),
        item("ternary.salmon-printed", "branch quartic of Hesse(s) from (1,-1,0)", || {
            let mut out = vec![];
            let p = flex();
            for s in [q(2), fr(1, 3), q(-5)] {
                let b = e(salmon_branch_quartic(&hesse(s.clone()), &p, &e(default_basis(&p))?))?;
                out.push(holds(&format!("s = {s}"), e(same_i3_j2(&b, &printed_branch_quartic(&s)?))?));
            }
            Ok(out)
        }),
        item("ternary.salmon-fermat", "branch quartic of the Fermat cubic", || {
            let p = flex();
            let b = e(salmon_branch_quartic(&hesse(q(0)), &p, &e(default_basis(&p))?))?;
            Ok(vec![eq("I", e(invariant_i(&b))?, 0)])
        }),
        item("ternary.salmon-two-points", "branch quartics from two points", || {
            // (1, 2, 1) lies on Hesse(−5/6)
            let f = hesse(fr(-5, 6));
            let a = [q(1), q(2), q(1)];
            let p = flex();
            let ba = e(salmon_branch_quartic(&f, &a, &e(default_basis(&a))?))?;
            let bp = e(salmon_branch_quartic(&f, &p, &e(default_basis(&p))?))?;
            Ok(vec![holds("same (I^3 : J^2)", e(same_i3_j2(&ba, &bp))?)])
        }),
        item("ternary.weierstrass-harmonic", "y^2 = x^3 - x", || {
            Ok(vec![eq("class", e(weierstrass_classify(&q(-1), &q(0)))?.name(), WeierstrassClass::Harmonic.name())])
        }),
        item("ternary.weierstrass-equianharmonic", "y^2 = x^3 + 1", || {
            Ok(vec![eq(
                "class",
                e(weierstrass_classify(&q(0), &q(1)))?.name(),
                WeierstrassClass::Equianharmonic.name(),
            )])
        }),
        // Molien series
        item("molien.binary-tetrahedral-order", "order of <R, S>", || {
            Ok(vec![eq("order", e(preset("binary_tetrahedral"))?.classes.order(), 24)])
        }),
        item("molien.so3-order", "order of <rho, sigma> in SO(3)", || {
            Ok(vec![eq("order", e(preset("tetrahedral_so3"))?.classes.order(), 12)])
        }),
        item("molien.binary-tetrahedral", "binary tetrahedral invariant series", || {
            let g = e(preset("binary_tetrahedral"))?;
            let r = e(molien_series(&GroupInput::Matrices(g.spec.as_ref().ok_or("no matrices")?)))?;
            Ok(vec![eq("series", r, RatFunc::over_one_minus(one_minus(24), &[6, 8, 12]))])
        }),
        item("molien.so3", "tetrahedral group on C^3, summed over characters", || {
            let g = e(preset("tetrahedral_so3"))?;
            let (_, total) = e(semi_molien_series(&g.classes, &g.characters))?;
            Ok(vec![eq("series", total, RatFunc::over_one_minus(one_minus(6), &[2, 2, 2, 3]))])
        }),
        item("molien.tetrahedral-semi", "binary tetrahedral semi-invariant series", || {
            let g = e(preset("binary_tetrahedral"))?;
            let (_, total) = e(semi_molien_series(&g.classes, &g.characters))?;
            Ok(vec![eq("series", total, RatFunc::over_one_minus(one_minus(12), &[4, 4, 6]))])
        }),
        item("molien.octahedral-semi", "binary octahedral semi-invariant series", || {
            let g = e(preset("binary_octahedral"))?;
            let (_, total) = e(semi_molien_series(&g.classes, &g.characters))?;
            Ok(vec![eq("series", total, RatFunc::over_one_minus(one_minus(24), &[6, 8, 12]))])
        }),
        known(
            "molien.icosahedral",
            "binary icosahedral invariant series",
            "the printed target is the reciprocal of a Hilbert series (negative coefficients)",
            || {
                let g = e(preset("binary_icosahedral"))?;
                let r = e(molien_series(&GroupInput::Classes(&g.classes)))?;
                let printed = e(RatFunc::new(one_minus(12) * one_minus(20) * one_minus(30), one_minus(60)))?;
                Ok(vec![eq("series", r, printed)])
            },
        ),
        item("molien.icosahedral-classes", "binary icosahedral class sizes", || {
            Ok(vec![eq(
                "sizes",
                format!("{:?}", e(preset("binary_icosahedral"))?.classes.sizes()),
                "[1, 1, 12, 12, 12, 12, 15, 15, 20, 20]",
            )])
        }),
        item("molien.binary-dihedral", "binary dihedral orders", || {
            (1..=3usize)
                .map(|r| {
                    Ok(eq(&format!("r = {r}"), e(preset(&format!("binary_dihedral({r})")))?.classes.order(), 4 * r))
                })
                .collect()
        }),
        item("molien.tits-e8", "Tits form of the (2,3,5) star", || {
            let t = tits_form_star(2, 3, 5);
            Ok(vec![holds("positive definite", t.positive_definite), eq("vertices", t.matrix.len(), 8)])
        }),
        item("molien.tits-affine-e8", "Tits form of the (2,3,6) star", || {
            Ok(vec![holds("not positive definite", !tits_form_star(2, 3, 6).positive_definite)])
        }),
        item("molien.tits-type-a", "Tits form of the (1,n,n) stars", || {
            Ok((2..=6).map(|n| holds(&format!("n = {n}"), tits_form_star(1, n, n).positive_definite)).collect())
        }),
        // tilings
        item("tiling.classify", "geometry of (2,3,5), (2,4,4), (2,3,7)", || {
            Ok(vec![
                eq("(2,3,5)", classify_signature(&TriangleSignature::new(2, 3, 5)).name(), Geometry::Elliptic.name()),
                eq("(2,4,4)", classify_signature(&TriangleSignature::new(2, 4, 4)).name(), Geometry::Euclidean.name()),
                eq("(2,3,7)", classify_signature(&TriangleSignature::new(2, 3, 7)).name(), Geometry::Hyperbolic.name()),
            ])
        }),
        item("tiling.elliptic-counts", "triangle counts 24, 48, 120", || {
            let mut out = vec![];
            for (r, n) in [(3, 24), (4, 48), (5, 120)] {
                let scene = e(generate_tiling(&TriangleSignature::new(2, 3, r), None))?;
                out.push(eq(&format!("(2,3,{r})"), scene.triangles.len(), n));
                out.push(holds("closed", scene.closed));
            }
            Ok(out)
        }),
        item("tiling.ideal-vertices", "(inf,inf,inf) seed on the unit circle", || {
            let sig: TriangleSignature = e("inf,inf,inf".parse())?;
            let seed = e(seed_triangle(&sig, Geometry::Hyperbolic))?;
            Ok(seed
                .vertices
                .iter()
                .map(|v| holds("|v| = 1", ((v[0] * v[0] + v[1] * v[1]).sqrt() - 1.0).abs() < 1e-12))
                .collect())
        }),
        item("tiling.euclidean-patch", "(2,3,6) patch congruence", || {
            let scene =
                e(generate_tiling(&TriangleSignature::new(2, 3, 6), Some(classinv_tiling::Limit::MinSize(0.25))))?;
            let sides = |v: &[[f64; 3]; 3]| {
                let d = |a: &[f64; 3], b: &[f64; 3]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt();
                let mut s = [d(&v[0], &v[1]), d(&v[1], &v[2]), d(&v[0], &v[2])];
                s.sort_by(f64::total_cmp);
                s
            };
            let base = sides(&scene.triangles[0].vertices);
            let worst = scene
                .triangles
                .iter()
                .map(|t| sides(&t.vertices).iter().zip(&base).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
                .fold(0.0, f64::max);
            Ok(vec![holds(&format!("max side deviation {worst:.1e} < 1e-9"), worst < 1e-9)])
        }),
        // Eisenstein sums
        item("modforms.g2-at-rho", "G_2 at exp(i*pi/3), N = 200", || {
            let v = e(eisenstein(2, e(UpperHalfPoint::new(rho()))?, 200))?.value.norm();
            Ok(vec![holds(&format!("|G_2| = {v:.2e} < 1e-3"), v < 1e-3)])
        }),
        item("modforms.g3-at-i", "G_3 at i, N = 200", || {
            let v = e(eisenstein(3, e(UpperHalfPoint::new(Complex64::i()))?, 200))?.value.norm();
            Ok(vec![holds(&format!("|G_3| = {v:.2e} < 1e-3"), v < 1e-3)])
        }),
        item("modforms.orbit-cancellation", "sum of 1/w^4 over one unit orbit", || {
            Ok(vec![eq("hexagonal", unit_orbit_sum(true, 2, 1, 2), 0), eq("square", unit_orbit_sum(false, 2, 1, 3), 0)])
        }),
        item("modforms.equianharmonic-modularity", "both sides of the weight-4 law at exp(i*pi/3)", || {
            let z = e(UpperHalfPoint::new(rho()))?;
            let img = e(UpperHalfPoint::new(-Complex64::new(1.0, 0.0) / rho()))?;
            let res = e(modularity_residual(2, z, [[0, -1], [1, 0]], 200))?;
            let lhs = e(eisenstein(2, img, 200))?.value.norm();
            Ok(vec![
                holds(&format!("|G_2(gz)| = {lhs:.2e} < 1e-3"), lhs < 1e-3),
                holds(&format!("residual {res:.2e} < 1e-3"), res < 1e-3),
            ])
        }),
        // command line
        known(
            "cli.invariants-harmonic",
            "invariants of x^4 - y^4",
            "with a0 = 1, a4 = -1 the formula gives I = -1 and D = -1",
            || {
                let v = e(commands::invariants("x^4 - y^4", &mut crate::input::context(None)))?;
                Ok(vec![eq("JSON", v, json!({"I": "1", "J": "0", "D": "1", "class": "Harmonic"}))])
            },
        ),
        item("cli.power-test", "power test of (xy)^3", || {
            let v = e(commands::power_test("x^3*y^3", 3, &mut crate::input::context(None)))?;
            Ok(vec![eq("JSON", v, json!({"isPower": true, "root": "x*y", "scalar": "1", "covariantVanishes": true}))])
        }),
        item("cli.tile", "tiling (2,3,5) written as SVG", || {
            let path = std::env::temp_dir().join(format!("classinv-golden-{}.svg", std::process::id()));
            let v = e(commands::tile("2,3,5", None, Some(&path)))?;
            let svg = std::fs::read_to_string(&path).map_err(|x| x.to_string())?;
            let _ = std::fs::remove_file(&path);
            Ok(vec![eq("triangles", &v["triangles"], 120), eq("paths", svg.matches("class=\"tile\"").count(), 120)])
        }),
    ]
}

/// Runs one item; with `inject` the first expected value is perturbed.
pub fn evaluate(item: &Item, inject: bool) -> Outcome {
    let (passed, detail) = match (item.check)() {
        Err(msg) => (false, format!("error: {msg}")),
        Ok(mut cmps) => {
            if inject {
                if let Some(c) = cmps.first_mut() {
                    c.expected = format!("{} + 1", c.expected);
                }
            }
            match cmps.iter().find(|c| c.got != c.expected) {
                None => (true, String::new()),
                Some(c) => (false, format!("{}: got {}, expected {}", c.label, c.got, c.expected)),
            }
        }
    };
    let detail = match (passed, item.discrepancy) {
        (false, Some(note)) => format!("{detail} (documented discrepancy: {note})"),
        _ => detail,
    };
    Outcome { id: item.id, location: item.location, passed, detail }
}

pub fn paper_check(only: Option<&str>, inject: Option<&str>, as_json: bool) -> Result<Output, CliError> {
    let all = items();
    if let Some(g) = only {
        if !all.iter().any(|i| i.group() == g) {
            return Err(CliError::Input(format!("unknown group '{g}'")));
        }
    }
    if let Some(id) = inject {
        if !all.iter().any(|i| i.id == id) {
            return Err(CliError::Input(format!("unknown item '{id}'")));
        }
    }
    let outcomes: Vec<Outcome> =
        all.iter().filter(|i| only.is_none_or(|g| i.group() == g)).map(|i| evaluate(i, inject == Some(i.id))).collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let code = i32::from(failed > 0);
    let text = if as_json {
        let arr: Vec<_> = outcomes
            .iter()
            .map(|o| json!({ "id": o.id, "location": o.location, "passed": o.passed, "detail": o.detail }))
            .collect();
        format!("{}\n", serde_json::Value::Array(arr))
    } else {
        let mut t = String::new();
        for o in &outcomes {
            let status = if o.passed { "PASS" } else { "FAIL" };
            t.push_str(&format!("{status}  {:<40} {}", o.id, o.location));
            if !o.passed {
                t.push_str(&format!("  -- {}", o.detail));
            }
            t.push('\n');
        }
        t.push_str(&format!("{} items, {} passed, {} failed\n", outcomes.len(), outcomes.len() - failed, failed));
        t
    };
    Ok(Output::Report { text, code })
}
