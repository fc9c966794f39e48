//! Acceptance criteria, one PASS/FAIL line each. Always exits 0; failures
//! are reported, not raised.

use std::f64::consts::PI;
use std::fmt::Display;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use classinv_core::binform::{
    covariant_t, discriminant4, icosahedral_f, invariant_i, invariant_j, klein_regularity_check, klein_relation_check,
    octahedral_t, quartic_i, quartic_j, sylvester_decompose, tetrahedral_psi, KleinFamily, Sylvester,
};
use classinv_core::hilbpow::{coeff_names, d_coeff, hilbert_covariant, is_power, minimal_weight, PowerTest};
use classinv_core::linalg::Matrix;
use classinv_core::molien::{molien_series, preset, semi_molien_series, tits_form_star, GroupInput};
use classinv_core::mpoly::parse_poly;
use classinv_core::projgeo::tempered_cross_ratio;
use classinv_core::skewpf::{pfaffian, pfaffian_wedge, skew_canonical_form, SkewMatrix};
use classinv_core::ternary::{
    aronhold, aronhold_pfaffians, chord_third_point, cubic_coeffs, cubic_from_coeffs, default_basis, harmonic_j_check,
    hesse_branch_j, hesse_j_closed, hesse_member, salmon_branch_quartic, same_i3_j2, tangent_third_point, HesseParam,
    CUBIC_MONOMIALS,
};
use classinv_core::{BinaryForm, MPoly, QuadElem, RatFunc, UniPoly};
use classinv_modforms::{eisenstein, rho, ring_relation_residual, unit_orbit_sum, UpperHalfPoint};
use classinv_tiling::{generate_tiling, interior_angles, Geodesic, Geometry, Limit, Pt, TriangleSignature};

type Outcome = Result<String, String>;

fn e<T, E: Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> QuadElem {
    QuadElem::from_int(n)
}

fn fr(n: i64, d: i64) -> QuadElem {
    QuadElem::from_frac(n, d)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_rational(r: &mut ChaCha8Rng) -> QuadElem {
    fr(r.gen_range(-9..=9), r.gen_range(1..=4))
}

fn rand_nonzero(r: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    loop {
        let v = r.gen_range(lo..=hi);
        if v != 0 {
            return v;
        }
    }
}

fn rand_binary(r: &mut ChaCha8Rng, d: usize) -> BinaryForm {
    loop {
        let c: Vec<i64> = (0..=d).map(|_| r.gen_range(-4..=4)).collect();
        if c.iter().any(|&x| x != 0) {
            return BinaryForm::from_raw_ints(&c);
        }
    }
}

fn exponents(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![deg]];
    }
    (0..=deg)
        .flat_map(|a| {
            exponents(nvars - 1, deg - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

fn rand_mpoly_form(r: &mut ChaCha8Rng, nvars: usize, deg: u32) -> MPoly {
    loop {
        let mut g = MPoly::zero_in(nvars);
        for ex in exponents(nvars, deg) {
            g.add_term(ex, q(r.gen_range(-3..=3)));
        }
        if !g.is_zero() {
            return g;
        }
    }
}

fn rand_skew(r: &mut ChaCha8Rng, n: usize) -> SkewMatrix {
    let upper: Vec<QuadElem> = (0..n * (n.saturating_sub(1)) / 2).map(|_| q(r.gen_range(-5..=5))).collect();
    SkewMatrix::from_upper(n, &upper)
}

fn rand_matrix(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_rows((0..n).map(|_| (0..n).map(|_| q(r.gen_range(-3..=3))).collect()).collect())
}

/// Quartic pencil `x⁴ + 6t x²y² + y⁴` in normalized coefficients, `t` symbolic.
fn pencil_symbolic() -> Vec<MPoly> {
    let one = MPoly::constant(1, q(1));
    let zero = MPoly::zero_in(1);
    vec![one.clone(), zero.clone(), MPoly::var(1, 0), zero, one]
}

fn pencil_at(t: &QuadElem) -> BinaryForm {
    BinaryForm::from_raw(vec![q(1), q(0), t * &q(6), q(0), q(1)])
}

fn poly_t(s: &str) -> Result<MPoly, String> {
    e(parse_poly(s, &["t"]))
}

fn hesse(s: &QuadElem) -> MPoly {
    hesse_member(&HesseParam::Finite(s.clone()))
}

fn one_minus(k: usize) -> UniPoly {
    UniPoly::one_minus_t_pow(k)
}

// 1
fn pencil_invariants() -> Outcome {
    let a = pencil_symbolic();
    let i_t = poly_t("1 + 3*t^2")?;
    let j_t = poly_t("t*(1 - t)*(1 + t)")?;
    ensure(quartic_i(&a) == i_t, || format!("I(F_t) = {}", quartic_i(&a)))?;
    ensure(quartic_j(&a) == j_t, || format!("J(F_t) = {}", quartic_j(&a)))?;
    let mut r = rng(1);
    for _ in 0..20 {
        let t = rand_rational(&mut r);
        let f = pencil_at(&t);
        ensure(e(invariant_i(&f))? == i_t.eval(std::slice::from_ref(&t)), || format!("I at t = {t}"))?;
        ensure(e(invariant_j(&f))? == j_t.eval(std::slice::from_ref(&t)), || format!("J at t = {t}"))?;
    }
    Ok("symbolic identities and 20 rational t".into())
}

// 2
fn pencil_discriminant() -> Outcome {
    let a = pencil_symbolic();
    let d = &quartic_i(&a).pow(3) - &quartic_j(&a).pow(2).scale(&q(27));
    let target = poly_t("(3*t - 1)^2*(3*t + 1)^2")?;
    let c = d.ratio_to(&target).ok_or_else(|| format!("D(F_t) = {d} is not proportional"))?;
    let mut r = rng(2);
    for _ in 0..20 {
        let t = rand_rational(&mut r);
        let want = &c * &target.eval(std::slice::from_ref(&t));
        ensure(e(discriminant4(&pencil_at(&t)))? == want, || format!("D at t = {t}"))?;
    }
    Ok(format!("D(F_t) = {c}·(3t−1)²(3t+1)²"))
}

// 3
fn sylvester_chord() -> Outcome {
    let f = e(BinaryForm::parse("15*x^4 - 37*x^3*y + 30*x^2*y^2 - 8*x*y^3"))?;
    let s = e(sylvester_decompose(&f))?;
    let Sylvester::Sum { forms, coeffs } = &s else {
        return Err(format!("expected a sum of two powers, got {s:?}"));
    };
    ensure(forms.len() == 2, || format!("{} summands", forms.len()))?;
    let printed = [e(BinaryForm::parse("(-5/2 + 1/2*i)*x + 2*y"))?, e(BinaryForm::parse("(-5/2 - 1/2*i)*x + 2*y"))?];
    let mut seen = [false; 2];
    for (l, c) in forms.iter().zip(coeffs) {
        let k = printed
            .iter()
            .position(|p| p.is_proportional(l))
            .ok_or_else(|| format!("form {l} not in the printed pair"))?;
        seen[k] = true;
        let lam = c / &printed[k].ratio_to(l).ok_or("zero form")?.pow(4);
        let want = QuadElem::i() * fr(if k == 0 { 1 } else { -1 }, 4);
        ensure(lam == want, || format!("coefficient of form {k}: {lam}, expected {want}"))?;
    }
    ensure(seen == [true, true], || "both printed forms must occur".into())?;
    ensure(s.expand().as_ref() == Some(&f), || "re-expansion differs".into())?;
    Ok("±i/4 on ((−5±i)/2)x + 2y, re-expands exactly".into())
}

// 4
fn hilbert_power_test() -> Outcome {
    let mut r = rng(4);
    let mut pairs = 0;
    let mut cases = 0;
    for d in 2..=12usize {
        for mu in [2usize, 3, 4, 6].into_iter().filter(|m| d % m == 0) {
            pairs += 1;
            for _ in 0..20 {
                let g = rand_binary(&mut r, d / mu);
                let f = g.pow(mu as u32).scale(&q(rand_nonzero(&mut r, -5, 5)));
                let vanishes = e(hilbert_covariant(&f, mu))?.is_zero();
                let oracle = e(is_power(&f, mu))?.is_yes();
                ensure(vanishes && oracle, || {
                    format!("(d, μ) = ({d}, {mu}): power {f}: covariant zero {vanishes}, oracle {oracle}")
                })?;
                // perturb one coefficient until the oracle rejects
                let p = loop {
                    let mut raw = f.raw();
                    let k = r.gen_range(0..=d);
                    raw[k] = &raw[k] + &q(rand_nonzero(&mut r, -3, 3));
                    let p = BinaryForm::from_raw(raw);
                    if !p.is_zero() && e(is_power(&p, mu))? == PowerTest::No {
                        break p;
                    }
                };
                ensure(!e(hilbert_covariant(&p, mu))?.is_zero(), || {
                    format!("(d, μ) = ({d}, {mu}): covariant vanishes on non-power {p}")
                })?;
                cases += 2;
            }
        }
    }
    for (d, mu) in [(4usize, 2usize), (6, 3)] {
        for _ in 0..5 {
            let f = rand_binary(&mut r, d);
            if f.degree() != d || f.raw()[0].is_zero() {
                continue;
            }
            let h = e(hilbert_covariant(&f, mu))?;
            let t = e(covariant_t(&f))?;
            ensure(h.is_proportional(&t), || format!("degree {d}: covariant not proportional to T for {f}"))?;
        }
    }
    Ok(format!("{pairs} (d, μ) pairs, {cases} cases agree with root extraction; d = 4, 6 proportional to T"))
}

// 5
fn minimal_weights() -> Outcome {
    let mut checked = 0;
    for d in 2..=12usize {
        let names = coeff_names(d);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let hess = e(parse_poly("a0*a2 - a1^2", &refs))?;
        let t = if d >= 3 { Some(e(parse_poly("2*a1^3 - 3*a0*a1*a2 + a0^2*a3", &refs))?) } else { None };
        for mu in (2..=d).filter(|m| d % m == 0) {
            let w = e(minimal_weight(d, mu))?;
            ensure(e(d_coeff(&w, d))?.is_zero(), || format!("D(w) ≠ 0 for d = {d}, μ = {mu}"))?;
            let target = match d / mu {
                1 => Some(&hess),
                2 => t.as_ref(),
                _ => None,
            };
            if let Some(target) = target {
                ensure(w.ratio_to(target).is_some_and(|c| !c.is_zero()), || format!("d = {d}, μ = {mu}: {w}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (d, μ) pairs; ν = 1, 2 match at every d"))
}

// 6
fn hessian_of_power() -> Outcome {
    let mut r = rng(6);
    let mut n_checks = 0;
    for n in 1..=2usize {
        for m in 1..=3u32 {
            for k in 2..=3u32 {
                for _ in 0..10 {
                    let g = rand_mpoly_form(&mut r, n + 1, m);
                    let lhs = g.pow(k).hessian_det();
                    let rhs = if m == 1 {
                        MPoly::zero_in(n + 1)
                    } else {
                        let c = fr((k as i64).pow(n as u32 + 1) * (k * m - 1) as i64, (m - 1) as i64);
                        (&g.pow((n as u32 + 1) * (k - 1)) * &g.hessian_det()).scale(&c)
                    };
                    ensure(lhs == rhs, || format!("n = {n}, m = {m}, k = {k}, g = {g}"))?;
                    n_checks += 1;
                }
            }
        }
    }
    Ok(format!("{n_checks} random forms"))
}

fn standard_skew(n: usize, r: usize) -> SkewMatrix {
    let mut j = SkewMatrix::zeros(n);
    for b in 0..r {
        j.set(2 * b, 2 * b + 1, QuadElem::one());
    }
    j
}

// 7
fn pfaffians() -> Outcome {
    let mut r = rng(7);
    for _ in 0..50 {
        let n = 2 * r.gen_range(1..=4);
        let m = rand_skew(&mut r, n);
        ensure(pfaffian(&m) == e(pfaffian_wedge(&m))?, || format!("recursive ≠ wedge at size {n}"))?;
    }
    for _ in 0..50 {
        let n = r.gen_range(1..=10);
        let m = rand_skew(&mut r, n);
        ensure(pfaffian(&m).pow(2) == m.to_matrix().det(), || format!("Pf² ≠ det at size {n}"))?;
    }
    for _ in 0..30 {
        let n = 2 * r.gen_range(1..=4);
        let m = rand_skew(&mut r, n);
        let g = rand_matrix(&mut r, n);
        ensure(pfaffian(&m.congruence(&g)) == &g.det() * &pfaffian(&m), || {
            format!("Pf(gωgᵀ) ≠ det(g)Pf(ω) at size {n}")
        })?;
    }
    for _ in 0..30 {
        let n = r.gen_range(1..=8);
        // mix full-rank and low-rank inputs
        let m = if r.gen_bool(0.5) {
            rand_skew(&mut r, n)
        } else {
            let v: Vec<QuadElem> = (0..n).map(|_| q(r.gen_range(-3..=3))).collect();
            let w: Vec<QuadElem> = (0..n).map(|_| q(r.gen_range(-3..=3))).collect();
            SkewMatrix::wedge_of(&v, &w)
        };
        let (g, blocks) = skew_canonical_form(&m);
        let j = standard_skew(n, blocks);
        ensure(m.congruence(&g) == j, || format!("gωgᵀ ≠ J at size {n}"))?;
        ensure(2 * blocks == m.rank(), || format!("{blocks} blocks for rank {}", m.rank()))?;
        let gi = g.inverse().ok_or("singular change of basis")?;
        ensure(j.congruence(&gi) == m, || format!("reconstruction differs at size {n}"))?;
    }
    Ok("50 wedge, 50 det, 30 congruence, 30 canonical forms".into())
}

fn rand_cubic(r: &mut ChaCha8Rng) -> MPoly {
    let c: [QuadElem; 10] = std::array::from_fn(|_| q(r.gen_range(-5..=5)));
    cubic_from_coeffs(&c)
}

// 8
fn aronhold_pfaffians_criterion() -> Outcome {
    let mut r = rng(8);
    let mut all_equal = 0;
    let mut pattern = 0;
    for _ in 0..50 {
        let f = rand_cubic(&mut r);
        let pfs = aronhold_pfaffians(&e(cubic_coeffs(&f))?);
        if pfs.iter().all(|p| *p == pfs[0]) {
            all_equal += 1;
        }
        let diag = &pfs[0];
        if pfs.iter().enumerate().all(|(i, p)| if i % 4 == 0 { p == diag } else { p.is_zero() }) {
            pattern += 1;
        }
        // invariance: S(f∘g) = det(g)⁴ S(f)
        let g = rand_matrix(&mut r, 3);
        let fg = e(f.linear_substitution(&g))?;
        ensure(e(aronhold(&fg))? == &g.det().pow(4) * &e(aronhold(&f))?, || {
            format!("weight-4 invariance fails for {f}")
        })?;
    }
    let fermat = e(aronhold(&hesse(&q(0))))?;
    ensure(fermat.is_zero(), || format!("S(Fermat) = {fermat}"))?;
    let c = &e(aronhold(&hesse(&q(-1))))? / &q(2);
    let s = MPoly::var(1, 0);
    let coeffs: [MPoly; 10] = std::array::from_fn(|k| {
        let m = CUBIC_MONOMIALS[k];
        if m.contains(&3) {
            MPoly::constant(1, q(1))
        } else if m == [1, 1, 1] {
            s.scale(&q(6))
        } else {
            MPoly::zero_in(1)
        }
    });
    let sym = aronhold_pfaffians(&coeffs);
    let want = (&s.pow(4) - &s).scale(&c);
    ensure(sym[0] == want, || format!("S(Hesse(s)) = {}", sym[0]))?;
    let detail = format!(
        "all nine equal on {all_equal}/50; Pf(B_0)=Pf(B_4)=Pf(B_8) with six zero on {pattern}/50; S(Hesse(s)) = {c}·s(s³−1); S(Fermat) = 0"
    );
    if all_equal == 50 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn same_proj(a: &[QuadElem; 3], b: &[QuadElem; 3]) -> bool {
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        &a[j] * &b[k] == &a[k] * &b[j]
    })
}

fn printed_branch_quartic(s: &QuadElem) -> Result<BinaryForm, String> {
    e(BinaryForm::parse(&format!("(x + ({})*y)*(x^3 - ({})*x^2*y - 4*y^3)", s * &q(2), s * &q(6))))
}

fn branch(f: &MPoly, p: &[QuadElem; 3]) -> Result<BinaryForm, String> {
    e(salmon_branch_quartic(f, p, &e(default_basis(p))?))
}

// 9
fn salmon() -> Outcome {
    let mut r = rng(9);
    let flexes = [[q(1), q(-1), q(0)], [q(1), q(0), q(-1)], [q(0), q(1), q(-1)]];
    let mut values: Vec<QuadElem> = vec![];
    while values.len() < 10 {
        let a = fr(rand_nonzero(&mut r, -6, 6), r.gen_range(1..=3));
        let b = fr(rand_nonzero(&mut r, -6, 6), r.gen_range(1..=3));
        let s = -(&(&(&a.pow(3) + &b.pow(3)) + &q(1)) / &(&(&a * &b) * &q(6)));
        if s.is_zero() || s == fr(-1, 2) || s.pow(3) == q(1) || values.contains(&s) {
            continue;
        }
        let f = hesse(&s);
        let base = [a, b, q(1)];
        let mut pts = vec![flexes[0].clone(), base.clone()];
        let mut candidates = vec![tangent_third_point(&f, &base)];
        candidates.extend(flexes.iter().map(|fl| chord_third_point(&f, &base, fl)));
        for c in candidates.into_iter().flatten() {
            if pts.len() < 5 && !c.iter().all(|x| x.is_zero()) && !pts.iter().any(|p| same_proj(p, &c)) {
                pts.push(c);
            }
        }
        if pts.len() < 5 {
            continue;
        }
        let printed = printed_branch_quartic(&s)?;
        for p in &pts {
            ensure(f.eval(p).is_zero(), || format!("s = {s}: point not on the curve"))?;
            let bq = branch(&f, p)?;
            ensure(e(same_i3_j2(&bq, &printed))?, || format!("s = {s}: (I³:J²) differs at {p:?}"))?;
        }
        values.push(s);
    }
    let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    Ok(format!("5 base points each at s ∈ {{{}}}", list.join(", ")))
}

// 10
fn j_correspondence() -> Outcome {
    let cross = |s: &QuadElem| -> Result<(QuadElem, QuadElem), String> {
        let (i3, d) = e(hesse_branch_j(s))?;
        let (num, den) = hesse_j_closed(s);
        Ok((&i3 * &den, &num * &d))
    };
    let s0 = q(2);
    let (lhs, rhs) = cross(&s0)?;
    ensure(!rhs.is_zero(), || "degenerate base value".into())?;
    let c = &lhs / &rhs;
    let mut r = rng(10);
    let mut done = 0;
    while done < 10 {
        let s = rand_rational(&mut r);
        if s.is_zero() || s == fr(-1, 2) || s.pow(3) == q(1) || s == s0 {
            continue;
        }
        let (lhs, rhs) = cross(&s)?;
        ensure(lhs == &c * &rhs, || format!("ratio differs at s = {s}"))?;
        done += 1;
    }
    let (branch_ok, closed_ok) = e(harmonic_j_check())?;
    ensure(branch_ok && closed_ok, || format!("harmonic s: branch {branch_ok}, closed form {closed_ok}"))?;
    Ok(format!("constant {c} from s = 2, verified at 10 others; both ratios 1 mod 8s⁶+20s³−1"))
}

// 11
fn molien() -> Outcome {
    let mut notes = vec![];
    let mut failed = vec![];
    let mut check = |name: &str, got: RatFunc, want: RatFunc| {
        if got == want {
            notes.push(format!("{name} ok"));
        } else {
            failed.push(format!("{name}: got {got}, expected {want}"));
        }
    };
    let bt = e(preset("binary_tetrahedral"))?;
    let spec = bt.spec.as_ref().ok_or("binary_tetrahedral has no matrices")?;
    check(
        "2T invariants",
        e(molien_series(&GroupInput::Matrices(spec)))?,
        RatFunc::over_one_minus(one_minus(24), &[6, 8, 12]),
    );
    check(
        "2T semi",
        e(semi_molien_series(&bt.classes, &bt.characters))?.1,
        RatFunc::over_one_minus(one_minus(12), &[4, 4, 6]),
    );
    let bo = e(preset("binary_octahedral"))?;
    check(
        "2O semi",
        e(semi_molien_series(&bo.classes, &bo.characters))?.1,
        RatFunc::over_one_minus(one_minus(24), &[6, 8, 12]),
    );
    let bi = e(preset("binary_icosahedral"))?;
    let ico = e(molien_series(&GroupInput::Classes(&bi.classes)))?;
    let printed = e(RatFunc::new(one_minus(12) * one_minus(20) * one_minus(30), one_minus(60)))?;
    let reciprocal = e(printed.inv())?;
    check("2I invariants (printed form)", ico.clone(), printed);
    let so3 = e(preset("tetrahedral_so3"))?;
    check(
        "T on C^3 (summed characters)",
        e(semi_molien_series(&so3.classes, &so3.characters))?.1,
        RatFunc::over_one_minus(one_minus(6), &[2, 2, 2, 3]),
    );
    if failed.is_empty() {
        Ok(notes.join("; "))
    } else {
        let extra = if ico == reciprocal { "; computed 2I series is the reciprocal of the printed form" } else { "" };
        Err(format!("{}{extra}; {}", failed.join("; "), notes.join("; ")))
    }
}

// 12
fn klein_relations() -> Outcome {
    let mut out = vec![];
    for fam in KleinFamily::ALL {
        let k = e(klein_relation_check(fam))?;
        ensure(k.verified, || format!("{} relation fails", fam.name()))?;
        let scalars: Vec<String> = k.scalars.iter().map(|(n, v)| format!("{n} = {v}")).collect();
        out.push(format!("{} ({})", fam.name(), scalars.join(", ")));
    }
    Ok(out.join("; "))
}

// 13
fn klein_regularity() -> Outcome {
    for (name, f) in
        [("tetrahedral", tetrahedral_psi()), ("octahedral", octahedral_t()), ("icosahedral", icosahedral_f())]
    {
        ensure(e(klein_regularity_check(&f))?, || format!("(f,f)_4 ≠ 0 for the {name} form"))?;
    }
    // control: a generic quartic is not regular
    let control = e(BinaryForm::parse("x^4 + x^2*y^2 + y^4"))?;
    ensure(!e(klein_regularity_check(&control))?, || "control quartic reported regular".into())?;
    Ok("(f,f)_4 = 0 on all three; nonzero on a control quartic".into())
}

/// Hyperbolic area by Green's theorem: ∮ 2(x dy − y dx)/(1 − r²) along
/// the geodesic edges.
fn boundary_area(v: &[Pt; 3]) -> f64 {
    const STEPS: usize = 4000;
    let form = |p: [f64; 2], dp: [f64; 2]| 2.0 * (p[0] * dp[1] - p[1] * dp[0]) / (1.0 - p[0] * p[0] - p[1] * p[1]);
    let mut total = 0.0;
    for i in 0..3 {
        let (a, b) = (&v[i], &v[(i + 1) % 3]);
        // x dy − y dx vanishes along a diameter
        if let Geodesic::DiskCircle { center, radius } = Geodesic::through(Geometry::Hyperbolic, a, b) {
            let ang = |p: &Pt| (p[1] - center[1]).atan2(p[0] - center[0]);
            let (t0, mut dt) = (ang(a), ang(b) - ang(a));
            if dt > PI {
                dt -= 2.0 * PI;
            } else if dt < -PI {
                dt += 2.0 * PI;
            }
            let h = dt / STEPS as f64;
            for k in 0..STEPS {
                let t = t0 + (k as f64 + 0.5) * h;
                let p = [center[0] + radius * t.cos(), center[1] + radius * t.sin()];
                let dp = [-radius * t.sin() * h, radius * t.cos() * h];
                total += form(p, dp);
            }
        }
    }
    total.abs()
}

// 14
fn tilings() -> Outcome {
    for (r, n) in [(3, 24), (4, 48), (5, 120)] {
        let scene = e(generate_tiling(&TriangleSignature::new(2, 3, r), None))?;
        ensure(scene.closed && scene.triangles.len() == n, || {
            format!("(2,3,{r}): {} triangles, closed {}", scene.triangles.len(), scene.closed)
        })?;
    }
    let mut mismatches = vec![];
    for p in 1..=9usize {
        for qq in 1..=9usize {
            for r in 1..=9usize {
                let elliptic = qq * r + p * r + p * qq > p * qq * r;
                if tits_form_star(p, qq, r).positive_definite != elliptic {
                    mismatches.push(format!("({p},{qq},{r})"));
                }
            }
        }
    }
    ensure(mismatches.is_empty(), || format!("Tits form disagrees at {}", mismatches.join(" ")))?;
    let scene = e(generate_tiling(&TriangleSignature::new(2, 3, 7), Some(Limit::MaxTriangles(200))))?;
    let mut want = [PI / 2.0, PI / 3.0, PI / 7.0];
    want.sort_by(f64::total_cmp);
    let defect = PI / 42.0;
    let mut worst_angle = 0f64;
    let mut worst_area = 0f64;
    for t in &scene.triangles {
        let mut ang = interior_angles(Geometry::Hyperbolic, &t.vertices);
        ang.sort_by(f64::total_cmp);
        for (a, w) in ang.iter().zip(&want) {
            worst_angle = worst_angle.max((a - w).abs());
        }
        let area = boundary_area(&t.vertices);
        worst_area = worst_area.max((area - (PI - ang.iter().sum::<f64>())).abs()).max((area - defect).abs());
    }
    ensure(worst_angle < 1e-6 && worst_area < 1e-6, || {
        format!("angle error {worst_angle:.2e}, area error {worst_area:.2e}")
    })?;
    Ok(format!(
        "24/48/120 closed; Tits form matches on 729 triples; (2,3,7) patch of {}: angle error {worst_angle:.1e}, area error {worst_area:.1e}",
        scene.triangles.len()
    ))
}

// 15
fn eisenstein_numerics() -> Outcome {
    let g2 = e(eisenstein(2, e(UpperHalfPoint::new(rho()))?, 200))?.value.norm();
    let g3 = e(eisenstein(3, e(UpperHalfPoint::new(Complex64::i()))?, 200))?.value.norm();
    ensure(g2 < 1e-3, || format!("|G_2(ρ)| = {g2:.2e}"))?;
    ensure(g3 < 1e-3, || format!("|G_3(i)| = {g3:.2e}"))?;
    let samples = [Complex64::new(0.0, 1.1), Complex64::new(0.3, 1.7), Complex64::new(0.0, 2.0)];
    let res = e(ring_relation_residual(&samples, 150))?;
    ensure(res.max_deviation4 < 1e-3, || format!("G_4/G_2² deviation {:.2e}", res.max_deviation4))?;
    ensure(unit_orbit_sum(true, 2, 1, 2).is_zero(), || "hexagonal orbit sum nonzero".into())?;
    ensure(unit_orbit_sum(true, 3, -1, 2).is_zero(), || "hexagonal orbit sum nonzero".into())?;
    Ok(format!(
        "|G_2(ρ)| = {g2:.1e}, |G_3(i)| = {g3:.1e}, G_4/G_2² ≈ {:.6} (deviation {:.1e}), orbit sums exactly 0",
        res.ratio4[0].re, res.max_deviation4
    ))
}

// 16
fn tempered() -> Outcome {
    let v = tempered_cross_ratio();
    ensure((v - 0.478).abs() < 1e-3, || format!("{v:.6}"))?;
    Ok(format!("{v:.6}"))
}

struct Criterion {
    n: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { n: 1, name: "pencil invariants", limit: secs(1), run: pencil_invariants },
        Criterion { n: 2, name: "pencil discriminant", limit: None, run: pencil_discriminant },
        Criterion { n: 3, name: "chord quartic as two fourth powers", limit: None, run: sylvester_chord },
        Criterion { n: 4, name: "Hilbert power covariant", limit: secs(60), run: hilbert_power_test },
        Criterion { n: 5, name: "minimal weights", limit: None, run: minimal_weights },
        Criterion { n: 6, name: "Hessian of a power", limit: None, run: hessian_of_power },
        Criterion { n: 7, name: "Pfaffians", limit: secs(10), run: pfaffians },
        Criterion { n: 8, name: "Aronhold invariant", limit: None, run: aronhold_pfaffians_criterion },
        Criterion { n: 9, name: "branch quartics of the Hesse pencil", limit: None, run: salmon },
        Criterion { n: 10, name: "j correspondence", limit: None, run: j_correspondence },
        Criterion { n: 11, name: "Molien series", limit: secs(5), run: molien },
        Criterion { n: 12, name: "Klein relations", limit: secs(10), run: klein_relations },
        Criterion { n: 13, name: "regular polyhedral forms", limit: None, run: klein_regularity },
        Criterion { n: 14, name: "triangle tilings", limit: secs(10), run: tilings },
        Criterion { n: 15, name: "Eisenstein sums", limit: None, run: eisenstein_numerics },
        Criterion { n: 16, name: "tempered cross-ratio", limit: None, run: tempered },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = vec![];
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(d), Some(l)) if took > l => {
                Err(format!("{d}; runtime {:.2} s exceeds {} s", took.as_secs_f64(), l.as_secs()))
            }
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if result.is_err() {
            failed.push(c.n);
        }
        println!("{tag} [{:>2}] {}: {detail} ({:.2} s)", c.n, c.name, took.as_secs_f64());
    }
    let _ = panic::take_hook();
    println!("acceptance: {} passed, {} failed {failed:?}", criteria.len() - failed.len(), failed.len());
}
