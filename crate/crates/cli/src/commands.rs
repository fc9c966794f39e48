//! One function per subcommand, each returning the JSON document it prints.

use std::fmt::Display;
use std::path::Path;

use num_traits::Zero;
use serde_json::{json, Value};

use classinv_core::binform::{classify_quartic, discriminant4, invariant_i, invariant_j};
use classinv_core::hilbpow::{hilbert_covariant, is_power, PowerTest};
use classinv_core::linalg::Matrix;
use classinv_core::molien::{
    class_data_from_group, enumerate_group, molien_series, preset, semi_molien_series, ClassData, GroupInput,
    MatrixGroupSpec, MolienError, DEFAULT_CAP,
};
use classinv_core::mpoly::{multiplicity_type, ParseContext};
use classinv_core::projgeo::{cross_ratio, cross_ratio_orbit, distinct_count, CrossRatio, Field, PointP1};
use classinv_core::skewpf::{pfaffian, SkewMatrix};
use classinv_core::ternary::{
    aronhold, aronhold_from_pfaffians, aronhold_pfaffians, cubic_coeffs, default_basis, hesse_hessian_param,
    hesse_invariants, hesse_member, salmon_branch_quartic, HesseParam, TernaryError,
};
use classinv_core::{BinaryForm, QuadElem, RatFunc};
use classinv_modforms::{eisenstein as eisenstein_sum, parse_complex, ModError, UpperHalfPoint};
use classinv_tiling::{emit_svg, generate_tiling, Limit, SvgStyle, TilingError, TriangleSignature};

use crate::args::{Cli, Command};
use crate::{golden, input, CliError, Output};

fn compute(e: impl Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn bad_input(e: impl Display) -> CliError {
    CliError::Input(e.to_string())
}

fn s(x: &impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let mut ctx = input::context(cli.field_d);
    let ctx = &mut ctx;
    let v = match &cli.command {
        Command::Invariants { expr } => invariants(expr, ctx)?,
        Command::Classify { expr, point } => classify(expr, point.as_deref(), ctx)?,
        Command::PowerTest { mu, expr } => power_test(expr, *mu, ctx)?,
        Command::Pfaffian { matrix, file } => {
            let text = match (matrix, file) {
                (Some(m), _) => m.clone(),
                (None, Some(p)) => read(p)?,
                (None, None) => return Err(bad_input("no matrix given")),
            };
            pfaffian_cmd(&text, ctx)?
        }
        Command::Aronhold { expr } => aronhold_cmd(expr, ctx)?,
        Command::Salmon { point, expr } => salmon(expr, point, ctx)?,
        Command::Hesse { s } => hesse(s, ctx)?,
        Command::Molien { preset, spec, semi, terms } => match (preset, spec) {
            (Some(name), _) => molien_preset(name, *semi, *terms)?,
            (None, Some(path)) => molien_file(path, *semi, *terms, cli.field_d)?,
            (None, None) => return Err(bad_input("give --preset or --spec")),
        },
        Command::Tile { signature, limit, out } => tile(signature, *limit, out.as_deref())?,
        Command::Crossratio { points, float } => crossratio(points, *float, ctx)?,
        Command::Eisenstein { k, z, n } => eisenstein(*k, z, *n)?,
        Command::PaperCheck { only, inject, json } => {
            return golden::paper_check(only.as_deref(), inject.as_deref(), *json)
        }
    };
    Ok(Output::Json(v))
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| bad_input(format!("{}: {e}", path.display())))
}

fn quartic_summary(f: &BinaryForm) -> Result<Value, CliError> {
    Ok(json!({
        "I": s(&invariant_i(f).map_err(compute)?),
        "J": s(&invariant_j(f).map_err(compute)?),
        "D": s(&discriminant4(f).map_err(compute)?),
        "class": classify_quartic(f).map_err(compute)?.name(),
    }))
}

/// `{"I", "J", "D", "class"}` of a binary quartic.
pub fn invariants(expr: &str, ctx: &mut ParseContext) -> Result<Value, CliError> {
    quartic_summary(&input::quartic(expr, ctx)?)
}

fn ternary_err(e: TernaryError) -> CliError {
    match e {
        TernaryError::PointNotOnCurve | TernaryError::NotCubic | TernaryError::Parse(_) => bad_input(e),
        _ => compute(e),
    }
}

fn branch_quartic(f: &classinv_core::MPoly, p: &[QuadElem; 3]) -> Result<BinaryForm, CliError> {
    let basis = default_basis(p).map_err(ternary_err)?;
    salmon_branch_quartic(f, p, &basis).map_err(ternary_err)
}

pub fn classify(expr: &str, point: Option<&str>, ctx: &mut ParseContext) -> Result<Value, CliError> {
    match point {
        None => {
            let f = input::quartic(expr, ctx)?;
            let m = multiplicity_type(&f).map_err(compute)?;
            Ok(json!({
                "kind": "binary quartic",
                "class": classify_quartic(&f).map_err(compute)?.name(),
                "multiplicities": m,
            }))
        }
        Some(pt) => {
            let f = input::ternary_cubic(expr, ctx)?;
            let p = input::point3(pt, ctx)?;
            let b = branch_quartic(&f, &p)?;
            Ok(json!({
                "kind": "ternary cubic",
                "class": classify_quartic(&b).map_err(compute)?.name(),
                "branchQuartic": s(&b),
            }))
        }
    }
}

pub fn power_test(expr: &str, mu: usize, ctx: &mut ParseContext) -> Result<Value, CliError> {
    let f = input::binary_form(expr, ctx)?;
    if mu < 2 || f.degree() % mu != 0 {
        return Err(bad_input(format!("--mu {mu} must be at least 2 and divide the degree {}", f.degree())));
    }
    let vanishes = hilbert_covariant(&f, mu).map_err(compute)?.is_zero();
    let test = is_power(&f, mu).map_err(compute)?;
    if vanishes != test.is_yes() {
        return Err(compute("covariant test and root extraction disagree"));
    }
    let (root, scalar) = match &test {
        PowerTest::Yes { root, scalar } => (s(root), s(scalar)),
        PowerTest::No => (Value::Null, Value::Null),
    };
    Ok(json!({ "isPower": test.is_yes(), "root": root, "scalar": scalar, "covariantVanishes": vanishes }))
}

pub fn pfaffian_cmd(text: &str, ctx: &mut ParseContext) -> Result<Value, CliError> {
    let rows = input::matrix_rows(text, ctx)?;
    let m = SkewMatrix::from_rows(&rows).map_err(bad_input)?;
    Ok(json!({ "size": m.size(), "pfaffian": s(&pfaffian(&m)), "rank": m.rank() }))
}

pub fn aronhold_cmd(expr: &str, ctx: &mut ParseContext) -> Result<Value, CliError> {
    let f = input::ternary_cubic(expr, ctx)?;
    let c = cubic_coeffs(&f).map_err(ternary_err)?;
    let pfs = aronhold_pfaffians(&c);
    let a = aronhold_from_pfaffians(&pfs).map_err(ternary_err)?;
    Ok(json!({ "aronhold": s(&a), "principalPfaffians": pfs.iter().map(s).collect::<Vec<_>>() }))
}

pub fn salmon(expr: &str, point: &str, ctx: &mut ParseContext) -> Result<Value, CliError> {
    let f = input::ternary_cubic(expr, ctx)?;
    let p = input::point3(point, ctx)?;
    let b = branch_quartic(&f, &p)?;
    let mut v = quartic_summary(&b)?;
    v.as_object_mut().expect("object").insert("quartic".into(), s(&b));
    Ok(v)
}

pub fn hesse(text: &str, ctx: &mut ParseContext) -> Result<Value, CliError> {
    let sv = input::scalar(text, ctx)?;
    let p = HesseParam::Finite(sv.clone());
    let (si, ti, disc) = hesse_invariants(&p).map_err(ternary_err)?;
    let f = hesse_member(&p);
    let a = aronhold(&f).map_err(ternary_err)?;
    let image = match hesse_hessian_param(&p).map_err(ternary_err)? {
        HesseParam::Finite(t) => s(&t),
        HesseParam::Infinity => Value::String("infinity".into()),
    };
    let flex = [QuadElem::from_int(1), QuadElem::from_int(-1), QuadElem::zero()];
    let b = branch_quartic(&f, &flex)?;
    let class = classify_quartic(&b).map(|c| c.name()).ok();
    Ok(json!({
        "s": s(&sv),
        "member": s(&f),
        "S": s(&si),
        "T": s(&ti),
        "disc": s(&disc),
        "aronhold": s(&a),
        "hessianImage": image,
        "branchQuartic": s(&b),
        "branchClass": class,
    }))
}

fn molien_err(e: MolienError) -> CliError {
    match e {
        MolienError::CapExceeded(_) | MolienError::Exact(_) => compute(e),
        _ => bad_input(e),
    }
}

fn series_json(r: &RatFunc, terms: usize) -> Result<Value, CliError> {
    let mut c = r.taylor(terms).map_err(compute)?;
    c.truncate(terms);
    Ok(json!({ "series": s(r), "coefficients": c.iter().map(s).collect::<Vec<_>>() }))
}

fn semi_json(name: &str, cd: &ClassData, chars: &[Vec<QuadElem>], terms: usize) -> Result<Value, CliError> {
    let (per, total) = semi_molien_series(cd, chars).map_err(molien_err)?;
    let per: Result<Vec<Value>, CliError> = per.iter().map(|r| series_json(r, terms)).collect();
    Ok(json!({ "group": name, "order": cd.order(), "characters": per?, "total": series_json(&total, terms)? }))
}

fn plain_json(name: &str, order: usize, r: &RatFunc, terms: usize) -> Result<Value, CliError> {
    let mut v = series_json(r, terms)?;
    let o = v.as_object_mut().expect("object");
    o.insert("group".into(), Value::String(name.into()));
    o.insert("order".into(), json!(order));
    // keep group first
    let mut out = serde_json::Map::new();
    for k in ["group", "order", "series", "coefficients"] {
        out.insert(k.into(), o[k].clone());
    }
    Ok(Value::Object(out))
}

pub fn molien_preset(name: &str, semi: bool, terms: usize) -> Result<Value, CliError> {
    let pg = preset(name).map_err(molien_err)?;
    if semi {
        return semi_json(&pg.name, &pg.classes, &pg.characters, terms);
    }
    let r = molien_series(&GroupInput::Classes(&pg.classes)).map_err(molien_err)?;
    plain_json(&pg.name, pg.classes.order(), &r, terms)
}

pub fn molien_file(path: &Path, semi: bool, terms: usize, field_d: Option<i64>) -> Result<Value, CliError> {
    let g = input::group_file(&read(path)?)?;
    let mut ctx = input::context(g.field_d.or(field_d));
    let name = path.display().to_string();
    let chars: Option<Vec<Vec<QuadElem>>> = match &g.characters {
        Some(cs) => Some(cs.iter().map(|c| c.iter().map(|x| x.parse(&mut ctx)).collect()).collect::<Result<_, _>>()?),
        None => None,
    };
    if semi && chars.is_none() {
        return Err(bad_input("--semi needs a \"characters\" entry in the group file"));
    }
    if let Some(gens) = &g.generators {
        let dim = g.dimension.ok_or_else(|| bad_input("group file with generators needs \"dimension\""))?;
        let mats = gens
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().map(|x| x.parse(&mut ctx)).collect())
                    .collect::<Result<Vec<Vec<_>>, _>>()
                    .map(Matrix::from_rows)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let spec = MatrixGroupSpec::new(dim, mats).map_err(molien_err)?;
        if let Some(chars) = chars.filter(|_| semi) {
            let (cd, per_class) = class_data_from_group(&spec, DEFAULT_CAP, &chars).map_err(molien_err)?;
            return semi_json(&name, &cd, &per_class, terms);
        }
        let order = enumerate_group(&spec, DEFAULT_CAP).map_err(molien_err)?.len();
        let r = molien_series(&GroupInput::Matrices(&spec)).map_err(molien_err)?;
        return plain_json(&name, order, &r, terms);
    }
    let classes = g.classes.as_ref().expect("checked by group_file");
    let pairs = classes.iter().map(|c| Ok((c.size, c.trace.parse(&mut ctx)?))).collect::<Result<Vec<_>, CliError>>()?;
    let cd = ClassData::from_traces(&pairs);
    if let Some(chars) = chars.filter(|_| semi) {
        return semi_json(&name, &cd, &chars, terms);
    }
    let r = molien_series(&GroupInput::Classes(&cd)).map_err(molien_err)?;
    plain_json(&name, cd.order(), &r, terms)
}

fn tiling_err(e: TilingError) -> CliError {
    match e {
        TilingError::Parse(_) | TilingError::Degenerate(_) | TilingError::LimitTooSmall(_) => bad_input(e),
        _ => compute(e),
    }
}

pub fn tile(signature: &str, limit: Option<usize>, out: Option<&Path>) -> Result<Value, CliError> {
    let sig: TriangleSignature = signature.parse().map_err(tiling_err)?;
    let scene = generate_tiling(&sig, limit.map(Limit::MaxTriangles)).map_err(tiling_err)?;
    if let Some(path) = out {
        std::fs::write(path, emit_svg(&scene, &SvgStyle::default()))
            .map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
    }
    Ok(json!({
        "signature": sig.to_string(),
        "geometry": scene.geometry.name(),
        "triangles": scene.triangles.len(),
        "closed": scene.closed,
        "svg": out.map(|p| p.display().to_string()),
    }))
}

fn cross_json<F: Field + Display>(pts: &[PointP1<F>], value: impl Fn(&F) -> Value) -> Result<Value, CliError> {
    let c = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).map_err(compute)?;
    let points: Vec<Value> = pts.iter().map(s).collect();
    Ok(match c {
        CrossRatio::Infinity => json!({ "points": points, "value": "infinity", "orbit": Value::Null }),
        CrossRatio::Value(v) => {
            let orbit = cross_ratio_orbit(&v).ok();
            json!({
                "points": points,
                "value": value(&v),
                "orbit": orbit.as_ref().map(|o| o.iter().map(&value).collect::<Vec<_>>()),
                "distinctValues": orbit.as_ref().map(|o| distinct_count(o)),
            })
        }
    })
}

pub fn crossratio(points: &[String], float: bool, ctx: &mut ParseContext) -> Result<Value, CliError> {
    if points.len() != 4 {
        return Err(bad_input("crossratio takes exactly four points"));
    }
    if float {
        let pts = points.iter().map(|p| input::p1_float(p)).collect::<Result<Vec<_>, _>>()?;
        cross_json(&pts, |v| json!(v))
    } else {
        let pts = points.iter().map(|p| input::p1_exact(p, ctx)).collect::<Result<Vec<_>, _>>()?;
        cross_json(&pts, s)
    }
}

pub fn eisenstein(k: u32, z: &str, n: u32) -> Result<Value, CliError> {
    let z = parse_complex(z).map_err(bad_input)?;
    let z = UpperHalfPoint::new(z).map_err(bad_input)?;
    let g = eisenstein_sum(k, z, n).map_err(|e| match e {
        ModError::BadWeight(_) => bad_input(e),
        _ => compute(e),
    })?;
    Ok(json!({ "re": g.value.re, "im": g.value.im, "N": g.n, "refinement": g.refinement }))
}
