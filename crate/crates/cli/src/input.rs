//! Parsing of command-line payloads into exact objects.

use num_traits::Zero;
use serde::Deserialize;

use classinv_core::mpoly::{parse_poly_ctx, parse_scalar, ParseContext};
use classinv_core::projgeo::PointP1;
use classinv_core::ternary::cubic_coeffs;
use classinv_core::{BinaryForm, MPoly, QuadElem};

use crate::CliError;

fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

pub fn context(field_d: Option<i64>) -> ParseContext {
    ParseContext { field_d }
}

pub fn scalar(text: &str, ctx: &mut ParseContext) -> Result<QuadElem, CliError> {
    parse_scalar(text, ctx).map_err(|e| input(format!("'{text}': {e}")))
}

/// A nonzero homogeneous polynomial in `x, y`.
pub fn binary_form(text: &str, ctx: &mut ParseContext) -> Result<BinaryForm, CliError> {
    let p = parse_poly_ctx(text, &["x", "y"], &[], ctx).map_err(|e| input(format!("'{text}': {e}")))?;
    if p.is_zero() {
        return Err(input("the zero form has no degree"));
    }
    let d = p
        .homogeneous_degree()
        .filter(|_| p.is_homogeneous())
        .ok_or_else(|| input(format!("'{text}' is not homogeneous")))?;
    BinaryForm::from_mpoly(&p, d as usize).map_err(input)
}

pub fn quartic(text: &str, ctx: &mut ParseContext) -> Result<BinaryForm, CliError> {
    let f = binary_form(text, ctx)?;
    if f.degree() != 4 {
        return Err(input(format!("expected a quartic, got degree {}", f.degree())));
    }
    Ok(f)
}

/// A homogeneous cubic in `x, y, z`.
pub fn ternary_cubic(text: &str, ctx: &mut ParseContext) -> Result<MPoly, CliError> {
    let p = parse_poly_ctx(text, &["x", "y", "z"], &[], ctx).map_err(|e| input(format!("'{text}': {e}")))?;
    cubic_coeffs(&p).map_err(|_| input(format!("'{text}' is not a homogeneous cubic in x, y, z")))?;
    Ok(p)
}

pub fn point3(text: &str, ctx: &mut ParseContext) -> Result<[QuadElem; 3], CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(input(format!("point '{text}' needs three comma-separated coordinates")));
    }
    let mut out: [QuadElem; 3] = std::array::from_fn(|_| QuadElem::zero());
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = scalar(part, ctx)?;
    }
    if out.iter().all(|c| c.is_zero()) {
        return Err(input("the zero vector is not a projective point"));
    }
    Ok(out)
}

fn is_infinity(t: &str) -> bool {
    matches!(t.trim(), "inf" | "infinity" | "∞")
}

/// `[p0 : p1]` split into its two halves.
fn bracket_parts(t: &str) -> Option<(&str, &str)> {
    let inner = t.trim().strip_prefix('[')?.strip_suffix(']')?;
    inner.split_once(':')
}

pub fn p1_exact(text: &str, ctx: &mut ParseContext) -> Result<PointP1<QuadElem>, CliError> {
    if is_infinity(text) {
        return Ok(PointP1::infinity());
    }
    match bracket_parts(text) {
        Some((a, b)) => PointP1::new(scalar(a, ctx)?, scalar(b, ctx)?).map_err(|e| input(format!("'{text}': {e}"))),
        None => Ok(PointP1::affine(scalar(text, ctx)?)),
    }
}

pub fn p1_float(text: &str) -> Result<PointP1<f64>, CliError> {
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| input(format!("'{s}' is not a number")));
    if is_infinity(text) {
        return Ok(PointP1::infinity());
    }
    match bracket_parts(text) {
        Some((a, b)) => PointP1::new(num(a)?, num(b)?).map_err(|e| input(format!("'{text}': {e}"))),
        None => Ok(PointP1::affine(num(text)?)),
    }
}

/// A JSON scalar: an integer or a string in the expression grammar.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Int(i64),
    Text(String),
}

impl JsonScalar {
    pub fn parse(&self, ctx: &mut ParseContext) -> Result<QuadElem, CliError> {
        match self {
            JsonScalar::Int(n) => Ok(QuadElem::from_int(*n)),
            JsonScalar::Text(s) => scalar(s, ctx),
        }
    }
}

pub fn matrix_rows(text: &str, ctx: &mut ParseContext) -> Result<Vec<Vec<QuadElem>>, CliError> {
    let rows: Vec<Vec<JsonScalar>> = serde_json::from_str(text).map_err(|e| input(format!("matrix JSON: {e}")))?;
    rows.iter().map(|r| r.iter().map(|x| x.parse(ctx)).collect()).collect()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassEntry {
    pub size: usize,
    pub trace: JsonScalar,
}

/// Group file: either generators or class data, plus optional characters
/// (values per generator, or per class).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub dimension: Option<usize>,
    pub field_d: Option<i64>,
    pub generators: Option<Vec<Vec<Vec<JsonScalar>>>>,
    pub classes: Option<Vec<ClassEntry>>,
    pub characters: Option<Vec<Vec<JsonScalar>>>,
}

pub fn group_file(text: &str) -> Result<GroupFile, CliError> {
    let g: GroupFile = serde_json::from_str(text).map_err(|e| input(format!("group file: {e}")))?;
    match (&g.generators, &g.classes) {
        (Some(_), None) | (None, Some(_)) => Ok(g),
        _ => Err(input("group file needs exactly one of \"generators\" and \"classes\"")),
    }
}
