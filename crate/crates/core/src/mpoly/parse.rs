//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := rational | 'i' | 'sqrt' '(' integer ')' | variable | '(' expr ')'
//! ```
//!
//! A leading sign is accepted in front of an expression or a base.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::MPoly;
use crate::exactnum::{squarefree_part, QuadElem, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    FieldMismatch { active: i64, found: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub pos: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error at position {}: {m}", self.pos),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable '{v}' at position {}", self.pos),
            ParseErrorKind::FieldMismatch { active, found } => {
                write!(f, "sqrt({found}) at position {} does not live in the active field sqrt({active})", self.pos)
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Active quadratic field. `None` until the first `i`/`sqrt` fixes it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseContext {
    pub field_d: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = vec![];
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*^/()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError { kind: ParseErrorKind::Syntax(format!("unexpected character '{c}'")), pos: i });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    vars: &'a [&'a str],
    bindings: &'a [(&'a str, QuadElem)],
    ctx: &'a mut ParseContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { kind: ParseErrorKind::Syntax(msg.into()), pos: self.pos() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let pos = self.pos();
            let f = self.factor()?;
            acc = self.checked(pos, acc.try_mul(&f).map_err(|_| ()))?;
        }
        Ok(acc)
    }

    fn checked(&self, pos: usize, r: Result<MPoly, ()>) -> Result<MPoly, ParseError> {
        r.map_err(|_| ParseError { kind: ParseErrorKind::Syntax("arity mismatch".into()), pos })
    }

    fn factor(&mut self) -> Result<MPoly, ParseError> {
        let b = self.base()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.at += 1;
                    let Some(k) = k.to_u32() else {
                        return self.err("exponent too large");
                    };
                    Ok(b.pow(k))
                }
                _ => self.err("expected natural exponent"),
            }
        } else {
            Ok(b)
        }
    }

    fn adopt_field(&mut self, d: i64, pos: usize) -> Result<(), ParseError> {
        if d == 1 {
            return Ok(());
        }
        match self.ctx.field_d {
            Some(active) if active != 1 && active != d => {
                Err(ParseError { kind: ParseErrorKind::FieldMismatch { active, found: d }, pos })
            }
            Some(1) => Err(ParseError { kind: ParseErrorKind::FieldMismatch { active: 1, found: d }, pos }),
            _ => {
                self.ctx.field_d = Some(d);
                Ok(())
            }
        }
    }

    fn base(&mut self) -> Result<MPoly, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Sym('-')) => {
                self.at += 1;
                Ok(-self.base()?)
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Int(n)) => {
                self.at += 1;
                let mut q = Rational::from_integer(n);
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.at += 1;
                            q /= Rational::from_integer(d);
                        }
                        _ => return self.err("expected nonzero natural denominator"),
                    }
                }
                Ok(MPoly::constant(self.n(), QuadElem::rational(q)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "sqrt" {
                    self.expect('(')?;
                    let neg = self.eat('-');
                    let Some(Tok::Int(n)) = self.peek().cloned() else {
                        return self.err("expected integer under sqrt");
                    };
                    self.at += 1;
                    self.expect(')')?;
                    let Some(mut n) = n.to_i64() else {
                        return Err(ParseError { kind: ParseErrorKind::Syntax("radicand too large".into()), pos });
                    };
                    if neg {
                        n = -n;
                    }
                    let d = if n == 0 { 1 } else { squarefree_part(&Rational::from_integer(BigInt::from(n))) };
                    self.adopt_field(d, pos)?;
                    return Ok(MPoly::constant(self.n(), QuadElem::sqrt_of(n)));
                }
                if name == "i" && !self.vars.contains(&"i") {
                    self.adopt_field(-1, pos)?;
                    return Ok(MPoly::constant(self.n(), QuadElem::i()));
                }
                if let Some(k) = self.vars.iter().position(|v| *v == name) {
                    return Ok(MPoly::var(self.n(), k));
                }
                if let Some((_, c)) = self.bindings.iter().find(|(b, _)| *b == name) {
                    return Ok(MPoly::constant(self.n(), c.clone()));
                }
                Err(ParseError { kind: ParseErrorKind::UnknownVariable(name), pos })
            }
            Some(Tok::Sym(c)) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_poly_ctx(
    text: &str,
    vars: &[&str],
    bindings: &[(&str, QuadElem)],
    ctx: &mut ParseContext,
) -> Result<MPoly, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), vars, bindings, ctx };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

pub fn parse_poly_with(text: &str, vars: &[&str], bindings: &[(&str, QuadElem)]) -> Result<MPoly, ParseError> {
    parse_poly_ctx(text, vars, bindings, &mut ParseContext::default())
}

pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MPoly, ParseError> {
    parse_poly_with(text, vars, &[])
}

/// Parses a constant such as `1/2 - 3/4*sqrt(5)`.
pub fn parse_scalar(text: &str, ctx: &mut ParseContext) -> Result<QuadElem, ParseError> {
    let p = parse_poly_ctx(text, &[], &[], ctx)?;
    Ok(p.constant_value().unwrap_or_else(QuadElem::one))
}

impl std::str::FromStr for QuadElem {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s, &mut ParseContext::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil_member_with_binding() {
        let t = QuadElem::from_frac(1, 3);
        let f = parse_poly_with("x^4 + 6*t*x^2*y^2 + y^4", &["x", "y"], &[("t", t)]).unwrap();
        assert_eq!(f, parse_poly("x^4 + 2*x^2*y^2 + y^4", &["x", "y"]).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_poly("x^2 + q", &["x", "y"]).unwrap_err();
        assert_eq!(e, ParseError { kind: ParseErrorKind::UnknownVariable("q".into()), pos: 6 });
        let e = parse_poly("2x", &["x"]).unwrap_err();
        assert_eq!(e.pos, 1);
        let e = parse_poly("(x + y", &["x", "y"]).unwrap_err();
        assert_eq!(e.pos, 6);
    }

    #[test]
    fn field_context() {
        let mut ctx = ParseContext { field_d: Some(-3) };
        assert!(parse_poly_ctx("sqrt(-3)*x", &["x"], &[], &mut ctx).is_ok());
        assert!(parse_poly_ctx("sqrt(-12)*x", &["x"], &[], &mut ctx).is_ok());
        let e = parse_poly_ctx("i*x", &["x"], &[], &mut ctx).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::FieldMismatch { active: -3, found: -1 }));
        let mut free = ParseContext::default();
        parse_poly_ctx("sqrt(2) + sqrt(8)", &[], &[], &mut free).unwrap();
        assert_eq!(free.field_d, Some(2));
        assert!(parse_poly_ctx("sqrt(3)", &[], &[], &mut free).is_err());
    }

    #[test]
    fn scalar_round_trip() {
        let x: QuadElem = "1/4 - 3/2*sqrt(-3)".parse().unwrap();
        let back: QuadElem = x.to_string().parse().unwrap();
        assert_eq!(x, back);
    }
}
