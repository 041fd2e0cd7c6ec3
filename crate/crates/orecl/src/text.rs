//! Text and JSON input/output for polynomials, operators and extended-ring
//! elements.
//!
//! The surface syntax is ordinary arithmetic with explicit `*`:
//!
//! ```text
//! (x+1)*Sn^2 - 3*Sn + x            an operator in the shift algebra
//! y[1,0]*y[2,1] - y[1,1]*y[2,0]    an extended-ring element (a Wronskian)
//! 3*t^2+1                          a GF(p)[t] scalar
//! ```
//!
//! `x` (alias `n`) is the base variable, `t` the finite-field parameter,
//! `Dx`/`Sn`/`Dn` (alias `D`) the operator variable, and `y[i,j]` (with
//! 1-based component `i`) the formal derivatives.  Operators are also
//! exchanged as JSON objects `{"algebra": ..., "coeffs": [[..], ..]}`
//! where `coeffs[i][k]` is the scalar coefficient of `x^k D^i` as a
//! string.

use crate::algebra::Algebra;
use crate::domain::{Coeff, DomainKind};
use crate::error::{Error, Result};
use crate::gf::GfPoly;
use crate::mpoly::{MPoly, Monomial};
use crate::op::OreOperator;
use crate::poly::UniPoly;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;

// ---------------------------------------------------------------------------
// formatting

/// Whether a rendered subexpression must be parenthesized when it is
/// attached to a variable power (i.e. whether it is a sum).
fn needs_parens(s: &str) -> bool {
    s.chars().skip(1).any(|ch| ch == '+' || ch == '-')
}

/// Join signed term strings.  Polynomial coefficients are rendered tight
/// (`x^2+2*x+1`) so that they read as one unit inside parentheses;
/// operator- and y-level sums are spaced (`... - 3*Sn + x`).
fn join_terms(f: &mut fmt::Formatter<'_>, terms: &[String], spaced: bool) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    let (plus, minus) = if spaced { (" + ", " - ") } else { ("+", "-") };
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            f.write_str(t)?;
        } else if let Some(rest) = t.strip_prefix('-') {
            write!(f, "{minus}{rest}")?;
        } else {
            write!(f, "{plus}{t}")?;
        }
    }
    Ok(())
}

/// One rendered term `coeff * var_power`, with the conventional
/// simplifications for coefficients `1` and `-1`.
fn term_string(coeff: &str, var: &str) -> String {
    if var.is_empty() {
        return coeff.to_string();
    }
    match coeff {
        "1" => var.to_string(),
        "-1" => format!("-{var}"),
        c if needs_parens(c) => format!("({c})*{var}"),
        c => format!("{c}*{var}"),
    }
}

fn power_string(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

pub(crate) fn fmt_poly<C: Coeff>(p: &UniPoly<C>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut terms = Vec::new();
    for k in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[k];
        if c.is_zero() {
            continue;
        }
        terms.push(term_string(&c.to_string(), &power_string("x", k)));
    }
    join_terms(f, &terms, false)
}

pub(crate) fn fmt_op<C: Coeff>(op: &OreOperator<C>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let dv = op.algebra.dvar();
    let mut terms = Vec::new();
    for i in (0..op.coeffs().len()).rev() {
        let p = &op.coeffs()[i];
        if p.is_zero() {
            continue;
        }
        terms.push(term_string(&p.to_string(), &power_string(dv, i)));
    }
    join_terms(f, &terms, true)
}

pub(crate) fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if m.is_one() {
        return f.write_str("1");
    }
    let parts: Vec<String> = m
        .vars()
        .iter()
        .map(|&((c, d), e)| {
            let v = format!("y[{},{}]", c + 1, d);
            if e == 1 {
                v
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    f.write_str(&parts.join("*"))
}

pub(crate) fn fmt_mpoly<C: Coeff>(p: &MPoly<C>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // highest total degree first, then the natural monomial order
    let mut entries: Vec<_> = p.terms().collect();
    entries.sort_by(|(m1, _), (m2, _)| {
        m2.total_deg().cmp(&m1.total_deg()).then(m1.cmp(m2))
    });
    let mut terms = Vec::new();
    for (m, c) in entries {
        let ms = if m.is_one() { String::new() } else { m.to_string() };
        terms.push(term_string(&c.to_string(), &ms));
    }
    join_terms(f, &terms, true)
}

// ---------------------------------------------------------------------------
// scalar atoms

/// Scalars that the parser can build: integers plus any ring-specific named
/// atoms (`t` over `GF(p)[t]`).
pub trait TextScalar: Coeff {
    fn named_atom(name: &str, kind: DomainKind) -> Option<Self>;
}

impl TextScalar for BigInt {
    fn named_atom(_name: &str, _kind: DomainKind) -> Option<Self> {
        None
    }
}

impl TextScalar for GfPoly {
    fn named_atom(name: &str, kind: DomainKind) -> Option<Self> {
        match (name, kind) {
            ("t", DomainKind::Gf { p }) => Some(GfPoly::t(p)),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LPar,
    RPar,
    LBrack,
    RBrack,
    Comma,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => { out.push(Tok::Plus); i += 1; }
            '-' => { out.push(Tok::Minus); i += 1; }
            '*' => { out.push(Tok::Star); i += 1; }
            '^' => { out.push(Tok::Caret); i += 1; }
            '(' => { out.push(Tok::LPar); i += 1; }
            ')' => { out.push(Tok::RPar); i += 1; }
            '[' => { out.push(Tok::LBrack); i += 1; }
            ']' => { out.push(Tok::RBrack); i += 1; }
            ',' => { out.push(Tok::Comma); i += 1; }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let n = lit
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad integer literal `{lit}`")))?;
                out.push(Tok::Num(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// parser

/// Intermediate value: an operator (scalars and base-ring polynomials are
/// order-0 operators) or an extended-ring element.
enum Val<C: Coeff> {
    Op(OreOperator<C>),
    M(MPoly<C>),
}

impl<C: Coeff> Val<C> {
    fn as_mpoly(self) -> Result<MPoly<C>> {
        match self {
            Val::M(m) => Ok(m),
            Val::Op(op) if op.ord() <= 0 => Ok(MPoly::from_poly(op.coeff(0))),
            Val::Op(_) => Err(Error::Parse(
                "operator and y-expressions cannot be mixed".into(),
            )),
        }
    }

    fn add(self, rhs: Val<C>) -> Result<Val<C>> {
        match (self, rhs) {
            (Val::Op(a), Val::Op(b)) => Ok(Val::Op(a.add(&b))),
            (a, b) => Ok(Val::M(a.as_mpoly()?.add(&b.as_mpoly()?))),
        }
    }

    fn mul(self, rhs: Val<C>) -> Result<Val<C>> {
        match (self, rhs) {
            (Val::Op(a), Val::Op(b)) => Ok(Val::Op(a.op_mul(&b))),
            (a, b) => Ok(Val::M(a.as_mpoly()?.mul(&b.as_mpoly()?))),
        }
    }

    fn neg(self) -> Val<C> {
        match self {
            Val::Op(a) => Val::Op(a.neg()),
            Val::M(a) => Val::M(a.neg()),
        }
    }

    fn pow(self, n: u32) -> Result<Val<C>> {
        match self {
            Val::Op(a) => Ok(Val::Op(a.op_pow(n))),
            Val::M(a) => Ok(Val::M(a.pow(n))),
        }
    }
}

struct Parser<C: TextScalar> {
    toks: Vec<Tok>,
    pos: usize,
    algebra: Algebra,
    kind: DomainKind,
    allow_d: bool,
    allow_y: bool,
    _marker: std::marker::PhantomData<C>,
}

impl<C: TextScalar> Parser<C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expect_small_num(&mut self) -> Result<u32> {
        match self.next() {
            Some(Tok::Num(n)) => n
                .to_u32()
                .ok_or_else(|| Error::Parse(format!("number out of range: {n}"))),
            got => Err(Error::Parse(format!("expected a number, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Val<C>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.add(self.term()?.neg())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Val<C>> {
        let mut acc = self.unary()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            acc = acc.mul(self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Val<C>> {
        let mut negate = false;
        while matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            negate = !negate;
        }
        let v = self.power()?;
        Ok(if negate { v.neg() } else { v })
    }

    fn power(&mut self) -> Result<Val<C>> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let e = self.expect_small_num()?;
            if e > 1_000_000 {
                return Err(Error::Parse(format!("exponent too large: {e}")));
            }
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Val<C>> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Val::Op(OreOperator::from_poly(
                self.algebra,
                UniPoly::constant(C::from_int(&n, self.kind)),
            ))),
            Some(Tok::LPar) => {
                let v = self.expr()?;
                self.expect(Tok::RPar)?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => self.ident(&name),
            got => Err(Error::Parse(format!("expected a value, found {got:?}"))),
        }
    }

    fn ident(&mut self, name: &str) -> Result<Val<C>> {
        match name {
            "x" | "n" => Ok(Val::Op(OreOperator::from_poly(self.algebra, UniPoly::x()))),
            "y" => {
                if !self.allow_y {
                    return Err(Error::Parse(
                        "y-variables are not allowed in this context".into(),
                    ));
                }
                self.expect(Tok::LBrack)?;
                let comp = self.expect_small_num()?;
                self.expect(Tok::Comma)?;
                let der = self.expect_small_num()?;
                self.expect(Tok::RBrack)?;
                if comp == 0 {
                    return Err(Error::Parse("y components are numbered from 1".into()));
                }
                Ok(Val::M(MPoly::var(comp - 1, der)))
            }
            "D" | "Dx" | "Sn" | "Dn" => {
                if !self.allow_d {
                    return Err(Error::Parse(
                        "operator symbols are not allowed in this context".into(),
                    ));
                }
                if name != "D" && name != self.algebra.dvar() {
                    return Err(Error::Parse(format!(
                        "operator symbol `{name}` does not match algebra `{}`",
                        self.algebra
                    )));
                }
                Ok(Val::Op(OreOperator::d(self.algebra)))
            }
            other => match C::named_atom(other, self.kind) {
                Some(c) => Ok(Val::Op(OreOperator::from_poly(
                    self.algebra,
                    UniPoly::constant(c),
                ))),
                None => Err(Error::Parse(format!("unknown symbol `{other}`"))),
            },
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            return Err(Error::Parse(format!(
                "trailing input at token {:?} (multiplication must be written with `*`)",
                self.toks[self.pos]
            )));
        }
        Ok(())
    }
}

fn run_parser<C: TextScalar>(
    s: &str,
    algebra: Algebra,
    kind: DomainKind,
    allow_d: bool,
    allow_y: bool,
) -> Result<Val<C>> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut p = Parser::<C> {
        toks,
        pos: 0,
        algebra,
        kind,
        allow_d,
        allow_y,
        _marker: std::marker::PhantomData,
    };
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parse an operator such as `(x+1)*Sn^2 - 3*Sn + x`.
pub fn parse_op<C: TextScalar>(
    s: &str,
    algebra: Algebra,
    kind: DomainKind,
) -> Result<OreOperator<C>> {
    match run_parser::<C>(s, algebra, kind, true, false)? {
        Val::Op(op) => Ok(op),
        Val::M(_) => unreachable!("y disallowed"),
    }
}

/// Parse a base-ring polynomial such as `x^2 + 2*x + 1`.
pub fn parse_poly<C: TextScalar>(s: &str, kind: DomainKind) -> Result<UniPoly<C>> {
    match run_parser::<C>(s, Algebra::Shift, kind, false, false)? {
        Val::Op(op) => Ok(op.coeff(0)),
        Val::M(_) => unreachable!("y disallowed"),
    }
}

/// Parse a scalar (an `x`-free polynomial) such as `3*t^2+1`.
pub fn parse_scalar<C: TextScalar>(s: &str, kind: DomainKind) -> Result<C> {
    let p = parse_poly::<C>(s, kind)?;
    if p.deg() > 0 {
        return Err(Error::Parse(format!("expected a scalar, got `{p}`")));
    }
    Ok(p.coeff(0))
}

/// Parse an extended-ring element such as `y[1,0]*y[2,1] - y[1,1]*y[2,0]`.
pub fn parse_mpoly<C: TextScalar>(s: &str, kind: DomainKind) -> Result<MPoly<C>> {
    run_parser::<C>(s, Algebra::Shift, kind, false, true)?.as_mpoly()
}

// ---------------------------------------------------------------------------
// JSON

/// Serialize an operator as `{"algebra": ..., "coeffs": [[..], ..]}` with
/// scalar coefficients rendered as strings.
pub fn op_to_json<C: Coeff>(op: &OreOperator<C>) -> serde_json::Value {
    let coeffs: Vec<Vec<String>> = op
        .coeffs()
        .iter()
        .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
        .collect();
    serde_json::json!({ "algebra": op.algebra.to_string(), "coeffs": coeffs })
}

/// Parse the JSON operator format produced by [`op_to_json`].  Scalar
/// entries may be strings in the scalar syntax or plain JSON integers.
pub fn op_from_json<C: TextScalar>(
    v: &serde_json::Value,
    kind: DomainKind,
) -> Result<OreOperator<C>> {
    let alg: Algebra = v
        .get("algebra")
        .and_then(|a| a.as_str())
        .ok_or_else(|| Error::Parse("missing `algebra` field".into()))?
        .parse()?;
    let coeffs = v
        .get("coeffs")
        .and_then(|c| c.as_array())
        .ok_or_else(|| Error::Parse("missing `coeffs` array".into()))?;
    let mut polys = Vec::with_capacity(coeffs.len());
    for row in coeffs {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("`coeffs` must be an array of arrays".into()))?;
        let mut scalars = Vec::with_capacity(row.len());
        for entry in row {
            let c = match entry {
                serde_json::Value::String(s) => parse_scalar::<C>(s, kind)?,
                serde_json::Value::Number(n) => parse_scalar::<C>(&n.to_string(), kind)?,
                other => {
                    return Err(Error::Parse(format!("bad coefficient entry {other}")));
                }
            };
            scalars.push(c);
        }
        polys.push(UniPoly::new(scalars));
    }
    Ok(OreOperator::new(alg, polys))
}
