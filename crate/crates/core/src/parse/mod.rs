//! Text syntax for ring elements.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := "-"? base ("^" nat)?
//! base   := nat | nat "/" nat | "i" | "x" | "y" | "(" expr ")"
//! ```
//!
//! Whitespace is ignored, input is ASCII, multiplication is always explicit.
//! Error positions are byte offsets into the input.

pub(crate) mod lexer;

use num_bigint::BigInt;
use thiserror::Error;

use crate::numeric::{GaussianRational, Rational};
use crate::ring::{CoefficientDomain, Ring, RingElement, RingError};
use lexer::{Cursor, Tok};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown symbol {symbol:?} at byte {position}")]
    UnknownSymbol { symbol: String, position: usize },
    #[error("negative exponent at byte {position}")]
    NegativeExponent { position: usize },
    #[error("zero denominator at byte {position}")]
    ZeroDenominator { position: usize },
    #[error("exponent too large at byte {position}")]
    ExponentTooLarge { position: usize },
    #[error("at byte {position}: {source}")]
    Ring { position: usize, source: RingError },
    #[error("unbound variable {name:?} at byte {position}")]
    UnboundVariable { name: String, position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::UnknownSymbol { position, .. }
            | ParseError::NegativeExponent { position }
            | ParseError::ZeroDenominator { position }
            | ParseError::ExponentTooLarge { position }
            | ParseError::Ring { position, .. }
            | ParseError::UnboundVariable { position, .. } => *position,
        }
    }
}

/// Parsed element expression, before evaluation in a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementExpr {
    Int(BigInt),
    /// `n/d` literal and its byte offset.
    Ratio(BigInt, BigInt, usize),
    ImaginaryUnit(usize),
    /// `x` or `y`, with its byte offset.
    Symbol(String, usize),
    Add(Box<ElementExpr>, Box<ElementExpr>),
    Sub(Box<ElementExpr>, Box<ElementExpr>),
    Mul(Box<ElementExpr>, Box<ElementExpr>),
    Neg(Box<ElementExpr>),
    Pow(Box<ElementExpr>, u32),
}

/// Parses `text` and evaluates it in `ring`.
pub fn parse_element(text: &str, ring: &Ring) -> Result<RingElement, ParseError> {
    let expr = parse_element_expr(text)?;
    eval_expr(&expr, ring)
}

/// Parses `text` into an [`ElementExpr`] without choosing a ring.
pub fn parse_element_expr(text: &str) -> Result<ElementExpr, ParseError> {
    let mut cur = Cursor::new(text)?;
    let e = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("expected operator or end of input"));
    }
    Ok(e)
}

/// Parses a scalar such as `2`, `-1/3` or `1+2*i`.
pub fn parse_scalar(text: &str) -> Result<GaussianRational, ParseError> {
    let ring = Ring::gauss_poly();
    let e = parse_element(text, &ring)?;
    e.constant_value().ok_or_else(|| ParseError::Syntax {
        position: 0,
        message: format!("{text:?} is not a scalar"),
    })
}

fn expr(cur: &mut Cursor) -> Result<ElementExpr, ParseError> {
    let mut lhs = term(cur)?;
    loop {
        if cur.eat(&Tok::Plus) {
            lhs = ElementExpr::Add(Box::new(lhs), Box::new(term(cur)?));
        } else if cur.eat(&Tok::Minus) {
            lhs = ElementExpr::Sub(Box::new(lhs), Box::new(term(cur)?));
        } else {
            return Ok(lhs);
        }
    }
}

fn term(cur: &mut Cursor) -> Result<ElementExpr, ParseError> {
    let mut lhs = factor(cur)?;
    while cur.eat(&Tok::Star) {
        lhs = ElementExpr::Mul(Box::new(lhs), Box::new(factor(cur)?));
    }
    Ok(lhs)
}

fn factor(cur: &mut Cursor) -> Result<ElementExpr, ParseError> {
    let neg = cur.eat(&Tok::Minus);
    let mut e = base(cur)?;
    if cur.eat(&Tok::Caret) {
        e = ElementExpr::Pow(Box::new(e), exponent(cur)?);
    }
    Ok(if neg { ElementExpr::Neg(Box::new(e)) } else { e })
}

pub(crate) fn exponent(cur: &mut Cursor) -> Result<u32, ParseError> {
    let pos = cur.pos();
    match cur.peek() {
        Some(Tok::Minus) => Err(ParseError::NegativeExponent { position: pos }),
        Some(Tok::Nat(n)) => {
            let n = u32::try_from(n).map_err(|_| ParseError::ExponentTooLarge { position: pos })?;
            cur.bump();
            Ok(n)
        }
        _ => Err(cur.error("expected a nonnegative integer exponent")),
    }
}

fn base(cur: &mut Cursor) -> Result<ElementExpr, ParseError> {
    let pos = cur.pos();
    match cur.peek() {
        Some(Tok::Nat(_)) => {
            let Some(Tok::Nat(n)) = cur.bump() else { unreachable!() };
            if !cur.eat(&Tok::Slash) {
                return Ok(ElementExpr::Int(n));
            }
            let dpos = cur.pos();
            match cur.peek() {
                Some(Tok::Nat(d)) if d == &BigInt::from(0) => Err(ParseError::ZeroDenominator { position: dpos }),
                Some(Tok::Nat(d)) => {
                    let d = d.clone();
                    cur.bump();
                    Ok(ElementExpr::Ratio(n, d, pos))
                }
                _ => Err(cur.error("expected a natural-number denominator")),
            }
        }
        Some(Tok::Ident(s)) => {
            let s = s.clone();
            cur.bump();
            match s.as_str() {
                "i" => Ok(ElementExpr::ImaginaryUnit(pos)),
                "x" | "y" => Ok(ElementExpr::Symbol(s, pos)),
                _ => Err(ParseError::UnknownSymbol { symbol: s, position: pos }),
            }
        }
        Some(Tok::LParen) => {
            cur.bump();
            let e = expr(cur)?;
            cur.expect(&Tok::RParen, "')'")?;
            Ok(e)
        }
        _ => Err(cur.error("expected a number, i, x, y or '('")),
    }
}

/// Evaluates an expression in `ring`, reporting symbols the ring lacks.
pub fn eval_expr(e: &ElementExpr, ring: &Ring) -> Result<RingElement, ParseError> {
    let ring_err = |source| ParseError::Ring { position: 0, source };
    Ok(match e {
        ElementExpr::Int(n) => ring.embed_integer(n.clone()),
        ElementExpr::Ratio(n, d, pos) => {
            let r = Rational::new(n.clone(), d.clone()).map_err(|_| ParseError::ZeroDenominator { position: *pos })?;
            ring.constant(r.into()).map_err(|source| ParseError::Ring { position: *pos, source })?
        }
        ElementExpr::ImaginaryUnit(pos) => {
            if ring.coefficients() != CoefficientDomain::GaussianRational {
                return Err(ParseError::UnknownSymbol { symbol: "i".into(), position: *pos });
            }
            ring.constant(GaussianRational::i()).map_err(|source| ParseError::Ring { position: *pos, source })?
        }
        ElementExpr::Symbol(s, pos) => ring
            .generator(s)
            .map_err(|_| ParseError::UnknownSymbol { symbol: s.clone(), position: *pos })?,
        ElementExpr::Add(a, b) => eval_expr(a, ring)?.add(&eval_expr(b, ring)?).map_err(ring_err)?,
        ElementExpr::Sub(a, b) => eval_expr(a, ring)?.sub(&eval_expr(b, ring)?).map_err(ring_err)?,
        ElementExpr::Mul(a, b) => eval_expr(a, ring)?.mul(&eval_expr(b, ring)?).map_err(ring_err)?,
        ElementExpr::Neg(a) => eval_expr(a, ring)?.neg(),
        ElementExpr::Pow(a, n) => eval_expr(a, ring)?.pow(*n),
    })
}

#[cfg(test)]
mod tests;
