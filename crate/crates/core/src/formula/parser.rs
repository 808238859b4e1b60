//! Text syntax for formulas.
//!
//! ```text
//! formula     := implication
//! implication := disjunction ("->" implication)?
//! disjunction := conjunction ("|" conjunction)*
//! conjunction := unary ("&" unary)*
//! unary       := "!" unary | quantifier | primary
//! quantifier  := ("exists" | "forall") ident "in" domain "." formula
//! domain      := "frag" | "pow" "(" ident "," nat ")"
//!              | ("quot" | "quotR") "(" term "," term ")" | ident
//! primary     := term ("=" | "|" | "|R") term | term "in" ident | "(" formula ")"
//! term        := factor (("+" | "-") factor)* ...   (element grammar over names)
//! ```
//!
//! A name bound by an enclosing quantifier becomes [`Term::Var`], any other
//! name [`Term::Param`]. A `|` directly after a term is divisibility; between
//! formulas it is disjunction.

use super::ast::{DomainSpec, Formula, Quantifier, Term};
use crate::divisibility::Side;
use crate::parse::lexer::{Cursor, Tok};
use crate::parse::{exponent, ParseError};

const KEYWORDS: &[&str] = &["exists", "forall", "in", "frag", "pow", "quot", "quotR"];

/// Parses a formula; free names become parameters.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    run(text, None)
}

/// Parses a formula whose free names must all appear in `allowed`.
pub fn parse_formula_with_params(text: &str, allowed: &[&str]) -> Result<Formula, ParseError> {
    run(text, Some(allowed))
}

fn run(text: &str, allowed: Option<&[&str]>) -> Result<Formula, ParseError> {
    let mut p = Parser { cur: Cursor::new(text)?, bound: Vec::new(), allowed, unbound: None };
    let f = p.formula()?;
    if !p.cur.at_end() {
        return Err(p.cur.error("expected connective or end of input"));
    }
    if let Some((name, position)) = p.unbound {
        return Err(ParseError::UnboundVariable { name, position });
    }
    Ok(f)
}

struct Parser<'a> {
    cur: Cursor,
    bound: Vec<String>,
    allowed: Option<&'a [&'a str]>,
    unbound: Option<(String, usize)>,
}

fn flatten(first: Formula, rest: Vec<Formula>, and: bool) -> Formula {
    if rest.is_empty() {
        return first;
    }
    let mut all = vec![first];
    all.extend(rest);
    if and {
        Formula::And(all)
    } else {
        Formula::Or(all)
    }
}

impl<'a> Parser<'a> {
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.cur.eat(&Tok::Arrow) {
            return Ok(Formula::implies(lhs, self.formula()?));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let first = self.conjunction()?;
        let mut rest = Vec::new();
        while self.cur.eat(&Tok::Pipe) {
            rest.push(self.conjunction()?);
        }
        Ok(flatten(first, rest, false))
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let first = self.unary()?;
        let mut rest = Vec::new();
        while self.cur.eat(&Tok::Amp) {
            rest.push(self.unary()?);
        }
        Ok(flatten(first, rest, true))
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.cur.eat(&Tok::Bang) {
            return Ok(Formula::not(self.unary()?));
        }
        match self.cur.peek() {
            Some(Tok::Ident(k)) if k == "exists" || k == "forall" => self.quantifier(),
            _ => self.primary(),
        }
    }

    fn quantifier(&mut self) -> Result<Formula, ParseError> {
        let Some(Tok::Ident(kw)) = self.cur.bump() else { unreachable!() };
        let var = self.binder()?;
        self.keyword("in")?;
        let domain = self.domain()?;
        self.cur.expect(&Tok::Dot, "'.' after quantifier domain")?;
        self.bound.push(var.clone());
        let body = self.formula();
        self.bound.pop();
        let q = Quantifier { var, domain, hint: None, exhaustive: false, body: Box::new(body?) };
        Ok(if kw == "exists" { Formula::Exists(q) } else { Formula::Forall(q) })
    }

    fn binder(&mut self) -> Result<String, ParseError> {
        match self.cur.peek() {
            Some(Tok::Ident(n)) if !KEYWORDS.contains(&n.as_str()) => {
                let n = n.clone();
                self.cur.bump();
                Ok(n)
            }
            _ => Err(self.cur.error("expected a variable name")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.cur.peek() {
            Some(Tok::Ident(k)) if k == kw => {
                self.cur.bump();
                Ok(())
            }
            _ => Err(self.cur.error(format!("expected '{kw}'"))),
        }
    }

    fn domain(&mut self) -> Result<DomainSpec, ParseError> {
        let Some(Tok::Ident(name)) = self.cur.peek().cloned() else {
            return Err(self.cur.error("expected a quantifier domain"));
        };
        match name.as_str() {
            "frag" => {
                self.cur.bump();
                Ok(DomainSpec::Fragment(None))
            }
            "pow" => {
                self.cur.bump();
                self.cur.expect(&Tok::LParen, "'('")?;
                let pos = self.cur.pos();
                let param = self.binder()?;
                self.note_name(&param, pos);
                self.cur.expect(&Tok::Comma, "','")?;
                let max_exp = exponent(&mut self.cur)?;
                self.cur.expect(&Tok::RParen, "')'")?;
                Ok(DomainSpec::PowersOfParam { param, max_exp })
            }
            "quot" | "quotR" => {
                self.cur.bump();
                self.cur.expect(&Tok::LParen, "'('")?;
                let dividend = self.term()?;
                self.cur.expect(&Tok::Comma, "','")?;
                let divisor = self.term()?;
                self.cur.expect(&Tok::RParen, "')'")?;
                let side = if name == "quot" { Side::Left } else { Side::Right };
                Ok(DomainSpec::ExactQuotient { dividend, divisor, side })
            }
            _ if KEYWORDS.contains(&name.as_str()) => Err(self.cur.error("expected a quantifier domain")),
            _ => {
                self.cur.bump();
                Ok(DomainSpec::NamedSet { set: name, fragment: None })
            }
        }
    }

    /// Tries an atom first; on failure rewinds and tries a parenthesized
    /// formula, reporting whichever attempt got further.
    fn primary(&mut self) -> Result<Formula, ParseError> {
        let mark = self.cur.mark();
        let unbound = self.unbound.clone();
        let atom_err = match self.atom() {
            Ok(f) => return Ok(f),
            Err(e) => e,
        };
        self.cur.reset(mark);
        self.unbound = unbound;
        if !self.cur.eat(&Tok::LParen) {
            return Err(atom_err);
        }
        let inner = self.formula().and_then(|f| {
            self.cur.expect(&Tok::RParen, "')'")?;
            Ok(f)
        });
        match inner {
            Ok(f) => Ok(f),
            Err(e) if e.position() >= atom_err.position() => Err(e),
            Err(_) => Err(atom_err),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.term()?;
        match self.cur.peek() {
            Some(Tok::Eq) => {
                self.cur.bump();
                Ok(Formula::eq(lhs, self.term()?))
            }
            Some(Tok::Pipe) => {
                self.cur.bump();
                Ok(Formula::divides(lhs, self.term()?, Side::Left))
            }
            Some(Tok::PipeRight) => {
                self.cur.bump();
                Ok(Formula::divides(lhs, self.term()?, Side::Right))
            }
            Some(Tok::Ident(k)) if k == "in" => {
                self.cur.bump();
                let set = self.binder()?;
                Ok(Formula::in_set(&set, lhs))
            }
            _ => Err(self.cur.error("expected '=', '|', '|R' or 'in'")),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.product()?;
        loop {
            if self.cur.eat(&Tok::Plus) {
                lhs = Term::add(lhs, self.product()?);
            } else if self.cur.eat(&Tok::Minus) {
                lhs = Term::sub(lhs, self.product()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.factor()?;
        while self.cur.eat(&Tok::Star) {
            lhs = Term::mul(lhs, self.factor()?);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        if self.cur.eat(&Tok::Minus) {
            return Ok(Term::neg(self.factor()?));
        }
        let b = self.base()?;
        if self.cur.eat(&Tok::Caret) {
            return Ok(Term::pow(b, exponent(&mut self.cur)?));
        }
        Ok(b)
    }

    fn base(&mut self) -> Result<Term, ParseError> {
        let pos = self.cur.pos();
        match self.cur.peek().cloned() {
            Some(Tok::Nat(n)) => {
                self.cur.bump();
                if self.cur.peek() == Some(&Tok::Slash) {
                    return Err(self.cur.error("fractions are not terms of the ring language"));
                }
                Ok(Term::Int(n))
            }
            Some(Tok::LParen) => {
                self.cur.bump();
                let t = self.term()?;
                self.cur.expect(&Tok::RParen, "')'")?;
                Ok(t)
            }
            Some(Tok::Ident(n)) if !KEYWORDS.contains(&n.as_str()) => {
                self.cur.bump();
                if self.bound.contains(&n) {
                    Ok(Term::Var(n))
                } else {
                    self.note_name(&n, pos);
                    Ok(Term::Param(n))
                }
            }
            _ => Err(self.cur.error("expected a term")),
        }
    }

    fn note_name(&mut self, name: &str, pos: usize) {
        if self.bound.iter().any(|b| b == name) {
            return;
        }
        if let Some(allowed) = self.allowed {
            if !allowed.contains(&name) && self.unbound.is_none() {
                self.unbound = Some((name.to_string(), pos));
            }
        }
    }
}
