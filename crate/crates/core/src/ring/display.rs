use std::fmt;

use super::{Repr, RingElement};
use crate::numeric::GaussianRational;

fn monomial(xdeg: u32, ydeg: u32) -> String {
    let power = |v: &str, d: u32| match d {
        0 => String::new(),
        1 => v.to_string(),
        d => format!("{v}^{d}"),
    };
    match (xdeg, ydeg) {
        (0, _) => power("y", ydeg),
        (_, 0) => power("x", xdeg),
        _ => format!("{}*{}", power("x", xdeg), power("y", ydeg)),
    }
}

fn term(c: &GaussianRational, mono: &str) -> String {
    if mono.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return mono.to_string();
    }
    if (-c).is_one() {
        return format!("-{mono}");
    }
    if c.is_real() || c.re().is_zero() {
        format!("{c}*{mono}")
    } else {
        format!("({c})*{mono}")
    }
}

fn join(terms: impl Iterator<Item = String>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for t in terms {
        if first {
            f.write_str(&t)?;
            first = false;
        } else if let Some(rest) = t.strip_prefix('-') {
            write!(f, " - {rest}")?;
        } else {
            write!(f, " + {t}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Canonical text: terms by descending degree (lexicographically descending
/// bidegree in the quantum plane), monomials written `x^a*y^b`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Uni(p) => join(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| term(c, &monomial(k as u32, 0))),
                f,
            ),
            Repr::QPlane(e) => join(e.terms().rev().map(|((a, b), c)| term(c, &monomial(a, b))), f),
        }
    }
}
