use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::eval::{EvalError, Scope};
use crate::divisibility::Side;
use crate::enumerate::FragmentSpec;
use crate::ring::RingElement;

/// Term of the ring language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    /// Quantifier-bound variable.
    Var(String),
    /// Name supplied by the environment (`x`, `p`, `t`, ...).
    Param(String),
    Int(BigInt),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Pow(Box<Term>, u32),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn param(name: &str) -> Term {
        Term::Param(name.to_string())
    }

    pub fn int(n: i64) -> Term {
        Term::Int(n.into())
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Term {
        Term::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn pow(a: Term, n: u32) -> Term {
        Term::Pow(Box::new(a), n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Eq(Term, Term),
    Divides { divisor: Term, dividend: Term, side: Side },
    InSet(String, Term),
}

/// Finite quantifier domain, enumerated in a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    /// A ring fragment; `None` is the environment's default fragment.
    Fragment(Option<FragmentSpec>),
    /// `p¹, p², …, p^max_exp` for the parameter `p`.
    PowersOfParam { param: String, max_exp: u32 },
    /// Elements of a fragment that belong to a registered set.
    NamedSet { set: String, fragment: Option<FragmentSpec> },
    /// The exact quotient of `dividend` by `divisor` as a singleton, or the
    /// empty domain when the division is not exact.
    ExactQuotient { dividend: Term, divisor: Term, side: Side },
}

type HintFn = dyn Fn(&Scope<'_>) -> Result<Vec<RingElement>, EvalError> + Send + Sync;

/// Constructive candidates tried before a quantifier's domain.
#[derive(Clone)]
pub struct WitnessHint {
    name: String,
    generator: Arc<HintFn>,
}

impl WitnessHint {
    pub fn new(
        name: impl Into<String>,
        generator: impl Fn(&Scope<'_>) -> Result<Vec<RingElement>, EvalError> + Send + Sync + 'static,
    ) -> Self {
        WitnessHint { name: name.into(), generator: Arc::new(generator) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn candidates(&self, scope: &Scope<'_>) -> Result<Vec<RingElement>, EvalError> {
        (self.generator)(scope)
    }
}

impl fmt::Debug for WitnessHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WitnessHint({})", self.name)
    }
}

/// Hints compare by name.
impl PartialEq for WitnessHint {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Quantifier {
    pub var: String,
    pub domain: DomainSpec,
    pub hint: Option<WitnessHint>,
    /// Set when the truth of the quantified formula cannot depend on elements
    /// outside `domain` and the hint candidates; exhausting the search is then
    /// a proof rather than a bound.
    pub exhaustive: bool,
    pub body: Box<Formula>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Formula {
    Atom(Atom),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(Quantifier),
    Forall(Quantifier),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Atom(Atom::Eq(a, b))
    }

    pub fn divides(divisor: Term, dividend: Term, side: Side) -> Formula {
        Formula::Atom(Atom::Divides { divisor, dividend, side })
    }

    pub fn in_set(set: &str, t: Term) -> Formula {
        Formula::Atom(Atom::InSet(set.to_string(), t))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn exists(var: &str, domain: DomainSpec, body: Formula) -> Formula {
        Formula::Exists(Quantifier { var: var.to_string(), domain, hint: None, exhaustive: false, body: Box::new(body) })
    }

    pub fn forall(var: &str, domain: DomainSpec, body: Formula) -> Formula {
        Formula::Forall(Quantifier { var: var.to_string(), domain, hint: None, exhaustive: false, body: Box::new(body) })
    }

    /// Marks the outermost quantifier exhaustive; no-op on other formulas.
    pub fn exhaustive(mut self) -> Formula {
        if let Formula::Exists(q) | Formula::Forall(q) = &mut self {
            q.exhaustive = true;
        }
        self
    }

    /// Attaches a witness hint to the outermost quantifier.
    pub fn with_hint(mut self, hint: WitnessHint) -> Formula {
        if let Formula::Exists(q) | Formula::Forall(q) = &mut self {
            q.hint = Some(hint);
        }
        self
    }

    /// Names referenced as parameters, in first-occurrence order.
    pub fn params(&self) -> Vec<String> {
        fn term(t: &Term, out: &mut Vec<String>) {
            match t {
                Term::Param(p) => {
                    if !out.contains(p) {
                        out.push(p.clone());
                    }
                }
                Term::Var(_) | Term::Int(_) => {}
                Term::Add(a, b) | Term::Sub(a, b) | Term::Mul(a, b) => {
                    term(a, out);
                    term(b, out);
                }
                Term::Neg(a) | Term::Pow(a, _) => term(a, out),
            }
        }
        fn walk(f: &Formula, out: &mut Vec<String>) {
            match f {
                Formula::Atom(Atom::Eq(a, b)) => {
                    term(a, out);
                    term(b, out);
                }
                Formula::Atom(Atom::Divides { divisor, dividend, .. }) => {
                    term(divisor, out);
                    term(dividend, out);
                }
                Formula::Atom(Atom::InSet(_, t)) => term(t, out),
                Formula::Not(a) => walk(a, out),
                Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|g| walk(g, out)),
                Formula::Implies(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Formula::Exists(q) | Formula::Forall(q) => {
                    match &q.domain {
                        DomainSpec::PowersOfParam { param, .. } => {
                            if !out.contains(param) {
                                out.push(param.clone());
                            }
                        }
                        DomainSpec::ExactQuotient { dividend, divisor, .. } => {
                            term(dividend, out);
                            term(divisor, out);
                        }
                        _ => {}
                    }
                    walk(&q.body, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(t: &Term) -> u8 {
            match t {
                Term::Add(..) | Term::Sub(..) => 1,
                Term::Mul(..) => 2,
                Term::Neg(..) => 3,
                Term::Pow(..) => 4,
                _ => 5,
            }
        }
        fn wrap(t: &Term, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if prec(t) < min {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        }
        match self {
            Term::Var(v) | Term::Param(v) => write!(f, "{v}"),
            Term::Int(n) if n.sign() == num_bigint::Sign::Minus => write!(f, "({n})"),
            Term::Int(n) => write!(f, "{n}"),
            Term::Add(a, b) => {
                wrap(a, 1, f)?;
                write!(f, " + ")?;
                wrap(b, 2, f)
            }
            Term::Sub(a, b) => {
                wrap(a, 1, f)?;
                write!(f, " - ")?;
                wrap(b, 2, f)
            }
            Term::Mul(a, b) => {
                wrap(a, 2, f)?;
                write!(f, "*")?;
                wrap(b, 3, f)
            }
            Term::Neg(a) => {
                write!(f, "-")?;
                wrap(a, 4, f)
            }
            Term::Pow(a, n) => {
                wrap(a, 5, f)?;
                write!(f, "^{n}")
            }
        }
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Fragment(None) => write!(f, "frag"),
            DomainSpec::Fragment(Some(spec)) => write!(f, "frag[{spec}]"),
            DomainSpec::PowersOfParam { param, max_exp } => write!(f, "pow({param},{max_exp})"),
            DomainSpec::NamedSet { set, fragment: None } => write!(f, "{set}"),
            DomainSpec::NamedSet { set, fragment: Some(spec) } => write!(f, "{set}[{spec}]"),
            DomainSpec::ExactQuotient { dividend, divisor, side } => {
                let name = if *side == Side::Left { "quot" } else { "quotR" };
                write!(f, "{name}({dividend}, {divisor})")
            }
        }
    }
}

/// Text form in the formula grammar. Witness hints, exhaustiveness flags and
/// explicit fragment specs are not part of the grammar; they print as
/// annotations that the parser does not accept.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(g: &Formula) -> u8 {
            match g {
                Formula::Exists(_) | Formula::Forall(_) => 0,
                Formula::Implies(..) => 1,
                Formula::Or(_) => 2,
                Formula::And(_) => 3,
                Formula::Not(_) => 4,
                Formula::Atom(_) => 5,
            }
        }
        fn wrap(g: &Formula, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if prec(g) < min {
                write!(f, "({g})")
            } else {
                write!(f, "{g}")
            }
        }
        match self {
            Formula::Atom(Atom::Eq(a, b)) => write!(f, "{a} = {b}"),
            Formula::Atom(Atom::Divides { divisor, dividend, side }) => {
                let bar = if *side == Side::Left { "|" } else { "|R" };
                write!(f, "({divisor}) {bar} ({dividend})")
            }
            Formula::Atom(Atom::InSet(s, t)) => write!(f, "{t} in {s}"),
            Formula::Not(a) => {
                write!(f, "!")?;
                wrap(a, 4, f)
            }
            Formula::And(fs) | Formula::Or(fs) => {
                let (sep, min) = if matches!(self, Formula::And(_)) { (" & ", 4) } else { (" | ", 3) };
                if fs.is_empty() {
                    return write!(f, "{}", if matches!(self, Formula::And(_)) { "(0 = 0)" } else { "(0 = 1)" });
                }
                for (k, g) in fs.iter().enumerate() {
                    if k > 0 {
                        write!(f, "{sep}")?;
                    }
                    wrap(g, min, f)?;
                }
                Ok(())
            }
            Formula::Implies(a, b) => {
                wrap(a, 2, f)?;
                write!(f, " -> ")?;
                wrap(b, 1, f)
            }
            Formula::Exists(q) | Formula::Forall(q) => {
                let kw = if matches!(self, Formula::Exists(_)) { "exists" } else { "forall" };
                write!(f, "{kw} {} in {}", q.var, q.domain)?;
                if let Some(h) = &q.hint {
                    write!(f, " {{hint: {}}}", h.name())?;
                }
                if q.exhaustive {
                    write!(f, " {{exhaustive}}")?;
                }
                write!(f, ". {}", q.body)
            }
        }
    }
}
