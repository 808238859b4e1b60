use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use super::ast::{Atom, DomainSpec, Formula, Quantifier, Term};
use crate::divisibility::{divide_exact, divides, DivisibilityError};
use crate::enumerate::{enumerate_fragment, EnumerationError, Fragment, FragmentSpec};
use crate::numeric::GaussianRational;
use crate::ring::{CoefficientDomain, Ring, RingElement, RingError, RingKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound name {0:?}")]
    UnboundName(String),
    #[error("unknown set {0:?}")]
    UnknownSetName(String),
    #[error("set {0:?} is already registered")]
    DuplicateSetName(String),
    #[error("no default fragment configured for `frag` domains")]
    NoDefaultFragment,
    #[error("quotient domain has a zero divisor term; the quotient is not unique")]
    QuotientNotUnique,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Divisibility(#[from] DivisibilityError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

/// A variable and the element it was bound to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub var: String,
    pub value: RingElement,
}

/// A quantifier whose domain was searched without being exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBound {
    pub var: String,
    pub domain: String,
    pub size: u64,
}

/// Three-valued result of bounded evaluation.
///
/// `ProvenTrue` carries the witnesses of the existentials on the deciding
/// path, `ProvenFalse` the counterexamples of the universals. `UnknownUpTo`
/// lists the non-exhaustive searches that left the question open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    ProvenTrue(Vec<Binding>),
    ProvenFalse(Vec<Binding>),
    UnknownUpTo(Vec<SearchBound>),
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::ProvenTrue(_))
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Verdict::ProvenFalse(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::UnknownUpTo(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::ProvenTrue(_) => "proven-true",
            Verdict::ProvenFalse(_) => "proven-false",
            Verdict::UnknownUpTo(_) => "unknown-up-to",
        }
    }

    fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::ProvenTrue(Vec::new())
        } else {
            Verdict::ProvenFalse(Vec::new())
        }
    }

    fn negate(self) -> Verdict {
        match self {
            Verdict::ProvenTrue(b) => Verdict::ProvenFalse(b),
            Verdict::ProvenFalse(b) => Verdict::ProvenTrue(b),
            u => u,
        }
    }
}

/// `{"status": ..., "bindings": [...]}` or `{"status": ..., "bounds": [...]}`.
impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Verdict", 2)?;
        st.serialize_field("status", self.label())?;
        match self {
            Verdict::ProvenTrue(b) | Verdict::ProvenFalse(b) => st.serialize_field("bindings", b)?,
            Verdict::UnknownUpTo(b) => st.serialize_field("bounds", b)?,
        }
        st.end()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let binds = |f: &mut fmt::Formatter<'_>, bs: &[Binding]| {
            let parts: Vec<String> = bs.iter().map(|b| format!("{} = {}", b.var, b.value)).collect();
            write!(f, "[{}]", parts.join(", "))
        };
        match self {
            Verdict::ProvenTrue(bs) => {
                write!(f, "ProvenTrue")?;
                binds(f, bs)
            }
            Verdict::ProvenFalse(bs) => {
                write!(f, "ProvenFalse")?;
                binds(f, bs)
            }
            Verdict::UnknownUpTo(bounds) => {
                let parts: Vec<String> =
                    bounds.iter().map(|b| format!("{} in {} ({} elements)", b.var, b.domain, b.size)).collect();
                write!(f, "UnknownUpTo[{}]", parts.join(", "))
            }
        }
    }
}

type Decider = dyn Fn(&RingElement) -> bool + Send + Sync;

/// Optional first-order definition of a registered set: `var ∈ S ⇔ formula`.
#[derive(Debug, Clone, PartialEq)]
pub struct SetDefinition {
    pub var: String,
    pub formula: Formula,
}

#[derive(Clone)]
struct SetEntry {
    decider: Arc<Decider>,
    definition: Option<SetDefinition>,
}

/// Evaluation context: the ring, parameter bindings, registered sets and the
/// default fragment used by `frag` domains.
#[derive(Clone)]
pub struct Environment {
    ring: Ring,
    params: BTreeMap<String, RingElement>,
    sets: BTreeMap<String, SetEntry>,
    default_fragment: Option<FragmentSpec>,
}

impl fmt::Debug for Environment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Environment")
            .field("ring", &self.ring.to_string())
            .field("params", &self.params.keys().collect::<Vec<_>>())
            .field("sets", &self.sets.keys().collect::<Vec<_>>())
            .field("default_fragment", &self.default_fragment.as_ref().map(|s| s.to_string()))
            .finish()
    }
}

impl Environment {
    /// Binds the generators (`x`, and `y` in the quantum plane) and, over
    /// `ℚ(i)`, the imaginary unit `i`.
    pub fn new(ring: &Ring) -> Self {
        let mut params = BTreeMap::new();
        params.insert("x".to_string(), ring.x());
        if ring.kind() == RingKind::QuantumPlane {
            params.insert("y".to_string(), ring.generator("y").expect("quantum plane has y"));
        }
        if ring.coefficients() == CoefficientDomain::GaussianRational {
            params.insert("i".to_string(), ring.constant(GaussianRational::i()).expect("i in Q(i)"));
        }
        Environment { ring: ring.clone(), params, sets: BTreeMap::new(), default_fragment: None }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bind(&mut self, name: &str, value: RingElement) -> Result<(), EvalError> {
        if *value.ring() != self.ring {
            return Err(RingError::ContextMismatch.into());
        }
        self.params.insert(name.to_string(), value);
        Ok(())
    }

    pub fn with_binding(mut self, name: &str, value: RingElement) -> Result<Self, EvalError> {
        self.bind(name, value)?;
        Ok(self)
    }

    pub fn param(&self, name: &str) -> Option<&RingElement> {
        self.params.get(name)
    }

    pub fn param_names(&self) -> impl Iterator<Item = &str> {
        self.params.keys().map(String::as_str)
    }

    pub fn set_default_fragment(&mut self, spec: FragmentSpec) -> Result<(), EvalError> {
        if *spec.ring() != self.ring {
            return Err(RingError::ContextMismatch.into());
        }
        self.default_fragment = Some(spec);
        Ok(())
    }

    pub fn default_fragment(&self) -> Option<&FragmentSpec> {
        self.default_fragment.as_ref()
    }

    /// Registers a set by its membership decider and, optionally, a defining
    /// formula kept for cross-checking.
    pub fn register_set(
        &mut self,
        name: &str,
        decider: impl Fn(&RingElement) -> bool + Send + Sync + 'static,
        definition: Option<SetDefinition>,
    ) -> Result<(), EvalError> {
        if self.sets.contains_key(name) {
            return Err(EvalError::DuplicateSetName(name.to_string()));
        }
        self.sets.insert(name.to_string(), SetEntry { decider: Arc::new(decider), definition });
        Ok(())
    }

    pub fn has_set(&self, name: &str) -> bool {
        self.sets.contains_key(name)
    }

    pub fn set_names(&self) -> impl Iterator<Item = &str> {
        self.sets.keys().map(String::as_str)
    }

    pub fn set_definition(&self, name: &str) -> Option<&SetDefinition> {
        self.sets.get(name).and_then(|s| s.definition.as_ref())
    }

    pub fn is_member(&self, name: &str, z: &RingElement) -> Result<bool, EvalError> {
        let entry = self.sets.get(name).ok_or_else(|| EvalError::UnknownSetName(name.to_string()))?;
        Ok((entry.decider)(z))
    }
}

/// Read-only view of the environment plus the current quantifier bindings;
/// passed to witness-hint generators.
pub struct Scope<'a> {
    env: &'a Environment,
    stack: &'a [(String, RingElement)],
}

impl<'a> Scope<'a> {
    pub fn ring(&self) -> &Ring {
        &self.env.ring
    }

    pub fn lookup(&self, name: &str) -> Option<&RingElement> {
        self.stack.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v).or_else(|| self.env.params.get(name))
    }

    pub fn eval_term(&self, t: &Term) -> Result<RingElement, EvalError> {
        Ok(match t {
            Term::Var(n) | Term::Param(n) => {
                self.lookup(n).cloned().ok_or_else(|| EvalError::UnboundName(n.clone()))?
            }
            Term::Int(n) => self.env.ring.embed_integer(n.clone()),
            Term::Add(a, b) => self.eval_term(a)?.add(&self.eval_term(b)?)?,
            Term::Sub(a, b) => self.eval_term(a)?.sub(&self.eval_term(b)?)?,
            Term::Mul(a, b) => self.eval_term(a)?.mul(&self.eval_term(b)?)?,
            Term::Neg(a) => self.eval_term(a)?.neg(),
            Term::Pow(a, n) => self.eval_term(a)?.pow(*n),
        })
    }
}

/// Evaluates a term with all names taken from `env`.
pub fn eval_term(term: &Term, env: &Environment) -> Result<RingElement, EvalError> {
    Scope { env, stack: &[] }.eval_term(term)
}

/// Bounded strong-Kleene evaluation of `formula` in `env`.
pub fn eval_formula(formula: &Formula, env: &Environment) -> Result<Verdict, EvalError> {
    Evaluator { env, stack: Vec::new() }.eval(formula)
}

enum Domain {
    Listed(Vec<RingElement>),
    Fragment { frag: Fragment, filter: Option<String> },
}

struct Evaluator<'a> {
    env: &'a Environment,
    stack: Vec<(String, RingElement)>,
}

fn merge_bounds(into: &mut Vec<SearchBound>, more: Vec<SearchBound>) {
    for b in more {
        if !into.contains(&b) {
            into.push(b);
        }
    }
}

impl<'a> Evaluator<'a> {
    fn scope(&self) -> Scope<'_> {
        Scope { env: self.env, stack: &self.stack }
    }

    fn term(&self, t: &Term) -> Result<RingElement, EvalError> {
        self.scope().eval_term(t)
    }

    fn eval(&mut self, f: &Formula) -> Result<Verdict, EvalError> {
        match f {
            Formula::Atom(a) => self.atom(a),
            Formula::Not(a) => Ok(self.eval(a)?.negate()),
            Formula::And(fs) => self.junction(fs, true),
            Formula::Or(fs) => self.junction(fs, false),
            Formula::Implies(a, b) => {
                let lhs = self.eval(a)?.negate();
                if lhs.is_true() {
                    return Ok(lhs);
                }
                let rhs = self.eval(b)?;
                Ok(match (lhs, rhs) {
                    (_, t @ Verdict::ProvenTrue(_)) => t,
                    (Verdict::ProvenFalse(mut x), Verdict::ProvenFalse(y)) => {
                        x.extend(y);
                        Verdict::ProvenFalse(x)
                    }
                    (Verdict::UnknownUpTo(u), Verdict::ProvenFalse(_)) => Verdict::UnknownUpTo(u),
                    (Verdict::ProvenFalse(_), Verdict::UnknownUpTo(u)) => Verdict::UnknownUpTo(u),
                    (Verdict::UnknownUpTo(mut u), Verdict::UnknownUpTo(v)) => {
                        merge_bounds(&mut u, v);
                        Verdict::UnknownUpTo(u)
                    }
                    (Verdict::ProvenTrue(_), _) => unreachable!(),
                })
            }
            Formula::Exists(q) => self.quantifier(q, true),
            Formula::Forall(q) => self.quantifier(q, false),
        }
    }

    /// Conjunction (`conj = true`) or disjunction. A deciding operand
    /// (false for `&`, true for `|`) short-circuits; otherwise unknowns
    /// dominate, and a full set of agreeing operands concatenates evidence.
    fn junction(&mut self, fs: &[Formula], conj: bool) -> Result<Verdict, EvalError> {
        let mut evidence = Vec::new();
        let mut unknown: Option<Vec<SearchBound>> = None;
        for g in fs {
            match (self.eval(g)?, conj) {
                (Verdict::ProvenFalse(b), true) => return Ok(Verdict::ProvenFalse(b)),
                (Verdict::ProvenTrue(b), false) => return Ok(Verdict::ProvenTrue(b)),
                (Verdict::ProvenTrue(b), true) | (Verdict::ProvenFalse(b), false) => evidence.extend(b),
                (Verdict::UnknownUpTo(u), _) => merge_bounds(unknown.get_or_insert_with(Vec::new), u),
            }
        }
        Ok(match unknown {
            Some(u) => Verdict::UnknownUpTo(u),
            None if conj => Verdict::ProvenTrue(evidence),
            None => Verdict::ProvenFalse(evidence),
        })
    }

    fn atom(&self, a: &Atom) -> Result<Verdict, EvalError> {
        Ok(Verdict::from_bool(match a {
            Atom::Eq(l, r) => self.term(l)? == self.term(r)?,
            Atom::Divides { divisor, dividend, side } => divides(&self.term(divisor)?, &self.term(dividend)?, *side)?,
            Atom::InSet(name, t) => self.env.is_member(name, &self.term(t)?)?,
        }))
    }

    fn fragment_spec(&self, spec: &Option<FragmentSpec>) -> Result<FragmentSpec, EvalError> {
        match spec {
            Some(s) => Ok(s.clone()),
            None => self.env.default_fragment.clone().ok_or(EvalError::NoDefaultFragment),
        }
    }

    fn domain(&self, d: &DomainSpec) -> Result<(Domain, String), EvalError> {
        Ok(match d {
            DomainSpec::Fragment(spec) => {
                let spec = self.fragment_spec(spec)?;
                (Domain::Fragment { frag: enumerate_fragment(&spec)?, filter: None }, format!("frag[{spec}]"))
            }
            DomainSpec::NamedSet { set, fragment } => {
                if !self.env.has_set(set) {
                    return Err(EvalError::UnknownSetName(set.clone()));
                }
                let spec = self.fragment_spec(fragment)?;
                (
                    Domain::Fragment { frag: enumerate_fragment(&spec)?, filter: Some(set.clone()) },
                    format!("{set}[{spec}]"),
                )
            }
            DomainSpec::PowersOfParam { param, max_exp } => {
                let p = self.scope().lookup(param).cloned().ok_or_else(|| EvalError::UnboundName(param.clone()))?;
                let mut pows = Vec::with_capacity(*max_exp as usize);
                let mut cur = p.clone();
                for _ in 0..*max_exp {
                    pows.push(cur.clone());
                    cur = cur.mul(&p)?;
                }
                (Domain::Listed(pows), d.to_string())
            }
            DomainSpec::ExactQuotient { dividend, divisor, side } => {
                let (g, f) = (self.term(dividend)?, self.term(divisor)?);
                if f.is_zero() {
                    return Err(EvalError::QuotientNotUnique);
                }
                let q = divide_exact(&g, &f, *side)?.quotient;
                (Domain::Listed(q.into_iter().collect()), d.to_string())
            }
        })
    }

    /// Existential (`exists = true`) or universal quantifier. Hint candidates
    /// come first, then the domain in canonical order; the first deciding
    /// element is reported.
    fn quantifier(&mut self, q: &Quantifier, exists: bool) -> Result<Verdict, EvalError> {
        let hints = match &q.hint {
            Some(h) => h.candidates(&self.scope())?,
            None => Vec::new(),
        };
        let (domain, description) = self.domain(&q.domain)?;
        let mut unknown: Option<Vec<SearchBound>> = None;
        let mut searched = 0u64;

        let mut visit = |this: &mut Self, c: RingElement| -> Result<Option<Verdict>, EvalError> {
            this.stack.push((q.var.clone(), c));
            let v = this.eval(&q.body);
            let (var, c) = this.stack.pop().expect("pushed above");
            let decided = match (v?, exists) {
                (Verdict::ProvenTrue(b), true) | (Verdict::ProvenFalse(b), false) => {
                    let mut out = vec![Binding { var, value: c }];
                    out.extend(b);
                    Some(if exists { Verdict::ProvenTrue(out) } else { Verdict::ProvenFalse(out) })
                }
                (Verdict::UnknownUpTo(u), _) => {
                    merge_bounds(unknown.get_or_insert_with(Vec::new), u);
                    None
                }
                _ => None,
            };
            Ok(decided)
        };

        for c in hints {
            if let Some(v) = visit(self, c)? {
                return Ok(v);
            }
        }
        match domain {
            Domain::Listed(items) => {
                for c in items {
                    searched += 1;
                    if let Some(v) = visit(self, c)? {
                        return Ok(v);
                    }
                }
            }
            Domain::Fragment { frag, filter } => {
                for c in frag.iter() {
                    if let Some(set) = &filter {
                        if !self.env.is_member(set, &c)? {
                            continue;
                        }
                    }
                    searched += 1;
                    if let Some(v) = visit(self, c)? {
                        return Ok(v);
                    }
                }
            }
        }

        let mut bounds = unknown.unwrap_or_default();
        if !q.exhaustive {
            merge_bounds(&mut bounds, vec![SearchBound { var: q.var.clone(), domain: description, size: searched }]);
        }
        Ok(if !bounds.is_empty() {
            Verdict::UnknownUpTo(bounds)
        } else if exists {
            Verdict::ProvenFalse(Vec::new())
        } else {
            Verdict::ProvenTrue(Vec::new())
        })
    }
}

/// Result of comparing a registered set's decider against its defining
/// formula on a fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub checked: u64,
    /// First element where the decider and the formula disagree, with the
    /// decider's answer and the formula's verdict.
    pub disagreement: Option<(RingElement, bool, Verdict)>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.disagreement.is_none()
    }
}

/// Evaluates the defining formula of set `name` on every element of
/// `fragment` and compares it with the decider. An `UnknownUpTo` verdict
/// counts as a disagreement.
pub fn cross_check_set(env: &Environment, name: &str, fragment: &FragmentSpec) -> Result<CrossCheck, EvalError> {
    let def = env.set_definition(name).cloned().ok_or_else(|| EvalError::UnknownSetName(name.to_string()))?;
    let frag = enumerate_fragment(fragment)?;
    let mut scoped = env.clone();
    let mut checked = 0;
    for z in frag.iter() {
        checked += 1;
        let expected = env.is_member(name, &z)?;
        scoped.bind(&def.var, z.clone())?;
        let v = eval_formula(&def.formula, &scoped)?;
        let agrees = if expected { v.is_true() } else { v.is_false() };
        if !agrees {
            return Ok(CrossCheck { checked, disagreement: Some((z, expected, v)) });
        }
    }
    Ok(CrossCheck { checked, disagreement: None })
}
