//! The defining formulas for `ℕ`, `ℤ` and the powers of `x`, their semantic
//! deciders, and checks of the hypotheses and identities behind them.
//!
//! Everything here takes `p = x` and `A` = the constants of the coefficient
//! domain unless a function says otherwise. In the quantum plane every
//! divisibility has the divisor on the left.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::divisibility::{divide_exact, divides, is_power_of, not_zero_divisor_brute, DivisibilityError, Side};
use crate::enumerate::{enumerate_fragment, EnumerationError, FragmentSpec};
use crate::formula::{
    eval_formula, DomainSpec, Environment, EvalError, Formula, Scope, SetDefinition, Term, Verdict, WitnessHint,
};
use crate::ring::{Degree, Ring, RingElement, RingError};

/// Name of the coefficient-constants set.
pub const A_SET: &str = "A";
/// Name of the set `{p, p², …}`.
pub const POW_SET: &str = "POW";
/// Largest `n` for which the `y = p^n` hint is generated.
pub const HINT_LIMIT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefinitionError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl From<RingError> for DefinitionError {
    fn from(e: RingError) -> Self {
        DefinitionError::Eval(e.into())
    }
}

impl From<DivisibilityError> for DefinitionError {
    fn from(e: DivisibilityError) -> Self {
        DefinitionError::Eval(e.into())
    }
}

impl From<EnumerationError> for DefinitionError {
    fn from(e: EnumerationError) -> Self {
        DefinitionError::Eval(e.into())
    }
}

/// `z` is a constant of the coefficient domain.
pub fn constants_membership(z: &RingElement) -> bool {
    z.is_constant()
}

/// `z = 0 | z | 1` over `var`, for rings whose coefficients form a field;
/// `None` otherwise (over `ℤ` the units are only `±1`).
pub fn constants_formula(ring: &Ring, var: &str) -> Option<Formula> {
    if !ring.coefficients().is_field() {
        return None;
    }
    Some(Formula::Or(vec![
        Formula::eq(Term::param(var), Term::int(0)),
        Formula::divides(Term::param(var), Term::int(1), Side::Left),
    ]))
}

/// Environment with `p` bound, `A` registered as the constants (with its
/// defining formula in field cases) and `POW` as the powers `p^n`, `n ≥ 1`.
pub fn definability_environment(ring: &Ring, p: &RingElement) -> Result<Environment, DefinitionError> {
    let mut env = Environment::new(ring);
    env.bind("p", p.clone())?;
    let definition = constants_formula(ring, "z").map(|formula| SetDefinition { var: "z".into(), formula });
    env.register_set(A_SET, constants_membership, definition)?;
    let base = p.clone();
    // Stripping factors of p terminates by degree, so no real cap is needed.
    env.register_set(POW_SET, move |z| matches!(is_power_of(z, &base, u32::MAX), Ok(Some(_))), None)?;
    Ok(env)
}

/// Candidate `y = p^n` when `t` is a constant integer `n ≥ 2`.
fn power_hint(p_name: &str) -> WitnessHint {
    let p_name = p_name.to_string();
    WitnessHint::new(format!("y = {p_name}^t"), move |s: &Scope<'_>| {
        let t = s.lookup("t").ok_or_else(|| EvalError::UnboundName("t".into()))?;
        let p = s.lookup(&p_name).ok_or_else(|| EvalError::UnboundName(p_name.clone()))?;
        Ok(match t.integer_value().and_then(|n| n.to_u32()) {
            Some(n) if (2..=HINT_LIMIT).contains(&n) => vec![p.pow(n)],
            _ => Vec::new(),
        })
    })
}

/// φ(t) with the parameter `p_name` and the set `a_name`, `t` free.
///
/// Prenex form `∃y ∃w (ψ(y) ∧ p²|y ∧ y−1 = (p−1)·w ∧ t∈A ∧ (p−1)|(w−t))`,
/// equivalent to the nested form since `w` occurs in neither `ψ(y)` nor
/// `p²|y`. `y` ranges over `p¹..p^max_exp` plus the hint `y = p^t`; `w` over
/// the exact left quotient of `y−1` by `p−1`, which is the only possible
/// witness in a ring without zero divisors. Both quantifiers are therefore
/// marked exhaustive.
pub fn build_phi_int(p_name: &str, a_name: &str, max_exp: u32) -> Formula {
    let p = || Term::param(p_name);
    let y = || Term::var("y");
    let w = || Term::var("w");
    let t = || Term::param("t");
    let p_minus_1 = || Term::sub(p(), Term::int(1));
    let matrix = Formula::And(vec![
        Formula::in_set(POW_SET, y()),
        Formula::divides(Term::pow(p(), 2), y(), Side::Left),
        Formula::eq(Term::sub(y(), Term::int(1)), Term::mul(p_minus_1(), w())),
        Formula::in_set(a_name, t()),
        Formula::divides(p_minus_1(), Term::sub(w(), t()), Side::Left),
    ]);
    let quotient = DomainSpec::ExactQuotient { dividend: Term::sub(y(), Term::int(1)), divisor: p_minus_1(), side: Side::Left };
    let inner = Formula::exists("w", quotient, matrix).exhaustive();
    Formula::exists("y", DomainSpec::PowersOfParam { param: p_name.to_string(), max_exp }, inner)
        .exhaustive()
        .with_hint(power_hint(p_name))
}

/// `t = 0 | t = 1 | φ(t)`.
pub fn build_natural_formula(p_name: &str, a_name: &str, max_exp: u32) -> Formula {
    Formula::Or(vec![
        Formula::eq(Term::param("t"), Term::int(0)),
        Formula::eq(Term::param("t"), Term::int(1)),
        build_phi_int(p_name, a_name, max_exp),
    ])
}

/// `(∀d (¬(d|1) ∧ d|t) → x|d) ∧ (x−1)|(t−1)` with `d` over `divisors`, or
/// over the environment's default fragment when `None`.
pub fn build_phi_pow(divisors: Option<FragmentSpec>) -> Formula {
    let d = || Term::var("d");
    let x = || Term::param("x");
    let t = || Term::param("t");
    let one = || Term::int(1);
    let condition = Formula::implies(
        Formula::And(vec![
            Formula::not(Formula::divides(d(), one(), Side::Left)),
            Formula::divides(d(), t(), Side::Left),
        ]),
        Formula::divides(x(), d(), Side::Left),
    );
    Formula::And(vec![
        Formula::forall("d", DomainSpec::Fragment(divisors), condition),
        Formula::divides(Term::sub(x(), one()), Term::sub(t(), one()), Side::Left),
    ])
}

/// Semantic decision with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub member: bool,
    /// `n` with `t = n` when accepted (`-n` for the negated branch).
    pub witness: Option<i64>,
    /// `t` is a constant integer beyond the search bound, so a negative
    /// answer is not conclusive.
    pub bound_too_small: bool,
}

/// `t ∈ ℕ` through the theorem's characterization with `p = x`,
/// `A` = constants, searching `2 ≤ n ≤ max_exp`.
pub fn decide_natural_semantic(t: &RingElement, max_exp: u32) -> Result<Decision, DefinitionError> {
    let ring = t.ring();
    let accept = |n: i64| Decision { member: true, witness: Some(n), bound_too_small: false };
    if t.is_zero() {
        return Ok(accept(0));
    }
    if t.is_one() {
        return Ok(accept(1));
    }
    if constants_membership(t) {
        let p = ring.x();
        let p_minus_1 = p.sub(&ring.one())?;
        let mut y = p.clone();
        for n in 2..=max_exp {
            y = y.mul(&p)?;
            let w = divide_exact(&y.sub(&ring.one())?, &p_minus_1, Side::Left)?
                .quotient
                .expect("p - 1 divides p^n - 1");
            if divides(&p_minus_1, &w.sub(t)?, Side::Left)? {
                return Ok(accept(n as i64));
            }
        }
    }
    let bound_too_small = t.integer_value().map_or(false, |v| v > BigInt::from(max_exp));
    Ok(Decision { member: false, witness: None, bound_too_small })
}

/// `t ∈ ℤ` as `t ∈ ℕ` or `−t ∈ ℕ`.
pub fn decide_integer_semantic(t: &RingElement, max_exp: u32) -> Result<Decision, DefinitionError> {
    let pos = decide_natural_semantic(t, max_exp)?;
    if pos.member {
        return Ok(pos);
    }
    let neg = decide_natural_semantic(&t.neg(), max_exp)?;
    if neg.member {
        return Ok(Decision { witness: neg.witness.map(|n| -n), ..neg });
    }
    Ok(Decision { member: false, witness: None, bound_too_small: pos.bound_too_small || neg.bound_too_small })
}

/// Ground truth: a constant rational integer `≥ 0`.
pub fn is_natural_constant(t: &RingElement) -> bool {
    t.integer_value().map_or(false, |v| v >= BigInt::from(0))
}

/// Ground truth: a constant rational integer.
pub fn is_integer_constant(t: &RingElement) -> bool {
    t.integer_value().is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub element: RingElement,
    pub natural_truth: bool,
    pub natural: Decision,
    pub integer_truth: bool,
    pub integer: Decision,
    /// Verdict of `t = 0 | t = 1 | φ(t)`.
    pub formula: Verdict,
}

impl ClassificationRecord {
    /// Semantic decisions match the ground truth (up to a too-small bound)
    /// and the formula verdict does not contradict the natural decision.
    pub fn agrees(&self) -> bool {
        let ok = |truth: bool, d: &Decision| d.member == truth || (d.bound_too_small && truth);
        let formula_ok = match &self.formula {
            Verdict::ProvenTrue(_) => self.natural.member || self.natural.bound_too_small,
            Verdict::ProvenFalse(_) => !self.natural.member,
            Verdict::UnknownUpTo(_) => true,
        };
        ok(self.natural_truth, &self.natural) && ok(self.integer_truth, &self.integer) && formula_ok
    }
}

/// Classifies `t` semantically and by the formula, in an environment built by
/// [`definability_environment`].
pub fn classify(env: &Environment, t: &RingElement, max_exp: u32) -> Result<ClassificationRecord, DefinitionError> {
    let formula = build_natural_formula("p", A_SET, max_exp);
    let scoped = env.clone().with_binding("t", t.clone())?;
    Ok(ClassificationRecord {
        element: t.clone(),
        natural_truth: is_natural_constant(t),
        natural: decide_natural_semantic(t, max_exp)?,
        integer_truth: is_integer_constant(t),
        integer: decide_integer_semantic(t, max_exp)?,
        formula: eval_formula(&formula, &scoped)?,
    })
}

/// Outcome of one hypothesis check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum HypothesisStatus {
    /// Holds outright, by a structural argument.
    Holds { reason: String },
    /// No violation in the searched range.
    CheckedUpTo { checked: u64, bound: String },
    Violated { counterexample: RingElement, detail: String },
}

impl HypothesisStatus {
    pub fn is_violated(&self) -> bool {
        matches!(self, HypothesisStatus::Violated { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct HypothesisReport {
    pub powers_distinct: HypothesisStatus,
    pub p_minus_1_not_zero_divisor: HypothesisStatus,
    pub a_annihilation: HypothesisStatus,
    pub a_closure: HypothesisStatus,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.entries().iter().all(|(_, s)| !s.is_violated())
    }

    pub fn entries(&self) -> [(&'static str, &HypothesisStatus); 4] {
        [
            ("powers-distinct", &self.powers_distinct),
            ("p-1-not-zero-divisor", &self.p_minus_1_not_zero_divisor),
            ("a-annihilation", &self.a_annihilation),
            ("a-closure", &self.a_closure),
        ]
    }
}

/// Checks the three hypotheses on `p` and the closure of the set `a_name`
/// under `a ↦ n − a`, over `fragment` and `1 ≤ n ≤ max_exp`.
pub fn check_hypotheses(
    env: &Environment,
    p: &RingElement,
    a_name: &str,
    fragment: &FragmentSpec,
    max_exp: u32,
) -> Result<HypothesisReport, DefinitionError> {
    let ring = env.ring();
    if p.ring() != ring || fragment.ring() != ring {
        return Err(RingError::ContextMismatch.into());
    }

    let mut powers: Vec<RingElement> = Vec::with_capacity(max_exp as usize);
    let mut powers_distinct = None;
    let mut cur = p.clone();
    for n in 1..=max_exp {
        if let Some(i) = powers.iter().position(|q| *q == cur) {
            powers_distinct = Some(HypothesisStatus::Violated {
                counterexample: cur.clone(),
                detail: format!("p^{} = p^{n}", i + 1),
            });
            break;
        }
        powers.push(cur.clone());
        cur = cur.mul(p)?;
    }
    let positive_degree = match p.degree() {
        Degree::Univariate(d) => d > 0,
        Degree::Bidegree(a, b) => a + b > 0,
        Degree::NegInfinity => false,
    };
    let powers_distinct = powers_distinct.unwrap_or_else(|| {
        if positive_degree {
            HypothesisStatus::Holds { reason: "deg p^n = n deg p in a ring without zero divisors".into() }
        } else {
            HypothesisStatus::CheckedUpTo { checked: max_exp as u64, bound: format!("n <= {max_exp}") }
        }
    });

    let p_minus_1 = p.sub(&ring.one())?;
    let p_minus_1_not_zero_divisor = if p_minus_1.is_zero() {
        HypothesisStatus::Violated { counterexample: ring.one(), detail: "p - 1 = 0".into() }
    } else {
        let scan = not_zero_divisor_brute(&p_minus_1, fragment)?;
        match scan.counterexample {
            Some(g) => HypothesisStatus::Violated { counterexample: g, detail: "(p - 1) g = 0 or g (p - 1) = 0".into() },
            None => HypothesisStatus::CheckedUpTo { checked: scan.checked, bound: fragment.to_string() },
        }
    };

    let mut a_annihilation = None;
    let mut a_closure = None;
    let mut in_a = 0u64;
    for a in enumerate_fragment(fragment)?.iter() {
        if !env.is_member(a_name, &a)? {
            continue;
        }
        in_a += 1;
        if a_annihilation.is_none() && !a.is_zero() && divides(&p_minus_1, &a, Side::Left)? {
            a_annihilation = Some(HypothesisStatus::Violated {
                counterexample: a.clone(),
                detail: format!("(p - 1) | {a} but {a} != 0"),
            });
        }
        if a_closure.is_none() {
            for n in 1..=max_exp {
                let shifted = ring.embed_integer(n).sub(&a)?;
                if !env.is_member(a_name, &shifted)? {
                    a_closure = Some(HypothesisStatus::Violated {
                        counterexample: a.clone(),
                        detail: format!("{n} - a = {shifted} is not in {a_name}"),
                    });
                    break;
                }
            }
        }
        if a_annihilation.is_some() && a_closure.is_some() {
            break;
        }
    }
    let checked = |bound: String| HypothesisStatus::CheckedUpTo { checked: in_a, bound };
    Ok(HypothesisReport {
        powers_distinct,
        p_minus_1_not_zero_divisor,
        a_annihilation: a_annihilation.unwrap_or_else(|| checked(format!("{a_name} in {fragment}"))),
        a_closure: a_closure.unwrap_or_else(|| checked(format!("{a_name} in {fragment}, 1 <= n <= {max_exp}"))),
    })
}

/// Both factorizations of an identity: the divisor `p − 1` on the right of
/// the cofactor and on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub right: bool,
    pub left: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.right && self.left
    }
}

fn weighted_sum(p: &RingElement, weights: impl Iterator<Item = (u32, i64)>) -> Result<RingElement, RingError> {
    let ring = p.ring();
    let mut acc = ring.zero();
    for (i, c) in weights {
        acc = acc.add(&ring.embed_integer(c).mul(&p.pow(i))?)?;
    }
    Ok(acc)
}

/// `p^n − 1 = (p^{n−1} + ⋯ + 1)(p − 1)`, and with `p − 1` on the left.
pub fn verify_geometric_identity(p: &RingElement, n: u32) -> Result<IdentityCheck, DefinitionError> {
    if n == 0 {
        return Err(DefinitionError::InvalidArgument("n must be at least 1".into()));
    }
    let one = p.ring().one();
    let target = p.pow(n).sub(&one)?;
    let sum = weighted_sum(p, (0..n).map(|i| (i, 1)))?;
    let p_minus_1 = p.sub(&one)?;
    Ok(IdentityCheck { right: sum.mul(&p_minus_1)? == target, left: p_minus_1.mul(&sum)? == target })
}

/// `w − t = (p^{n−2} + 2p^{n−3} + ⋯ + (n−1))(p − 1) + n − t` with
/// `w = p^{n−1} + ⋯ + 1`, and with `p − 1` on the left.
pub fn verify_telescoping_identity(p: &RingElement, n: u32, t: &RingElement) -> Result<IdentityCheck, DefinitionError> {
    if n < 2 {
        return Err(DefinitionError::InvalidArgument("n must be at least 2".into()));
    }
    let ring = p.ring();
    let w = weighted_sum(p, (0..n).map(|i| (i, 1)))?;
    let lhs = w.sub(t)?;
    let cofactor = weighted_sum(p, (0..n - 1).map(|i| (i, (n - 1 - i) as i64)))?;
    let p_minus_1 = p.sub(&ring.one())?;
    let rest = ring.embed_integer(n).sub(t)?;
    Ok(IdentityCheck {
        right: cofactor.mul(&p_minus_1)?.add(&rest)? == lhs,
        left: p_minus_1.mul(&cofactor)?.add(&rest)? == lhs,
    })
}

/// First failure of a suite, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Geometric identity for `p = x` and `1 ≤ n ≤ max_n`.
pub fn geometric_suite(ring: &Ring, max_n: u32) -> Result<SuiteOutcome, DefinitionError> {
    let p = ring.x();
    for n in 1..=max_n {
        let c = verify_geometric_identity(&p, n)?;
        if !c.holds() {
            return Ok(SuiteOutcome { checked: n as u64, counterexample: Some(format!("n = {n}, {c:?}")) });
        }
    }
    Ok(SuiteOutcome { checked: max_n as u64, counterexample: None })
}

/// Telescoping identity for `p = x`, `2 ≤ n ≤ max_n`, and `samples` values
/// of `t` drawn uniformly from `fragment` with a seeded generator.
pub fn telescoping_suite(
    fragment: &FragmentSpec,
    max_n: u32,
    samples: usize,
    seed: u64,
) -> Result<SuiteOutcome, DefinitionError> {
    // Sampling only indexes into the fragment, so its size needs no cap.
    let frag = enumerate_fragment(&fragment.clone().with_cap(u64::MAX))?;
    let p = fragment.ring().x();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ts: Vec<RingElement> = (0..samples).map(|_| frag.get(rng.gen_range(0..frag.len()))).collect();
    let mut checked = 0;
    for n in 2..=max_n {
        for t in &ts {
            checked += 1;
            let c = verify_telescoping_identity(&p, n, t)?;
            if !c.holds() {
                return Ok(SuiteOutcome { checked, counterexample: Some(format!("n = {n}, t = {t}, {c:?}")) });
            }
        }
    }
    Ok(SuiteOutcome { checked, counterexample: None })
}

/// `z = a·x^n` with `x ∤ a`, for `z ≠ 0`.
pub fn decompose_power(z: &RingElement) -> Result<Option<(RingElement, u32)>, DefinitionError> {
    if z.is_zero() {
        return Ok(None);
    }
    let x = z.ring().x();
    let (mut a, mut n) = (z.clone(), 0);
    while let Some(q) = divide_exact(&a, &x, Side::Left)?.quotient {
        a = q;
        n += 1;
    }
    Ok(Some((a, n)))
}

/// `z` is literally a monomial `x^n`, `n ≥ 1`, with coefficient 1.
pub fn is_power_syntactic(z: &RingElement) -> bool {
    match (z.as_uni(), z.as_qplane()) {
        (Some(u), _) => {
            let c = u.coeffs();
            c.len() >= 2 && c[c.len() - 1].is_one() && c[..c.len() - 1].iter().all(|v| v.is_zero())
        }
        (_, Some(q)) => {
            let terms: Vec<_> = q.terms().collect();
            terms.len() == 1 && terms[0].0 .0 >= 1 && terms[0].0 .1 == 0 && terms[0].1.is_one()
        }
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowContradiction {
    pub element: RingElement,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowReport {
    pub checked: u64,
    pub powers: u64,
    pub non_powers: u64,
    pub proven_false_on_non_powers: u64,
    pub unknown_on_non_powers: u64,
    /// Elements where the semantic power test and the syntactic one differ.
    pub oracle_mismatches: Vec<RingElement>,
    pub contradictions: Vec<PowContradiction>,
    /// The formula is not refuted at `z = 1 = x⁰`, which is outside
    /// `{x, x², …}`.
    pub admits_one: bool,
}

impl PowReport {
    pub fn sound(&self) -> bool {
        self.oracle_mismatches.is_empty() && self.contradictions.is_empty()
    }

    pub fn coverage(&self) -> f64 {
        if self.non_powers == 0 {
            return 1.0;
        }
        self.proven_false_on_non_powers as f64 / self.non_powers as f64
    }
}

/// Runs the power-set formula against the semantic decomposition on every
/// element of `fragment`, quantifying `d` over `divisors`.
pub fn pow_characterization_check(fragment: &FragmentSpec, divisors: &FragmentSpec) -> Result<PowReport, DefinitionError> {
    let ring = fragment.ring();
    if !ring.is_commutative() {
        return Err(DefinitionError::InvalidArgument(format!("{ring} is not commutative")));
    }
    if divisors.ring() != ring {
        return Err(RingError::ContextMismatch.into());
    }
    let x = ring.x();
    let formula = build_phi_pow(Some(divisors.clone()));
    let base = Environment::new(ring);
    let mut report = PowReport {
        checked: 0,
        powers: 0,
        non_powers: 0,
        proven_false_on_non_powers: 0,
        unknown_on_non_powers: 0,
        oracle_mismatches: Vec::new(),
        contradictions: Vec::new(),
        admits_one: false,
    };
    let contradiction = |report: &mut PowReport, z: &RingElement, reason: String| {
        report.contradictions.push(PowContradiction { element: z.clone(), reason });
    };

    for z in enumerate_fragment(fragment)?.iter() {
        report.checked += 1;
        let semantic = is_power_of(&z, &x, u32::MAX)?.is_some();
        if semantic != is_power_syntactic(&z) {
            report.oracle_mismatches.push(z.clone());
        }
        let decomposition = decompose_power(&z)?;
        if let Some((a, n)) = &decomposition {
            let x_divides_a = divides(&x, a, Side::Left)?;
            if x_divides_a || a.mul(&x.pow(*n))? != z {
                contradiction(&mut report, &z, format!("bad decomposition a = {a}, n = {n}"));
            }
        }
        let unit_times_power = decomposition.as_ref().map_or(false, |(a, _)| crate::divisibility::is_unit(a));

        let env = base.clone().with_binding("t", z.clone())?;
        let verdict = eval_formula(&formula, &env)?;
        // Counterexample bindings only come from the d-quantifier.
        let forall_refuted = matches!(&verdict, Verdict::ProvenFalse(b) if !b.is_empty());
        if forall_refuted && unit_times_power {
            contradiction(&mut report, &z, format!("divisor condition refuted by {verdict} on a unit times a power"));
        }
        if verdict.is_true() {
            contradiction(&mut report, &z, "bounded universal claimed proven".into());
        }
        if z.is_one() {
            report.admits_one = !verdict.is_false();
        }
        if semantic {
            report.powers += 1;
            if verdict.is_false() {
                contradiction(&mut report, &z, format!("power refuted: {verdict}"));
            }
        } else {
            report.non_powers += 1;
            match verdict {
                Verdict::ProvenFalse(_) => report.proven_false_on_non_powers += 1,
                Verdict::UnknownUpTo(_) => report.unknown_on_non_powers += 1,
                Verdict::ProvenTrue(_) => {}
            }
        }
    }
    Ok(report)
}
