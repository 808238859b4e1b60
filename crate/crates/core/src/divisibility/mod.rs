//! Decision procedures for sided divisibility, units, membership in the
//! positive powers of an element, and brute-force zero-divisor scans.
//!
//! `f | g` on the [`Side::Left`] means `g = f·h` for some `h`; on the right it
//! means `g = h·f`. Every built-in ring is a domain, so a quotient is unique
//! when it exists.

pub mod linsys;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{enumerate_fragment, EnumerationError, FragmentSpec};
use crate::numeric::GaussianRational;
use crate::ring::qplane::QPowers;
use crate::ring::{Bidegree, CoefficientDomain, QPlaneElement, Repr, RingElement, RingError, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `f | g ⇔ ∃h. g = f·h`
    Left,
    /// `f | g ⇔ ∃h. g = h·f`
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisibilityError {
    #[error("division by the zero element")]
    DivisionByZeroElement,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0} is zero or a unit; its powers do not form an infinite set")]
    InvalidBase(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

/// Result of an exact division: the quotient when the divisor divides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionOutcome {
    pub quotient: Option<RingElement>,
}

impl DivisionOutcome {
    pub fn divides(&self) -> bool {
        self.quotient.is_some()
    }
}

/// `f·h` on the left side, `h·f` on the right.
pub fn compose(f: &RingElement, h: &RingElement, side: Side) -> Result<RingElement, RingError> {
    match side {
        Side::Left => f.mul(h),
        Side::Right => h.mul(f),
    }
}

/// Decides whether `f` divides `g` on `side` and returns the quotient.
pub fn divide_exact(g: &RingElement, f: &RingElement, side: Side) -> Result<DivisionOutcome, DivisibilityError> {
    g.check_same(f)?;
    if f.is_zero() {
        return Err(DivisibilityError::DivisionByZeroElement);
    }
    if g.is_zero() {
        return Ok(DivisionOutcome { quotient: Some(g.ring().zero()) });
    }
    let ring = g.ring();
    let quotient = match (g.repr(), f.repr()) {
        (Repr::Uni(gp), Repr::Uni(fp)) => divide_uni(gp, fp, ring.coefficients()).map(Repr::Uni),
        (Repr::QPlane(ge), Repr::QPlane(fe)) => {
            let q = ring.q().expect("quantum plane carries q");
            divide_qplane(ge, fe, q, side).map(Repr::QPlane)
        }
        _ => return Err(RingError::ContextMismatch.into()),
    };
    Ok(DivisionOutcome { quotient: quotient.map(|r| ring.wrap(r)) })
}

/// Shorthand for `divide_exact(g, f, side)?.divides()`.
pub fn divides(f: &RingElement, g: &RingElement, side: Side) -> Result<bool, DivisibilityError> {
    if f.is_zero() {
        g.check_same(f)?;
        return Ok(g.is_zero());
    }
    Ok(divide_exact(g, f, side)?.divides())
}

/// Univariate exact division. Over ℤ the division runs in ℚ(i)[x] and the
/// quotient must come out integral: any ℤ[x] quotient is also the unique
/// field quotient.
fn divide_uni(g: &UniPoly, f: &UniPoly, dom: CoefficientDomain) -> Option<UniPoly> {
    let (gd, fd) = (g.degree()?, f.degree()?);
    if fd > gd {
        return None;
    }
    if dom == CoefficientDomain::Integer && !integer_prefilter(g, f) {
        return None;
    }
    let (q, r) = g.div_rem(f)?;
    if !r.is_zero() {
        return None;
    }
    if !q.coeffs().iter().all(|c| dom.contains(c)) {
        return None;
    }
    Some(q)
}

/// Necessary conditions for `f | g` in ℤ[x] read off the leading and
/// lowest-order coefficients.
fn integer_prefilter(g: &UniPoly, f: &UniPoly) -> bool {
    let int = |c: &GaussianRational| c.is_rational_integer().expect("integer coefficients");
    let divides_int = |a: &BigInt, b: &BigInt| b.is_multiple_of(a);
    let (fl, gl) = (int(f.leading().expect("nonzero")), int(g.leading().expect("nonzero")));
    if !divides_int(&fl, &gl) {
        return false;
    }
    let lowest = |p: &UniPoly| p.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero");
    let (fo, go) = (lowest(f), lowest(g));
    if fo > go {
        return false;
    }
    let (f0, g0) = (int(&f.coeff(fo)), int(&g.coeff(go)));
    divides_int(&f0, &g0)
}

/// Quantum-plane exact division by solving for the quotient's coefficients.
///
/// Bidegrees add under multiplication, so any quotient is supported in the
/// box `[0, xdeg g − xdeg f] × [0, ydeg g − ydeg f]`; the coefficients of
/// `f·h` (or `h·f`) on `g`'s box give a linear system that is consistent
/// exactly when `f` divides `g`.
fn divide_qplane(g: &QPlaneElement, f: &QPlaneElement, q: &GaussianRational, side: Side) -> Option<QPlaneElement> {
    let (gx, gy) = g.bidegree()?;
    let (fx, fy) = f.bidegree()?;
    if fx > gx || fy > gy {
        return None;
    }
    let (hx, hy) = (gx - fx, gy - fy);
    let unknowns: Vec<Bidegree> = (0..=hx).flat_map(|i| (0..=hy).map(move |j| (i, j))).collect();
    let twist_max = match side {
        Side::Left => fy * hx,
        Side::Right => hy * fx,
    };
    let q_pows = QPowers::new(q, twist_max);

    let mut rows: BTreeMap<Bidegree, Vec<(usize, GaussianRational)>> = BTreeMap::new();
    for (col, &(i, j)) in unknowns.iter().enumerate() {
        for ((a, b), c) in f.terms() {
            let twist = match side {
                Side::Left => q_pows.get(b * i),
                Side::Right => q_pows.get(j * a),
            };
            rows.entry((a + i, b + j)).or_default().push((col, c * twist));
        }
    }
    if g.terms().any(|(deg, _)| !rows.contains_key(&deg)) {
        return None;
    }
    let system = rows.into_iter().map(|(deg, entries)| (entries, g.coeff(deg))).collect();
    let solution = linsys::solve(unknowns.len(), system)?;
    Some(QPlaneElement::from_terms(unknowns.iter().zip(solution).map(|(&(i, j), c)| (i, j, c))))
}

/// Units: constants whose value is a unit of the coefficient domain.
pub fn is_unit(z: &RingElement) -> bool {
    z.constant_value().map_or(false, |c| z.ring().coefficients().is_unit(&c))
}

/// `Some(n)` with `1 ≤ n ≤ max_exp` iff `z = p^n`.
///
/// Strips left factors of `p` one at a time; the power set starts at `p¹`, so
/// `z = 1` is never a member.
pub fn is_power_of(z: &RingElement, p: &RingElement, max_exp: u32) -> Result<Option<u32>, DivisibilityError> {
    z.check_same(p)?;
    if p.is_zero() || is_unit(p) {
        return Err(DivisibilityError::InvalidBase(p.to_string()));
    }
    if z.is_zero() {
        return Ok(None);
    }
    let mut cur = z.clone();
    for n in 1..=max_exp {
        match divide_exact(&cur, p, Side::Left)?.quotient {
            None => return Ok(None),
            Some(rest) if rest.is_one() => return Ok(Some(n)),
            Some(rest) if is_unit(&rest) => return Ok(None),
            Some(rest) => cur = rest,
        }
    }
    Ok(None)
}

/// Outcome of an exhaustive scan over a fragment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub holds: bool,
    /// Elements examined before stopping.
    pub checked: u64,
    /// First violating element in canonical order.
    pub counterexample: Option<RingElement>,
}

impl ScanReport {
    fn holds(checked: u64) -> Self {
        ScanReport { holds: true, checked, counterexample: None }
    }

    fn violated(checked: u64, e: RingElement) -> Self {
        ScanReport { holds: false, checked, counterexample: Some(e) }
    }
}

/// Checks `f·g ≠ 0` and `g·f ≠ 0` for every nonzero `g` in the fragment.
pub fn not_zero_divisor_brute(f: &RingElement, fragment: &FragmentSpec) -> Result<ScanReport, DivisibilityError> {
    f.check_same(&fragment.ring().zero())?;
    if f.is_zero() {
        return Err(DivisibilityError::DivisionByZeroElement);
    }
    let frag = enumerate_fragment(fragment)?;
    let mut checked = 0;
    for g in frag.iter().filter(|g| !g.is_zero()) {
        checked += 1;
        if f.mul(&g)?.is_zero() || g.mul(f)?.is_zero() {
            return Ok(ScanReport::violated(checked, g));
        }
    }
    Ok(ScanReport::holds(checked))
}

/// Checks that `(x−1)·f` is a constant only for `f = 0`, over the fragment.
pub fn constant_annihilation_check(fragment: &FragmentSpec) -> Result<ScanReport, DivisibilityError> {
    let ring = fragment.ring();
    let x_minus_1 = ring.x().sub(&ring.one())?;
    let frag = enumerate_fragment(fragment)?;
    let mut checked = 0;
    for f in frag.iter() {
        checked += 1;
        if f.is_zero() {
            continue;
        }
        if x_minus_1.mul(&f)?.is_constant() {
            return Ok(ScanReport::violated(checked, f));
        }
    }
    Ok(ScanReport::holds(checked))
}

#[cfg(test)]
mod tests;
