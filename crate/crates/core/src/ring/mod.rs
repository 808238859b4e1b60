//! Exact arithmetic in `ℤ[x]`, `ℚ[x]`, `ℚ(i)[x]` and the quantum affine plane
//! `ℚ(i)_q[x,y]`.
//!
//! Quantum-plane elements are kept in normal form `Σ c·x^a·y^b`. Products are
//! normalized with the rewrite `y·x → q·x·y`, which makes
//! `(2+y)·(3+x) = 6+2x+3y+2xy` at `q = 2`. Read literally, the relation
//! `xy = qyx` would instead give `y·x = q⁻¹·x·y`; the two readings differ by
//! `q ↦ q⁻¹`, and this crate follows the worked product.

mod context;
mod display;
pub mod qplane;
pub mod unipoly;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub use context::{CoefficientDomain, Ring, RingContext, RingKind};
pub use qplane::{qplane_monomial_product, Bidegree, QPlaneElement};
pub use unipoly::UniPoly;

use crate::numeric::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands belong to different rings")]
    ContextMismatch,
    #[error("q must be nonzero")]
    ZeroParameter,
    #[error("{value} is not in the coefficient domain {domain}")]
    OutsideDomain { value: String, domain: &'static str },
    #[error("ring has no generator named {0:?}")]
    UnknownGenerator(String),
    #[error("element constructor does not match the ring kind")]
    WrongKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Uni(UniPoly),
    QPlane(QPlaneElement),
}

/// An exact element of one of the built-in rings, tagged with its ring.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    repr: Repr,
}

/// Binary ring operation selector for [`ring_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Degree data reported by [`RingElement::inspect`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    /// Degree of the zero element.
    NegInfinity,
    Univariate(u32),
    Bidegree(u32, u32),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Univariate(d) => write!(f, "{d}"),
            Degree::Bidegree(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inspection {
    pub degree: Degree,
    pub is_constant: bool,
    pub constant_value: Option<GaussianRational>,
    pub is_zero: bool,
}

/// Applies `op` to `f` and `g`. `Neg` ignores `g` but still requires a shared ring.
pub fn ring_op(op: RingOp, f: &RingElement, g: &RingElement) -> Result<RingElement, RingError> {
    match op {
        RingOp::Add => f.add(g),
        RingOp::Sub => f.sub(g),
        RingOp::Mul => f.mul(g),
        RingOp::Neg => {
            f.check_same(g)?;
            Ok(f.neg())
        }
    }
}

impl RingElement {
    pub(crate) fn from_parts(ring: Ring, repr: Repr) -> Self {
        let e = RingElement { ring, repr };
        debug_assert!(e.coefficients_in_domain(), "coefficient left the domain: {e}");
        e
    }

    fn coefficients_in_domain(&self) -> bool {
        let dom = self.ring.coefficients();
        match &self.repr {
            Repr::Uni(p) => p.coeffs().iter().all(|c| dom.contains(c)),
            Repr::QPlane(e) => e.terms().all(|(_, c)| dom.contains(c)),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn as_uni(&self) -> Option<&UniPoly> {
        match &self.repr {
            Repr::Uni(p) => Some(p),
            Repr::QPlane(_) => None,
        }
    }

    pub fn as_qplane(&self) -> Option<&QPlaneElement> {
        match &self.repr {
            Repr::QPlane(e) => Some(e),
            Repr::Uni(_) => None,
        }
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    pub(crate) fn check_same(&self, other: &RingElement) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::ContextMismatch)
        }
    }

    fn lift(&self, repr: Repr) -> RingElement {
        RingElement::from_parts(self.ring.clone(), repr)
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Uni(a), Repr::Uni(b)) => self.lift(Repr::Uni(a.add(b))),
            (Repr::QPlane(a), Repr::QPlane(b)) => self.lift(Repr::QPlane(a.add(b))),
            _ => return Err(RingError::ContextMismatch),
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Uni(a), Repr::Uni(b)) => self.lift(Repr::Uni(a.sub(b))),
            (Repr::QPlane(a), Repr::QPlane(b)) => self.lift(Repr::QPlane(a.sub(b))),
            _ => return Err(RingError::ContextMismatch),
        })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        Ok(match (&self.repr, &other.repr) {
            (Repr::Uni(a), Repr::Uni(b)) => self.lift(Repr::Uni(a.mul(b))),
            (Repr::QPlane(a), Repr::QPlane(b)) => {
                let q = self.ring.q().expect("quantum plane carries q");
                self.lift(Repr::QPlane(a.mul(b, q)))
            }
            _ => return Err(RingError::ContextMismatch),
        })
    }

    pub fn neg(&self) -> RingElement {
        match &self.repr {
            Repr::Uni(a) => self.lift(Repr::Uni(a.neg())),
            Repr::QPlane(a) => self.lift(Repr::QPlane(a.neg())),
        }
    }

    /// `self^n` with `self^0 = 1`.
    pub fn pow(&self, mut n: u32) -> RingElement {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Uni(p) => p.is_zero(),
            Repr::QPlane(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map_or(false, |c| c.is_one())
    }

    /// The value when the element is a constant; zero counts as the constant 0.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        match &self.repr {
            Repr::Uni(p) => match p.degree() {
                None => Some(GaussianRational::zero()),
                Some(0) => Some(p.coeff(0)),
                Some(_) => None,
            },
            Repr::QPlane(e) => match e.bidegree() {
                None => Some(GaussianRational::zero()),
                Some((0, 0)) => Some(e.coeff((0, 0))),
                Some(_) => None,
            },
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// The integer value when the element is a constant rational integer.
    pub fn integer_value(&self) -> Option<BigInt> {
        self.constant_value().and_then(|c| c.is_rational_integer())
    }

    pub fn degree(&self) -> Degree {
        match &self.repr {
            Repr::Uni(p) => p.degree().map_or(Degree::NegInfinity, |d| Degree::Univariate(d as u32)),
            Repr::QPlane(e) => e.bidegree().map_or(Degree::NegInfinity, |(a, b)| Degree::Bidegree(a, b)),
        }
    }

    pub fn inspect(&self) -> Inspection {
        let constant_value = self.constant_value();
        Inspection {
            degree: self.degree(),
            is_constant: constant_value.is_some(),
            constant_value,
            is_zero: self.is_zero(),
        }
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self} in {})", self.ring)
    }
}

/// Serializes as the canonical display string.
impl serde::Serialize for RingElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
