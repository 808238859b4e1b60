use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{qplane::QPlaneElement, unipoly::UniPoly, Repr, RingElement, RingError};
use crate::numeric::GaussianRational;

/// Which scalars may appear as coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Integer,
    Rational,
    GaussianRational,
}

impl CoefficientDomain {
    pub fn contains(self, c: &GaussianRational) -> bool {
        match self {
            CoefficientDomain::Integer => c.is_rational_integer().is_some(),
            CoefficientDomain::Rational => c.is_real(),
            CoefficientDomain::GaussianRational => true,
        }
    }

    /// Units of the coefficient ring: `±1` for ℤ, every nonzero value otherwise.
    pub fn is_unit(self, c: &GaussianRational) -> bool {
        match self {
            CoefficientDomain::Integer => {
                c.is_rational_integer().map_or(false, |n| n.abs() == BigInt::from(1))
            }
            _ => !c.is_zero(),
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoefficientDomain::Integer)
    }

    pub fn name(self) -> &'static str {
        match self {
            CoefficientDomain::Integer => "Z",
            CoefficientDomain::Rational => "Q",
            CoefficientDomain::GaussianRational => "Q(i)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    UnivariatePoly,
    QuantumPlane,
}

/// The ambient ring: a univariate polynomial ring over one of the coefficient
/// domains, or the quantum affine plane over `ℚ(i)` with a fixed nonzero `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    kind: RingKind,
    coeffs: CoefficientDomain,
    q: Option<GaussianRational>,
}

impl RingContext {
    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn coefficients(&self) -> CoefficientDomain {
        self.coeffs
    }

    /// The commutation parameter; `None` outside the quantum plane.
    pub fn q(&self) -> Option<&GaussianRational> {
        self.q.as_ref()
    }

    pub fn is_commutative(&self) -> bool {
        match self.kind {
            RingKind::UnivariatePoly => true,
            RingKind::QuantumPlane => self.q.as_ref().map_or(false, GaussianRational::is_one),
        }
    }

    pub fn has_generator(&self, name: &str) -> bool {
        match name {
            "x" => true,
            "y" => self.kind == RingKind::QuantumPlane,
            _ => false,
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.kind, &self.q) {
            (RingKind::QuantumPlane, Some(q)) => write!(f, "{}_q[x,y] (q = {q})", self.coeffs.name()),
            _ => write!(f, "{}[x]", self.coeffs.name()),
        }
    }
}

/// Shared handle to a [`RingContext`]. Every [`RingElement`] carries one.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingContext>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl std::ops::Deref for Ring {
    type Target = RingContext;
    fn deref(&self) -> &RingContext {
        &self.0
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Ring {
    pub fn polynomial(coeffs: CoefficientDomain) -> Ring {
        Ring(Arc::new(RingContext { kind: RingKind::UnivariatePoly, coeffs, q: None }))
    }

    /// `ℤ[x]`
    pub fn int_poly() -> Ring {
        Ring::polynomial(CoefficientDomain::Integer)
    }

    /// `ℚ[x]`
    pub fn rat_poly() -> Ring {
        Ring::polynomial(CoefficientDomain::Rational)
    }

    /// `ℚ(i)[x]`
    pub fn gauss_poly() -> Ring {
        Ring::polynomial(CoefficientDomain::GaussianRational)
    }

    /// Quantum affine plane over `ℚ(i)`; rejects `q = 0`.
    pub fn quantum_plane(q: GaussianRational) -> Result<Ring, RingError> {
        if q.is_zero() {
            return Err(RingError::ZeroParameter);
        }
        Ok(Ring(Arc::new(RingContext {
            kind: RingKind::QuantumPlane,
            coeffs: CoefficientDomain::GaussianRational,
            q: Some(q),
        })))
    }

    pub fn context(&self) -> &RingContext {
        &self.0
    }

    pub(crate) fn wrap(&self, repr: Repr) -> RingElement {
        RingElement::from_parts(self.clone(), repr)
    }

    pub fn zero(&self) -> RingElement {
        match self.kind {
            RingKind::UnivariatePoly => self.wrap(Repr::Uni(UniPoly::zero())),
            RingKind::QuantumPlane => self.wrap(Repr::QPlane(QPlaneElement::zero())),
        }
    }

    pub fn one(&self) -> RingElement {
        self.embed_integer(1)
    }

    /// The constant `c`; fails when `c` is outside the coefficient domain.
    pub fn constant(&self, c: GaussianRational) -> Result<RingElement, RingError> {
        if !self.coeffs.contains(&c) {
            return Err(RingError::OutsideDomain { value: c.to_string(), domain: self.coeffs.name() });
        }
        Ok(match self.kind {
            RingKind::UnivariatePoly => self.wrap(Repr::Uni(UniPoly::constant(c))),
            RingKind::QuantumPlane => self.wrap(Repr::QPlane(QPlaneElement::constant(c))),
        })
    }

    /// Image of `n` under the canonical homomorphism `ℤ → R`.
    pub fn embed_integer(&self, n: impl Into<BigInt>) -> RingElement {
        self.constant(GaussianRational::from_integer(n))
            .expect("integers lie in every coefficient domain")
    }

    pub fn x(&self) -> RingElement {
        self.generator("x").expect("x exists in every ring")
    }

    pub fn generator(&self, name: &str) -> Result<RingElement, RingError> {
        let one = GaussianRational::one();
        match (self.kind, name) {
            (RingKind::UnivariatePoly, "x") => {
                Ok(self.wrap(Repr::Uni(UniPoly::from_coeffs(vec![GaussianRational::zero(), one]))))
            }
            (RingKind::QuantumPlane, "x") => Ok(self.wrap(Repr::QPlane(QPlaneElement::monomial(1, 0, one)))),
            (RingKind::QuantumPlane, "y") => Ok(self.wrap(Repr::QPlane(QPlaneElement::monomial(0, 1, one)))),
            _ => Err(RingError::UnknownGenerator(name.to_string())),
        }
    }

    /// Univariate element from coefficients (lowest degree first).
    pub fn uni_from_coeffs(&self, coeffs: Vec<GaussianRational>) -> Result<RingElement, RingError> {
        if self.kind != RingKind::UnivariatePoly {
            return Err(RingError::WrongKind);
        }
        if let Some(bad) = coeffs.iter().find(|c| !self.coeffs.contains(c)) {
            return Err(RingError::OutsideDomain { value: bad.to_string(), domain: self.coeffs.name() });
        }
        Ok(self.wrap(Repr::Uni(UniPoly::from_coeffs(coeffs))))
    }

    /// Quantum-plane element from `(xdeg, ydeg, coefficient)` terms in normal
    /// order `c·x^a·y^b`. Repeated bidegrees are summed.
    pub fn qplane_from_terms(
        &self,
        terms: impl IntoIterator<Item = (u32, u32, GaussianRational)>,
    ) -> Result<RingElement, RingError> {
        if self.kind != RingKind::QuantumPlane {
            return Err(RingError::WrongKind);
        }
        Ok(self.wrap(Repr::QPlane(QPlaneElement::from_terms(terms))))
    }
}
