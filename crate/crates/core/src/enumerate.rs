//! Finite, deterministically ordered fragments of a ring.
//!
//! A fragment is every element whose coefficients (at the positions allowed by
//! a degree or bidegree bound) are drawn from a finite value list determined
//! by a height `H`. Element `k` of a fragment is obtained by writing `k` in
//! mixed radix over the value list, the constant-term position being the most
//! significant digit. The resulting order is lexicographic on coefficient
//! tuples `(c₀, c₁, …)` with values compared in the order of
//! [`coefficient_values`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::numeric::{GaussianRational, Rational};
use crate::ring::{Bidegree, CoefficientDomain, Ring, RingElement, RingKind};

/// Default upper bound on the number of elements in one fragment.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("fragment would contain {projected} elements, above the cap of {cap}")]
    FragmentTooLarge { projected: String, cap: u64 },
    #[error("degree bound does not match the ring ({0})")]
    ShapeMismatch(String),
    #[error("coefficient height must be at least 1")]
    ZeroHeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FragmentShape {
    /// Univariate: degree at most the bound.
    Degree(u32),
    /// Quantum plane: x-degree and y-degree each at most the bound.
    Bidegree(u32, u32),
}

/// Which coefficient values a fragment draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientRange {
    /// The full height-`H` value set of the ring's coefficient domain:
    /// integers in `[-H, H]`, rationals `n/d` with `1 ≤ d ≤ H` and
    /// `|n/d| ≤ H`, and Gaussian rationals with both parts of that form.
    #[default]
    Domain,
    /// Rational integers in `[-H, H]` only.
    Integers,
    /// Gaussian integers `a + b·i`, `|a|, |b| ≤ H`, intersected with the domain.
    GaussianIntegers,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FragmentSpec {
    ring: Ring,
    shape: FragmentShape,
    height: u32,
    range: CoefficientRange,
    cap: u64,
}

impl FragmentSpec {
    pub fn new(ring: &Ring, shape: FragmentShape, height: u32) -> Result<Self, EnumerationError> {
        match (ring.kind(), shape) {
            (RingKind::UnivariatePoly, FragmentShape::Degree(_))
            | (RingKind::QuantumPlane, FragmentShape::Bidegree(..)) => {}
            _ => return Err(EnumerationError::ShapeMismatch(format!("{shape:?} for {ring}"))),
        }
        if height == 0 {
            return Err(EnumerationError::ZeroHeight);
        }
        Ok(FragmentSpec { ring: ring.clone(), shape, height, range: CoefficientRange::Domain, cap: DEFAULT_CAP })
    }

    /// Univariate fragment of degree at most `degree`.
    pub fn degree(ring: &Ring, degree: u32, height: u32) -> Result<Self, EnumerationError> {
        Self::new(ring, FragmentShape::Degree(degree), height)
    }

    /// Quantum-plane fragment with bidegree at most `(dx, dy)`.
    pub fn bidegree(ring: &Ring, dx: u32, dy: u32, height: u32) -> Result<Self, EnumerationError> {
        Self::new(ring, FragmentShape::Bidegree(dx, dy), height)
    }

    pub fn with_range(mut self, range: CoefficientRange) -> Self {
        self.range = range;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn shape(&self) -> FragmentShape {
        self.shape
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn range(&self) -> CoefficientRange {
        self.range
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn positions(&self) -> Vec<Bidegree> {
        match self.shape {
            FragmentShape::Degree(d) => (0..=d).map(|k| (k, 0)).collect(),
            FragmentShape::Bidegree(dx, dy) => {
                (0..=dx).flat_map(|a| (0..=dy).map(move |b| (a, b))).collect()
            }
        }
    }
}

impl Serialize for FragmentSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FragmentSpec", 4)?;
        st.serialize_field("ring", &self.ring.to_string())?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("height", &self.height)?;
        st.serialize_field("range", &self.range)?;
        st.end()
    }
}

impl fmt::Display for FragmentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            FragmentShape::Degree(d) => write!(f, "deg<={d}")?,
            FragmentShape::Bidegree(a, b) => write!(f, "bideg<=({a},{b})")?,
        }
        write!(f, ",H={}", self.height)?;
        match self.range {
            CoefficientRange::Domain => Ok(()),
            CoefficientRange::Integers => write!(f, ",integers"),
            CoefficientRange::GaussianIntegers => write!(f, ",gaussian-integers"),
        }
    }
}

fn rationals(height: u32) -> Vec<Rational> {
    let h = i64::from(height);
    let mut v: Vec<Rational> = (1..=h)
        .flat_map(|d| (-h * d..=h * d).map(move |n| Rational::new(n, d).expect("d >= 1")))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Sorted, duplicate-free coefficient values for a fragment.
pub fn coefficient_values(domain: CoefficientDomain, range: CoefficientRange, height: u32) -> Vec<GaussianRational> {
    let h = i64::from(height);
    let ints = || (-h..=h).map(GaussianRational::from_integer);
    let mut v: Vec<GaussianRational> = match (range, domain) {
        (CoefficientRange::Integers, _) | (CoefficientRange::Domain, CoefficientDomain::Integer) => ints().collect(),
        (CoefficientRange::Domain, CoefficientDomain::Rational) => {
            rationals(height).into_iter().map(GaussianRational::from).collect()
        }
        (CoefficientRange::Domain, CoefficientDomain::GaussianRational) => {
            let rs = rationals(height);
            rs.iter().flat_map(|re| rs.iter().map(move |im| GaussianRational::new(re.clone(), im.clone()))).collect()
        }
        (CoefficientRange::GaussianIntegers, _) => (-h..=h)
            .flat_map(|a| (-h..=h).map(move |b| GaussianRational::new(a.into(), b.into())))
            .filter(|c| domain.contains(c))
            .collect(),
    };
    v.sort();
    v.dedup();
    v
}

/// Exact element count of `spec`, or `None` if it overflows `u64`.
pub fn fragment_size(spec: &FragmentSpec) -> Option<u64> {
    let base = coefficient_values(spec.ring.coefficients(), spec.range, spec.height).len() as u64;
    let n = u32::try_from(spec.positions().len()).ok()?;
    base.checked_pow(n)
}

/// A materialized fragment: random access by canonical index, plus iteration.
#[derive(Debug, Clone)]
pub struct Fragment {
    spec: FragmentSpec,
    values: Vec<GaussianRational>,
    positions: Vec<Bidegree>,
    len: u64,
}

/// Builds the fragment described by `spec`, refusing sizes above its cap.
pub fn enumerate_fragment(spec: &FragmentSpec) -> Result<Fragment, EnumerationError> {
    let values = coefficient_values(spec.ring.coefficients(), spec.range, spec.height);
    let positions = spec.positions();
    let len = fragment_size(spec)
        .filter(|&n| n <= spec.cap)
        .ok_or_else(|| EnumerationError::FragmentTooLarge {
            projected: projected_size(values.len(), positions.len()),
            cap: spec.cap,
        })?;
    Ok(Fragment { spec: spec.clone(), values, positions, len })
}

fn projected_size(base: usize, exp: usize) -> String {
    let digits = exp as f64 * (base as f64).log10();
    if digits < 18.0 {
        (base as u64).pow(exp as u32).to_string()
    } else {
        format!("~1e{}", digits.floor())
    }
}

impl Fragment {
    pub fn spec(&self) -> &FragmentSpec {
        &self.spec
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ring(&self) -> &Ring {
        &self.spec.ring
    }

    /// Element at canonical index `index` (`index < len`).
    pub fn get(&self, index: u64) -> RingElement {
        assert!(index < self.len, "fragment index {index} out of range");
        let base = self.values.len() as u64;
        let mut digits = vec![0usize; self.positions.len()];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = (rest % base) as usize;
            rest /= base;
        }
        let ring = &self.spec.ring;
        match ring.kind() {
            RingKind::UnivariatePoly => {
                ring.uni_from_coeffs(digits.iter().map(|&d| self.values[d].clone()).collect())
            }
            RingKind::QuantumPlane => ring.qplane_from_terms(
                self.positions.iter().zip(&digits).map(|(&(a, b), &d)| (a, b, self.values[d].clone())),
            ),
        }
        .expect("fragment values lie in the coefficient domain")
    }

    pub fn iter(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.len).map(move |k| self.get(k))
    }

    /// Elements with their canonical indices.
    pub fn indexed(&self) -> impl Iterator<Item = (u64, RingElement)> + '_ {
        (0..self.len).map(move |k| (k, self.get(k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn int_frag(d: u32, h: u32) -> Fragment {
        enumerate_fragment(&FragmentSpec::degree(&Ring::int_poly(), d, h).unwrap()).unwrap()
    }

    #[test]
    fn integer_counts() {
        assert_eq!(int_frag(1, 1).len(), 9);
        assert_eq!(int_frag(2, 2).len(), 125);
        assert_eq!(int_frag(0, 3).len(), 7);
        let consts: Vec<String> = int_frag(0, 3).iter().map(|e| e.to_string()).collect();
        assert_eq!(consts, ["-3", "-2", "-1", "0", "1", "2", "3"]);
    }

    #[test]
    fn rational_count_after_dedup() {
        let spec = FragmentSpec::degree(&Ring::rat_poly(), 0, 2).unwrap();
        assert_eq!(fragment_size(&spec), Some(9));
        let f = enumerate_fragment(&spec).unwrap();
        let shown: Vec<String> = f.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["-2", "-3/2", "-1", "-1/2", "0", "1/2", "1", "3/2", "2"]);
    }

    #[test]
    fn quantum_integer_subset() {
        let r = Ring::quantum_plane(2.into()).unwrap();
        let spec = FragmentSpec::bidegree(&r, 1, 1, 1).unwrap().with_range(CoefficientRange::Integers);
        assert_eq!(enumerate_fragment(&spec).unwrap().len(), 81);
    }

    #[test]
    fn gaussian_value_counts() {
        assert_eq!(coefficient_values(CoefficientDomain::GaussianRational, CoefficientRange::Domain, 2).len(), 81);
        assert_eq!(coefficient_values(CoefficientDomain::GaussianRational, CoefficientRange::GaussianIntegers, 1).len(), 9);
        assert_eq!(coefficient_values(CoefficientDomain::Rational, CoefficientRange::GaussianIntegers, 1).len(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let spec = FragmentSpec::degree(&Ring::int_poly(), 3, 1).unwrap().with_cap(80);
        assert!(matches!(enumerate_fragment(&spec), Err(EnumerationError::FragmentTooLarge { .. })));
        let huge = FragmentSpec::bidegree(&Ring::quantum_plane(2.into()).unwrap(), 2, 2, 2).unwrap();
        match enumerate_fragment(&huge) {
            Err(EnumerationError::FragmentTooLarge { projected, .. }) => assert_eq!(projected, "150094635296999121"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shape_must_match_ring() {
        assert!(FragmentSpec::bidegree(&Ring::int_poly(), 1, 1, 1).is_err());
        assert!(FragmentSpec::degree(&Ring::quantum_plane(2.into()).unwrap(), 1, 1).is_err());
        assert_eq!(FragmentSpec::degree(&Ring::int_poly(), 1, 0), Err(EnumerationError::ZeroHeight));
    }

    fn specs() -> Vec<FragmentSpec> {
        let qp = Ring::quantum_plane(GaussianRational::i()).unwrap();
        vec![
            FragmentSpec::degree(&Ring::int_poly(), 2, 2).unwrap(),
            FragmentSpec::degree(&Ring::rat_poly(), 1, 3).unwrap(),
            FragmentSpec::degree(&Ring::gauss_poly(), 1, 1).unwrap(),
            FragmentSpec::degree(&Ring::gauss_poly(), 1, 2).unwrap().with_range(CoefficientRange::GaussianIntegers),
            FragmentSpec::bidegree(&qp, 1, 1, 1).unwrap().with_range(CoefficientRange::Integers),
            FragmentSpec::bidegree(&qp, 1, 0, 1).unwrap(),
        ]
    }

    #[test]
    fn size_determinism_closure_and_round_trip() {
        for spec in specs() {
            let f = enumerate_fragment(&spec).unwrap();
            let a: Vec<RingElement> = f.iter().collect();
            let b: Vec<RingElement> = enumerate_fragment(&spec).unwrap().iter().collect();
            assert_eq!(a, b, "{spec}");
            assert_eq!(a.len() as u64, fragment_size(&spec).unwrap(), "{spec}");
            let shown: HashSet<String> = a.iter().map(|e| e.to_string()).collect();
            assert_eq!(shown.len(), a.len(), "duplicates in {spec}");
            assert!(shown.contains("0") && shown.contains("1"), "{spec}");
            for e in &a {
                assert!(shown.contains(&e.neg().to_string()), "{spec}: -({e}) missing");
                let back = crate::parse::parse_element(&e.to_string(), f.ring()).unwrap();
                assert_eq!(&back, e, "{spec}: display round trip");
            }
        }
    }

    #[test]
    fn order_is_lexicographic_on_coefficient_tuples() {
        let f = int_frag(1, 1);
        let tuples: Vec<Vec<GaussianRational>> =
            f.iter().map(|e| (0..2).map(|k| e.as_uni().unwrap().coeff(k)).collect()).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
    }
}
