use std::collections::BTreeMap;

use crate::numeric::GaussianRational;

/// Exponent pair `(xdeg, ydeg)` of a normal-order monomial `x^a·y^b`.
pub type Bidegree = (u32, u32);

/// Element of the quantum affine plane in normal form `Σ c·x^a·y^b`.
///
/// Sparse: only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPlaneElement {
    terms: BTreeMap<Bidegree, GaussianRational>,
}

/// Product of two normal-order monomials under the rewrite `y·x → q·x·y`.
///
/// `(c₁x^a y^b)·(c₂x^c y^d) = c₁c₂·q^(b·c)·x^(a+c) y^(b+d)`.
pub fn qplane_monomial_product(
    m1: (Bidegree, &GaussianRational),
    m2: (Bidegree, &GaussianRational),
    q: &GaussianRational,
) -> (Bidegree, GaussianRational) {
    let ((a, b), c1) = m1;
    let ((c, d), c2) = m2;
    let twist = q.pow(b * c);
    ((a + c, b + d), &(c1 * c2) * &twist)
}

impl QPlaneElement {
    pub fn zero() -> Self {
        QPlaneElement::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(xdeg: u32, ydeg: u32, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xdeg, ydeg), c);
        }
        QPlaneElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, GaussianRational)>) -> Self {
        Self::collect(terms.into_iter().map(|(a, b, c)| ((a, b), c)).collect())
    }

    /// Sums like terms and drops zeros.
    fn collect(mut raw: Vec<(Bidegree, GaussianRational)>) -> Self {
        raw.sort_unstable_by_key(|(k, _)| *k);
        let mut merged: Vec<(Bidegree, GaussianRational)> = Vec::with_capacity(raw.len());
        for (k, c) in raw {
            match merged.last_mut() {
                Some((last, acc)) if *last == k => *acc = &*acc + &c,
                _ => merged.push((k, c)),
            }
        }
        QPlaneElement { terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn add_term(&mut self, deg: Bidegree, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&deg) {
            Some(slot) => {
                let sum = &*slot + c;
                if sum.is_zero() {
                    self.terms.remove(&deg);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(deg, c.clone());
            }
        }
    }

    /// Terms in ascending lexicographic bidegree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Bidegree, &GaussianRational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, deg: Bidegree) -> GaussianRational {
        self.terms.get(&deg).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest x-exponent and largest y-exponent over the support.
    pub fn bidegree(&self) -> Option<Bidegree> {
        if self.terms.is_empty() {
            return None;
        }
        let xd = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let yd = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        Some((xd, yd))
    }

    pub fn add(&self, other: &QPlaneElement) -> QPlaneElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v);
        }
        out
    }

    pub fn neg(&self) -> QPlaneElement {
        QPlaneElement { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    pub fn sub(&self, other: &QPlaneElement) -> QPlaneElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, &-v);
        }
        out
    }

    pub fn mul(&self, other: &QPlaneElement, q: &GaussianRational) -> QPlaneElement {
        if self.is_zero() || other.is_zero() {
            return QPlaneElement::zero();
        }
        let max_y = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let max_x = other.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let q_pows = QPowers::new(q, max_y * max_x);
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &other.terms {
                let k = b * c;
                let coeff = if k == 0 { c1 * c2 } else { &(c1 * c2) * q_pows.get(k) };
                raw.push(((a + c, b + d), coeff));
            }
        }
        QPlaneElement::collect(raw)
    }
}

/// Cached `q^0 ..= q^max`.
pub(crate) struct QPowers(Vec<GaussianRational>);

impl QPowers {
    pub(crate) fn new(q: &GaussianRational, max: u32) -> Self {
        let mut v = Vec::with_capacity(max as usize + 1);
        v.push(GaussianRational::one());
        for k in 1..=max as usize {
            let next = &v[k - 1] * q;
            v.push(next);
        }
        QPowers(v)
    }

    pub(crate) fn get(&self, k: u32) -> &GaussianRational {
        &self.0[k as usize]
    }
}
