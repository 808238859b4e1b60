use crate::numeric::GaussianRational;

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The last stored coefficient is nonzero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().map_or(false, GaussianRational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = &*o + s;
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division over the field `ℚ(i)`: `self = q·divisor + r` with
    /// `deg r < deg divisor`. Returns `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading()?.recip().ok()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Some((UniPoly::zero(), self.clone()));
        };
        let mut quot = vec![GaussianRational::zero(); nd - dd + 1];
        for k in (dd..=nd).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &lead_inv;
            let shift = k - dd;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + j] = &rem[shift + j] - &(&c * d);
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Some((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| GaussianRational::from_integer(c)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).coeffs().len(), 1);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn cube_minus_one() {
        assert_eq!(p(&[-1, 1]).mul(&p(&[1, 1, 1])), p(&[-1, 0, 0, 1]));
        let (q, r) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn division_remainder() {
        // x^2 + 1 = (x - 1)(x + 1) + 2
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert_eq!(r, p(&[2]));
        assert!(p(&[1]).div_rem(&UniPoly::zero()).is_none());
        let (q, r) = p(&[3]).div_rem(&p(&[0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[3]));
    }
}
