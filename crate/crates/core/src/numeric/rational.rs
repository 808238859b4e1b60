use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::NumericError;

/// Canonical rational number: positive denominator, coprime parts, zero as `0/1`.
///
/// Values whose parts fit in an `i64` are stored inline and combined with
/// `i128` intermediates; anything larger moves to a `BigRational`. Each value
/// has exactly one representation, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Numerator and positive denominator, coprime, numerator not `i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn fits(v: i128) -> Option<i64> {
    i64::try_from(v).ok().filter(|&v| v != i64::MIN)
}

/// Binary gcd, through `u64` when both fit.
fn gcd(a: i128, b: i128) -> i128 {
    let (a, b) = (a.unsigned_abs(), b.unsigned_abs());
    if a <= u64::MAX as u128 && b <= u64::MAX as u128 {
        return num_integer::Integer::gcd(&(a as u64), &(b as u64)) as i128;
    }
    num_integer::Integer::gcd(&a, &b) as i128
}

impl Rational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, NumericError> {
        let d = denominator.into();
        if d.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(Rational::from_big(BigRational::new(numerator.into(), d)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational::from_big(BigRational::from_integer(n.into()))
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64().filter(|&n| n != i64::MIN), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    /// Reduces `n/d` given as `i128` with `d > 0`.
    #[inline]
    fn from_parts(n: i128, d: i128) -> Self {
        if d == 1 {
            if let Some(n) = fits(n) {
                return Rational(Repr::Small(n, 1));
            }
        }
        let g = gcd(n, d);
        let (n, d) = (n / g, d / g);
        match (fits(n), fits(d)) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn numerator(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denominator(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numerator())
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, NumericError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn recip(&self) -> Result<Rational, NumericError> {
        match &self.0 {
            Repr::Small(0, _) => Err(NumericError::DivisionByZero),
            Repr::Small(n, d) if *n < 0 => Ok(Rational::from_parts(-(*d as i128), -(*n as i128))),
            Repr::Small(n, d) => Ok(Rational(Repr::Small(*d, *n))),
            Repr::Big(r) => Ok(Rational::from_big(r.recip())),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        if n == i64::MIN {
            return Rational::from_integer(n);
        }
        Rational(Repr::Small(n, 1))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (_, Repr::Small(0, _)) => self.clone(),
            (Repr::Small(0, _), _) => rhs.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) if b == d => Rational::from_parts(*a as i128 + *c as i128, *b as i128),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_parts(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &-rhs
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Rational::zero(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(1, 1), _) => rhs.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == 1 && d == 1 {
                    return Rational::from_parts(a * c, 1);
                }
                let (g1, g2) = (gcd(a, d), gcd(c, b));
                Rational::from_parts((a / g1) * (c / g2), (b / g2) * (d / g1))
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            // Small numerators exclude i64::MIN, so negation cannot overflow.
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(r) => Rational::from_big(-(**r).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn canonical_on_construction() {
        let a = r(4, -6);
        assert_eq!(a.numerator(), BigInt::from(-2));
        assert_eq!(a.denominator(), BigInt::from(3));
        let z = r(0, -5);
        assert_eq!(z.denominator(), BigInt::from(1));
        assert!(z.is_zero());
        assert_eq!(Rational::new(1, 0), Err(NumericError::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(r(-1, 2).to_string(), "-1/2");
        assert_eq!(r(4, 2).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| r(n, d))
    }

    fn is_canonical(x: &Rational) -> bool {
        use num_traits::One;
        x.denominator() > BigInt::zero() && x.numerator().gcd(&x.denominator()).is_one()
    }

    /// Straight `BigRational` arithmetic as the reference.
    fn big(x: &Rational) -> BigRational {
        BigRational::new(x.numerator(), x.denominator())
    }

    fn wide() -> impl Strategy<Value = Rational> {
        let edge = prop::sample::select(vec![i64::MAX, i64::MIN + 1, i64::MIN, 1 << 40, -(1 << 62), 3, -7]);
        prop_oneof![
            small(),
            (edge.clone(), 1i64..i64::MAX).prop_map(|(n, d)| r(n, d)),
            (any::<i64>(), edge.prop_filter("nonzero", |d| *d != 0)).prop_map(|(n, d)| r(n, d)),
            (any::<i128>(), 1u64..u64::MAX).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.recip().unwrap()).is_one());
            }
            for x in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(is_canonical(&x));
            }
        }

        #[test]
        fn agrees_with_big_rational(a in wide(), b in wide()) {
            prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
            prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
            prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
            prop_assert_eq!(big(&-&a), -big(&a));
            prop_assert_eq!(a.cmp(&b), big(&a).cmp(&big(&b)));
            if !b.is_zero() {
                prop_assert_eq!(big(&a.checked_div(&b).unwrap()), big(&a) / big(&b));
            }
            // One representation per value.
            prop_assert_eq!(Rational::new(a.numerator(), a.denominator()).unwrap(), a.clone());
            let round = &(&a + &b) - &b;
            prop_assert_eq!(round, a);
        }
    }
}
