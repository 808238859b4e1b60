//! Exact scalar arithmetic: canonical rationals and Gaussian rationals `ℚ(i)`.
//!
//! Every coefficient of every ring in this crate is a [`GaussianRational`];
//! the coefficient domain of a ring decides which of those values are legal.

mod gaussian;
mod rational;

pub use gaussian::GaussianRational;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Arithmetic operation selector used by the scalar and ring front ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Applies `op` to two rationals. `Neg` ignores `b`.
pub fn rational_arith(op: ArithOp, a: &Rational, b: &Rational) -> Result<Rational, NumericError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
        ArithOp::Neg => -a,
    })
}

/// Applies `op` to two Gaussian rationals. `Neg` ignores `b`.
pub fn gaussian_arith(
    op: ArithOp,
    a: &GaussianRational,
    b: &GaussianRational,
) -> Result<GaussianRational, NumericError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
        ArithOp::Neg => -a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(rational_arith(ArithOp::Add, &r(1, 2), &r(1, 3)).unwrap(), r(5, 6));
        assert_eq!(rational_arith(ArithOp::Mul, &r(2, 3), &r(3, 2)).unwrap(), r(1, 1));
        assert_eq!(
            rational_arith(ArithOp::Div, &r(1, 1), &r(0, 1)),
            Err(NumericError::DivisionByZero)
        );
    }

    #[test]
    fn gaussian_examples() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        assert_eq!(
            gaussian_arith(ArithOp::Mul, &i, &i).unwrap(),
            GaussianRational::from_integer(-1)
        );
        assert_eq!(gaussian_arith(ArithOp::Div, &one, &i).unwrap(), -&i);
        let a = GaussianRational::new(r(1, 1), r(2, 1));
        let b = GaussianRational::new(r(3, 1), r(-2, 1));
        assert_eq!(
            gaussian_arith(ArithOp::Add, &a, &b).unwrap(),
            GaussianRational::from_integer(4)
        );
        assert_eq!(
            gaussian_arith(ArithOp::Div, &a, &GaussianRational::zero()),
            Err(NumericError::DivisionByZero)
        );
    }
}
