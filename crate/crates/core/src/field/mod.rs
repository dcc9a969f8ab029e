//! The coefficient field ℚ(q).
//!
//! Everything in this crate is computed exactly over rational functions in a
//! single indeterminate `q`. Keeping `q` symbolic means it is automatically
//! not a root of unity, which is the standing assumption of the
//! representation theory built on top.

mod laurent;
mod poly;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::Error;

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Build a rational from a numerator and a nonzero denominator.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The quantum integer `[m] = (q^m - q^-m)/(q - q^-1)`, with `[0] = 0`.
pub fn qint(m: i64) -> Result<RatFunc, Error> {
    if m < 0 {
        return Err(Error::UndefinedQuantumIndex(m));
    }
    let mut l = LaurentPoly::zero();
    // telescoped: q^{m-1} + q^{m-3} + ... + q^{1-m}
    for j in 0..m {
        l.add_term(m - 1 - 2 * j, Rational::from_integer(1.into()));
    }
    Ok(l.to_ratfunc())
}

/// The quantum factorial `[m]! = [1][2]...[m]`, with `[0]! = 1`.
pub fn qfact(m: i64) -> Result<RatFunc, Error> {
    if m < 0 {
        return Err(Error::UndefinedQuantumIndex(m));
    }
    let mut acc = RatFunc::one();
    for k in 1..=m {
        acc = acc * qint(k)?;
    }
    Ok(acc)
}

/// `q - q^{-1}`, the denominator that keeps turning up.
pub fn q_minus_qinv() -> RatFunc {
    RatFunc::q() - RatFunc::q_pow(-1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_small_values() {
        assert!(qint(0).unwrap().is_zero());
        assert!(qint(1).unwrap().is_one());
        let three = RatFunc::q_pow(2) + RatFunc::one() + RatFunc::q_pow(-2);
        assert_eq!(qint(3).unwrap(), three);
        assert_eq!(qint(3).unwrap().to_string(), "q^2 + 1 + q^-2");
    }

    #[test]
    fn qint_rejects_negative_index() {
        let err = qint(-1).unwrap_err();
        assert!(err.to_string().contains("undefined quantum integer index"));
        assert!(qfact(-2).is_err());
    }

    #[test]
    fn qfact_small_values() {
        assert!(qfact(0).unwrap().is_one());
        assert_eq!(qfact(2).unwrap(), RatFunc::q() + RatFunc::q_pow(-1));
    }

    #[test]
    fn inverse_and_cancellation() {
        let d = q_minus_qinv();
        assert!((&d * &d.inv()).is_one());
        let q = RatFunc::q();
        let one = RatFunc::one();
        let quotient = (&q * &q - &one) / (&q - &one);
        assert_eq!(quotient, q + one);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(RatFunc::one().try_div(&RatFunc::zero()), Err(Error::DivisionByZero)));
        assert!(RatFunc::zero().try_inv().is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(qint(3).unwrap().evaluate(&rational(2, 1)).unwrap(), rational(21, 4));
        assert_eq!(RatFunc::one().evaluate(&rational(5, 1)).unwrap(), rational(1, 1));
        let f = RatFunc::one() / (RatFunc::q() - RatFunc::from_int(2));
        let err = f.evaluate(&rational(2, 1)).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
        assert!(err.to_string().contains("q - 2"));
    }

    #[test]
    fn renders_reciprocal_of_q_minus_qinv() {
        assert_eq!(q_minus_qinv().inv().to_string(), "1/(q - q^-1)");
        assert_eq!((-q_minus_qinv().inv()).to_string(), "-1/(q - q^-1)");
        let sq = q_minus_qinv().pow(2);
        assert_eq!(sq.to_string(), "q^2 - 2 + q^-2");
        assert_eq!((RatFunc::q() / sq).to_string(), "q/(q^2 - 2 + q^-2)");
        assert_eq!(RatFunc::from_rational(rational(-3, 2)).to_string(), "-3/2");
    }

    #[test]
    fn monomial_detection() {
        let x = RatFunc::q_pow(-3).scale(&rational(-1, 1));
        assert_eq!(x.as_signed_q_power(), Some((-1, -3)));
        assert_eq!((RatFunc::q() + RatFunc::one()).as_signed_q_power(), None);
        assert_eq!(RatFunc::from_int(2).as_signed_q_power(), None);
    }

    #[test]
    fn bar_involution() {
        let f = (RatFunc::q_pow(3) + RatFunc::from_int(2)) / (RatFunc::q() - RatFunc::from_int(5));
        assert_eq!(f.bar().bar(), f);
        assert_eq!(qint(4).unwrap().bar(), qint(4).unwrap());
    }
}
