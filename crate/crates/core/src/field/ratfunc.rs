use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Poly, Rational};
use crate::error::Error;

/// Exact element of ℚ(q).
///
/// Stored as `num / den` with `gcd(num, den) = 1` and `den` monic, so two
/// values are equal exactly when their fields are equal. Laurent polynomials
/// carry their negative powers of `q` in the denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RatFunc::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        RatFunc::monomial(Rational::one(), k)
    }

    /// `c * q^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        if k >= 0 {
            RatFunc { num: Poly::monomial(c, k as usize), den: Poly::one() }
        } else {
            RatFunc { num: Poly::constant(c), den: Poly::monomial(Rational::one(), (-k) as usize) }
        }
    }

    /// Build `num / den` and reduce to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when this is a rational constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_one() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// `Some(LaurentPoly)` when the denominator is a power of `q`.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if !self.den.is_monomial() {
            return None;
        }
        let d = self.den.degree().unwrap() as i64;
        Some(LaurentPoly::from_poly_shifted(&self.num, -d))
    }

    /// `Some((c, k))` when the value is the single Laurent term `c * q^k`.
    pub fn as_monomial(&self) -> Option<(Rational, i64)> {
        let l = self.as_laurent()?;
        if l.len() != 1 {
            return None;
        }
        let (k, c) = l.terms().next().unwrap();
        Some((c.clone(), k))
    }

    /// `Some((sign, k))` when the value is `±q^k`.
    pub fn as_signed_q_power(&self) -> Option<(i8, i64)> {
        let (c, k) = self.as_monomial()?;
        if c.is_one() {
            Some((1, k))
        } else if (-c).is_one() {
            Some((-1, k))
        } else {
            None
        }
    }

    /// Sign used when rendering: the sign of the numerator's leading coefficient.
    pub fn is_negative(&self) -> bool {
        self.num.leading().is_some_and(Signed::is_negative)
    }

    pub fn try_inv(&self) -> Result<RatFunc, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn inv(&self) -> RatFunc {
        self.try_inv().expect("inverse of zero in Q(q)")
    }

    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv())
    }

    /// Integer power; negative exponents invert.
    pub fn try_pow(&self, e: i64) -> Result<RatFunc, Error> {
        if e < 0 {
            return self.try_inv()?.try_pow(-e);
        }
        let e = u32::try_from(e).map_err(|_| Error::InvalidArgument(format!("exponent {e} too large")))?;
        // num and den stay coprime under powers, and den^e stays monic.
        Ok(RatFunc { num: self.num.pow(e), den: self.den.pow(e) })
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        self.try_pow(e).expect("negative power of zero in Q(q)")
    }

    /// Exact value at `q = q0`.
    pub fn evaluate(&self, q0: &Rational) -> Result<Rational, Error> {
        if q0.is_zero() {
            return Err(Error::InvalidArgument("evaluation point q0 must be nonzero".into()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole {
                point: q0.to_string(),
                denominator: RatFunc { num: self.den.clone(), den: Poly::one() }.to_string(),
            });
        }
        Ok(self.num.eval(q0) / d)
    }

    fn add_ref(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return RatFunc { num, den: Poly::one() };
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&other.den).add(&other.num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return RatFunc { num: other.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            // coprime denominators: the sum is already reduced
            return RatFunc { num, den: self.den.mul(&other.den) };
        }
        let a = self.den.div_exact(&g);
        let b = other.den.div_exact(&g);
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        RatFunc::reduce(num, a.mul(&other.den))
    }

    fn mul_ref(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = other.den.div_exact(&g1);
        let n2 = other.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Substitute `q -> q^{-1}`.
    pub fn bar(&self) -> RatFunc {
        let flip = |p: &Poly| -> (Poly, usize) {
            let d = p.degree().unwrap_or(0);
            let mut c = p.coeffs().to_vec();
            c.reverse();
            (Poly::from_coeffs(c), d)
        };
        let (n, dn) = flip(&self.num);
        let (d, dd) = flip(&self.den);
        // num(1/q)/den(1/q) = q^{dd-dn} * rev(num)/rev(den)
        let (n, d) = if dd >= dn { (n.shift(dd - dn), d) } else { (n, d.shift(dn - dd)) };
        RatFunc::reduce(n, d)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::from_rational(c)
    }
}

impl From<&LaurentPoly> for RatFunc {
    fn from(l: &LaurentPoly) -> Self {
        l.to_ratfunc()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$body(rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$body(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$body(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$body(&rhs)
            }
        }
    };
}

impl RatFunc {
    fn sub_ref(&self, other: &RatFunc) -> RatFunc {
        self.add_ref(&-other)
    }

    fn div_ref(&self, other: &RatFunc) -> RatFunc {
        self.try_div(other).expect("division by zero in Q(q)")
    }
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = self.mul_ref(rhs);
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    /// Renders in the shared scalar grammar, e.g. `q^2 + 1 + q^-2` or
    /// `1/(q - q^-1)`. The denominator is centred around `q^0` so that
    /// familiar Laurent forms come out unchanged.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.as_laurent() {
            return write!(f, "{l}");
        }
        let lo = self.den.low_degree().unwrap() as i64;
        let hi = self.den.degree().unwrap() as i64;
        let centre = (lo + hi).div_euclid(2);
        let num = LaurentPoly::from_poly_shifted(&self.num, -centre);
        let den = LaurentPoly::from_poly_shifted(&self.den, -centre);
        if num.len() > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        write!(f, "/({den})")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        crate::frontend::parse_scalar(s)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
