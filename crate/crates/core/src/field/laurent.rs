use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Poly, RatFunc, Rational};

/// Laurent polynomial in `q`: exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn term(c: Rational, k: i64) -> Self {
        let mut l = LaurentPoly::zero();
        l.add_term(k, c);
        l
    }

    /// `q^shift * p(q)`.
    pub fn from_poly_shifted(p: &Poly, shift: i64) -> Self {
        let mut l = LaurentPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            l.add_term(i as i64 + shift, c.clone());
        }
        l
    }

    pub fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms as `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let Some((&lo, _)) = self.coeffs.first_key_value() else {
            return RatFunc::zero();
        };
        let hi = *self.coeffs.last_key_value().unwrap().0;
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.coeffs {
            v[(k - lo) as usize] = c.clone();
        }
        RatFunc::new(Poly::from_coeffs(v), Poly::one()).unwrap() * RatFunc::q_pow(lo)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: i64) -> fmt::Result {
    let power = match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    };
    if k == 0 {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{power}")
    } else {
        write!(f, "{c}*{power}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first: `q^2 + 1 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &c.abs(), *k)?;
        }
        Ok(())
    }
}
