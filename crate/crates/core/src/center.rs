//! The Casimir element, central characters and splitting elements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::{q_minus_qinv, RatFunc};
use crate::pbw::{AlgebraElement, Generator, PbwMonomial};
use crate::rep::HighestWeightData;

/// `C = FE + (qK + q^{-1}K^{-1}g^2)/(q - q^{-1})^2`.
pub fn casimir() -> AlgebraElement {
    let d2 = q_minus_qinv().pow(2).inv();
    let mut c = AlgebraElement::monomial(PbwMonomial::new(1, 0, 0, 0, 1));
    c.add_term(PbwMonomial::torus(1, 0, 0), RatFunc::q() * &d2);
    c.add_term(PbwMonomial::torus(-1, 2, 0), RatFunc::q_pow(-1) * &d2);
    c
}

/// Whether `a` commutes with `E`, `F`, `K`, `g` and `h`.
pub fn is_central(a: &AlgebraElement) -> bool {
    Generator::CHEVALLEY.iter().all(|&x| a.commutator(&AlgebraElement::generator(x)).is_zero())
}

/// Keep only the torus part `K^m g^n h^s` of each PBW term.
pub fn hc_projection(a: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in a.terms() {
        if m.is_torus() {
            out.add_term(*m, c.clone());
        }
    }
    out
}

/// Values `(a, b, c)` of `K`, `g`, `h` on a highest-weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralCharacterPoint {
    pub a: RatFunc,
    pub b: RatFunc,
    pub c: RatFunc,
}

impl CentralCharacterPoint {
    pub fn new(a: RatFunc, b: RatFunc, c: RatFunc) -> Result<Self, Error> {
        for (v, name) in [(&a, "a"), (&b, "b"), (&c, "c")] {
            if v.is_zero() {
                return Err(Error::ZeroParameter(name));
            }
        }
        Ok(CentralCharacterPoint { a, b, c })
    }

    /// Evaluate a torus element `Σ c K^m g^n h^s` at this point.
    pub fn evaluate_torus(&self, t: &AlgebraElement) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (m, coeff) in t.terms() {
            debug_assert!(m.is_torus());
            acc += &(coeff * &self.a.pow(m.k) * self.b.pow(m.g) * self.c.pow(m.h));
        }
        acc
    }
}

impl fmt::Display for CentralCharacterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The value of the central character at `p` on a central element `z`.
pub fn central_character(p: &CentralCharacterPoint, z: &AlgebraElement) -> Result<RatFunc, Error> {
    if !is_central(z) {
        return Err(Error::NotCentral(z.to_string()));
    }
    Ok(p.evaluate_torus(&hc_projection(z)))
}

/// Whether two points give the same central character:
/// `(a - a')(aa' - q^{-2}b^2) = 0`, `b = b'`, `c = c'`.
pub fn characters_equal(p1: &CentralCharacterPoint, p2: &CentralCharacterPoint) -> bool {
    if p1.b != p2.b || p1.c != p2.c {
        return false;
    }
    let lhs = (&p1.a - &p2.a) * (&p1.a * &p2.a - RatFunc::q_pow(-2) * &p1.b * &p1.b);
    lhs.is_zero()
}

/// Which pair of modules a splitting element should separate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplittingCase {
    /// Acts as 1 on the first simple module and 0 on the second.
    Simple(HighestWeightData, HighestWeightData),
    /// Acts as 1 on the first Verma module and 0 on the second.
    Verma(CentralCharacterPoint, CentralCharacterPoint),
}

/// A central element acting as 1 on the first module of the pair and as 0 on
/// the second.
pub fn splitting_element(case: &SplittingCase) -> Result<AlgebraElement, Error> {
    match case {
        SplittingCase::Simple(d1, d2) => {
            if d1.beta != d2.beta {
                return Ok(torus_separator(Generator::H, &d1.beta, &d2.beta));
            }
            if d1.alpha != d2.alpha {
                return Ok(torus_separator(Generator::G, &d1.alpha, &d2.alpha));
            }
            let (m, n) = (d1.n as i64, d2.n as i64);
            let ee = RatFunc::from_int((d1.epsilon * d2.epsilon) as i64);
            let den = (RatFunc::q_pow(m - n) - &ee) * (RatFunc::q_pow(m + n + 2) - &ee);
            if den.is_zero() {
                return Err(Error::NoSplittingElement);
            }
            let d2sq = q_minus_qinv().pow(2);
            let shift = RatFunc::from_int(d2.epsilon as i64)
                * &d2.alpha
                * (RatFunc::q_pow(n + 1) + RatFunc::q_pow(-n - 1))
                / &d2sq;
            // d_{m,n} acts on the first module by εα/(q - q^{-1})^2
            let d_mn = RatFunc::q_pow(m + 1) / den;
            let norm = RatFunc::from_int(d1.epsilon as i64) * d2sq / &d1.alpha;
            Ok((&casimir() - &AlgebraElement::scalar(shift)).scale(&(d_mn * norm)))
        }
        SplittingCase::Verma(p1, p2) => {
            if p1.b != p2.b {
                return Ok(torus_separator(Generator::G, &p1.b, &p2.b));
            }
            if p1.c != p2.c {
                return Ok(torus_separator(Generator::H, &p1.c, &p2.c));
            }
            let (a, a2, b) = (&p1.a, &p2.a, &p1.b);
            let den = (a - a2) * (RatFunc::q() * a * a2 - RatFunc::q_pow(-1) * b * b);
            if den.is_zero() {
                return Err(Error::NoSplittingElement);
            }
            let d2sq = q_minus_qinv().pow(2);
            let shift = (RatFunc::q() * a2 + RatFunc::q_pow(-1) * a2.inv() * b * b) / &d2sq;
            let coeff = a * a2 * d2sq / den;
            Ok((&casimir() - &AlgebraElement::scalar(shift)).scale(&coeff))
        }
    }
}

/// `(x - v2)/(v1 - v2)` for a central generator `x`.
fn torus_separator(x: Generator, v1: &RatFunc, v2: &RatFunc) -> AlgebraElement {
    let e = &AlgebraElement::generator(x) - &AlgebraElement::scalar(v2.clone());
    e.scale(&(v1 - v2).inv())
}
