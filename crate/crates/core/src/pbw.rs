//! Elements of U_{g,h} in PBW normal form.
//!
//! Every element is a finite combination of ordered monomials
//! `F^l K^m g^n h^s E^t` with coefficients in ℚ(q). Products are computed by
//! feeding the right factor into the left one generator at a time, using only
//! the defining relations:
//!
//! * `g^{±1}`, `h^{±1}` are central,
//! * `E K^m = q^{-2m} K^m E` and `K^m F = q^{-2m} F K^m`,
//! * `E F = F E + (K - K^{-1} g^2)/(q - q^{-1})`,
//! * `K K^{-1} = g g^{-1} = h h^{-1} = 1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::{q_minus_qinv, qint, RatFunc};

/// One of the eight algebra generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
    G,
    GInv,
    H,
    HInv,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::E,
        Generator::F,
        Generator::K,
        Generator::KInv,
        Generator::G,
        Generator::GInv,
        Generator::H,
        Generator::HInv,
    ];

    /// E, F, K, g, h: enough to generate the algebra together with inverses.
    pub const CHEVALLEY: [Generator; 5] = [Generator::E, Generator::F, Generator::K, Generator::G, Generator::H];

    pub fn inverse(self) -> Option<Generator> {
        use Generator::*;
        match self {
            E | F => None,
            K => Some(KInv),
            KInv => Some(K),
            G => Some(GInv),
            GInv => Some(G),
            H => Some(HInv),
            HInv => Some(H),
        }
    }

    pub fn name(self) -> &'static str {
        use Generator::*;
        match self {
            E => "E",
            F => "F",
            K => "K",
            KInv => "K^-1",
            G => "g",
            GInv => "g^-1",
            H => "h",
            HInv => "h^-1",
        }
    }

    pub fn from_name(s: &str) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A PBW basis monomial `F^l K^m g^n h^s E^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PbwMonomial {
    /// exponent of F
    pub f: u32,
    /// exponent of K
    pub k: i64,
    /// exponent of g
    pub g: i64,
    /// exponent of h
    pub h: i64,
    /// exponent of E
    pub e: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { f: 0, k: 0, g: 0, h: 0, e: 0 };

    pub fn new(f: u32, k: i64, g: i64, h: i64, e: u32) -> Self {
        PbwMonomial { f, k, g, h, e }
    }

    pub fn torus(k: i64, g: i64, h: i64) -> Self {
        PbwMonomial { f: 0, k, g, h, e: 0 }
    }

    pub fn is_one(&self) -> bool {
        *self == PbwMonomial::ONE
    }

    /// No E or F factor.
    pub fn is_torus(&self) -> bool {
        self.f == 0 && self.e == 0
    }

    /// The monomial written as a word, in PBW order.
    pub fn letters(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        w.extend(std::iter::repeat_n(Generator::F, self.f as usize));
        let push_pow = |w: &mut Vec<Generator>, n: i64, pos: Generator, neg: Generator| {
            let g = if n >= 0 { pos } else { neg };
            w.extend(std::iter::repeat_n(g, n.unsigned_abs() as usize));
        };
        push_pow(&mut w, self.k, Generator::K, Generator::KInv);
        push_pow(&mut w, self.g, Generator::G, Generator::GInv);
        push_pow(&mut w, self.h, Generator::H, Generator::HInv);
        w.extend(std::iter::repeat_n(Generator::E, self.e as usize));
        w
    }

    fn grade(&self) -> u64 {
        self.f as u64 + self.e as u64
    }
}

impl Ord for PbwMonomial {
    /// Graded lexicographic on `(l, m, n, s, t)`, graded by `l + t`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then(self.f.cmp(&other.f))
            .then(self.k.cmp(&other.k))
            .then(self.g.cmp(&other.g))
            .then(self.h.cmp(&other.h))
            .then(self.e.cmp(&other.e))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |sym: &str, n: i64| match n {
            0 => {}
            1 => parts.push(sym.to_string()),
            _ => parts.push(format!("{sym}^{n}")),
        };
        push("F", self.f as i64);
        push("K", self.k);
        push("g", self.g);
        push("h", self.h);
        push("E", self.e as i64);
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Left or right multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of U_{g,h} in PBW normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<PbwMonomial, RatFunc>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        AlgebraElement::term(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        AlgebraElement::term(m, RatFunc::one())
    }

    pub fn term(m: PbwMonomial, c: RatFunc) -> Self {
        let mut a = AlgebraElement::zero();
        a.add_term(m, c);
        a
    }

    pub fn generator(x: Generator) -> Self {
        use Generator::*;
        let m = match x {
            E => PbwMonomial::new(0, 0, 0, 0, 1),
            F => PbwMonomial::new(1, 0, 0, 0, 0),
            K => PbwMonomial::torus(1, 0, 0),
            KInv => PbwMonomial::torus(-1, 0, 0),
            G => PbwMonomial::torus(0, 1, 0),
            GInv => PbwMonomial::torus(0, -1, 0),
            H => PbwMonomial::torus(0, 0, 1),
            HInv => PbwMonomial::torus(0, 0, -1),
        };
        AlgebraElement::monomial(m)
    }

    /// Add `c * m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: PbwMonomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PbwMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The coefficient of 1 if the element is a scalar.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&PbwMonomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &RatFunc) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_generator(&self, x: Generator, side: Side) -> AlgebraElement {
        match side {
            Side::Right => {
                let mut out = AlgebraElement::zero();
                for (m, c) in &self.terms {
                    out.add_scaled(&monomial_times_generator(*m, x), c);
                }
                out
            }
            Side::Left => AlgebraElement::generator(x).multiply(self),
        }
    }

    /// `self * other`, by peeling `other` one generator at a time.
    pub fn multiply(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &other.terms {
            let mut acc = self.clone();
            for _ in 0..m.f {
                acc = acc.mul_generator(Generator::F, Side::Right);
            }
            acc = acc.mul_torus_right(m.k, m.g, m.h);
            if m.e > 0 {
                acc = acc.mul_e_power_right(m.e);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    fn mul_torus_right(&self, k: i64, g: i64, h: i64) -> AlgebraElement {
        if k == 0 && g == 0 && h == 0 {
            return self.clone();
        }
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            let mut n = *m;
            n.k += k;
            n.g += g;
            n.h += h;
            // E^t K^k = q^{-2kt} K^k E^t
            out.add_term(n, c * &RatFunc::q_pow(-2 * k * m.e as i64));
        }
        out
    }

    fn mul_e_power_right(&self, t: u32) -> AlgebraElement {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut n = *m;
                    n.e += t;
                    (n, c.clone())
                })
                .collect(),
        }
    }

    fn add_scaled(&mut self, other: &AlgebraElement, c: &RatFunc) {
        for (m, x) in &other.terms {
            self.add_term(*m, x * c);
        }
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for _ in 0..n {
            acc = acc.multiply(self);
        }
        acc
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &AlgebraElement) -> AlgebraElement {
        &self.multiply(other) - &other.multiply(self)
    }

    /// Write the element back as a formal sum of words.
    pub fn to_words(&self) -> Vec<GenWord> {
        self.terms.iter().map(|(m, c)| GenWord { scalar: c.clone(), letters: m.letters() }).collect()
    }

    /// Apply an algebra anti-homomorphism given by its values on E, F and a
    /// torus monomial.
    pub(crate) fn map_anti(
        &self,
        on_e: &AlgebraElement,
        on_f: &AlgebraElement,
        on_torus: impl Fn(&PbwMonomial) -> AlgebraElement,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            let mut acc = on_e.pow(m.e);
            acc = acc.multiply(&on_torus(&PbwMonomial::torus(m.k, m.g, m.h)));
            acc = acc.multiply(&on_f.pow(m.f));
            out.add_scaled(&acc, c);
        }
        out
    }

    /// The anti-involution fixing K, g, h with `E -> -KF`, `F -> -E K^{-1}`.
    pub fn anti_involution(&self) -> AlgebraElement {
        let k = AlgebraElement::generator(Generator::K);
        let kinv = AlgebraElement::generator(Generator::KInv);
        let e = AlgebraElement::generator(Generator::E);
        let f = AlgebraElement::generator(Generator::F);
        let on_e = -&k.multiply(&f);
        let on_f = -&e.multiply(&kinv);
        self.map_anti(&on_e, &on_f, |t| AlgebraElement::monomial(*t))
    }
}

/// `m * x` for a single monomial, with coefficient 1.
fn monomial_times_generator(m: PbwMonomial, x: Generator) -> AlgebraElement {
    use Generator::*;
    let torus = |k: i64, g: i64, h: i64| AlgebraElement::monomial(m).mul_torus_right(k, g, h);
    match x {
        E => {
            let mut n = m;
            n.e += 1;
            AlgebraElement::monomial(n)
        }
        K => torus(1, 0, 0),
        KInv => torus(-1, 0, 0),
        G => torus(0, 1, 0),
        GInv => torus(0, -1, 0),
        H => torus(0, 0, 1),
        HInv => torus(0, 0, -1),
        F if m.e == 0 => {
            // K^k F = q^{-2k} F K^k
            let mut n = m;
            n.f += 1;
            AlgebraElement::term(n, RatFunc::q_pow(-2 * m.k))
        }
        F => {
            // (P E) F = (P F) E + P (K - K^{-1} g^2)/(q - q^{-1})
            let mut p = m;
            p.e -= 1;
            let mut out = monomial_times_generator(p, F).mul_e_power_right(1);
            let c = q_minus_qinv().inv();
            let pm = AlgebraElement::monomial(p);
            out.add_scaled(&pm.mul_torus_right(1, 0, 0), &c);
            out.add_scaled(&pm.mul_torus_right(-1, 2, 0), &-&c);
            out
        }
    }
}

/// A word over the generators with a leading scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord {
    pub scalar: RatFunc,
    pub letters: Vec<Generator>,
}

impl GenWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        GenWord { scalar: RatFunc::one(), letters }
    }

    pub fn with_scalar(scalar: RatFunc, letters: Vec<Generator>) -> Self {
        GenWord { scalar, letters }
    }

    /// Parse a whitespace-separated word such as `"E F K^-1"`.
    pub fn parse(s: &str) -> Result<GenWord, Error> {
        let letters = s
            .split_whitespace()
            .map(|t| Generator::from_name(t).ok_or_else(|| Error::InvalidArgument(format!("unknown generator `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GenWord::new(letters))
    }
}

/// Normal form of a formal sum of words, folding each word left to right.
pub fn normalize(words: &[GenWord]) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for w in words {
        let mut acc = AlgebraElement::scalar(w.scalar.clone());
        for &x in &w.letters {
            acc = acc.mul_generator(x, Side::Right);
        }
        out = &out + &acc;
    }
    out
}

/// Closed form of `[E, F^m] = [m] F^{m-1} (q^{-(m-1)} K - q^{m-1} K^{-1} g^2)/(q - q^{-1})`.
pub fn e_fpow_commutator(m: i64) -> Result<AlgebraElement, Error> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("commutator exponent must be at least 1, got {m}")));
    }
    let c = qint(m)? / q_minus_qinv();
    let l = (m - 1) as u32;
    let mut out = AlgebraElement::zero();
    out.add_term(PbwMonomial::new(l, 1, 0, 0, 0), &c * &RatFunc::q_pow(-(m - 1)));
    out.add_term(PbwMonomial::new(l, -1, 2, 0, 0), -(&c * &RatFunc::q_pow(m - 1)));
    Ok(out)
}

/// Random element: up to `max_terms` words of length at most `max_len`, with
/// small integer coefficients.
pub fn random_element<R: Rng>(rng: &mut R, max_terms: usize, max_len: usize) -> AlgebraElement {
    let n = rng.gen_range(1..=max_terms.max(1));
    let words: Vec<GenWord> = (0..n)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let letters = (0..len).map(|_| Generator::ALL[rng.gen_range(0..8)]).collect();
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-3..=3);
            }
            GenWord::with_scalar(RatFunc::from_int(c), letters)
        })
        .collect();
    normalize(&words)
}

impl fmt::Display for AlgebraElement {
    /// Canonical rendering: graded order, highest first, coefficients in
    /// parentheses unless they are ±1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (abs.is_one(), m.is_one()) {
                (true, true) => f.write_str("1")?,
                (true, false) => write!(f, "{m}")?,
                (false, true) => write!(f, "({abs})")?,
                (false, false) => write!(f, "({abs}) {m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

impl From<Generator> for AlgebraElement {
    fn from(x: Generator) -> Self {
        AlgebraElement::generator(x)
    }
}

impl From<RatFunc> for AlgebraElement {
    fn from(c: RatFunc) -> Self {
        AlgebraElement::scalar(c)
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs)
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        self.multiply(&rhs)
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}
