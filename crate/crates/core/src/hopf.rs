//! Coproduct, counit and antipode, and sample-based verification of the Hopf
//! algebra axioms.
//!
//! On generators:
//!
//! ```text
//! Δ(E) = h^{-1} ⊗ E + E ⊗ hK        S(E) = -E K^{-1}
//! Δ(F) = K^{-1} h g^2 ⊗ F + F ⊗ h^{-1}    S(F) = -K F g^{-2}
//! Δ(x) = x ⊗ x, ε(x) = 1, S(x) = x^{-1}   for x in K^{±1}, g^{±1}, h^{±1}
//! ```
//!
//! and ε(E) = ε(F) = 0. Δ and ε are extended multiplicatively, S
//! anti-multiplicatively.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::field::RatFunc;
use crate::pbw::{AlgebraElement, Generator, PbwMonomial};

/// Element of the `N`-fold tensor power of U_{g,h}; each factor is a PBW
/// monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor<const N: usize> {
    terms: BTreeMap<[PbwMonomial; N], RatFunc>,
}

/// Codomain of the coproduct.
pub type TensorElement = Tensor<2>;

impl<const N: usize> Default for Tensor<N> {
    fn default() -> Self {
        Tensor { terms: BTreeMap::new() }
    }
}

impl<const N: usize> Tensor<N> {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn one() -> Self {
        Tensor::term([PbwMonomial::ONE; N], RatFunc::one())
    }

    pub fn term(key: [PbwMonomial; N], c: RatFunc) -> Self {
        let mut t = Tensor::zero();
        t.add_term(key, c);
        t
    }

    pub fn add_term(&mut self, key: [PbwMonomial; N], c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&[PbwMonomial; N], &RatFunc)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Tensor::zero();
        for (k, x) in &self.terms {
            out.add_term(*k, x * c);
        }
        out
    }

    /// Componentwise product `(a_1 ⊗ ... ⊗ a_N)(b_1 ⊗ ... ⊗ b_N)`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Tensor::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let factors: Vec<AlgebraElement> = (0..N)
                    .map(|i| AlgebraElement::monomial(ka[i]).multiply(&AlgebraElement::monomial(kb[i])))
                    .collect();
                let prod = Tensor::from_factors(&factors);
                let c = ca * cb;
                for (k, x) in prod.terms {
                    out.add_term(k, &x * &c);
                }
            }
        }
        out
    }

    /// The pure tensor `a_1 ⊗ ... ⊗ a_N`.
    pub fn from_factors(factors: &[AlgebraElement]) -> Self {
        assert_eq!(factors.len(), N);
        let mut partial: Vec<(Vec<PbwMonomial>, RatFunc)> = vec![(Vec::new(), RatFunc::one())];
        for a in factors {
            let mut next = Vec::with_capacity(partial.len() * a.len());
            for (key, c) in &partial {
                for (m, x) in a.terms() {
                    let mut k = key.clone();
                    k.push(*m);
                    next.push((k, c * x));
                }
            }
            partial = next;
        }
        let mut out = Tensor::zero();
        for (k, c) in partial {
            out.add_term(k.try_into().expect("tensor arity"), c);
        }
        out
    }

    /// First term (in key order) of `self - other`, if they differ.
    pub fn first_difference(&self, other: &Self) -> Option<String> {
        let diff = self - other;
        diff.terms.iter().next().map(|(k, c)| render_tensor_term(k, c))
    }
}

fn render_tensor_term<const N: usize>(k: &[PbwMonomial; N], c: &RatFunc) -> String {
    let factors: Vec<String> = k.iter().map(|m| m.to_string()).collect();
    format!("({c}) {}", factors.join(" ⊗ "))
}

impl Tensor<2> {
    pub fn pure(a: &AlgebraElement, b: &AlgebraElement) -> Self {
        Tensor::from_factors(&[a.clone(), b.clone()])
    }

    /// Multiplication map `a ⊗ b -> ab`.
    pub fn contract(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ([a, b], c) in &self.terms {
            let p = AlgebraElement::monomial(*a).multiply(&AlgebraElement::monomial(*b));
            out = &out + &p.scale(c);
        }
        out
    }
}

impl<const N: usize> Add for &Tensor<N> {
    type Output = Tensor<N>;
    fn add(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &Tensor<N> {
    type Output = Tensor<N>;
    fn sub(self, rhs: &Tensor<N>) -> Tensor<N> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl<const N: usize> fmt::Display for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(k, c)| render_tensor_term(k, c)).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<const N: usize> fmt::Debug for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor({self})")
    }
}

fn mono(f: u32, k: i64, g: i64, h: i64, e: u32) -> AlgebraElement {
    AlgebraElement::monomial(PbwMonomial::new(f, k, g, h, e))
}

/// Δ on a single generator.
pub fn coproduct_generator(x: Generator) -> TensorElement {
    use Generator::*;
    match x {
        E => &Tensor::pure(&mono(0, 0, 0, -1, 0), &mono(0, 0, 0, 0, 1)) + &Tensor::pure(&mono(0, 0, 0, 0, 1), &mono(0, 1, 0, 1, 0)),
        F => &Tensor::pure(&mono(0, -1, 2, 1, 0), &mono(1, 0, 0, 0, 0)) + &Tensor::pure(&mono(1, 0, 0, 0, 0), &mono(0, 0, 0, -1, 0)),
        _ => {
            let a = AlgebraElement::generator(x);
            Tensor::pure(&a, &a)
        }
    }
}

fn coproduct_monomial(m: &PbwMonomial) -> TensorElement {
    let t = PbwMonomial::torus(m.k, m.g, m.h);
    let mut acc = Tensor::term([t, t], RatFunc::one());
    if m.f > 0 {
        let df = coproduct_generator(Generator::F);
        let mut fpow = Tensor::one();
        for _ in 0..m.f {
            fpow = fpow.multiply(&df);
        }
        acc = fpow.multiply(&acc);
    }
    if m.e > 0 {
        let de = coproduct_generator(Generator::E);
        for _ in 0..m.e {
            acc = acc.multiply(&de);
        }
    }
    acc
}

/// Δ extended to arbitrary elements as an algebra homomorphism.
pub fn coproduct(a: &AlgebraElement) -> TensorElement {
    let mut out = Tensor::zero();
    for (m, c) in a.terms() {
        out = &out + &coproduct_monomial(m).scale(c);
    }
    out
}

/// ε: torus monomials go to 1, anything with an E or F factor to 0.
pub fn counit(a: &AlgebraElement) -> RatFunc {
    let mut out = RatFunc::zero();
    for (m, c) in a.terms() {
        if m.is_torus() {
            out += c;
        }
    }
    out
}

/// S extended as an algebra anti-homomorphism.
pub fn antipode(a: &AlgebraElement) -> AlgebraElement {
    let on_e = -&mono(0, 0, 0, 0, 1).multiply(&mono(0, -1, 0, 0, 0));
    let kfg = mono(0, 1, 0, 0, 0).multiply(&mono(1, 0, -2, 0, 0));
    let on_f = -&kfg;
    a.map_anti(&on_e, &on_f, |t| AlgebraElement::monomial(PbwMonomial::torus(-t.k, -t.g, -t.h)))
}

fn delta_left(t: &TensorElement) -> Tensor<3> {
    let mut out = Tensor::zero();
    for ([a, b], c) in t.terms() {
        for ([x, y], d) in coproduct_monomial(a).terms() {
            out.add_term([*x, *y, *b], c * d);
        }
    }
    out
}

fn delta_right(t: &TensorElement) -> Tensor<3> {
    let mut out = Tensor::zero();
    for ([a, b], c) in t.terms() {
        for ([x, y], d) in coproduct_monomial(b).terms() {
            out.add_term([*a, *x, *y], c * d);
        }
    }
    out
}

/// The axiom families checked by [`check_hopf_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    LeftAntipode,
    RightAntipode,
    CoproductMultiplicative,
    CounitMultiplicative,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Coassociativity => "(Δ⊗id)Δ = (id⊗Δ)Δ",
            Axiom::LeftCounit => "(ε⊗id)Δ = id",
            Axiom::RightCounit => "(id⊗ε)Δ = id",
            Axiom::LeftAntipode => "m(S⊗id)Δ = ε·1",
            Axiom::RightAntipode => "m(id⊗S)Δ = ε·1",
            Axiom::CoproductMultiplicative => "Δ(ab) = Δ(a)Δ(b)",
            Axiom::CounitMultiplicative => "ε(ab) = ε(a)ε(b)",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub input: String,
    pub passed: bool,
    /// First differing term when the check fails.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: HopfReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            write!(f, "{status}  {:<22} {}", c.axiom.name(), c.input)?;
            if let Some(w) = &c.witness {
                write!(f, "  [first difference: {w}]")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn element_check(axiom: Axiom, input: String, lhs: &AlgebraElement, rhs: &AlgebraElement) -> AxiomCheck {
    let diff = lhs - rhs;
    let witness = diff.terms().next().map(|(m, c)| format!("({c}) {m}"));
    AxiomCheck { axiom, input, passed: witness.is_none(), witness }
}

fn tensor_check<const N: usize>(axiom: Axiom, input: String, lhs: &Tensor<N>, rhs: &Tensor<N>) -> AxiomCheck {
    let witness = lhs.first_difference(rhs);
    AxiomCheck { axiom, input, passed: witness.is_none(), witness }
}

/// Coassociativity, counit and antipode axioms for a single element.
pub fn check_element(a: &AlgebraElement) -> Vec<AxiomCheck> {
    let input = a.to_string();
    let d = coproduct(a);
    let mut checks = Vec::with_capacity(5);
    checks.push(tensor_check(Axiom::Coassociativity, input.clone(), &delta_left(&d), &delta_right(&d)));

    let mut left = AlgebraElement::zero();
    let mut right = AlgebraElement::zero();
    let mut s_left = AlgebraElement::zero();
    let mut s_right = AlgebraElement::zero();
    for ([x, y], c) in d.terms() {
        let mx = AlgebraElement::monomial(*x);
        let my = AlgebraElement::monomial(*y);
        left = &left + &my.scale(&(c * &counit(&mx)));
        right = &right + &mx.scale(&(c * &counit(&my)));
        s_left = &s_left + &antipode(&mx).multiply(&my).scale(c);
        s_right = &s_right + &mx.multiply(&antipode(&my)).scale(c);
    }
    let unit = AlgebraElement::scalar(counit(a));
    checks.push(element_check(Axiom::LeftCounit, input.clone(), &left, a));
    checks.push(element_check(Axiom::RightCounit, input.clone(), &right, a));
    checks.push(element_check(Axiom::LeftAntipode, input.clone(), &s_left, &unit));
    checks.push(element_check(Axiom::RightAntipode, input, &s_right, &unit));
    checks
}

/// Multiplicativity of Δ and ε on the pair `(a, b)`.
pub fn check_pair(a: &AlgebraElement, b: &AlgebraElement) -> Vec<AxiomCheck> {
    let input = format!("a = {a}; b = {b}");
    let ab = a.multiply(b);
    let lhs = coproduct(&ab);
    let rhs = coproduct(a).multiply(&coproduct(b));
    let eps_l = AlgebraElement::scalar(counit(&ab));
    let eps_r = AlgebraElement::scalar(counit(a) * counit(b));
    vec![
        tensor_check(Axiom::CoproductMultiplicative, input.clone(), &lhs, &rhs),
        element_check(Axiom::CounitMultiplicative, input, &eps_l, &eps_r),
    ]
}

/// Verify every axiom family on the sample: single-element axioms on each
/// entry, multiplicativity on each consecutive pair (cyclically).
pub fn check_hopf_axioms(sample: &[AlgebraElement]) -> HopfReport {
    let mut report = HopfReport::default();
    for a in sample {
        report.checks.extend(check_element(a));
    }
    let n = sample.len();
    if n > 0 {
        for i in 0..n {
            report.checks.extend(check_pair(&sample[i], &sample[(i + 1) % n]));
        }
    }
    report
}
