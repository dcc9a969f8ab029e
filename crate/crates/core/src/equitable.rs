//! The equitable presentation: generators `x^{±1}, y, z, u^{±1}, v^{±1}`
//! with
//!
//! ```text
//! (q x y - q^-1 y x)/(q - q^-1) = 1
//! (q z x - q^-1 x z)/(q - q^-1) = 1
//! (q y z - q^-1 z y)/(q - q^-1) = 1
//! ```
//!
//! plus invertibility and centrality of `u`, `v`. There is no normal form on
//! this side: every check is carried out after mapping into U_{g,h} with
//! [`phi`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::field::{q_minus_qinv, RatFunc};
use crate::hopf::{antipode, coproduct, counit, TensorElement};
use crate::pbw::{AlgebraElement, Generator};

/// A generator of the equitable presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EqGenerator {
    X,
    XInv,
    Y,
    Z,
    U,
    UInv,
    V,
    VInv,
}

impl EqGenerator {
    pub const ALL: [EqGenerator; 8] = [
        EqGenerator::X,
        EqGenerator::XInv,
        EqGenerator::Y,
        EqGenerator::Z,
        EqGenerator::U,
        EqGenerator::UInv,
        EqGenerator::V,
        EqGenerator::VInv,
    ];

    pub fn name(self) -> &'static str {
        use EqGenerator::*;
        match self {
            X => "x",
            XInv => "x^-1",
            Y => "y",
            Z => "z",
            U => "u",
            UInv => "u^-1",
            V => "v",
            VInv => "v^-1",
        }
    }
}

/// Unreduced expression over the equitable generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquitableExpr {
    Scalar(RatFunc),
    Gen(EqGenerator),
    Sum(Vec<EquitableExpr>),
    Product(Vec<EquitableExpr>),
}

impl EquitableExpr {
    pub fn scalar(c: RatFunc) -> Self {
        EquitableExpr::Scalar(c)
    }

    pub fn one() -> Self {
        EquitableExpr::Scalar(RatFunc::one())
    }

    pub fn scale(self, c: RatFunc) -> Self {
        EquitableExpr::Product(vec![EquitableExpr::Scalar(c), self])
    }
}

impl EquitableExpr {
    /// `-e` rendered without the sign, when `self` is `(-1) e`.
    fn negated(&self) -> Option<String> {
        let EquitableExpr::Product(fs) = self else { return None };
        let (EquitableExpr::Scalar(c), rest) = fs.split_first()? else { return None };
        if !(-c).is_one() || rest.is_empty() {
            return None;
        }
        Some(rest.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "))
    }
}

impl From<EqGenerator> for EquitableExpr {
    fn from(g: EqGenerator) -> Self {
        EquitableExpr::Gen(g)
    }
}

impl Add for EquitableExpr {
    type Output = EquitableExpr;
    fn add(self, rhs: EquitableExpr) -> EquitableExpr {
        match self {
            EquitableExpr::Sum(mut ts) => {
                ts.push(rhs);
                EquitableExpr::Sum(ts)
            }
            lhs => EquitableExpr::Sum(vec![lhs, rhs]),
        }
    }
}

impl Sub for EquitableExpr {
    type Output = EquitableExpr;
    fn sub(self, rhs: EquitableExpr) -> EquitableExpr {
        self + (-rhs)
    }
}

impl Neg for EquitableExpr {
    type Output = EquitableExpr;
    fn neg(self) -> EquitableExpr {
        self.scale(RatFunc::from_int(-1))
    }
}

impl Mul for EquitableExpr {
    type Output = EquitableExpr;
    fn mul(self, rhs: EquitableExpr) -> EquitableExpr {
        EquitableExpr::Product(vec![self, rhs])
    }
}

impl fmt::Display for EquitableExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquitableExpr::Scalar(c) if c.as_constant().is_some() && !c.is_negative() => write!(f, "{c}"),
            EquitableExpr::Scalar(c) => write!(f, "({c})"),
            EquitableExpr::Gen(g) => f.write_str(g.name()),
            EquitableExpr::Sum(ts) => {
                f.write_str("(")?;
                for (i, t) in ts.iter().enumerate() {
                    match t.negated() {
                        Some(rest) => write!(f, "{}{rest}", if i == 0 { "-" } else { " - " })?,
                        None if i == 0 => write!(f, "{t}")?,
                        None => write!(f, " + {t}")?,
                    }
                }
                f.write_str(")")
            }
            EquitableExpr::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|t| t.to_string()).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

fn g(x: EqGenerator) -> EquitableExpr {
    EquitableExpr::Gen(x)
}

fn s(c: RatFunc) -> EquitableExpr {
    EquitableExpr::Scalar(c)
}

fn phi_generator(x: EqGenerator) -> AlgebraElement {
    use EqGenerator::*;
    let gen = AlgebraElement::generator;
    let d = q_minus_qinv();
    match x {
        X => gen(Generator::GInv).multiply(&gen(Generator::K)),
        XInv => gen(Generator::G).multiply(&gen(Generator::KInv)),
        Y => &gen(Generator::KInv).multiply(&gen(Generator::G)) + &gen(Generator::F).scale(&d),
        Z => {
            let kinv_e = gen(Generator::KInv).multiply(&gen(Generator::E));
            &gen(Generator::KInv).multiply(&gen(Generator::G)) - &kinv_e.scale(&(RatFunc::q() * d))
        }
        U => gen(Generator::GInv),
        UInv => gen(Generator::G),
        V => gen(Generator::H),
        VInv => gen(Generator::HInv),
    }
}

/// The algebra map into U_{g,h}: `x^{±1} ↦ g^{∓1}K^{±1}`,
/// `y ↦ K^{-1}g + (q - q^{-1})F`, `z ↦ K^{-1}g - q(q - q^{-1})K^{-1}E`,
/// `u^{±1} ↦ g^{∓1}`, `v^{±1} ↦ h^{±1}`.
pub fn phi(e: &EquitableExpr) -> AlgebraElement {
    match e {
        EquitableExpr::Scalar(c) => AlgebraElement::scalar(c.clone()),
        EquitableExpr::Gen(x) => phi_generator(*x),
        EquitableExpr::Sum(ts) => ts.iter().fold(AlgebraElement::zero(), |acc, t| &acc + &phi(t)),
        EquitableExpr::Product(fs) => fs.iter().fold(AlgebraElement::one(), |acc, t| acc.multiply(&phi(t))),
    }
}

/// The inverse map on generators: `K^{±1} ↦ u^{∓1}x^{±1}`,
/// `F ↦ (y - x^{-1})/(q - q^{-1})`, `E ↦ (1 - xz)/((q - q^{-1})qu)`,
/// `g^{±1} ↦ u^{∓1}`, `h^{±1} ↦ v^{±1}`.
pub fn psi(x: Generator) -> EquitableExpr {
    use EqGenerator as Q;
    let d = q_minus_qinv();
    match x {
        Generator::K => g(Q::UInv) * g(Q::X),
        Generator::KInv => g(Q::U) * g(Q::XInv),
        Generator::F => (g(Q::Y) - g(Q::XInv)).scale(d.inv()),
        // 1/((q - q^-1) q u) = u^-1 / (q (q - q^-1))
        Generator::E => (g(Q::UInv) * (EquitableExpr::one() - g(Q::X) * g(Q::Z))).scale((RatFunc::q() * d).inv()),
        Generator::G => g(Q::UInv),
        Generator::GInv => g(Q::U),
        Generator::H => g(Q::V),
        Generator::HInv => g(Q::VInv),
    }
}

/// The coproduct on equitable generators, as a sum of simple tensors.
pub fn coproduct_eq(x: EqGenerator) -> Vec<(EquitableExpr, EquitableExpr)> {
    use EqGenerator::*;
    match x {
        Y => vec![
            (g(XInv), g(XInv) - g(VInv)),
            (g(UInv) * g(V) * g(XInv), g(Y) - g(XInv)),
            (g(Y), g(VInv)),
        ],
        Z => vec![
            (g(XInv), g(XInv)),
            (g(U) * g(VInv) * g(XInv), g(Z) - g(XInv)),
            (g(Z) - g(XInv), g(V)),
        ],
        other => vec![(g(other), g(other))],
    }
}

/// The counit: 1 on every equitable generator.
pub fn counit_eq(_x: EqGenerator) -> RatFunc {
    RatFunc::one()
}

/// The antipode on equitable generators.
///
/// `S(y) = x - u x y + u`, which is what `S(F) = -K F g^{-2}` forces; see
/// [`PRINTED_ANTIPODE_Y`] for the other form in circulation.
pub fn antipode_eq(x: EqGenerator) -> EquitableExpr {
    use EqGenerator::*;
    match x {
        X => g(XInv),
        XInv => g(X),
        U => g(UInv),
        UInv => g(U),
        V => g(VInv),
        VInv => g(V),
        Y => g(X) - g(U) * g(X) * g(Y) + g(U),
        Z => g(X) + g(UInv) - g(UInv) * g(X) * g(Z),
    }
}

/// The form `x - x^{-1} y + u` sometimes quoted for `S(y)`; it does not
/// transport to the antipode of U_{g,h}.
pub fn printed_antipode_y() -> EquitableExpr {
    use EqGenerator::*;
    g(X) - g(XInv) * g(Y) + g(U)
}

/// Name of the alternative form, for reports.
pub const PRINTED_ANTIPODE_Y: &str = "x - x^-1 y + u";

/// One exact identity checked after applying `phi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquitableCheck {
    pub family: String,
    pub identity: String,
    pub passed: bool,
    /// Normal form of the difference of both sides when the check fails.
    pub residue: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquitableReport {
    pub checks: Vec<EquitableCheck>,
}

impl EquitableReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push_element(&mut self, family: &str, identity: String, diff: AlgebraElement) {
        let passed = diff.is_zero();
        let residue = (!passed).then(|| diff.to_string());
        self.checks.push(EquitableCheck { family: family.into(), identity, passed, residue });
    }

    fn push_tensor(&mut self, family: &str, identity: String, lhs: &TensorElement, rhs: &TensorElement) {
        let residue = lhs.first_difference(rhs);
        self.checks.push(EquitableCheck { family: family.into(), identity, passed: residue.is_none(), residue });
    }
}

impl fmt::Display for EquitableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            write!(f, "{mark} [{}] {}", c.family, c.identity)?;
            if let Some(r) = &c.residue {
                write!(f, "  (residue: {r})")?;
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// The six relation families, each as `(family, lhs, rhs)`.
pub fn relations() -> Vec<(&'static str, EquitableExpr, EquitableExpr)> {
    use EqGenerator::*;
    let one = EquitableExpr::one;
    let d_inv = q_minus_qinv().inv();
    let qc = |a: EqGenerator, b: EqGenerator| {
        (s(RatFunc::q()) * g(a) * g(b) - s(RatFunc::q_pow(-1)) * g(b) * g(a)).scale(d_inv.clone())
    };
    let mut out = Vec::new();
    for (a, b) in [(X, XInv), (U, UInv), (V, VInv)] {
        out.push(("inverses", g(b) * g(a), one()));
        out.push(("inverses", g(a) * g(b), one()));
    }
    for other in [X, Y, Z, V] {
        out.push(("u central", g(U) * g(other), g(other) * g(U)));
    }
    for other in [X, Y, Z] {
        out.push(("v central", g(V) * g(other), g(other) * g(V)));
    }
    out.push(("q-commutator x y", qc(X, Y), one()));
    out.push(("q-commutator z x", qc(Z, X), one()));
    out.push(("q-commutator y z", qc(Y, Z), one()));
    out
}

/// Apply `phi` to every relation and check that both sides agree.
pub fn verify_equitable_relations() -> EquitableReport {
    let mut report = EquitableReport::default();
    for (family, lhs, rhs) in relations() {
        report.push_element(family, format!("{lhs} = {rhs}"), &phi(&lhs) - &phi(&rhs));
    }
    for x in Generator::ALL {
        let back = phi(&psi(x));
        report.push_element("round trip", format!("phi(psi({x})) = {x}"), &back - &AlgebraElement::generator(x));
    }
    report
}

fn phi_tensor(terms: &[(EquitableExpr, EquitableExpr)]) -> TensorElement {
    terms.iter().fold(TensorElement::zero(), |acc, (a, b)| &acc + &TensorElement::pure(&phi(a), &phi(b)))
}

/// Transport of coproduct, counit and antipode through `phi`.
pub fn verify_equitable_hopf() -> EquitableReport {
    let mut report = EquitableReport::default();
    for x in EqGenerator::ALL {
        let image = phi_generator(x);
        let name = x.name();
        report.push_tensor("coproduct", format!("(phi ⊗ phi) Δ({name}) = Δ(phi({name}))"), &phi_tensor(&coproduct_eq(x)), &coproduct(&image));
        let eps = AlgebraElement::scalar(counit_eq(x) - counit(&image));
        report.push_element("counit", format!("ε({name}) = ε(phi({name}))"), eps);
        let s = antipode_eq(x);
        report.push_element("antipode", format!("phi({s}) = S(phi({name}))"), &phi(&s) - &antipode(&image));
    }
    report
}
