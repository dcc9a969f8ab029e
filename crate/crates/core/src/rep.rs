//! Finite-dimensional weight modules.
//!
//! A module is stored as the eight matrices by which the generators act.
//! Simples `V_{ε,n,α,β}`, tensor products through the coproduct, duals
//! through the antipode or the anti-involution, and the self-extensions
//! `V_{ε,n} ⊗ M_{x,y}` are all built here, together with the exact linear
//! algebra that reads their structure back off.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::{q_minus_qinv, qint, RatFunc};
use crate::hopf::{antipode, coproduct_generator};
use crate::linalg::{is_zero_vector, Matrix, Vector};
use crate::pbw::{AlgebraElement, Generator, PbwMonomial};

/// Eigenvalues `(λ, α, β)` of `K`, `g`, `h` on a weight vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub lambda: RatFunc,
    pub alpha: RatFunc,
    pub beta: RatFunc,
}

impl Weight {
    pub fn new(lambda: RatFunc, alpha: RatFunc, beta: RatFunc) -> Self {
        Weight { lambda, alpha, beta }
    }

    fn inverse(&self) -> Weight {
        Weight { lambda: self.lambda.inv(), alpha: self.alpha.inv(), beta: self.beta.inv() }
    }

    fn product(&self, other: &Weight) -> Weight {
        Weight {
            lambda: &self.lambda * &other.lambda,
            alpha: &self.alpha * &other.alpha,
            beta: &self.beta * &other.beta,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lambda, self.alpha, self.beta)
    }
}

/// Label of the simple module `V_{ε,n,α,β}` with highest weight `(εαq^n, α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HighestWeightData {
    pub epsilon: i8,
    pub n: u32,
    pub alpha: RatFunc,
    pub beta: RatFunc,
}

impl HighestWeightData {
    pub fn new(epsilon: i8, n: u32, alpha: RatFunc, beta: RatFunc) -> Result<Self, Error> {
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::InvalidArgument(format!("epsilon must be 1 or -1, got {epsilon}")));
        }
        if alpha.is_zero() {
            return Err(Error::ZeroParameter("alpha"));
        }
        if beta.is_zero() {
            return Err(Error::ZeroParameter("beta"));
        }
        Ok(HighestWeightData { epsilon, n, alpha, beta })
    }

    pub fn dim(&self) -> usize {
        self.n as usize + 1
    }

    fn eps(&self) -> RatFunc {
        RatFunc::from_int(self.epsilon as i64)
    }

    /// `(εαq^n, α, β)`.
    pub fn highest_weight(&self) -> Weight {
        Weight::new(&self.eps() * &self.alpha * RatFunc::q_pow(self.n as i64), self.alpha.clone(), self.beta.clone())
    }

    /// Scalar by which the Casimir acts: `εα(q^{n+1} + q^{-n-1})/(q - q^{-1})^2`.
    pub fn casimir_scalar(&self) -> RatFunc {
        let n = self.n as i64;
        &self.eps() * &self.alpha * (RatFunc::q_pow(n + 1) + RatFunc::q_pow(-n - 1)) / q_minus_qinv().pow(2)
    }

    fn sort_key(&self) -> (std::cmp::Reverse<u32>, i8, String, String) {
        (std::cmp::Reverse(self.n), -self.epsilon, self.alpha.to_string(), self.beta.to_string())
    }
}

impl fmt::Display for HighestWeightData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.epsilon > 0 { "+1" } else { "-1" };
        write!(f, "V[eps={sign}, n={}, alpha={}, beta={}]", self.n, self.alpha, self.beta)
    }
}

/// Off-diagonal entries of `g` and `h` on the self-extension `M_{x,y}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionParams {
    pub x: RatFunc,
    pub y: RatFunc,
}

impl ExtensionParams {
    pub fn new(x: RatFunc, y: RatFunc) -> Self {
        ExtensionParams { x, y }
    }

    pub fn is_split(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// A finite-dimensional module, given by the action of all eight generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightModule {
    dim: usize,
    labels: Vec<String>,
    action: [Matrix; 8],
    weights: Option<Vec<Weight>>,
}

fn slot(x: Generator) -> usize {
    x as usize
}

impl WeightModule {
    /// Build from the actions of `E, F, K, g, h`; inverses are computed.
    pub fn new(
        labels: Vec<String>,
        e: Matrix,
        f: Matrix,
        k: Matrix,
        g: Matrix,
        h: Matrix,
        weights: Option<Vec<Weight>>,
    ) -> Result<Self, Error> {
        let inv = |m: &Matrix, name: &str| {
            m.inverse().ok_or_else(|| Error::Malformed(format!("action of {name} is not invertible")))
        };
        let (ki, gi, hi) = (inv(&k, "K")?, inv(&g, "g")?, inv(&h, "h")?);
        Self::from_action(labels, [e, f, k, ki, g, gi, h, hi], weights)
    }

    /// Build from all eight matrices in the order of [`Generator::ALL`].
    pub fn from_action(labels: Vec<String>, action: [Matrix; 8], weights: Option<Vec<Weight>>) -> Result<Self, Error> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::Malformed("module has dimension 0".into()));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: if m.rows() != dim { m.rows() } else { m.cols() } });
            }
        }
        if let Some(w) = &weights {
            if w.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: w.len() });
            }
        }
        Ok(WeightModule { dim, labels, action, weights })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn matrix(&self, x: Generator) -> &Matrix {
        &self.action[slot(x)]
    }

    fn apply_power(&self, pos: Generator, neg: Generator, e: i64, mut v: Vector) -> Vector {
        let m = if e >= 0 { self.matrix(pos) } else { self.matrix(neg) };
        for _ in 0..e.unsigned_abs() {
            v = m.mul_vec(&v);
        }
        v
    }

    fn apply_monomial(&self, m: &PbwMonomial, v: &[RatFunc]) -> Vector {
        use Generator::*;
        let mut v = self.apply_power(E, E, m.e as i64, v.to_vec());
        v = self.apply_power(H, HInv, m.h, v);
        v = self.apply_power(G, GInv, m.g, v);
        v = self.apply_power(K, KInv, m.k, v);
        self.apply_power(F, F, m.f as i64, v)
    }

    /// Action of an algebra element on a vector.
    pub fn act(&self, a: &AlgebraElement, v: &[RatFunc]) -> Result<Vector, Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let mut out = vec![RatFunc::zero(); self.dim];
        for (m, c) in a.terms() {
            let w = self.apply_monomial(m, v);
            for (o, x) in out.iter_mut().zip(w) {
                if !x.is_zero() {
                    *o += &(&x * c);
                }
            }
        }
        Ok(out)
    }

    /// Matrix by which an algebra element acts.
    pub fn matrix_of(&self, a: &AlgebraElement) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.act(a, &unit(self.dim, j)).expect("dimension")).collect();
        Matrix::from_columns(self.dim, &cols)
    }
}

/// The standard basis vector `e_j`.
pub fn unit(dim: usize, j: usize) -> Vector {
    let mut v = vec![RatFunc::zero(); dim];
    v[j] = RatFunc::one();
    v
}

/// A defining relation checked by [`check_module`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    KConjugatesE,
    KConjugatesF,
    EfCommutator,
    Inverses,
    TorusCommutes,
    GhCentral,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::KConjugatesE => "K E K^-1 = q^2 E",
            Relation::KConjugatesF => "K F K^-1 = q^-2 F",
            Relation::EfCommutator => "E F - F E = (K - K^-1 g^2)/(q - q^-1)",
            Relation::Inverses => "K K^-1 = g g^-1 = h h^-1 = 1",
            Relation::TorusCommutes => "K, g, h commute",
            Relation::GhCentral => "g, h commute with E, F",
        }
    }
}

/// Outcome of [`check_module`]: every violated relation, in checking order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub violations: Vec<Relation>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<Relation> {
        self.violations.first().copied()
    }
}

impl fmt::Display for ModuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("all defining relations hold");
        }
        let names: Vec<&str> = self.violations.iter().map(|r| r.name()).collect();
        write!(f, "violated: {}", names.join("; "))
    }
}

/// Check every defining relation as an exact matrix identity.
pub fn check_module(m: &WeightModule) -> ModuleReport {
    use Generator::*;
    let a = |x| m.matrix(x);
    let comm = |x: &Matrix, y: &Matrix| &(x * y) - &(y * x);
    let id = Matrix::identity(m.dim);
    let mut violations = Vec::new();

    if &(a(K) * a(E)) * a(KInv) != a(E).scale(&RatFunc::q_pow(2)) {
        violations.push(Relation::KConjugatesE);
    }
    if &(a(K) * a(F)) * a(KInv) != a(F).scale(&RatFunc::q_pow(-2)) {
        violations.push(Relation::KConjugatesF);
    }
    let g2 = a(G) * a(G);
    let rhs = (a(K) - &(a(KInv) * &g2)).scale(&q_minus_qinv().inv());
    if comm(a(E), a(F)) != rhs {
        violations.push(Relation::EfCommutator);
    }
    let inverse_pairs = [(K, KInv), (G, GInv), (H, HInv)];
    if inverse_pairs.iter().any(|&(x, y)| a(x) * a(y) != id || a(y) * a(x) != id) {
        violations.push(Relation::Inverses);
    }
    if !comm(a(K), a(G)).is_zero() || !comm(a(K), a(H)).is_zero() || !comm(a(G), a(H)).is_zero() {
        violations.push(Relation::TorusCommutes);
    }
    if [E, F].iter().any(|&x| !comm(a(x), a(G)).is_zero() || !comm(a(x), a(H)).is_zero()) {
        violations.push(Relation::GhCentral);
    }
    ModuleReport { violations }
}

/// The simple module `V_{ε,n,α,β}` on the basis `v_0, …, v_n`.
pub fn simple_module(d: &HighestWeightData) -> WeightModule {
    let dim = d.dim();
    let n = d.n as i64;
    let eps = d.eps();
    let mut e = Matrix::zeros(dim, dim);
    let mut f = Matrix::zeros(dim, dim);
    let mut k = Matrix::zeros(dim, dim);
    for p in 0..dim {
        let pi = p as i64;
        k[(p, p)] = &eps * &d.alpha * RatFunc::q_pow(n - 2 * pi);
        if p + 1 < dim {
            f[(p + 1, p)] = qint(pi + 1).expect("nonnegative");
        }
        if p > 0 {
            e[(p - 1, p)] = &eps * &d.alpha * qint(n - pi + 1).expect("nonnegative");
        }
    }
    let weights = (0..dim).map(|p| Weight::new(k[(p, p)].clone(), d.alpha.clone(), d.beta.clone())).collect();
    let labels = (0..dim).map(|p| format!("v{p}")).collect();
    WeightModule::new(labels, e, f, k, Matrix::scalar(dim, &d.alpha), Matrix::scalar(dim, &d.beta), Some(weights))
        .expect("simple modules have invertible torus action")
}

/// The one-dimensional module `𝕂_{α,β}`: `E = F = 0`, `K = g = α`, `h = β`.
pub fn torus_module(alpha: &RatFunc, beta: &RatFunc) -> Result<WeightModule, Error> {
    Ok(simple_module(&HighestWeightData::new(1, 0, alpha.clone(), beta.clone())?))
}

/// Tensor product, with generators acting through the coproduct.
pub fn tensor(m: &WeightModule, n: &WeightModule) -> WeightModule {
    let action = Generator::ALL.map(|x| {
        let mut acc = Matrix::zeros(m.dim * n.dim, m.dim * n.dim);
        for ([a, b], c) in coproduct_generator(x).terms() {
            let left = m.matrix_of(&AlgebraElement::monomial(*a));
            let right = n.matrix_of(&AlgebraElement::monomial(*b));
            acc = &acc + &left.kron(&right).scale(c);
        }
        acc
    });
    let labels = m.labels.iter().flat_map(|a| n.labels.iter().map(move |b| format!("{a}⊗{b}"))).collect();
    let weights = match (&m.weights, &n.weights) {
        (Some(wm), Some(wn)) => Some(wm.iter().flat_map(|a| wn.iter().map(move |b| a.product(b))).collect()),
        _ => None,
    };
    WeightModule::from_action(labels, action, weights).expect("dimensions agree")
}

/// Block-diagonal direct sum.
pub fn direct_sum(m: &WeightModule, n: &WeightModule) -> WeightModule {
    let action = Generator::ALL.map(|x| m.matrix(x).direct_sum(n.matrix(x)));
    let labels = m.labels.iter().chain(&n.labels).cloned().collect();
    let weights = match (&m.weights, &n.weights) {
        (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
        _ => None,
    };
    WeightModule::from_action(labels, action, weights).expect("dimensions agree")
}

fn transposed_through(m: &WeightModule, map: impl Fn(Generator) -> AlgebraElement, weights: Option<Vec<Weight>>) -> WeightModule {
    let action = Generator::ALL.map(|x| m.matrix_of(&map(x)).transpose());
    let labels = m.labels.iter().map(|l| format!("{l}*")).collect();
    WeightModule::from_action(labels, action, weights).expect("dimensions agree")
}

/// The dual module, `(a f)(v) = f(S(a) v)`, on the dual basis.
pub fn dual_module(m: &WeightModule) -> WeightModule {
    let weights = m.weights.as_ref().map(|w| w.iter().map(Weight::inverse).collect());
    transposed_through(m, |x| antipode(&AlgebraElement::generator(x)), weights)
}

/// The dual twisted by the anti-involution, `<a f, v> = <f, i(a) v>`.
pub fn twisted_dual(m: &WeightModule) -> WeightModule {
    transposed_through(m, |x| AlgebraElement::generator(x).anti_involution(), m.weights.clone())
}

/// `V_{ε,n} ⊗ M_{x,y}` on the basis `v_0⊗w_1, …, v_n⊗w_1, v_0⊗w_2, …, v_n⊗w_2`.
///
/// `g` and `h` act on the second factor by `[[α, x], [0, α]]` and
/// `[[β, y], [0, β]]`; `E` and `K` act as `E'⊗g` and `K'⊗g` with the
/// U_q(sl₂) generators `E'`, `K'` on the first factor.
pub fn extension_module(d: &HighestWeightData, p: &ExtensionParams) -> WeightModule {
    let plain = HighestWeightData { epsilon: d.epsilon, n: d.n, alpha: RatFunc::one(), beta: RatFunc::one() };
    let v = simple_module(&plain);
    let block = |diag: &RatFunc, off: &RatFunc| {
        Matrix::from_rows(vec![vec![diag.clone(), off.clone()], vec![RatFunc::zero(), diag.clone()]])
    };
    let g2 = block(&d.alpha, &p.x);
    let h2 = block(&d.beta, &p.y);
    let id2 = Matrix::identity(2);
    let id = Matrix::identity(v.dim);
    // w-index outermost gives the v_p⊗w_1 block first
    let e = g2.kron(v.matrix(Generator::E));
    let f = id2.kron(v.matrix(Generator::F));
    let k = g2.kron(v.matrix(Generator::K));
    let g = g2.kron(&id);
    let h = h2.kron(&id);
    let labels = (1..=2).flat_map(|w| (0..v.dim).map(move |q| format!("v{q}⊗w{w}"))).collect();
    let weights = (0..2 * v.dim).map(|i| Weight::new(k[(i, i)].clone(), d.alpha.clone(), d.beta.clone())).collect();
    WeightModule::new(labels, e, f, k, g, h, Some(weights)).expect("torus action is invertible")
}

/// Result of the highest-weight vector search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HighestWeights {
    /// A basis of the highest-weight vectors, each with its weight.
    Vectors(Vec<(Vector, Weight)>),
    /// These torus generators do not act diagonalizably on `ker E`.
    NonDiagonalizable(Vec<Generator>),
}

fn distinct(values: Vec<RatFunc>) -> Vec<RatFunc> {
    let mut seen = BTreeSet::new();
    values.into_iter().filter(|v| seen.insert(v.to_string())).collect()
}

/// `ker E` together with the restriction of each of `K, g, h` to it.
struct KernelOfE {
    basis: Matrix,
    restricted: Vec<(Generator, Matrix, Vec<RatFunc>)>,
}

fn kernel_of_e(m: &WeightModule) -> KernelOfE {
    let basis = Matrix::from_columns(m.dim, &m.matrix(Generator::E).kernel());
    let restricted = [Generator::K, Generator::G, Generator::H]
        .into_iter()
        .map(|x| {
            let image = m.matrix(x) * &basis;
            // ker E is stable under K, g, h
            let r = basis.solve(&image).expect("ker E is torus-stable");
            (x, r, distinct(m.matrix(x).diagonal()))
        })
        .collect();
    KernelOfE { basis, restricted }
}

fn common_eigenvectors(ke: &KernelOfE) -> Vec<(Vector, Weight)> {
    let k = ke.basis.cols();
    if k == 0 {
        return Vec::new();
    }
    let mut spaces: Vec<(Matrix, Vec<RatFunc>)> = vec![(Matrix::identity(k), Vec::new())];
    for (_, op, candidates) in &ke.restricted {
        let mut next = Vec::new();
        for (b, vals) in &spaces {
            for lam in candidates {
                let shifted = op - &Matrix::scalar(k, lam);
                let coeffs = (&shifted * b).kernel();
                if coeffs.is_empty() {
                    continue;
                }
                let sub = b * &Matrix::from_columns(b.cols(), &coeffs);
                let mut v = vals.clone();
                v.push(lam.clone());
                next.push((sub, v));
            }
        }
        spaces = next;
    }
    let mut out = Vec::new();
    for (b, vals) in spaces {
        let w = Weight::new(vals[0].clone(), vals[1].clone(), vals[2].clone());
        for col in (&ke.basis * &b).columns() {
            out.push((col, w.clone()));
        }
    }
    out
}

/// Highest-weight vectors: a basis of `ker E` intersected with the common
/// eigenspaces of `K, g, h`, or the operators that fail to diagonalize on `ker E`.
///
/// Candidate eigenvalues are read off the diagonals of `K, g, h`, which is
/// valid for modules whose natural basis makes the torus triangular.
pub fn highest_weight_vectors(m: &WeightModule) -> HighestWeights {
    let ke = kernel_of_e(m);
    let k = ke.basis.cols();
    let mut bad = Vec::new();
    for (x, op, candidates) in &ke.restricted {
        let total: usize = candidates.iter().map(|lam| k - (op - &Matrix::scalar(k, lam)).rank()).sum();
        if total != k {
            bad.push(*x);
        }
    }
    if !bad.is_empty() {
        return HighestWeights::NonDiagonalizable(bad);
    }
    HighestWeights::Vectors(common_eigenvectors(&ke))
}

/// Read off the simple constituents of a completely reducible module.
///
/// Each highest-weight vector `v` contributes `V_{ε,n,α,β}` with `n + 1` the
/// length of its `F`-string and `ε = λ/(αq^n)`; the strings must together
/// span the module.
pub fn decompose(m: &WeightModule) -> Result<Vec<HighestWeightData>, Error> {
    let ke = kernel_of_e(m);
    let f = m.matrix(Generator::F);
    let mut span: Vec<Vector> = Vec::new();
    let mut out = Vec::new();
    for (v, w) in common_eigenvectors(&ke) {
        let mut cur = v;
        let mut len = 0u32;
        while !is_zero_vector(&cur) {
            let next = f.mul_vec(&cur);
            span.push(cur);
            cur = next;
            len += 1;
            if len as usize > m.dim {
                return Err(Error::Malformed("F does not act nilpotently".into()));
            }
        }
        let n = len - 1;
        let ratio = &w.lambda / &(&w.alpha * &RatFunc::q_pow(n as i64));
        let epsilon = if ratio.is_one() {
            1
        } else if (-&ratio).is_one() {
            -1
        } else {
            return Err(Error::Malformed(format!("highest weight {w} is not of the form ±αq^{n}")));
        };
        out.push(HighestWeightData::new(epsilon, n, w.alpha, w.beta)?);
    }
    let rank = if span.is_empty() { 0 } else { Matrix::from_columns(m.dim, &span).rank() };
    if rank < m.dim || span.len() > rank {
        return Err(Error::NotCompletelyReducible { defect: m.dim - rank });
    }
    out.sort_by_key(HighestWeightData::sort_key);
    Ok(out)
}

/// Sort a multiset of constituents into the order used by [`decompose`].
pub fn sort_constituents(v: &mut [HighestWeightData]) {
    v.sort_by_key(HighestWeightData::sort_key);
}

/// Whether the submodule spanned by `sub` has a complementary submodule.
///
/// Solves for `Q` with `Q S = I` and `Q ρ(X) = A_X Q`, where `ρ(X) S = S A_X`;
/// then `S Q` is a module projection onto the submodule.
pub fn is_split_selfextension(m: &WeightModule, sub: &[Vector]) -> Result<bool, Error> {
    if sub.iter().any(|v| v.len() != m.dim) {
        return Err(Error::DimensionMismatch { expected: m.dim, found: sub.iter().map(Vec::len).find(|&l| l != m.dim).unwrap() });
    }
    let s = Matrix::from_columns(m.dim, sub);
    let k = s.rank();
    if k != sub.len() {
        return Err(Error::InvalidArgument("submodule basis is linearly dependent".into()));
    }
    if k == 0 || k == m.dim {
        return Ok(true);
    }
    let d = m.dim;
    let mut restricted = Vec::new();
    for x in Generator::CHEVALLEY {
        let a = s.solve(&(m.matrix(x) * &s)).ok_or(Error::NotSubmodule)?;
        restricted.push((x, a));
    }
    // unknowns Q[i][j], index i*d + j
    let unknowns = k * d;
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();
    let mut rhs: Vec<RatFunc> = Vec::new();
    for (x, a) in &restricted {
        let rho = m.matrix(*x);
        for i in 0..k {
            for l in 0..d {
                let mut row = vec![RatFunc::zero(); unknowns];
                for j in 0..d {
                    row[i * d + j] += &rho[(j, l)];
                }
                for r in 0..k {
                    row[r * d + l] -= &a[(i, r)];
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                    rhs.push(RatFunc::zero());
                }
            }
        }
    }
    for i in 0..k {
        for c in 0..k {
            let mut row = vec![RatFunc::zero(); unknowns];
            for j in 0..d {
                row[i * d + j] = s[(j, c)].clone();
            }
            rows.push(row);
            rhs.push(if i == c { RatFunc::one() } else { RatFunc::zero() });
        }
    }
    let system = Matrix::from_rows(rows);
    let b = Matrix::from_columns(rhs.len(), &[rhs]);
    Ok(system.solve(&b).is_some())
}

/// An invertible intertwiner `X` with `X ρ_M(a) = ρ_N(a) X`, if one exists.
///
/// A basis of the intertwiner space is found exactly; then a few
/// deterministic small-integer combinations are tested for invertibility.
pub fn isomorphic(m: &WeightModule, n: &WeightModule) -> Option<Matrix> {
    if m.dim != n.dim {
        return None;
    }
    let d = m.dim;
    let mut rows = Vec::new();
    for x in Generator::CHEVALLEY {
        let (rm, rn) = (m.matrix(x), n.matrix(x));
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![RatFunc::zero(); d * d];
                for l in 0..d {
                    row[i * d + l] += &rm[(l, j)];
                    row[l * d + j] -= &rn[(i, l)];
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..d * d).map(|i| unit(d * d, i)).collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    if basis.is_empty() {
        return None;
    }
    let as_matrix = |v: &Vector| {
        let mut x = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                x[(i, j)] = v[i * d + j].clone();
            }
        }
        x
    };
    for t in 0..5usize {
        let mut comb = vec![RatFunc::zero(); d * d];
        for (i, b) in basis.iter().enumerate() {
            let c = RatFunc::from_int((((i + 1) * (t + 2) + t) % 7 + 1) as i64);
            for (acc, x) in comb.iter_mut().zip(b) {
                if !x.is_zero() {
                    *acc += &(x * &c);
                }
            }
        }
        let x = as_matrix(&comb);
        if x.rank() == d {
            return Some(x);
        }
    }
    None
}

/// Dimensions of `Ext^0, Ext^1, Ext^2` between the one-dimensional torus
/// modules `𝕂_{α,β}` and `𝕂_{α',β'}`, from the Koszul-type complex
/// `K → K^2 → K` with maps `(α'-α, β'-β)^T` and `(β'-β, -(α'-α))`.
pub fn ext_dims_torus(alpha: &RatFunc, beta: &RatFunc, alpha2: &RatFunc, beta2: &RatFunc) -> Result<[usize; 3], Error> {
    for (v, name) in [(alpha, "alpha"), (beta, "beta"), (alpha2, "alpha'"), (beta2, "beta'")] {
        if v.is_zero() {
            return Err(Error::ZeroParameter(name));
        }
    }
    let da = alpha2 - alpha;
    let db = beta2 - beta;
    let phi1 = Matrix::from_rows(vec![vec![da.clone()], vec![db.clone()]]);
    let phi2 = Matrix::from_rows(vec![vec![db, -&da]]);
    let (r1, r2) = (phi1.rank(), phi2.rank());
    Ok([1 - r1, 2 - r1 - r2, 1 - r2])
}
