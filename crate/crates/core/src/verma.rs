//! Verma modules `V(a,b,c)`, truncated to the span of `F^p v̄` for `p ≤ N`.
//!
//! `V(a,b,c)` is free over `𝕂[F]` on its highest-weight vector `v̄`, so the
//! truncation keeps exact closed forms for every generator. The only thing
//! lost is `F` applied to the top vector; any computation that needs it
//! reports [`Error::Inconclusive`] instead of guessing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::center::{characters_equal, CentralCharacterPoint};
use crate::error::Error;
use crate::field::{q_minus_qinv, qfact, qint, RatFunc};
use crate::linalg::{Matrix, Vector};
use crate::pbw::{AlgebraElement, Generator};
use crate::rep::{HighestWeightData, Relation, Weight};

/// Cutoff used when none is given.
pub const DEFAULT_CUTOFF: usize = 12;

/// `V(a,b,c)` on the basis `F^p v̄`, `0 ≤ p ≤ cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedVerma {
    point: CentralCharacterPoint,
    cutoff: usize,
}

/// Build the truncated Verma module with highest weight `(a, b, c)`.
pub fn verma(a: RatFunc, b: RatFunc, c: RatFunc, cutoff: usize) -> Result<TruncatedVerma, Error> {
    if cutoff < 1 {
        return Err(Error::InvalidArgument("cutoff must be at least 1".into()));
    }
    Ok(TruncatedVerma { point: CentralCharacterPoint::new(a, b, c)?, cutoff })
}

impl TruncatedVerma {
    pub fn point(&self) -> &CentralCharacterPoint {
        &self.point
    }

    pub fn a(&self) -> &RatFunc {
        &self.point.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.point.b
    }

    pub fn c(&self) -> &RatFunc {
        &self.point.c
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Number of basis vectors kept, `cutoff + 1`.
    pub fn dim(&self) -> usize {
        self.cutoff + 1
    }

    /// Weight `(q^{-2p}a, b, c)` of `F^p v̄`.
    pub fn weight(&self, p: usize) -> Weight {
        Weight::new(RatFunc::q_pow(-2 * p as i64) * self.a(), self.b().clone(), self.c().clone())
    }

    /// `E F^p v̄ = [p](q^{1-p}a - q^{p-1}a^{-1}b^2)/(q - q^{-1}) F^{p-1} v̄`.
    pub fn e_coefficient(&self, p: usize) -> RatFunc {
        if p == 0 {
            return RatFunc::zero();
        }
        let p = p as i64;
        let (a, b) = (self.a(), self.b());
        let inner = RatFunc::q_pow(1 - p) * a - RatFunc::q_pow(p - 1) * a.inv() * b * b;
        qint(p).expect("positive") * inner / q_minus_qinv()
    }

    fn torus_value(&self, x: Generator, p: usize) -> RatFunc {
        use Generator::*;
        match x {
            K => self.weight(p).lambda,
            KInv => self.weight(p).lambda.inv(),
            G => self.b().clone(),
            GInv => self.b().inv(),
            H => self.c().clone(),
            HInv => self.c().inv(),
            E | F => unreachable!("not a torus generator"),
        }
    }

    /// Truncated matrix of a generator; `F` sends the top vector to 0 here.
    pub fn matrix(&self, x: Generator) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for p in 0..n {
            match x {
                Generator::E if p > 0 => m[(p - 1, p)] = self.e_coefficient(p),
                Generator::E => {}
                Generator::F if p + 1 < n => m[(p + 1, p)] = RatFunc::one(),
                Generator::F => {}
                _ => m[(p, p)] = self.torus_value(x, p),
            }
        }
        m
    }

    /// All eight truncated matrices in the order of [`Generator::ALL`].
    pub fn matrices(&self) -> [Matrix; 8] {
        Generator::ALL.map(|x| self.matrix(x))
    }

    fn apply_generator(&self, x: Generator, v: &[RatFunc]) -> Result<Vector, Error> {
        let n = self.dim();
        if x == Generator::F && !v[n - 1].is_zero() {
            return Err(Error::Inconclusive { cutoff: self.cutoff });
        }
        Ok(self.matrix(x).mul_vec(v))
    }

    /// Action of an algebra element; fails if `F` would leave the truncation.
    pub fn act(&self, a: &AlgebraElement, v: &[RatFunc]) -> Result<Vector, Error> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        let mut out = vec![RatFunc::zero(); self.dim()];
        for (m, c) in a.terms() {
            let mut w = v.to_vec();
            for x in m.letters().into_iter().rev() {
                w = self.apply_generator(x, &w)?;
            }
            for (o, x) in out.iter_mut().zip(w) {
                if !x.is_zero() {
                    *o += &(&x * c);
                }
            }
        }
        Ok(out)
    }

    /// The basis vector `F^p v̄`.
    pub fn basis_vector(&self, p: usize) -> Vector {
        crate::rep::unit(self.dim(), p)
    }

    /// Defining relations violated on the truncation. The commutator of `E`
    /// and `F` is not checked on the top vector, whose `F`-image is unknown.
    pub fn check_relations(&self) -> Vec<Relation> {
        use Generator::*;
        let m = |x| self.matrix(x);
        let mut out = Vec::new();
        if &(&m(K) * &m(E)) * &m(KInv) != m(E).scale(&RatFunc::q_pow(2)) {
            out.push(Relation::KConjugatesE);
        }
        if &(&m(K) * &m(F)) * &m(KInv) != m(F).scale(&RatFunc::q_pow(-2)) {
            out.push(Relation::KConjugatesF);
        }
        let lhs = &(&m(E) * &m(F)) - &(&m(F) * &m(E));
        let rhs = (&m(K) - &(&m(KInv) * &(&m(G) * &m(G)))).scale(&q_minus_qinv().inv());
        let top = self.cutoff;
        let differs = (0..self.dim()).any(|i| (0..top).any(|j| lhs[(i, j)] != rhs[(i, j)]));
        if differs {
            out.push(Relation::EfCommutator);
        }
        let id = Matrix::identity(self.dim());
        if [(K, KInv), (G, GInv), (H, HInv)].iter().any(|&(x, y)| &m(x) * &m(y) != id) {
            out.push(Relation::Inverses);
        }
        out
    }
}

/// A maximal weight vector `F^n v̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalVector {
    pub depth: usize,
    pub weight: Weight,
    /// The sign with `a = ε b q^{n-1}`; absent for the generator `v̄` itself.
    pub epsilon: Option<i8>,
}

/// `v̄` together with every `F^n v̄`, `0 < n ≤ cutoff`, killed by `E`.
///
/// Weight spaces of a Verma module are one-dimensional, so checking basis
/// vectors is exhaustive.
pub fn maximal_vectors(v: &TruncatedVerma) -> Vec<MaximalVector> {
    let mut out = vec![MaximalVector { depth: 0, weight: v.weight(0), epsilon: None }];
    for n in 1..=v.cutoff {
        if v.e_coefficient(n).is_zero() {
            let ratio = v.a() / &(v.b() * &RatFunc::q_pow(n as i64 - 1));
            let epsilon = if ratio.is_one() { 1 } else { -1 };
            out.push(MaximalVector { depth: n, weight: v.weight(n), epsilon: Some(epsilon) });
        }
    }
    out
}

/// A homomorphism `V(a,b,c) → V(a',b',c')`, `F^p v̄ ↦ F^{p+n} v̄'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaHom {
    pub n: usize,
    pub epsilon: i8,
    /// Matrix of the map on the truncations: column `p` is the image of
    /// `F^p v̄` for `p + n ≤ cutoff`.
    pub map: Matrix,
}

/// Outcome of [`verma_hom`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomSearch {
    Found(VermaHom),
    None,
    /// The criterion holds with a degree `n` beyond the cutoff.
    Inconclusive { n: usize },
}

/// Nonzero homomorphism `V(a,b,c) → V(a',b',c')`: one exists exactly when
/// `(b,c) = (b',c')`, `a = εq^{-n-1}b` and `a' = εq^{n-1}b` for some `n ≥ 0`.
/// The map is verified as an injective intertwiner on the truncation.
pub fn verma_hom(source: &CentralCharacterPoint, target: &CentralCharacterPoint, cutoff: usize) -> Result<HomSearch, Error> {
    if source.b != target.b || source.c != target.c {
        return Ok(HomSearch::None);
    }
    let Some((sign, k)) = (&source.a / &source.b).as_signed_q_power() else {
        return Ok(HomSearch::None);
    };
    let n = -k - 1;
    if n < 0 {
        return Ok(HomSearch::None);
    }
    let eps = RatFunc::from_int(sign as i64);
    if target.a != &eps * &RatFunc::q_pow(n - 1) * &source.b {
        return Ok(HomSearch::None);
    }
    let n = n as usize;
    if n > cutoff {
        return Ok(HomSearch::Inconclusive { n });
    }
    let vs = verma(source.a.clone(), source.b.clone(), source.c.clone(), cutoff)?;
    let vt = verma(target.a.clone(), target.b.clone(), target.c.clone(), cutoff)?;
    let dim = cutoff + 1;
    let domain = dim - n;
    let mut map = Matrix::zeros(dim, domain);
    for p in 0..domain {
        map[(p + n, p)] = RatFunc::one();
    }
    if !intertwines(&vs, &vt, &map) || map.rank() != domain {
        return Err(Error::Malformed("homomorphism criterion holds but the map fails to intertwine".into()));
    }
    Ok(HomSearch::Found(VermaHom { n, epsilon: sign, map }))
}

/// `φ(X v) = X φ(v)` for every generator and every basis vector of the
/// domain whose image stays inside both truncations.
fn intertwines(source: &TruncatedVerma, target: &TruncatedVerma, map: &Matrix) -> bool {
    for x in Generator::ALL {
        let gen = AlgebraElement::generator(x);
        for p in 0..map.cols() {
            let v = source.basis_vector(p);
            let Ok(xv) = source.act(&gen, &v) else { continue };
            if x == Generator::F && p + 1 >= map.cols() {
                continue;
            }
            let lhs = map.mul_vec(&xv[..map.cols()]);
            if xv[map.cols()..].iter().any(|c| !c.is_zero()) {
                continue;
            }
            let Ok(rhs) = target.act(&gen, &map.column(p)) else { continue };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Whether a homomorphism found by [`verma_hom`] is consistent with equal
/// central characters.
pub fn hom_implies_equal_characters(source: &CentralCharacterPoint, target: &CentralCharacterPoint) -> bool {
    characters_equal(source, target)
}

/// Verdict of [`is_simple_verma`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Simplicity {
    /// No maximal vector at any depth up to the bound.
    SimpleUpToBound,
    /// A maximal vector at this depth generates a proper submodule.
    NotSimple { depth: usize },
    /// `a/b = ±q^k` with `k` beyond the bound.
    UnknownBeyondBound,
}

impl fmt::Display for Simplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Simplicity::SimpleUpToBound => f.write_str("simple-up-to-bound"),
            Simplicity::NotSimple { depth } => write!(f, "not-simple (maximal vector at depth {depth})"),
            Simplicity::UnknownBeyondBound => f.write_str("unknown-beyond-bound"),
        }
    }
}

/// Decide simplicity of `V(a,b,c)` from `a/b`: a proper submodule exists
/// exactly when `a/b = ±q^k` with `k ≥ 0`, at depth `k + 1`.
pub fn is_simple_verma(a: &RatFunc, b: &RatFunc, _c: &RatFunc, bound: usize) -> Result<Simplicity, Error> {
    if bound < 1 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroParameter(if a.is_zero() { "a" } else { "b" }));
    }
    Ok(match (a / b).as_signed_q_power() {
        Some((_, k)) if k >= 0 && k as usize <= bound => Simplicity::NotSimple { depth: k as usize + 1 },
        Some((_, k)) if k > 0 => Simplicity::UnknownBeyondBound,
        _ => Simplicity::SimpleUpToBound,
    })
}

/// Label of the finite-dimensional simple quotient `L(a,b,c)`, which exists
/// exactly when `a = εbq^{n-1}` with `n ≥ 1`; it is then `V_{ε,n-1,b,c}`.
pub fn simple_quotient_data(a: &RatFunc, b: &RatFunc, c: &RatFunc) -> Result<Option<HighestWeightData>, Error> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::ZeroParameter("a, b, c"));
    }
    Ok(match (a / b).as_signed_q_power() {
        Some((eps, k)) if k >= 0 => Some(HighestWeightData::new(eps, k as u32, b.clone(), c.clone())?),
        _ => None,
    })
}

/// Truncated matrices of `V(λ) ⊗ 𝕂_{b,c}`, where `V(λ)` is the U_q(sl₂)
/// Verma module with `K'v_p = λq^{-2p}v_p`, `F'v_p = [p+1]v_{p+1}`,
/// `E'v_{p+1} = (q^{-p}λ - q^pλ^{-1})/(q - q^{-1}) v_p`, and `E`, `K` act as
/// `bE'`, `bK'`.
pub fn chevalley_tensor(lambda: &RatFunc, b: &RatFunc, c: &RatFunc, cutoff: usize) -> Result<[Matrix; 8], Error> {
    if lambda.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::ZeroParameter("lambda, b, c"));
    }
    let dim = cutoff + 1;
    Ok(Generator::ALL.map(|x| {
        let mut m = Matrix::zeros(dim, dim);
        for p in 0..dim {
            let pi = p as i64;
            let k = b * lambda * RatFunc::q_pow(-2 * pi);
            match x {
                Generator::E if p + 1 < dim => {
                    let e = (RatFunc::q_pow(-pi) * lambda - RatFunc::q_pow(pi) * lambda.inv()) / q_minus_qinv();
                    m[(p, p + 1)] = b * &e;
                }
                Generator::F if p + 1 < dim => m[(p + 1, p)] = qint(pi + 1).expect("positive"),
                Generator::E | Generator::F => {}
                Generator::K => m[(p, p)] = k,
                Generator::KInv => m[(p, p)] = k.inv(),
                Generator::G => m[(p, p)] = b.clone(),
                Generator::GInv => m[(p, p)] = b.inv(),
                Generator::H => m[(p, p)] = c.clone(),
                Generator::HInv => m[(p, p)] = c.inv(),
            }
        }
        m
    }))
}

/// The map `v_p ⊗ 1 ↦ F^p v̄ / [p]!` on the truncation.
pub fn divided_power_map(cutoff: usize) -> Matrix {
    let mut d = Matrix::zeros(cutoff + 1, cutoff + 1);
    for p in 0..=cutoff {
        d[(p, p)] = qfact(p as i64).expect("nonnegative").inv();
    }
    d
}
