//! Independent oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls the normal-form engine: words are rewritten one
//! adjacent pair at a time, straight from the defining relations, and module
//! matrices are written out from the closed formulas.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ugh_core::linalg::Matrix;
use ugh_core::{AlgebraElement, Generator, PbwMonomial, RatFunc, Rational};

use Generator::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q() -> RatFunc {
    RatFunc::q()
}

pub fn qp(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

pub fn int(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

pub fn d() -> RatFunc {
    q() - qp(-1)
}

/// `[m]` as the symmetric sum `q^{m-1} + q^{m-3} + ... + q^{1-m}`.
pub fn qint(m: i64) -> RatFunc {
    assert!(m >= 0);
    (0..m).fold(RatFunc::zero(), |acc, j| acc + qp(m - 1 - 2 * j))
}

pub fn qfact(m: i64) -> RatFunc {
    (1..=m).fold(RatFunc::one(), |acc, j| acc * qint(j))
}

fn rank(x: Generator) -> u8 {
    match x {
        F => 0,
        K | KInv => 1,
        G | GInv => 2,
        H | HInv => 3,
        E => 4,
    }
}

fn inverse(x: Generator) -> Option<Generator> {
    match x {
        K => Some(KInv),
        KInv => Some(K),
        G => Some(GInv),
        GInv => Some(G),
        H => Some(HInv),
        HInv => Some(H),
        E | F => None,
    }
}

type Term = (RatFunc, Vec<Generator>);

/// Rewrites of the pair at `i..i+2`, or `None` if it is already in order.
fn rewrite_at(word: &[Generator], i: usize) -> Option<Vec<(RatFunc, Vec<Generator>)>> {
    let (x, y) = (word[i], word[i + 1]);
    let splice = |mid: &[Generator]| {
        let mut w = word[..i].to_vec();
        w.extend_from_slice(mid);
        w.extend_from_slice(&word[i + 2..]);
        w
    };
    if inverse(x) == Some(y) {
        return Some(vec![(RatFunc::one(), splice(&[]))]);
    }
    if rank(x) <= rank(y) {
        return None;
    }
    let swapped = splice(&[y, x]);
    let c = match (x, y) {
        (E, F) => {
            let dinv = d().inv();
            return Some(vec![
                (RatFunc::one(), swapped),
                (dinv.clone(), splice(&[K])),
                (-dinv, splice(&[KInv, G, G])),
            ]);
        }
        // K F = q^-2 F K and E K = q^-2 K E
        (K, F) | (E, K) => qp(-2),
        (KInv, F) | (E, KInv) => qp(2),
        _ => RatFunc::one(),
    };
    Some(vec![(c, swapped)])
}

fn to_monomial(word: &[Generator]) -> PbwMonomial {
    let mut m = PbwMonomial::default();
    for &x in word {
        match x {
            F => m.f += 1,
            E => m.e += 1,
            K => m.k += 1,
            KInv => m.k -= 1,
            G => m.g += 1,
            GInv => m.g -= 1,
            H => m.h += 1,
            HInv => m.h -= 1,
        }
    }
    m
}

/// Rewrite to normal form, choosing uniformly among applicable adjacent
/// rewrites at every step.
pub fn naive_normalize<R: Rng>(rng: &mut R, terms: Vec<Term>) -> AlgebraElement {
    let mut pending = terms;
    let mut out = AlgebraElement::zero();
    while !pending.is_empty() {
        let idx = rng.gen_range(0..pending.len());
        let (c, word) = pending.swap_remove(idx);
        if c.is_zero() {
            continue;
        }
        let spots: Vec<usize> = (0..word.len().saturating_sub(1)).filter(|&i| rewrite_at(&word, i).is_some()).collect();
        if spots.is_empty() {
            out.add_term(to_monomial(&word), c);
            continue;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        for (c2, w2) in rewrite_at(&word, i).unwrap() {
            pending.push((&c * &c2, w2));
        }
    }
    out
}

pub fn naive_word<R: Rng>(rng: &mut R, word: &[Generator]) -> AlgebraElement {
    naive_normalize(rng, vec![(RatFunc::one(), word.to_vec())])
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Generator> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Generator::ALL[rng.gen_range(0..8)]).collect()
}

/// A nonzero scalar: a signed monomial `c q^k`, a binomial `q^k + c`, or a
/// quotient of such.
pub fn random_scalar<R: Rng>(rng: &mut R) -> RatFunc {
    let c = Rational::new(rng.gen_range(1..5).into(), rng.gen_range(1..4).into());
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let k = rng.gen_range(-3..=3);
    match rng.gen_range(0..3) {
        0 => RatFunc::from_rational(c) * qp(k) * int(sign),
        1 => qp(k.max(1)) + RatFunc::from_rational(c) * int(sign),
        _ => (q() + int(rng.gen_range(1..4))) / (qp(2) - int(sign * rng.gen_range(1..4))),
    }
}

/// Parameters that are not of the form `±q^k`.
pub fn random_generic_scalar<R: Rng>(rng: &mut R) -> RatFunc {
    loop {
        let s = random_scalar(rng);
        if s.as_signed_q_power().is_none() {
            return s;
        }
    }
}

/// Action of the eight generators on `V_{eps,n,alpha,beta}` written from
/// the closed formulas, basis `v_0..v_n`, in `Generator::ALL` order.
pub fn simple_matrices(eps: i64, n: usize, alpha: &RatFunc, beta: &RatFunc) -> [Matrix; 8] {
    let dim = n + 1;
    let ni = n as i64;
    let diag = |f: &dyn Fn(i64) -> RatFunc| {
        let mut m = Matrix::zeros(dim, dim);
        for p in 0..dim {
            m[(p, p)] = f(p as i64);
        }
        m
    };
    let mut e = Matrix::zeros(dim, dim);
    let mut f = Matrix::zeros(dim, dim);
    for p in 1..dim {
        let pi = p as i64;
        e[(p - 1, p)] = int(eps) * alpha * qint(ni - pi + 1);
        f[(p, p - 1)] = qint(pi);
    }
    let k = diag(&|p| int(eps) * alpha * qp(ni - 2 * p));
    let kinv = diag(&|p| int(eps) * alpha.inv() * qp(2 * p - ni));
    [
        e,
        f,
        k,
        kinv,
        diag(&|_| alpha.clone()),
        diag(&|_| alpha.inv()),
        diag(&|_| beta.clone()),
        diag(&|_| beta.inv()),
    ]
}

/// `E F^p v̄ = coeff · F^{p-1} v̄` in the Verma module with highest weight
/// `(a, b, c)`, computed by rewriting `E F^p` and reading off the terms that
/// survive on `v̄`.
pub fn verma_e_coefficient<R: Rng>(rng: &mut R, p: usize, a: &RatFunc, b: &RatFunc, c: &RatFunc) -> RatFunc {
    let mut word = vec![E];
    word.extend(std::iter::repeat_n(F, p));
    let nf = naive_word(rng, &word);
    let mut acc = RatFunc::zero();
    for (m, coeff) in nf.terms() {
        if m.e > 0 {
            continue;
        }
        assert_eq!(m.f as usize + 1, p, "E F^p has F-degree p - 1 modulo E");
        acc += &(coeff * &a.pow(m.k) * b.pow(m.g) * c.pow(m.h));
    }
    acc
}

/// `T ρ1(x) = ρ2(x) T` for all eight generators.
pub fn intertwines(t: &Matrix, rho1: &[Matrix; 8], rho2: &[Matrix; 8]) -> bool {
    Generator::ALL.iter().all(|&x| t * &rho1[x as usize] == &rho2[x as usize] * t)
}

/// Matrix of an algebra element under the action `rho`, one PBW monomial at
/// a time as `F^l K^m g^n h^s E^t`.
pub fn element_matrix(rho: &[Matrix; 8], a: &AlgebraElement) -> Matrix {
    let dim = rho[0].rows();
    let power = |pos: Generator, neg: Generator, e: i64| {
        let m = if e >= 0 { &rho[pos as usize] } else { &rho[neg as usize] };
        (0..e.unsigned_abs()).fold(Matrix::identity(dim), |acc, _| &acc * m)
    };
    let mut out = Matrix::zeros(dim, dim);
    for (m, c) in a.terms() {
        let t = &(&(&(&power(F, F, m.f as i64) * &power(K, KInv, m.k)) * &power(G, GInv, m.g)) * &power(H, HInv, m.h))
            * &power(E, E, m.e as i64);
        out = &out + &t.scale(c);
    }
    out
}

/// Block-diagonal sum of two actions.
pub fn direct_sum(a: &[Matrix; 8], b: &[Matrix; 8]) -> [Matrix; 8] {
    std::array::from_fn(|i| a[i].direct_sum(&b[i]))
}
