mod oracle;

use oracle::{d, int, q, qfact, qint, qp, random_generic_scalar, random_scalar, rng, simple_matrices, verma_e_coefficient};
use ugh_core::center::{characters_equal, CentralCharacterPoint};
use ugh_core::linalg::Matrix;
use ugh_core::verma::{
    chevalley_tensor, divided_power_map, is_simple_verma, maximal_vectors, simple_quotient_data, verma, verma_hom, HomSearch,
    Simplicity, DEFAULT_CUTOFF,
};
use ugh_core::{AlgebraElement, Error, Generator, RatFunc};

use Generator::*;

const N: usize = DEFAULT_CUTOFF;

fn point(a: &RatFunc, b: &RatFunc, c: &RatFunc) -> CentralCharacterPoint {
    CentralCharacterPoint::new(a.clone(), b.clone(), c.clone()).unwrap()
}

#[test]
fn e_action_matches_rewriting() {
    let mut r = rng(60);
    for _ in 0..3 {
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        let v = verma(a.clone(), b.clone(), c.clone(), 8).unwrap();
        for p in 1..=8 {
            assert_eq!(v.e_coefficient(p), verma_e_coefficient(&mut r, p, &a, &b, &c), "p = {p}");
        }
        assert!(v.check_relations().is_empty());
    }
}

#[test]
fn maximal_vectors_sit_at_the_predicted_depth() {
    let mut r = rng(61);
    for _ in 0..3 {
        let (b, c) = (random_scalar(&mut r), random_scalar(&mut r));
        for eps in [1i64, -1] {
            for n in 1..=6usize {
                let a = int(eps) * &b * qp(n as i64 - 1);
                let v = verma(a.clone(), b.clone(), c.clone(), N).unwrap();
                let found = maximal_vectors(&v);
                let depths: Vec<usize> = found.iter().map(|m| m.depth).collect();
                assert_eq!(depths, vec![0, n], "a = {a}");
                assert_eq!(found[1].epsilon, Some(eps as i8));
                assert_eq!(found[1].weight.lambda, &a * &qp(-2 * n as i64));
                // the oracle coefficient vanishes exactly at depth n
                for p in 1..=n + 1 {
                    assert_eq!(verma_e_coefficient(&mut r, p, &a, &b, &c).is_zero(), p == n);
                }
                assert_eq!(is_simple_verma(&a, &b, &c, N).unwrap(), Simplicity::NotSimple { depth: n });
            }
        }
        let generic = &b * &random_generic_scalar(&mut r);
        let v = verma(generic.clone(), b.clone(), c.clone(), N).unwrap();
        assert_eq!(maximal_vectors(&v).len(), 1);
        assert_eq!(is_simple_verma(&generic, &b, &c, N).unwrap(), Simplicity::SimpleUpToBound);
        // a/b = ±q^k with k < 0 gives no maximal vector either
        let below = -(&b * &qp(-3));
        assert_eq!(maximal_vectors(&verma(below.clone(), b.clone(), c.clone(), N).unwrap()).len(), 1);
        assert_eq!(is_simple_verma(&below, &b, &c, N).unwrap(), Simplicity::SimpleUpToBound);
    }
}

#[test]
fn simplicity_beyond_the_bound() {
    let b = int(2);
    assert_eq!(is_simple_verma(&(&b * &qp(20)), &b, &int(1), N).unwrap(), Simplicity::UnknownBeyondBound);
    assert_eq!(is_simple_verma(&(&b * &qp(12)), &b, &int(1), N).unwrap(), Simplicity::NotSimple { depth: 13 });
    assert!(is_simple_verma(&int(1), &int(1), &int(1), 0).is_err());
    assert!(matches!(verma(int(1), RatFunc::zero(), int(1), 4), Err(Error::ZeroParameter("b"))));
}

#[test]
fn top_vector_overflow_is_inconclusive() {
    let v = verma(q(), int(1), int(1), 3).unwrap();
    let f = AlgebraElement::generator(F);
    assert!(matches!(v.act(&f, &v.basis_vector(3)), Err(Error::Inconclusive { cutoff: 3 })));
    // the basis is F^p v̄, so F only shifts
    assert_eq!(v.act(&f, &v.basis_vector(1)).unwrap(), v.basis_vector(2));
}

/// The closed-form criterion for a nonzero map `V(a,b,c) -> V(a',b',c')`.
fn criterion(s: &CentralCharacterPoint, t: &CentralCharacterPoint) -> Option<(usize, i8)> {
    if s.b != t.b || s.c != t.c {
        return None;
    }
    for n in 0..=30i64 {
        for eps in [1i8, -1] {
            let e = int(eps as i64);
            if s.a == &e * &qp(-n - 1) * &s.b && t.a == &e * &qp(n - 1) * &s.b {
                return Some((n as usize, eps));
            }
        }
    }
    None
}

#[test]
fn homomorphisms_exactly_when_the_criterion_holds() {
    let mut r = rng(62);
    let c = random_scalar(&mut r);
    let mut found = 0;
    for b in [int(1), -(&q() * &int(3))] {
        let mut candidates: Vec<RatFunc> = Vec::new();
        for k in -7..=5 {
            for eps in [1, -1] {
                candidates.push(int(eps) * &b * qp(k));
            }
        }
        candidates.push(&b * &random_generic_scalar(&mut r));
        for a in &candidates {
            for a2 in &candidates {
                let (s, t) = (point(a, &b, &c), point(a2, &b, &c));
                let res = verma_hom(&s, &t, N).unwrap();
                match (criterion(&s, &t), &res) {
                    (Some((n, eps)), HomSearch::Found(h)) => {
                        assert_eq!((h.n, h.epsilon), (n, eps));
                        assert!(characters_equal(&s, &t));
                        // F^p v -> F^{p+n} v' commutes with E and K
                        for p in 0..=N - n {
                            assert_eq!(a * &qp(-2 * p as i64), a2 * &qp(-2 * (p + n) as i64));
                            let lhs = verma_e_coefficient(&mut r, p, a, &b, &c);
                            let rhs = verma_e_coefficient(&mut r, p + n, a2, &b, &c);
                            assert_eq!(lhs, rhs, "p = {p}, n = {n}");
                        }
                        assert_eq!(h.map.rank(), h.map.cols());
                        found += 1;
                    }
                    (None, HomSearch::None) => {}
                    (expected, got) => panic!("{s} -> {t}: expected {expected:?}, got {got:?}"),
                }
            }
        }
        // a different b never admits a map
        let other = point(&candidates[0], &(&b * &int(2)), &c);
        assert_eq!(verma_hom(&point(&candidates[0], &b, &c), &other, N).unwrap(), HomSearch::None);
    }
    assert!(found > 10);
}

#[test]
fn homomorphism_beyond_the_cutoff_is_inconclusive() {
    let b = int(1);
    let (s, t) = (point(&qp(-6), &b, &b), point(&qp(4), &b, &b));
    assert_eq!(verma_hom(&s, &t, 3).unwrap(), HomSearch::Inconclusive { n: 5 });
    assert!(matches!(verma_hom(&s, &t, N).unwrap(), HomSearch::Found(h) if h.n == 5));
}

/// `V(λ) ⊗ 𝕂_{b,c}` written from the U_q(sl₂) Verma formulas, with `E = gE'`
/// and `K = gK'`.
fn chevalley_oracle(lambda: &RatFunc, b: &RatFunc, c: &RatFunc, cutoff: usize) -> [Matrix; 8] {
    let dim = cutoff + 1;
    let mut out: [Matrix; 8] = std::array::from_fn(|_| Matrix::zeros(dim, dim));
    for p in 0..dim {
        let pi = p as i64;
        if p + 1 < dim {
            out[E as usize][(p, p + 1)] = b * &((qp(-pi) * lambda - qp(pi) * lambda.inv()) / d());
            out[F as usize][(p + 1, p)] = qint(pi + 1);
        }
        let k = b * lambda * qp(-2 * pi);
        out[KInv as usize][(p, p)] = k.inv();
        out[K as usize][(p, p)] = k;
        out[G as usize][(p, p)] = b.clone();
        out[GInv as usize][(p, p)] = b.inv();
        out[H as usize][(p, p)] = c.clone();
        out[HInv as usize][(p, p)] = c.inv();
    }
    out
}

#[test]
fn divided_powers_intertwine_the_tensor_model() {
    let mut r = rng(63);
    let lambdas = [random_generic_scalar(&mut r), qp(3), -qp(2)];
    for lambda in lambdas {
        let (b, c) = (random_scalar(&mut r), random_scalar(&mut r));
        let rho1 = chevalley_tensor(&lambda, &b, &c, N).unwrap();
        assert_eq!(rho1, chevalley_oracle(&lambda, &b, &c, N));
        let f = divided_power_map(N);
        let mut expected = Matrix::zeros(N + 1, N + 1);
        for p in 0..=N {
            expected[(p, p)] = qfact(p as i64).inv();
        }
        assert_eq!(f, expected);
        let v = verma(&b * &lambda, b.clone(), c.clone(), N).unwrap();
        for x in Generator::ALL {
            let lhs = &f * &rho1[x as usize];
            let rhs = &v.matrix(x) * &f;
            // F sends the top vector outside the truncation
            let cols = if x == F { N } else { N + 1 };
            for j in 0..cols {
                assert_eq!(lhs.column(j), rhs.column(j), "{x:?} column {j}");
            }
        }
    }
}

#[test]
fn finite_quotients_are_the_simple_modules() {
    let mut r = rng(64);
    for _ in 0..2 {
        let (b, c) = (random_scalar(&mut r), random_scalar(&mut r));
        for eps in [1i8, -1] {
            for n in 1..=4usize {
                let a = int(eps as i64) * &b * qp(n as i64 - 1);
                let data = simple_quotient_data(&a, &b, &c).unwrap().expect("finite quotient");
                assert_eq!((data.epsilon, data.n as usize), (eps, n - 1));
                assert_eq!((&data.alpha, &data.beta), (&b, &c));
                // span of F^p v̄, p < n, modulo the submodule at depth n
                let v = verma(a.clone(), b.clone(), c.clone(), N).unwrap();
                let s = simple_matrices(eps as i64, n - 1, &b, &c);
                let mut t = Matrix::zeros(n, n);
                for p in 0..n {
                    t[(p, p)] = qfact(p as i64).inv();
                }
                for x in Generator::ALL {
                    let full = v.matrix(x);
                    let block = Matrix::from_rows((0..n).map(|i| (0..n).map(|j| full[(i, j)].clone()).collect()).collect());
                    assert_eq!(&block * &t, &t * &s[x as usize], "{x:?}");
                }
            }
        }
        assert_eq!(simple_quotient_data(&(&b * &random_generic_scalar(&mut r)), &b, &c).unwrap(), None);
    }
}
