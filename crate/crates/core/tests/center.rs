mod oracle;

use oracle::{d, direct_sum, element_matrix, int, naive_normalize, q, qp, random_generic_scalar, random_scalar, rng, simple_matrices};
use ugh_core::center::{
    casimir, central_character, characters_equal, hc_projection, is_central, splitting_element, CentralCharacterPoint,
    SplittingCase,
};
use ugh_core::linalg::Matrix;
use ugh_core::rep::HighestWeightData;
use ugh_core::verma::verma;
use ugh_core::{AlgebraElement, Error, Generator, RatFunc};

use Generator::*;

/// Value of `C` on a highest-weight vector of weight `(a, b, c)`.
fn casimir_value(a: &RatFunc, b: &RatFunc) -> RatFunc {
    (q() * a + qp(-1) * a.inv() * b * b) / d().pow(2)
}

fn point(a: RatFunc, b: RatFunc, c: RatFunc) -> CentralCharacterPoint {
    CentralCharacterPoint::new(a, b, c).unwrap()
}

#[test]
fn casimir_from_words() {
    let mut r = rng(1);
    let d2 = d().pow(2).inv();
    let oracle = naive_normalize(
        &mut r,
        vec![(RatFunc::one(), vec![F, E]), (q() * &d2, vec![K]), (qp(-1) * &d2, vec![KInv, G, G])],
    );
    assert_eq!(casimir(), oracle);
}

#[test]
fn casimir_commutes_with_generators() {
    let c = casimir();
    for x in [E, F, K, G, H] {
        assert!(c.commutator(&AlgebraElement::generator(x)).is_zero(), "{x:?}");
    }
    assert!(is_central(&c.multiply(&AlgebraElement::generator(GInv))));
    assert!(!is_central(&AlgebraElement::generator(K)));
    assert!(!is_central(&(&c + &AlgebraElement::generator(F))));
}

#[test]
fn central_character_of_casimir() {
    let mut r = rng(40);
    for _ in 0..20 {
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        let p = point(a.clone(), b.clone(), c.clone());
        assert_eq!(central_character(&p, &casimir()).unwrap(), casimir_value(&a, &b));
        // multiplicative in the center
        let z = casimir().multiply(&casimir()).multiply(&AlgebraElement::generator(HInv));
        assert_eq!(central_character(&p, &z).unwrap(), casimir_value(&a, &b).pow(2) / &c);
    }
}

#[test]
fn projection_keeps_only_the_torus_part() {
    let p = hc_projection(&casimir());
    assert_eq!(p.len(), 2);
    assert!(p.terms().all(|(m, _)| m.is_torus()));
}

#[test]
fn equal_characters_match_the_generators_of_the_center() {
    let mut r = rng(41);
    for _ in 0..20 {
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        let p = point(a.clone(), b.clone(), c.clone());
        let partner = qp(-2) * &b * &b / &a;
        let candidates = [
            point(a.clone(), b.clone(), c.clone()),
            point(partner.clone(), b.clone(), c.clone()),
            point(random_scalar(&mut r), b.clone(), c.clone()),
            point(a.clone(), &b * &int(2), c.clone()),
            point(partner, b.clone(), &c * &q()),
        ];
        for p2 in &candidates {
            // the center is generated by C, g^{±1}, h^{±1}
            let oracle = casimir_value(&p.a, &p.b) == casimir_value(&p2.a, &p2.b) && p.b == p2.b && p.c == p2.c;
            assert_eq!(characters_equal(&p, p2), oracle, "{p} vs {p2}");
            assert_eq!(characters_equal(p2, &p), oracle);
        }
        assert!(characters_equal(&p, &candidates[1]));
    }
}

fn hw(eps: i8, n: u32, alpha: &RatFunc, beta: &RatFunc) -> HighestWeightData {
    HighestWeightData::new(eps, n, alpha.clone(), beta.clone()).unwrap()
}

fn projector(first: usize, second: usize) -> Matrix {
    Matrix::identity(first).direct_sum(&Matrix::zeros(second, second))
}

#[test]
fn splitting_element_is_the_first_projection() {
    let mut r = rng(42);
    for _ in 0..4 {
        let (alpha, beta) = (random_scalar(&mut r), random_scalar(&mut r));
        let other = &alpha * &random_generic_scalar(&mut r);
        let pairs = [
            // beta differs
            (hw(1, 2, &alpha, &beta), hw(-1, 1, &alpha, &(&beta * &q()))),
            // alpha differs, beta equal
            (hw(1, 2, &alpha, &beta), hw(1, 3, &other, &beta)),
            // same torus character: the Casimir separates
            (hw(1, 2, &alpha, &beta), hw(1, 0, &alpha, &beta)),
            (hw(1, 1, &alpha, &beta), hw(-1, 1, &alpha, &beta)),
            (hw(-1, 3, &alpha, &beta), hw(1, 1, &alpha, &beta)),
        ];
        for (d1, d2) in pairs {
            let z = splitting_element(&SplittingCase::Simple(d1.clone(), d2.clone())).unwrap();
            assert!(is_central(&z));
            let rho = direct_sum(
                &simple_matrices(d1.epsilon as i64, d1.n as usize, &d1.alpha, &d1.beta),
                &simple_matrices(d2.epsilon as i64, d2.n as usize, &d2.alpha, &d2.beta),
            );
            assert_eq!(element_matrix(&rho, &z), projector(d1.dim(), d2.dim()), "{d1} / {d2}");
        }
    }
}

#[test]
fn verma_splitting_element() {
    let mut r = rng(43);
    for _ in 0..5 {
        let (a, b, c) = (random_generic_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r));
        let cases = [
            point(&a * &q(), b.clone(), c.clone()),
            point(a.clone(), &b * &int(3), c.clone()),
            point(a.clone(), b.clone(), &c * &int(-1)),
        ];
        let p1 = point(a.clone(), b.clone(), c.clone());
        for p2 in cases {
            let z = splitting_element(&SplittingCase::Verma(p1.clone(), p2.clone())).unwrap();
            assert_eq!(central_character(&p1, &z).unwrap(), RatFunc::one());
            assert_eq!(central_character(&p2, &z).unwrap(), RatFunc::zero());
            // acts on the whole truncated module, not just the top vector
            let v = verma(p1.a.clone(), p1.b.clone(), p1.c.clone(), 4).unwrap();
            for k in 0..4 {
                assert_eq!(v.act(&z, &v.basis_vector(k)).unwrap(), v.basis_vector(k));
            }
        }
    }
}

#[test]
fn isomorphic_pairs_have_no_splitting_element() {
    let d1 = hw(-1, 2, &q(), &int(5));
    let res = splitting_element(&SplittingCase::Simple(d1.clone(), d1));
    assert!(matches!(res, Err(Error::NoSplittingElement)));
}
