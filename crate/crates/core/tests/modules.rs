mod oracle;

use std::time::Instant;

use oracle::{element_matrix, int, intertwines, naive_normalize, q, qp, random_scalar, rng, simple_matrices};
use ugh_core::center::casimir;
use ugh_core::linalg::Matrix;
use ugh_core::rep::{
    check_module, decompose, direct_sum, dual_module, ext_dims_torus, extension_module, highest_weight_vectors,
    is_split_selfextension, isomorphic, simple_module, sort_constituents, tensor, twisted_dual, unit, ExtensionParams,
    HighestWeightData, HighestWeights, Relation, WeightModule,
};
use ugh_core::{Error, Generator, RatFunc};

use Generator::*;

fn hw(eps: i8, n: u32, alpha: &RatFunc, beta: &RatFunc) -> HighestWeightData {
    HighestWeightData::new(eps, n, alpha.clone(), beta.clone()).unwrap()
}

fn action(m: &WeightModule) -> [Matrix; 8] {
    Generator::ALL.map(|x| m.matrix(x).clone())
}

fn samples(seed: u64, n: usize) -> Vec<(RatFunc, RatFunc)> {
    let mut r = rng(seed);
    (0..n).map(|_| (random_scalar(&mut r), random_scalar(&mut r))).collect()
}

#[test]
fn simple_modules_match_closed_formulas() {
    for (alpha, beta) in samples(50, 3) {
        for eps in [1i8, -1] {
            for n in 0..=6u32 {
                let d = hw(eps, n, &alpha, &beta);
                let m = simple_module(&d);
                assert_eq!(action(&m), simple_matrices(eps as i64, n as usize, &alpha, &beta), "{d}");
                assert!(check_module(&m).passed(), "{d}");
                let scalar = int(eps as i64) * &alpha * (qp(n as i64 + 1) + qp(-(n as i64) - 1)) / oracle::d().pow(2);
                assert_eq!(d.casimir_scalar(), scalar);
                assert_eq!(element_matrix(&action(&m), &casimir()), Matrix::scalar(n as usize + 1, &scalar));
            }
        }
    }
}

#[test]
fn broken_actions_are_reported() {
    let m = simple_module(&hw(1, 2, &q(), &int(1)));
    let mut a = action(&m);
    a.swap(E as usize, K as usize);
    let bad = WeightModule::from_action(m.labels().to_vec(), a, None).unwrap();
    let report = check_module(&bad);
    assert!(!report.passed());
    assert_eq!(report.first_violation(), Some(Relation::KConjugatesE));

    let mut a = action(&m);
    a[G as usize] = a[K as usize].clone();
    a[GInv as usize] = a[KInv as usize].clone();
    let bad = WeightModule::from_action(m.labels().to_vec(), a, None).unwrap();
    assert!(!check_module(&bad).passed());
}

/// K-eigenvalues with multiplicity, as a sorted list of rendered scalars.
fn k_spectrum(diag: &[RatFunc]) -> Vec<String> {
    let mut v: Vec<String> = diag.iter().map(RatFunc::to_string).collect();
    v.sort();
    v
}

#[test]
fn clebsch_gordan_sweep() {
    let start = Instant::now();
    for (i, (alpha, beta)) in samples(51, 3).into_iter().enumerate() {
        let (alpha2, beta2) = samples(52 + i as u64, 1)[0].clone();
        for n in 0..=4u32 {
            for m in 0..=n {
                for (e1, e2) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                    let v = simple_module(&hw(e1, n, &alpha, &beta));
                    let w = simple_module(&hw(e2, m, &alpha2, &beta2));
                    let t = tensor(&v, &w);
                    assert!(check_module(&t).passed());
                    let mut expected: Vec<HighestWeightData> =
                        (0..=m).map(|k| hw(e1 * e2, n + m - 2 * k, &(&alpha * &alpha2), &(&beta * &beta2))).collect();
                    sort_constituents(&mut expected);
                    let got = decompose(&t).unwrap();
                    assert_eq!(got, expected, "n={n} m={m} eps=({e1},{e2})");
                    let dims: usize = got.iter().map(HighestWeightData::dim).sum();
                    assert_eq!(dims, ((n + 1) * (m + 1)) as usize);
                    // the K-spectrum of the tensor product is that of the sum
                    let mut spectrum = Vec::new();
                    for c in &expected {
                        spectrum.extend(simple_matrices(c.epsilon as i64, c.n as usize, &c.alpha, &c.beta)[K as usize].diagonal());
                    }
                    assert_eq!(k_spectrum(&t.matrix(K).diagonal()), k_spectrum(&spectrum));
                }
            }
        }
    }
    eprintln!("clebsch-gordan sweep: {:?}", start.elapsed());
}

fn antipode_words() -> [(RatFunc, Vec<Generator>); 8] {
    let one = RatFunc::one;
    [
        (int(-1), vec![E, KInv]),
        (int(-1), vec![K, F, GInv, GInv]),
        (one(), vec![KInv]),
        (one(), vec![K]),
        (one(), vec![GInv]),
        (one(), vec![G]),
        (one(), vec![HInv]),
        (one(), vec![H]),
    ]
}

#[test]
fn duals_of_simple_modules() {
    let mut r = rng(53);
    for (alpha, beta) in samples(54, 2) {
        for eps in [1i8, -1] {
            for n in 0..=4u32 {
                let rho = simple_matrices(eps as i64, n as usize, &alpha, &beta);
                let dual = dual_module(&simple_module(&hw(eps, n, &alpha, &beta)));
                // x acts on V* by the transpose of S(x)
                let words = antipode_words();
                for x in Generator::ALL {
                    let (c, w) = words[x as usize].clone();
                    let s = naive_normalize(&mut r, vec![(c, w)]);
                    assert_eq!(dual.matrix(x), &element_matrix(&rho, &s).transpose());
                }
                assert!(check_module(&dual).passed());
                let target = simple_matrices(eps as i64, n as usize, &alpha.inv(), &beta.inv());
                let t = isomorphic(&dual, &simple_module(&hw(eps, n, &alpha.inv(), &beta.inv()))).expect("isomorphic");
                assert!(t.inverse().is_some());
                assert!(intertwines(&t, &action(&dual), &target));

                let v = simple_module(&hw(eps, n, &alpha, &beta));
                let tw = twisted_dual(&v);
                assert!(check_module(&tw).passed());
                let t = isomorphic(&tw, &v).expect("twisted dual fixes simples");
                assert!(t.inverse().is_some());
                assert!(intertwines(&t, &action(&tw), &rho));
            }
        }
    }
}

#[test]
fn non_isomorphic_modules_are_told_apart() {
    let v = simple_module(&hw(1, 2, &q(), &int(1)));
    assert!(isomorphic(&v, &simple_module(&hw(-1, 2, &q(), &int(1)))).is_none());
    assert!(isomorphic(&v, &simple_module(&hw(1, 2, &q(), &int(2)))).is_none());
    assert!(isomorphic(&v, &simple_module(&hw(1, 1, &q(), &int(1)))).is_none());
}

fn block(m: &Matrix, r0: usize, c0: usize, size: usize) -> Matrix {
    let rows: Vec<Vec<RatFunc>> = (0..size).map(|i| (0..size).map(|j| m[(r0 + i, c0 + j)].clone()).collect()).collect();
    Matrix::from_rows(rows)
}

/// Pullback of two self-extensions of `V` over the common quotient:
/// blocks `[[A, 0, B1], [0, A, B2], [0, 0, A]]`.
fn pullback(m1: &WeightModule, m2: &WeightModule, size: usize) -> [Matrix; 8] {
    Generator::ALL.map(|x| {
        let (a, b1, b2) = (block(m1.matrix(x), 0, 0, size), block(m1.matrix(x), 0, size, size), block(m2.matrix(x), 0, size, size));
        let z = Matrix::zeros(size, size);
        let top = a.hstack(&z).hstack(&b1);
        let mid = z.hstack(&a).hstack(&b2);
        let bottom = z.hstack(&z).hstack(&a);
        top.vstack(&mid).vstack(&bottom)
    })
}

#[test]
fn extensions() {
    let mut r = rng(55);
    use rand::Rng;
    for i in 0..10 {
        let (alpha, beta) = (random_scalar(&mut r), random_scalar(&mut r));
        let n = r.gen_range(0..=3u32);
        let eps = if r.gen_bool(0.5) { 1 } else { -1 };
        let d = hw(eps, n, &alpha, &beta);
        let (x, y) = match i % 4 {
            0 => (RatFunc::zero(), RatFunc::zero()),
            1 => (random_scalar(&mut r), RatFunc::zero()),
            2 => (RatFunc::zero(), random_scalar(&mut r)),
            _ => (random_scalar(&mut r), random_scalar(&mut r)),
        };
        let p = ExtensionParams::new(x.clone(), y.clone());
        let m = extension_module(&d, &p);
        assert!(check_module(&m).passed());
        let size = d.dim();
        let sub: Vec<_> = (0..size).map(|j| unit(2 * size, j)).collect();
        let split = is_split_selfextension(&m, &sub).unwrap();
        assert_eq!(split, x.is_zero() && y.is_zero(), "x={x} y={y}");
        match highest_weight_vectors(&m) {
            HighestWeights::NonDiagonalizable(gens) => {
                assert!(!split);
                assert_eq!(gens.contains(&G), !x.is_zero());
                assert_eq!(gens.contains(&H), !y.is_zero());
            }
            HighestWeights::Vectors(v) => {
                assert!(split);
                assert_eq!(v.len(), 2);
            }
        }
        if split {
            assert!(isomorphic(&m, &direct_sum(&simple_module(&d), &simple_module(&d))).is_some());
            assert_eq!(decompose(&m).unwrap(), vec![d.clone(), d.clone()]);
        } else {
            assert!(matches!(decompose(&m), Err(Error::NotCompletelyReducible { .. })));
        }
    }
}

#[test]
fn parameter_addition_is_the_baer_sum() {
    let mut r = rng(56);
    for n in 0..=2u32 {
        let d = hw(if n % 2 == 0 { 1 } else { -1 }, n, &random_scalar(&mut r), &random_scalar(&mut r));
        let p1 = ExtensionParams::new(random_scalar(&mut r), random_scalar(&mut r));
        let p2 = ExtensionParams::new(random_scalar(&mut r), RatFunc::zero());
        let (m1, m2) = (extension_module(&d, &p1), extension_module(&d, &p2));
        let size = d.dim();
        let pb = pullback(&m1, &m2, size);
        let pbm = WeightModule::from_action((0..3 * size).map(|i| format!("u{i}")).collect(), pb.clone(), None).unwrap();
        assert!(check_module(&pbm).passed());
        // collapse the two copies of V: (s1, s2, t) -> (s1 + s2, t)
        let i = Matrix::identity(size);
        let z = Matrix::zeros(size, size);
        let collapse = i.hstack(&i).hstack(&z).vstack(&z.hstack(&z).hstack(&i));
        let sum = extension_module(&d, &ExtensionParams::new(&p1.x + &p2.x, &p1.y + &p2.y));
        assert!(intertwines(&collapse, &pb, &action(&sum)));

        // the class of M_{x,y} plus that of M_{-x,-y} is trivial
        let neg = extension_module(&d, &ExtensionParams::new(-p1.x.clone(), -p1.y.clone()));
        let pb = pullback(&m1, &neg, size);
        let zero = extension_module(&d, &ExtensionParams::new(RatFunc::zero(), RatFunc::zero()));
        assert!(intertwines(&collapse, &pb, &action(&zero)));
        let sub: Vec<_> = (0..size).map(|j| unit(2 * size, j)).collect();
        assert!(is_split_selfextension(&zero, &sub).unwrap());
    }
}

#[test]
fn split_test_rejects_non_submodules() {
    let d = hw(1, 1, &q(), &int(1));
    let m = extension_module(&d, &ExtensionParams::new(int(1), RatFunc::zero()));
    let sub: Vec<_> = (2..4).map(|j| unit(4, j)).collect();
    assert!(matches!(is_split_selfextension(&m, &sub), Err(Error::NotSubmodule)));
}

#[test]
fn torus_ext_dimensions() {
    let mut r = rng(57);
    use rand::Rng;
    for i in 0..20 {
        let (alpha, beta) = (random_scalar(&mut r), random_scalar(&mut r));
        let (alpha2, beta2) = match i % 3 {
            0 => (alpha.clone(), beta.clone()),
            1 => (alpha.clone(), random_scalar(&mut r)),
            _ => (random_scalar(&mut r), if r.gen_bool(0.5) { beta.clone() } else { random_scalar(&mut r) }),
        };
        // Koszul complex k -> k^2 -> k with maps built from (α'-α, β'-β)
        let rank = usize::from(alpha != alpha2 || beta != beta2);
        let expected = [1 - rank, 2 - 2 * rank, 1 - rank];
        assert_eq!(ext_dims_torus(&alpha, &beta, &alpha2, &beta2).unwrap(), expected);
        if i % 3 == 0 {
            assert_eq!(expected, [1, 2, 1]);
        }
    }
    assert!(ext_dims_torus(&RatFunc::zero(), &q(), &q(), &q()).is_err());
}
